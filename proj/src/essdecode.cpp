#include "ermc/essdecode.hpp"

#include <algorithm>
#include <chrono>

namespace ermc {

const LElem& SyndromeTable::lookup(std::vector<uint32_t> v) const {
    std::sort(v.begin(), v.end());
    const auto it = values.find(v);
    if (it == values.end()) throw DomainError("syndrome lookup: tuple does not reorder into the index set");
    return it->second;
}

bool SyndromeTable::all_zero(const ExtField& ext) const {
    for (const auto& [u, s] : values)
        if (!ext.is_zero(s)) return false;
    return true;
}

SyndromeTable compute_syndromes(const FPoly& received, const CodeParams& params) {
    const ExtField& ext = params.ext;
    if (received.n != params.n() || received.d != params.d)
        throw DomainError("compute_syndromes: received word shape mismatch");
    if (!params.equal_bases())
        throw DomainError("compute_syndromes: algorithm needs equal bases");

    SyndromeTable table;
    if (params.rho < 2) return table;

    const auto& alpha = params.alpha().elements();
    std::map<std::vector<uint32_t>, LPoly> layer;
    layer.emplace(std::vector<uint32_t>{0},
                  apply_diffop(ext, linear_diffop(ext, alpha), received));

    for (uint32_t k = 2; k <= params.d; ++k) {
        std::map<std::vector<uint32_t>, LPoly> next;
        for (const auto& u : x_set(k, params.rho)) {
            const std::vector<uint32_t> prefix(u.begin(), u.end() - 1);
            const LDiffOp step = linear_diffop(ext, frobenius_vec(ext, alpha, u.back()));
            next.emplace(u, apply_diffop(ext, step, layer.at(prefix)));
        }
        table.intermediate.insert(layer.begin(), layer.end());
        layer = std::move(next);
    }
    for (auto& [u, poly] : layer) {
        LElem s = ext.zero();
        if (!poly.terms.empty()) s = poly.terms.begin()->second;
        table.values.emplace(u, std::move(s));
    }
    return table;
}

GabCodeCtx decoding_context(const CodeParams& params) {
    const long long shift = -static_cast<long long>(params.rho) + 2;
    return GabCodeCtx(params.ext, params.rho,
                      frobenius_vec(params.ext, params.alpha().elements(), shift));
}

LinSpan recover_error_space(const SyndromeTable& table, const CodeParams& params,
                            const GabCodeCtx& ctx) {
    const ExtField& ext = params.ext;
    const uint32_t n = params.n(), rho = params.rho;

    Mat<Fq> rows(0, n);
    for (const auto& r : x_set(params.d - 1, rho)) {
        std::vector<LElem> s(rho - 1);
        for (uint32_t t = 0; t + 1 < rho; ++t) {
            std::vector<uint32_t> u = r;
            u.push_back(rho - 2 - t);
            s[t] = ext.frobenius(table.lookup(std::move(u)),
                                 static_cast<long long>(t) - rho + 2);
        }
        const auto err = syndrome_decode(ctx, s);
        if (!err)
            throw DecodingFailure("recover_error_space: a Gabidulin decode exceeded the radius");
        // expand each h_i(alpha) over alpha to read off the linear form h_i(x)
        for (uint32_t i = 0; i < n; ++i) {
            const std::vector<Fq> form = params.alpha().expand(ext, (*err)[i]);
            bool nonzero = false;
            for (const auto& c : form) nonzero |= !ext.base().is_zero(c);
            if (nonzero) rows.append_row(form);
        }
    }
    return LinSpan{n, row_space_basis(ext.base(), std::move(rows))};
}

FPoly recover_error(const LinSpan& span, const SyndromeTable& table, const CodeParams& params) {
    const ExtField& ext = params.ext;
    const BaseField& f = ext.base();
    const uint32_t n = params.n(), d = params.d;
    const uint32_t e = static_cast<uint32_t>(span.dim());
    if (e > (params.rho - 1) / 2)
        throw DecodingFailure("recover_error: recovered span exceeds the decoding radius");
    if (e == 0) {
        if (!table.all_zero(ext))
            throw DecodingFailure("recover_error: empty span with nonzero syndromes");
        return zero_poly<Fq>(n, d);
    }

    // candidate monomials prod_i l_i^{t_i} over the span's basis forms
    std::vector<FPoly> lin;
    lin.reserve(e);
    for (uint32_t i = 0; i < e; ++i) lin.push_back(linear_form(f, span.basis.row(i)));
    std::vector<FPoly> monos;
    for (const auto& t : monomial_basis(e, d)) {
        FPoly prod{n, 0, {{Exponents(n, 0), f.one()}}};
        for (uint32_t i = 0; i < e; ++i)
            for (uint32_t rep = 0; rep < t[i]; ++rep) prod = poly_mul(f, prod, lin[i]);
        monos.push_back(std::move(prod));
    }

    // linear system: for each u in X_{d,rho}, sum_t a_t (Z^u o mono_t) = s_u over L
    const auto ops = defining_operators(params);
    const auto tuples = x_set(d, params.rho);
    Mat<Fq> sys(0, monos.size());
    std::vector<Fq> rhs;
    for (std::size_t ui = 0; ui < tuples.size(); ++ui) {
        std::vector<LElem> vals(monos.size());
        for (std::size_t t = 0; t < monos.size(); ++t) {
            const LPoly res = apply_diffop(ext, ops[ui], monos[t]);
            vals[t] = res.terms.empty() ? ext.zero() : res.terms.begin()->second;
        }
        const LElem& s_u = table.values.at(tuples[ui]);
        for (uint32_t coord = 0; coord < ext.n(); ++coord) {
            std::vector<Fq> row(monos.size());
            for (std::size_t t = 0; t < monos.size(); ++t) row[t] = vals[t][coord];
            sys.append_row(row);
            rhs.push_back(s_u[coord]);
        }
    }
    bool unique = false;
    const auto sol = solve_linear(f, std::move(sys), rhs, &unique);
    if (!sol) throw DecodingFailure("recover_error: syndrome system is inconsistent");
    if (!unique)
        throw DecodingFailure("recover_error: ambiguous solution (invalid received word)");

    FPoly g = zero_poly<Fq>(n, d);
    for (std::size_t t = 0; t < monos.size(); ++t)
        g = poly_add(f, g, poly_scale(f, monos[t], (*sol)[t]));
    return g;
}

DecodeResult decode(const FPoly& received, const CodeParams& params) {
    const ExtField& ext = params.ext;
    const BaseField& f = ext.base();

    const auto verify_membership = [&](const FPoly& word) {
        for (const auto& D : defining_operators(params)) {
            const LPoly res = apply_diffop(ext, D, word);
            if (!res.terms.empty())
                throw DecodingFailure("decode: reconstructed word is not a codeword");
        }
    };

    if (params.rho < 2) { // the code is the full space; radius zero
        return DecodeResult{received, zero_poly<Fq>(params.n(), params.d), 0,
                            DecodeStatus::clean};
    }
    if (params.d < 2) throw DomainError("decode: requires d >= 2");

    const SyndromeTable table = compute_syndromes(received, params);
    FPoly error = zero_poly<Fq>(params.n(), params.d);
    if (!table.all_zero(ext)) {
        const GabCodeCtx ctx = decoding_context(params);
        const LinSpan span = recover_error_space(table, params, ctx);
        error = recover_error(span, table, params);
    }
    FPoly codeword = poly_sub(f, received, error);
    verify_membership(codeword);
    const uint32_t err_rank = ess_rank(f, error);
    if (err_rank > (params.rho - 1) / 2)
        throw DecodingFailure("decode: recovered error exceeds the radius");
    const DecodeStatus status =
        error.terms.empty() ? DecodeStatus::clean : DecodeStatus::corrected;
    return DecodeResult{std::move(codeword), std::move(error), err_rank, status};
}

FPoly random_error(const CodeParams& params, Rng& rng, uint32_t error_rank) {
    const BaseField& f = params.ext.base();
    const uint32_t n = params.n(), d = params.d, q = f.q();
    if (error_rank > n) throw DomainError("random_error: rank exceeds n");
    if (error_rank == 0) return zero_poly<Fq>(n, d);

    // independent linear forms: resample until the coefficient matrix has full rank
    Mat<Fq> forms(error_rank, n, f.zero());
    do {
        for (uint32_t i = 0; i < error_rank; ++i)
            for (uint32_t j = 0; j < n; ++j) forms.at(i, j) = f.from_index(rng.next_below(q));
    } while (rank(f, forms) < error_rank);

    std::vector<FPoly> lin;
    for (uint32_t i = 0; i < error_rank; ++i) lin.push_back(linear_form(f, forms.row(i)));
    const auto mono = monomial_basis(error_rank, d);
    FPoly g = zero_poly<Fq>(n, d);
    while (g.terms.empty()) {
        for (const auto& t : mono) {
            const Fq c = f.from_index(rng.next_below(q));
            if (f.is_zero(c)) continue;
            FPoly prod{n, 0, {{Exponents(n, 0), c}}};
            for (uint32_t i = 0; i < error_rank; ++i)
                for (uint32_t rep = 0; rep < t[i]; ++rep) prod = poly_mul(f, prod, lin[i]);
            g = poly_add(f, g, prod);
        }
    }
    return g;
}

FPoly encode_message(const EssCode& code, const std::vector<Fq>& message) {
    if (message.size() != code.k()) throw DomainError("encode: message length must equal k");
    FPoly out = zero_poly<Fq>(code.n, code.d);
    for (std::size_t i = 0; i < message.size(); ++i)
        out = poly_add(code.field, out, poly_scale(code.field, code.basis[i], message[i]));
    return out;
}

SimulationStats run_simulation(const CodeParams& params, uint64_t trials, uint64_t seed,
                               uint32_t error_rank) {
    const BaseField& f = params.ext.base();
    if (error_rank > (params.rho - 1) / 2)
        throw DomainError("simulate: error rank exceeds the decoding radius");
    const EssCode code = construct_code(params);

    Rng rng(seed);
    SimulationStats stats;
    stats.trials = trials;
    double total_ms = 0.0;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        std::vector<Fq> msg(code.k());
        for (auto& c : msg) c = f.from_index(rng.next_below(f.q()));
        const FPoly sent = encode_message(code, msg);
        const FPoly err = random_error(params, rng, error_rank);
        const FPoly received = poly_add(f, sent, err);

        const auto t0 = std::chrono::steady_clock::now();
        try {
            const DecodeResult res = decode(received, params);
            const auto t1 = std::chrono::steady_clock::now();
            total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (res.codeword == sent && res.error == err)
                ++stats.successes;
            else
                ++stats.miscorrections;
        } catch (const DecodingFailure&) {
            const auto t1 = std::chrono::steady_clock::now();
            total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
            ++stats.failures;
        }
    }
    stats.mean_decode_ms = trials ? total_ms / static_cast<double>(trials) : 0.0;
    return stats;
}

} // namespace ermc
