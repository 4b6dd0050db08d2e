#include "ermc/codegen.hpp"

#include "ermc/orbits.hpp"

namespace ermc {

CodeParams::CodeParams(ExtField e, uint32_t d_, uint32_t rho_, std::vector<LBasis> bases_)
    : ext(std::move(e)), d(d_), rho(rho_), bases(std::move(bases_)) {
    if (d < 1) throw DomainError("code params: need d >= 1");
    if (rho < 1 || rho > ext.n()) throw DomainError("code params: need 1 <= rho <= n");
    if (ext.base().p() <= d) throw CharTooSmallError("code params: requires char(F) > d");
    if (bases.empty()) bases.assign(d, power_basis(ext));
    if (bases.size() != d) throw DomainError("code params: need one basis per factor");
}

bool CodeParams::equal_bases() const {
    for (std::size_t i = 1; i < bases.size(); ++i)
        if (!(bases[i] == bases[0])) return false;
    return true;
}

std::vector<std::vector<uint32_t>> x_set(uint32_t k, uint32_t rho) {
    if (k < 1) throw DomainError("x_set: need k >= 1");
    std::vector<std::vector<uint32_t>> out;
    if (rho < 2) return out; // no admissible entries
    std::vector<uint32_t> cur(k, 0);
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t idx, uint32_t lo) {
        if (idx == k) {
            out.push_back(cur);
            return;
        }
        for (uint32_t v = lo; v <= rho - 2; ++v) {
            cur[idx] = v;
            rec(idx + 1, v);
        }
    };
    rec(1, 0); // first entry pinned to zero
    return out;
}

std::vector<LDiffOp> defining_operators(const CodeParams& params) {
    const ExtField& ext = params.ext;
    std::vector<LDiffOp> ops;
    if (params.rho < 2) return ops;

    if (params.equal_bases()) {
        for (const auto& r : x_set(params.d, params.rho)) {
            std::vector<std::vector<LElem>> factors;
            factors.reserve(params.d);
            for (uint32_t j = 0; j < params.d; ++j)
                factors.push_back(frobenius_vec(ext, params.alpha().elements(), r[j]));
            ops.push_back(product_of_linear_diffops(ext, factors));
        }
        return ops;
    }
    // distinct bases: the commuting-factor reduction does not apply, use the full grid
    std::vector<uint32_t> r(params.d, 0); // r[0] fixed at 0
    while (true) {
        std::vector<std::vector<LElem>> factors;
        factors.reserve(params.d);
        factors.push_back(params.bases[0].elements());
        for (uint32_t j = 1; j < params.d; ++j)
            factors.push_back(frobenius_vec(ext, params.bases[j].elements(), r[j]));
        ops.push_back(product_of_linear_diffops(ext, factors));
        uint32_t j = 1;
        while (j < params.d && r[j] == params.rho - 2) r[j++] = 0;
        if (j == params.d) break;
        ++r[j];
    }
    return ops;
}

EssCode construct_code(const CodeParams& params) {
    const uint32_t n = params.n();
    const auto ops = defining_operators(params);
    std::vector<FPoly> basis = perp_in_S(params.ext, ops, n, params.d);
    return EssCode{params.ext.base(), n, params.d, std::move(basis), params.rho};
}

Mat<Fq> generator_matrix(const EssCode& code) {
    const MonomialIndexer idx(code.n, code.d);
    Mat<Fq> m(code.k(), idx.size(), code.field.zero());
    for (uint32_t i = 0; i < code.k(); ++i)
        m.set_row(i, poly_to_row(code.field, code.basis[i], idx));
    return m;
}

CodimReport codim_conjecture_report(const CodeParams& params, uint64_t budget) {
    if (!params.equal_bases())
        throw DomainError("codim report: conjecture is stated for equal bases");
    const EssCode code = construct_code(params);
    const long long actual = monomial_count(params.n(), params.d) - code.k();
    long long predicted = 0;
    if (params.rho >= 2)
        predicted = static_cast<long long>(params.n()) *
                    static_cast<long long>(
                        orbit_count_bruteforce(params.n(), params.d, params.rho - 2, budget));
    return CodimReport{actual, predicted, actual == predicted};
}

} // namespace ermc
