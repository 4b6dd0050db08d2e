#include "ermc/essrank.hpp"

#include <algorithm>
#include <thread>

namespace ermc {

namespace {

void require_char(const BaseField& f, uint32_t d, const char* what) {
    if (f.p() <= d) throw CharTooSmallError(std::string(what) + ": requires char(F) > d");
}

// Enumerate r-dimensional subspaces of F^n as RREF matrices, invoking fn on each.
// Returns false if the subspace count would exceed the budget.
bool for_each_subspace(const BaseField& f, uint32_t n, uint32_t r, uint64_t budget,
                       const std::function<bool(const Mat<Fq>&)>& fn) {
    const uint32_t q = f.q();
    std::vector<uint32_t> pivots(r);
    for (uint32_t i = 0; i < r; ++i) pivots[i] = i;

    uint64_t visited = 0;
    while (true) {
        // free positions: (i, c) with c > pivots[i], c not a pivot column
        std::vector<std::pair<uint32_t, uint32_t>> free_pos;
        std::vector<bool> is_piv(n, false);
        for (auto c : pivots) is_piv[c] = true;
        for (uint32_t i = 0; i < r; ++i)
            for (uint32_t c = pivots[i] + 1; c < n; ++c)
                if (!is_piv[c]) free_pos.emplace_back(i, c);

        uint64_t combos = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) {
            combos *= q;
            if (combos > budget) return false;
        }
        for (uint64_t idx = 0; idx < combos; ++idx) {
            if (++visited > budget) return false;
            Mat<Fq> m(r, n, f.zero());
            for (uint32_t i = 0; i < r; ++i) m.at(i, pivots[i]) = f.one();
            uint64_t t = idx;
            for (const auto& [i, c] : free_pos) {
                m.at(i, c) = f.from_index(t % q);
                t /= q;
            }
            if (fn(m)) return true;
        }
        // next pivot combination (lexicographic)
        int32_t i = static_cast<int32_t>(r) - 1;
        while (i >= 0 && pivots[i] == n - r + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (uint32_t j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return true;
}

} // namespace

EssCode make_code(const BaseField& f, uint32_t n, uint32_t d, const std::vector<FPoly>& spanning,
                  std::optional<uint32_t> designed_rho) {
    return EssCode{f, n, d, canonical_span(f, spanning, n, d), designed_rho};
}

uint32_t ess_rank(const BaseField& f, const FPoly& poly) {
    require_char(f, poly.d, "ess_rank");
    return static_cast<uint32_t>(rank(f, catalecticant(f, poly)));
}

uint32_t ess_rank_bruteforce(const BaseField& f, const FPoly& poly, uint64_t budget) {
    if (poly.terms.empty()) return 0;
    const uint32_t n = poly.n, d = poly.d;
    const MonomialIndexer idx(n, d);
    const std::vector<Fq> frow = poly_to_row(f, poly, idx);

    for (uint32_t r = 1; r <= n; ++r) {
        bool found = false;
        const bool within = for_each_subspace(f, n, r, budget, [&](const Mat<Fq>& forms) {
            // f lies in F[l_1..l_r]_d iff appending f to the span of the degree-d
            // monomials in the l's does not raise the rank.
            std::vector<FPoly> lin;
            for (uint32_t i = 0; i < r; ++i) lin.push_back(linear_form(f, forms.row(i)));
            Mat<Fq> m(0, idx.size());
            for (const auto& t : monomial_basis(r, d)) {
                FPoly prod{n, 0, {{Exponents(n, 0), f.one()}}};
                for (uint32_t i = 0; i < r; ++i)
                    for (uint32_t rep = 0; rep < t[i]; ++rep) prod = poly_mul(f, prod, lin[i]);
                m.append_row(poly_to_row(f, prod, idx));
            }
            const std::size_t base_rank = rank(f, m);
            m.append_row(frow);
            if (rank(f, std::move(m)) == base_rank) {
                found = true;
                return true;
            }
            return false;
        });
        if (!within) throw BudgetExceededError("ess_rank_bruteforce: subspace budget exceeded");
        if (found) return r;
    }
    return n; // unreachable: every polynomial lies in F[x_1..x_n]
}

LinSpan ess_variables(const BaseField& f, const FPoly& poly) {
    require_char(f, poly.d, "ess_variables");
    const uint32_t n = poly.n;
    Mat<Fq> rows(0, n);
    for (const auto& a : monomial_basis(n, poly.d - 1)) {
        DiffOp<Fq> D{n, poly.d - 1, {{a, f.one()}}};
        const FPoly der = apply_diffop(f, D, poly);
        std::vector<Fq> row(n, f.zero());
        for (const auto& [e, c] : der.terms) {
            const auto it = std::find(e.begin(), e.end(), 1);
            row[static_cast<std::size_t>(it - e.begin())] = c;
        }
        rows.append_row(row);
    }
    return LinSpan{n, row_space_basis(f, std::move(rows))};
}

uint32_t min_distance_chunk(const EssCode& code, uint64_t chunk_start, uint64_t chunk_count) {
    const BaseField& f = code.field;
    require_char(f, code.d, "min_distance");
    const uint32_t q = f.q(), k = code.k();
    const std::size_t cols = static_cast<std::size_t>(monomial_count(code.n, code.d - 1));

    // catalecticant is linear in f: precompute the basis catalecticants once
    std::vector<Mat<Fq>> cats;
    cats.reserve(k);
    for (const auto& b : code.basis) cats.push_back(catalecticant(f, b));

    uint32_t best = code.n + 1;
    Mat<Fq> acc(code.n, cols, f.zero());
    std::vector<Fq> digits(k);
    for (uint64_t msg = chunk_start; msg < chunk_start + chunk_count; ++msg) {
        uint64_t t = msg;
        for (uint32_t i = 0; i < k; ++i) {
            digits[i] = f.from_index(t % q);
            t /= q;
        }
        acc = Mat<Fq>(code.n, cols, f.zero());
        for (uint32_t i = 0; i < k; ++i) {
            if (f.is_zero(digits[i])) continue;
            for (uint32_t r = 0; r < code.n; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    acc.at(r, c) = f.add(acc.at(r, c), f.mul(digits[i], cats[i].at(r, c)));
        }
        const uint32_t w = static_cast<uint32_t>(rank(f, acc));
        best = std::min(best, w);
    }
    return best;
}

MinDistanceResult code_min_distance_bruteforce(const EssCode& code, uint64_t budget,
                                               unsigned jobs) {
    const uint32_t k = code.k();
    if (k == 0) throw DomainError("min_distance: zero code has no nonzero codewords");
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        total *= code.field.q();
        if (total - 1 > budget)
            throw BudgetExceededError("min_distance: codeword count exceeds budget");
    }
    const uint64_t count = total - 1; // messages 1 .. q^k - 1

    uint32_t best;
    if (jobs <= 1 || count < 1024) {
        best = min_distance_chunk(code, 1, count);
    } else {
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const unsigned nthreads = std::max(1u, std::min<unsigned>(jobs, hw));
        std::vector<uint32_t> results(nthreads, code.n + 1);
        std::vector<std::thread> threads;
        const uint64_t per = (count + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            const uint64_t start = 1 + t * per;
            const uint64_t cnt = start > count ? 0 : std::min(per, count - start + 1);
            threads.emplace_back(
                [&code, &results, t, start, cnt] { results[t] = min_distance_chunk(code, start, cnt); });
        }
        for (auto& th : threads) th.join();
        best = *std::min_element(results.begin(), results.end());
    }
    return MinDistanceResult{best, count};
}

long long singleton_like_bound(uint32_t n, uint32_t d, uint32_t r) {
    if (r < 1 || r > n) throw DomainError("singleton_like_bound: need 1 <= r <= n");
    return binomial(n + d - 1, d) - binomial(r + d - 2, d);
}

long long inherited_bound(uint32_t n, uint32_t d, uint32_t r) {
    if (r < 1 || r > n) throw DomainError("inherited_bound: need 1 <= r <= n");
    if (d < 2) throw DomainError("inherited_bound: need d >= 2");
    return binomial(n + d - 2, d - 1) * (n - r + 1);
}

long long schmidt_bound(uint32_t n, uint32_t r) {
    if (r < 1 || r > n) throw DomainError("schmidt_bound: need 1 <= r <= n");
    const long long nn = n, rr = r;
    if ((nn - rr) % 2 == 0) return nn * (nn - rr + 2) / 2;
    return (nn + 1) * (nn - rr + 1) / 2;
}

long long dim_lower_bound_s(uint32_t n, uint32_t d, uint32_t rho) {
    if (rho < 1 || rho > n) throw DomainError("dim_lower_bound_s: need 1 <= rho <= n");
    return binomial(n + d - 1, d) - static_cast<long long>(n) * binomial(rho + d - 3, d - 1);
}

EssCode apply_equivalence(const EssCode& code, const Mat<Fq>& A, Fq lambda) {
    const BaseField& f = code.field;
    if (f.is_zero(lambda)) throw DomainError("apply_equivalence: lambda must be nonzero");
    if (A.rows() != code.n || A.cols() != code.n || rank(f, A) != code.n)
        throw SingularBasisError("apply_equivalence: matrix must be invertible");
    std::vector<FPoly> mapped;
    mapped.reserve(code.basis.size());
    for (const auto& b : code.basis) mapped.push_back(poly_scale(f, substitute(f, b, A), lambda));
    return make_code(f, code.n, code.d, mapped, code.designed_rho);
}

LinSpan code_ess_variables(const EssCode& code) {
    // V_ess of the code equals the sum over any spanning set, since D o (f+g)
    // splits linearly for each fixed operator D.
    Mat<Fq> rows(0, code.n);
    for (const auto& b : code.basis) {
        const LinSpan s = ess_variables(code.field, b);
        for (std::size_t i = 0; i < s.basis.rows(); ++i) rows.append_row(s.basis.row(i));
    }
    return LinSpan{code.n, row_space_basis(code.field, std::move(rows))};
}

bool is_nondegenerate(const EssCode& code) { return code_ess_variables(code).dim() == code.n; }

} // namespace ermc
