#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ermc/galois.hpp"
#include "ermc/linalg.hpp"
#include "ermc/polyring.hpp"

namespace ermc {

/// Subspace of S_{n,1}(F): rows of `basis` are linear forms in canonical RREF.
struct LinSpan {
    uint32_t n = 0;
    Mat<Fq> basis;

    std::size_t dim() const { return basis.rows(); }
    friend bool operator==(const LinSpan& a, const LinSpan& b) {
        return a.n == b.n && a.basis == b.basis;
    }
};

/// An [(n,d),k,r]_F essential-rank-metric code: an F-subspace of S_{n,d}(F)
/// held by its canonical RREF basis over the descending-lex monomial basis.
struct EssCode {
    BaseField field;
    uint32_t n = 0;
    uint32_t d = 0;
    std::vector<FPoly> basis;
    std::optional<uint32_t> designed_rho;

    uint32_t k() const { return static_cast<uint32_t>(basis.size()); }
};

EssCode make_code(const BaseField& f, uint32_t n, uint32_t d, const std::vector<FPoly>& spanning,
                  std::optional<uint32_t> designed_rho = std::nullopt);

/// ess(f) = rank of the first catalecticant (needs p > d).
uint32_t ess_rank(const BaseField& f, const FPoly& poly);

/// Definitional essential rank: the least r such that f is a polynomial in r
/// linear forms, found by enumerating r-dimensional subspaces of F^n.
/// Desk-scale oracle; throws BudgetExceededError past `budget` subspaces.
uint32_t ess_rank_bruteforce(const BaseField& f, const FPoly& poly, uint64_t budget = 2'000'000);

/// V_ess(f): span of all order-(d-1) partial derivatives (needs p > d).
LinSpan ess_variables(const BaseField& f, const FPoly& poly);

struct MinDistanceResult {
    uint32_t min_distance = 0;
    uint64_t codewords_scanned = 0;
};

/// Minimum of ess over the nonzero codewords with message index in
/// [chunk_start, chunk_start + chunk_count); indices run over 1 .. q^k - 1 and
/// encode message digits base q. Returns n+1 on an empty range.
uint32_t min_distance_chunk(const EssCode& code, uint64_t chunk_start, uint64_t chunk_count);

/// Exhaustive minimum essential-rank distance (q^k - 1 codewords). Splitting
/// across `jobs` threads does not change the result.
MinDistanceResult code_min_distance_bruteforce(const EssCode& code, uint64_t budget = 10'000'000,
                                               unsigned jobs = 1);

// ---- parameter bounds; r is the designed minimum distance, 1 <= r <= n ----

/// C(n+d-1, d) - C(r+d-2, d).
long long singleton_like_bound(uint32_t n, uint32_t d, uint32_t r);
/// C(n+d-2, d-1) * (n - r + 1), inherited from the rank-metric Singleton bound.
long long inherited_bound(uint32_t n, uint32_t d, uint32_t r);
/// Association-scheme bound for d = 2 over finite fields.
long long schmidt_bound(uint32_t n, uint32_t r);
/// Construction lower bound s(n,d,rho) = C(n+d-1, d) - n*C(rho+d-3, d-1).
long long dim_lower_bound_s(uint32_t n, uint32_t d, uint32_t rho);

/// The isometry f |-> lambda * f(x A) applied to a code; A invertible, lambda != 0.
EssCode apply_equivalence(const EssCode& code, const Mat<Fq>& A, Fq lambda);

/// V_ess(C) = sum of the essential-variable spaces of the basis codewords.
LinSpan code_ess_variables(const EssCode& code);
bool is_nondegenerate(const EssCode& code);

} // namespace ermc
