#pragma once

#include <cstdint>
#include <vector>

#include "ermc/essrank.hpp"
#include "ermc/galois.hpp"
#include "ermc/polyring.hpp"

namespace ermc {

/// Parameters of a code C_rho^{n,d}(alpha^(1), ..., alpha^(d)). The bases
/// default to d copies of the power basis; n is the extension degree.
struct CodeParams {
    ExtField ext;
    uint32_t d = 0;
    uint32_t rho = 0;
    std::vector<LBasis> bases;

    CodeParams(ExtField e, uint32_t d_, uint32_t rho_, std::vector<LBasis> bases_ = {});

    uint32_t n() const { return ext.n(); }
    bool equal_bases() const;
    const LBasis& alpha() const { return bases.front(); }
};

/// X_{k,rho}: nondecreasing k-tuples (0, r_2, ..., r_k) with entries <= rho-2,
/// in lexicographic order. Empty for rho < 2. |X_{k,rho}| = C(k-1+rho-2, k-1).
std::vector<std::vector<uint32_t>> x_set(uint32_t k, uint32_t rho);

/// The defining operator family: the reduced set prod_j sigma^{r_j}(alpha)(d)
/// over X_{d,rho} for equal bases, or the full grid
/// alpha^(1)(d) * prod_{j>=2} sigma^{r_j}(alpha^(j))(d) for distinct bases.
std::vector<LDiffOp> defining_operators(const CodeParams& params);

/// C_rho^{n,d} = {operators}^perp intersected with S_{n,d}(F), canonical basis.
EssCode construct_code(const CodeParams& params);

/// k x C(n+d-1, d) RREF matrix of basis coefficient rows.
Mat<Fq> generator_matrix(const EssCode& code);

struct CodimReport {
    long long actual_codim = 0;
    long long predicted_codim = 0;
    bool match = false;
};

/// Experimental comparison for the codimension conjecture: the actual codimension
/// against n times the number of Z-orbits meeting the restricted multiset family
/// (entries in {0..rho-2}), the latter counted by brute force. Equal bases only.
CodimReport codim_conjecture_report(const CodeParams& params, uint64_t budget = 2'000'000);

} // namespace ermc
