#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ermc/galois.hpp"
#include "ermc/linalg.hpp"

namespace ermc {

/// A sigma-polynomial f_0 + f_1 sigma + ... + f_m sigma^m over L.
struct SkewPoly {
    std::vector<LElem> coeffs; // low degree first; no trailing zero coefficient

    bool is_zero() const { return coeffs.empty(); }
    long long degree() const { return static_cast<long long>(coeffs.size()) - 1; }
};

SkewPoly make_skew(const ExtField& ext, std::vector<LElem> coeffs);

/// Evaluation ev_a(f) = sum_i f_i sigma^i(a).
LElem skew_eval(const ExtField& ext, const SkewPoly& f, const LElem& a);

/// Decoding context for the Gabidulin code {(ev_{gamma_j}(f))_j : deg f <= n - rho}:
/// H has rows sigma^i(beta) for i = 0..rho-2, gamma spans ker H, and the unique
/// decoding radius is floor((rho-1)/2).
struct GabCodeCtx {
    ExtField ext;
    uint32_t rho = 0;
    LBasis beta;
    std::vector<LElem> gamma;
    Mat<LElem> H;
    uint32_t radius = 0;

    GabCodeCtx(const ExtField& e, uint32_t rho_, std::vector<LElem> beta_);
};

/// dim_F <v_1, ..., v_m>.
uint32_t rank_weight(const ExtField& ext, const std::vector<LElem>& v);

/// Codeword (ev_{gamma_1}(f), ..., ev_{gamma_n}(f)); requires deg f <= n - rho.
std::vector<LElem> gab_encode(const GabCodeCtx& ctx, const SkewPoly& f);

/// H-syndrome v H^T, a vector of length rho - 1.
std::vector<LElem> syndrome(const GabCodeCtx& ctx, const std::vector<LElem>& v);

/// The unique vector of rank weight <= radius with the given H-syndrome, or
/// nullopt when none exists. Never guesses: the returned vector is re-verified.
std::optional<std::vector<LElem>> syndrome_decode(const GabCodeCtx& ctx,
                                                  const std::vector<LElem>& s);

/// The symmetric Gabidulin code in matrix form: the F-span, rows flattened
/// row-major in canonical RREF, of {M symmetric : sigma^i(gamma) M beta^T = 0
/// for i = -(n-2-l)..-l}, built from the power basis alpha of L with beta its
/// trace-dual and gamma the Moore-orthogonal vector of alpha. Needs p > 2 and
/// 0 <= 2l <= n - 2.
Mat<Fq> symmetric_gabidulin_d2(const ExtField& ext, uint32_t ell);

} // namespace ermc
