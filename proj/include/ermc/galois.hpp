#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ermc/errors.hpp"
#include "ermc/linalg.hpp"

namespace ermc {

/// Element of a base field F_{p^m}, stored as an index in [0, q).
/// The index encodes the coordinates over F_p in base p, low digit first.
struct Fq {
    uint32_t v = 0;
    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }
    friend bool operator<(Fq a, Fq b) { return a.v < b.v; }
};

/// The field F_q, q = p^m, with p prime and an irreducible degree-m modulus
/// over F_p (m = 1 needs no modulus). Immutable; copies share internals.
class BaseField {
  public:
    using Elem = Fq;

    explicit BaseField(uint32_t p, uint32_t m = 1, std::vector<uint32_t> modulus = {});

    uint32_t p() const;
    uint32_t m() const;
    uint32_t q() const;
    const std::vector<uint32_t>& modulus() const;

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    bool is_zero(Fq a) const { return a.v == 0; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;

    /// Embedding of an integer through the prime subfield (value mod p).
    Fq from_int(long long c) const;
    /// Element with the given index in [0, q); digits base p are the F_p coordinates.
    Fq from_index(uint64_t idx) const;

    friend bool operator==(const BaseField& a, const BaseField& b);

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Element of the extension L = F_q[x]/(modulus): power-basis coordinates over F,
/// low degree first, always of length n.
using LElem = std::vector<Fq>;

class LBasis;

/// Cyclic extension L/F of degree n with sigma = (q-power Frobenius)^s,
/// gcd(s, n) = 1, so that sigma generates Gal(L/F). Frobenius powers act
/// through matrices over F precomputed at construction.
class ExtField {
  public:
    using Elem = LElem;

    ExtField(BaseField base, uint32_t n, std::vector<Fq> modulus, uint32_t frobenius_exponent = 1);

    const BaseField& base() const;
    uint32_t n() const;
    uint32_t frobenius_exponent() const;
    const std::vector<Fq>& modulus() const;

    LElem zero() const;
    LElem one() const;
    /// The residue class of x, i.e. the generator of the power basis.
    LElem gen() const;
    bool is_zero(const LElem& a) const;

    LElem add(const LElem& a, const LElem& b) const;
    LElem sub(const LElem& a, const LElem& b) const;
    LElem neg(const LElem& a) const;
    LElem mul(const LElem& a, const LElem& b) const;
    LElem inv(const LElem& a) const;
    LElem pow(const LElem& a, uint64_t e) const;

    LElem from_base(Fq c) const;
    LElem from_int(long long c) const;
    /// Scalar action of F on L.
    LElem scale(const LElem& a, Fq c) const;

    /// sigma^i(x); i is reduced mod n, negative values allowed.
    LElem frobenius(const LElem& x, long long i) const;
    /// Tr_{L/F}(x) = sum of all sigma^i(x); always lands in F.
    Fq trace(const LElem& x) const;

    LElem power_of_gen(uint32_t i) const;

    friend bool operator==(const ExtField& a, const ExtField& b);

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

enum class BasisKind { arbitrary, normal, power };

/// An F-basis of L together with its coordinate matrix and the inverse used for
/// expansions. Construction fails with SingularBasisError on dependent vectors.
class LBasis {
  public:
    LBasis(const ExtField& ext, std::vector<LElem> elements, BasisKind kind = BasisKind::arbitrary);

    const std::vector<LElem>& elements() const { return elems_; }
    const LElem& operator[](std::size_t i) const { return elems_[i]; }
    std::size_t size() const { return elems_.size(); }
    BasisKind kind() const { return kind_; }

    /// Coordinates c with x = sum_j c_j * basis_j.
    std::vector<Fq> expand(const ExtField& ext, const LElem& x) const;

    friend bool operator==(const LBasis& a, const LBasis& b) { return a.elems_ == b.elems_; }

  private:
    std::vector<LElem> elems_;
    BasisKind kind_;
    Mat<Fq> expand_mat_; // row vector of coords times this = basis coefficients
};

/// The power basis (1, x, x^2, ..., x^{n-1}) of L.
LBasis power_basis(const ExtField& ext);

/// Entrywise sigma^i of a vector over L.
std::vector<LElem> frobenius_vec(const ExtField& ext, const std::vector<LElem>& v, long long i);

/// r x m matrix with entry (i, j) = sigma^i(v_j).
Mat<LElem> moore_matrix(const ExtField& ext, const std::vector<LElem>& v, std::size_t rows);

/// Basis dual to alpha under the trace pairing: Tr(alpha_i * beta_j) = delta_ij.
LBasis dual_basis(const ExtField& ext, const LBasis& alpha);

/// The unique vector gamma (up to scalar, normalized so its first nonzero
/// coordinate is one) with sum_j sigma^i(v_j) gamma_j = 0 for every row index
/// i in {0,...,n-1} except `excluded_row`. Requires the solution space to be
/// one-dimensional.
std::vector<LElem> moore_kernel_vector(const ExtField& ext, const std::vector<LElem>& v,
                                       uint32_t excluded_row);

/// gamma orthogonal to sigma^i(beta) for all i != n - rho + 1 (2 <= rho <= n).
std::vector<LElem> solve_gamma(const ExtField& ext, const LBasis& beta, uint32_t rho);

/// Smallest monic irreducible polynomial of degree n over the base field, in the
/// lexicographic order of coefficient tuples (low degree first). Deterministic.
std::vector<Fq> find_irreducible(const BaseField& base, uint32_t n);

} // namespace ermc
