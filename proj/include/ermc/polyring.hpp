#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ermc/errors.hpp"
#include "ermc/galois.hpp"
#include "ermc/linalg.hpp"

namespace ermc {

/// Exponent vector of a monomial: length n, entries summing to the degree.
using Exponents = std::vector<uint8_t>;

/// Term maps are ordered descending-lexicographically, matching the monomial
/// basis (x1^d, x1^{d-1}x2, ..., xn^d) used for all matrices.
template <class C>
using TermMap = std::map<Exponents, C, std::greater<Exponents>>;

/// Homogeneous polynomial of degree d in n variables. Zero coefficients are
/// never stored; the zero polynomial (empty terms) is a valid member of S_{n,d}.
template <class C>
struct HomogPoly {
    uint32_t n = 0;
    uint32_t d = 0;
    TermMap<C> terms;

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.n == b.n && a.d == b.d && a.terms == b.terms;
    }
};

/// Homogeneous differential operator of degree d in the n partials.
template <class C>
struct DiffOp {
    uint32_t n = 0;
    uint32_t d = 0;
    TermMap<C> terms;

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.n == b.n && a.d == b.d && a.terms == b.terms;
    }
};

using FPoly = HomogPoly<Fq>;
using LPoly = HomogPoly<LElem>;
using FDiffOp = DiffOp<Fq>;
using LDiffOp = DiffOp<LElem>;

inline long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

/// dim S_{n,d} = C(n+d-1, d).
inline long long monomial_count(uint32_t n, uint32_t d) { return binomial(n + d - 1, d); }

/// All exponent vectors of degree d in n variables, descending lexicographic.
std::vector<Exponents> monomial_basis(uint32_t n, uint32_t d);

/// Position lookup into monomial_basis(n, d).
class MonomialIndexer {
  public:
    MonomialIndexer(uint32_t n, uint32_t d) : basis_(monomial_basis(n, d)) {}
    std::size_t size() const { return basis_.size(); }
    const Exponents& operator[](std::size_t i) const { return basis_[i]; }
    std::size_t index_of(const Exponents& e) const {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), e, std::greater<Exponents>());
        if (it == basis_.end() || *it != e) throw DomainError("monomial not in basis");
        return static_cast<std::size_t>(it - basis_.begin());
    }

  private:
    std::vector<Exponents> basis_;
};

namespace detail {

template <class F, class C>
void add_term(const F& f, TermMap<C>& terms, const Exponents& e, const C& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (!f.is_zero(c)) terms.emplace(e, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (f.is_zero(it->second)) terms.erase(it);
}

template <class F, class C>
TermMap<C> term_mul(const F& f, const TermMap<C>& a, const TermMap<C>& b, uint32_t n) {
    TermMap<C> out;
    Exponents e(n);
    for (const auto& [ta, ca] : a)
        for (const auto& [tb, cb] : b) {
            for (uint32_t i = 0; i < n; ++i) e[i] = static_cast<uint8_t>(ta[i] + tb[i]);
            add_term(f, out, e, f.mul(ca, cb));
        }
    return out;
}

// falling factorial t*(t-1)*...*(t-u+1) as an integer (small at desk scale)
inline long long falling(uint32_t t, uint32_t u) {
    long long r = 1;
    for (uint32_t i = 0; i < u; ++i) r *= (t - i);
    return r;
}

} // namespace detail

/// Integer constant embedded through the prime subfield.
inline Fq int_in(const BaseField& f, long long c) { return f.from_int(c); }
inline LElem int_in(const ExtField& f, long long c) { return f.from_int(c); }

// ---- construction helpers ----

template <class C>
HomogPoly<C> zero_poly(uint32_t n, uint32_t d) {
    return HomogPoly<C>{n, d, {}};
}

/// v(x) = v_1 x_1 + ... + v_n x_n.
template <class F>
HomogPoly<typename F::Elem> linear_form(const F& f, const std::vector<typename F::Elem>& v) {
    HomogPoly<typename F::Elem> out{static_cast<uint32_t>(v.size()), 1, {}};
    Exponents e(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (f.is_zero(v[i])) continue;
        e[i] = 1;
        out.terms.emplace(e, v[i]);
        e[i] = 0;
    }
    return out;
}

/// v(d) = v_1 d_1 + ... + v_n d_n.
template <class F>
DiffOp<typename F::Elem> linear_diffop(const F& f, const std::vector<typename F::Elem>& v) {
    DiffOp<typename F::Elem> out{static_cast<uint32_t>(v.size()), 1, {}};
    Exponents e(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (f.is_zero(v[i])) continue;
        e[i] = 1;
        out.terms.emplace(e, v[i]);
        e[i] = 0;
    }
    return out;
}

template <class F>
HomogPoly<typename F::Elem> poly_mul(const F& f, const HomogPoly<typename F::Elem>& a,
                                     const HomogPoly<typename F::Elem>& b) {
    if (a.n != b.n) throw DomainError("poly_mul: variable counts differ");
    return HomogPoly<typename F::Elem>{a.n, a.d + b.d, detail::term_mul(f, a.terms, b.terms, a.n)};
}

template <class F>
DiffOp<typename F::Elem> op_mul(const F& f, const DiffOp<typename F::Elem>& a,
                                const DiffOp<typename F::Elem>& b) {
    if (a.n != b.n) throw DomainError("op_mul: variable counts differ");
    return DiffOp<typename F::Elem>{a.n, a.d + b.d, detail::term_mul(f, a.terms, b.terms, a.n)};
}

/// Expanded product of linear operators v^{(1)}(d) * ... * v^{(k)}(d).
template <class F>
DiffOp<typename F::Elem> product_of_linear_diffops(
    const F& f, const std::vector<std::vector<typename F::Elem>>& vs) {
    if (vs.empty()) throw DomainError("product_of_linear_diffops: empty factor list");
    DiffOp<typename F::Elem> acc = linear_diffop(f, vs[0]);
    for (std::size_t i = 1; i < vs.size(); ++i) acc = op_mul(f, acc, linear_diffop(f, vs[i]));
    return acc;
}

template <class F>
HomogPoly<typename F::Elem> poly_add(const F& f, const HomogPoly<typename F::Elem>& a,
                                     const HomogPoly<typename F::Elem>& b) {
    if (a.n != b.n || a.d != b.d) throw DomainError("poly_add: shape mismatch");
    HomogPoly<typename F::Elem> out = a;
    for (const auto& [e, c] : b.terms) detail::add_term(f, out.terms, e, c);
    return out;
}

template <class F>
HomogPoly<typename F::Elem> poly_sub(const F& f, const HomogPoly<typename F::Elem>& a,
                                     const HomogPoly<typename F::Elem>& b) {
    if (a.n != b.n || a.d != b.d) throw DomainError("poly_sub: shape mismatch");
    HomogPoly<typename F::Elem> out = a;
    for (const auto& [e, c] : b.terms) detail::add_term(f, out.terms, e, f.neg(c));
    return out;
}

template <class F>
HomogPoly<typename F::Elem> poly_scale(const F& f, const HomogPoly<typename F::Elem>& a,
                                       const typename F::Elem& c) {
    HomogPoly<typename F::Elem> out{a.n, a.d, {}};
    for (const auto& [e, x] : a.terms) detail::add_term(f, out.terms, e, f.mul(x, c));
    return out;
}

/// Lift an F-polynomial into S_{n,d}(L).
LPoly promote(const ExtField& ext, const FPoly& f);

/// D o f by iterated formal differentiation; degree drops by deg(D).
template <class F>
HomogPoly<typename F::Elem> apply_diffop(const F& fld, const DiffOp<typename F::Elem>& D,
                                         const HomogPoly<typename F::Elem>& f) {
    if (D.n != f.n) throw DomainError("apply_diffop: variable counts differ");
    if (D.d > f.d) throw DomainError("apply_diffop: operator degree exceeds polynomial degree");
    HomogPoly<typename F::Elem> out{f.n, f.d - D.d, {}};
    Exponents e(f.n);
    for (const auto& [u, cu] : D.terms) {
        for (const auto& [t, ct] : f.terms) {
            long long factor = 1;
            bool ok = true;
            for (uint32_t i = 0; i < f.n; ++i) {
                if (t[i] < u[i]) {
                    ok = false;
                    break;
                }
                factor *= detail::falling(t[i], u[i]);
            }
            if (!ok || factor == 0) continue;
            for (uint32_t i = 0; i < f.n; ++i) e[i] = static_cast<uint8_t>(t[i] - u[i]);
            detail::add_term(fld, out.terms, e,
                             fld.mul(fld.mul(cu, ct), int_in(fld, factor)));
        }
    }
    return out;
}

/// L-operator acting on an F-polynomial (promoted internally).
LPoly apply_diffop(const ExtField& ext, const LDiffOp& D, const FPoly& f);

/// The apolarity pairing <f, D> = D o f for equal degrees. On monomials,
/// <x^t, d^t> = t_1! ... t_n! and distinct monomials pair to zero.
template <class F>
typename F::Elem pairing(const F& fld, const HomogPoly<typename F::Elem>& f,
                         const DiffOp<typename F::Elem>& D) {
    if (f.d != D.d) throw DomainError("pairing: degrees differ");
    const auto res = apply_diffop(fld, D, f);
    if (res.terms.empty()) return fld.zero();
    return res.terms.begin()->second;
}

/// Coefficient row of f on monomial_basis(n, d).
template <class F>
std::vector<typename F::Elem> poly_to_row(const F& fld, const HomogPoly<typename F::Elem>& f,
                                          const MonomialIndexer& idx) {
    std::vector<typename F::Elem> row(idx.size(), fld.zero());
    for (const auto& [e, c] : f.terms) row[idx.index_of(e)] = c;
    return row;
}

template <class F>
HomogPoly<typename F::Elem> poly_from_row(const F& fld, const std::vector<typename F::Elem>& row,
                                          uint32_t n, uint32_t d, const MonomialIndexer& idx) {
    HomogPoly<typename F::Elem> out{n, d, {}};
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (!fld.is_zero(row[j])) out.terms.emplace(idx[j], row[j]);
    return out;
}

/// Canonical RREF basis of the F-span of the given polynomials.
std::vector<FPoly> canonical_span(const BaseField& f, const std::vector<FPoly>& polys, uint32_t n,
                                  uint32_t d);

/// F-basis, in canonical RREF form, of {f in S_{n,d}(F) : D o f = 0 for all D in ops}.
/// Each L-valued condition expands into n conditions over F.
std::vector<FPoly> perp_in_S(const ExtField& ext, const std::vector<LDiffOp>& ops, uint32_t n,
                             uint32_t d);

/// Decomposition h = sum_i alpha_i coeff_i(h) with coeff_i over F.
std::vector<FPoly> coeff_decompose(const ExtField& ext, const LPoly& h, const LBasis& alpha);

/// f(x * A): each variable x_i of f is replaced by sum_j A_{ji} x_j.
FPoly substitute(const BaseField& f, const FPoly& poly, const Mat<Fq>& A);

/// First catalecticant: n x C(n+d-2, d-1) matrix whose row i holds the
/// coefficients of d_i o f on the degree-(d-1) monomial basis.
Mat<Fq> catalecticant(const BaseField& f, const FPoly& poly);

} // namespace ermc
