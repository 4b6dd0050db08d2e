#include "ermc/galois.hpp"

#include <algorithm>
#include <numeric>

namespace ermc {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- polynomial helpers over a generic coefficient field ---
// Coefficient vectors are low degree first; instantiated for F_p[x] (via the
// shim in the BaseField constructor) and for F_q[x].

template <class F>
std::vector<typename F::Elem> poly_mod(const F& f, std::vector<typename F::Elem> a,
                                       const std::vector<typename F::Elem>& mod) {
    const std::size_t deg = mod.size() - 1;
    const auto lead_inv = f.inv(mod.back());
    while (a.size() > deg) {
        const auto c = f.mul(a.back(), lead_inv);
        if (!f.is_zero(c)) {
            const std::size_t shift = a.size() - mod.size();
            for (std::size_t i = 0; i < mod.size(); ++i)
                a[shift + i] = f.sub(a[shift + i], f.mul(c, mod[i]));
        }
        a.pop_back();
    }
    return a;
}

// Trial factorization: monic divisors of degree 1..deg/2 over F.
template <class F>
bool poly_irreducible(const F& f, const std::vector<typename F::Elem>& mod, uint64_t q) {
    const std::size_t deg = mod.size() - 1;
    if (deg == 0) return false;
    if (f.is_zero(mod[0])) return deg == 1; // divisible by x
    for (std::size_t dd = 1; 2 * dd <= deg; ++dd) {
        // enumerate monic polynomials of degree dd by base-q counter over lower coeffs
        uint64_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) {
            count *= q;
            if (count > 4'000'000ULL)
                throw BudgetExceededError("irreducibility check: modulus degree too large");
        }
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<typename F::Elem> div(dd + 1, f.zero());
            uint64_t t = idx;
            for (std::size_t i = 0; i < dd; ++i) {
                div[i] = f.from_index(t % q);
                t /= q;
            }
            div[dd] = f.one();
            const auto rem = poly_mod(f, mod, div);
            bool zero = true;
            for (const auto& x : rem) zero &= f.is_zero(x);
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------- BaseField

struct BaseField::Impl {
    uint32_t p, m, q;
    std::vector<uint32_t> modulus; // over F_p, length m+1, monic
    std::vector<uint32_t> mul_table;
    std::vector<uint32_t> inv_table;
    bool tables = false;

    // digit arithmetic (used to build the tables and as fallback)
    uint32_t add_raw(uint32_t a, uint32_t b) const {
        if (m == 1) return (a + b) % p;
        uint32_t out = 0, mult = 1;
        for (uint32_t i = 0; i < m; ++i) {
            out += ((a % p + b % p) % p) * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        return out;
    }
    uint32_t neg_raw(uint32_t a) const {
        if (m == 1) return (p - a) % p;
        uint32_t out = 0, mult = 1;
        for (uint32_t i = 0; i < m; ++i) {
            out += ((p - a % p) % p) * mult;
            a /= p;
            mult *= p;
        }
        return out;
    }
    uint32_t mul_raw(uint32_t a, uint32_t b) const {
        if (m == 1) return static_cast<uint32_t>(uint64_t(a) * b % p);
        std::vector<uint64_t> da(m), db(m), prod(2 * m - 1, 0);
        for (uint32_t i = 0; i < m; ++i) { da[i] = a % p; a /= p; }
        for (uint32_t i = 0; i < m; ++i) { db[i] = b % p; b /= p; }
        for (uint32_t i = 0; i < m; ++i)
            for (uint32_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        // reduce by the monic modulus
        for (std::size_t k = prod.size(); k-- > m;) {
            const uint64_t c = prod[k];
            if (!c) continue;
            prod[k] = 0;
            for (uint32_t i = 0; i < m; ++i)
                prod[k - m + i] = (prod[k - m + i] + uint64_t(p - modulus[i]) % p * c) % p;
        }
        uint32_t out = 0, mult = 1;
        for (uint32_t i = 0; i < m; ++i) {
            out += static_cast<uint32_t>(prod[i]) * mult;
            mult *= p;
        }
        return out;
    }
    uint32_t pow_raw(uint32_t a, uint64_t e) const {
        uint32_t r = 1;
        while (e) {
            if (e & 1) r = tables ? mul_table[r * q + a] : mul_raw(r, a);
            a = tables ? mul_table[a * q + a] : mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }
};

BaseField::BaseField(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) throw DomainError("base field: p must be prime");
    if (m < 1) throw DomainError("base field: extension degree must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 1'000'000) throw DomainError("base field: q too large");
    }
    impl->q = static_cast<uint32_t>(q);
    if (m == 1) {
        if (!modulus.empty()) throw DomainError("base field: modulus not allowed for m = 1");
        impl->modulus = {0, 1}; // x, unused
    } else {
        if (modulus.size() != m + 1) throw DomainError("base field: modulus must have m+1 coefficients");
        for (auto& c : modulus) c %= p;
        if (modulus.back() == 0)
            throw DomainError("base field: modulus must have a nonzero leading coefficient");
        if (modulus.back() != 1) { // normalize to monic
            uint32_t inv = 1, base = modulus.back();
            for (uint32_t e = p - 2; e; e >>= 1) {
                if (e & 1) inv = static_cast<uint32_t>(uint64_t(inv) * base % p);
                base = static_cast<uint32_t>(uint64_t(base) * base % p);
            }
            for (auto& c : modulus) c = static_cast<uint32_t>(uint64_t(c) * inv % p);
        }
        impl->modulus = modulus;
        // irreducibility over F_p via the generic trial division, with a tiny shim field
        struct Fp {
            uint32_t p;
            using Elem = uint32_t;
            Elem zero() const { return 0; }
            Elem one() const { return 1; }
            bool is_zero(Elem a) const { return a == 0; }
            Elem add(Elem a, Elem b) const { return (a + b) % p; }
            Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
            Elem mul(Elem a, Elem b) const { return (a * b) % p; }
            Elem inv(Elem a) const {
                if (a == 0) throw DomainError("division by zero");
                uint64_t r = 1, b = a;
                for (uint32_t e = p - 2; e; e >>= 1) {
                    if (e & 1) r = r * b % p;
                    b = b * b % p;
                }
                return static_cast<Elem>(r);
            }
            Elem from_index(uint64_t i) const { return static_cast<Elem>(i % p); }
        } fp{p};
        if (!poly_irreducible(fp, modulus, p))
            throw DomainError("base field: modulus is reducible over F_p");
    }
    if (impl->q <= 1024) {
        impl->mul_table.resize(std::size_t(impl->q) * impl->q);
        for (uint32_t a = 0; a < impl->q; ++a)
            for (uint32_t b = a; b < impl->q; ++b) {
                const uint32_t v = impl->mul_raw(a, b);
                impl->mul_table[std::size_t(a) * impl->q + b] = v;
                impl->mul_table[std::size_t(b) * impl->q + a] = v;
            }
        impl->inv_table.assign(impl->q, 0);
        for (uint32_t a = 1; a < impl->q; ++a)
            impl->inv_table[a] = impl->pow_raw(a, uint64_t(impl->q) - 2);
        impl->tables = true;
    }
    impl_ = std::move(impl);
}

uint32_t BaseField::p() const { return impl_->p; }
uint32_t BaseField::m() const { return impl_->m; }
uint32_t BaseField::q() const { return impl_->q; }
const std::vector<uint32_t>& BaseField::modulus() const { return impl_->modulus; }

Fq BaseField::add(Fq a, Fq b) const { return Fq{impl_->add_raw(a.v, b.v)}; }
Fq BaseField::sub(Fq a, Fq b) const { return Fq{impl_->add_raw(a.v, impl_->neg_raw(b.v))}; }
Fq BaseField::neg(Fq a) const { return Fq{impl_->neg_raw(a.v)}; }

Fq BaseField::mul(Fq a, Fq b) const {
    if (impl_->tables) return Fq{impl_->mul_table[std::size_t(a.v) * impl_->q + b.v]};
    return Fq{impl_->mul_raw(a.v, b.v)};
}

Fq BaseField::inv(Fq a) const {
    if (a.v == 0) throw DomainError("field inverse of zero");
    if (impl_->tables) return Fq{impl_->inv_table[a.v]};
    return Fq{impl_->pow_raw(a.v, uint64_t(impl_->q) - 2)};
}

Fq BaseField::from_int(long long c) const {
    const long long p = impl_->p;
    return Fq{static_cast<uint32_t>(((c % p) + p) % p)};
}

Fq BaseField::from_index(uint64_t idx) const { return Fq{static_cast<uint32_t>(idx % impl_->q)}; }

bool operator==(const BaseField& a, const BaseField& b) {
    return a.impl_ == b.impl_ ||
           (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
}

// ---------------------------------------------------------------- ExtField

struct ExtField::Impl {
    BaseField base;
    uint32_t n;
    std::vector<Fq> modulus;
    uint32_t s;
    std::vector<Mat<Fq>> frob_mats; // frob_mats[i] = matrix of sigma^i in the power basis

    explicit Impl(BaseField b) : base(std::move(b)), n(0), s(1) {}
};

ExtField::ExtField(BaseField base_field, uint32_t n, std::vector<Fq> modulus,
                   uint32_t frobenius_exponent) {
    if (n < 1) throw DomainError("extension: degree must be >= 1");
    if (modulus.size() != n + 1) throw DomainError("extension: modulus must have n+1 coefficients");
    if (base_field.is_zero(modulus.back()))
        throw DomainError("extension: modulus must be monic (nonzero leading coefficient)");
    if (std::gcd<uint64_t>(frobenius_exponent, n) != 1)
        throw DomainError("extension: frobenius exponent must be coprime to n");
    // normalize to an actually monic modulus
    if (modulus.back() != base_field.one()) {
        const Fq c = base_field.inv(modulus.back());
        for (auto& x : modulus) x = base_field.mul(x, c);
    }
    if (!poly_irreducible(base_field, modulus, base_field.q()))
        throw DomainError("extension: modulus is reducible over the base field");
    {
        // |L| must fit in uint64 for Fermat inversion
        long double size = 1;
        for (uint32_t i = 0; i < n; ++i) size *= base_field.q();
        if (size > 4e18L) throw DomainError("extension: field too large");
    }

    auto impl = std::make_shared<Impl>(std::move(base_field));
    impl->n = n;
    impl->modulus = std::move(modulus);
    impl->s = frobenius_exponent % n;
    impl_ = impl; // methods below read through impl_

    // base q-power Frobenius as an F-linear matrix: columns are (x^j)^q
    const BaseField& f = impl->base;
    Mat<Fq> phi(n, n, f.zero());
    for (uint32_t j = 0; j < n; ++j) {
        const LElem img = pow(power_of_gen(j), f.q());
        for (uint32_t i = 0; i < n; ++i) phi.at(i, j) = img[i];
    }
    Mat<Fq> id(n, n, f.zero());
    for (uint32_t i = 0; i < n; ++i) id.at(i, i) = f.one();
    Mat<Fq> sigma = id;
    for (uint32_t i = 0; i < impl->s; ++i) sigma = mat_mul(f, phi, sigma);
    impl->frob_mats.resize(n);
    impl->frob_mats[0] = id;
    for (uint32_t i = 1; i < n; ++i) impl->frob_mats[i] = mat_mul(f, sigma, impl->frob_mats[i - 1]);
    // sigma has order exactly n when gcd(s, n) = 1; verify as a construction sanity check
    if (n > 1 && mat_mul(f, sigma, impl->frob_mats[n - 1]) != id)
        throw DomainError("extension: frobenius does not have order n");
}

const BaseField& ExtField::base() const { return impl_->base; }
uint32_t ExtField::n() const { return impl_->n; }
uint32_t ExtField::frobenius_exponent() const { return impl_->s; }
const std::vector<Fq>& ExtField::modulus() const { return impl_->modulus; }

LElem ExtField::zero() const { return LElem(impl_->n, impl_->base.zero()); }

LElem ExtField::one() const {
    LElem e = zero();
    e[0] = impl_->base.one();
    return e;
}

LElem ExtField::gen() const {
    if (impl_->n == 1) return {impl_->base.neg(impl_->modulus[0])}; // x = -m0 in F[x]/(x + m0)
    return power_of_gen(1);
}

LElem ExtField::power_of_gen(uint32_t i) const {
    if (i < impl_->n) {
        LElem e = zero();
        e[i] = impl_->base.one();
        return e;
    }
    return pow(gen(), i);
}

bool ExtField::is_zero(const LElem& a) const {
    for (const auto& c : a)
        if (c.v != 0) return false;
    return true;
}

LElem ExtField::add(const LElem& a, const LElem& b) const {
    LElem out(impl_->n);
    for (uint32_t i = 0; i < impl_->n; ++i) out[i] = impl_->base.add(a[i], b[i]);
    return out;
}

LElem ExtField::sub(const LElem& a, const LElem& b) const {
    LElem out(impl_->n);
    for (uint32_t i = 0; i < impl_->n; ++i) out[i] = impl_->base.sub(a[i], b[i]);
    return out;
}

LElem ExtField::neg(const LElem& a) const {
    LElem out(impl_->n);
    for (uint32_t i = 0; i < impl_->n; ++i) out[i] = impl_->base.neg(a[i]);
    return out;
}

LElem ExtField::mul(const LElem& a, const LElem& b) const {
    const auto& f = impl_->base;
    const uint32_t n = impl_->n;
    if (n == 1) return {f.mul(a[0], b[0])};
    std::vector<Fq> prod(2 * n - 1, f.zero());
    for (uint32_t i = 0; i < n; ++i) {
        if (f.is_zero(a[i])) continue;
        for (uint32_t j = 0; j < n; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
    for (std::size_t k = prod.size(); k-- > n;) {
        const Fq c = prod[k];
        if (f.is_zero(c)) continue;
        prod[k] = f.zero();
        for (uint32_t i = 0; i < n; ++i)
            prod[k - n + i] = f.sub(prod[k - n + i], f.mul(c, impl_->modulus[i]));
    }
    prod.resize(n);
    return prod;
}

LElem ExtField::pow(const LElem& a, uint64_t e) const {
    LElem r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

LElem ExtField::inv(const LElem& a) const {
    if (is_zero(a)) throw DomainError("field inverse of zero");
    uint64_t e = 1;
    for (uint32_t i = 0; i < impl_->n; ++i) e *= impl_->base.q();
    return pow(a, e - 2);
}

LElem ExtField::from_base(Fq c) const {
    LElem e = zero();
    e[0] = c;
    return e;
}

LElem ExtField::from_int(long long c) const { return from_base(impl_->base.from_int(c)); }

LElem ExtField::scale(const LElem& a, Fq c) const {
    LElem out(impl_->n);
    for (uint32_t i = 0; i < impl_->n; ++i) out[i] = impl_->base.mul(a[i], c);
    return out;
}

LElem ExtField::frobenius(const LElem& x, long long i) const {
    const long long n = impl_->n;
    const uint32_t r = static_cast<uint32_t>(((i % n) + n) % n);
    if (r == 0) return x;
    return mat_vec(impl_->base, impl_->frob_mats[r], x);
}

Fq ExtField::trace(const LElem& x) const {
    LElem acc = zero();
    for (uint32_t i = 0; i < impl_->n; ++i) acc = add(acc, frobenius(x, i));
    for (uint32_t i = 1; i < impl_->n; ++i)
        if (!impl_->base.is_zero(acc[i])) throw DomainError("trace left the base field (internal)");
    return acc[0];
}

bool operator==(const ExtField& a, const ExtField& b) {
    return a.impl_ == b.impl_ ||
           (a.base() == b.base() && a.n() == b.n() && a.modulus() == b.modulus() &&
            a.frobenius_exponent() == b.frobenius_exponent());
}

// ---------------------------------------------------------------- LBasis

LBasis::LBasis(const ExtField& ext, std::vector<LElem> elements, BasisKind kind)
    : elems_(std::move(elements)), kind_(kind) {
    const uint32_t n = ext.n();
    if (elems_.size() != n) throw SingularBasisError("basis: expected n elements");
    Mat<Fq> coord(n, n, ext.base().zero());
    for (uint32_t j = 0; j < n; ++j)
        for (uint32_t i = 0; i < n; ++i) coord.at(i, j) = elems_[j][i];
    try {
        expand_mat_ = inverse(ext.base(), coord); // expand_mat * coords(x) = coefficients
    } catch (const SingularBasisError&) {
        throw SingularBasisError("basis: elements are F-linearly dependent");
    }
}

std::vector<Fq> LBasis::expand(const ExtField& ext, const LElem& x) const {
    return mat_vec(ext.base(), expand_mat_, x);
}

LBasis power_basis(const ExtField& ext) {
    std::vector<LElem> elems;
    elems.reserve(ext.n());
    for (uint32_t i = 0; i < ext.n(); ++i) elems.push_back(ext.power_of_gen(i));
    return LBasis(ext, std::move(elems), BasisKind::power);
}

std::vector<LElem> frobenius_vec(const ExtField& ext, const std::vector<LElem>& v, long long i) {
    std::vector<LElem> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(ext.frobenius(x, i));
    return out;
}

Mat<LElem> moore_matrix(const ExtField& ext, const std::vector<LElem>& v, std::size_t rows) {
    if (rows < 1) throw DomainError("moore_matrix: need at least one row");
    Mat<LElem> m(rows, v.size(), ext.zero());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = ext.frobenius(v[j], (long long)i);
    return m;
}

LBasis dual_basis(const ExtField& ext, const LBasis& alpha) {
    const uint32_t n = ext.n();
    Mat<Fq> gram(n, n, ext.base().zero());
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) gram.at(i, j) = ext.trace(ext.mul(alpha[i], alpha[j]));
    Mat<Fq> ginv;
    try {
        ginv = inverse(ext.base(), gram);
    } catch (const SingularBasisError&) {
        throw SingularBasisError("dual_basis: trace form is degenerate on the given set");
    }
    std::vector<LElem> beta;
    beta.reserve(n);
    for (uint32_t j = 0; j < n; ++j) {
        LElem b = ext.zero();
        for (uint32_t k = 0; k < n; ++k) b = ext.add(b, ext.scale(alpha[k], ginv.at(k, j)));
        beta.push_back(std::move(b));
    }
    return LBasis(ext, std::move(beta));
}

std::vector<LElem> moore_kernel_vector(const ExtField& ext, const std::vector<LElem>& v,
                                       uint32_t excluded_row) {
    const uint32_t n = ext.n();
    if (v.size() != n) throw DomainError("moore_kernel_vector: expected n entries");
    Mat<LElem> m(n - 1, n, ext.zero());
    std::size_t r = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (i == excluded_row % n) continue;
        for (uint32_t j = 0; j < n; ++j) m.at(r, j) = ext.frobenius(v[j], i);
        ++r;
    }
    const auto ker = kernel_basis(ext, std::move(m));
    if (ker.rows() != 1)
        throw SingularBasisError("moore_kernel_vector: solution space is not one-dimensional");
    std::vector<LElem> g = ker.row(0);
    std::size_t fnz = 0;
    while (fnz < g.size() && ext.is_zero(g[fnz])) ++fnz;
    const LElem c = ext.inv(g[fnz]);
    for (auto& x : g) x = ext.mul(x, c);
    return g;
}

std::vector<LElem> solve_gamma(const ExtField& ext, const LBasis& beta, uint32_t rho) {
    const uint32_t n = ext.n();
    if (rho < 2 || rho > n) throw DomainError("solve_gamma: need 2 <= rho <= n");
    return moore_kernel_vector(ext, beta.elements(), n - rho + 1);
}

std::vector<Fq> find_irreducible(const BaseField& base, uint32_t n) {
    if (n == 1) return {base.zero(), base.one()}; // x itself
    uint64_t count = 1;
    for (uint32_t i = 0; i < n; ++i) {
        count *= base.q();
        if (count > 40'000'000ULL) throw BudgetExceededError("find_irreducible: degree too large");
    }
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Fq> mod(n + 1, base.zero());
        uint64_t t = idx;
        for (uint32_t i = 0; i < n; ++i) {
            mod[i] = base.from_index(t % base.q());
            t /= base.q();
        }
        mod[n] = base.one();
        if (base.is_zero(mod[0])) continue;
        if (poly_irreducible(base, mod, base.q())) return mod;
    }
    throw DomainError("find_irreducible: none found (unreachable for finite fields)");
}

} // namespace ermc
