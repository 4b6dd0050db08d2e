#include "ermc/gabidulin.hpp"

namespace ermc {

SkewPoly make_skew(const ExtField& ext, std::vector<LElem> coeffs) {
    while (!coeffs.empty() && ext.is_zero(coeffs.back())) coeffs.pop_back();
    return SkewPoly{std::move(coeffs)};
}

LElem skew_eval(const ExtField& ext, const SkewPoly& f, const LElem& a) {
    LElem acc = ext.zero();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        acc = ext.add(acc, ext.mul(f.coeffs[i], ext.frobenius(a, (long long)i)));
    return acc;
}

GabCodeCtx::GabCodeCtx(const ExtField& e, uint32_t rho_, std::vector<LElem> beta_)
    : ext(e), rho(rho_), beta(e, std::move(beta_)) { // LBasis ctor checks independence
    const uint32_t n = ext.n();
    if (rho < 2 || rho > n) throw DomainError("gabidulin: need 2 <= rho <= n");
    H = moore_matrix(ext, beta.elements(), rho - 1);
    // gamma spans ker H: orthogonal to sigma^i(beta) for every i except rho - 1,
    // which makes the evaluation code of gamma exactly the right kernel of H.
    gamma = moore_kernel_vector(ext, beta.elements(), (rho - 1) % n);
    radius = (rho - 1) / 2;
}

uint32_t rank_weight(const ExtField& ext, const std::vector<LElem>& v) {
    Mat<Fq> m(v.size(), ext.n(), ext.base().zero());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (uint32_t j = 0; j < ext.n(); ++j) m.at(i, j) = v[i][j];
    return static_cast<uint32_t>(rank(ext.base(), std::move(m)));
}

std::vector<LElem> gab_encode(const GabCodeCtx& ctx, const SkewPoly& f) {
    if (f.degree() > static_cast<long long>(ctx.ext.n()) - ctx.rho)
        throw DomainError("gab_encode: skew degree exceeds n - rho");
    std::vector<LElem> c;
    c.reserve(ctx.ext.n());
    for (uint32_t j = 0; j < ctx.ext.n(); ++j) c.push_back(skew_eval(ctx.ext, f, ctx.gamma[j]));
    return c;
}

std::vector<LElem> syndrome(const GabCodeCtx& ctx, const std::vector<LElem>& v) {
    const ExtField& ext = ctx.ext;
    if (v.size() != ext.n()) throw DomainError("syndrome: expected a vector of length n");
    std::vector<LElem> s(ctx.rho - 1, ext.zero());
    for (uint32_t i = 0; i + 1 < ctx.rho; ++i)
        for (uint32_t j = 0; j < ext.n(); ++j)
            s[i] = ext.add(s[i], ext.mul(v[j], ctx.H.at(i, j)));
    return s;
}

namespace {

// F-linear matrix of z |-> sum_k lambda_k sigma^k(z) in the power basis.
Mat<Fq> linearized_matrix(const ExtField& ext, const std::vector<LElem>& lambda) {
    const uint32_t n = ext.n();
    Mat<Fq> m(n, n, ext.base().zero());
    for (uint32_t j = 0; j < n; ++j) {
        LElem img = ext.zero();
        const LElem basis_j = ext.power_of_gen(j);
        for (std::size_t k = 0; k < lambda.size(); ++k) {
            if (ext.is_zero(lambda[k])) continue;
            img = ext.add(img, ext.mul(lambda[k], ext.frobenius(basis_j, (long long)k)));
        }
        for (uint32_t i = 0; i < n; ++i) m.at(i, j) = img[i];
    }
    return m;
}

} // namespace

std::optional<std::vector<LElem>> syndrome_decode(const GabCodeCtx& ctx,
                                                  const std::vector<LElem>& s) {
    const ExtField& ext = ctx.ext;
    const uint32_t n = ext.n();
    if (s.size() != ctx.rho - 1) throw DomainError("syndrome_decode: syndrome length mismatch");

    const auto verified = [&](const std::vector<LElem>& e) {
        return syndrome(ctx, e) == s && rank_weight(ext, e) <= ctx.radius;
    };

    for (uint32_t cand = 0; cand <= ctx.radius; ++cand) {
        if (cand == 0) {
            bool zero = true;
            for (const auto& x : s) zero &= ext.is_zero(x);
            if (zero) return std::vector<LElem>(n, ext.zero());
            continue;
        }
        // annihilator lambda of the error values: sum_k lambda_k sigma^k(s_{i-k}) = 0
        // for i = cand..rho-2; at the true error rank the solution is unique up to scale.
        Mat<LElem> rec(ctx.rho - 1 - cand, cand + 1, ext.zero());
        for (uint32_t i = cand; i + 1 < ctx.rho; ++i)
            for (uint32_t k = 0; k <= cand; ++k)
                rec.at(i - cand, k) = ext.frobenius(s[i - k], k);
        const Mat<LElem> ker = kernel_basis(ext, std::move(rec));
        if (ker.rows() == 0) continue;
        const std::vector<LElem> lambda = ker.row(0);

        // error values: the root space of the annihilator
        const Mat<Fq> roots = kernel_basis(ext.base(), linearized_matrix(ext, lambda));
        const std::size_t m = roots.rows();
        if (m == 0 || m > cand) continue;
        std::vector<LElem> values(m);
        for (std::size_t l = 0; l < m; ++l) {
            LElem v(n);
            for (uint32_t c = 0; c < n; ++c) v[c] = roots.at(l, c);
            values[l] = std::move(v);
        }

        // locator part: sigma^{-i}(s_i) = sum_l sigma^{-i}(E_l) y_l for i = 0..m-1
        Mat<LElem> A(m, m, ext.zero());
        std::vector<LElem> rhs(m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t l = 0; l < m; ++l) A.at(i, l) = ext.frobenius(values[l], -(long long)i);
            rhs[i] = ext.frobenius(s[i], -(long long)i);
        }
        const auto ys = solve_linear(ext, std::move(A), rhs);
        if (!ys) continue;

        // assemble e_j = sum_l X_{lj} E_l from the beta-expansion of each y_l
        std::vector<LElem> e(n, ext.zero());
        for (std::size_t l = 0; l < m; ++l) {
            const std::vector<Fq> x = ctx.beta.expand(ext, (*ys)[l]);
            for (uint32_t j = 0; j < n; ++j)
                e[j] = ext.add(e[j], ext.scale(values[l], x[j]));
        }
        if (verified(e)) return e;
    }
    return std::nullopt;
}

Mat<Fq> symmetric_gabidulin_d2(const ExtField& ext, uint32_t ell) {
    const uint32_t n = ext.n();
    const BaseField& f = ext.base();
    if (f.p() <= 2) throw CharTooSmallError("symmetric gabidulin: requires char(F) > 2");
    if (2 * ell + 2 > n) throw DomainError("symmetric gabidulin: need 2l <= n - 2");

    const LBasis alpha = power_basis(ext);
    const LBasis beta = dual_basis(ext, alpha);
    // gamma orthogonal to sigma^i(alpha) for i = 0..n-2
    const std::vector<LElem> gamma = moore_kernel_vector(ext, alpha.elements(), n - 1);

    // unknowns: the n^2 entries of M, row-major; conditions over L expand to n
    // F-rows each, plus the symmetry relations
    Mat<Fq> cond(0, std::size_t(n) * n);
    for (long long i = -(long long)(n - 2 - ell); i <= -(long long)ell; ++i) {
        std::vector<LElem> sg(n);
        for (uint32_t a = 0; a < n; ++a) sg[a] = ext.frobenius(gamma[a], i);
        std::vector<std::vector<LElem>> co(n, std::vector<LElem>(n));
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b) co[a][b] = ext.mul(sg[a], beta[b]);
        for (uint32_t coord = 0; coord < n; ++coord) {
            std::vector<Fq> row(std::size_t(n) * n);
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) row[std::size_t(a) * n + b] = co[a][b][coord];
            cond.append_row(row);
        }
    }
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = a + 1; b < n; ++b) {
            std::vector<Fq> row(std::size_t(n) * n, f.zero());
            row[std::size_t(a) * n + b] = f.one();
            row[std::size_t(b) * n + a] = f.neg(f.one());
            cond.append_row(row);
        }
    return kernel_basis(f, std::move(cond));
}

} // namespace ermc
