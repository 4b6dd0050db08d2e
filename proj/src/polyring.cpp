#include "ermc/polyring.hpp"

namespace ermc {

std::vector<Exponents> monomial_basis(uint32_t n, uint32_t d) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    // descending lexicographic: highest exponent on the earliest variable first
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t idx, uint32_t rem) {
        if (idx == n - 1) {
            cur[idx] = static_cast<uint8_t>(rem);
            out.push_back(cur);
            return;
        }
        for (uint32_t e = rem + 1; e-- > 0;) {
            cur[idx] = static_cast<uint8_t>(e);
            rec(idx + 1, rem - e);
        }
    };
    if (n == 0) throw DomainError("monomial_basis: need at least one variable");
    rec(0, d);
    return out;
}

LPoly promote(const ExtField& ext, const FPoly& f) {
    LPoly out{f.n, f.d, {}};
    for (const auto& [e, c] : f.terms) out.terms.emplace(e, ext.from_base(c));
    return out;
}

LPoly apply_diffop(const ExtField& ext, const LDiffOp& D, const FPoly& f) {
    return apply_diffop(ext, D, promote(ext, f));
}

std::vector<FPoly> canonical_span(const BaseField& f, const std::vector<FPoly>& polys, uint32_t n,
                                  uint32_t d) {
    const MonomialIndexer idx(n, d);
    Mat<Fq> m(0, idx.size());
    for (const auto& p : polys) {
        if (p.n != n || p.d != d) throw DomainError("canonical_span: shape mismatch");
        m.append_row(poly_to_row(f, p, idx));
    }
    const Mat<Fq> basis = row_space_basis(f, std::move(m));
    std::vector<FPoly> out;
    out.reserve(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i)
        out.push_back(poly_from_row(f, basis.row(i), n, d, idx));
    return out;
}

std::vector<FPoly> perp_in_S(const ExtField& ext, const std::vector<LDiffOp>& ops, uint32_t n,
                             uint32_t d) {
    const BaseField& f = ext.base();
    const MonomialIndexer idx(n, d);
    const std::size_t cols = idx.size();

    // One L-linear condition per operator: sum_t c_t * t! * D_t = 0; expand each
    // into ext.n() rows over F via power-basis coordinates.
    Mat<Fq> cond(0, cols);
    for (const auto& D : ops) {
        if (D.n != n || D.d != d) throw DomainError("perp_in_S: operator shape mismatch");
        std::vector<LElem> lrow(cols, ext.zero());
        for (const auto& [t, c] : D.terms) {
            long long fact = 1;
            for (uint32_t i = 0; i < n; ++i) fact *= detail::falling(t[i], t[i]);
            lrow[idx.index_of(t)] = ext.mul(c, ext.from_int(fact));
        }
        for (uint32_t coord = 0; coord < ext.n(); ++coord) {
            std::vector<Fq> row(cols);
            for (std::size_t j = 0; j < cols; ++j) row[j] = lrow[j][coord];
            cond.append_row(row);
        }
    }
    const Mat<Fq> ker = kernel_basis(f, std::move(cond));
    std::vector<FPoly> out;
    out.reserve(ker.rows());
    for (std::size_t i = 0; i < ker.rows(); ++i)
        out.push_back(poly_from_row(f, ker.row(i), n, d, idx));
    return out;
}

std::vector<FPoly> coeff_decompose(const ExtField& ext, const LPoly& h, const LBasis& alpha) {
    const uint32_t n_ext = ext.n();
    std::vector<FPoly> out(n_ext, FPoly{h.n, h.d, {}});
    for (const auto& [e, c] : h.terms) {
        const std::vector<Fq> coords = alpha.expand(ext, c);
        for (uint32_t i = 0; i < n_ext; ++i)
            if (!ext.base().is_zero(coords[i])) out[i].terms.emplace(e, coords[i]);
    }
    return out;
}

FPoly substitute(const BaseField& f, const FPoly& poly, const Mat<Fq>& A) {
    const uint32_t n = poly.n;
    if (A.rows() != n || A.cols() != n) throw DomainError("substitute: matrix must be n x n");
    // x_i |-> column i of A as a linear form
    std::vector<FPoly> images;
    images.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        std::vector<Fq> col(n);
        for (uint32_t j = 0; j < n; ++j) col[j] = A.at(j, i);
        images.push_back(linear_form(f, col));
    }
    FPoly out{n, poly.d, {}};
    for (const auto& [t, c] : poly.terms) {
        FPoly term{n, 0, {{Exponents(n, 0), c}}};
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t rep = 0; rep < t[i]; ++rep) term = poly_mul(f, term, images[i]);
        out = poly_add(f, out, term);
    }
    return out;
}

Mat<Fq> catalecticant(const BaseField& f, const FPoly& poly) {
    const uint32_t n = poly.n;
    if (poly.d == 0) throw DomainError("catalecticant: degree must be >= 1");
    const MonomialIndexer idx(n, poly.d - 1);
    Mat<Fq> C(n, idx.size(), f.zero());
    Exponents e(n);
    for (const auto& [t, c] : poly.terms) {
        for (uint32_t i = 0; i < n; ++i) {
            if (t[i] == 0) continue;
            e = t;
            e[i] -= 1;
            const std::size_t j = idx.index_of(e);
            C.at(i, j) = f.add(C.at(i, j), f.mul(c, f.from_int(t[i])));
        }
    }
    return C;
}

} // namespace ermc
