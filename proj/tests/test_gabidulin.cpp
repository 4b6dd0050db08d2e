#include <doctest.h>

#include "ermc/codegen.hpp"
#include "ermc/gabidulin.hpp"
#include "ermc/rng.hpp"

using namespace ermc;

namespace {

ExtField f5_4() {
    const BaseField f5(5);
    return ExtField(f5, 4, {f5.from_int(2), f5.from_int(4), f5.from_int(4), f5.zero(), f5.one()});
}

LElem random_elem(const ExtField& ext, Rng& rng) {
    LElem e(ext.n());
    for (auto& c : e) c = ext.base().from_index(rng.next_below(ext.base().q()));
    return e;
}

// rank-r error vector: sum of r products (random L value) x (random F row)
std::vector<LElem> random_error_vector(const ExtField& ext, Rng& rng, uint32_t r) {
    const uint32_t n = ext.n();
    std::vector<LElem> e(n, ext.zero());
    while (rank_weight(ext, e) != r) {
        e.assign(n, ext.zero());
        for (uint32_t l = 0; l < r; ++l) {
            const LElem val = random_elem(ext, rng);
            for (uint32_t j = 0; j < n; ++j) {
                const Fq c = ext.base().from_index(rng.next_below(ext.base().q()));
                e[j] = ext.add(e[j], ext.scale(val, c));
            }
        }
    }
    return e;
}

} // namespace

TEST_CASE("rank_weight") {
    const ExtField ext = f5_4();
    CHECK(rank_weight(ext, std::vector<LElem>(4, ext.zero())) == 0);
    SUBCASE("equal nonzero entries have rank one") {
        const LElem g = ext.gen();
        CHECK(rank_weight(ext, {g, g, g, g}) == 1);
    }
    CHECK(rank_weight(ext, power_basis(ext).elements()) == 4);
}

TEST_CASE("gabidulin context invariants") {
    const ExtField ext = f5_4();
    const GabCodeCtx ctx(ext, 3, power_basis(ext).elements());
    CHECK(ctx.radius == 1);
    CHECK(ctx.H.rows() == 2);
    SUBCASE("H rows are frobenius shifts of beta") {
        for (uint32_t i = 0; i < 2; ++i)
            for (uint32_t j = 0; j < 4; ++j)
                CHECK(ctx.H.at(i, j) == ext.frobenius(ctx.beta[j], i));
    }
    SUBCASE("gamma is F-independent") { CHECK(rank_weight(ext, ctx.gamma) == 4); }
    CHECK_THROWS_AS(GabCodeCtx(ext, 1, power_basis(ext).elements()), DomainError);
    CHECK_THROWS_AS(GabCodeCtx(ext, 3, std::vector<LElem>(4, ext.one())), SingularBasisError);
}

TEST_CASE("encode lands in the kernel of H") {
    const ExtField ext = f5_4();
    const GabCodeCtx ctx(ext, 3, power_basis(ext).elements());
    Rng rng(41);
    SUBCASE("zero polynomial encodes to zero") {
        const auto c = gab_encode(ctx, make_skew(ext, {}));
        CHECK(rank_weight(ext, c) == 0);
    }
    SUBCASE("the constant polynomial 1 evaluates to gamma itself") {
        const auto c = gab_encode(ctx, make_skew(ext, {ext.one()}));
        CHECK(c == ctx.gamma);
    }
    SUBCASE("random codewords have zero syndrome") {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<LElem> coeffs;
            for (uint32_t i = 0; i <= ext.n() - ctx.rho; ++i) coeffs.push_back(random_elem(ext, rng));
            const auto c = gab_encode(ctx, make_skew(ext, coeffs));
            for (const auto& s : syndrome(ctx, c)) CHECK(ext.is_zero(s));
        }
    }
    SUBCASE("degree bound is enforced") {
        std::vector<LElem> coeffs(ext.n() - ctx.rho + 2, ext.one());
        CHECK_THROWS_AS(gab_encode(ctx, make_skew(ext, coeffs)), DomainError);
    }
}

TEST_CASE("syndrome is linear and reads columns on unit vectors") {
    const ExtField ext = f5_4();
    const GabCodeCtx ctx(ext, 3, power_basis(ext).elements());
    Rng rng(42);
    SUBCASE("unit vector picks out a column of H") {
        for (uint32_t j = 0; j < 4; ++j) {
            std::vector<LElem> e(4, ext.zero());
            e[j] = ext.one();
            const auto s = syndrome(ctx, e);
            for (uint32_t i = 0; i < 2; ++i) CHECK(s[i] == ext.frobenius(ctx.beta[j], i));
        }
    }
    SUBCASE("additivity") {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<LElem> u, v;
            for (int j = 0; j < 4; ++j) {
                u.push_back(random_elem(ext, rng));
                v.push_back(random_elem(ext, rng));
            }
            std::vector<LElem> w;
            for (int j = 0; j < 4; ++j) w.push_back(ext.add(u[j], v[j]));
            const auto su = syndrome(ctx, u), sv = syndrome(ctx, v), sw = syndrome(ctx, w);
            for (int i = 0; i < 2; ++i) CHECK(sw[i] == ext.add(su[i], sv[i]));
        }
    }
}

TEST_CASE("syndrome decoding round trips") {
    const ExtField ext = f5_4();
    const GabCodeCtx ctx(ext, 3, power_basis(ext).elements());
    Rng rng(43);
    SUBCASE("zero syndrome decodes to zero") {
        const auto v = syndrome_decode(ctx, std::vector<LElem>(2, ext.zero()));
        REQUIRE(v.has_value());
        CHECK(rank_weight(ext, *v) == 0);
    }
    SUBCASE("structured rank-one error") {
        // e = eps * (x_1, ..., x_n) with x over F
        const LElem eps = ext.gen();
        std::vector<LElem> e;
        for (uint32_t j = 0; j < 4; ++j)
            e.push_back(ext.scale(eps, ext.base().from_int(static_cast<long long>(j) + 1)));
        const auto dec = syndrome_decode(ctx, syndrome(ctx, e));
        REQUIRE(dec.has_value());
        CHECK(*dec == e);
    }
    SUBCASE("random rank-(<= t) errors, 200 trials") {
        for (int trial = 0; trial < 200; ++trial) {
            const uint32_t r = static_cast<uint32_t>(rng.next_below(ctx.radius + 1));
            const auto e = random_error_vector(ext, rng, r);
            const auto dec = syndrome_decode(ctx, syndrome(ctx, e));
            REQUIRE(dec.has_value());
            CHECK(*dec == e);
        }
    }
    SUBCASE("decoder runs are deterministic") {
        const auto e = random_error_vector(ext, rng, 1);
        const auto s = syndrome(ctx, e);
        CHECK(syndrome_decode(ctx, s) == syndrome_decode(ctx, s));
    }
    SUBCASE("a rank-2 error is outside the radius and reported as such") {
        // syndromes of rank-2 errors cannot match any rank-<=1 vector (distance 3)
        const auto e = random_error_vector(ext, rng, 2);
        const auto dec = syndrome_decode(ctx, syndrome(ctx, e));
        if (dec) CHECK(rank_weight(ext, *dec) <= ctx.radius); // never guesses beyond radius
    }
}

TEST_CASE("minimum rank distance of the evaluation code") {
    SUBCASE("exhaustive for (n, rho) = (3, 2) over F_27") {
        const BaseField f3(3);
        const ExtField ext(f3, 3, find_irreducible(f3, 3));
        const GabCodeCtx ctx(ext, 2, power_basis(ext).elements());
        // all q^n * q^n skew polynomials of degree <= 1
        uint32_t min_rank = 99;
        for (uint64_t i0 = 0; i0 < 27; ++i0)
            for (uint64_t i1 = 0; i1 < 27; ++i1) {
                if (i0 == 0 && i1 == 0) continue;
                LElem c0(3), c1(3);
                uint64_t t0 = i0, t1 = i1;
                for (int k = 0; k < 3; ++k) {
                    c0[k] = f3.from_index(t0 % 3);
                    c1[k] = f3.from_index(t1 % 3);
                    t0 /= 3;
                    t1 /= 3;
                }
                const auto cw = gab_encode(ctx, make_skew(ext, {c0, c1}));
                min_rank = std::min(min_rank, rank_weight(ext, cw));
            }
        CHECK(min_rank == 2);
    }
    SUBCASE("randomized for (4, 3) over F_5^4") {
        const ExtField ext = f5_4();
        const GabCodeCtx ctx(ext, 3, power_basis(ext).elements());
        Rng rng(44);
        for (int trial = 0; trial < 10000; ++trial) {
            std::vector<LElem> coeffs(2, ext.zero());
            while (ext.is_zero(coeffs[0]) && ext.is_zero(coeffs[1])) {
                coeffs[0] = random_elem(ext, rng);
                coeffs[1] = random_elem(ext, rng);
            }
            CHECK(rank_weight(ext, gab_encode(ctx, make_skew(ext, coeffs))) >= 3);
        }
    }
}

TEST_CASE("transpose rule through the endomorphism square") {
    // (mu sigma^k)^T = sigma^{-k}(mu) sigma^{-k} as matrices A_{ij} = Tr(phi(alpha_i) alpha_j)
    const ExtField ext = f5_4();
    const BaseField& f = ext.base();
    const LBasis alpha = power_basis(ext);
    Rng rng(45);
    const auto endo_matrix = [&](const LElem& mu, long long k) {
        Mat<Fq> A(4, 4, f.zero());
        for (uint32_t i = 0; i < 4; ++i) {
            const LElem img = ext.mul(mu, ext.frobenius(alpha[i], k));
            for (uint32_t j = 0; j < 4; ++j) A.at(i, j) = ext.trace(ext.mul(img, alpha[j]));
        }
        return A;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const LElem mu = random_elem(ext, rng);
        const long long k = static_cast<long long>(rng.next_below(4));
        const Mat<Fq> lhs = endo_matrix(mu, k);
        const Mat<Fq> rhs = endo_matrix(ext.frobenius(mu, -k), -k);
        for (uint32_t i = 0; i < 4; ++i)
            for (uint32_t j = 0; j < 4; ++j) CHECK(lhs.at(i, j) == rhs.at(j, i));
    }
}

TEST_CASE("symmetric gabidulin space for d = 2") {
    const ExtField ext = f5_4();
    SUBCASE("l = 0 is the n-dimensional space of multiplication endomorphisms") {
        const Mat<Fq> sym = symmetric_gabidulin_d2(ext, 0);
        CHECK(sym.rows() == 4);
    }
    SUBCASE("members are symmetric") {
        const Mat<Fq> sym = symmetric_gabidulin_d2(ext, 1);
        for (std::size_t r = 0; r < sym.rows(); ++r)
            for (uint32_t i = 0; i < 4; ++i)
                for (uint32_t j = 0; j < 4; ++j)
                    CHECK(sym.at(r, std::size_t(i) * 4 + j) == sym.at(r, std::size_t(j) * 4 + i));
    }
    SUBCASE("equals the catalecticant image of C_{n-2l}^{n,2}(sigma^{n-2-l}(beta), gamma)") {
        const uint32_t n = 4, ell = 1;
        const BaseField& f = ext.base();
        const LBasis alpha = power_basis(ext);
        const LBasis beta = dual_basis(ext, alpha);
        const auto gamma = moore_kernel_vector(ext, alpha.elements(), n - 1);
        std::vector<LBasis> bases;
        bases.emplace_back(ext, frobenius_vec(ext, beta.elements(), n - 2 - ell));
        bases.emplace_back(ext, gamma);
        const EssCode code = construct_code(CodeParams(ext, 2, n - 2 * ell, std::move(bases)));
        Mat<Fq> flat(0, 16);
        for (const auto& cw : code.basis) {
            const Mat<Fq> C = catalecticant(f, cw);
            std::vector<Fq> row;
            for (uint32_t i = 0; i < 4; ++i)
                for (uint32_t j = 0; j < 4; ++j) row.push_back(C.at(i, j));
            flat.append_row(row);
        }
        CHECK(symmetric_gabidulin_d2(ext, ell) == row_space_basis(f, std::move(flat)));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(symmetric_gabidulin_d2(ext, 2), DomainError); // 2l > n-2
        const BaseField f2(2);
        const ExtField e2(f2, 4, find_irreducible(f2, 4));
        CHECK_THROWS_AS(symmetric_gabidulin_d2(e2, 0), CharTooSmallError);
    }
}
