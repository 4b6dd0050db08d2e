#include <doctest.h>

#include "ermc/codegen.hpp"
#include "ermc/essdecode.hpp"
#include "ermc/rng.hpp"

using namespace ermc;

namespace {

ExtField worked_example_field() {
    const BaseField f5(5);
    return ExtField(f5, 4, {f5.from_int(2), f5.from_int(4), f5.from_int(4), f5.zero(), f5.one()});
}

// the displayed generator matrix of C_3^{4,3}(alpha) over F_5
const int kGenMatrix[8][20] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 4, 4, 2, 2, 3, 1, 3, 4, 2, 3, 3, 4},
    {0, 1, 0, 0, 0, 0, 0, 0, 1, 2, 1, 1, 3, 1, 1, 1, 0, 4, 2, 4},
    {0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 3, 0, 1, 4, 4, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 3, 0, 1, 4, 4},
    {0, 0, 0, 0, 1, 0, 0, 0, 4, 4, 1, 3, 4, 3, 1, 1, 3, 0, 4, 1},
    {0, 0, 0, 0, 0, 1, 0, 0, 1, 3, 1, 0, 1, 2, 2, 4, 3, 3, 3, 4},
    {0, 0, 0, 0, 0, 0, 1, 0, 4, 3, 0, 0, 0, 0, 3, 3, 0, 1, 3, 1},
    {0, 0, 0, 0, 0, 0, 0, 1, 3, 3, 1, 0, 1, 4, 4, 4, 2, 0, 2, 4}};

} // namespace

TEST_CASE("x_set enumeration") {
    CHECK(x_set(1, 3) == std::vector<std::vector<uint32_t>>{{0}});
    CHECK(x_set(2, 3) == std::vector<std::vector<uint32_t>>{{0, 0}, {0, 1}});
    CHECK(x_set(3, 3) ==
          std::vector<std::vector<uint32_t>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}});
    CHECK(x_set(2, 1).empty());
    SUBCASE("|X_{k,rho}| = C(k-1+rho-2, k-1)") {
        for (uint32_t k = 1; k <= 5; ++k)
            for (uint32_t rho = 2; rho <= 6; ++rho)
                CHECK(x_set(k, rho).size() ==
                      static_cast<std::size_t>(binomial(k - 1 + rho - 2, k - 1)));
    }
    SUBCASE("tuples are nondecreasing and lexicographically ordered") {
        const auto xs = x_set(4, 5);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            CHECK(xs[i][0] == 0);
            for (std::size_t j = 1; j < xs[i].size(); ++j) CHECK(xs[i][j - 1] <= xs[i][j]);
            if (i) CHECK(xs[i - 1] < xs[i]);
        }
    }
}

TEST_CASE("defining operators") {
    const ExtField ext = worked_example_field();
    SUBCASE("rho = 2 with equal bases yields the single operator alpha(d)^d") {
        const CodeParams params(ext, 3, 2);
        const auto ops = defining_operators(params);
        REQUIRE(ops.size() == 1);
        const auto direct = product_of_linear_diffops(
            ext, {params.alpha().elements(), params.alpha().elements(), params.alpha().elements()});
        CHECK(ops[0] == direct);
    }
    SUBCASE("(4,3,3) has three operators") {
        CHECK(defining_operators(CodeParams(ext, 3, 3)).size() == 3);
    }
    SUBCASE("rho = 1 has none") {
        CHECK(defining_operators(CodeParams(ext, 3, 1)).empty());
    }
    SUBCASE("d = 1 gives the zero code") {
        const CodeParams params(ext, 1, 2);
        const EssCode code = construct_code(params);
        CHECK(code.k() == 0);
    }
    SUBCASE("distinct bases use the full grid") {
        std::vector<LBasis> bases{power_basis(ext), power_basis(ext),
                                  LBasis(ext, frobenius_vec(ext, power_basis(ext).elements(), 1))};
        const CodeParams params(ext, 3, 3, std::move(bases));
        CHECK(!params.equal_bases());
        CHECK(defining_operators(params).size() == 4); // (rho-1)^(d-1) = 2^2
    }
}

TEST_CASE("construct_code reproduces the worked generator matrix bit for bit") {
    const ExtField ext = worked_example_field();
    const EssCode code = construct_code(CodeParams(ext, 3, 3));
    REQUIRE(code.k() == 8);
    const Mat<Fq> gen = generator_matrix(code);
    REQUIRE(gen.rows() == 8);
    REQUIRE(gen.cols() == 20);
    const BaseField& f = ext.base();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 20; ++j) CHECK(gen.at(i, j) == f.from_int(kGenMatrix[i][j]));

    SUBCASE("row one is the displayed polynomial with essential rank four") {
        const FPoly& first = code.basis[0];
        const FPoly parsed = [&] {
            FPoly p{4, 3, {}};
            const auto add = [&](std::initializer_list<uint8_t> e, long long c) {
                p.terms.emplace(Exponents(e), f.from_int(c));
            };
            add({3, 0, 0, 0}, 1);
            add({1, 0, 1, 1}, -1);
            add({1, 0, 0, 2}, -1);
            add({0, 3, 0, 0}, 2);
            add({0, 2, 1, 0}, 2);
            add({0, 2, 0, 1}, -2);
            add({0, 1, 2, 0}, 1);
            add({0, 1, 1, 1}, -2);
            add({0, 1, 0, 2}, -1);
            add({0, 0, 3, 0}, 2);
            add({0, 0, 2, 1}, -2);
            add({0, 0, 1, 2}, -2);
            add({0, 0, 0, 3}, -1);
            return p;
        }();
        CHECK(first == parsed);
        CHECK(ess_rank(f, first) == 4);
    }
    SUBCASE("round trip: matrix rows regenerate the basis") {
        const MonomialIndexer idx(4, 3);
        for (uint32_t i = 0; i < code.k(); ++i)
            CHECK(poly_from_row(f, gen.row(i), 4, 3, idx) == code.basis[i]);
    }
}

TEST_CASE("rho = 1 gives the whole ambient space") {
    const ExtField ext = worked_example_field();
    const EssCode code = construct_code(CodeParams(ext, 3, 1));
    CHECK(code.k() == monomial_count(4, 3));
}

TEST_CASE("the worked code is nondegenerate") {
    const EssCode code = construct_code(CodeParams(worked_example_field(), 3, 3));
    CHECK(code_ess_variables(code).dim() == 4);
    CHECK(is_nondegenerate(code));
}

TEST_CASE("generator matrix of the zero code is empty") {
    const ExtField ext = worked_example_field();
    const EssCode code = construct_code(CodeParams(ext, 1, 2)); // d = 1 code is {0}
    const Mat<Fq> gen = generator_matrix(code);
    CHECK(gen.rows() == 0);
}

TEST_CASE("designed minimum distance holds beyond the flagship instance") {
    SUBCASE("exhaustive for (3,2,2) over F_3") {
        const BaseField f3(3);
        const ExtField ext(f3, 3, find_irreducible(f3, 3));
        const EssCode code = construct_code(CodeParams(ext, 2, 2));
        REQUIRE(code.k() >= 1);
        CHECK(code_min_distance_bruteforce(code).min_distance >= 2);
    }
    SUBCASE("randomized for (5,3,3) over F_5") {
        const BaseField f5(5);
        const ExtField ext(f5, 5, find_irreducible(f5, 5));
        const EssCode code = construct_code(CodeParams(ext, 3, 3));
        Rng rng(33);
        for (int trial = 0; trial < 10000; ++trial) {
            std::vector<Fq> msg(code.k(), f5.zero());
            bool nonzero = false;
            while (!nonzero)
                for (auto& c : msg) {
                    c = f5.from_index(rng.next_below(5));
                    nonzero |= !f5.is_zero(c);
                }
            CHECK(ess_rank(f5, encode_message(code, msg)) >= 3);
        }
    }
}

TEST_CASE("construction dimension respects the lower bound s(n,d,rho)") {
    for (uint32_t p : {5u, 7u}) {
        const BaseField f(p);
        for (uint32_t n = 2; n <= 4; ++n) {
            const ExtField ext(f, n, find_irreducible(f, n));
            for (uint32_t d = 2; d <= 3; ++d) {
                if (p <= d) continue;
                for (uint32_t rho = 1; rho <= n; ++rho) {
                    const EssCode code = construct_code(CodeParams(ext, d, rho));
                    CHECK(static_cast<long long>(code.k()) >= dim_lower_bound_s(n, d, rho));
                    CHECK(static_cast<long long>(code.k()) <= singleton_like_bound(n, d, rho));
                }
            }
        }
    }
}

TEST_CASE("codewords are killed by the full unreduced operator family") {
    const ExtField ext = worked_example_field();
    const CodeParams params(ext, 3, 3);
    const EssCode code = construct_code(params);
    Rng rng(31);
    const auto& alpha = params.alpha().elements();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Fq> msg(code.k());
        for (auto& c : msg) c = ext.base().from_index(rng.next_below(5));
        const FPoly cw = encode_message(code, msg);
        // every tuple in {0..rho-2}^d, not only the reduced ones
        for (uint32_t r1 = 0; r1 <= 1; ++r1)
            for (uint32_t r2 = 0; r2 <= 1; ++r2)
                for (uint32_t r3 = 0; r3 <= 1; ++r3) {
                    const auto op = product_of_linear_diffops(
                        ext, {frobenius_vec(ext, alpha, r1), frobenius_vec(ext, alpha, r2),
                              frobenius_vec(ext, alpha, r3)});
                    CHECK(apply_diffop(ext, op, cw).terms.empty());
                }
    }
}

TEST_CASE("replacing every basis by B alpha transports the code by (B^T)^{-1}") {
    // chain rule: v(d) o (f(xM)) = ((M^T v)(d) o f)(xM), so changing all d bases
    // by one F-matrix B moves the code by the substitution (B^T)^{-1}
    const ExtField ext = worked_example_field();
    const BaseField& f = ext.base();
    const uint32_t n = 4;
    Rng rng(32);

    const LBasis alpha = power_basis(ext);
    for (const auto& [d, rho] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 3}, {3, 3}}) {
        Mat<Fq> B(n, n);
        do {
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; j < n; ++j) B.at(i, j) = f.from_index(rng.next_below(5));
        } while (rank(f, B) < n);

        std::vector<LElem> beta_elems;
        for (uint32_t i = 0; i < n; ++i) {
            LElem b = ext.zero();
            for (uint32_t j = 0; j < n; ++j) b = ext.add(b, ext.scale(alpha[j], B.at(i, j)));
            beta_elems.push_back(std::move(b));
        }
        const LBasis beta(ext, beta_elems);

        const EssCode base_code =
            construct_code(CodeParams(ext, d, rho, std::vector<LBasis>(d, alpha)));
        const EssCode moved_code =
            construct_code(CodeParams(ext, d, rho, std::vector<LBasis>(d, beta)));
        Mat<Fq> bt(n, n);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) bt.at(i, j) = B.at(j, i);
        const EssCode transported = apply_equivalence(base_code, inverse(f, bt), f.one());
        CHECK(transported.basis == moved_code.basis);
        CHECK(moved_code.k() == base_code.k());
    }
}

TEST_CASE("codimension conjecture report") {
    const ExtField ext = worked_example_field();
    SUBCASE("(4,3,3): actual codimension 12 equals 4 times 3 orbits") {
        const auto rep = codim_conjecture_report(CodeParams(ext, 3, 3));
        CHECK(rep.actual_codim == 12);
        CHECK(rep.predicted_codim == 12);
        CHECK(rep.match);
    }
    SUBCASE("rho = 2 predicts n") {
        const auto rep = codim_conjecture_report(CodeParams(ext, 3, 2));
        CHECK(rep.predicted_codim == 4);
        CHECK(rep.match);
    }
    SUBCASE("rho = 1 is vacuous") {
        const auto rep = codim_conjecture_report(CodeParams(ext, 3, 1));
        CHECK(rep.actual_codim == 0);
        CHECK(rep.predicted_codim == 0);
        CHECK(rep.match);
    }
}

TEST_CASE("parameter validation") {
    const ExtField ext = worked_example_field();
    CHECK_THROWS_AS(CodeParams(ext, 3, 0), DomainError);
    CHECK_THROWS_AS(CodeParams(ext, 3, 5), DomainError);
    CHECK_THROWS_AS(CodeParams(ext, 5, 3), CharTooSmallError); // p = 5 = d
}
