#include <doctest.h>

#include <array>
#include <set>
#include <functional>

#include "ermc/orbits.hpp"
#include "ermc/polyring.hpp" // binomial

using namespace ermc;

TEST_CASE("shift acts on canonical multisets") {
    const MultisetZn s = make_multiset(4, {0, 2});
    CHECK(shift(s, 0) == s);
    CHECK(shift(s, 4) == s);
    CHECK(shift(s, 2) == s); // 2+0=2, 2+2=0
    CHECK(shift(s, 1) == make_multiset(4, {1, 3}));
    CHECK(shift(shift(s, 1), 2) == shift(s, 3));
    CHECK(shift(s, -1) == shift(s, 3));
}

TEST_CASE("canonical orbit representatives are shift invariant") {
    const MultisetZn s = make_multiset(7, {1, 3, 6});
    const MultisetZn rep = canonical_orbit_rep(s);
    for (uint32_t x = 0; x < 7; ++x) CHECK(canonical_orbit_rep(shift(s, x)) == rep);
    // representative is the lexicographic minimum, so it starts at zero
    CHECK(rep.elems[0] == 0);
}

TEST_CASE("orbit counts by brute force") {
    CHECK(orbit_count_bruteforce(4, 2, 2) == 3);
    CHECK(orbit_count_bruteforce(7, 2, 3) == 4);
    CHECK(orbit_count_bruteforce(6, 2, 3) == 4);
    SUBCASE("budget and domain checks") {
        CHECK_THROWS_AS(orbit_count_bruteforce(4, 2, 4), DomainError);
        CHECK_THROWS_AS(orbit_count_bruteforce(12, 5, 7, 10), BudgetExceededError);
    }
}

TEST_CASE("closed forms") {
    CHECK(orbit_count_closed(7, 2, 3) == 4);  // 2k < n branch
    CHECK(orbit_count_closed(4, 2, 2) == 3);  // n = 2k branch
    CHECK(orbit_count_closed(6, 2, 3) == 4);
    CHECK(!orbit_count_closed(6, 2, 4).has_value()); // k >= 2n/3 unsupported
    CHECK(!orbit_count_closed(9, 3, 6).has_value());
    SUBCASE("matches brute force on a sweep") {
        for (uint32_t n = 2; n <= 9; ++n)
            for (uint32_t d = 2; d <= 4; ++d)
                for (uint32_t k = 0; k < n; ++k) {
                    const auto closed = orbit_count_closed(n, d, k);
                    if (!closed) continue;
                    CHECK(*closed == static_cast<long long>(orbit_count_bruteforce(n, d, k)));
                }
    }
}

TEST_CASE("pi encoding") {
    SUBCASE("n = 2k, d = 3: ((2),(1)) maps to {{0,0,k}}") {
        const MultisetZn s = pi_encode(8, 3, 4, {2}, {1});
        CHECK(s == make_multiset(8, {0, 0, 4}));
    }
    SUBCASE("round trips on valid inputs") {
        const uint32_t n = 8, d = 4, k = 5; // 2k-n = 2
        const std::vector<std::pair<PiTuple, PiTuple>> cases = {
            {{2, 1}, {1, 0}},     // a=1, b=1
            {{1}, {2, 0, 1}},     // a=0, b=2
            {{3, 0, 0}, {1}},     // a=2, b=0
        };
        for (const auto& [t1, t2] : cases) {
            if (t1 == t2) continue;
            if (t1.size() - 1 + t2.size() - 1 != 2 * k - n) continue;
            const MultisetZn s = pi_encode(n, d, k, t1, t2);
            const auto [b1, b2] = pi_decode(n, d, k, s);
            CHECK(b1 == t1);
            CHECK(b2 == t2);
        }
    }
    SUBCASE("orbit of the image meets R exactly twice, in the swapped pair") {
        const uint32_t n = 8, d = 4, k = 5;
        const PiTuple t1{2, 1}, t2{1, 0};
        const MultisetZn s = pi_encode(n, d, k, t1, t2);
        const MultisetZn swapped = pi_encode(n, d, k, t2, t1);
        uint32_t hits = 0;
        bool found_self = false, found_swapped = false;
        for (uint32_t x = 0; x < n; ++x) {
            const MultisetZn sh = shift(s, x);
            const bool in_R = sh.elems[0] == 0 && sh.elems.back() <= k &&
                              std::count(sh.elems.begin(), sh.elems.end(), 0) >= 1;
            if (in_R) {
                ++hits;
                found_self |= sh == s;
                found_swapped |= sh == swapped;
            }
        }
        CHECK(hits == 2);
        CHECK(found_self);
        CHECK(found_swapped);
    }
    SUBCASE("constraint violations throw") {
        CHECK_THROWS_AS(pi_encode(8, 4, 5, {1, 1}, {1, 1}), DomainError); // equal tuples
        CHECK_THROWS_AS(pi_encode(8, 4, 5, {0, 2}, {2}), DomainError);    // n_0 = 0
        CHECK_THROWS_AS(pi_encode(8, 4, 5, {2}, {2}), DomainError);       // a+b != 2k-n
        CHECK_THROWS_AS(pi_encode(10, 4, 4, {1}, {3}), DomainError);      // k < n/2
        CHECK_THROWS_AS(pi_decode(8, 4, 5, make_multiset(8, {1, 2, 3, 6})), DomainError);
    }
}

TEST_CASE("doubled-orbit count matches the subtraction term of the closed form") {
    // in the middle range, the elements of R whose orbit meets R twice are
    // counted by (2k-n+1) C(d-2+2k-n+1, d-2) - [2|d][2|n] C(d/2-1+k-n/2, d/2-1)
    for (const auto& [n, d, k] : std::vector<std::array<uint32_t, 3>>{
             {8, 4, 5}, {8, 3, 4}, {10, 4, 6}, {9, 3, 5}}) {
        if (!(2 * k >= n && 3 * k < 2 * n)) continue;
        long long doubled = 0;
        std::function<void(std::vector<uint32_t>&, uint32_t, uint32_t)> rec =
            [&](std::vector<uint32_t>& counts, uint32_t idx, uint32_t rem) {
                if (idx == k) {
                    counts[idx] = rem;
                    if (counts[0] >= 1) {
                        std::vector<uint32_t> elems;
                        for (uint32_t i = 0; i <= k; ++i)
                            for (uint32_t c = 0; c < counts[i]; ++c) elems.push_back(i);
                        const MultisetZn s = make_multiset(n, elems);
                        std::set<std::vector<uint32_t>> in_R;
                        for (uint32_t x = 0; x < n; ++x) {
                            const MultisetZn sh = shift(s, x);
                            if (sh.elems[0] == 0 && sh.elems.back() <= k) in_R.insert(sh.elems);
                        }
                        if (in_R.size() > 1) ++doubled;
                    }
                    return;
                }
                for (uint32_t v = 0; v <= rem; ++v) {
                    counts[idx] = v;
                    rec(counts, idx + 1, rem - v);
                }
            };
        std::vector<uint32_t> counts(k + 1, 0);
        rec(counts, 0, d);
        const long long width = 2ll * k - n + 1;
        long long expect = width * binomial(d - 2 + width, d - 2);
        if (d % 2 == 0 && n % 2 == 0) expect -= binomial(d / 2 - 1 + k - n / 2, d / 2 - 1);
        CHECK(doubled == expect);
    }
}

TEST_CASE("orbit sizes divide n") {
    for (uint32_t n = 2; n <= 8; ++n)
        for (uint32_t d = 2; d <= 3; ++d) {
            // enumerate a handful of multisets and measure their orbit sizes
            std::vector<uint32_t> elems(d, 0);
            for (uint32_t seed = 0; seed < 20; ++seed) {
                for (uint32_t i = 0; i < d; ++i) elems[i] = (seed * (i + 3) + i) % n;
                const MultisetZn s = make_multiset(n, elems);
                uint32_t orbit = 0;
                for (uint32_t x = 0; x < n; ++x)
                    if (shift(s, x) == s) ++orbit; // stabilizer size
                CHECK(n % orbit == 0);
            }
        }
}
