#include "ermc/orbits.hpp"

#include <algorithm>
#include <set>

#include "ermc/polyring.hpp" // binomial

namespace ermc {

MultisetZn make_multiset(uint32_t n, std::vector<uint32_t> elems) {
    if (n == 0) throw DomainError("multiset: modulus must be positive");
    for (auto& e : elems) e %= n;
    std::sort(elems.begin(), elems.end());
    return MultisetZn{n, std::move(elems)};
}

MultisetZn shift(const MultisetZn& s, long long x) {
    const long long n = s.n;
    const uint32_t r = static_cast<uint32_t>(((x % n) + n) % n);
    std::vector<uint32_t> out;
    out.reserve(s.elems.size());
    for (auto e : s.elems) out.push_back((e + r) % s.n);
    std::sort(out.begin(), out.end());
    return MultisetZn{s.n, std::move(out)};
}

MultisetZn canonical_orbit_rep(const MultisetZn& s) {
    MultisetZn best = shift(s, 0);
    for (uint32_t x = 1; x < s.n; ++x) {
        MultisetZn cand = shift(s, x);
        if (cand < best) best = std::move(cand);
    }
    return best;
}

namespace {

// enumerate occurrence tuples (c_0..c_k) with c_0 >= 1 and sum d
void for_each_r_tuple(uint32_t d, uint32_t k, const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> c(k + 1, 0);
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t idx, uint32_t rem) {
        if (idx == k) {
            c[idx] = rem;
            if (c[0] >= 1) fn(c);
            return;
        }
        for (uint32_t v = 0; v <= rem; ++v) {
            c[idx] = v;
            rec(idx + 1, rem - v);
        }
    };
    rec(0, d);
}

MultisetZn multiset_of_counts(uint32_t n, const std::vector<uint32_t>& counts) {
    std::vector<uint32_t> elems;
    for (uint32_t i = 0; i < counts.size(); ++i)
        for (uint32_t c = 0; c < counts[i]; ++c) elems.push_back(i);
    return MultisetZn{n, std::move(elems)};
}

} // namespace

uint64_t orbit_count_bruteforce(uint32_t n, uint32_t d, uint32_t k, uint64_t budget) {
    if (d < 2) throw DomainError("orbit count: need d >= 2");
    if (k >= n) throw DomainError("orbit count: need n > k >= 0");
    if (static_cast<uint64_t>(binomial(d + k, d)) > budget)
        throw BudgetExceededError("orbit count: family too large");

    std::set<MultisetZn> reps;
    uint64_t family_size = 0;
    for_each_r_tuple(d, k, [&](const std::vector<uint32_t>& counts) {
        ++family_size;
        reps.insert(canonical_orbit_rep(multiset_of_counts(n, counts)));
    });
    if (family_size != static_cast<uint64_t>(binomial(d - 1 + k, d - 1)))
        throw DomainError("orbit count: family size mismatch (internal)");
    return reps.size();
}

std::optional<long long> orbit_count_closed(uint32_t n, uint32_t d, uint32_t k) {
    if (d < 2) throw DomainError("orbit count: need d >= 2");
    if (k >= n) throw DomainError("orbit count: need n > k >= 0");
    const long long all = binomial(d - 1 + k, d - 1);
    if (2ll * k < n) return all;
    if (3ll * k < 2ll * n) {
        const long long width = 2ll * k - n + 1;
        long long doubled = width * binomial(d - 2 + width, d - 2);
        if (d % 2 == 0 && n % 2 == 0) doubled -= binomial(d / 2 - 1 + k - n / 2, d / 2 - 1);
        return all - doubled / 2;
    }
    return std::nullopt; // nothing is proved for k >= 2n/3
}

MultisetZn pi_encode(uint32_t n, uint32_t d, uint32_t k, const PiTuple& first,
                     const PiTuple& second) {
    if (!(2 * k >= n && 3 * k < 2 * n)) throw DomainError("pi: requires n/2 <= k < 2n/3");
    if (first.empty() || second.empty()) throw DomainError("pi: tuples must be nonempty");
    const uint32_t a = static_cast<uint32_t>(first.size()) - 1;
    const uint32_t b = static_cast<uint32_t>(second.size()) - 1;
    if (a + b != 2 * k - n) throw DomainError("pi: tuple lengths must satisfy a + b = 2k - n");
    if (first[0] < 1 || second[0] < 1) throw DomainError("pi: leading counts must be >= 1");
    uint64_t total = 0;
    for (auto c : first) total += c;
    for (auto c : second) total += c;
    if (total != d) throw DomainError("pi: counts must sum to d");
    if (first == second) throw DomainError("pi: tuples must be distinct");

    std::vector<uint32_t> elems;
    for (uint32_t i = 0; i <= a; ++i)
        for (uint32_t c = 0; c < first[i]; ++c) elems.push_back(i);
    for (uint32_t j = 0; j <= b; ++j)
        for (uint32_t c = 0; c < second[j]; ++c) elems.push_back(k - b + j);
    std::sort(elems.begin(), elems.end());
    return MultisetZn{n, std::move(elems)};
}

std::pair<PiTuple, PiTuple> pi_decode(uint32_t n, uint32_t d, uint32_t k, const MultisetZn& s) {
    if (!(2 * k >= n && 3 * k < 2 * n)) throw DomainError("pi: requires n/2 <= k < 2n/3");
    if (s.n != n || s.elems.size() != d) throw DomainError("pi: multiset shape mismatch");
    // x = n - min{y in S : y >= n-k}; then b = x - (n-k), a = k - x
    uint32_t min_high = n;
    for (auto e : s.elems)
        if (e >= n - k) {
            min_high = std::min(min_high, e);
        }
    if (min_high == n) throw DomainError("pi: multiset not in the image (no high block)");
    const uint32_t x = n - min_high;
    if (x < n - k || x > k) throw DomainError("pi: multiset not in the image");
    const uint32_t b = x - (n - k);
    const uint32_t a = k - x;

    PiTuple first(a + 1, 0), second(b + 1, 0);
    for (auto e : s.elems) {
        if (e <= a)
            ++first[e];
        else if (e >= k - b && e <= k)
            ++second[e - (k - b)];
        else
            throw DomainError("pi: multiset not in the image (stray element)");
    }
    if (first[0] < 1 || second[0] < 1 || first == second)
        throw DomainError("pi: multiset not in the image");
    return {first, second};
}

} // namespace ermc
