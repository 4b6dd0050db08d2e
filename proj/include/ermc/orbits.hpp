#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ermc/errors.hpp"

namespace ermc {

/// A d-element multiset over Z/nZ in canonical sorted form.
struct MultisetZn {
    uint32_t n = 0;
    std::vector<uint32_t> elems; // sorted, entries < n

    friend bool operator==(const MultisetZn& a, const MultisetZn& b) {
        return a.n == b.n && a.elems == b.elems;
    }
    friend bool operator<(const MultisetZn& a, const MultisetZn& b) { return a.elems < b.elems; }
};

MultisetZn make_multiset(uint32_t n, std::vector<uint32_t> elems);

/// x + S = {{x + y mod n : y in S}}.
MultisetZn shift(const MultisetZn& s, long long x);

/// Lexicographic minimum of the sorted multiset over all n shifts.
MultisetZn canonical_orbit_rep(const MultisetZn& s);

/// Number of Z-orbits of d-element multisets over Z/nZ meeting the family R of
/// multisets with entries in {0..k} containing 0, by direct enumeration of R.
/// Requires n > k >= 0 and d >= 2.
uint64_t orbit_count_bruteforce(uint32_t n, uint32_t d, uint32_t k, uint64_t budget = 2'000'000);

/// Closed forms: C(d-1+k, d-1) when 2k < n; the subtraction formula when
/// n/2 <= k < 2n/3; nullopt (unsupported) for k >= 2n/3.
std::optional<long long> orbit_count_closed(uint32_t n, uint32_t d, uint32_t k);

/// Occurrence-count tuples (n_0..n_a), (m_0..m_b) with n_0, m_0 >= 1.
using PiTuple = std::vector<uint32_t>;

/// The multiset union_i {{i}}^{n_i} u union_j {{k-b+j}}^{m_j}; defined for
/// n/2 <= k < 2n/3 with a + b = 2k - n, total count d, and distinct tuples.
MultisetZn pi_encode(uint32_t n, uint32_t d, uint32_t k, const PiTuple& first,
                     const PiTuple& second);

/// Inverse of pi_encode on its image; throws DomainError off the image.
std::pair<PiTuple, PiTuple> pi_decode(uint32_t n, uint32_t d, uint32_t k, const MultisetZn& s);

} // namespace ermc
