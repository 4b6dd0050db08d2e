#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ermc/codegen.hpp"
#include "ermc/essrank.hpp"
#include "ermc/gabidulin.hpp"
#include "ermc/polyring.hpp"
#include "ermc/rng.hpp"

namespace ermc {

/// u-syndromes s_u = Z_d^u(d) o F of a received polynomial, keyed by the sorted
/// tuple; intermediate layers Z_k^u(d) o F are kept for diagnostics.
struct SyndromeTable {
    std::map<std::vector<uint32_t>, LElem> values;                 // keys in X_{d,rho}
    std::map<std::vector<uint32_t>, LPoly> intermediate;           // keys in X_{k,rho}, k < d

    /// Lookup of s_v for any tuple v that reorders into X_{d,rho}.
    const LElem& lookup(std::vector<uint32_t> v) const;
    bool all_zero(const ExtField& ext) const;
};

/// All u-syndromes, computed layer by layer: each step applies one linear
/// operator sigma^{u_k}(alpha)(d) to the previous layer's polynomial.
SyndromeTable compute_syndromes(const FPoly& received, const CodeParams& params);

/// Decoding context of Algorithm 1: the Gabidulin instance with beta = sigma^{-rho+2}(alpha).
GabCodeCtx decoding_context(const CodeParams& params);

/// Span of the error's essential variables, recovered via one Gabidulin
/// syndrome decode per tuple in X_{d-1,rho}. Throws DecodingFailure when a
/// decode falls outside the radius.
LinSpan recover_error_space(const SyndromeTable& table, const CodeParams& params,
                            const GabCodeCtx& ctx);

/// The unique g' supported on the span with the prescribed syndromes, solved as
/// a linear system in the coefficients of monomials in the span's basis forms.
FPoly recover_error(const LinSpan& span, const SyndromeTable& table, const CodeParams& params);

enum class DecodeStatus { clean, corrected };

struct DecodeResult {
    FPoly codeword;
    FPoly error;
    uint32_t error_ess_rank = 0;
    DecodeStatus status = DecodeStatus::clean;
};

/// Algorithm 1: recover the codeword f from F = f + g' with ess(g') <= floor((rho-1)/2).
/// The reconstruction is verified (membership and error rank) before returning.
DecodeResult decode(const FPoly& received, const CodeParams& params);

struct SimulationStats {
    uint64_t trials = 0;
    uint64_t successes = 0;
    uint64_t failures = 0;
    uint64_t miscorrections = 0; // decoded fine but to a different codeword (never silent)
    double mean_decode_ms = 0.0;
};

/// Seeded round-trip trials: random codeword plus a random error supported on
/// `error_rank` independent linear forms, decoded and compared exactly.
SimulationStats run_simulation(const CodeParams& params, uint64_t trials, uint64_t seed,
                               uint32_t error_rank);

/// Uniformly random error polynomial g(l_1..l_e) with the l's independent.
FPoly random_error(const CodeParams& params, Rng& rng, uint32_t error_rank);

/// Message encoding: sum_i m_i basis_i over the canonical basis.
FPoly encode_message(const EssCode& code, const std::vector<Fq>& message);

} // namespace ermc
