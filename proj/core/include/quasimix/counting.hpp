#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quasimix/fourier.hpp"
#include "quasimix/int128.hpp"
#include "quasimix/report.hpp"
#include "quasimix/subset.hpp"

namespace quasimix {

// Elementary-step budget for enumeration paths. 0 means "use the default",
// which is QUASIMIX_BUDGET from the environment, or 10^8.
struct CountOptions {
    long long step_budget = 0;
    const IrrepCensus* census = nullptr; // enables the spectral fallback
};

long long default_step_budget();

// --- exact tuple counters ----------------------------------------------
//
// count_Mk takes {X0, X1, ..., Xk} and counts tuples with x1 x2 ... xk = x0.
// Three routes compute the same integer:
//   - bruteforce: direct loops, cost |X1|...|Xk|;
//   - convolution: integer-valued group convolution, cost |G| sum |Xi|;
//   - spectral: |G|^k <1_{X1} * ... * 1_{Xk}, 1_{X0}> via the Fourier
//     coefficients, rounded to the nearest integer. The rounding must land
//     within 1e-6 of an integer or numeric_error is thrown.
// The unqualified count_Mk picks the cheapest in-budget exact route and
// falls back to spectral (census required) when enumeration is too big.

int128 count_Mk(const std::vector<GroupSubset>& sets, const CountOptions& opts = {});
int128 count_Mk_bruteforce(const std::vector<GroupSubset>& sets, const CountOptions& opts = {});
int128 count_Mk_convolution(const std::vector<GroupSubset>& sets, const CountOptions& opts = {});
int128 count_Mk_spectral(const std::vector<GroupSubset>& sets, const IrrepCensus& census);

// Integer convolution table: entry x counts tuples in X1 x ... x Xk with
// product x. (1_{X1} * ... * 1_{Xk})(x) equals entry(x) / |G|^{k-1}.
std::vector<int128> convolution_counts(const std::vector<GroupSubset>& sets,
                                       const CountOptions& opts = {});

// Tuples whose dot-projections satisfy the product equation; computed from
// the per-fiber cardinality vectors over H, never by element enumeration.
int128 count_Mk_dot(const std::vector<GroupSubset>& sets);       // {X0, X1, ..., Xk}
int128 count_Nk_dot(const std::vector<GroupSubset>& sets);       // {X1, ..., Xk}

// E(X, Y) = #{(x1, x2, y1, y2) in X^2 x Y^2 : x1 y1 = x2 y2}, and the
// dot-projected analogue.
int128 energy(const GroupSubset& x, const GroupSubset& y, const CountOptions& opts = {});
int128 energy_dot(const GroupSubset& x, const GroupSubset& y);

GroupSubset product_set(const std::vector<GroupSubset>& sets, const CountOptions& opts = {});

// --- theorem verifiers ---------------------------------------------------
//
// Each verifier rechecks one proved inequality on concrete sets. Integer
// sides are compared exactly in 128-bit arithmetic; square-root bounds are
// compared with 1e-9 absolute slack in the verifier's favor. A failing
// report therefore signals a bug, not numerical noise.

// | M_k - M_k_dot / |N| |  <=  sqrt(|G|^{k-1} |X0|...|Xk| / D^{k-1})
VerificationReport verify_mixing(const std::vector<GroupSubset>& sets, long long D,
                                 const CountOptions& opts = {});

// |H| N_dot / |G|^{2k}  <=  ||1_{X1} * ... * 1_{Xk}||_2^2
//                       <=  |H| N_dot / |G|^{2k} + |X1|...|Xk| / (D^{k-1} |G|^k)
VerificationReport verify_l2(const std::vector<GroupSubset>& sets, long long D,
                             const CountOptions& opts = {});

// (|H|/|G|) E_dot <= E <= (|H|/|G|) E_dot + (|G|/D)|X||Y|
VerificationReport verify_energy(const GroupSubset& x, const GroupSubset& y, long long D,
                                 const CountOptions& opts = {});

// |X1 X2 ... Xk| >= 1/2 min{ (|N|/N_dot) |X1|^2...|Xk|^2,
//                            (D^{k-1}/|G|^{k-1}) |X1|...|Xk| }
VerificationReport verify_product_growth(const std::vector<GroupSubset>& sets, long long D,
                                         const CountOptions& opts = {});

// The degree-1 coefficient-profile chain
//   ||1_X * 1_X||_2^2 <= exceptions |X|^4/|G|^4 + (Q - exceptions) M^4
//                        + |X|^2 / (D |G|^2)
// plus the support bound |XX| >= |G| ||1_X * 1_X||_1^2 / ||1_X * 1_X||_2^2.
// The partition is taken from the actual coefficients: indices with
// |coef| <= M are the bounded class; if more than `exceptions` indices
// exceed M the call is a parameter_error.
VerificationReport verify_bias(const GroupSubset& x, double m_threshold, int exceptions,
                               const IrrepCensus& census, const CountOptions& opts = {});

// --- set generators ------------------------------------------------------

// Each element joins independently with probability `density`, driven by
// SplitMix64(seed); identical (group, density, seed) give identical sets.
GroupSubset random_subset(const SdpGroup& g, double density, std::uint64_t seed);

// The subgroup {(t, a^j) : t in N0, 0 <= j < l} with a = gamma^k, kl = Q.
GroupSubset example1_subset(const RigidMotionGroup& g0, int k, int l);

// Named structured sets; currently "example1(k,l)".
GroupSubset structured_subset(const RigidMotionGroup& g0, const std::string& spec);

} // namespace quasimix
