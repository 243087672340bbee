// Randomized property harnesses: theorem sweeps (classical bound, Winter,
// Schatten, overlap), the Wilde-conjecture probe (report-only), and walk
// soundness. Deterministic given (seed, config); trial i draws from
// Rng::stream(seed, i) so results are independent of scheduling.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equivox/prob.hpp"
#include "equivox/rng.hpp"
#include "equivox/spinalign.hpp"

namespace equivox {

struct TrialRow {
    std::uint64_t seed;  // the derived per-trial stream seed
    double epsilon;
    double gap;
    double bound;
    double slack;  // bound - gap
};

struct SearchSummary {
    std::string kind;
    int trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    long long violations = 0;   // gap > bound + tolerance
    double max_excess = 0.0;    // max(gap - bound), > 0 means some slack was negative
    double min_slack = 0.0;
    std::vector<TrialRow> worst;  // up to 10 rows, most negative slack first

    // CSV per the quantum module interface: "seed,epsilon,gap,bound,slack".
    std::string rows_csv() const;
    std::string summary_line() const;
};

// Uniform-simplex joint measure.
JointDistribution random_joint(int dX, int dY, Rng& rng);

// Pair with tv <= 1 - 1/dX (second measure pulled toward the first).
std::pair<JointDistribution, JointDistribution> random_constrained_pair(int dX, int dY, Rng& rng);

// |H(X|Y)_p - H(X|Y)_q| vs bound_conditional on random pairs.
SearchSummary classical_search(int dX, int dY, int trials, std::uint64_t seed, double tolerance = 1e-9);

// |dH(A|B)| vs winter_bound on random mixed dA x dA pairs (proven).
SearchSummary winter_search(int dA, int trials, std::uint64_t seed, double tolerance = 1e-9);

// |dH(A|B)| vs wilde_bound on random mixed pairs; a conjecture, so callers
// must treat violations as findings, not failures.
SearchSummary wilde_search(int d, int trials, std::uint64_t seed, double tolerance = 1e-9);

// Bell-diagonal restriction of the Wilde bound (proven).
SearchSummary wilde_bell_diagonal_search(int d, int trials, std::uint64_t seed, double tolerance = 1e-9);

// Overlap corollary: |tr prod| vs the aligned-tuple optimum over random
// unit-trace-norm operator tuples on the given subsets (proven).
SearchSummary overlap_search(const AlignmentSpec& spec, const std::vector<std::uint32_t>& subsets, int trials,
                             std::uint64_t seed, double tolerance = 1e-9);

// Runs full walks on constrained random pairs and checks every trace
// invariant; rows carry the final gap vs the bound at the initial tv.
SearchSummary walk_soundness_search(int dX, int dY, int trials, std::uint64_t seed, double tolerance = 1e-9);

}  // namespace equivox
