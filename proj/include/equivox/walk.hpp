// The tight continuity bound for conditional Shannon entropy and the
// executable reorder / walk / estimate procedure behind it.
//
// walk() drives a pair of joint measures across the simplex until the second
// one carries no equivocation, recording a snapshot after every single
// entry-transfer so the two monotonicity invariants (total variation never
// grows, entropy gap never shrinks) can be audited at the finest granularity.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equivox/prob.hpp"

namespace equivox {

struct PreconditionViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// epsilon*log2(|X|-1) + h(epsilon) below the knee at 1 - 1/|X|, log2|X| above.
double bound_conditional(double epsilon, int dX);

// Extremal witness pair. Below the knee: q is a point mass at (1,1) and p
// spreads epsilon over the rest of column 1; above it, p is the point mass
// and q the uniform first column. In both regimes the equivocation gap
// saturates bound_conditional at the pair's total variation distance.
std::pair<JointDistribution, JointDistribution> saturating_pair(double epsilon, int dX, int dY);

struct BoundReport {
    double epsilon;   // tv distance of the pair
    double gap;       // |H(X|Y) - H(X'|Y')| in bits
    double bound;     // bound_conditional(epsilon, |X|)
    double slack;     // bound - gap
    bool saturated;   // slack <= 1e-9
};

BoundReport verify_bound(const JointDistribution& p, const JointDistribution& q);

struct ReorderResult {
    JointDistribution p;
    JointDistribution q;
    std::vector<std::vector<int>> isets;  // per reordered block: I_j as leading x-indices
    BlockPermutation applied;             // the S_{X|Y} element taking the inputs to (p, q)
};

// Canonical frame: blocks sorted by q_Y - p_Y non-increasing, I_j members
// ahead of the rest, both runs sorted by q descending, ties stable. Leaves
// tv and both equivocations unchanged.
ReorderResult reorder(const JointDistribution& p, const JointDistribution& q);

// Every column becomes the mean column (complete loss of Y).
JointDistribution averaging_map(const JointDistribution& p);

struct WalkSnapshot {
    JointDistribution p;
    JointDistribution q;
    double tv;
    double gap;  // H_p(X|Y) - H_q(X'|Y'), after the WLOG swap
    std::string label;
};

struct WalkTrace {
    std::vector<WalkSnapshot> steps;
    bool swapped = false;    // arguments exchanged so the first measure has the larger equivocation
    double initial_tv = 0.0;
    int sizeX = 0;
    int sizeY = 0;
};

// Requires tv(p, q) <= 1 - 1/|X| (throws PreconditionViolated otherwise).
// Swaps the arguments itself when H_p(X|Y) < H_q(X'|Y').
WalkTrace walk(const JointDistribution& p, const JointDistribution& q);

// Empty string if all trace invariants hold, else the name of the first
// violated one.
std::string check_walk_trace(const WalkTrace& trace);

}  // namespace equivox
