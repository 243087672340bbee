// Majorization order on real vectors with constructive witnesses:
// T-transforms, unjust transfers, and transform chains.

#pragma once

#include <stdexcept>
#include <vector>

namespace equivox {

using RealVector = std::vector<double>;

struct NotMajorized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Convex mix of the identity and the transposition of coordinates i, j.
struct TTransform {
    int i;
    int j;
    double t;  // in [0,1]; t = 0 is the identity, t = 1 the transposition
};

// Moves `amount` from the j-th to the i-th entry of the sorted-descending
// view (ranks are 0-based, i < j). Transfers that would reorder ranks on
// either affected boundary are rejected.
struct UnjustTransfer {
    int i;
    int j;
    double amount;
};

RealVector sorted_descending(RealVector x);

// Prefix-sum test at tolerance 1e-9 (totals must match within 1e-9 too).
bool majorizes(const RealVector& x, const RealVector& y);

RealVector apply_t_transform(const RealVector& x, const TTransform& T);

RealVector apply_unjust_transfer(const RealVector& x, const UnjustTransfer& u);

// Given the affected sorted pair (length-2 x and y with equal sums, x
// obtainable from y by one unjust transfer), returns the T-transform with
//   t = eps / ((y1 - y2) + 2*eps)
// taking x back to y.
TTransform t_transform_from_unjust(const RealVector& x, const RealVector& y);

// Chain of T-transforms taking x to y when x majorizes y. At most d-1
// proper transforms; for targets that are not sorted descending, up to d-1
// additional t=1 transposition transforms complete the permutation.
std::vector<TTransform> witness_chain(const RealVector& x, const RealVector& y);

// (1,...,1, e-floor(e), 0,...,0) of length m: majorizes every vector with
// entries in [0,1] summing to e.
RealVector majorant_vector(int m, double e);

}  // namespace equivox
