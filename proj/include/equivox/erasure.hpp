// Closed-form erasure-channel simulation quantities: capacity, the [[4,1,2]]
// improvement polynomial and its threshold, and recovery-probability caps
// for deterministic codes.

#pragma once

namespace equivox {

struct ErasureReport {
    double q;                 // resource erasure probability
    double simulated_q;       // q4(q)
    double improvement;       // q - simulated_q
    bool threshold_crossed;   // q >= (5 - sqrt(13))/6, where improvement stops
};

// max(0, (1 - 2q) log2 d), in qubits.
double erasure_capacity(double q, int d);

// Erasure probability of the channel simulated through the [[4,1,2]] code:
// sum_{k=2..4} C(4,k) q^k (1-q)^{4-k} = 6q^2(1-q)^2 + 4q^3(1-q) + q^4.
double q4(double q);

// (5 - sqrt(13))/6: the positive root of q4(q) = q below 1/2.
double improvement_threshold();

ErasureReport erasure_report(double q);

// (1-q)^2 (3q^2 + 4q(1-q) + (1-q)^2); satisfies r4(q) - (1-q) = q(1-q)(1-2q).
double r4_bound(double q);

// Recovery-probability cap for deterministic codes on n qudits:
//   sum_{l<=n/2} C(n-1,l-1) q^{n-l}(1-q)^l  +  sum_{l>n/2} C(n,l) q^{n-l}(1-q)^l
// (intersecting-family cap below the midpoint, full mass above). Binomials
// go through log-space for n > 50.
double ekr_recovery_bound(int n, double q);

}  // namespace equivox
