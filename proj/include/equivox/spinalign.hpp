// Alignment operators, unitarily invariant norms, the proved spin-alignment
// instances, and the two-projector optimal-alignment construction.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "equivox/cmatrix.hpp"
#include "equivox/majorization.hpp"
#include "equivox/quantum.hpp"
#include "equivox/rng.hpp"

namespace equivox {

// Problem data (d, n, mu, Q): mu is a probability measure over subsets of
// [n] keyed by bitmask (bit k set <=> qudit k in I). Q's eigensystem is
// cached at construction (values descending, |q1> first).
class AlignmentSpec {
  public:
    AlignmentSpec(int d, int n, std::map<std::uint32_t, double> mu, DensityOperator Q);

    int d() const { return d_; }
    int n() const { return n_; }
    int total_dim() const { return total_dim_; }
    const std::map<std::uint32_t, double>& mu() const { return mu_; }
    const DensityOperator& Q() const { return Q_; }
    const std::vector<double>& q_values() const { return qeig_.values; }
    // Column i of the cached eigensystem.
    std::vector<std::complex<double>> q_vector(int i) const;

  private:
    int d_;
    int n_;
    int total_dim_;
    std::map<std::uint32_t, double> mu_;
    DensityOperator Q_;
    EigSystem qeig_;
};

// One unit vector per subset carrying weight.
struct StateTuple {
    std::map<std::uint32_t, std::vector<std::complex<double>>> vectors;
};

StateTuple random_state_tuple(const AlignmentSpec& spec, Rng& rng);
StateTuple aligned_state_tuple(const AlignmentSpec& spec);  // |q1>^{(x)|I|} everywhere

// sum_I mu_I |psi_I><psi_I| (x) Q^{(x)I^c}, factors interleaved by qudit
// position.
CMatrix alignment_operator(const AlignmentSpec& spec, const StateTuple& tuple);

// alignment_operator at the aligned tuple.
CMatrix conjectured_optimum(const AlignmentSpec& spec);

// Sum of the k largest singular values.
double fan_norm(const CMatrix& a, int k);

// (sum sigma_i^p)^{1/p}, p >= 1.
double schatten_norm(const CMatrix& a, double p);

// tr(A^m)^{1/m} for PSD A; avoids the eigensolver in hot loops.
double schatten_norm_psd(const CMatrix& a, int m);

struct SchattenReport {
    int trials = 0;
    int violations = 0;
    double opt_norm = 0.0;
    double max_ratio = 0.0;   // ||A||_m / ||opt||_m, max over trials
    double max_excess = 0.0;  // ||A||_m - ||opt||_m, max over trials
};

// Random pure tuples against the conjectured optimum for the Schatten
// m-norm (a theorem for integer m: violations indicate a bug).
SchattenReport check_schatten_conjecture(const AlignmentSpec& spec, int m, int trials, std::uint64_t seed);

struct OverlapTraceResult {
    double value;    // |tr prod_j (R_j (x) Q^{(x)I_j^c})|
    double optimum;  // same trace at the aligned rank-1 tuple
};

// ops[j] acts on the qudits of subsets[j] and must have trace norm <= 1.
OverlapTraceResult overlap_trace(const std::vector<std::uint32_t>& subsets,
                                 const std::vector<CMatrix>& ops,
                                 const AlignmentSpec& spec);

struct ClassicalReport {
    long long assignments = 0;
    long long violations = 0;
};

// Enumerates every classical pure tuple (basis strings per subset) and
// verifies the conjectured optimum majorizes each candidate spectrum.
// Throws if the assignment count exceeds 1e6.
ClassicalReport classical_exhaustive_check(const AlignmentSpec& spec);

// G_{r1,r2,c} is nonempty iff r1 + r2 - d <= floor(c).
bool feasible_projector_pair(int r1, int r2, double c, int d);

struct ProjectorPair {
    int d;
    CMatrix P1;
    CMatrix P2;
    int r1;
    int r2;
    double overlap;  // tr|P1 P2|
};

// Maximal element of G_{r1,r2,c} in the alignment ordering: a commuting
// construction when c is an integer, otherwise one 2-dim block carrying the
// fractional overlap atop the commuting core.
ProjectorPair optimal_projector_pair(int r1, int r2, double c, int d);

// Haar-frame member of G_{r1,r2,c}; overlap lands exactly on `budget`
// (bisection over the Jordan-block angles).
ProjectorPair sample_g_member(int r1, int r2, double budget, int d, Rng& rng);

struct JordanBlockCounts {
    int both = 0;        // 1-dim blocks inside both supports (eigenvalue s1+s2)
    int only_first = 0;  // eigenvalue s1
    int only_second = 0; // eigenvalue s2
    int neither = 0;     // eigenvalue 0
};

// Spectrum of s1 P1 + s2 P2 assembled from Jordan data: each 2-dim block
// with overlap v contributes ((s1+s2) +- sqrt((s1-s2)^2 + 4 s1 s2 v^2))/2.
// Strictly isotone in the overlap vector. Result sorted descending.
RealVector two_projector_spectrum(double s1, double s2, const RealVector& overlaps,
                                  const JordanBlockCounts& counts);

}  // namespace equivox
