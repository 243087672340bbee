// Small-dimension density-operator calculus: von Neumann conditional entropy,
// trace distance, the Winter and conjectured tight continuity bounds,
// generalized Bell bases and pinching.

#pragma once

#include <utility>
#include <vector>

#include "equivox/cmatrix.hpp"
#include "equivox/prob.hpp"
#include "equivox/rng.hpp"

namespace equivox {

// Hermitian within 1e-10, trace 1 within 1e-9. Eigenvalues in [-1e-8, 0)
// are treated as 0 wherever a spectrum is consumed.
class DensityOperator {
  public:
    explicit DensityOperator(CMatrix m);

    int dim() const { return m_.dim(); }
    const CMatrix& matrix() const { return m_; }

    // Eigenvalues (descending) with the [-1e-8,0) clamp applied.
    std::vector<double> spectrum() const;

  private:
    CMatrix m_;
};

// State on A (x) B with row-major product indexing: (a,b) -> a*dB + b.
class BipartiteState {
  public:
    BipartiteState(int dA, int dB, DensityOperator state);

    int dimA() const { return dA_; }
    int dimB() const { return dB_; }
    const DensityOperator& state() const { return state_; }
    const CMatrix& matrix() const { return state_.matrix(); }

    DensityOperator partial_trace_a() const;  // leaves B
    DensityOperator partial_trace_b() const;  // leaves A

  private:
    int dA_;
    int dB_;
    DensityOperator state_;
};

struct MaxEntangledBasis {
    int d = 0;
    std::vector<std::vector<std::complex<double>>> vectors;  // d^2 unit vectors in C^{d^2}
};

double von_neumann_entropy(const DensityOperator& rho);

// H(A|B) = H(AB) - H(B); lies in [-log2 dA, log2 dA].
double conditional_vn_entropy(const BipartiteState& rho);

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

// 2 eps log2 dA + (1+eps) h(eps/(1+eps)).
double winter_bound(double epsilon, int dA);

// eps log2(d^2-1) + h(eps) for eps <= 1 - 1/d^2, clamped to 2 log2 d above.
double wilde_bound(double epsilon, int d);

// Generalized Bell vectors (X^a Z^b (x) 1)|Phi>, a,b in [d]; 2 <= d <= 8.
MaxEntangledBasis bell_basis(int d);

CMatrix pinch(const CMatrix& m, const MaxEntangledBasis& basis);
BipartiteState pinch(const BipartiteState& rho, const MaxEntangledBasis& basis);

// (|Phi><Phi|, (1-eps)|Phi><Phi| + eps/(d^2-1)(1 - |Phi><Phi|)). Their trace
// distance is eps and their conditional-entropy gap equals wilde_bound.
std::pair<BipartiteState, BipartiteState> isotropic_pair(int d, double epsilon);

// --- reproducible state sampling (documented: all searches derive their
// draws from Rng::stream(seed, trial)) ---

std::vector<std::complex<double>> random_unit_vector(int dim, Rng& rng);

DensityOperator random_pure_state(int dim, Rng& rng);

// Normalized Wishart-style product G G* / tr(G G*) with G dim x dim Ginibre.
DensityOperator random_mixed_state(int dim, Rng& rng);

// Random mixture of the d^2 Bell projectors.
DensityOperator random_bell_diagonal(const MaxEntangledBasis& basis, Rng& rng);

}  // namespace equivox
