#include "equivox/quantum.hpp"

#include <cmath>

namespace equivox {

namespace {

using C = std::complex<double>;

constexpr double kEigClamp = 1e-8;

std::vector<double> clamp_spectrum(std::vector<double> vals, const char* what) {
    for (double& v : vals) {
        if (v < -kEigClamp) throw InvalidMeasure(std::string(what) + ": eigenvalue below -1e-8");
        if (v < 0.0) v = 0.0;
    }
    return vals;
}

}  // namespace

DensityOperator::DensityOperator(CMatrix m) : m_(std::move(m)) {
    if (!m_.is_hermitian()) throw InvalidMeasure("DensityOperator: not Hermitian within 1e-10");
    if (std::abs(m_.trace().real() - 1.0) > 1e-9 || std::abs(m_.trace().imag()) > 1e-9)
        throw InvalidMeasure("DensityOperator: trace must be 1 within 1e-9");
}

std::vector<double> DensityOperator::spectrum() const {
    return clamp_spectrum(eigenvalues_hermitian(m_), "DensityOperator");
}

BipartiteState::BipartiteState(int dA, int dB, DensityOperator state)
    : dA_(dA), dB_(dB), state_(std::move(state)) {
    if (dA_ < 2 || dB_ < 2) throw InvalidMeasure("BipartiteState: factor dims must be >= 2");
    if (state_.dim() != dA_ * dB_) throw InvalidMeasure("BipartiteState: state dim != dA*dB");
}

DensityOperator BipartiteState::partial_trace_a() const {
    const CMatrix& m = state_.matrix();
    CMatrix out(dB_);
    for (int b = 0; b < dB_; ++b)
        for (int b2 = 0; b2 < dB_; ++b2) {
            C s(0.0, 0.0);
            for (int a = 0; a < dA_; ++a) s += m(a * dB_ + b, a * dB_ + b2);
            out(b, b2) = s;
        }
    return DensityOperator(std::move(out));
}

DensityOperator BipartiteState::partial_trace_b() const {
    const CMatrix& m = state_.matrix();
    CMatrix out(dA_);
    for (int a = 0; a < dA_; ++a)
        for (int a2 = 0; a2 < dA_; ++a2) {
            C s(0.0, 0.0);
            for (int b = 0; b < dB_; ++b) s += m(a * dB_ + b, a2 * dB_ + b);
            out(a, a2) = s;
        }
    return DensityOperator(std::move(out));
}

double von_neumann_entropy(const DensityOperator& rho) {
    return entropy_of_weights(rho.spectrum());
}

double conditional_vn_entropy(const BipartiteState& rho) {
    return von_neumann_entropy(rho.state()) - von_neumann_entropy(rho.partial_trace_a());
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim()) throw ShapeMismatch("trace_distance: dim mismatch");
    const std::vector<double> vals = eigenvalues_hermitian(rho.matrix() - sigma.matrix());
    double s = 0.0;
    for (double v : vals) s += std::abs(v);
    return 0.5 * s;
}

double winter_bound(double epsilon, int dA) {
    if (dA < 2) throw std::domain_error("winter_bound: dA must be >= 2");
    if (std::isnan(epsilon) || epsilon < 0.0 || epsilon > 1.0)
        throw std::domain_error("winter_bound: epsilon outside [0,1]");
    if (epsilon == 0.0) return 0.0;
    return 2.0 * epsilon * std::log2(static_cast<double>(dA)) +
           (1.0 + epsilon) * binary_entropy(epsilon / (1.0 + epsilon));
}

double wilde_bound(double epsilon, int d) {
    if (d < 2) throw std::domain_error("wilde_bound: d must be >= 2");
    if (std::isnan(epsilon) || epsilon < 0.0 || epsilon > 1.0)
        throw std::domain_error("wilde_bound: epsilon outside [0,1]");
    const double dsq = static_cast<double>(d) * d;
    const double knee = 1.0 - 1.0 / dsq;
    if (epsilon >= knee) return 2.0 * std::log2(static_cast<double>(d));
    return epsilon * std::log2(dsq - 1.0) + binary_entropy(epsilon);
}

MaxEntangledBasis bell_basis(int d) {
    if (d < 2 || d > 8) throw std::domain_error("bell_basis: d outside [2,8]");
    MaxEntangledBasis basis;
    basis.d = d;
    const double inv = 1.0 / std::sqrt(static_cast<double>(d));
    const double tau = 6.283185307179586476925286766559 / d;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            std::vector<C> v(static_cast<std::size_t>(d) * d, C(0.0, 0.0));
            for (int i = 0; i < d; ++i) {
                const C phase(std::cos(tau * b * i), std::sin(tau * b * i));
                v[static_cast<std::size_t>((i + a) % d) * d + i] = inv * phase;
            }
            basis.vectors.push_back(std::move(v));
        }
    return basis;
}

CMatrix pinch(const CMatrix& m, const MaxEntangledBasis& basis) {
    const int n = m.dim();
    if (n != basis.d * basis.d) throw ShapeMismatch("pinch: dim mismatch");
    CMatrix out(n);
    for (const auto& v : basis.vectors) {
        C w(0.0, 0.0);  // <v| m |v>
        for (int r = 0; r < n; ++r) {
            C row(0.0, 0.0);
            for (int c = 0; c < n; ++c) row += m(r, c) * v[c];
            w += std::conj(v[r]) * row;
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) out(r, c) += w * v[r] * std::conj(v[c]);
    }
    return out;
}

BipartiteState pinch(const BipartiteState& rho, const MaxEntangledBasis& basis) {
    if (rho.dimA() != rho.dimB() || rho.dimA() != basis.d) throw ShapeMismatch("pinch: needs dA = dB = basis.d");
    return BipartiteState(rho.dimA(), rho.dimB(), DensityOperator(pinch(rho.matrix(), basis)));
}

std::pair<BipartiteState, BipartiteState> isotropic_pair(int d, double epsilon) {
    if (d < 2) throw std::domain_error("isotropic_pair: d must be >= 2");
    const double knee = 1.0 - 1.0 / (static_cast<double>(d) * d);
    if (std::isnan(epsilon) || epsilon < 0.0 || epsilon > knee + 1e-12)
        throw std::domain_error("isotropic_pair: epsilon outside [0, 1 - 1/d^2]");
    const int n = d * d;
    std::vector<C> phi(n, C(0.0, 0.0));
    const double inv = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) phi[static_cast<std::size_t>(i) * d + i] = inv;
    CMatrix proj = outer(phi);
    CMatrix iso = CMatrix::identity(n) - proj;
    iso *= epsilon / (n - 1.0);
    iso += (1.0 - epsilon) * proj;
    return {BipartiteState(d, d, DensityOperator(std::move(proj))),
            BipartiteState(d, d, DensityOperator(std::move(iso)))};
}

std::vector<C> random_unit_vector(int dim, Rng& rng) {
    std::vector<C> v(dim);
    double norm2 = 0.0;
    for (auto& z : v) {
        z = C(rng.gaussian(), rng.gaussian());
        norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : v) z *= inv;
    return v;
}

DensityOperator random_pure_state(int dim, Rng& rng) {
    return DensityOperator(outer(random_unit_vector(dim, rng)));
}

DensityOperator random_mixed_state(int dim, Rng& rng) {
    CMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = C(rng.gaussian(), rng.gaussian());
    CMatrix w = g * g.adjoint();
    const double tr = w.trace().real();
    w *= 1.0 / tr;
    // Hermitize away the last-bit float asymmetry from the product.
    for (int r = 0; r < dim; ++r) {
        w(r, r) = C(w(r, r).real(), 0.0);
        for (int c = r + 1; c < dim; ++c) {
            const C avg = 0.5 * (w(r, c) + std::conj(w(c, r)));
            w(r, c) = avg;
            w(c, r) = std::conj(avg);
        }
    }
    return DensityOperator(std::move(w));
}

DensityOperator random_bell_diagonal(const MaxEntangledBasis& basis, Rng& rng) {
    const std::vector<double> w = rng.simplex(basis.vectors.size());
    CMatrix m(basis.d * basis.d);
    for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
        CMatrix term = outer(basis.vectors[k]);
        term *= w[k];
        m += term;
    }
    return DensityOperator(std::move(m));
}

}  // namespace equivox
