// Dense complex matrices sized for small quantum systems (dim <= 256), plus
// the cyclic Jacobi eigensolver for Hermitian operators used throughout the
// quantum and alignment modules.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace equivox {

inline constexpr int kMaxDim = 256;

class CMatrix {
  public:
    using C = std::complex<double>;

    CMatrix() = default;
    explicit CMatrix(int n) : n_(check_dim(n)), a_(static_cast<std::size_t>(n) * n, C(0.0, 0.0)) {}
    CMatrix(int n, std::vector<C> entries) : n_(check_dim(n)), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(n_) * n_) throw std::invalid_argument("CMatrix: entry count");
    }

    static CMatrix identity(int n) {
        CMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return n_; }
    C& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const C& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const std::vector<C>& entries() const { return a_; }

    CMatrix adjoint() const;
    C trace() const;
    double frobenius_norm() const;
    bool is_hermitian(double tol = 1e-10) const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(double s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(double s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  private:
    static int check_dim(int n) {
        if (n < 1 || n > kMaxDim) throw std::invalid_argument("CMatrix: dim outside [1,256]");
        return n;
    }

    int n_ = 0;
    std::vector<C> a_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

// Outer product |v><v| (v need not be normalized).
CMatrix outer(const std::vector<std::complex<double>>& v);

struct EigSystem {
    std::vector<double> values;  // descending
    CMatrix vectors;             // matching columns, orthonormal
};

// Cyclic Jacobi sweeps; converges when the off-diagonal Frobenius mass
// drops below 1e-13 times the Frobenius norm. Throws on non-Hermitian input.
EigSystem eig_hermitian(const CMatrix& H);

// Eigenvalues only (same solver, no eigenvector accumulation).
std::vector<double> eigenvalues_hermitian(const CMatrix& H);

// Singular values, descending: sqrt of the eigenvalues of M*M.
std::vector<double> singular_values(const CMatrix& M);

}  // namespace equivox
