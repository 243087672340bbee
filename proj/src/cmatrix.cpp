#include "equivox/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace equivox {

using C = CMatrix::C;

CMatrix CMatrix::adjoint() const {
    CMatrix out(n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

C CMatrix::trace() const {
    C t(0.0, 0.0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const C& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

bool CMatrix::is_hermitian(double tol) const {
    for (int r = 0; r < n_; ++r) {
        if (std::abs((*this)(r, r).imag()) > tol) return false;
        for (int c = r + 1; c < n_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (o.n_ != n_) throw std::invalid_argument("CMatrix: dim mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (o.n_ != n_) throw std::invalid_argument("CMatrix: dim mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

CMatrix& CMatrix::operator*=(double s) {
    for (C& z : a_) z *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("CMatrix: dim mismatch");
    const int n = a.n_;
    CMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const C arc = a(r, k);
            if (arc == C(0.0, 0.0)) continue;
            for (int c = 0; c < n; ++c) out(r, c) += arc * b(k, c);
        }
    }
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const int na = a.dim(), nb = b.dim();
    CMatrix out(na * nb);
    for (int ra = 0; ra < na; ++ra)
        for (int ca = 0; ca < na; ++ca) {
            const C v = a(ra, ca);
            if (v == C(0.0, 0.0)) continue;
            for (int rb = 0; rb < nb; ++rb)
                for (int cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
        }
    return out;
}

CMatrix outer(const std::vector<C>& v) {
    CMatrix out(static_cast<int>(v.size()));
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out(static_cast<int>(r), static_cast<int>(c)) = v[r] * std::conj(v[c]);
    return out;
}

namespace {

double offdiag_norm_sq(const CMatrix& h) {
    double s = 0.0;
    for (int r = 0; r < h.dim(); ++r)
        for (int c = 0; c < h.dim(); ++c)
            if (r != c) s += std::norm(h(r, c));
    return s;
}

// One two-sided rotation zeroing H(p,q). The complex phase is folded into
// the rotation so the 2x2 subproblem is real symmetric.
void jacobi_rotate(CMatrix& h, CMatrix* v, int p, int q) {
    const C hpq = h(p, q);
    const double r = std::abs(hpq);
    if (r == 0.0) return;
    const C u = hpq / r;  // e^{i phi}
    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    const double theta = (app - aqq) / (2.0 * r);
    const double t = (theta >= 0.0 ? -1.0 : 1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const C ju = std::conj(u);

    const int n = h.dim();
    // Columns: col_p <- c*col_p - s*ju*col_q ; col_q <- s*col_p + c*ju*col_q
    for (int k = 0; k < n; ++k) {
        const C hp = h(k, p), hq = h(k, q);
        h(k, p) = c * hp - s * (ju * hq);
        h(k, q) = s * hp + c * (ju * hq);
    }
    // Rows (adjoint action).
    for (int k = 0; k < n; ++k) {
        const C hp = h(p, k), hq = h(q, k);
        h(p, k) = c * hp - s * (u * hq);
        h(q, k) = s * hp + c * (u * hq);
    }
    h(p, q) = C(0.0, 0.0);
    h(q, p) = C(0.0, 0.0);
    h(p, p) = C(h(p, p).real(), 0.0);
    h(q, q) = C(h(q, q).real(), 0.0);

    if (v) {
        for (int k = 0; k < n; ++k) {
            const C vp = (*v)(k, p), vq = (*v)(k, q);
            (*v)(k, p) = c * vp - s * (ju * vq);
            (*v)(k, q) = s * vp + c * (ju * vq);
        }
    }
}

void jacobi_diagonalize(CMatrix& h, CMatrix* v) {
    if (!h.is_hermitian()) throw std::invalid_argument("eig_hermitian: input is not Hermitian");
    const int n = h.dim();
    const double norm = h.frobenius_norm();
    const double stop = 1e-13 * norm;
    const double stop_sq = stop * stop;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (offdiag_norm_sq(h) <= stop_sq || norm == 0.0) return;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(h, v, p, q);
    }
    if (offdiag_norm_sq(h) > stop_sq * 1e6) throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge");
}

}  // namespace

EigSystem eig_hermitian(const CMatrix& H) {
    CMatrix h = H;
    CMatrix v = CMatrix::identity(H.dim());
    jacobi_diagonalize(h, &v);

    const int n = H.dim();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h(a, a).real() > h(b, b).real(); });

    EigSystem out;
    out.values.resize(n);
    out.vectors = CMatrix(n);
    for (int c = 0; c < n; ++c) {
        out.values[c] = h(order[c], order[c]).real();
        for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

std::vector<double> eigenvalues_hermitian(const CMatrix& H) {
    CMatrix h = H;
    jacobi_diagonalize(h, nullptr);
    std::vector<double> vals(H.dim());
    for (int i = 0; i < H.dim(); ++i) vals[i] = h(i, i).real();
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    return vals;
}

std::vector<double> singular_values(const CMatrix& M) {
    std::vector<double> vals = eigenvalues_hermitian(M * M.adjoint());
    for (double& x : vals) x = std::sqrt(std::max(0.0, x));
    return vals;
}

}  // namespace equivox
