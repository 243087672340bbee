#include "equivox/spinalign.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "equivox/parallel.hpp"

namespace equivox {

namespace {

using C = std::complex<double>;

int subset_size(std::uint32_t mask) { return std::popcount(mask); }

// Digits of idx base d, digit k = symbol of qudit k (qudit 0 most significant
// so strings read left to right).
std::vector<int> digits_of(int idx, int d, int n) {
    std::vector<int> dig(n);
    for (int k = n - 1; k >= 0; --k) {
        dig[k] = idx % d;
        idx /= d;
    }
    return dig;
}

int pow_int(int base, int exp) {
    int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// Sub-index over the positions of `mask` (increasing position order).
int project_index(const std::vector<int>& dig, std::uint32_t mask, int d) {
    int r = 0;
    for (std::size_t k = 0; k < dig.size(); ++k)
        if (mask & (1u << k)) r = r * d + dig[k];
    return r;
}

// mu_I * R_I (x) Q^{(x)I^c} with factors at their qudit positions.
void accumulate_embedded(CMatrix& out, const CMatrix& R, std::uint32_t mask, double weight,
                         const AlignmentSpec& spec, const std::vector<std::vector<int>>& digits) {
    const int N = spec.total_dim();
    const int d = spec.d();
    const int n = spec.n();
    const CMatrix& Q = spec.Q().matrix();
    for (int r = 0; r < N; ++r) {
        const auto& dr = digits[r];
        for (int c = 0; c < N; ++c) {
            const auto& dc = digits[c];
            C v(weight, 0.0);
            for (int k = 0; k < n && v != C(0.0, 0.0); ++k)
                if (!(mask & (1u << k))) v *= Q(dr[k], dc[k]);
            if (v == C(0.0, 0.0)) continue;
            if (mask != 0) v *= R(project_index(dr, mask, d), project_index(dc, mask, d));
            out(r, c) += v;
        }
    }
}

std::vector<std::vector<int>> digit_table(int d, int n, int N) {
    std::vector<std::vector<int>> t(N);
    for (int i = 0; i < N; ++i) t[i] = digits_of(i, d, n);
    return t;
}

std::vector<C> tensor_power(const std::vector<C>& v, int times) {
    std::vector<C> out{C(1.0, 0.0)};
    for (int t = 0; t < times; ++t) {
        std::vector<C> next(out.size() * v.size());
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = 0; b < v.size(); ++b) next[a * v.size() + b] = out[a] * v[b];
        out = std::move(next);
    }
    return out;
}

CMatrix haar_unitary(int dim, Rng& rng) {
    // Ginibre columns + Gram-Schmidt.
    std::vector<std::vector<C>> cols(dim);
    for (int c = 0; c < dim; ++c) {
        cols[c].resize(dim);
        for (int r = 0; r < dim; ++r) cols[c][r] = C(rng.gaussian(), rng.gaussian());
        for (int p = 0; p < c; ++p) {
            C ip(0.0, 0.0);
            for (int r = 0; r < dim; ++r) ip += std::conj(cols[p][r]) * cols[c][r];
            for (int r = 0; r < dim; ++r) cols[c][r] -= ip * cols[p][r];
        }
        double norm2 = 0.0;
        for (int r = 0; r < dim; ++r) norm2 += std::norm(cols[c][r]);
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < dim; ++r) cols[c][r] *= inv;
    }
    CMatrix u(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) u(r, c) = cols[c][r];
    return u;
}

}  // namespace

AlignmentSpec::AlignmentSpec(int d, int n, std::map<std::uint32_t, double> mu, DensityOperator Q)
    : d_(d), n_(n), mu_(std::move(mu)), Q_(std::move(Q)) {
    if (d_ < 2) throw std::domain_error("AlignmentSpec: d must be >= 2");
    if (n_ < 1 || n_ > 20) throw std::domain_error("AlignmentSpec: n out of range");
    double dim = 1.0;
    for (int k = 0; k < n_; ++k) dim *= d_;
    if (dim > kMaxDim) throw std::domain_error("AlignmentSpec: d^n exceeds 256");
    total_dim_ = static_cast<int>(dim);
    if (Q_.dim() != d_) throw std::domain_error("AlignmentSpec: Q dim != d");
    double total = 0.0;
    for (const auto& [mask, w] : mu_) {
        if (mask >= (1u << n_)) throw std::domain_error("AlignmentSpec: subset mask out of range");
        if (w < 0.0) throw std::domain_error("AlignmentSpec: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::domain_error("AlignmentSpec: mu must sum to 1");
    qeig_ = eig_hermitian(Q_.matrix());
}

std::vector<C> AlignmentSpec::q_vector(int i) const {
    std::vector<C> v(d_);
    for (int r = 0; r < d_; ++r) v[r] = qeig_.vectors(r, i);
    return v;
}

StateTuple random_state_tuple(const AlignmentSpec& spec, Rng& rng) {
    StateTuple t;
    for (const auto& [mask, w] : spec.mu()) {
        if (w <= 0.0 || mask == 0) continue;
        t.vectors[mask] = random_unit_vector(pow_int(spec.d(), subset_size(mask)), rng);
    }
    return t;
}

StateTuple aligned_state_tuple(const AlignmentSpec& spec) {
    StateTuple t;
    const std::vector<C> q1 = spec.q_vector(0);
    for (const auto& [mask, w] : spec.mu()) {
        if (w <= 0.0 || mask == 0) continue;
        t.vectors[mask] = tensor_power(q1, subset_size(mask));
    }
    return t;
}

CMatrix alignment_operator(const AlignmentSpec& spec, const StateTuple& tuple) {
    const int N = spec.total_dim();
    const auto digits = digit_table(spec.d(), spec.n(), N);
    CMatrix out(N);
    for (const auto& [mask, w] : spec.mu()) {
        if (w <= 0.0) continue;
        if (mask == 0) {
            accumulate_embedded(out, CMatrix(1), mask, w, spec, digits);
            continue;
        }
        const auto it = tuple.vectors.find(mask);
        if (it == tuple.vectors.end()) throw std::invalid_argument("alignment_operator: tuple missing a charged subset");
        const int sub = pow_int(spec.d(), subset_size(mask));
        if (static_cast<int>(it->second.size()) != sub) throw std::invalid_argument("alignment_operator: vector dim mismatch");
        double norm2 = 0.0;
        for (const C& z : it->second) norm2 += std::norm(z);
        if (std::abs(norm2 - 1.0) > 2e-9) throw std::invalid_argument("alignment_operator: tuple vector not unit norm");
        accumulate_embedded(out, outer(it->second), mask, w, spec, digits);
    }
    return out;
}

CMatrix conjectured_optimum(const AlignmentSpec& spec) {
    return alignment_operator(spec, aligned_state_tuple(spec));
}

double fan_norm(const CMatrix& a, int k) {
    if (k < 1 || k > a.dim()) throw std::out_of_range("fan_norm: k outside [1, dim]");
    const std::vector<double> sv = singular_values(a);
    return std::accumulate(sv.begin(), sv.begin() + k, 0.0);
}

double schatten_norm(const CMatrix& a, double p) {
    if (!(p >= 1.0)) throw std::domain_error("schatten_norm: p must be >= 1");
    const std::vector<double> sv = singular_values(a);
    double s = 0.0;
    for (double v : sv) s += std::pow(v, p);
    return std::pow(s, 1.0 / p);
}

double schatten_norm_psd(const CMatrix& a, int m) {
    if (m < 1) throw std::domain_error("schatten_norm_psd: m must be >= 1");
    const int n = a.dim();
    double tr = 0.0;
    switch (m) {
        case 1:
            tr = a.trace().real();
            break;
        case 2: {
            const double f = a.frobenius_norm();
            tr = f * f;
            break;
        }
        case 3: {
            const CMatrix sq = a * a;
            C s(0.0, 0.0);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) s += sq(r, c) * a(c, r);
            tr = s.real();
            break;
        }
        case 4: {
            const CMatrix sq = a * a;
            const double f = sq.frobenius_norm();
            tr = f * f;
            break;
        }
        default: {
            CMatrix pw = a;
            for (int k = 1; k < m; ++k) pw = pw * a;
            tr = pw.trace().real();
            break;
        }
    }
    return std::pow(std::max(0.0, tr), 1.0 / m);
}

SchattenReport check_schatten_conjecture(const AlignmentSpec& spec, int m, int trials, std::uint64_t seed) {
    if (m < 2) throw std::domain_error("check_schatten_conjecture: m must be >= 2");
    SchattenReport report;
    report.trials = trials;
    report.opt_norm = schatten_norm_psd(conjectured_optimum(spec), m);
    std::vector<double> norms(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
        const StateTuple tuple = random_state_tuple(spec, rng);
        norms[t] = schatten_norm_psd(alignment_operator(spec, tuple), m);
    });
    for (double norm : norms) {
        report.max_ratio = std::max(report.max_ratio, norm / report.opt_norm);
        report.max_excess = std::max(report.max_excess, norm - report.opt_norm);
        if (norm > report.opt_norm + 1e-9) ++report.violations;
    }
    return report;
}

OverlapTraceResult overlap_trace(const std::vector<std::uint32_t>& subsets, const std::vector<CMatrix>& ops,
                                 const AlignmentSpec& spec) {
    if (subsets.size() != ops.size() || subsets.empty())
        throw std::invalid_argument("overlap_trace: one operator per subset required");
    const int N = spec.total_dim();
    const auto digits = digit_table(spec.d(), spec.n(), N);
    const std::vector<C> q1 = spec.q_vector(0);

    auto embedded = [&](std::uint32_t mask, const CMatrix& R) {
        CMatrix out(N);
        accumulate_embedded(out, R, mask, 1.0, spec, digits);
        return out;
    };

    CMatrix prod(1), opt(1);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        const int sub = pow_int(spec.d(), subset_size(subsets[j]));
        if (ops[j].dim() != sub) throw std::invalid_argument("overlap_trace: operator dim mismatch");
        const std::vector<double> sv = singular_values(ops[j]);
        if (std::accumulate(sv.begin(), sv.end(), 0.0) > 1.0 + 1e-7)
            throw std::invalid_argument("overlap_trace: operator trace norm exceeds 1");
        const CMatrix factor = embedded(subsets[j], ops[j]);
        const CMatrix opt_factor = embedded(subsets[j], outer(tensor_power(q1, subset_size(subsets[j]))));
        prod = (j == 0) ? factor : prod * factor;
        opt = (j == 0) ? opt_factor : opt * opt_factor;
    }
    return OverlapTraceResult{std::abs(prod.trace()), opt.trace().real()};
}

ClassicalReport classical_exhaustive_check(const AlignmentSpec& spec) {
    const int d = spec.d();
    const int n = spec.n();
    const int N = spec.total_dim();
    const std::vector<double>& lam = spec.q_values();

    // Charged subsets ordered by (|I|, mask) for deterministic reports.
    std::vector<std::pair<std::uint32_t, double>> charged;
    for (const auto& [mask, w] : spec.mu())
        if (w > 0.0) charged.push_back({mask, w});
    std::sort(charged.begin(), charged.end(), [](const auto& a, const auto& b) {
        const int sa = subset_size(a.first), sb = subset_size(b.first);
        return sa != sb ? sa < sb : a.first < b.first;
    });

    double count = 1.0;
    std::vector<int> radix(charged.size());
    for (std::size_t k = 0; k < charged.size(); ++k) {
        radix[k] = pow_int(d, subset_size(charged[k].first));
        count *= radix[k];
    }
    if (count > 1e6) throw std::domain_error("classical_exhaustive_check: enumeration budget exceeded");

    const auto digits = digit_table(d, n, N);

    // Diagonal (in Q's eigenbasis) of the alignment operator for one
    // classical assignment: strings[k] is the basis string for charged[k].
    auto diagonal_for = [&](const std::vector<int>& strings) {
        RealVector w(N, 0.0);
        for (int s = 0; s < N; ++s) {
            const auto& ds = digits[s];
            for (std::size_t k = 0; k < charged.size(); ++k) {
                const std::uint32_t mask = charged[k].first;
                if (project_index(ds, mask, d) != strings[k]) continue;
                double v = charged[k].second;
                for (int q = 0; q < n; ++q)
                    if (!(mask & (1u << q))) v *= lam[ds[q]];
                w[s] += v;
            }
        }
        return w;
    };

    const RealVector opt = diagonal_for(std::vector<int>(charged.size(), 0));

    ClassicalReport report;
    std::vector<int> strings(charged.size(), 0);
    for (;;) {
        ++report.assignments;
        if (!majorizes(opt, diagonal_for(strings))) ++report.violations;
        std::size_t k = 0;
        while (k < strings.size() && ++strings[k] == radix[k]) strings[k++] = 0;
        if (k == strings.size()) break;
        if (strings.empty()) break;
    }
    return report;
}

bool feasible_projector_pair(int r1, int r2, double c, int d) {
    if (r1 < 0 || r2 < 0 || r1 > d || r2 > d) throw std::domain_error("feasible_projector_pair: ranks outside [0,d]");
    if (c < 0.0) throw std::domain_error("feasible_projector_pair: c must be >= 0");
    return r1 + r2 - d <= static_cast<int>(std::floor(c));
}

namespace {

// Builds the pair from Jordan data in the frame's columns: `shared` columns
// in both supports, one partially overlapping 2-dim block per entry of
// `overlaps`, then exclusive columns for each projector.
ProjectorPair assemble_pair(int r1, int r2, int shared, const RealVector& overlaps, int d, const CMatrix& frame) {
    CMatrix p1(d), p2(d);
    auto col = [&](int c) {
        std::vector<C> v(d);
        for (int r = 0; r < d; ++r) v[r] = frame(r, c);
        return v;
    };
    int next = 0;
    for (int k = 0; k < shared; ++k) {
        const CMatrix pr = outer(col(next++));
        p1 += pr;
        p2 += pr;
    }
    for (double v : overlaps) {
        const std::vector<C> a = col(next++);
        const std::vector<C> b = col(next++);
        std::vector<C> beta(d);
        const double w = std::sqrt(std::max(0.0, 1.0 - v * v));
        for (int r = 0; r < d; ++r) beta[r] = v * a[r] + w * b[r];
        p1 += outer(a);
        p2 += outer(beta);
    }
    const int used1 = shared + static_cast<int>(overlaps.size());
    for (int k = used1; k < r1; ++k) p1 += outer(col(next++));
    for (int k = shared + static_cast<int>(overlaps.size()); k < r2; ++k) p2 += outer(col(next++));

    double ov = shared;
    for (double v : overlaps) ov += v;
    return ProjectorPair{d, std::move(p1), std::move(p2), r1, r2, ov};
}

}  // namespace

ProjectorPair optimal_projector_pair(int r1, int r2, double c, int d) {
    if (!feasible_projector_pair(r1, r2, c, d)) throw std::domain_error("optimal_projector_pair: infeasible parameters");
    if (c > std::min(r1, r2) + 1e-12) throw std::domain_error("optimal_projector_pair: c must be <= min(r1, r2)");
    const int whole = static_cast<int>(std::floor(c + 1e-12));
    const double frac = c - whole;
    RealVector overlaps;
    if (frac > 1e-12) overlaps.push_back(frac);
    // r1 + r2 - whole - (frac ? 1 : 0) columns needed; feasibility guarantees room.
    return assemble_pair(r1, r2, whole, overlaps, d, CMatrix::identity(d));
}

ProjectorPair sample_g_member(int r1, int r2, double budget, int d, Rng& rng) {
    if (!feasible_projector_pair(r1, r2, budget, d)) throw std::domain_error("sample_g_member: infeasible parameters");
    if (budget > std::min(r1, r2) + 1e-12) throw std::domain_error("sample_g_member: budget must be <= min(r1, r2)");
    const int lo = std::max(0, r1 + r2 - d);
    const int hi = std::min(static_cast<int>(std::floor(budget + 1e-12)), std::min(r1, r2));
    const int shared = lo + (hi > lo ? static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))) : 0);
    const int m2 = std::min(r1, r2) - shared;
    const double rem = budget - shared;

    RealVector v(m2);
    for (double& x : v) x = rng.uniform();
    double total = std::accumulate(v.begin(), v.end(), 0.0);
    if (m2 > 0) {
        if (total > rem) {
            for (double& x : v) x *= rem / total;
        } else if (total < rem) {
            // Bisect the interpolation toward the all-ones angle vector.
            double lo_t = 0.0, hi_t = 1.0;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo_t + hi_t);
                double s = 0.0;
                for (double x : v) s += x + mid * (1.0 - x);
                (s < rem ? lo_t : hi_t) = mid;
            }
            for (double& x : v) x += hi_t * (1.0 - x);
            // Absorb the bisection residual on the first block.
            double s = std::accumulate(v.begin(), v.end(), 0.0);
            v[0] = std::min(1.0, std::max(0.0, v[0] + (rem - s)));
        }
    }
    return assemble_pair(r1, r2, shared, v, d, haar_unitary(d, rng));
}

RealVector two_projector_spectrum(double s1, double s2, const RealVector& overlaps, const JordanBlockCounts& counts) {
    if (s1 < 0.0 || s2 < 0.0) throw std::domain_error("two_projector_spectrum: weights must be >= 0");
    for (double v : overlaps)
        if (v < 0.0 || v > 1.0) throw std::domain_error("two_projector_spectrum: overlaps must lie in [0,1]");
    RealVector out;
    out.reserve(overlaps.size() * 2 + counts.both + counts.only_first + counts.only_second + counts.neither);
    for (double v : overlaps) {
        const double disc = std::sqrt((s1 - s2) * (s1 - s2) + 4.0 * s1 * s2 * v * v);
        out.push_back(0.5 * ((s1 + s2) + disc));
        out.push_back(0.5 * ((s1 + s2) - disc));
    }
    out.insert(out.end(), counts.both, s1 + s2);
    out.insert(out.end(), counts.only_first, s1);
    out.insert(out.end(), counts.only_second, s2);
    out.insert(out.end(), counts.neither, 0.0);
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

}  // namespace equivox
