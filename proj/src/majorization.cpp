#include "equivox/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace equivox {

namespace {

constexpr double kOrderTol = 1e-9;

void require_finite(const RealVector& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
}

// Stable sort permutation by descending value (ties keep original index).
std::vector<int> sort_perm_desc(const RealVector& v) {
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
    return idx;
}

}  // namespace

RealVector sorted_descending(RealVector x) {
    std::stable_sort(x.begin(), x.end(), std::greater<double>());
    return x;
}

bool majorizes(const RealVector& x, const RealVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("majorizes: length mismatch");
    require_finite(x, "majorizes");
    require_finite(y, "majorizes");
    const RealVector xs = sorted_descending(x);
    const RealVector ys = sorted_descending(y);
    double px = 0.0, py = 0.0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        px += xs[k];
        py += ys[k];
        if (px < py - kOrderTol) return false;
    }
    px += xs.empty() ? 0.0 : xs.back();
    py += ys.empty() ? 0.0 : ys.back();
    return std::abs(px - py) <= kOrderTol;
}

RealVector apply_t_transform(const RealVector& x, const TTransform& T) {
    const int d = static_cast<int>(x.size());
    if (T.i < 0 || T.j < 0 || T.i >= d || T.j >= d) throw std::out_of_range("apply_t_transform: index out of range");
    if (T.i == T.j) throw std::invalid_argument("apply_t_transform: indices must differ");
    if (!(T.t >= 0.0 && T.t <= 1.0)) throw std::invalid_argument("apply_t_transform: t outside [0,1]");
    RealVector out = x;
    const double s = T.t * (x[T.j] - x[T.i]);
    out[T.i] = x[T.i] + s;
    out[T.j] = x[T.j] - s;
    return out;
}

RealVector apply_unjust_transfer(const RealVector& x, const UnjustTransfer& u) {
    const int d = static_cast<int>(x.size());
    if (u.amount < 0.0) throw std::invalid_argument("apply_unjust_transfer: negative amount");
    if (u.i < 0 || u.j >= d || u.i >= u.j) throw std::out_of_range("apply_unjust_transfer: need ranks 0 <= i < j < d");
    const std::vector<int> perm = sort_perm_desc(x);
    RealVector out = x;
    const int gi = perm[u.i];  // original index holding rank i
    const int gj = perm[u.j];
    const double vi = x[gi] + u.amount;
    const double vj = x[gj] - u.amount;
    // Keep the sorted view a sorted view: no rank crossings at either boundary.
    if (u.i > 0 && vi > x[perm[u.i - 1]] + kOrderTol)
        throw std::invalid_argument("apply_unjust_transfer: receiving entry would overtake its upper neighbor");
    if (u.j + 1 < d && vj < x[perm[u.j + 1]] - kOrderTol)
        throw std::invalid_argument("apply_unjust_transfer: giving entry would fall below its lower neighbor");
    out[gi] = vi;
    out[gj] = vj;
    return out;
}

TTransform t_transform_from_unjust(const RealVector& x, const RealVector& y) {
    if (x.size() != 2 || y.size() != 2)
        throw std::invalid_argument("t_transform_from_unjust: reduce to the affected pair (length 2)");
    const RealVector xs = sorted_descending(x);
    const RealVector ys = sorted_descending(y);
    const double eps = xs[0] - ys[0];
    const double eps2 = ys[1] - xs[1];
    if (eps < -kOrderTol || std::abs(eps - eps2) > kOrderTol)
        throw std::invalid_argument("t_transform_from_unjust: pair not related by a single unjust transfer");
    if (eps <= 0.0) return TTransform{0, 1, 0.0};
    const double t = eps / ((ys[0] - ys[1]) + 2.0 * eps);
    return TTransform{0, 1, t};
}

std::vector<TTransform> witness_chain(const RealVector& x, const RealVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("witness_chain: length mismatch");
    if (!majorizes(x, y)) throw NotMajorized("witness_chain: x does not majorize y");
    const int d = static_cast<int>(x.size());

    const std::vector<int> px = sort_perm_desc(x);
    const std::vector<int> py = sort_perm_desc(y);
    RealVector xs(d), ys(d);
    for (int k = 0; k < d; ++k) {
        xs[k] = x[px[k]];
        ys[k] = y[py[k]];
    }

    // Classic reduction on the sorted views: repeatedly fix the last rank
    // where xs exceeds ys with a single transform toward the first later
    // rank where xs falls short. Each step matches one more rank.
    std::vector<TTransform> chain;
    RealVector v = xs;
    for (int step = 0; step < d - 1; ++step) {
        int i = -1;
        for (int k = d - 1; k >= 0; --k)
            if (v[k] > ys[k] + kOrderTol) { i = k; break; }
        if (i < 0) break;
        int k2 = -1;
        for (int k = i + 1; k < d; ++k)
            if (v[k] < ys[k] - kOrderTol) { k2 = k; break; }
        if (k2 < 0) break;  // totals matched within tolerance; nothing to move
        const double delta = std::min(v[i] - ys[i], ys[k2] - v[k2]);
        const double t = delta / (v[i] - v[k2]);
        chain.push_back(TTransform{px[i], px[k2], t});
        v[i] -= delta;
        v[k2] += delta;
    }

    // v now equals ys; entries sit at x's rank positions px[k]. Finish with
    // transpositions so values land at y's own positions py[k].
    std::vector<int> pos(d);  // pos[k]: original slot currently holding rank-k value
    for (int k = 0; k < d; ++k) pos[k] = px[k];
    for (int k = 0; k < d; ++k) {
        if (pos[k] == py[k]) continue;
        int m = -1;
        for (int r = k + 1; r < d; ++r)
            if (pos[r] == py[k]) { m = r; break; }
        // Only swap when it moves the right value: ranks with equal values
        // are interchangeable, search picks the first matching slot.
        if (m < 0) continue;
        if (std::abs(ys[k] - ys[m]) <= kOrderTol) {
            std::swap(pos[k], pos[m]);  // same value, no move needed
            continue;
        }
        chain.push_back(TTransform{pos[k], pos[m], 1.0});
        std::swap(pos[k], pos[m]);
    }
    return chain;
}

RealVector majorant_vector(int m, double e) {
    if (m < 1) throw std::invalid_argument("majorant_vector: m must be >= 1");
    if (e < 0.0 || e > static_cast<double>(m)) throw std::invalid_argument("majorant_vector: need 0 <= e <= m");
    RealVector v(m, 0.0);
    const int whole = static_cast<int>(std::floor(e));
    for (int k = 0; k < whole && k < m; ++k) v[k] = 1.0;
    if (whole < m) v[whole] = e - whole;
    return v;
}

}  // namespace equivox
