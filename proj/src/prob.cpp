#include "equivox/prob.hpp"

#include <cmath>
#include <numeric>

namespace equivox {

namespace {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

std::vector<double> clamp_entries(std::vector<double> v, const char* what) {
    double total = 0.0;
    for (auto& x : v) {
        if (std::isnan(x) || x < -kNegativeClamp) {
            throw InvalidMeasure(std::string(what) + ": entry below -1e-12");
        }
        if (x < 0.0) x = 0.0;
        total += x;
    }
    if (std::abs(total - 1.0) > kSumTolerance) {
        throw InvalidMeasure(std::string(what) + ": entries sum to " + std::to_string(total));
    }
    return v;
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw InvalidMeasure("Distribution: length must be >= 1");
    probs_ = clamp_entries(std::move(probs_), "Distribution");
}

JointDistribution::JointDistribution(int sizeX, int sizeY, std::vector<double> rowMajor)
    : sizeX_(sizeX), sizeY_(sizeY), probs_(std::move(rowMajor)) {
    if (sizeX_ < 2 || sizeY_ < 2) throw InvalidMeasure("JointDistribution: |X|, |Y| must be >= 2");
    if (probs_.size() != static_cast<std::size_t>(sizeX_) * sizeY_) {
        throw InvalidMeasure("JointDistribution: grid size does not match |X|*|Y|");
    }
    probs_ = clamp_entries(std::move(probs_), "JointDistribution");
}

Distribution JointDistribution::marginal_x() const {
    std::vector<double> m(sizeX_, 0.0);
    for (int i = 0; i < sizeX_; ++i)
        for (int j = 0; j < sizeY_; ++j) m[i] += (*this)(i, j);
    return Distribution(std::move(m));
}

Distribution JointDistribution::marginal_y() const {
    std::vector<double> m(sizeY_, 0.0);
    for (int j = 0; j < sizeY_; ++j) m[j] = marginal_y(j);
    // marginal_y entries can individually miss the Distribution clamp only if
    // the grid did, which construction already rejected.
    return Distribution(std::move(m));
}

double JointDistribution::marginal_y(int j) const {
    double s = 0.0;
    for (int i = 0; i < sizeX_; ++i) s += (*this)(i, j);
    return s;
}

BlockPermutation BlockPermutation::identity(int sizeX, int sizeY) {
    BlockPermutation g;
    g.yPerm.resize(sizeY);
    std::iota(g.yPerm.begin(), g.yPerm.end(), 0);
    std::vector<int> idx(sizeX);
    std::iota(idx.begin(), idx.end(), 0);
    g.xPerms.assign(sizeY, idx);
    return g;
}

void BlockPermutation::validate(int sizeX, int sizeY) const {
    auto check = [](const std::vector<int>& perm, int n, const char* what) {
        if (perm.size() != static_cast<std::size_t>(n)) throw InvalidMeasure(std::string(what) + ": wrong length");
        std::vector<char> seen(n, 0);
        for (int v : perm) {
            if (v < 0 || v >= n || seen[v]) throw InvalidMeasure(std::string(what) + ": not a bijection");
            seen[v] = 1;
        }
    };
    check(yPerm, sizeY, "BlockPermutation.yPerm");
    if (xPerms.size() != static_cast<std::size_t>(sizeY)) throw InvalidMeasure("BlockPermutation.xPerms: wrong count");
    for (const auto& xp : xPerms) check(xp, sizeX, "BlockPermutation.xPerm");
}

double binary_entropy(double x) {
    if (std::isnan(x) || x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x outside [0,1]");
    return -xlog2x(x) - xlog2x(1.0 - x);
}

double entropy_of_weights(const std::vector<double>& w) {
    double h = 0.0;
    for (double x : w) h -= xlog2x(x);
    return h;
}

double shannon_entropy(const Distribution& p) {
    return entropy_of_weights(p.probs());
}

double conditional_entropy(const JointDistribution& p) {
    double h = 0.0;
    for (int j = 0; j < p.sizeY(); ++j) {
        const double py = p.marginal_y(j);
        if (py <= 0.0) continue;
        double hj = 0.0;
        for (int i = 0; i < p.sizeX(); ++i) hj -= xlog2x(p(i, j) / py);
        h += py * hj;
    }
    return h;
}

double tv_distance(const JointDistribution& p, const JointDistribution& q) {
    if (p.sizeX() != q.sizeX() || p.sizeY() != q.sizeY()) throw ShapeMismatch("tv_distance: shape mismatch");
    double s = 0.0;
    const auto& a = p.probs();
    const auto& b = q.probs();
    for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
    return 0.5 * s;
}

JointDistribution apply_block_permutation(const JointDistribution& p, const BlockPermutation& g) {
    g.validate(p.sizeX(), p.sizeY());
    std::vector<double> out(p.probs().size(), 0.0);
    for (int j = 0; j < p.sizeY(); ++j) {
        const int j2 = g.yPerm[j];
        for (int i = 0; i < p.sizeX(); ++i) {
            const int i2 = g.xPerms[j][i];
            out[static_cast<std::size_t>(i2) * p.sizeY() + j2] = p(i, j);
        }
    }
    return JointDistribution(p.sizeX(), p.sizeY(), std::move(out));
}

}  // namespace equivox
