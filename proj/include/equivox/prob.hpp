// Probability measures on finite alphabets: entropies, total variation
// distance, and the block-permutation symmetries of the equivocation.
//
// Conventions: logarithms are base 2, entropies are in bits, 0·log 0 = 0.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace equivox {

// Entries in [-1e-12, 0) are clamped to zero at construction; anything more
// negative, or a total off 1 by more than 1e-9, is rejected.
inline constexpr double kNegativeClamp = 1e-12;
inline constexpr double kSumTolerance = 1e-9;

struct InvalidMeasure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Distribution {
  public:
    explicit Distribution(std::vector<double> probs);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }

  private:
    std::vector<double> probs_;
};

// Joint measure on X × Y, stored row-major: entry (i, j) at i*sizeY + j.
// Both alphabets must have at least two symbols.
class JointDistribution {
  public:
    JointDistribution(int sizeX, int sizeY, std::vector<double> rowMajor);

    int sizeX() const { return sizeX_; }
    int sizeY() const { return sizeY_; }
    double operator()(int i, int j) const { return probs_[static_cast<std::size_t>(i) * sizeY_ + j]; }
    const std::vector<double>& probs() const { return probs_; }

    Distribution marginal_x() const;
    Distribution marginal_y() const;
    double marginal_y(int j) const;

  private:
    int sizeX_;
    int sizeY_;
    std::vector<double> probs_;
};

// Element of S_{X|Y}: a permutation of the y blocks together with one
// x-permutation per source block. Acting on p gives
//   (g·p)(xPerms[j][i], yPerm[j]) = p(i, j).
struct BlockPermutation {
    std::vector<int> yPerm;
    std::vector<std::vector<int>> xPerms;

    static BlockPermutation identity(int sizeX, int sizeY);
    void validate(int sizeX, int sizeY) const;
};

double binary_entropy(double x);
double shannon_entropy(const Distribution& p);

// H(X|Y) via the per-block formula sum_j p_Y(j) H(X|Y=j); blocks with
// p_Y(j) = 0 contribute zero.
double conditional_entropy(const JointDistribution& p);

double tv_distance(const JointDistribution& p, const JointDistribution& q);

JointDistribution apply_block_permutation(const JointDistribution& p, const BlockPermutation& g);

// Shared helper: -sum v_i log2 v_i over raw (already nonnegative) weights.
double entropy_of_weights(const std::vector<double>& w);

}  // namespace equivox
