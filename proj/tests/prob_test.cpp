#include <doctest.h>

#include <cmath>

#include "equivox/majorization.hpp"
#include "equivox/prob.hpp"
#include "equivox/rng.hpp"

using namespace equivox;

namespace {

JointDistribution nu_example() {
    // nu(1,1) = nu(2,2) = 1/2: no entropy in X given Y.
    return JointDistribution(2, 2, {0.5, 0.0, 0.0, 0.5});
}

BlockPermutation random_block_perm(int dX, int dY, Rng& rng) {
    BlockPermutation g = BlockPermutation::identity(dX, dY);
    for (int j = dY - 1; j > 0; --j) std::swap(g.yPerm[j], g.yPerm[rng.below(j + 1)]);
    for (auto& xp : g.xPerms)
        for (int i = dX - 1; i > 0; --i) std::swap(xp[i], xp[rng.below(i + 1)]);
    return g;
}

}  // namespace

TEST_SUITE("prob") {

TEST_CASE("shannon entropy on the stated points") {
    CHECK(shannon_entropy(Distribution({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(shannon_entropy(Distribution({1.0, 0.0, 0.0})) == doctest::Approx(0.0));
    // (1-e, e/(k-1), ...): entropy is e*log2(k-1) + h(e).
    const double e = 0.3;
    const int k = 5;
    std::vector<double> p{1.0 - e};
    for (int i = 1; i < k; ++i) p.push_back(e / (k - 1));
    CHECK(shannon_entropy(Distribution(p)) ==
          doctest::Approx(e * std::log2(k - 1.0) + binary_entropy(e)).epsilon(1e-12));
}

TEST_CASE("binary entropy values and symmetry") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    // oracle: direct evaluation, frozen
    CHECK(binary_entropy(0.75) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
    for (double x : {0.1, 0.3, 0.42}) CHECK(binary_entropy(x) == doctest::Approx(binary_entropy(1.0 - x)));
    CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
    CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("conditional entropy on the worked example") {
    CHECK(conditional_entropy(nu_example()) == doctest::Approx(0.0));
    // swapping (1,1) <-> (1,2) creates one full bit
    const JointDistribution swapped(2, 2, {0.0, 0.5, 0.0, 0.5});
    CHECK(conditional_entropy(swapped) == doctest::Approx(1.0).epsilon(1e-12));
    const JointDistribution uniform(2, 2, {0.25, 0.25, 0.25, 0.25});
    CHECK(conditional_entropy(uniform) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conditional entropy agrees with the chain rule route") {
    Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        const int dX = 2 + static_cast<int>(rng.below(3));
        const int dY = 2 + static_cast<int>(rng.below(3));
        const JointDistribution p(dX, dY, rng.simplex(static_cast<std::size_t>(dX) * dY));
        std::vector<double> flat = p.probs();
        const double joint = entropy_of_weights(flat);
        const double hy = shannon_entropy(p.marginal_y());
        CHECK(conditional_entropy(p) == doctest::Approx(joint - hy).epsilon(1e-9));
        CHECK(conditional_entropy(p) >= -1e-12);
        CHECK(conditional_entropy(p) <= std::log2(double(dX)) + 1e-9);
    }
}

TEST_CASE("conditional entropy skips empty blocks") {
    const JointDistribution p(2, 3, {0.5, 0.0, 0.25, 0.25, 0.0, 0.0});
    CHECK(std::isfinite(conditional_entropy(p)));
}

TEST_CASE("tv distance basics") {
    const JointDistribution p = nu_example();
    CHECK(tv_distance(p, p) == 0.0);
    const JointDistribution q(2, 2, {0.0, 0.5, 0.5, 0.0});
    CHECK(tv_distance(p, q) == doctest::Approx(1.0));
    CHECK_THROWS_AS(tv_distance(p, JointDistribution(2, 3, {0.5, 0, 0, 0, 0, 0.5})), ShapeMismatch);
}

TEST_CASE("tv is a metric on random triples") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const JointDistribution a(3, 2, rng.simplex(6));
        const JointDistribution b(3, 2, rng.simplex(6));
        const JointDistribution c(3, 2, rng.simplex(6));
        const double ab = tv_distance(a, b), ba = tv_distance(b, a);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0 + 1e-12);
        CHECK(tv_distance(a, c) <= ab + tv_distance(b, c) + 1e-12);
    }
}

TEST_CASE("block permutations preserve the equivocation") {
    const JointDistribution nu = nu_example();
    BlockPermutation ident = BlockPermutation::identity(2, 2);
    CHECK(apply_block_permutation(nu, ident).probs() == nu.probs());

    BlockPermutation swap_blocks = ident;
    std::swap(swap_blocks.yPerm[0], swap_blocks.yPerm[1]);
    CHECK(conditional_entropy(apply_block_permutation(nu, swap_blocks)) == doctest::Approx(0.0));

    BlockPermutation swap_in_block = ident;
    std::swap(swap_in_block.xPerms[1][0], swap_in_block.xPerms[1][1]);
    const JointDistribution moved = apply_block_permutation(nu, swap_in_block);
    CHECK(conditional_entropy(moved) == doctest::Approx(conditional_entropy(nu)));
    CHECK(moved(0, 1) == 0.5);
}

TEST_CASE("equivocation symmetry under random S_{X|Y} elements") {
    Rng rng(99);
    for (int t = 0; t < 300; ++t) {
        const int dX = 2 + static_cast<int>(rng.below(3));
        const int dY = 2 + static_cast<int>(rng.below(3));
        const JointDistribution p(dX, dY, rng.simplex(static_cast<std::size_t>(dX) * dY));
        const BlockPermutation g = random_block_perm(dX, dY, rng);
        const JointDistribution gp = apply_block_permutation(p, g);
        CHECK(std::abs(conditional_entropy(gp) - conditional_entropy(p)) <= 1e-12);
        CHECK(std::abs(tv_distance(p, p) - tv_distance(gp, gp)) <= 1e-15);
    }
}

TEST_CASE("Schur concavity of shannon entropy along witness chains") {
    Rng rng(512);
    for (int t = 0; t < 300; ++t) {
        const int d = 2 + static_cast<int>(rng.below(5));
        std::vector<double> x = rng.simplex(d);
        // random doubly-stochastic mixing produces a majorized y
        std::vector<double> y = x;
        for (int s = 0; s < 4; ++s) {
            const int i = static_cast<int>(rng.below(d));
            int j = static_cast<int>(rng.below(d));
            if (i == j) j = (j + 1) % d;
            y = apply_t_transform(y, TTransform{i, j, rng.uniform()});
        }
        REQUIRE(majorizes(x, y));
        CHECK(shannon_entropy(Distribution(x)) <= shannon_entropy(Distribution(y)) + 1e-9);
    }
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Distribution({0.5, 0.4}), InvalidMeasure);            // sums to 0.9
    CHECK_THROWS_AS(Distribution({1.1, -0.1}), InvalidMeasure);           // negative entry
    CHECK_NOTHROW(Distribution({1.0 + 0.5e-12, -0.5e-12}));               // clamped drift
    CHECK_THROWS_AS(JointDistribution(1, 2, {0.5, 0.5}), InvalidMeasure); // |X| >= 2
    const Distribution d({1.0 - 1e-13, 1e-13});
    CHECK(d[1] >= 0.0);
}

}  // TEST_SUITE
