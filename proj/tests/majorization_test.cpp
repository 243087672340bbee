#include <doctest.h>

#include <cmath>
#include <numeric>

#include "equivox/majorization.hpp"
#include "equivox/rng.hpp"
#include "support/birkhoff.hpp"

using namespace equivox;

namespace {

RealVector apply_chain(RealVector v, const std::vector<TTransform>& chain) {
    for (const TTransform& T : chain) v = apply_t_transform(v, T);
    return v;
}

double max_abs_diff(const RealVector& a, const RealVector& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// x majorizing y via random mixing, both returned sorted descending.
std::pair<RealVector, RealVector> random_ordered_pair(int d, Rng& rng) {
    RealVector x = rng.simplex(d);
    RealVector y = x;
    const int moves = 1 + static_cast<int>(rng.below(4));
    for (int s = 0; s < moves; ++s) {
        const int i = static_cast<int>(rng.below(d));
        int j = static_cast<int>(rng.below(d));
        if (i == j) j = (j + 1) % d;
        y = apply_t_transform(y, TTransform{i, j, rng.uniform()});
    }
    return {sorted_descending(x), sorted_descending(y)};
}

}  // namespace

TEST_SUITE("majorization") {

TEST_CASE("majorizes on the stated examples") {
    CHECK(majorizes({1.0, 0.0}, {0.5, 0.5}));
    CHECK(majorizes({0.5, 0.3, 0.2}, {0.4, 0.4, 0.2}));
    CHECK_FALSE(majorizes({0.4, 0.4, 0.2}, {0.5, 0.3, 0.2}));
    CHECK_FALSE(majorizes({0.6, 0.4}, {0.5, 0.3}));  // totals differ
    CHECK_THROWS_AS(majorizes({1.0}, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("t-transform endpoints and the derived mix") {
    const RealVector x{0.7, 0.3};
    CHECK(apply_t_transform(x, {0, 1, 0.0}) == x);
    const RealVector flipped = apply_t_transform(x, {0, 1, 1.0});
    CHECK(flipped[0] == doctest::Approx(0.3));
    CHECK(flipped[1] == doctest::Approx(0.7));
    // oracle: (1-t)x_i + t x_j at t = 0.25
    const RealVector mixed = apply_t_transform(x, {0, 1, 0.25});
    CHECK(mixed[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(mixed[1] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(mixed[0] + mixed[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(majorizes(x, mixed));
    CHECK_THROWS_AS(apply_t_transform(x, {0, 5, 0.5}), std::out_of_range);
}

TEST_CASE("unjust transfer on sorted views") {
    CHECK(apply_unjust_transfer({0.6, 0.4}, {0, 1, 0.0}) == RealVector{0.6, 0.4});
    const RealVector a = apply_unjust_transfer({0.6, 0.4}, {0, 1, 0.4});
    CHECK(a[0] == doctest::Approx(1.0));
    CHECK(a[1] == doctest::Approx(0.0));
    const RealVector b = apply_unjust_transfer({0.5, 0.5}, {0, 1, 0.25});
    CHECK(b[0] == doctest::Approx(0.75));
    CHECK(b[1] == doctest::Approx(0.25));
    CHECK(majorizes(b, {0.5, 0.5}));
    CHECK_THROWS_AS(apply_unjust_transfer({0.5, 0.5}, {0, 1, -0.1}), std::invalid_argument);
    // would push rank 1 above rank 0
    CHECK_THROWS_AS(apply_unjust_transfer({0.5, 0.3, 0.2}, {1, 2, 0.5}), std::invalid_argument);
    // acts on the sorted view regardless of input order
    const RealVector c = apply_unjust_transfer({0.2, 0.8}, {0, 1, 0.1});
    CHECK(c[0] == doctest::Approx(0.1));
    CHECK(c[1] == doctest::Approx(0.9));
}

TEST_CASE("t-transform from unjust transfer: stated values") {
    CHECK(t_transform_from_unjust({0.7, 0.3}, {0.6, 0.4}).t == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(t_transform_from_unjust({0.5, 0.5}, {0.5, 0.5}).t == doctest::Approx(0.0));
    CHECK(t_transform_from_unjust({1.0, 0.0}, {0.5, 0.5}).t == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(t_transform_from_unjust({0.7, 0.3}, {0.8, 0.1}), std::invalid_argument);
}

TEST_CASE("round trip: unjust transfer then recovered T-transform") {
    Rng rng(31);
    for (int t = 0; t < 500; ++t) {
        const int d = 2 + static_cast<int>(rng.below(5));
        const RealVector x = sorted_descending(rng.simplex(d));
        const int i = static_cast<int>(rng.below(d - 1));
        const int j = i + 1 + static_cast<int>(rng.below(d - 1 - i));
        // keep the move inside the sorted-view validity region
        double cap = (i == 0 ? 1.0 : x[i - 1] - x[i]);
        cap = std::min(cap, j + 1 < d ? x[j] - x[j + 1] : 1.0);
        if (cap <= 0.0) continue;
        const double eps = cap * rng.uniform();
        const RealVector moved = apply_unjust_transfer(x, {i, j, eps});
        CHECK(majorizes(moved, x));
        const RealVector pair_after{moved[i], moved[j]};
        const RealVector pair_before{x[i], x[j]};
        const TTransform T = t_transform_from_unjust(pair_after, pair_before);
        const RealVector back = apply_t_transform(pair_after, T);
        CHECK(max_abs_diff(back, pair_before) <= 1e-10);
    }
}

TEST_CASE("witness chain on the stated examples") {
    CHECK(witness_chain({0.4, 0.6}, {0.4, 0.6}).empty());
    const RealVector x{1.0, 0.0, 0.0}, u{1.0 / 3, 1.0 / 3, 1.0 / 3};
    const auto chain = witness_chain(x, u);
    CHECK(chain.size() <= 2);
    CHECK(max_abs_diff(apply_chain(x, chain), u) <= 1e-8);
    const auto single = witness_chain({0.5, 0.3, 0.2}, {0.4, 0.4, 0.2});
    CHECK(single.size() == 1);
    CHECK(max_abs_diff(apply_chain({0.5, 0.3, 0.2}, single), {0.4, 0.4, 0.2}) <= 1e-8);
    CHECK_THROWS_AS(witness_chain({0.4, 0.4, 0.2}, {0.5, 0.3, 0.2}), NotMajorized);
}

TEST_CASE("witness chain reconstructs sorted targets in <= d-1 transforms") {
    Rng rng(8177);
    for (int t = 0; t < 400; ++t) {
        const int d = 2 + static_cast<int>(rng.below(5));
        const auto [x, y] = random_ordered_pair(d, rng);
        const auto chain = witness_chain(x, y);
        CHECK(chain.size() <= static_cast<std::size_t>(d - 1));
        CHECK(max_abs_diff(apply_chain(x, chain), y) <= 1e-8);
    }
}

TEST_CASE("witness chain lands on unsorted targets too") {
    Rng rng(4242);
    for (int t = 0; t < 200; ++t) {
        const int d = 2 + static_cast<int>(rng.below(4));
        auto [x, y] = random_ordered_pair(d, rng);
        // shuffle the target; transpositions may extend the chain
        for (int i = d - 1; i > 0; --i) std::swap(y[i], y[rng.below(i + 1)]);
        const auto chain = witness_chain(x, y);
        CHECK(max_abs_diff(apply_chain(x, chain), y) <= 1e-8);
    }
}

TEST_CASE("agreement with the Birkhoff-vertex oracle at d <= 4") {
    Rng rng(616);
    int positives = 0, negatives = 0;
    for (int t = 0; t < 600; ++t) {
        const int d = 2 + static_cast<int>(rng.below(3));
        if (t % 2 == 0) {
            const auto [x, y] = random_ordered_pair(d, rng);
            REQUIRE(majorizes(x, y));
            CHECK(testsupport::birkhoff_feasible(x, y));
            ++positives;
        } else {
            // unrelated same-sum vectors; skip the ambiguous near-boundary band
            const RealVector x = sorted_descending(rng.simplex(d));
            const RealVector y = sorted_descending(rng.simplex(d));
            if (majorizes(x, y)) {
                CHECK(testsupport::birkhoff_feasible(x, y));
            } else {
                double worst = 0.0, px = 0.0, py = 0.0;
                for (int k = 0; k + 1 < d; ++k) {
                    px += x[k];
                    py += y[k];
                    worst = std::min(worst, px - py);
                }
                if (worst < -1e-5) {
                    CHECK_FALSE(testsupport::birkhoff_feasible(x, y));
                    ++negatives;
                }
            }
        }
    }
    CHECK(positives > 100);
    CHECK(negatives > 100);
}

TEST_CASE("majorant vector form and dominance") {
    CHECK(majorant_vector(4, 2.5) == RealVector{1.0, 1.0, 0.5, 0.0});
    CHECK(majorant_vector(3, 3.0) == RealVector{1.0, 1.0, 1.0});
    CHECK(majorant_vector(5, 0.0) == RealVector{0.0, 0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_AS(majorant_vector(3, 3.5), std::invalid_argument);

    Rng rng(5150);
    for (int t = 0; t < 10000; ++t) {
        const int m = 2 + static_cast<int>(rng.below(5));
        const double e = rng.uniform() * m;
        const RealVector top = majorant_vector(m, e);
        // random element of S_e: entries in [0,1] summing to e
        RealVector v(m, 0.0);
        double left = e;
        for (int k = 0; k < m; ++k) {
            const double hi = std::min(1.0, left);
            double lo = left - (m - 1.0 - k);
            lo = std::max(0.0, lo);
            v[k] = lo + (hi - lo) * rng.uniform();
            left -= v[k];
        }
        CHECK(majorizes(top, v));
    }
}

}  // TEST_SUITE
