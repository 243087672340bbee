// Exact-rational audit mode for the walk. Same step engine as the binary64
// path; measures and total variation are exact, so small cases can assert
// equalities instead of tolerances. Entropy gaps (which need logarithms) are
// reported in binary64.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "equivox/detail/walk_engine.hpp"

namespace equivox::exact {

using Rational = boost::multiprecision::cpp_rational;
using Grid = detail::BasicGrid<Rational>;

struct Step {
    std::string label;
    Grid p;
    Grid q;
    Rational tv;
};

inline Rational tv_distance(const Grid& a, const Grid& b) {
    Rational s(0);
    for (std::size_t k = 0; k < a.a.size(); ++k) {
        Rational d = a.a[k] - b.a[k];
        if (d < 0) d = -d;
        s += d;
    }
    return s / 2;
}

inline double conditional_entropy(const Grid& g) {
    double h = 0.0;
    for (int j = 0; j < g.y; ++j) {
        Rational col(0);
        for (int i = 0; i < g.x; ++i) col += g.at(i, j);
        if (col == 0) continue;
        const double py = static_cast<double>(col);
        for (int i = 0; i < g.x; ++i) {
            const double v = static_cast<double>(Rational(g.at(i, j) / col));
            if (v > 0.0) h -= py * v * std::log2(v);
        }
    }
    return h;
}

// Runs the full reorder/concentrate/average walk on exact measures. The
// caller orders the arguments (first one with the larger equivocation).
inline std::vector<Step> walk(Grid p, Grid q) {
    std::vector<Step> steps;
    auto snap = [&](std::string label) {
        steps.push_back(Step{std::move(label), p, q, tv_distance(p, q)});
    };
    snap("input");
    const detail::ReorderPlan plan = detail::plan_reorder(p, q);
    p = detail::apply_plan(p, plan);
    q = detail::apply_plan(q, plan);
    snap("reorder");
    detail::run_walk(p, q, plan, [&](const char* kind, int i, int j) {
        if (j >= 0) {
            snap(std::string(kind) + "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")");
        } else {
            snap(kind);
        }
    });
    return steps;
}

}  // namespace equivox::exact
