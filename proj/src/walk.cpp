#include "equivox/walk.hpp"

#include <cmath>

#include "equivox/detail/walk_engine.hpp"

namespace equivox {

namespace {

constexpr double kTraceTol = 1e-9;

using Grid = detail::BasicGrid<double>;

Grid to_grid(const JointDistribution& p) {
    return Grid(p.sizeX(), p.sizeY(), p.probs());
}

JointDistribution from_grid(const Grid& g) {
    return JointDistribution(g.x, g.y, g.a);
}

}  // namespace

double bound_conditional(double epsilon, int dX) {
    if (dX < 2) throw std::domain_error("bound_conditional: |X| must be >= 2");
    if (std::isnan(epsilon) || epsilon < 0.0 || epsilon > 1.0)
        throw std::domain_error("bound_conditional: epsilon outside [0,1]");
    const double knee = 1.0 - 1.0 / dX;
    if (epsilon >= knee) return std::log2(static_cast<double>(dX));
    return epsilon * std::log2(static_cast<double>(dX - 1)) + binary_entropy(epsilon);
}

std::pair<JointDistribution, JointDistribution> saturating_pair(double epsilon, int dX, int dY) {
    if (std::isnan(epsilon) || epsilon < 0.0 || epsilon > 1.0)
        throw std::domain_error("saturating_pair: epsilon outside [0,1]");
    const std::size_t cells = static_cast<std::size_t>(dX) * dY;
    std::vector<double> p(cells, 0.0), q(cells, 0.0);
    const double knee = 1.0 - 1.0 / dX;
    if (epsilon <= knee) {
        q[0] = 1.0;
        p[0] = 1.0 - epsilon;
        for (int i = 1; i < dX; ++i) p[static_cast<std::size_t>(i) * dY] = epsilon / (dX - 1);
    } else {
        p[0] = 1.0;
        for (int i = 0; i < dX; ++i) q[static_cast<std::size_t>(i) * dY] = 1.0 / dX;
    }
    return {JointDistribution(dX, dY, std::move(p)), JointDistribution(dX, dY, std::move(q))};
}

BoundReport verify_bound(const JointDistribution& p, const JointDistribution& q) {
    const double eps = tv_distance(p, q);  // also enforces matching shapes
    const double gap = std::abs(conditional_entropy(p) - conditional_entropy(q));
    const double bound = bound_conditional(eps, p.sizeX());
    const double slack = bound - gap;
    return BoundReport{eps, gap, bound, slack, slack <= kTraceTol};
}

ReorderResult reorder(const JointDistribution& p, const JointDistribution& q) {
    if (p.sizeX() != q.sizeX() || p.sizeY() != q.sizeY()) throw ShapeMismatch("reorder: shape mismatch");
    const Grid gp = to_grid(p);
    const Grid gq = to_grid(q);
    const detail::ReorderPlan plan = detail::plan_reorder(gp, gq);

    ReorderResult out{from_grid(detail::apply_plan(gp, plan)), from_grid(detail::apply_plan(gq, plan)), {}, {}};
    out.isets.resize(q.sizeY());
    for (int j = 0; j < q.sizeY(); ++j)
        for (int i = 0; i < plan.isetSize[j]; ++i) out.isets[j].push_back(i);

    // Express the plan as the S_{X|Y} element g with g·input = output.
    out.applied.yPerm.assign(q.sizeY(), 0);
    out.applied.xPerms.assign(q.sizeY(), std::vector<int>(q.sizeX(), 0));
    for (int jn = 0; jn < q.sizeY(); ++jn) {
        const int j = plan.yOrder[jn];
        out.applied.yPerm[j] = jn;
        for (int in = 0; in < q.sizeX(); ++in) out.applied.xPerms[j][plan.xOrder[jn][in]] = in;
    }
    return out;
}

JointDistribution averaging_map(const JointDistribution& p) {
    Grid g = to_grid(p);
    detail::average_blocks(g);
    return from_grid(g);
}

WalkTrace walk(const JointDistribution& pIn, const JointDistribution& qIn) {
    if (pIn.sizeX() != qIn.sizeX() || pIn.sizeY() != qIn.sizeY()) throw ShapeMismatch("walk: shape mismatch");
    const double tv0 = tv_distance(pIn, qIn);
    const double knee = 1.0 - 1.0 / pIn.sizeX();
    if (tv0 > knee + 1e-12)
        throw PreconditionViolated("walk: tv distance exceeds 1 - 1/|X|");

    WalkTrace trace;
    trace.initial_tv = tv0;
    trace.sizeX = pIn.sizeX();
    trace.sizeY = pIn.sizeY();
    trace.swapped = conditional_entropy(pIn) < conditional_entropy(qIn);

    const JointDistribution& p0 = trace.swapped ? qIn : pIn;
    const JointDistribution& q0 = trace.swapped ? pIn : qIn;

    auto snap = [&trace](const Grid& p, const Grid& q, std::string label) {
        JointDistribution jp = from_grid(p);
        JointDistribution jq = from_grid(q);
        const double tv = tv_distance(jp, jq);
        const double gap = conditional_entropy(jp) - conditional_entropy(jq);
        trace.steps.push_back(WalkSnapshot{std::move(jp), std::move(jq), tv, gap, std::move(label)});
    };

    Grid p = to_grid(p0);
    Grid q = to_grid(q0);
    snap(p, q, trace.swapped ? "input:swapped" : "input");

    const detail::ReorderPlan plan = detail::plan_reorder(p, q);
    p = detail::apply_plan(p, plan);
    q = detail::apply_plan(q, plan);
    snap(p, q, "reorder");

    detail::run_walk(p, q, plan, [&](const char* kind, int i, int j) {
        if (j >= 0) {
            snap(p, q, std::string(kind) + "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")");
        } else {
            snap(p, q, kind);
        }
    });
    return trace;
}

std::string check_walk_trace(const WalkTrace& trace) {
    if (trace.steps.empty()) return "trace is empty";
    for (std::size_t k = 0; k + 1 < trace.steps.size(); ++k) {
        if (trace.steps[k + 1].tv > trace.steps[k].tv + kTraceTol) return "tv increased at step " + std::to_string(k + 1);
        if (trace.steps[k + 1].gap < trace.steps[k].gap - kTraceTol) return "gap decreased at step " + std::to_string(k + 1);
    }
    const WalkSnapshot& last = trace.steps.back();
    if (conditional_entropy(last.q) > kTraceTol) return "final equivocation of q above 1e-9";
    const double bound = bound_conditional(trace.initial_tv, trace.sizeX);
    if (last.gap > bound + kTraceTol) return "final gap exceeds bound";
    if (shannon_entropy(last.p.marginal_x()) > bound + kTraceTol) return "final marginal estimate exceeds bound";
    for (int j = 0; j < last.q.sizeY(); ++j) {
        if (std::abs(last.q(0, j) - 1.0 / last.q.sizeY()) > kTraceTol) return "final q is not the uniform-Y point-mass product";
        for (int i = 1; i < last.q.sizeX(); ++i)
            if (last.q(i, j) > kTraceTol) return "final q has mass outside its first row";
    }
    // the averaging step leaves p a product with uniform Y marginal
    for (int j = 0; j < last.p.sizeY(); ++j) {
        if (std::abs(last.p.marginal_y(j) - 1.0 / last.p.sizeY()) > kTraceTol) return "final p lacks the uniform Y marginal";
        for (int i = 0; i < last.p.sizeX(); ++i)
            if (std::abs(last.p(i, j) - last.p(i, 0)) > kTraceTol) return "final p is not a product distribution";
    }
    return {};
}

}  // namespace equivox
