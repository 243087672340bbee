#include "equivox/search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "equivox/io.hpp"
#include "equivox/parallel.hpp"
#include "equivox/quantum.hpp"
#include "equivox/walk.hpp"

namespace equivox {

namespace {

// Aggregates per-trial rows deterministically (by slack, then seed).
SearchSummary summarize(std::string kind, std::uint64_t seed, double tolerance, std::vector<TrialRow> rows) {
    SearchSummary s;
    s.kind = std::move(kind);
    s.trials = static_cast<int>(rows.size());
    s.seed = seed;
    s.tolerance = tolerance;
    s.min_slack = rows.empty() ? 0.0 : rows.front().slack;
    for (const TrialRow& r : rows) {
        s.min_slack = std::min(s.min_slack, r.slack);
        s.max_excess = std::max(s.max_excess, -r.slack);
        if (r.slack < -tolerance) ++s.violations;
    }
    std::sort(rows.begin(), rows.end(), [](const TrialRow& a, const TrialRow& b) {
        return a.slack != b.slack ? a.slack < b.slack : a.seed < b.seed;
    });
    if (rows.size() > 10) rows.resize(10);
    s.worst = std::move(rows);
    return s;
}

}  // namespace

std::string SearchSummary::rows_csv() const {
    std::ostringstream out;
    out << "seed,epsilon,gap,bound,slack\n";
    for (const TrialRow& r : worst) {
        out << r.seed << ',' << io::fmt_num(r.epsilon) << ',' << io::fmt_num(r.gap) << ',' << io::fmt_num(r.bound)
            << ',' << io::fmt_num(r.slack) << '\n';
    }
    return out.str();
}

std::string SearchSummary::summary_line() const {
    std::ostringstream out;
    out << kind << ": trials=" << trials << " seed=" << seed << " violations=" << violations
        << " max_excess=" << io::fmt_num(max_excess) << " min_slack=" << io::fmt_num(min_slack);
    return out.str();
}

JointDistribution random_joint(int dX, int dY, Rng& rng) {
    return JointDistribution(dX, dY, rng.simplex(static_cast<std::size_t>(dX) * dY));
}

std::pair<JointDistribution, JointDistribution> random_constrained_pair(int dX, int dY, Rng& rng) {
    const JointDistribution p = random_joint(dX, dY, rng);
    JointDistribution q = random_joint(dX, dY, rng);
    const double knee = 1.0 - 1.0 / dX;
    const double tv = tv_distance(p, q);
    if (tv > knee) {
        // tv scales linearly along the segment toward p.
        const double t = 0.999 * knee / tv;
        std::vector<double> mix(p.probs().size());
        for (std::size_t k = 0; k < mix.size(); ++k) mix[k] = p.probs()[k] + t * (q.probs()[k] - p.probs()[k]);
        q = JointDistribution(dX, dY, std::move(mix));
    }
    return {p, q};
}

SearchSummary classical_search(int dX, int dY, int trials, std::uint64_t seed, double tolerance) {
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng = Rng::stream(seed, t);
        const JointDistribution p = random_joint(dX, dY, rng);
        const JointDistribution q = random_joint(dX, dY, rng);
        const double eps = tv_distance(p, q);
        const double gap = std::abs(conditional_entropy(p) - conditional_entropy(q));
        const double bound = bound_conditional(eps, dX);
        rows[t] = TrialRow{splitmix64(seed ^ splitmix64(t + 0x51ed2701ULL)), eps, gap, bound, bound - gap};
    });
    return summarize("classical", seed, tolerance, std::move(rows));
}

SearchSummary winter_search(int dA, int trials, std::uint64_t seed, double tolerance) {
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng = Rng::stream(seed, t);
        const int n = dA * dA;
        const BipartiteState rho(dA, dA, random_mixed_state(n, rng));
        const BipartiteState sigma(dA, dA, random_mixed_state(n, rng));
        const double eps = trace_distance(rho.state(), sigma.state());
        const double gap = std::abs(conditional_vn_entropy(rho) - conditional_vn_entropy(sigma));
        const double bound = winter_bound(eps, dA);
        rows[t] = TrialRow{splitmix64(seed ^ splitmix64(t + 0x51ed2701ULL)), eps, gap, bound, bound - gap};
    });
    return summarize("winter", seed, tolerance, std::move(rows));
}

SearchSummary wilde_search(int d, int trials, std::uint64_t seed, double tolerance) {
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng = Rng::stream(seed, t);
        const int n = d * d;
        const BipartiteState rho(d, d, random_mixed_state(n, rng));
        const BipartiteState sigma(d, d, random_mixed_state(n, rng));
        const double eps = trace_distance(rho.state(), sigma.state());
        const double gap = std::abs(conditional_vn_entropy(rho) - conditional_vn_entropy(sigma));
        const double bound = wilde_bound(eps, d);
        rows[t] = TrialRow{splitmix64(seed ^ splitmix64(t + 0x51ed2701ULL)), eps, gap, bound, bound - gap};
    });
    return summarize("wilde", seed, tolerance, std::move(rows));
}

SearchSummary wilde_bell_diagonal_search(int d, int trials, std::uint64_t seed, double tolerance) {
    const MaxEntangledBasis basis = bell_basis(d);
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng = Rng::stream(seed, t);
        const BipartiteState rho(d, d, random_bell_diagonal(basis, rng));
        const BipartiteState sigma(d, d, random_bell_diagonal(basis, rng));
        const double eps = trace_distance(rho.state(), sigma.state());
        const double gap = std::abs(conditional_vn_entropy(rho) - conditional_vn_entropy(sigma));
        const double bound = wilde_bound(eps, d);
        rows[t] = TrialRow{splitmix64(seed ^ splitmix64(t + 0x51ed2701ULL)), eps, gap, bound, bound - gap};
    });
    return summarize("wilde-bell", seed, tolerance, std::move(rows));
}

SearchSummary overlap_search(const AlignmentSpec& spec, const std::vector<std::uint32_t>& subsets, int trials,
                             std::uint64_t seed, double tolerance) {
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng = Rng::stream(seed, t);
        std::vector<CMatrix> ops;
        ops.reserve(subsets.size());
        for (std::uint32_t mask : subsets) {
            int sub = 1;
            for (int k = 0; k < spec.n(); ++k)
                if (mask & (1u << k)) sub *= spec.d();
            CMatrix g(sub);
            for (int r = 0; r < sub; ++r)
                for (int c = 0; c < sub; ++c) g(r, c) = {rng.gaussian(), rng.gaussian()};
            double tn = 0.0;
            for (double sv : singular_values(g)) tn += sv;
            g *= 1.0 / tn;
            ops.push_back(std::move(g));
        }
        const OverlapTraceResult res = overlap_trace(subsets, ops, spec);
        rows[t] = TrialRow{splitmix64(seed ^ splitmix64(t + 0x51ed2701ULL)), 0.0, res.value, res.optimum,
                           res.optimum - res.value};
    });
    return summarize("overlap", seed, tolerance, std::move(rows));
}

SearchSummary walk_soundness_search(int dX, int dY, int trials, std::uint64_t seed, double tolerance) {
    std::vector<TrialRow> rows(static_cast<std::size_t>(trials));
    std::vector<char> broken(static_cast<std::size_t>(trials), 0);
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
        Rng rng = Rng::stream(seed, t);
        const auto [p, q] = random_constrained_pair(dX, dY, rng);
        const WalkTrace trace = walk(p, q);
        const std::string issue = check_walk_trace(trace);
        const double bound = bound_conditional(trace.initial_tv, dX);
        const double final_gap = trace.steps.back().gap;
        broken[t] = issue.empty() ? 0 : 1;
        rows[t] = TrialRow{splitmix64(seed ^ splitmix64(t + 0x51ed2701ULL)), trace.initial_tv, final_gap, bound,
                           issue.empty() ? bound - final_gap : -1.0};
    });
    SearchSummary s = summarize("walk", seed, tolerance, std::move(rows));
    s.violations = 0;
    for (char b : broken) s.violations += b;
    return s;
}

}  // namespace equivox
