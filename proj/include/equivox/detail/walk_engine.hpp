// Step engine behind the simplex walk, templated on the scalar so the same
// moves run in binary64 and in exact rational arithmetic. All moves are
// additions/subtractions of grid entries (plus one division in the final
// block averaging), mirroring the three proof stages: reorder, per-block
// concentration, averaging.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace equivox::detail {

template <typename S>
struct BasicGrid {
    int x = 0;
    int y = 0;
    std::vector<S> a;  // row-major, entry (i,j) at i*y + j

    BasicGrid() = default;
    BasicGrid(int sx, int sy, std::vector<S> v) : x(sx), y(sy), a(std::move(v)) {}

    S& at(int i, int j) { return a[static_cast<std::size_t>(i) * y + j]; }
    const S& at(int i, int j) const { return a[static_cast<std::size_t>(i) * y + j]; }

    std::vector<S> column_marginal() const {
        std::vector<S> m(y, S(0));
        for (int j = 0; j < y; ++j)
            for (int i = 0; i < x; ++i) m[j] += at(i, j);
        return m;
    }
};

struct ReorderPlan {
    std::vector<int> yOrder;                // new block j holds old block yOrder[j]
    std::vector<std::vector<int>> xOrder;   // per new block: new row i holds old row xOrder[j][i]
    std::vector<int> isetSize;              // leading run length of I_j in the new frame
};

// Blocks sorted by q_Y - p_Y non-increasing; within each block the members of
// I_j = { i : q(i,j) >= p(i,j) } lead, each part sorted by q descending.
// All ties stable by original index.
template <typename S>
ReorderPlan plan_reorder(const BasicGrid<S>& p, const BasicGrid<S>& q) {
    ReorderPlan plan;
    const std::vector<S> py = p.column_marginal();
    const std::vector<S> qy = q.column_marginal();

    plan.yOrder.resize(q.y);
    std::iota(plan.yOrder.begin(), plan.yOrder.end(), 0);
    std::stable_sort(plan.yOrder.begin(), plan.yOrder.end(),
                     [&](int a, int b) { return qy[a] - py[a] > qy[b] - py[b]; });

    plan.xOrder.resize(q.y);
    plan.isetSize.resize(q.y);
    for (int jn = 0; jn < q.y; ++jn) {
        const int j = plan.yOrder[jn];
        std::vector<int> members, rest;
        for (int i = 0; i < q.x; ++i) {
            (q.at(i, j) >= p.at(i, j) ? members : rest).push_back(i);
        }
        auto by_q_desc = [&](int a, int b) { return q.at(a, j) > q.at(b, j); };
        std::stable_sort(members.begin(), members.end(), by_q_desc);
        std::stable_sort(rest.begin(), rest.end(), by_q_desc);
        plan.isetSize[jn] = static_cast<int>(members.size());
        members.insert(members.end(), rest.begin(), rest.end());
        plan.xOrder[jn] = std::move(members);
    }
    return plan;
}

template <typename S>
BasicGrid<S> apply_plan(const BasicGrid<S>& g, const ReorderPlan& plan) {
    BasicGrid<S> out(g.x, g.y, std::vector<S>(g.a.size(), S(0)));
    for (int jn = 0; jn < g.y; ++jn) {
        const int j = plan.yOrder[jn];
        for (int in = 0; in < g.x; ++in) out.at(in, jn) = g.at(plan.xOrder[jn][in], j);
    }
    return out;
}

// Bottom-to-top transfers applied to both measures: empties rows 1.. of q's
// block while keeping the entrywise |p - q| profile fixed. Requires
// p(i,j) >= q(i,j) for i >= 1 and q(0,j) >= p(0,j).
template <typename S, typename Emit>
void paired_transfers(BasicGrid<S>& p, BasicGrid<S>& q, int j, Emit&& emit) {
    for (int i = q.x - 1; i >= 1; --i) {
        const S s = q.at(i, j);
        if (!(s > S(0))) continue;
        q.at(0, j) += s;
        p.at(0, j) += s;
        q.at(i, j) = S(0);
        p.at(i, j) -= s;
        emit("transfer", i, j);
    }
}

// Processes one block: after this, q(i,j) = 0 for all i >= 1.
template <typename S, typename Emit>
void concentrate_block(BasicGrid<S>& p, BasicGrid<S>& q, int j, int isetSize, Emit&& emit) {
    if (isetSize > 0) {
        // Surplus of each I_j member flows to the top of q's block, leaving
        // q(i,j) = p(i,j) there; then transfers in both measures finish.
        for (int i = 1; i < isetSize; ++i) {
            const S delta = q.at(i, j) - p.at(i, j);
            q.at(i, j) = p.at(i, j);
            if (delta > S(0)) {
                q.at(0, j) += delta;
                emit("equalize", i, j);
            }
        }
        paired_transfers(p, q, j, emit);
        return;
    }
    // I_j empty: q < p entrywise here. Raise q's top from the bottom while
    // q(0,j) < p(0,j); if they meet, split at the crossing and switch to
    // paired transfers for the remaining mass.
    for (int i = q.x - 1; i >= 1; --i) {
        const S s = q.at(i, j);
        if (!(s > S(0))) continue;
        const S room = p.at(0, j) - q.at(0, j);
        if (s < room) {
            q.at(0, j) += s;
            q.at(i, j) = S(0);
            emit("raise", i, j);
        } else {
            q.at(0, j) = p.at(0, j);
            q.at(i, j) -= room;
            emit("raise", i, j);
            paired_transfers(p, q, j, emit);
            return;
        }
    }
}

// The block-averaging channel: every column becomes the mean column.
template <typename S>
void average_blocks(BasicGrid<S>& g) {
    for (int i = 0; i < g.x; ++i) {
        S mean(0);
        for (int j = 0; j < g.y; ++j) mean += g.at(i, j);
        mean /= S(g.y);
        for (int j = 0; j < g.y; ++j) g.at(i, j) = mean;
    }
}

template <typename S, typename Emit>
void run_walk(BasicGrid<S>& p, BasicGrid<S>& q, const ReorderPlan& plan, Emit&& emit) {
    for (int j = 0; j < q.y; ++j) concentrate_block(p, q, j, plan.isetSize[j], emit);
    average_blocks(p);
    average_blocks(q);
    emit("average", -1, -1);
}

}  // namespace equivox::detail
