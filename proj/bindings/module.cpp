// Python bindings for the main operations: entropies and distances,
// continuity bounds, the simplex walk, majorization witnesses, quantum
// bounds, alignment norms, and the erasure polynomials.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "equivox/erasure.hpp"
#include "equivox/majorization.hpp"
#include "equivox/quantum.hpp"
#include "equivox/spinalign.hpp"
#include "equivox/walk.hpp"

namespace py = pybind11;
using namespace equivox;

namespace {

using Grid = std::vector<std::vector<double>>;
using CGrid = std::vector<std::vector<std::complex<double>>>;

JointDistribution to_joint(const Grid& rows) {
    const int x = static_cast<int>(rows.size());
    const int y = x > 0 ? static_cast<int>(rows[0].size()) : 0;
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(x) * y);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != y) throw std::invalid_argument("ragged probability grid");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return JointDistribution(x, y, std::move(flat));
}

Grid from_joint(const JointDistribution& p) {
    Grid rows(p.sizeX(), std::vector<double>(p.sizeY()));
    for (int i = 0; i < p.sizeX(); ++i)
        for (int j = 0; j < p.sizeY(); ++j) rows[i][j] = p(i, j);
    return rows;
}

CMatrix to_cmatrix(const CGrid& rows) {
    const int n = static_cast<int>(rows.size());
    CMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n) throw std::invalid_argument("matrix must be square");
        for (int c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

CGrid from_cmatrix(const CMatrix& m) {
    CGrid rows(m.dim(), std::vector<std::complex<double>>(m.dim()));
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_equivox, m) {
    m.doc() = "continuity bounds for conditional entropies, majorization walks, and erasure simulation";

    // probability core
    m.def("shannon_entropy", [](const std::vector<double>& p) { return shannon_entropy(Distribution(p)); },
          py::arg("probs"));
    m.def("binary_entropy", &binary_entropy, py::arg("x"));
    m.def("conditional_entropy", [](const Grid& p) { return conditional_entropy(to_joint(p)); }, py::arg("grid"));
    m.def("tv_distance", [](const Grid& p, const Grid& q) { return tv_distance(to_joint(p), to_joint(q)); },
          py::arg("p"), py::arg("q"));

    // walk module
    m.def("bound_conditional", &bound_conditional, py::arg("epsilon"), py::arg("dx"));
    m.def("saturating_pair",
          [](double eps, int dX, int dY) {
              const auto [p, q] = saturating_pair(eps, dX, dY);
              return py::make_tuple(from_joint(p), from_joint(q));
          },
          py::arg("epsilon"), py::arg("dx"), py::arg("dy"));
    m.def("averaging_map", [](const Grid& p) { return from_joint(averaging_map(to_joint(p))); }, py::arg("grid"));
    m.def("verify_bound",
          [](const Grid& p, const Grid& q) {
              const BoundReport r = verify_bound(to_joint(p), to_joint(q));
              py::dict d;
              d["epsilon"] = r.epsilon;
              d["gap"] = r.gap;
              d["bound"] = r.bound;
              d["slack"] = r.slack;
              d["saturated"] = r.saturated;
              return d;
          },
          py::arg("p"), py::arg("q"));
    m.def("walk",
          [](const Grid& p, const Grid& q) {
              const WalkTrace trace = walk(to_joint(p), to_joint(q));
              py::list steps;
              for (const WalkSnapshot& s : trace.steps) {
                  py::dict d;
                  d["step"] = s.label;
                  d["tv"] = s.tv;
                  d["gap"] = s.gap;
                  steps.append(std::move(d));
              }
              py::dict out;
              out["steps"] = std::move(steps);
              out["swapped"] = trace.swapped;
              out["initial_tv"] = trace.initial_tv;
              out["final_p"] = from_joint(trace.steps.back().p);
              out["final_q"] = from_joint(trace.steps.back().q);
              out["violated_invariant"] = check_walk_trace(trace);
              return out;
          },
          py::arg("p"), py::arg("q"));

    // majorization
    m.def("majorizes", &majorizes, py::arg("x"), py::arg("y"));
    m.def("apply_t_transform",
          [](const RealVector& x, int i, int j, double t) { return apply_t_transform(x, TTransform{i, j, t}); },
          py::arg("x"), py::arg("i"), py::arg("j"), py::arg("t"));
    m.def("apply_unjust_transfer",
          [](const RealVector& x, int i, int j, double amount) {
              return apply_unjust_transfer(x, UnjustTransfer{i, j, amount});
          },
          py::arg("x"), py::arg("i"), py::arg("j"), py::arg("amount"));
    m.def("t_transform_from_unjust",
          [](const RealVector& x, const RealVector& y) { return t_transform_from_unjust(x, y).t; }, py::arg("x"),
          py::arg("y"));
    m.def("witness_chain",
          [](const RealVector& x, const RealVector& y) {
              py::list out;
              for (const TTransform& T : witness_chain(x, y)) out.append(py::make_tuple(T.i, T.j, T.t));
              return out;
          },
          py::arg("x"), py::arg("y"));
    m.def("majorant_vector", &majorant_vector, py::arg("m"), py::arg("e"));

    // quantum
    m.def("von_neumann_entropy", [](const CGrid& rho) { return von_neumann_entropy(DensityOperator(to_cmatrix(rho))); },
          py::arg("rho"));
    m.def("conditional_vn_entropy",
          [](int dA, int dB, const CGrid& rho) {
              return conditional_vn_entropy(BipartiteState(dA, dB, DensityOperator(to_cmatrix(rho))));
          },
          py::arg("dA"), py::arg("dB"), py::arg("rho"));
    m.def("trace_distance",
          [](const CGrid& rho, const CGrid& sigma) {
              return trace_distance(DensityOperator(to_cmatrix(rho)), DensityOperator(to_cmatrix(sigma)));
          },
          py::arg("rho"), py::arg("sigma"));
    m.def("winter_bound", &winter_bound, py::arg("epsilon"), py::arg("dA"));
    m.def("wilde_bound", &wilde_bound, py::arg("epsilon"), py::arg("d"));
    m.def("isotropic_pair",
          [](int d, double eps) {
              const auto [phi, iso] = isotropic_pair(d, eps);
              return py::make_tuple(from_cmatrix(phi.matrix()), from_cmatrix(iso.matrix()));
          },
          py::arg("d"), py::arg("epsilon"));

    // spin alignment
    m.def("fan_norm", [](const CGrid& a, int k) { return fan_norm(to_cmatrix(a), k); }, py::arg("a"), py::arg("k"));
    m.def("schatten_norm", [](const CGrid& a, double p) { return schatten_norm(to_cmatrix(a), p); }, py::arg("a"),
          py::arg("p"));
    m.def("feasible_projector_pair", &feasible_projector_pair, py::arg("r1"), py::arg("r2"), py::arg("c"),
          py::arg("d"));
    m.def("optimal_projector_pair",
          [](int r1, int r2, double c, int d) {
              const ProjectorPair pp = optimal_projector_pair(r1, r2, c, d);
              return py::make_tuple(from_cmatrix(pp.P1), from_cmatrix(pp.P2), pp.overlap);
          },
          py::arg("r1"), py::arg("r2"), py::arg("c"), py::arg("d"));
    m.def("two_projector_spectrum",
          [](double s1, double s2, const RealVector& overlaps, int both, int only_first, int only_second,
             int neither) {
              JordanBlockCounts counts{both, only_first, only_second, neither};
              return two_projector_spectrum(s1, s2, overlaps, counts);
          },
          py::arg("s1"), py::arg("s2"), py::arg("overlaps"), py::arg("both") = 0, py::arg("only_first") = 0,
          py::arg("only_second") = 0, py::arg("neither") = 0);

    // erasure
    m.def("erasure_capacity", &erasure_capacity, py::arg("q"), py::arg("d"));
    m.def("q4", &q4, py::arg("q"));
    m.def("improvement_threshold", &improvement_threshold);
    m.def("r4_bound", &r4_bound, py::arg("q"));
    m.def("ekr_recovery_bound", &ekr_recovery_bound, py::arg("n"), py::arg("q"));
}
