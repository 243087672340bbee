#include "equivox/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace equivox::io {

using nlohmann::json;

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string joint_to_json(const JointDistribution& p) {
    json rows = json::array();
    for (int i = 0; i < p.sizeX(); ++i) {
        json row = json::array();
        for (int j = 0; j < p.sizeY(); ++j) row.push_back(p(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"x", p.sizeX()}, {"y", p.sizeY()}, {"p", std::move(rows)}}.dump();
}

JointDistribution joint_from_json(const std::string& text) {
    const json doc = json::parse(text);
    const int x = doc.at("x").get<int>();
    const int y = doc.at("y").get<int>();
    const auto& rows = doc.at("p");
    if (!rows.is_array() || static_cast<int>(rows.size()) != x)
        throw InvalidMeasure("joint_from_json: \"p\" must hold x rows");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(x) * y);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != y) throw InvalidMeasure("joint_from_json: row length != y");
        for (const auto& v : row) grid.push_back(v.get<double>());
    }
    return JointDistribution(x, y, std::move(grid));
}

std::string joint_to_csv(const JointDistribution& p) {
    std::ostringstream out;
    out << "i,j,p\n";
    for (int i = 0; i < p.sizeX(); ++i)
        for (int j = 0; j < p.sizeY(); ++j) out << i << ',' << j << ',' << fmt_num(p(i, j)) << '\n';
    return out.str();
}

JointDistribution joint_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("i,j,p", 0) != 0)
        throw InvalidMeasure("joint_from_csv: missing \"i,j,p\" header");
    struct Cell {
        int i, j;
        double v;
    };
    std::vector<Cell> cells;
    int maxI = -1, maxJ = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Cell c{};
        if (std::sscanf(line.c_str(), "%d,%d,%lf", &c.i, &c.j, &c.v) != 3)
            throw InvalidMeasure("joint_from_csv: malformed line: " + line);
        if (c.i < 0 || c.j < 0) throw InvalidMeasure("joint_from_csv: negative index");
        maxI = std::max(maxI, c.i);
        maxJ = std::max(maxJ, c.j);
        cells.push_back(c);
    }
    std::vector<double> grid(static_cast<std::size_t>(maxI + 1) * (maxJ + 1), 0.0);
    for (const Cell& c : cells) grid[static_cast<std::size_t>(c.i) * (maxJ + 1) + c.j] = c.v;
    return JointDistribution(maxI + 1, maxJ + 1, std::move(grid));
}

JointDistribution joint_from_text(const std::string& text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return joint_from_json(text);
    return joint_from_csv(text);
}

std::string state_to_json(const BipartiteState& s) {
    const CMatrix& m = s.matrix();
    json re = json::array(), im = json::array();
    for (int r = 0; r < m.dim(); ++r) {
        json rr = json::array(), ri = json::array();
        for (int c = 0; c < m.dim(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return json{{"dA", s.dimA()}, {"dB", s.dimB()}, {"re", std::move(re)}, {"im", std::move(im)}}.dump();
}

BipartiteState state_from_json(const std::string& text) {
    const json doc = json::parse(text);
    const int dA = doc.at("dA").get<int>();
    const int dB = doc.at("dB").get<int>();
    const int n = dA * dB;
    const auto& re = doc.at("re");
    const auto& im = doc.at("im");
    if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
        throw InvalidMeasure("state_from_json: matrix size != dA*dB");
    CMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = {re[r][c].get<double>(), im[r][c].get<double>()};
    return BipartiteState(dA, dB, DensityOperator(std::move(m)));
}

std::string alignment_spec_to_json(const AlignmentSpec& spec) {
    json mu = json::object();
    for (const auto& [mask, w] : spec.mu()) mu[std::to_string(mask)] = w;
    json qe = json::array();
    for (double v : spec.q_values()) qe.push_back(v);
    return json{{"d", spec.d()}, {"n", spec.n()}, {"mu", std::move(mu)}, {"Q_eigs", std::move(qe)}}.dump();
}

AlignmentSpec alignment_spec_from_json(const std::string& text) {
    const json doc = json::parse(text);
    const int d = doc.at("d").get<int>();
    const int n = doc.at("n").get<int>();
    std::map<std::uint32_t, double> mu;
    for (const auto& [key, val] : doc.at("mu").items()) mu[static_cast<std::uint32_t>(std::stoul(key))] = val.get<double>();
    const auto& qe = doc.at("Q_eigs");
    if (static_cast<int>(qe.size()) != d) throw InvalidMeasure("alignment_spec_from_json: Q_eigs length != d");
    CMatrix q(d);
    for (int i = 0; i < d; ++i) q(i, i) = qe[i].get<double>();
    return AlignmentSpec(d, n, std::move(mu), DensityOperator(std::move(q)));
}

std::string trace_to_jsonl(const WalkTrace& trace) {
    std::ostringstream out;
    for (const WalkSnapshot& s : trace.steps) {
        out << json{{"step", s.label}, {"tv", s.tv}, {"gap", s.gap}}.dump() << '\n';
    }
    return out.str();
}

std::string bound_report_csv_header() { return "epsilon,gap,bound,slack,saturated"; }

std::string bound_report_to_csv(const BoundReport& r) {
    return fmt_num(r.epsilon) + "," + fmt_num(r.gap) + "," + fmt_num(r.bound) + "," + fmt_num(r.slack) + "," +
           (r.saturated ? "true" : "false");
}

std::string bound_report_to_json(const BoundReport& r) {
    return json{{"epsilon", r.epsilon}, {"gap", r.gap}, {"bound", r.bound}, {"slack", r.slack}, {"saturated", r.saturated}}
        .dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace equivox::io
