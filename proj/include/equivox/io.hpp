// File formats: JSON/CSV codecs for joint distributions, quantum states,
// alignment specs, walk traces and bound reports.

#pragma once

#include <optional>
#include <string>

#include "equivox/prob.hpp"
#include "equivox/quantum.hpp"
#include "equivox/spinalign.hpp"
#include "equivox/walk.hpp"

namespace equivox::io {

// Compact fixed formatting used by every CSV/JSONL emitter so identical
// configs produce byte-identical files.
std::string fmt_num(double v);

// {"x": int, "y": int, "p": [[row-major reals]]}
std::string joint_to_json(const JointDistribution& p);
JointDistribution joint_from_json(const std::string& text);

// CSV with header "i,j,p", one cell per line (0-based indices).
std::string joint_to_csv(const JointDistribution& p);
JointDistribution joint_from_csv(const std::string& text);

// Reads either format, keyed on the leading non-space byte.
JointDistribution joint_from_text(const std::string& text);

// {"dA": int, "dB": int, "re": [[...]], "im": [[...]]}
std::string state_to_json(const BipartiteState& s);
BipartiteState state_from_json(const std::string& text);

// {"d": int, "n": int, "mu": {"<subset bitmask>": weight}, "Q_eigs": [...]}
std::string alignment_spec_to_json(const AlignmentSpec& spec);
AlignmentSpec alignment_spec_from_json(const std::string& text);

// One snapshot per line: {"step": tag, "tv": r, "gap": r}
std::string trace_to_jsonl(const WalkTrace& trace);

// "epsilon,gap,bound,slack,saturated"
std::string bound_report_csv_header();
std::string bound_report_to_csv(const BoundReport& r);
std::string bound_report_to_json(const BoundReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace equivox::io
