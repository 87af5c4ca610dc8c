#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "rrb/census.hpp"
#include "rrb/certificate.hpp"
#include "rrb/point_set.hpp"

namespace rrb {

// Documents are built as ordered JSON so that parse(serialize(x)) == x holds
// textually; rationals travel as "num/den" strings.
using Json = nlohmann::ordered_json;

struct PointFileError : std::runtime_error {
    int line;  // 1-based; 0 when the problem is not tied to a line
    PointFileError(int line_no, const std::string& message)
        : std::runtime_error(message), line(line_no) {}
};

// Point file format: one `x y c` line per point with c in {r, b}, ASCII
// decimal integers; `#` starts a comment; blank lines are ignored.
ColoredPointSet parse_point_text(const std::string& text);
ColoredPointSet read_point_file(const std::string& path);

// Canonical serialization: reds first, then blues, each sorted
// lexicographically, so written files are diff-stable.
std::string point_file_text(const ColoredPointSet& set);
void write_point_file(const ColoredPointSet& set, const std::string& path);

// FNV-1a 64 over the canonical text, as fixed-width hex.
std::string fingerprint(const ColoredPointSet& set);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json census_to_json(const Census& census);
Json certificate_to_json(const Certificate& cert);
Json instance_to_json(const ColoredPointSet& set);

// Skeleton report: {"schema_version": "1", "instance": {...}} to be extended
// by the caller with census/certificate/verification blocks.
Json make_report(const ColoredPointSet& set);

}  // namespace rrb
