#pragma once

#include "arclab/arc.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace arclab {

/// A point set as loaded from disk: shape-checked (codes below q, rows of
/// length k) but not required to be an arc, so diagnostic commands can
/// process bad inputs.
struct ArcData {
    Field field;
    int k = 0;
    std::vector<Vek> points;
};

/// Text format: header line "p h k n", then n rows of k element codes.
ArcData load_arc_text(std::istream& in);
void save_arc_text(std::ostream& out, const Field& f, int k, const std::vector<Vek>& points);

/// JSON object {"p": .., "h": .., "k": .., "n": .., "points": [[codes]..]}.
ArcData load_arc_json(std::istream& in);
void save_arc_json(std::ostream& out, const Field& f, int k, const std::vector<Vek>& points);

/// Reads a file in either format; JSON when the first non-space byte is '{'.
ArcData load_arc_file(const std::string& path);

Arc to_arc(const ArcData& data);

} // namespace arclab
