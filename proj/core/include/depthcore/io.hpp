#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "depthcore/geometry.hpp"
#include "depthcore/rank_engine.hpp"

namespace dd::io {

// Point text format: one `x y` pair per line, tokens decimal ("1.25") or
// rational ("5/4"); '#' starts a comment. Throws ParseError with the line
// number in the message.
std::vector<Pt> read_points(std::istream& in, const std::string& name = "<stream>");
std::vector<Pt> read_points_file(const std::string& path);

// Optional ingestion shear (x, y) -> (x + s*y, y); documented affine map for
// data with shared x-coordinates. Depth is affine invariant.
Pt shear(const Pt& p, const Rat& s);

// Engine state as a JSON object string: points in id order (ids normalized to
// their positions) and the per-bucket orders. Enough to rebuild exactly.
std::string dump_rank(const RankEngine& e);
// Rebuilds an engine from a dump produced by dump_rank. The engine must be
// freshly constructed.
void load_rank(RankEngine& e, const std::string& json_text);

std::string rat_json(const Rat& r);  // canonical "p/q" or integer string

}  // namespace dd::io
