#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "depthcore/geometry.hpp"

namespace dd::bench {

struct Row {
  std::string mode;
  std::size_t n;
  double update_seconds;  // mean per insertion/deletion
  double static_seconds;  // one from-scratch recompute at this size
};

// Deterministic point stream: distinct integer coordinates drawn from a wide
// range (collinear triples are measure-zero there; validation is Fast).
std::vector<Pt> gen_points(std::size_t n, std::uint64_t seed, bool distinct_x);

// Mean single-fan update time (one anchor, n companion points) plus the
// from-scratch fan rebuild time.
Row run_fan(std::size_t n, std::uint64_t seed, int reps);
// Full rank structure: mean insert/delete time plus a static all-depth
// recompute.
Row run_rank(std::size_t n, std::uint64_t seed, int reps);
// Cover structure: mean line insertion/deletion stitch time plus the static
// arrangement rebuild.
Row run_cover(std::size_t n, std::uint64_t seed, int reps);

std::string to_csv(const std::vector<Row>& rows);

}  // namespace dd::bench
