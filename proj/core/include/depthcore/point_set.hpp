#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "depthcore/errors.hpp"
#include "depthcore/geometry.hpp"

namespace dd {

// How much of the general-position contract insert() verifies.
//   Full: duplicates, shared x (cover mode), and the O(n^2) collinear scan.
//   Fast: duplicates and shared x only. Used by benchmarks whose generators
//         draw from ranges where collinear triples are vanishingly unlikely.
enum class Validation { Full, Fast };

struct Violation {
  Errc kind;
  PointId a = kNoPoint, b = kNoPoint;  // offending partners (q is implicit)
};

// The dynamic data set. Ids are assigned at insertion and never reused.
class PointSet {
 public:
  explicit PointSet(bool require_distinct_x = false, Validation v = Validation::Full)
      : distinct_x_(require_distinct_x), validation_(v) {}

  // nullopt means S + {q} keeps the active invariants.
  std::optional<Violation> check_insert(const Pt& q) const;

  PointId insert(const Pt& q);  // throws DepthError on violation
  void erase(PointId id);       // throws UnknownPoint

  const Pt& at(PointId id) const {
    const Pt* p = id < by_id_.size() ? by_id_[id] : nullptr;
    if (!p) throw_unknown(id);
    return *p;
  }
  std::optional<PointId> find(const Pt& q) const;
  bool contains(PointId id) const { return id < by_id_.size() && by_id_[id] != nullptr; }

  std::size_t size() const { return pts_.size(); }
  const std::map<PointId, Pt>& points() const { return pts_; }

  bool requires_distinct_x() const { return distinct_x_; }
  Validation validation() const { return validation_; }

 private:
  [[noreturn]] void throw_unknown(PointId id) const;

 public:

 private:
  std::map<PointId, Pt> pts_;
  std::vector<const Pt*> by_id_;  // O(1) id lookup; nullptr after erase
  std::map<std::pair<Rat, Rat>, PointId> by_coord_;
  std::map<Rat, int> x_count_;
  PointId next_id_ = 0;
  bool distinct_x_;
  Validation validation_;
};

}  // namespace dd
