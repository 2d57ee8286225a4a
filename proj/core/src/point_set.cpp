#include "depthcore/point_set.hpp"

namespace dd {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::CollinearTriple: return "CollinearTriple";
    case Errc::SharedXCoordinate: return "SharedXCoordinate";
    case Errc::DuplicateDirection: return "DuplicateDirection";
    case Errc::MissingDirection: return "MissingDirection";
    case Errc::EmptyTree: return "EmptyTree";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DegeneratePair: return "DegeneratePair";
    case Errc::StillDegenerate: return "StillDegenerate";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::OrderViolation: return "OrderViolation";
    case Errc::EmptyContour: return "EmptyContour";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

std::optional<Violation> PointSet::check_insert(const Pt& q) const {
  if (auto it = by_coord_.find({q.x, q.y}); it != by_coord_.end())
    return Violation{Errc::DuplicatePoint, it->second};
  if (distinct_x_) {
    if (auto it = x_count_.find(q.x); it != x_count_.end()) {
      for (const auto& [id, p] : pts_)
        if (p.x == q.x) return Violation{Errc::SharedXCoordinate, id};
    }
  }
  if (validation_ == Validation::Full) {
    std::vector<std::pair<PointId, const Pt*>> v;
    v.reserve(pts_.size());
    for (const auto& [id, p] : pts_) v.emplace_back(id, &p);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (orient(*v[i].second, *v[j].second, q) == 0)
          return Violation{Errc::CollinearTriple, v[i].first, v[j].first};
  }
  return std::nullopt;
}

PointId PointSet::insert(const Pt& q) {
  if (auto bad = check_insert(q)) {
    throw DepthError(bad->kind,
                     std::string(errc_name(bad->kind)) + " inserting " + pt_str(q),
                     bad->a, bad->b);
  }
  PointId id = next_id_++;
  auto it = pts_.emplace(id, q).first;
  by_id_.resize(next_id_, nullptr);
  by_id_[id] = &it->second;
  by_coord_.emplace(std::make_pair(q.x, q.y), id);
  x_count_[q.x] += 1;
  return id;
}

void PointSet::throw_unknown(PointId id) const {
  throw DepthError(Errc::UnknownPoint, "at: unknown id", id);
}

void PointSet::erase(PointId id) {
  auto it = pts_.find(id);
  if (it == pts_.end()) throw DepthError(Errc::UnknownPoint, "erase: unknown id", id);
  const Pt& p = it->second;
  by_coord_.erase({p.x, p.y});
  if (auto xc = x_count_.find(p.x); xc != x_count_.end() && --xc->second == 0)
    x_count_.erase(xc);
  by_id_[id] = nullptr;
  pts_.erase(it);
}

std::optional<PointId> PointSet::find(const Pt& q) const {
  auto it = by_coord_.find({q.x, q.y});
  if (it == by_coord_.end()) return std::nullopt;
  return it->second;
}

}  // namespace dd
