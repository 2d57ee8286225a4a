#include "depthcore/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "depthcore/errors.hpp"

namespace dd::io {

using nlohmann::json;

std::vector<Pt> read_points(std::istream& in, const std::string& name) {
  std::vector<Pt> out;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs)) continue;  // blank
    if (!(ls >> ys) || (ls >> extra)) {
      throw DepthError(Errc::ParseError,
                       name + ":" + std::to_string(ln) + ": expected `x y`");
    }
    auto x = Rat::parse(xs);
    auto y = Rat::parse(ys);
    if (!x || !y) {
      throw DepthError(Errc::ParseError,
                       name + ":" + std::to_string(ln) + ": bad coordinate");
    }
    out.push_back(Pt{*x, *y});
  }
  return out;
}

std::vector<Pt> read_points_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DepthError(Errc::IoError, "cannot open " + path);
  return read_points(f, path);
}

Pt shear(const Pt& p, const Rat& s) { return Pt{p.x + s * p.y, p.y}; }

std::string rat_json(const Rat& r) { return r.str(); }

std::string dump_rank(const RankEngine& e) {
  json j;
  j["mode"] = "rank";
  json pts = json::array();
  std::vector<PointId> order;
  for (const auto& [id, p] : e.points().points()) {
    pts.push_back({{"x", rat_json(p.x)}, {"y", rat_json(p.y)}});
    order.push_back(id);
  }
  j["points"] = std::move(pts);
  auto index_of = [&](PointId id) {
    return static_cast<int>(std::lower_bound(order.begin(), order.end(), id) - order.begin());
  };
  json buckets = json::array();
  for (const auto& b : e.buckets()) {
    json bj = json::array();
    for (PointId id : b) bj.push_back(index_of(id));
    buckets.push_back(std::move(bj));
  }
  j["buckets"] = std::move(buckets);
  return j.dump();
}

void load_rank(RankEngine& e, const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.contains("points") || !j.contains("buckets"))
    throw DepthError(Errc::ParseError, "dump: malformed JSON");
  std::vector<PointId> ids;
  for (const auto& pj : j["points"]) {
    auto x = Rat::parse(pj.at("x").get<std::string>());
    auto y = Rat::parse(pj.at("y").get<std::string>());
    if (!x || !y) throw DepthError(Errc::ParseError, "dump: bad coordinate");
    ids.push_back(e.insert(Pt{*x, *y}));
  }
  std::vector<std::vector<PointId>> order;
  for (const auto& bj : j["buckets"]) {
    std::vector<PointId> b;
    for (const auto& v : bj) {
      int idx = v.get<int>();
      if (idx < 0 || idx >= static_cast<int>(ids.size()))
        throw DepthError(Errc::ParseError, "dump: bucket index out of range");
      b.push_back(ids[static_cast<std::size_t>(idx)]);
    }
    order.push_back(std::move(b));
  }
  e.reorder_buckets(order);
}

}  // namespace dd::io
