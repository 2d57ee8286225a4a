// depthtool: stream updates into the dynamic depth structures, query depths
// and contours, export SVG, and run the scaling benchmarks.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "depthcore/bench_harness.hpp"
#include "depthcore/cover_engine.hpp"
#include "depthcore/io.hpp"
#include "depthcore/oracle.hpp"
#include "depthcore/rank_engine.hpp"
#include "depthcore/svg.hpp"

using nlohmann::json;
using namespace dd;

namespace {

json polygon_json(const Polygon& p) {
  const char* kind = "empty";
  switch (p.kind) {
    case Polygon::Kind::Empty: kind = "empty"; break;
    case Polygon::Kind::Point: kind = "point"; break;
    case Polygon::Kind::Segment: kind = "segment"; break;
    case Polygon::Kind::Poly: kind = "polygon"; break;
  }
  json verts = json::array();
  for (const Pt& v : p.verts) verts.push_back({io::rat_json(v.x), io::rat_json(v.y)});
  return json{{"kind", kind}, {"verts", std::move(verts)}};
}

// The cover structure needs pairwise distinct x-coordinates; points flow into
// it through the shear (x, y) -> (x + s*y, y), with s either user-supplied or
// auto-selected (rebuilt under the next candidate shear whenever a collision
// appears). Depth is affine invariant, and contours are sheared back before
// output, so results are always in original coordinates.
struct RunState {
  std::unique_ptr<RankEngine> rank;
  std::unique_ptr<CoverEngine> cover;
  Rat shear{0};
  bool manual_shear = false;
  std::vector<Pt> log;  // alive points in insertion order, original coordinates

  Pt to_cover(const Pt& p) const { return io::shear(p, shear); }
  Pt from_cover(const Pt& p) const { return Pt{p.x - shear * p.y, p.y}; }

  void cover_insert(const Pt& p) {
    try {
      cover->insert(to_cover(p));
      return;
    } catch (const DepthError& e) {
      if (e.code() != Errc::SharedXCoordinate || manual_shear) throw;
    }
    for (long den = 1; den <= 64; ++den) {
      Rat s(1, den);
      auto fresh = std::make_unique<CoverEngine>(Validation::Full);
      bool ok = true;
      try {
        for (const Pt& q : log) fresh->insert(io::shear(q, s));
        fresh->insert(io::shear(p, s));
      } catch (const DepthError& e) {
        if (e.code() != Errc::SharedXCoordinate) throw;
        ok = false;
      }
      if (ok) {
        cover = std::move(fresh);
        shear = s;
        return;
      }
    }
    throw DepthError(Errc::SharedXCoordinate, "no usable shear found");
  }

  void insert(const Pt& p) {
    if (rank) rank->insert(p);
    if (cover) {
      try {
        cover_insert(p);
      } catch (...) {
        if (rank) rank->erase_at(p);
        throw;
      }
    }
    log.push_back(p);
  }

  void erase(const Pt& p) {
    if (rank) rank->erase_at(p);
    if (cover) cover->erase_at(to_cover(p));
    for (auto it = log.begin(); it != log.end(); ++it)
      if (*it == p) {
        log.erase(it);
        break;
      }
  }

  Polygon cover_contour(int k) const {
    Polygon raw = cover->cover_contour(k);
    if (shear.sign() == 0) return raw;
    std::vector<Pt> verts;
    verts.reserve(raw.verts.size());
    for (const Pt& v : raw.verts) verts.push_back(from_cover(v));
    if (raw.kind != Polygon::Kind::Poly) {
      Polygon out = raw;
      out.verts = std::move(verts);
      if (out.kind == Polygon::Kind::Segment && lex_less(out.verts[1], out.verts[0]))
        std::swap(out.verts[0], out.verts[1]);
      return out;
    }
    return canonical_polygon(std::move(verts));
  }
};

Pt parse_pt(const std::string& xs, const std::string& ys, const std::string& where) {
  auto x = Rat::parse(xs);
  auto y = Rat::parse(ys);
  if (!x || !y) throw DepthError(Errc::ParseError, where + ": bad coordinate");
  return Pt{*x, *y};
}

int run_script(RunState& st, std::istream& in, std::ostream& out) {
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string cmd;
    if (!(ls >> cmd)) continue;
    std::string where = "script:" + std::to_string(ln);
    try {
      if (cmd == "insert" || cmd == "delete" || cmd == "depth") {
        std::string xs, ys;
        if (!(ls >> xs >> ys))
          throw DepthError(Errc::ParseError, where + ": expected `" + cmd + " x y`");
        Pt p = parse_pt(xs, ys, where);
        if (cmd == "insert") {
          st.insert(p);
          out << json{{"ok", "insert"}}.dump() << '\n';
        } else if (cmd == "delete") {
          st.erase(p);
          out << json{{"ok", "delete"}}.dump() << '\n';
        } else {
          if (!st.rank)
            throw DepthError(Errc::ParseError, where + ": depth needs mode fan|rank|all");
          auto id = st.rank->points().find(p);
          if (!id) throw DepthError(Errc::UnknownPoint, where + ": no such point");
          auto [num, den] = st.rank->depth_of(*id);
          out << json{{"depth", {{"num", num}, {"den", den}}}}.dump() << '\n';
        }
      } else if (cmd == "rank-contour") {
        int m;
        if (!(ls >> m)) throw DepthError(Errc::ParseError, where + ": expected `rank-contour m`");
        if (!st.rank)
          throw DepthError(Errc::ParseError, where + ": rank-contour needs mode fan|rank|all");
        out << json{{"rank-contour", polygon_json(st.rank->rank_contour(m))}}.dump() << '\n';
      } else if (cmd == "cover-contour") {
        int k;
        if (!(ls >> k)) throw DepthError(Errc::ParseError, where + ": expected `cover-contour k`");
        if (!st.cover)
          throw DepthError(Errc::ParseError, where + ": cover-contour needs mode cover|all");
        out << json{{"cover-contour", polygon_json(st.cover_contour(k))}}.dump() << '\n';
      } else if (cmd == "dump") {
        json d;
        if (st.rank) d = json::parse(io::dump_rank(*st.rank));
        else {
          d["mode"] = "cover";
          json pts = json::array();
          for (const auto& [id, p] : st.cover->points().points())
            pts.push_back({{"x", io::rat_json(p.x)}, {"y", io::rat_json(p.y)}});
          d["points"] = std::move(pts);
        }
        out << json{{"dump", std::move(d)}}.dump() << '\n';
      } else {
        throw DepthError(Errc::ParseError, where + ": unknown command `" + cmd + "`");
      }
    } catch (const DepthError& e) {
      json err{{"error",
                {{"code", errc_name(e.code())}, {"line", ln}, {"message", e.what()}}}};
      out << err.dump() << '\n';
      out.flush();
      if (e.code() == Errc::ParseError) return 1;
      if (e.code() == Errc::IoError) return 3;
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic half-space depth and depth-contour engine"};
  app.require_subcommand(1);

  std::string run_mode = "all", bench_mode, svg_mode = "cover";
  std::string input, script, outfile;
  std::string shear_str;
  std::uint64_t seed = 1;

  auto* run = app.add_subcommand("run", "execute an update/query command stream");
  run->add_option("--mode", run_mode, "fan|rank|cover|all");
  run->add_option("--input", input, "point file loaded before the script");
  run->add_option("--script", script, "command file (default: stdin)");
  run->add_option("--seed", seed, "accepted for interface parity");
  run->add_option("--shear", shear_str, "pre-shear factor: (x,y) -> (x + s*y, y)");
  run->add_option("--out", outfile, "output file (default: stdout)");

  std::string sizes_csv;
  int reps = 0;
  auto* bench = app.add_subcommand("bench", "scaling measurement, CSV output");
  bench->add_option("--mode", bench_mode, "fan|rank|cover")->required();
  bench->add_option("--sizes", sizes_csv, "comma-separated sizes");
  bench->add_option("--seed", seed, "point-stream seed")->default_val(1);
  bench->add_option("--reps", reps, "updates measured per size");
  bench->add_option("--out", outfile, "output file (default: stdout)");

  auto* svgc = app.add_subcommand("svg", "render contour families to SVG");
  svgc->add_option("--mode", svg_mode, "rank|cover|all");
  svgc->add_option("--input", input, "point file")->required();
  svgc->add_option("--shear", shear_str, "pre-shear factor");
  svgc->add_option("--out", outfile, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!outfile.empty()) {
    out_file.open(outfile);
    if (!out_file) {
      std::cerr << "cannot open " << outfile << "\n";
      return 3;
    }
    out = &out_file;
  }

  std::optional<Rat> shear_val;
  if (!shear_str.empty()) {
    shear_val = Rat::parse(shear_str);
    if (!shear_val) {
      std::cerr << "bad --shear value\n";
      return 1;
    }
  }

  try {
    if (run->parsed()) {
      RunState st;
      if (shear_val) {
        st.shear = *shear_val;
        st.manual_shear = true;
      }
      if (run_mode == "fan")
        st.rank = std::make_unique<RankEngine>(Validation::Full, false);
      else if (run_mode == "rank")
        st.rank = std::make_unique<RankEngine>(Validation::Full, true);
      else if (run_mode == "cover")
        st.cover = std::make_unique<CoverEngine>(Validation::Full);
      else if (run_mode == "all") {
        st.rank = std::make_unique<RankEngine>(Validation::Full, true);
        st.cover = std::make_unique<CoverEngine>(Validation::Full);
      } else {
        std::cerr << "unknown mode " << run_mode << "\n";
        return 1;
      }
      if (!input.empty()) {
        for (const Pt& p : io::read_points_file(input)) st.insert(p);
      }
      if (!script.empty()) {
        std::ifstream f(script);
        if (!f) {
          std::cerr << "cannot open " << script << "\n";
          return 3;
        }
        return run_script(st, f, *out);
      }
      return run_script(st, std::cin, *out);
    }

    if (bench->parsed()) {
      std::vector<std::size_t> sizes;
      if (!sizes_csv.empty()) {
        std::istringstream ss(sizes_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoull(tok));
      } else if (bench_mode == "fan") {
        sizes = {1024, 2048, 4096, 8192, 16384};
      } else {
        sizes = {128, 256, 512, 1024};
      }
      if (reps == 0) reps = bench_mode == "fan" ? 200 : (bench_mode == "rank" ? 20 : 6);
      std::vector<bench::Row> rows;
      for (std::size_t n : sizes) {
        if (bench_mode == "fan")
          rows.push_back(bench::run_fan(n, seed, reps));
        else if (bench_mode == "rank")
          rows.push_back(bench::run_rank(n, seed, reps));
        else if (bench_mode == "cover")
          rows.push_back(bench::run_cover(n, seed, reps));
        else {
          std::cerr << "unknown bench mode " << bench_mode << "\n";
          return 1;
        }
      }
      *out << bench::to_csv(rows);
      return 0;
    }

    if (svgc->parsed()) {
      auto pts = io::read_points_file(input);
      std::vector<svg::Layer> layers;
      if (svg_mode == "cover" || svg_mode == "all") {
        RunState st;
        st.cover = std::make_unique<CoverEngine>(Validation::Full);
        if (shear_val) {
          st.shear = *shear_val;
          st.manual_shear = true;
        }
        for (const Pt& p : pts) st.insert(p);
        svg::Layer l;
        if (!pts.empty()) {
          int kmax = st.cover->max_contour_depth();
          for (int k = 1; k <= kmax; ++k) l.contours.push_back(st.cover_contour(k));
        }
        layers.push_back(std::move(l));
      }
      if (svg_mode == "rank" || svg_mode == "all") {
        RankEngine e;
        for (const Pt& p : pts) e.insert(p);
        svg::Layer l;
        l.stroke = "#d2622a";
        l.dashed = svg_mode == "all";
        int n = static_cast<int>(pts.size());
        for (int pct = 10; pct <= 100; pct += 10) {
          int m = std::max(1, (n * pct) / 100);
          if (n > 0) l.contours.push_back(e.rank_contour(m));
        }
        layers.push_back(std::move(l));
      }
      if (svg_mode != "cover" && svg_mode != "rank" && svg_mode != "all") {
        std::cerr << "unknown svg mode " << svg_mode << "\n";
        return 1;
      }
      *out << svg::render(pts, layers);
      return 0;
    }
  } catch (const DepthError& e) {
    std::cerr << errc_name(e.code()) << ": " << e.what() << "\n";
    if (e.code() == Errc::ParseError) return 1;
    if (e.code() == Errc::IoError) return 3;
    return 2;
  }
  return 0;
}
