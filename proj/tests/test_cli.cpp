// End-to-end checks of the depthtool binary: command stream semantics, exit
// codes, determinism, SVG and bench output shapes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int g_fail = 0;

#define CLI_CHECK(cond, what)                                       \
  do {                                                              \
    if (!(cond)) {                                                  \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, (what)); \
      ++g_fail;                                                     \
    }                                                               \
  } while (0)

std::string tool() { return DEPTHTOOL_PATH; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream o;
  o << f.rdbuf();
  return o.str();
}

int run(const std::string& args, const std::string& out_path) {
  std::string cmd = tool() + " " + args + " > " + out_path + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

int main() {
  const std::string dir = "/tmp/depthtool_test";
  std::system(("mkdir -p " + dir).c_str());

  // Triangle script: depth query, both contours, determinism.
  write_file(dir + "/tri.txt",
             "insert 0 0\n"
             "insert 4 0\n"
             "insert 0 4\n"
             "depth 0 0\n"
             "cover-contour 1\n"
             "rank-contour 3\n");
  int rc = run("run --script " + dir + "/tri.txt", dir + "/out1.json");
  CLI_CHECK(rc == 0, "triangle script exit code");
  std::string out1 = read_file(dir + "/out1.json");
  CLI_CHECK(out1.find("{\"depth\":{\"den\":3,\"num\":1}}") != std::string::npos,
            "depth line");
  CLI_CHECK(out1.find("\"cover-contour\"") != std::string::npos, "cover contour line");
  CLI_CHECK(out1.find("[\"0\",\"0\"],[\"4\",\"0\"],[\"0\",\"4\"]") != std::string::npos,
            "triangle CCW vertices");

  rc = run("run --script " + dir + "/tri.txt", dir + "/out2.json");
  CLI_CHECK(rc == 0, "second run exit code");
  CLI_CHECK(out1 == read_file(dir + "/out2.json"), "byte-identical replay");

  // Geometry violation: exit 2, offending command reported.
  write_file(dir + "/bad.txt", "insert 0 0\ninsert 4 0\ninsert 2 0\n");
  rc = run("run --script " + dir + "/bad.txt", dir + "/err.json");
  CLI_CHECK(rc == 2, "collinear insert exits 2");
  CLI_CHECK(read_file(dir + "/err.json").find("CollinearTriple") != std::string::npos,
            "collinear error code");

  // Parse error: exit 1.
  write_file(dir + "/parse.txt", "insert 1\n");
  rc = run("run --script " + dir + "/parse.txt", dir + "/perr.json");
  CLI_CHECK(rc == 1, "short insert exits 1");

  // Unknown input file: exit 3.
  rc = run("run --input " + dir + "/missing.pts --script " + dir + "/tri.txt",
           dir + "/ioerr.json");
  CLI_CHECK(rc == 3, "missing input exits 3");

  // Input file + shear: shared-x data works in cover mode under --shear and
  // the contour comes back in original coordinates.
  write_file(dir + "/shared.pts", "0 0\n0 4\n4 0\n# comment\n");
  write_file(dir + "/query.txt", "cover-contour 1\n");
  rc = run("run --mode cover --shear 1/3 --input " + dir + "/shared.pts --script " +
               dir + "/query.txt",
           dir + "/shear.json");
  CLI_CHECK(rc == 0, "shear run exit code");
  CLI_CHECK(read_file(dir + "/shear.json").find("[\"0\",\"0\"],[\"4\",\"0\"],[\"0\",\"4\"]") !=
                std::string::npos,
            "sheared cover contour in original coordinates");

  // Auto-shear: same data without --shear also works in mode all.
  rc = run("run --input " + dir + "/shared.pts --script " + dir + "/query.txt",
           dir + "/auto.json");
  CLI_CHECK(rc == 0, "auto shear exit code");
  CLI_CHECK(read_file(dir + "/auto.json") == read_file(dir + "/shear.json"),
            "auto shear matches manual shear output");

  // Delete addresses points by exact coordinates.
  write_file(dir + "/del.txt",
             "insert 0 0\ninsert 9 1\ninsert 1 7\ninsert 3 3\n"
             "delete 3 3\ndepth 0 0\n");
  rc = run("run --mode rank --script " + dir + "/del.txt", dir + "/del.json");
  CLI_CHECK(rc == 0, "delete script exit code");
  CLI_CHECK(read_file(dir + "/del.json").find("{\"depth\":{\"den\":3,\"num\":1}}") !=
                std::string::npos,
            "depth after delete");

  // dump + empty svg + bench CSV header.
  write_file(dir + "/dump.txt", "insert 1 2\ninsert 5 3\ndump\n");
  rc = run("run --mode rank --script " + dir + "/dump.txt", dir + "/dump.json");
  CLI_CHECK(rc == 0, "dump exit code");
  CLI_CHECK(read_file(dir + "/dump.json").find("\"buckets\"") != std::string::npos,
            "dump carries buckets");

  write_file(dir + "/empty.pts", "# nothing\n");
  rc = run("svg --input " + dir + "/empty.pts", dir + "/empty.svg");
  CLI_CHECK(rc == 0, "empty svg exit code");
  CLI_CHECK(read_file(dir + "/empty.svg").rfind("<svg", 0) == 0, "svg header");

  write_file(dir + "/some.pts", "0 0\n10 1\n3 8\n6 4\n");
  rc = run("svg --mode all --input " + dir + "/some.pts", dir + "/some.svg");
  CLI_CHECK(rc == 0, "svg exit code");
  CLI_CHECK(read_file(dir + "/some.svg").find("<polygon") != std::string::npos ||
                read_file(dir + "/some.svg").find("<polyline") != std::string::npos,
            "svg has contours");

  rc = run("bench --mode fan --sizes 64,128 --reps 4 --seed 3", dir + "/bench.csv");
  CLI_CHECK(rc == 0, "bench exit code");
  CLI_CHECK(read_file(dir + "/bench.csv").rfind("mode,n,mean_update_seconds", 0) == 0,
            "bench CSV header");

  // Usage error: unknown subcommand exits nonzero.
  rc = run("frobnicate", dir + "/usage.txt");
  CLI_CHECK(rc != 0, "unknown subcommand fails");

  if (g_fail == 0) std::printf("cli_tests: all checks passed\n");
  return g_fail;
}
