#include <doctest.h>

#include "commands.hpp"
#include "tropkit/document.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tropkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "tropkit_cli_tests";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string document_part(const std::string& out) {
  const auto at = out.find("--- document\n");
  REQUIRE(at != std::string::npos);
  return out.substr(at + 13);
}

}  // namespace

TEST_CASE("fan validate on a valid fan") {
  const auto f = write_temp("in.fan", "tropkit 1\nkind fan\nrank 2\ncone\n  ray [1, 0]\nend\n");
  const Run r = run({"fan", "validate", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: PASS") != std::string::npos);
  CHECK(r.out.find("input: in.fan fnv1a64:") != std::string::npos);
  // the emitted document is itself a valid input
  const auto again = write_temp("again.fan", document_part(r.out));
  CHECK(run({"fan", "validate", again}).code == 0);
}

TEST_CASE("toric analyze on the ray (1, 2)") {
  const auto f = write_temp("ray.fan", "tropkit 1\nkind fan\nrank 2\ncone\n  ray [1, 2]\nend\n");
  const Run r = run({"toric", "analyze", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("multiplicity 2") != std::string::npos);
  CHECK(r.out.find("reduced: no") != std::string::npos);
  CHECK(r.out.find("reduction_index: 2") != std::string::npos);
}

TEST_CASE("trop hypersurface with the oracle") {
  const auto f = write_temp("f.poly",
                            "tropkit 1\nkind polynomial\nrank 2\npolynomial\n  term [0, 0] val 0\n"
                            "  term [1, 0] val 0\n  term [0, 1] val 0\nend\n");
  const Run r = run({"trop", "hypersurface", f, "--oracle-check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle: AGREE") != std::string::npos);
  const Document d = parse_document(document_part(r.out));
  CHECK(kind_name(d) == "complex");
  CHECK(std::get<ComplexDocument>(d.payload).cells.size() == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--help"}).out.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"fan", "explode", "x"}).code == 2);
  CHECK(run({"fan", "validate"}).code == 2);
  CHECK(run({"fan", "validate", "/nonexistent/file.fan"}).code == 2);
  const auto bad = write_temp("bad.fan",
                              "tropkit 1\nkind fan\nrank 2\ncone\n ray [1, 0]\n ray [0, 1]\nend\n"
                              "cone\n ray [1, 1]\n ray [-1, 2]\nend\n");
  const Run r = run({"fan", "validate", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: FAIL") != std::string::npos);
  const auto zero = write_temp("zero.fan", "tropkit 1\nkind fan\nrank 2\ncone\n ray [3/0, 1]\nend\n");
  const Run z = run({"fan", "validate", zero});
  CHECK(z.code == 2);
  CHECK(z.err.find("zero denominator") != std::string::npos);
}

TEST_CASE("reports are deterministic and timing goes to stderr") {
  const auto f = write_temp("p2.fan",
                            "tropkit 1\nkind fan\nrank 2\ncone\n ray [1, 0]\n ray [0, 1]\nend\n"
                            "cone\n ray [0, 1]\n ray [-1, -1]\nend\ncone\n ray [-1, -1]\n ray [1, 0]\nend\n");
  const Run a = run({"geomtrop", "hubsch-check", f});
  const Run b = run({"--timing", "geomtrop", "hubsch-check", f});
  CHECK(a.out == b.out);
  CHECK(a.code == 1);
  CHECK(b.err.find("timing:") != std::string::npos);
  CHECK(a.err.empty());
}

TEST_CASE("environment caps") {
  const auto f = write_temp("r3.fan", "tropkit 1\nkind fan\nrank 3\ncone\n ray [1, 0, 0]\nend\n");
  setenv("TROPKIT_MAX_RANK", "2", 1);
  const Run capped = run({"fan", "validate", f});
  setenv("TROPKIT_MAX_RANK", "zero", 1);
  const Run junk = run({"fan", "validate", f});
  unsetenv("TROPKIT_MAX_RANK");
  CHECK(capped.code == 2);
  CHECK(capped.err.find("exceeds the cap 2") != std::string::npos);
  CHECK(junk.code == 2);
  CHECK(run({"fan", "validate", f}).code == 0);
}

TEST_CASE("fnv1a64") {
  CHECK(cli::fnv1a64("") == "cbf29ce484222325");
  CHECK(cli::fnv1a64("a") == "af63dc4c8601ec8c");
}
