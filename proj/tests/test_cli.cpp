#include <array>
#include <cstdio>
#include <fstream>
#include <memory>

#include "doctest.h"
#include "tc/error.hpp"
#include "tc/report.hpp"

using namespace tc;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TC_BINARY) + " " + args + " 2>/dev/null";
  Run r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const char* name) { return std::string(TC_DATA_DIR) + "/" + name; }

std::string write_tmp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/tc_cli_test_" + name;
  std::ofstream(path) << text;
  return path;
}

ErrorCode parse_code(const std::string& text) {
  try {
    build_problem(parse_problem(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invariant;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("problem parsing") {
  auto pf = parse_problem("char = 5\n# comment\ncubic = \"x^3+y^3+z^3\"\ngenerators = [\"x^2\",\n  \"y^2\", \"z^2\"]\n");
  CHECK(pf.characteristic == 5);
  CHECK(pf.generators.size() == 3);
  CHECK_FALSE(pf.candidate);
  auto pr = build_problem(pf);
  CHECK(pr.ideal.n() == 3);
  CHECK(pr.e_max == 4);
  CHECK(parse_code("char = 4\ncubic = \"x^3+y^3+z^3\"\ngenerators = [\"x\", \"y\"]\n") == ErrorCode::bad_char);
  CHECK(parse_code("char = 5\ngenerators = [\"x\", \"y\"]\n") == ErrorCode::missing_field);
  CHECK(parse_code("char = 5\ncubic = x^3\ngenerators = [\"x\", \"y\"]\n") == ErrorCode::syntax);
  CHECK(parse_code("char 5\n") == ErrorCode::syntax);
  CHECK(parse_code("char = 5\ncubic = \"x^2*y+z^3+y^2\"\ngenerators = [\"x\", \"y\"]\n") == ErrorCode::not_cubic);
  CHECK(parse_code("char = 3\ncubic = \"x^3+y^3+z^3\"\ngenerators = [\"x\", \"y\"]\n") == ErrorCode::singular_cubic);
  CHECK(parse_code("char = 5\ncubic = \"y^2*z-x^3-x*z^2\"\ngenerators = [\"x\", \"y\"]\n") == ErrorCode::not_primary);
  CHECK(parse_code("char = 5\ncubic = \"x^3+y^3+z^3\"\ngenerators = [\"x\", \"y\"]\ncandidate = \"x+y^2\"\n") ==
        ErrorCode::bad_candidate);
  CHECK(parse_code("char = 5\nchar = 5\n") == ErrorCode::syntax);
  try {
    parse_problem("char = 5\ncubic = \"x^3\"\nbogus = 1\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(run("check " + data("fermat5_x2y2z2.tc")).status == 0);
  CHECK(run("check " + data("fermat5_x2y2x2.tc")).status == 1);
  CHECK(run("info " + data("fermat5_x2y2z2.tc")).status == 0);
  CHECK(run("check /nonexistent/file.tc").status == 2);
  CHECK(run("check " + write_tmp("bad.tc", "char = 4\n")).status == 2);
  CHECK(run("bogus").status == 2);
}

TEST_CASE("json certificates round-trip") {
  auto r = run("check --json " + data("fermat5_x2y2z2.tc"));
  auto doc = Document::parse(r.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["verdict"] == "member");
  CHECK(doc["in_ideal"] == false);
  REQUIRE(doc["summands"].size() == 1);
  CHECK(doc["summands"][0]["rank"] == 2);
  CHECK(doc["summands"][0]["degree"] == 0);
  CHECK(doc["summands"][0]["c_vanishes"] == false);
  // re-running through the library reproduces the verdict fields
  auto pr = build_problem(parse_problem("char = 5\ncubic = \"" + doc["cubic"].get<std::string>() +
                                        "\"\ngenerators = [\"x^2\", \"y^2\", \"z^2\"]\ncandidate = \"" +
                                        doc["candidate"].get<std::string>() + "\"\n"));
  auto again = run_check(pr, {});
  CHECK(again.doc["verdict"] == doc["verdict"]);
  CHECK(again.doc["summands"] == doc["summands"]);
  CHECK(render_json(again.doc) == r.out);
}

TEST_CASE("info and decompose documents") {
  auto info = Document::parse(run("info --json " + data("fermat7_x2y2z2.tc")).out);
  CHECK(info["smooth"] == true);
  CHECK(info["hasse"] == "6");
  CHECK(info["supersingular"] == false);
  auto dec = Document::parse(run("decompose --json " + data("fermat5_x2y2x2.tc")).out);
  REQUIRE(dec["summands"].size() == 2);
  CHECK(dec["summands"][0]["degree"] == 3);
  CHECK(dec["summands"][1]["degree"] == -3);
}

TEST_CASE("byte-identical repeated runs") {
  for (const char* cmd : {"check", "closure", "decompose", "info"}) {
    std::string file = std::string(cmd) == "closure" ? data("fermat5_closure.tc") : data("fermat5_xyz3.tc");
    auto a = run(std::string(cmd) + " " + file);
    auto b = run(std::string(cmd) + " " + file);
    auto c = run(std::string(cmd) + " --threads 3 " + file);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK_FALSE(a.out.empty());
  }
}

}
