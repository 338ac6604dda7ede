// tc: tight closure checks on plane cubic cones.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tc/error.hpp"
#include "tc/report.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kUndecided = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight closure membership for primary ideals on plane cubic cones"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  int emax = -1, degree = -1000000, threads = 1, max_ext = 4;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "problem file")->required();
    sub->add_option("--threads", threads, "worker threads for degreewise work")->check(CLI::Range(1, 256));
    sub->add_option("--max-ext", max_ext, "largest field extension tried when splitting")->check(CLI::Range(1, 12));
  };
  auto* check = app.add_subcommand("check", "decide membership of the candidate in the tight closure");
  add_common(check);
  check->add_flag("--json", json, "emit JSON");
  check->add_option("--emax", emax, "Frobenius oracle bound")->check(CLI::Range(0, 16));
  auto* closure = app.add_subcommand("closure", "compute the tight closure ideal");
  add_common(closure);
  closure->add_flag("--json", json, "emit JSON");
  auto* decompose = app.add_subcommand("decompose", "decompose the syzygy bundle");
  add_common(decompose);
  decompose->add_flag("--json", json, "emit JSON");
  decompose->add_option("--degree", degree, "degree m of the syzygy bundle");
  auto* info = app.add_subcommand("info", "curve data");
  add_common(info);
  info->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    tc::Problem pr = tc::build_problem(tc::parse_problem(slurp(file)));
    tc::RunOptions opts;
    if (emax >= 0) opts.e_max = emax;
    if (degree != -1000000) opts.degree = degree;
    opts.threads = threads;
    opts.max_extension = max_ext;
    tc::Report rep;
    if (*check) rep = tc::run_check(pr, opts);
    else if (*closure) rep = tc::run_closure(pr, opts);
    else if (*decompose) rep = tc::run_decompose(pr, opts);
    else rep = tc::run_info(pr, opts);
    std::cout << (json ? tc::render_json(rep.doc) : tc::render_text(rep.doc));
    return rep.exit_code;
  } catch (const tc::Error& e) {
    std::cerr << "error " << tc::error_tag(e.code()) << ": " << e.what() << "\n";
    if (e.code() == tc::ErrorCode::undecided || e.code() == tc::ErrorCode::invariant) return kUndecided;
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error E_IO: " << e.what() << "\n";
    return kInputError;
  }
}
