// Acceptance run: one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "random_instances.hpp"
#include "tc/closure.hpp"
#include "tc/report.hpp"

using namespace tc;

namespace {

using Clock = std::chrono::steady_clock;

IdealData fermat_ideal(unsigned p, std::vector<const char*> gens) {
  auto f = make_field(p, 1);
  auto curve = make_curve(parse_polynomial(f, "x^3+y^3+z^3"));
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(parse_polynomial(f, s));
  return make_ideal(curve, g);
}

std::vector<std::pair<int, int>> table(const Decomposition& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& s : d.summands) out.emplace_back(s.rank, s.degree);
  return out;
}

using Table = std::vector<std::pair<int, int>>;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(TC_BINARY) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int st = pclose(pipe);
  out += "\n<exit " + std::to_string(WIFEXITED(st) ? WEXITSTATUS(st) : -1) + ">";
  return out;
}

std::string data(const char* name) { return std::string(TC_DATA_DIR) + "/" + name; }

Outcome criterion1() {
  std::ostringstream d;
  bool ok = true;
  for (unsigned p : {5u, 7u}) {
    auto t0 = Clock::now();
    auto I = fermat_ideal(p, {"x^2", "y^2", "z^2"});
    auto c = tight_closure_member(I, parse_polynomial(I.curve.field, "x*y*z"));
    auto D = decompose_bundle(syzygy_bundle(I, 3));
    bool this_ok = c.member && !c.in_ideal && table(D) == Table{{2, 0}};
    if (this_ok) {
      auto h = cohomology_dims(D.summands[0].module, 0);
      this_ok = h.h0 == 1 && h.h1 == 1;
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    this_ok = this_ok && secs < 60;
    d << "F_" << p << (this_ok ? " ok" : " wrong") << " (" << secs << " s) ";
    ok = ok && this_ok;
  }
  return {ok, d.str()};
}

Outcome criterion2() {
  auto I = fermat_ideal(5, {"x^2", "y^2", "x^2"});
  auto J = fermat_ideal(5, {"x^2", "y^2"});
  auto xyz = parse_polynomial(I.curve.field, "x*y*z");
  bool dec = table(decompose_bundle(syzygy_bundle(I, 3))) == Table{{1, 3}, {1, -3}};
  bool a = tight_closure_member(I, xyz).member;
  bool b = tight_closure_member(J, xyz).member;
  return {dec && !a && !b, std::string("decomposition ") + (dec ? "ok" : "wrong") + ", verdicts " +
                               (a ? "member" : "non-member") + " / " + (b ? "member" : "non-member")};
}

Outcome criterion3() {
  auto I = fermat_ideal(5, {"x", "y", "z^3"});
  bool member = tight_closure_member(I, parse_polynomial(I.curve.field, "z^2")).member;
  bool dec = table(decompose_bundle(syzygy_bundle(I, 3))) == Table{{1, 3}, {1, 0}};
  return {member && dec, std::string("z^2 ") + (member ? "member" : "non-member") + ", decomposition " +
                             (dec ? "ok" : "wrong")};
}

Outcome criterion4() {
  auto I = fermat_ideal(5, {"x^2", "y^2", "z^2"});
  auto ci = tight_closure_ideal(I);
  std::vector<std::string> gens;
  for (const auto& g : ci.generators) gens.push_back(g.to_string());
  bool g_ok = gens == std::vector<std::string>{"x^2", "y^2", "z^2", "x*y*z"};
  bool k_ok = ci.slopes.k == Rational{3, 1};
  // independent degreewise check: I_m below 3, everything from 3 on
  RingPtr R = coordinate_ring(I.curve);
  bool deg_ok = true;
  int checked = 0;
  for (const auto& p : ci.pieces) {
    if (p.m > 5) continue;
    ++checked;
    std::size_t expect = p.m < 3 ? ideal_piece(*R, I, p.m).rank() : R->dim(p.m);
    deg_ok = deg_ok && p.closure_dim == expect;
  }
  deg_ok = deg_ok && checked == 6;
  return {g_ok && k_ok && deg_ok, std::string("generators ") + (g_ok ? "ok" : "wrong") + ", k = " +
                                      ci.slopes.k.to_string() + ", degrees 0..5 " + (deg_ok ? "ok" : "wrong")};
}

Outcome criterion5() {
  auto f = make_field(5, 1);
  auto curve = make_curve(parse_polynomial(f, "x^3+y^3+z^3"));
  std::mt19937_64 rng(5005);
  auto t0 = Clock::now();
  int good = 0;
  for (int it = 0; it < 100; ++it) {
    IdealData I = testing::random_primary_ideal(curve, rng, 2, 4, 1, 3);
    int m = *std::max_element(I.degrees.begin(), I.degrees.end()) + 1;
    auto D = decompose_bundle(syzygy_bundle(I, m));
    int rk = 0, dg = 0;
    for (const auto& s : D.summands) {
      rk += s.rank;
      dg += s.degree;
    }
    if (rk == I.n() - 1 && dg == -3 * (I.degree_sum() - (I.n() - 1) * m)) ++good;
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {good == 100 && secs < 600, std::to_string(good) + "/100 (" + std::to_string(secs) + " s)"};
}

Outcome criterion6() {
  auto f = make_field(5, 1);
  auto curve = make_curve(parse_polynomial(f, "x^3+y^3+z^3"));
  std::mt19937_64 rng(6006);
  int good = 0, in_ideal = 0;
  for (int it = 0; it < 100; ++it) {
    IdealData I = testing::random_primary_ideal(curve, rng, 2, 3, 1, 2);
    int m = std::uniform_int_distribution<int>(2, 3)(rng);
    Polynomial f0 = testing::random_form(f, m, rng);
    if (it % 2 == 0) {
      // half the candidates are built inside the ideal
      f0 = Polynomial(f);
      for (int i = 0; i < I.n(); ++i)
        if (I.degrees[i] <= m) f0 = f0 + I.gens[i] * testing::random_form(f, m - I.degrees[i], rng);
    }
    auto D = decompose_bundle(syzygy_bundle(I, m));
    auto F = forcing_data(D.bundle, f0);
    bool all = true;
    for (const auto& s : D.summands) all = all && component_class_vanishes(F, D.bundle, s);
    bool mem = f0.is_zero() || ideal_membership(f0, I);
    in_ideal += mem;
    if (all == mem) ++good;
  }
  return {good == 100, std::to_string(good) + "/100 agree (" + std::to_string(in_ideal) + " in the ideal)"};
}

Outcome criterion7() {
  auto t0 = Clock::now();
  int members = 0, inconclusive = 0, violations = 0, found = 0, nontrivial = 0;
  for (unsigned p : {2u, 5u}) {
    auto f = make_field(p, 1);
    auto curve = make_curve(parse_polynomial(f, "x^3+y^3+z^3"));
    std::mt19937_64 rng(7000 + p);
    for (int it = 0; it < 25; ++it) {
      IdealData I = testing::random_primary_ideal(curve, rng, 2, 3, 1, 2);
      int m = std::uniform_int_distribution<int>(1, 2)(rng);
      if (it % 2 == 0) {
        // aim at a degree where the closure is strictly larger than the ideal
        for (const auto& piece : tight_closure_ideal(I).pieces)
          if (piece.closure_dim > piece.ideal_dim && piece.m <= 4) {
            m = piece.m;
            break;
          }
      }
      Polynomial f0 = testing::random_form(f, m, rng);
      if (it % 2 == 0) {
        auto D = decompose_bundle(syzygy_bundle(I, m));
        auto piece = closure_piece(D);
        RingPtr R = D.bundle.ring;
        Vec g(R->dim(m), 0);
        std::uniform_int_distribution<std::uint64_t> c(0, p - 1);
        for (std::size_t i = 0; i < piece.rank(); ++i) la::axpy(*f, g, piece.rows.row(i), static_cast<Elem>(c(rng)));
        f0 = R->poly(g, m);
      }
      auto cert = tight_closure_member(I, f0);
      bool member = cert.member;
      nontrivial += member && !cert.in_ideal;
      bool fr = frobenius_member(I, f0, 3).found_at_e.has_value();
      found += fr;
      members += member;
      if (fr && !member) ++violations;
      if (member && !fr) ++inconclusive;
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  bool ok = violations == 0 && 5 * inconclusive < members && secs < 900;
  std::ostringstream d;
  d << members << " members (" << nontrivial << " outside the ideal), " << found << " Frobenius-found, " << inconclusive << " inconclusive, " << violations
    << " violations (" << secs << " s)";
  return {ok, d.str()};
}

Outcome criterion8() {
  std::vector<std::string> cmds;
  for (const char* file : {"fermat5_x2y2z2.tc", "fermat5_x2y2x2.tc", "fermat5_xyz3.tc", "fermat7_x2y2z2.tc"}) {
    for (const char* c : {"check", "check --json", "decompose", "decompose --json", "info", "info --json"})
      cmds.push_back(std::string(c) + " " + data(file));
  }
  cmds.push_back("closure " + data("fermat5_closure.tc"));
  cmds.push_back("closure --json " + data("fermat5_closure.tc"));
  int stable = 0;
  for (const auto& c : cmds) {
    std::string first = run_binary(c);
    bool same = true;
    for (int i = 0; i < 2; ++i) same = same && run_binary(c) == first;
    for (int threads : {2, 4}) {
      std::string sub = c.substr(0, c.find(' ', 0));
      same = same && run_binary(sub + " --threads " + std::to_string(threads) + c.substr(sub.size())) == first;
    }
    stable += same;
  }
  return {stable == static_cast<int>(cmds.size()),
          std::to_string(stable) + "/" + std::to_string(cmds.size()) + " commands byte-identical"};
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Outcome()>>> all{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  int failures = 0;
  for (auto& [n, fn] : all) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
