#include "tc/closure.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "tc/error.hpp"

namespace tc {

Rational Rational::make(long n, long d) {
  if (d == 0) throw Error(ErrorCode::invariant, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

namespace {

GradedMap generator_map(const IdealData& ideal, int m) {
  GradedMap phi;
  for (int d : ideal.degrees) phi.source.twists.push_back(m - d);
  phi.target.twists = {m};
  phi.entries.assign(1, ideal.gens);
  return phi;
}

// Solves x P = b for many right-hand sides, P in row convention.
class LiftSolver {
 public:
  LiftSolver(const Field& f, const Matrix& p) : f_(f), rows_(p.rows()), cols_(p.cols()) {
    Matrix aug(rows_, cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = p(i, j);
      aug(i, cols_ + i) = f.one();
    }
    ech_ = la::echelon(f, std::move(aug));
  }

  std::optional<Vec> solve(std::span<const Elem> b) const {
    Vec v(cols_ + rows_, 0);
    std::copy(b.begin(), b.end(), v.begin());
    la::reduce(f_, ech_, v);
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) return std::nullopt;
    Vec x(rows_);
    for (std::size_t i = 0; i < rows_; ++i) x[i] = f_.neg(v[cols_ + i]);
    return x;
  }

 private:
  const Field& f_;
  std::size_t rows_, cols_;
  la::Echelon ech_;
};

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

la::Echelon ideal_piece(const GradedRing& r, const IdealData& ideal, int s) {
  Matrix rows(0, r.dim(s));
  for (int i = 0; i < ideal.n(); ++i) {
    const int d = ideal.degrees[i];
    if (d > s) continue;
    Matrix mult = r.multiples(r.coords(ideal.gens[i], d), d, s - d);
    for (std::size_t k = 0; k < mult.rows(); ++k) rows.append_row(mult.row(k));
  }
  return la::echelon(*r.field(), std::move(rows));
}

int saturation_degree(const GradedRing& r, const IdealData& ideal) {
  for (int s = 0; s < 512; ++s)
    if (ideal_piece(r, ideal, s).rank() == r.dim(s)) return s;
  throw Error(ErrorCode::not_primary, "ideal does not contain a power of the maximal ideal");
}

la::Echelon closure_piece(const Decomposition& dec) {
  const SyzygyBundle& B = dec.bundle;
  const GradedRing& r = *B.ring;
  const Field& f = *r.field();
  const int m = B.m;
  const PresentedModule& M = B.module;
  const la::Echelon Im = ideal_piece(r, B.ideal, m);
  const std::size_t dm = r.dim(m);

  std::vector<const Summand*> negative;
  for (const auto& s : dec.summands)
    if (s.degree < 0) negative.push_back(&s);
  if (negative.empty()) return la::echelon(f, Matrix::identity(dm));

  // complement of I_m spanned by unit vectors off the pivots
  std::vector<std::size_t> comp;
  {
    std::vector<bool> piv(dm, false);
    for (auto p : Im.pivots) piv[p] = true;
    for (std::size_t i = 0; i < dm; ++i)
      if (!piv[i]) comp.push_back(i);
  }
  if (comp.empty()) return Im;
  const std::size_t N = comp.size();

  const int t = std::max({B.t0, saturation_degree(r, B.ideal) - m, 2});
  const GradedMap phi = generator_map(B.ideal, m);
  const TwistedFree& L = M.ambient();
  const std::size_t nt = r.dim(t), nt1 = r.dim(t + 1);

  // particular lifts g_u^(k) with sum g_i f_i = u b_k
  auto lifts = [&](int s) {
    LiftSolver solver(f, phi.piece(r, s));
    const auto& mons = r.basis(s);
    std::vector<std::vector<Vec>> G(mons.size(), std::vector<Vec>(N));
    for (std::size_t u = 0; u < mons.size(); ++u) {
      for (std::size_t k = 0; k < N; ++k) {
        Vec target = r.mul_monomial(unit_vec(dm, comp[k]), m, mons[u]);
        auto x = solver.solve(target);
        if (!x) throw Error(ErrorCode::invariant, "u b lies outside the ideal past the saturation degree");
        G[u][k] = std::move(*x);
      }
    }
    return G;
  };
  const auto Gt = lifts(t);
  const auto Gt1 = lifts(t + 1);

  // a^(v,u) and the syzygies r^(k)_(v,u) = v g_u - sum a_u' g_u'
  std::vector<Vec> a(3 * nt);
  std::vector<std::vector<Vec>> rk(3 * nt, std::vector<Vec>(N));
  for (int v = 0; v < 3; ++v) {
    for (std::size_t u = 0; u < nt; ++u) {
      Vec au = r.mul_var(unit_vec(nt, u), t, v);
      for (std::size_t k = 0; k < N; ++k) {
        Vec rv = element_mul_var(r, L, t, Gt[u][k], v);
        for (std::size_t up = 0; up < nt1; ++up)
          if (au[up] != 0) la::axpy(f, rv, Gt1[up][k], f.neg(au[up]));
        rk[v * nt + u][k] = std::move(rv);
      }
      a[v * nt + u] = std::move(au);
    }
  }

  std::vector<Matrix> residues;  // per negative summand: N rows
  const la::Echelon& Mt1 = M.piece(t + 1);
  for (const Summand* sj : negative) {
    const PresentedModule& S = sj->module;
    const Matrix E1 = map_at(M, M, ModuleMap{dec.algebra.t0, sj->projection}, t + 1);
    const la::Echelon& St = S.piece(t);
    const std::size_t ds0 = St.rank(), ds1 = S.dim(t + 1);
    auto s_coords = [&](std::span<const Elem> amb) {
      auto c = S.coordinates(t + 1, amb);
      if (!c) throw Error(ErrorCode::invariant, "projection leaves the summand");
      return *c;
    };
    auto project = [&](const Vec& rv) {
      auto c = M.coordinates(t + 1, rv);
      if (!c) throw Error(ErrorCode::invariant, "lift difference is not a syzygy");
      Vec img = la::vec_mul(f, la::vec_mul(f, *c, E1), Mt1.rows);
      return s_coords(img);
    };
    std::array<std::vector<Vec>, 3> vmul;
    for (int v = 0; v < 3; ++v)
      for (std::size_t b = 0; b < ds0; ++b) vmul[v].push_back(s_coords(element_mul_var(r, L, t, St.rows.row(b), v)));

    const std::size_t eq = 3 * nt * ds1;
    Matrix unknown(0, eq);
    Vec row(eq);
    for (std::size_t u = 0; u < nt; ++u) {
      for (std::size_t b = 0; b < ds0; ++b) {
        std::fill(row.begin(), row.end(), 0);
        for (int v = 0; v < 3; ++v)
          std::copy(vmul[v][b].begin(), vmul[v][b].end(), row.begin() + (v * nt + u) * ds1);
        unknown.append_row(row);
      }
    }
    for (std::size_t up = 0; up < nt1; ++up) {
      for (std::size_t b = 0; b < ds1; ++b) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t blk = 0; blk < 3 * nt; ++blk)
          if (a[blk][up] != 0) row[blk * ds1 + b] = f.neg(a[blk][up]);
        unknown.append_row(row);
      }
    }
    const la::Echelon U = la::echelon(f, std::move(unknown));
    Matrix res(0, eq);
    for (std::size_t k = 0; k < N; ++k) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t blk = 0; blk < 3 * nt; ++blk) {
        Vec p = project(rk[blk][k]);
        std::copy(p.begin(), p.end(), row.begin() + blk * ds1);
      }
      la::reduce(f, U, row);
      res.append_row(row);
    }
    residues.push_back(std::move(res));
  }

  std::size_t total = 0;
  for (const auto& m_ : residues) total += m_.cols();
  Matrix all(N, total);
  std::size_t off = 0;
  for (const auto& m_ : residues) {
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t c = 0; c < m_.cols(); ++c) all(k, off + c) = m_(k, c);
    off += m_.cols();
  }
  const Matrix lambdas = la::left_nullspace(f, all);

  Matrix out = Im.rows;
  if (out.cols() != dm) out = Matrix(0, dm);
  for (std::size_t i = 0; i < lambdas.rows(); ++i) {
    Vec g(dm, 0);
    for (std::size_t k = 0; k < N; ++k) g[comp[k]] = lambdas(i, k);
    out.append_row(g);
  }
  return la::echelon(f, std::move(out));
}

namespace {

Polynomial to_field(const Polynomial& p, const FieldPtr& base, const FieldPtr& target) {
  if (base->same_as(*target)) return p;
  return p.mapped(Embedding(base, target));
}

}  // namespace

ClosureCertificate tight_closure_member(const IdealData& ideal, const Polynomial& f0, const ClosureOptions& opts) {
  ClosureCertificate cert;
  if (f0.is_zero()) {
    cert.member = cert.in_ideal = true;
    return cert;
  }
  if (!f0.is_homogeneous()) throw Error(ErrorCode::bad_candidate, "candidate is not homogeneous");
  cert.m = f0.degree();
  if (cert.m == 0) return cert;  // a unit never lies in the closure of a proper ideal
  if (ideal_membership(f0, ideal)) {
    cert.member = cert.in_ideal = true;
    return cert;
  }
  SyzygyBundle B = syzygy_bundle(ideal, cert.m);
  Decomposition D = decompose_bundle(B, {opts.max_extension, 1});
  cert.extension_degree = D.extension_degree;
  ForcingData forcing = forcing_data(D.bundle, to_field(f0, ideal.curve.field, D.bundle.ring->field()));
  cert.member = true;
  for (const auto& s : D.summands) {
    SummandReport rep{s.rank, s.degree, s.degree < 0, component_class_vanishes(forcing, D.bundle, s)};
    if (rep.negative && !*rep.vanishes) cert.member = false;
    cert.summands.push_back(rep);
  }
  return cert;
}

FrobeniusResult frobenius_member(const IdealData& ideal, const Polynomial& f0, int e_max, std::size_t max_piece_dim) {
  FrobeniusResult res{std::nullopt, e_max, -1, false};
  if (f0.is_zero()) {
    res.found_at_e = res.e_tested = 0;
    return res;
  }
  if (!f0.is_homogeneous()) throw Error(ErrorCode::bad_candidate, "candidate is not homogeneous");
  RingPtr ring = coordinate_ring(ideal.curve);
  const GradedRing& r = *ring;
  const int m = f0.degree();
  const long p = ideal.curve.field->characteristic();
  long q = 1;
  for (int e = 0; e <= e_max; ++e, q *= p) {
    const int s = static_cast<int>(q * m);
    if (r.dim(s) > max_piece_dim) {
      res.truncated = true;
      return res;
    }
    res.e_tested = e;
    Matrix rows(0, r.dim(s));
    for (int i = 0; i < ideal.n(); ++i) {
      const int d = static_cast<int>(q * ideal.degrees[i]);
      if (d > s) continue;
      Vec g = r.coords(ideal.gens[i].frobenius_power(e), d);
      Matrix mult = r.multiples(g, d, s - d);
      for (std::size_t k = 0; k < mult.rows(); ++k) rows.append_row(mult.row(k));
    }
    la::Echelon E = la::echelon(*r.field(), std::move(rows));
    if (la::in_span(*r.field(), E, r.coords(f0.frobenius_power(e), s))) {
      res.found_at_e = e;
      return res;
    }
  }
  return res;
}

SlopeReport slope_and_threshold(const IdealData& ideal, const ClosureOptions& opts) {
  SyzygyBundle B = syzygy_bundle(ideal, 0);
  Decomposition D = decompose_bundle(B, {opts.max_extension, 1});
  SlopeReport rep;
  rep.extension_degree = D.extension_degree;
  bool first = true;
  for (const auto& s : D.summands) {
    rep.summands.emplace_back(s.rank, s.degree);
    Rational mu = Rational::make(-s.degree, s.rank);
    if (first || mu < rep.mu_min) rep.mu_min = mu;
    if (first || rep.mu_max < mu) rep.mu_max = mu;
    first = false;
  }
  rep.threshold_low = Rational::make(rep.mu_min.num, rep.mu_min.den * 3);
  rep.threshold_high = Rational::make(rep.mu_max.num, rep.mu_max.den * 3);
  rep.k = Rational::make(ideal.degree_sum(), ideal.n() - 1);
  rep.semistable = rep.mu_min == rep.mu_max;
  return rep;
}

namespace {

// The reduced echelon basis of a Galois-stable subspace has entries in the
// base field; pull them back through the embedding.
la::Echelon pull_back(const la::Echelon& e, const FieldPtr& base, const FieldPtr& big) {
  if (base->same_as(*big)) return e;
  Embedding emb(base, big);
  if (base->order() > (1u << 20)) throw Error(ErrorCode::undecided, "base field too large to pull back");
  std::unordered_map<Elem, Elem> inv;
  for (std::uint64_t a = 0; a < base->order(); ++a) inv.emplace(emb(static_cast<Elem>(a)), static_cast<Elem>(a));
  Matrix out(0, e.rows.cols());
  for (std::size_t i = 0; i < e.rank(); ++i) {
    Vec row(e.rows.cols());
    for (std::size_t j = 0; j < row.size(); ++j) {
      auto it = inv.find(e.rows(i, j));
      if (it == inv.end()) throw Error(ErrorCode::invariant, "closure piece is not defined over the base field");
      row[j] = it->second;
    }
    out.append_row(row);
  }
  return la::echelon(*base, std::move(out));
}

bool below(int m, const Rational& mu) { return 3L * m * mu.den < mu.num; }  // m < mu / 3

}  // namespace

ClosureIdeal tight_closure_ideal(const IdealData& ideal, const ClosureOptions& opts) {
  ClosureIdeal out;
  out.slopes = slope_and_threshold(ideal, opts);
  const FieldPtr& field = ideal.curve.field;
  const Field& f = *field;
  RingPtr ring = coordinate_ring(ideal.curve);
  const GradedRing& r = *ring;

  int top = 0;
  while (below(top, out.slopes.mu_max)) ++top;
  top = std::max(top, 1) + 2;  // report a little past the last new generator

  std::vector<la::Echelon> pieces(top + 1);
  std::vector<int> todo;
  for (int m = 0; m <= top; ++m) {
    DegreePiece dp{m, "", 0, 0, r.dim(m)};
    if (below(m, out.slopes.mu_min)) {
      dp.source = "ideal";
      pieces[m] = ideal_piece(r, ideal, m);
    } else if (!below(m, out.slopes.mu_max)) {
      dp.source = "all";
      pieces[m] = la::echelon(f, Matrix::identity(r.dim(m)));
    } else {
      dp.source = "criterion";
      todo.push_back(m);
    }
    out.pieces.push_back(dp);
  }

  auto work = [&](int m) {
    SyzygyBundle B = syzygy_bundle(ideal, m);
    Decomposition D = decompose_bundle(B, {opts.max_extension, 1});
    pieces[m] = pull_back(closure_piece(D), field, D.bundle.ring->field());
  };
  const int nthreads = std::max(1, std::min<int>(opts.threads, static_cast<int>(todo.size())));
  if (nthreads <= 1) {
    for (int m : todo) work(m);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(todo.size());
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) {
      pool.emplace_back([&] {
        for (std::size_t j; (j = next.fetch_add(1)) < todo.size();) {
          try {
            work(todo[j]);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (int m = 0; m <= top; ++m) {
    out.pieces[m].closure_dim = pieces[m].rank();
    out.pieces[m].ideal_dim = ideal_piece(r, ideal, m).rank();
    Matrix prod(0, r.dim(m));
    if (m > 0) {
      for (std::size_t i = 0; i < pieces[m - 1].rank(); ++i)
        for (int v = 0; v < 3; ++v) prod.append_row(r.mul_var(pieces[m - 1].rows.row(i), m - 1, v));
    }
    la::Echelon span = la::echelon(f, prod);
    for (std::size_t i = 0; i < pieces[m].rank(); ++i) {
      auto row = pieces[m].rows.row(i);
      if (la::in_span(f, span, row)) continue;
      out.generators.push_back(r.poly(row, m));
      prod.append_row(row);
      span = la::echelon(f, prod);
    }
  }
  return out;
}

}  // namespace tc
