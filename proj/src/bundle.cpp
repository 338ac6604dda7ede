#include "tc/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tc/error.hpp"
#include "tc/upoly.hpp"

namespace tc {

namespace {

Vec flatten(const Matrix& a) {
  Vec v;
  v.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    v.insert(v.end(), r.begin(), r.end());
  }
  return v;
}

Matrix unflatten(std::span<const Elem> v, std::size_t n) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = v[i * n + j];
  return a;
}

// Echelon basis of the span of a list of square matrices.
la::Echelon span_of(const Field& f, const std::vector<Matrix>& mats, std::size_t n) {
  Matrix m(0, n * n);
  for (const auto& a : mats) m.append_row(flatten(a));
  return la::echelon(f, std::move(m));
}

std::vector<Matrix> as_matrices(const la::Echelon& e, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < e.rank(); ++i) out.push_back(unflatten(e.rows.row(i), n));
  return out;
}

}  // namespace

RingPtr coordinate_ring(const CubicCurve& curve) {
  return std::make_shared<GradedRing>(curve.field, std::optional<Polynomial>(curve.F));
}

SyzygyBundle syzygy_bundle(const IdealData& ideal, int m, RingPtr ring) {
  if (!ring) ring = coordinate_ring(ideal.curve);
  GradedMap phi;
  for (int d : ideal.degrees) phi.source.twists.push_back(m - d);
  phi.target.twists = {m};
  phi.entries.assign(1, ideal.gens);
  PresentedModule M = syzygy_of_map(ring, phi);
  RankDegree rd = rank_and_degree(M);
  if (rd.rank != ideal.n() - 1 || rd.degree != SyzygyBundle::formula_degree(ideal, m))
    throw Error(ErrorCode::invariant, "syzygy bundle rank/degree disagree with the formula");
  int t0 = regularity_index(M, rd);
  return SyzygyBundle{ideal, m, ring, std::move(M), rd.rank, rd.degree, t0};
}

Vec EndAlgebra::coordinates(const Matrix& a) const {
  // The basis is in reduced echelon form, so coordinates sit at the pivots.
  Vec flat = flatten(a);
  Vec c(basis.size(), 0);
  const std::size_t n = generator_dim;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    // first nonzero entry of basis[i] is its pivot (value 1)
    for (std::size_t k = 0; k < n * n; ++k) {
      if (basis[i](k / n, k % n) != 0) {
        c[i] = flat[k];
        break;
      }
    }
  }
  return c;
}

EndAlgebra end_algebra(const SyzygyBundle& bundle) {
  const Field& f = *bundle.ring->field();
  HomPiece h = hom_piece_at(bundle.module, bundle.module, bundle.t0);
  EndAlgebra A;
  A.field = bundle.ring->field();
  A.t0 = h.t0;
  A.generator_dim = bundle.module.dim(h.t0);
  A.basis = h.basis;
  const std::size_t N = A.basis.size();
  const std::size_t n = A.generator_dim;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      // row convention: (a then b) acts as the matrix product a * b
      Matrix p = la::mul(f, A.basis[i], A.basis[j]);
      Vec c = A.coordinates(p);
      Matrix back(n, n);
      for (std::size_t k = 0; k < N; ++k) back = la::add(f, back, la::scale(f, A.basis[k], c[k]));
      if (!(back == p)) throw Error(ErrorCode::invariant, "End algebra is not closed under composition");
      A.structure.push_back(std::move(c));
    }
  }
  if (N > 0) {
    Matrix id = Matrix::identity(n);
    Vec c = A.coordinates(id);
    Matrix back(n, n);
    for (std::size_t k = 0; k < N; ++k) back = la::add(f, back, la::scale(f, A.basis[k], c[k]));
    if (!(back == id)) throw Error(ErrorCode::invariant, "End algebra does not contain the identity");
  }
  return A;
}

namespace {

struct CornerWork {
  const Field& f;
  std::size_t n;

  Matrix combo(const std::vector<Matrix>& basis, const Vec& c) const {
    Matrix r(n, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k] != 0) r = la::add(f, r, la::scale(f, basis[k], c[k]));
    return r;
  }

  // Minimal polynomial of a in the unital algebra with unit e.
  upoly::UPoly min_poly(const Matrix& a, const Matrix& e) const {
    Matrix powers(0, n * n);
    Matrix cur = e;
    for (std::size_t deg = 0;; ++deg) {
      powers.append_row(flatten(cur));
      Matrix ln = la::left_nullspace(f, powers);
      if (!ln.empty()) {
        upoly::UPoly mu(ln.row(0).begin(), ln.row(0).end());
        return upoly::monic(f, mu);
      }
      if (deg > n * n) throw Error(ErrorCode::invariant, "minimal polynomial did not terminate");
      cur = la::mul(f, cur, a);
    }
  }

  Matrix eval(const upoly::UPoly& h, const Matrix& a, const Matrix& e) const {
    Matrix r(n, n);
    Matrix cur = e;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] != 0) r = la::add(f, r, la::scale(f, cur, h[i]));
      cur = la::mul(f, cur, a);
    }
    return r;
  }

  std::vector<Matrix> corner(const std::vector<Matrix>& basis, const Matrix& e) const {
    std::vector<Matrix> prods;
    for (const auto& b : basis) prods.push_back(la::mul(f, la::mul(f, e, b), e));
    return as_matrices(span_of(f, prods, n), n);
  }

  // Corner-to-corner piece e_i A e_j.
  std::vector<Matrix> piece(const std::vector<Matrix>& basis, const Matrix& ei, const Matrix& ej) const {
    std::vector<Matrix> prods;
    for (const auto& b : basis) prods.push_back(la::mul(f, la::mul(f, ei, b), ej));
    return as_matrices(span_of(f, prods, n), n);
  }

  bool nilpotent_ideal(const std::vector<Matrix>& C, const la::Echelon& N) const {
    const auto nb = as_matrices(N, n);
    for (const auto& c : C)
      for (const auto& x : nb)
        if (!la::in_span(f, N, flatten(la::mul(f, c, x))) || !la::in_span(f, N, flatten(la::mul(f, x, c))))
          return false;
    std::vector<Matrix> P = nb;
    std::size_t last = N.rank() + 1;
    while (!P.empty()) {
      if (P.size() >= last) return false;
      last = P.size();
      std::vector<Matrix> next;
      for (const auto& p : P)
        for (const auto& x : nb) next.push_back(la::mul(f, p, x));
      P = as_matrices(span_of(f, next, n), n);
    }
    return true;
  }
};

struct Split {
  enum Kind { local, split, extension } kind;
  Matrix e1;
  int degree = 0;
  la::Echelon nil;  // for local: the radical of the corner
};

// Splitting idempotent from a polynomial with at least two primary parts.
Matrix splitting_idempotent(const CornerWork& w, const upoly::UPoly& mu, const std::vector<upoly::PrimaryPart>& parts,
                            const Matrix& a, const Matrix& e) {
  const Field& f = w.f;
  upoly::UPoly q, r;
  upoly::divmod(f, mu, parts[0].power, q, r);
  upoly::UPoly inv = upoly::inverse_mod(f, upoly::mod(f, q, parts[0].power), parts[0].power);
  upoly::UPoly h = upoly::mod(f, upoly::mul(f, q, inv), mu);
  return w.eval(h, a, e);
}

Split classify(const CornerWork& w, const std::vector<Matrix>& algebra_basis, const Matrix& e) {
  const Field& f = w.f;
  const auto C = w.corner(algebra_basis, e);
  Split out{Split::local, {}, 0, {}};
  if (C.size() <= 1) {
    out.nil = la::echelon(f, Matrix(0, w.n * w.n));
    return out;
  }
  auto try_element = [&](const Matrix& a, std::optional<Elem>& root) -> bool {
    upoly::UPoly mu = w.min_poly(a, e);
    auto parts = upoly::primary_decomposition(f, mu);
    if (parts.size() >= 2) {
      out.kind = Split::split;
      out.e1 = splitting_idempotent(w, mu, parts, a, e);
      return true;
    }
    const auto& g = parts.at(0).irreducible;
    if (upoly::deg(g) > 1) {
      out.kind = Split::extension;
      out.degree = upoly::deg(g);
      return true;
    }
    root = f.neg(g[0]);
    return false;
  };

  Matrix nil(0, w.n * w.n);
  for (const auto& c : C) {
    std::optional<Elem> lambda;
    if (try_element(c, lambda)) return out;
    nil.append_row(flatten(la::sub(f, c, la::scale(f, e, *lambda))));
  }
  la::Echelon N = la::echelon(f, std::move(nil));
  if (w.nilpotent_ideal(C, N)) {
    out.nil = std::move(N);
    return out;
  }
  // Not local, yet every basis element is primary: look for a splitting
  // element among deterministic pseudo-random combinations.
  std::mt19937_64 rng(0x5eed0000ULL + C.size());
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
  for (int attempt = 0; attempt < 96; ++attempt) {
    Vec c(C.size());
    for (auto& x : c) x = static_cast<Elem>(dist(rng));
    std::optional<Elem> lambda;
    if (try_element(w.combo(C, c), lambda)) return out;
  }
  out.kind = Split::extension;
  out.degree = 2;
  return out;
}

void split_recursive(const CornerWork& w, const std::vector<Matrix>& basis, const Matrix& e, std::vector<Matrix>& out) {
  Split s = classify(w, basis, e);
  if (s.kind == Split::extension) throw NeedsExtension{s.degree};
  if (s.kind == Split::local) {
    out.push_back(e);
    return;
  }
  Matrix e2 = la::sub(w.f, e, s.e1);
  split_recursive(w, basis, s.e1, out);
  split_recursive(w, basis, e2, out);
}

}  // namespace

std::vector<Matrix> primitive_idempotents(const EndAlgebra& A) {
  CornerWork w{*A.field, A.generator_dim};
  std::vector<Matrix> out;
  if (A.generator_dim == 0) return out;
  split_recursive(w, A.basis, Matrix::identity(A.generator_dim), out);
  return out;
}

bool corner_is_split_local(const EndAlgebra& A, const Matrix& e) {
  CornerWork w{*A.field, A.generator_dim};
  return classify(w, A.basis, e).kind == Split::local;
}

std::vector<Matrix> radical_basis(const EndAlgebra& A, const std::vector<Matrix>& idem) {
  const Field& f = *A.field;
  CornerWork w{f, A.generator_dim};
  const std::size_t nn = A.generator_dim * A.generator_dim;
  std::vector<la::Echelon> nil;
  std::vector<Vec> unit_residue;
  for (const auto& e : idem) {
    Split s = classify(w, A.basis, e);
    if (s.kind != Split::local) throw Error(ErrorCode::invariant, "idempotent is not primitive");
    Vec r = flatten(e);
    la::reduce(f, s.nil, r);
    unit_residue.push_back(std::move(r));
    nil.push_back(std::move(s.nil));
  }
  // lambda_i(c): the scalar with c - lambda e_i in the corner radical
  auto lambda = [&](std::size_t i, const Matrix& c) {
    Vec r = flatten(c);
    la::reduce(f, nil[i], r);
    for (std::size_t k = 0; k < nn; ++k)
      if (unit_residue[i][k] != 0) return f.div(r[k], unit_residue[i][k]);
    return Elem{0};
  };
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (auto& m : as_matrices(nil[i], A.generator_dim)) gens.push_back(std::move(m));
    for (std::size_t j = 0; j < idem.size(); ++j) {
      if (i == j) continue;
      auto U = w.piece(A.basis, idem[i], idem[j]);
      auto W = w.piece(A.basis, idem[j], idem[i]);
      if (U.empty()) continue;
      Matrix cond(U.size(), W.size());
      for (std::size_t a = 0; a < U.size(); ++a)
        for (std::size_t b = 0; b < W.size(); ++b) cond(a, b) = lambda(i, la::mul(f, U[a], W[b]));
      Matrix ker = W.empty() ? Matrix::identity(U.size()) : la::left_nullspace(f, cond);
      for (std::size_t r = 0; r < ker.rows(); ++r) gens.push_back(w.combo(U, ker.row_vec(r)));
    }
  }
  return as_matrices(span_of(f, gens, A.generator_dim), A.generator_dim);
}

Decomposition decompose_bundle(const SyzygyBundle& bundle, const DecomposeOptions& opts) {
  const FieldPtr& base = bundle.ideal.curve.field;
  int ext = std::max(1, opts.force_extension);
  for (;;) {
    if (ext > opts.max_extension)
      throw Error(ErrorCode::undecided, "endomorphism algebra does not split over an extension of degree <= " +
                                            std::to_string(opts.max_extension));
    std::optional<SyzygyBundle> extended;
    if (ext > 1) {
      FieldPtr big = make_field(base->characteristic(), base->degree() * ext);
      Embedding emb(base, big);
      extended = syzygy_bundle(extend_ideal(bundle.ideal, emb), bundle.m);
    }
    const SyzygyBundle& B = extended ? *extended : bundle;
    EndAlgebra A = end_algebra(B);
    std::vector<Matrix> idem;
    try {
      idem = primitive_idempotents(A);
    } catch (const NeedsExtension& ne) {
      ext *= std::max(2, ne.degree);
      continue;
    }
    A.radical = radical_basis(A, idem);

    std::vector<Summand> summands;
    for (auto& e : idem) {
      PresentedModule img = image_presentation(B.module, ModuleMap{A.t0, e});
      RankDegree rd = rank_and_degree(img);
      summands.push_back(Summand{std::move(e), std::move(img), rd.rank, rd.degree});
    }
    std::sort(summands.begin(), summands.end(), [](const Summand& a, const Summand& b) {
      if (a.degree != b.degree) return a.degree > b.degree;
      if (a.rank != b.rank) return a.rank > b.rank;
      return flatten(a.projection) < flatten(b.projection);
    });
    int rk = 0, dg = 0;
    for (const auto& s : summands) {
      rk += s.rank;
      dg += s.degree;
    }
    if (rk != B.rank || dg != B.degree)
      throw Error(ErrorCode::invariant, "summand ranks/degrees do not add up");
    return Decomposition{B, std::move(A), std::move(summands), ext};
  }
}

Vec ForcingData::include(const SyzygyBundle& bundle, int t, std::span<const Elem> v) const {
  Vec out(bundle.ring->dim(t), 0);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

ForcingData forcing_data(const SyzygyBundle& bundle, const Polynomial& f0) {
  if (!f0.is_zero() && (!f0.is_homogeneous() || f0.degree() != bundle.m))
    throw Error(ErrorCode::bad_candidate, "forcing element must be homogeneous of degree m");
  GradedMap phi;
  phi.source.twists.push_back(0);
  for (int d : bundle.ideal.degrees) phi.source.twists.push_back(bundle.m - d);
  phi.target.twists = {bundle.m};
  std::vector<Polynomial> row{f0};
  row.insert(row.end(), bundle.ideal.gens.begin(), bundle.ideal.gens.end());
  phi.entries.assign(1, std::move(row));
  PresentedModule M = syzygy_of_map(bundle.ring, phi);
  RankDegree rd = rank_and_degree(M);
  if (rd.rank != bundle.ideal.n()) throw Error(ErrorCode::invariant, "forcing syzygy module has wrong rank");
  return ForcingData{f0, bundle.m, std::move(M), rd.rank};
}

bool component_class_vanishes(const ForcingData& forcing, const SyzygyBundle& bundle, const Summand& summand) {
  const Field& f = *bundle.ring->field();
  const PresentedModule& M = bundle.module;
  const PresentedModule& Mp = forcing.syz_prime;
  const int t0 = std::max(regularity_index(Mp), bundle.t0);
  HomPiece H = hom_piece_at(Mp, M, t0);
  const auto& gens = M.piece(t0);
  Matrix C(0, Mp.dim(t0));
  for (std::size_t a = 0; a < gens.rank(); ++a) {
    auto c = Mp.coordinates(t0, forcing.include(bundle, t0, gens.rows.row(a)));
    if (!c) throw Error(ErrorCode::invariant, "Syz(m) does not embed in Syz'(m)");
    C.append_row(*c);
  }
  Matrix E = map_at(M, M, ModuleMap{bundle.t0, summand.projection}, t0);
  const std::size_t n = gens.rank();
  if (n == 0) return true;
  Matrix sys(0, n * n);
  for (const auto& X : H.basis) sys.append_row(flatten(la::mul(f, C, X)));
  Vec target = flatten(E);
  if (sys.rows() == 0) return la::is_zero(target);
  return la::solve(f, la::transpose(sys), target).has_value();
}

CohomologyDims cohomology_dims(const PresentedModule& M, int j, const RankDegree& rd) {
  long h0 = static_cast<long>(M.dim(j));
  long h1 = h0 - (static_cast<long>(rd.degree) + 3L * rd.rank * j);
  if (h1 < 0) throw Error(ErrorCode::invariant, "negative h^1: module is not saturated");
  return {h0, h1};
}

CohomologyDims cohomology_dims(const PresentedModule& M, int j) { return cohomology_dims(M, j, rank_and_degree(M)); }

}  // namespace tc
