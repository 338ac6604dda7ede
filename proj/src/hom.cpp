// Degree-0 homomorphisms between MCM modules over the cubic cone.
//
// For t0 at or past the regularity index of M, M_{>=t0} is generated by M_{t0}
// with linear relations only, and Hom(M, N) = Hom(M_{>=t0}, N) whenever N is
// reflexive. A homomorphism is therefore a linear map on M_{t0} that kills
// the images of the linear relations.

#include <algorithm>
#include <map>

#include "tc/error.hpp"
#include "tc/graded.hpp"

namespace tc {

namespace {

// Multiplication by each variable as dense matrices R_s -> R_{s+1}.
std::array<Matrix, 3> var_matrices(const GradedRing& r, int s) {
  std::array<Matrix, 3> out;
  const std::size_t n = r.dim(s);
  for (int v = 0; v < 3; ++v) {
    out[v] = Matrix(0, r.dim(s + 1));
    for (std::size_t j = 0; j < n; ++j) {
      Vec unit(n, 0);
      unit[j] = r.field()->one();
      out[v].append_row(r.mul_var(unit, s, v));
    }
  }
  return out;
}

// Solves P E = Q for E when P has full column rank.
Matrix solve_right(const Field& f, const Matrix& p, const Matrix& q) {
  const std::size_t d = p.cols();
  Matrix aug(p.rows(), d + q.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = p(i, j);
    for (std::size_t j = 0; j < q.cols(); ++j) aug(i, d + j) = q(i, j);
  }
  la::Echelon e = la::echelon(f, std::move(aug));
  if (e.rank() < d) throw Error(ErrorCode::invariant, "products do not span the graded piece");
  for (std::size_t i = 0; i < d; ++i)
    if (e.pivots[i] != i) throw Error(ErrorCode::invariant, "products do not span the graded piece");
  if (e.rank() > d) throw Error(ErrorCode::invariant, "map is not well defined on the graded piece");
  Matrix out(d, q.cols());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) out(i, j) = e.rows(i, d + j);
  return out;
}

Vec coords_or_throw(const PresentedModule& M, int t, std::span<const Elem> v) {
  auto c = M.coordinates(t, v);
  if (!c) throw Error(ErrorCode::invariant, "vector is not in the module piece");
  return *c;
}

}  // namespace

HomPiece hom_piece_at(const PresentedModule& M, const PresentedModule& N, int t0) {
  const GradedRing& r = *M.ring();
  const Field& f = *r.field();
  const auto& U = M.piece(t0);
  const auto& V = N.piece(t0);
  const std::size_t d0 = U.rank();
  if (d0 == 0) return {t0, {}};

  // Linear relations among the generators u_a: coefficient vectors rho with
  // sum rho_{a,v} x_v u_a = 0, indexed a * 3 + v.
  Matrix products(0, M.dim(t0 + 1));
  for (std::size_t a = 0; a < d0; ++a)
    for (int v = 0; v < 3; ++v)
      products.append_row(coords_or_throw(M, t0 + 1, element_mul_var(r, M.ambient(), t0, U.rows.row(a), v)));
  if (la::rank(f, products) != M.dim(t0 + 1)) {
    throw Error(ErrorCode::invariant, "module is not generated in the probe degree");
  }
  const Matrix relations = la::left_nullspace(f, products);

  // Homomorphisms into each free component R(c) of N's ambient.
  const TwistedFree& LN = N.ambient();
  const std::size_t width = LN.dim(r, t0);
  std::vector<Matrix> free_homs;  // d0 x width images
  std::map<int, Matrix> solved;   // per target degree s: rows are flattened y_{a,j}
  for (int i = 0; i < LN.rank(); ++i) {
    const int s = t0 + LN.twists[i];
    const std::size_t rs = r.dim(s);
    if (rs == 0) continue;
    if (!solved.count(s)) {
      const std::size_t rs1 = r.dim(s + 1);
      auto mv = var_matrices(r, s);
      Matrix eq(relations.rows() * rs1, d0 * rs);
      for (std::size_t q = 0; q < relations.rows(); ++q)
        for (std::size_t a = 0; a < d0; ++a)
          for (int v = 0; v < 3; ++v) {
            const Elem c = relations(q, a * 3 + v);
            if (c == 0) continue;
            for (std::size_t j = 0; j < rs; ++j)
              for (std::size_t k = 0; k < rs1; ++k) {
                const Elem m = mv[v](j, k);
                if (m != 0) eq(q * rs1 + k, a * rs + j) = f.add(eq(q * rs1 + k, a * rs + j), f.mul(c, m));
              }
          }
      solved.emplace(s, eq.rows() == 0 ? Matrix::identity(d0 * rs) : la::nullspace(f, eq));
    }
    const Matrix& sol = solved.at(s);
    const std::size_t off = LN.offset(r, t0, i);
    for (std::size_t k = 0; k < sol.rows(); ++k) {
      Matrix img(d0, width);
      for (std::size_t a = 0; a < d0; ++a)
        for (std::size_t j = 0; j < rs; ++j) img(a, off + j) = sol(k, a * rs + j);
      free_homs.push_back(std::move(img));
    }
  }

  // Keep the combinations whose images lie in N.
  Matrix residues(0, d0 * width);
  for (const auto& img : free_homs) {
    Vec res;
    res.reserve(d0 * width);
    for (std::size_t a = 0; a < d0; ++a) {
      Vec row = img.row_vec(a);
      la::reduce(f, V, row);
      res.insert(res.end(), row.begin(), row.end());
    }
    residues.append_row(res);
  }
  Matrix combos = free_homs.empty() ? Matrix(0, 0) : la::left_nullspace(f, residues);

  // Express in N's basis and bring the basis to a canonical echelon form.
  const std::size_t e0 = V.rank();
  Matrix flat(0, d0 * e0);
  for (std::size_t k = 0; k < combos.rows(); ++k) {
    Vec x;
    x.reserve(d0 * e0);
    for (std::size_t a = 0; a < d0; ++a) {
      Vec image(width, 0);
      for (std::size_t h = 0; h < free_homs.size(); ++h)
        if (combos(k, h) != 0) la::axpy(f, image, free_homs[h].row(a), combos(k, h));
      Vec c = coords_or_throw(N, t0, image);
      x.insert(x.end(), c.begin(), c.end());
    }
    flat.append_row(x);
  }
  la::Echelon canon = la::echelon(f, std::move(flat));
  HomPiece out{t0, {}};
  for (std::size_t k = 0; k < canon.rank(); ++k) {
    Matrix m(d0, e0);
    for (std::size_t a = 0; a < d0; ++a)
      for (std::size_t b = 0; b < e0; ++b) m(a, b) = canon.rows(k, a * e0 + b);
    out.basis.push_back(std::move(m));
  }
  return out;
}

HomPiece hom_piece(const PresentedModule& M, const PresentedModule& N, int d) {
  const PresentedModule target = d == 0 ? N : N.twisted(d);
  return hom_piece_at(M, target, regularity_index(M));
}

Matrix map_at(const PresentedModule& M, const PresentedModule& N, const ModuleMap& fmap, int t) {
  const GradedRing& r = *M.ring();
  const Field& f = *r.field();
  const int t0 = fmap.t0;
  const auto& Bt = M.piece(t);
  const auto& U = M.piece(t0);
  const auto& V = N.piece(t0);
  const std::size_t dt = Bt.rank();
  const std::size_t et = N.dim(t);
  if (dt == 0) return Matrix(0, et);
  if (t == t0) return fmap.matrix;

  // Ambient images of the generators.
  std::vector<Vec> images;
  for (std::size_t a = 0; a < U.rank(); ++a) images.push_back(la::vec_mul(f, fmap.matrix.row(a), V.rows));

  if (t > t0) {
    Matrix pc(0, dt), qc(0, et);
    for (std::size_t a = 0; a < U.rank(); ++a) {
      auto ps = element_multiples(r, M.ambient(), U.rows.row(a), t0, t - t0);
      auto qs = element_multiples(r, N.ambient(), images[a], t0, t - t0);
      for (std::size_t k = 0; k < ps.size(); ++k) {
        pc.append_row(coords_or_throw(M, t, ps[k]));
        qc.append_row(coords_or_throw(N, t, qs[k]));
      }
    }
    return solve_right(f, pc, qc);
  }

  // t < t0: multiply up by x^(t0 - t), apply, divide back.
  const Monomial lift{{t0 - t, 0, 0}};
  const auto& Nt = N.piece(t);
  Matrix nx(0, N.ambient().dim(r, t0));
  for (std::size_t b = 0; b < Nt.rank(); ++b)
    nx.append_row(element_mul_monomial(r, N.ambient(), t, Nt.rows.row(b), lift));
  const Matrix nxt = la::transpose(nx);
  Matrix out(dt, et);
  for (std::size_t a = 0; a < dt; ++a) {
    Vec up = coords_or_throw(M, t0, element_mul_monomial(r, M.ambient(), t, Bt.rows.row(a), lift));
    Vec img = la::vec_mul(f, la::vec_mul(f, up, fmap.matrix), V.rows);
    auto z = nxt.cols() == 0 ? std::optional<Vec>(Vec{}) : la::solve(f, nxt, img);
    if (!z) throw Error(ErrorCode::invariant, "homomorphism does not descend to a lower degree");
    for (std::size_t b = 0; b < et; ++b) out(a, b) = (*z)[b];
  }
  return out;
}

PresentedModule image_presentation(const PresentedModule& M, const ModuleMap& e) {
  PresentedModule base = M;
  return PresentedModule(
      M.ring(), M.ambient(),
      [base, e](int t) {
        const Field& f = *base.ring()->field();
        const auto& Bt = base.piece(t);
        Matrix et = map_at(base, base, e, t);
        if (Bt.rank() == 0) return Matrix(0, base.ambient().dim(*base.ring(), t));
        return la::mul(f, et, Bt.rows);
      },
      M.probe_start(), "image");
}

}  // namespace tc
