#include "tc/graded.hpp"

#include <algorithm>
#include <cstdlib>

#include "tc/error.hpp"

namespace tc {

namespace {

std::uint64_t pack(const Monomial& m) {
  return (static_cast<std::uint64_t>(m.e[0]) << 42) | (static_cast<std::uint64_t>(m.e[1]) << 21) |
         static_cast<std::uint64_t>(m.e[2]);
}

}  // namespace

GradedRing::GradedRing(FieldPtr field, std::optional<Polynomial> relation)
    : field_(std::move(field)) {
  if (relation && !relation->is_zero()) {
    if (!relation->is_homogeneous()) throw Error(ErrorCode::invariant, "ring relation must be homogeneous");
    relation_ = relation->monic();
  }
}

const std::vector<Monomial>& GradedRing::basis(int s) const {
  std::lock_guard lock(mutex_);
  auto it = basis_.find(s);
  if (it != basis_.end()) return it->second;
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(s)) {
    if (relation_ && relation_->leading().mono.divides(m)) continue;
    out.push_back(m);
  }
  auto& idx = index_[s];
  for (std::size_t i = 0; i < out.size(); ++i) idx[pack(out[i])] = static_cast<std::uint32_t>(i);
  return basis_.emplace(s, std::move(out)).first->second;
}

std::size_t GradedRing::index_of(const Monomial& m) const {
  basis(m.degree());
  std::lock_guard lock(mutex_);
  auto& idx = index_.at(m.degree());
  auto it = idx.find(pack(m));
  if (it == idx.end()) throw Error(ErrorCode::invariant, "monomial is not in normal form");
  return it->second;
}

const GradedRing::SparseVec& GradedRing::monomial_nf(const Monomial& m) const {
  std::lock_guard lock(mutex_);
  const std::uint64_t key = pack(m);
  if (auto it = nf_.find(key); it != nf_.end()) return it->second;
  SparseVec out;
  if (!relation_ || !relation_->leading().mono.divides(m)) {
    out.entries.push_back({static_cast<std::uint32_t>(index_of(m)), field_->one()});
  } else {
    // m = LM * w  ==>  m = -(tail of F) * w modulo F.
    const Monomial w = m / relation_->leading().mono;
    const std::size_t n = dim(m.degree());
    Vec acc(n, 0);
    const auto& terms = relation_->terms();
    for (std::size_t i = 1; i < terms.size(); ++i) {
      const SparseVec& sub = monomial_nf(terms[i].mono * w);
      const Elem c = field_->neg(terms[i].coeff);
      for (auto [j, v] : sub.entries) acc[j] = field_->add(acc[j], field_->mul(c, v));
    }
    for (std::size_t j = 0; j < n; ++j)
      if (acc[j] != 0) out.entries.push_back({static_cast<std::uint32_t>(j), acc[j]});
  }
  return nf_.emplace(key, std::move(out)).first->second;
}

const std::vector<GradedRing::SparseVec>& GradedRing::var_map(int s, int var) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(s, var);
  if (auto it = var_maps_.find(key); it != var_maps_.end()) return it->second;
  std::vector<SparseVec> rows;
  for (const auto& b : basis(s)) rows.push_back(monomial_nf(b * Monomial::var(var)));
  return var_maps_.emplace(key, std::move(rows)).first->second;
}

Vec GradedRing::coords(const Polynomial& f, int s) const {
  Vec out(dim(s), 0);
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != s) throw Error(ErrorCode::invariant, "polynomial is not homogeneous of the expected degree");
    for (auto [j, v] : monomial_nf(t.mono).entries) out[j] = field_->add(out[j], field_->mul(t.coeff, v));
  }
  return out;
}

Polynomial GradedRing::poly(std::span<const Elem> v, int s) const {
  const auto& b = basis(s);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) terms.push_back({b[i], v[i]});
  return Polynomial(field_, std::move(terms));
}

Vec GradedRing::mul_var(std::span<const Elem> v, int s, int var) const {
  Vec out(dim(s + 1), 0);
  if (s < 0) return out;
  const auto& rows = var_map(s, var);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (auto [j, c] : rows[i].entries) out[j] = field_->add(out[j], field_->mul(v[i], c));
  }
  return out;
}

Vec GradedRing::mul_monomial(std::span<const Elem> v, int s, const Monomial& m) const {
  Vec cur(v.begin(), v.end());
  int deg = s;
  for (int var = 0; var < 3; ++var) {
    for (int k = 0; k < m.e[var]; ++k) cur = mul_var(cur, deg++, var);
  }
  return cur;
}

Vec GradedRing::mul_poly(std::span<const Elem> v, int s, const Polynomial& g) const {
  const int d = g.degree();
  Vec out(dim(s + std::max(d, 0)), 0);
  if (g.is_zero()) return out;
  const auto& b = basis(s);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (const auto& t : g.terms()) {
      const Elem c = field_->mul(v[i], t.coeff);
      for (auto [j, x] : monomial_nf(b[i] * t.mono).entries) out[j] = field_->add(out[j], field_->mul(c, x));
    }
  }
  return out;
}

Matrix GradedRing::multiples(std::span<const Elem> g, int s, int shift) const {
  std::vector<Vec> level{Vec(g.begin(), g.end())};
  for (int k = 1; k <= shift; ++k) {
    std::vector<Vec> next;
    for (const auto& w : basis(k)) {
      int var = w.e[0] > 0 ? 0 : (w.e[1] > 0 ? 1 : 2);
      const std::size_t parent = index_of(w / Monomial::var(var));
      next.push_back(mul_var(level[parent], s + k - 1, var));
    }
    level = std::move(next);
  }
  Matrix out(0, dim(s + shift));
  if (shift < 0) return out;
  for (const auto& row : level) out.append_row(row);
  return out;
}

std::size_t TwistedFree::dim(const GradedRing& r, int t) const {
  std::size_t d = 0;
  for (int a : twists) d += r.dim(t + a);
  return d;
}

std::size_t TwistedFree::offset(const GradedRing& r, int t, int component) const {
  std::size_t d = 0;
  for (int i = 0; i < component; ++i) d += r.dim(t + twists[i]);
  return d;
}

TwistedFree TwistedFree::shifted(int d) const {
  TwistedFree out = *this;
  for (auto& a : out.twists) a += d;
  return out;
}

Vec element_coords(const GradedRing& r, const TwistedFree& L, int t, const std::vector<Polynomial>& column) {
  Vec out;
  out.reserve(L.dim(r, t));
  for (int i = 0; i < L.rank(); ++i) {
    const int s = t + L.twists[i];
    if (s < 0) {
      if (!column[i].is_zero()) throw Error(ErrorCode::invariant, "component degree mismatch");
      continue;
    }
    Vec c = column[i].is_zero() ? Vec(r.dim(s), 0) : r.coords(column[i], s);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

std::vector<Polynomial> element_polys(const GradedRing& r, const TwistedFree& L, int t, std::span<const Elem> v) {
  std::vector<Polynomial> out;
  std::size_t off = 0;
  for (int i = 0; i < L.rank(); ++i) {
    const int s = t + L.twists[i];
    const std::size_t d = r.dim(s);
    out.push_back(d == 0 ? Polynomial(r.field()) : r.poly(v.subspan(off, d), s));
    off += d;
  }
  return out;
}

Vec element_mul_var(const GradedRing& r, const TwistedFree& L, int t, std::span<const Elem> v, int var) {
  Vec out;
  out.reserve(L.dim(r, t + 1));
  std::size_t off = 0;
  for (int i = 0; i < L.rank(); ++i) {
    const int s = t + L.twists[i];
    const std::size_t d = r.dim(s);
    Vec c = s < 0 ? Vec(r.dim(s + 1), 0) : r.mul_var(v.subspan(off, d), s, var);
    out.insert(out.end(), c.begin(), c.end());
    off += d;
  }
  return out;
}

Vec element_mul_monomial(const GradedRing& r, const TwistedFree& L, int t, std::span<const Elem> v,
                         const Monomial& m) {
  Vec cur(v.begin(), v.end());
  int deg = t;
  for (int var = 0; var < 3; ++var)
    for (int k = 0; k < m.e[var]; ++k) cur = element_mul_var(r, L, deg++, cur, var);
  return cur;
}

std::vector<Vec> element_multiples(const GradedRing& r, const TwistedFree& L, std::span<const Elem> g, int s,
                                   int shift) {
  std::vector<Vec> level{Vec(g.begin(), g.end())};
  if (shift < 0) return {};
  for (int k = 1; k <= shift; ++k) {
    std::vector<Vec> next;
    for (const auto& w : r.basis(k)) {
      int var = w.e[0] > 0 ? 0 : (w.e[1] > 0 ? 1 : 2);
      next.push_back(element_mul_var(r, L, s + k - 1, level[r.index_of(w / Monomial::var(var))], var));
    }
    level = std::move(next);
  }
  return level;
}

void GradedMap::validate() const {
  if (static_cast<int>(entries.size()) != target.rank()) throw Error(ErrorCode::invariant, "map has wrong row count");
  for (int i = 0; i < target.rank(); ++i) {
    if (static_cast<int>(entries[i].size()) != source.rank()) throw Error(ErrorCode::invariant, "map has wrong column count");
    for (int j = 0; j < source.rank(); ++j) {
      const auto& e = entries[i][j];
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || e.degree() != target.twists[i] - source.twists[j]) {
        throw Error(ErrorCode::invariant, "map entry has the wrong degree");
      }
    }
  }
}

Matrix GradedMap::piece(const GradedRing& r, int t) const {
  const std::size_t cols = target.dim(r, t);
  Matrix out(0, cols);
  for (int j = 0; j < source.rank(); ++j) {
    const int s = t + source.twists[j];
    if (s < 0) continue;
    const std::size_t n = r.dim(s);
    for (std::size_t u = 0; u < n; ++u) {
      Vec unit(n, 0);
      unit[u] = r.field()->one();
      Vec row;
      row.reserve(cols);
      for (int i = 0; i < target.rank(); ++i) {
        const int ts = t + target.twists[i];
        if (ts < 0) continue;
        Vec c = entries[i][j].is_zero() ? Vec(r.dim(ts), 0) : r.mul_poly(unit, s, entries[i][j]);
        row.insert(row.end(), c.begin(), c.end());
      }
      out.append_row(row);
    }
  }
  return out;
}

PresentedModule::PresentedModule(RingPtr ring, TwistedFree ambient, PieceFn piece, int probe_start,
                                 std::string kind)
    : ring_(std::move(ring)),
      ambient_(std::move(ambient)),
      piece_fn_(std::move(piece)),
      probe_start_(probe_start),
      kind_(std::move(kind)),
      cache_(std::make_shared<Cache>()) {}

const la::Echelon& PresentedModule::piece(int t) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->pieces.find(t); it != cache_->pieces.end()) return *it->second;
  }
  auto e = std::make_shared<const la::Echelon>(la::echelon(*ring_->field(), piece_fn_(t)));
  std::lock_guard lock(cache_->mutex);
  return *cache_->pieces.emplace(t, std::move(e)).first->second;
}

std::optional<Vec> PresentedModule::coordinates(int t, std::span<const Elem> v) const {
  return la::coordinates(*ring_->field(), piece(t), v);
}

PresentedModule PresentedModule::twisted(int d) const {
  PresentedModule base = *this;
  return PresentedModule(
      ring_, ambient_.shifted(d),
      [base, d](int t) { return base.piece(t + d).rows; }, probe_start_ - d,
      kind_ + "(" + std::to_string(d) + ")");
}

PresentedModule free_module(const RingPtr& ring, const TwistedFree& L) {
  int probe = 2;
  for (int a : L.twists) probe = std::max(probe, 2 - a);
  return PresentedModule(
      ring, L,
      [ring, L](int t) { return Matrix::identity(L.dim(*ring, t)); }, probe, "free");
}

PresentedModule syzygy_of_map(const RingPtr& ring, const GradedMap& phi) {
  phi.validate();
  int max_src = 0, max_tgt = 0, max_entry = 0;
  for (int a : phi.source.twists) max_src = std::max(max_src, std::abs(a));
  for (int b : phi.target.twists) max_tgt = std::max(max_tgt, std::abs(b));
  for (const auto& row : phi.entries)
    for (const auto& e : row) max_entry = std::max(max_entry, e.degree());
  // Past this degree every indecomposable summand of the sheaf has positive degree.
  const int probe = std::max(2 * max_src + max_tgt + 2, max_entry + phi.source.rank() + 3);
  return PresentedModule(
      ring, phi.source,
      [ring, phi](int t) {
        const Field& f = *ring->field();
        Matrix a = phi.piece(*ring, t);
        if (a.rows() == 0) return Matrix(0, phi.source.dim(*ring, t));
        if (a.cols() == 0) return Matrix::identity(a.rows());
        return la::left_nullspace(f, a);
      },
      probe, "syzygy");
}

PresentedModule generated_module(const RingPtr& ring, const TwistedFree& L,
                                 std::vector<std::pair<int, Vec>> gens, std::string kind) {
  int probe = 2;
  for (const auto& [d, v] : gens) probe = std::max(probe, d + 2);
  return PresentedModule(
      ring, L,
      [ring, L, gens](int t) {
        Matrix out(0, L.dim(*ring, t));
        for (const auto& [d, g] : gens) {
          if (d > t) continue;
          for (const auto& row : element_multiples(*ring, L, g, d, t - d)) out.append_row(row);
        }
        return out;
      },
      probe, std::move(kind));
}

std::vector<std::vector<Polynomial>> graded_piece_basis(const PresentedModule& M, int t) {
  const auto& e = M.piece(t);
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < e.rows.rows(); ++i)
    out.push_back(element_polys(*M.ring(), M.ambient(), t, e.rows.row(i)));
  return out;
}

std::size_t hilbert_value(const PresentedModule& M, int t) { return M.dim(t); }

RankDegree rank_and_degree(const PresentedModule& M) {
  if (!M.ring()->is_quotient()) throw Error(ErrorCode::invariant, "rank and degree need the cubic coordinate ring");
  int t = std::max(M.probe_start(), 1);
  for (int attempt = 0; attempt < 2; ++attempt, t *= 2) {
    const long h0 = static_cast<long>(M.dim(t));
    const long h1 = static_cast<long>(M.dim(t + 1));
    const long h2 = static_cast<long>(M.dim(t + 2));
    const long step = h1 - h0;
    if (h2 - h1 != step || step % 3 != 0 || step < 0) continue;
    const int rank = static_cast<int>(step / 3);
    return {rank, static_cast<int>(h0 - 3L * rank * t)};
  }
  throw Error(ErrorCode::invariant, "Hilbert function is not linear in the probed range");
}

int regularity_index(const PresentedModule& M, const RankDegree& rd) {
  if (rd.rank == 0) return M.probe_start();
  int s = std::max(M.probe_start(), 1);
  while (static_cast<long>(M.dim(s)) == 3L * rd.rank * s + rd.degree) --s;
  return s + 2;
}

int regularity_index(const PresentedModule& M) { return regularity_index(M, rank_and_degree(M)); }

}  // namespace tc
