#include "tc/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace tc {

namespace {

// Index of the first basis element whose leading monomial divides m, or -1.
int find_reducer(const GroebnerBasis& g, const Monomial& m) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].leading().mono.divides(m)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  const Field& field = *f.field();
  Polynomial p = f;
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term lt = p.leading();
    int i = find_reducer(g, lt.mono);
    if (i < 0) {
      rest.push_back(lt);
      p = p - Polynomial::monomial(f.field(), lt.mono, lt.coeff);
      continue;
    }
    const Term& gl = g[i].leading();
    Elem c = field.div(lt.coeff, gl.coeff);
    p = p - g[i].times(lt.mono / gl.mono, c);
  }
  return Polynomial(f.field(), std::move(rest));
}

bool is_groebner_member(const Polynomial& f, const GroebnerBasis& g) {
  return normal_form(f, g).is_zero();
}

namespace {

struct Pair {
  std::size_t i, j;
  int sugar;
  Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (auto c = compare(a.lcm, b.lcm); c != 0) return c < 0;
  return std::tie(a.i, a.j) < std::tie(b.i, b.j);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const Field& field = *f.field();
  Monomial l = lcm(f.leading().mono, g.leading().mono);
  Polynomial a = f.times(l / f.leading().mono, field.inv(f.leading().coeff));
  Polynomial b = g.times(l / g.leading().mono, field.inv(g.leading().coeff));
  return a - b;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int v = 0; v < 3; ++v)
    if (a.e[v] > 0 && b.e[v] > 0) return false;
  return true;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  GroebnerBasis g;
  std::vector<int> sugar;
  std::vector<Pair> pairs;
  std::vector<bool> alive;

  auto add_element = [&](Polynomial p, int s) {
    p = p.monic();
    const std::size_t k = g.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      Monomial l = lcm(g[i].leading().mono, p.leading().mono);
      int si = sugar[i] + (l.degree() - g[i].leading().mono.degree());
      int sk = s + (l.degree() - p.leading().mono.degree());
      pairs.push_back({i, k, std::max(si, sk), l});
    }
    g.push_back(std::move(p));
    sugar.push_back(s);
    alive.push_back(true);
    // Elements whose leading monomial is now redundant stay for pair bookkeeping
    // but are dropped from the final basis.
  };

  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    Polynomial r = normal_form(f, g);
    if (!r.is_zero()) add_element(std::move(r), f.degree());
  }

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_before);
    Pair pr = *it;
    pairs.erase(it);
    const Monomial& a = g[pr.i].leading().mono;
    const Monomial& b = g[pr.j].leading().mono;
    if (coprime(a, b)) continue;
    // Chain criterion: some other element's leading monomial divides the lcm
    // and both companion pairs are already gone.
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!g[k].leading().mono.divides(pr.lcm)) continue;
      auto pending = [&](std::size_t u, std::size_t v) {
        std::size_t lo = std::min(u, v), hi = std::max(u, v);
        return std::any_of(pairs.begin(), pairs.end(),
                           [&](const Pair& q) { return q.i == lo && q.j == hi; });
      };
      if (!pending(pr.i, k) && !pending(pr.j, k)) skip = true;
    }
    if (skip) continue;
    Polynomial r = normal_form(spoly(g[pr.i], g[pr.j]), g);
    if (!r.is_zero()) add_element(std::move(r), pr.sugar);
  }

  // Minimalize, then inter-reduce.
  GroebnerBasis minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = g[i].leading().mono;
      const Monomial& lj = g[j].leading().mono;
      if (lj.divides(li) && (!(li == lj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& p, const Polynomial& q) {
    return compare(p.leading().mono, q.leading().mono) < 0;
  });
  GroebnerBasis reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    GroebnerBasis others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial tail = minimal[i] - Polynomial::monomial(minimal[i].field(), minimal[i].leading().mono,
                                                        minimal[i].leading().coeff);
    Polynomial nf = normal_form(tail, others);
    reduced.push_back((Polynomial::monomial(minimal[i].field(), minimal[i].leading().mono,
                                            minimal[i].leading().coeff) + nf).monic());
  }
  return reduced;
}

}  // namespace tc
