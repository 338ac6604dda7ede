#pragma once
// Deterministic random primary ideals on a fixed cubic, shared by the unit
// and acceptance tests.

#include <random>

#include "tc/curve.hpp"

namespace tc::testing {

inline Polynomial random_form(const FieldPtr& f, int d, std::mt19937_64& rng, double density = 0.5) {
  std::uniform_int_distribution<std::uint64_t> coef(1, f->order() - 1);
  std::bernoulli_distribution keep(density);
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(d))
    if (keep(rng)) terms.push_back({m, static_cast<Elem>(coef(rng))});
  if (terms.empty()) terms.push_back({monomials_of_degree(d)[std::uniform_int_distribution<std::size_t>(0, d)(rng)],
                                      static_cast<Elem>(coef(rng))});
  return Polynomial(f, terms);
}

// n generators of degrees in [dmin, dmax]; retried until primary.
inline IdealData random_primary_ideal(const CubicCurve& curve, std::mt19937_64& rng, int nmin, int nmax, int dmin,
                                      int dmax) {
  std::uniform_int_distribution<int> nd(nmin, nmax), dd(dmin, dmax);
  for (;;) {
    int n = nd(rng);
    std::vector<Polynomial> gens;
    for (int i = 0; i < n; ++i) gens.push_back(random_form(curve.field, dd(rng), rng));
    if (is_irrelevant_primary(curve, gens)) return make_ideal(curve, gens);
  }
}

}  // namespace tc::testing
