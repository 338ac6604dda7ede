#pragma once
// Plane cubic curves and homogeneous ideals in their coordinate rings.

#include <vector>

#include "tc/groebner.hpp"
#include "tc/polynomial.hpp"

namespace tc {

struct CubicCurve {
  Polynomial F;
  FieldPtr field;
  Elem hasse;          // coefficient of (xyz)^(p-1) in F^(p-1)
  bool supersingular;  // hasse == 0
  GroebnerBasis groebner_F;
};

struct IdealData {
  CubicCurve curve;
  std::vector<Polynomial> gens;
  std::vector<int> degrees;

  int n() const { return static_cast<int>(gens.size()); }
  int degree_sum() const;
};

bool is_smooth_cubic(const Polynomial& F);

// Coefficient of (xyz)^(p-1) in F^(p-1), and whether it vanishes.
struct HasseResult {
  Elem value;
  bool supersingular;
};
HasseResult hasse_invariant(const Polynomial& F);

// Throws Error(not_cubic) or Error(singular_cubic).
CubicCurve make_curve(const Polynomial& F);

// True iff (gens, F) contains a power of each variable.
bool is_irrelevant_primary(const CubicCurve& curve, const std::vector<Polynomial>& gens);
bool is_irrelevant_primary(const IdealData& ideal);

// Validates homogeneity, n >= 2 and primary-ness. Throws Error(bad_ideal) or
// Error(not_primary).
IdealData make_ideal(const CubicCurve& curve, std::vector<Polynomial> gens);

// f in (f_1, ..., f_n, F) in the polynomial ring.
bool ideal_membership(const Polynomial& f, const IdealData& ideal);

// The same curve and ideal with coefficients pushed into a larger field.
CubicCurve extend_curve(const CubicCurve& curve, const Embedding& emb);
IdealData extend_ideal(const IdealData& ideal, const Embedding& emb);

}  // namespace tc
