#include "tc/curve.hpp"

#include <map>
#include <numeric>

#include "tc/error.hpp"

namespace tc {

int IdealData::degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

namespace {

bool contains_variable_powers(const GroebnerBasis& gb) {
  bool found[3] = {false, false, false};
  for (const auto& g : gb) {
    const Monomial& m = g.leading().mono;
    for (int v = 0; v < 3; ++v) {
      if (m.e[v] > 0 && m.degree() == m.e[v]) found[v] = true;
    }
    if (m.degree() == 0) return true;  // unit ideal
  }
  return found[0] && found[1] && found[2];
}

}  // namespace

bool is_smooth_cubic(const Polynomial& F) {
  if (F.is_zero() || !F.is_homogeneous() || F.degree() != 3) {
    throw Error(ErrorCode::not_cubic, "cubic must be a nonzero homogeneous polynomial of degree 3");
  }
  std::vector<Polynomial> gens{F, F.derivative(0), F.derivative(1), F.derivative(2)};
  return contains_variable_powers(buchberger(gens));
}

HasseResult hasse_invariant(const Polynomial& F) {
  const Field& f = *F.field();
  const int bound = static_cast<int>(f.characteristic()) - 1;
  // Expand F^(p-1) keeping only monomials that can still divide (xyz)^(p-1).
  std::map<std::array<int, 3>, Elem> acc{{{0, 0, 0}, f.one()}};
  for (int step = 0; step < bound; ++step) {
    std::map<std::array<int, 3>, Elem> next;
    for (const auto& [m, c] : acc) {
      for (const auto& t : F.terms()) {
        std::array<int, 3> e{m[0] + t.mono.e[0], m[1] + t.mono.e[1], m[2] + t.mono.e[2]};
        if (e[0] > bound || e[1] > bound || e[2] > bound) continue;
        auto& slot = next[e];
        slot = f.add(slot, f.mul(c, t.coeff));
      }
    }
    acc = std::move(next);
  }
  auto it = acc.find({bound, bound, bound});
  Elem value = it == acc.end() ? 0 : it->second;
  return {value, value == 0};
}

CubicCurve make_curve(const Polynomial& F) {
  if (!is_smooth_cubic(F)) throw Error(ErrorCode::singular_cubic, "cubic curve is singular");
  auto h = hasse_invariant(F);
  return CubicCurve{F, F.field(), h.value, h.supersingular, buchberger({F})};
}

bool is_irrelevant_primary(const CubicCurve& curve, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> all = gens;
  all.push_back(curve.F);
  return contains_variable_powers(buchberger(all));
}

bool is_irrelevant_primary(const IdealData& ideal) {
  return is_irrelevant_primary(ideal.curve, ideal.gens);
}

IdealData make_ideal(const CubicCurve& curve, std::vector<Polynomial> gens) {
  if (gens.size() < 2) throw Error(ErrorCode::bad_ideal, "an ideal needs at least two generators");
  std::vector<int> degrees;
  for (const auto& g : gens) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1) {
      throw Error(ErrorCode::bad_ideal,
                  "generator '" + g.to_string() + "' must be nonzero, homogeneous, of positive degree");
    }
    if (!g.field()->same_as(*curve.field)) throw Error(ErrorCode::field_mismatch, "generator field differs");
    degrees.push_back(g.degree());
  }
  if (!is_irrelevant_primary(curve, gens)) {
    throw Error(ErrorCode::not_primary, "ideal is not primary to the irrelevant ideal");
  }
  return IdealData{curve, std::move(gens), std::move(degrees)};
}

bool ideal_membership(const Polynomial& f, const IdealData& ideal) {
  std::vector<Polynomial> all = ideal.gens;
  all.push_back(ideal.curve.F);
  return is_groebner_member(f, buchberger(all));
}

CubicCurve extend_curve(const CubicCurve& curve, const Embedding& emb) {
  return make_curve(curve.F.mapped(emb));
}

IdealData extend_ideal(const IdealData& ideal, const Embedding& emb) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens) gens.push_back(g.mapped(emb));
  return IdealData{extend_curve(ideal.curve, emb), std::move(gens), ideal.degrees};
}

}  // namespace tc
