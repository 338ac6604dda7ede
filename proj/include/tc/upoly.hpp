#pragma once
// Dense univariate polynomials over a Field, coefficients low to high.
// Trailing zeros are always trimmed; the zero polynomial is empty.

#include <cstdint>
#include <random>
#include <vector>

#include "tc/field.hpp"

namespace tc::upoly {

using UPoly = std::vector<Elem>;

void trim(UPoly& a);
int deg(const UPoly& a);  // -1 for zero
UPoly add(const Field& f, const UPoly& a, const UPoly& b);
UPoly sub(const Field& f, const UPoly& a, const UPoly& b);
UPoly mul(const Field& f, const UPoly& a, const UPoly& b);
UPoly scale(const Field& f, const UPoly& a, Elem c);
void divmod(const Field& f, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly mod(const Field& f, const UPoly& a, const UPoly& b);
UPoly monic(const Field& f, const UPoly& a);
UPoly gcd(const Field& f, UPoly a, UPoly b);
// Returns g = gcd(a, b) and s with s*a = g (mod b).
UPoly inverse_mod(const Field& f, const UPoly& a, const UPoly& m);
UPoly powmod(const Field& f, const UPoly& base, std::uint64_t e, const UPoly& m);
UPoly derivative(const Field& f, const UPoly& a);
Elem eval(const Field& f, const UPoly& a, Elem x);

// Irreducibility over the field `f` by the Ben-Or gcd test.
bool is_irreducible(const Field& f, const UPoly& a);

// Monic squarefree factors grouped by multiplicity: returns pairs (g, e)
// with a = lc * prod g^e.
std::vector<std::pair<UPoly, int>> squarefree_factorization(const Field& f, const UPoly& a);

// Products of the irreducible factors of each degree d of a squarefree
// monic polynomial: returns pairs (d, product).
std::vector<std::pair<int, UPoly>> distinct_degree_factorization(const Field& f, const UPoly& a);

// All distinct roots in f, sorted by code. Deterministic.
std::vector<Elem> roots(const Field& f, const UPoly& a);

// Coprime primary decomposition a = lc * prod P_i with P_i = g_i^{e_i} and
// g_i irreducible, sorted deterministically. Only splits completely when
// irreducible factors can be separated; `irreducible_degrees` reports the
// degree of each g_i.
struct PrimaryPart {
  UPoly power;       // g^e
  UPoly irreducible; // g
  int multiplicity;
};
std::vector<PrimaryPart> primary_decomposition(const Field& f, const UPoly& a);

}  // namespace tc::upoly
