#pragma once
#include <vector>

#include "tc/polynomial.hpp"

namespace tc {

using GroebnerBasis = std::vector<Polynomial>;

// Full reduction of f by g (every term, not only the leading one). The
// result is the unique remainder when g is a Groebner basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

// Reduced Groebner basis for degrevlex (x > y > z): monic elements sorted by
// increasing leading monomial. Pairs are processed by smallest sugar degree,
// ties broken by the lcm. The zero ideal yields an empty basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens);

bool is_groebner_member(const Polynomial& f, const GroebnerBasis& g);

}  // namespace tc
