#pragma once
// Polynomials in x, y, z over a finite field, terms kept in degrevlex order
// (x > y > z), largest first.

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tc/field.hpp"

namespace tc {

struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2]; }
  bool divides(const Monomial& other) const {
    return e[0] <= other.e[0] && e[1] <= other.e[1] && e[2] <= other.e[2];
  }
  Monomial operator*(const Monomial& o) const { return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}}; }
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const { return {{e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}}; }
  bool operator==(const Monomial&) const = default;

  static Monomial var(int i) {
    Monomial m;
    m.e[i] = 1;
    return m;
  }
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Degrevlex comparison with x > y > z.
std::strong_ordering compare(const Monomial& a, const Monomial& b);
inline bool mono_greater(const Monomial& a, const Monomial& b) { return compare(a, b) > 0; }

// All monomials of degree d, largest first.
std::vector<Monomial> monomials_of_degree(int d);

struct Term {
  Monomial mono;
  Elem coeff;
  bool operator==(const Term&) const = default;
};

class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  Polynomial(FieldPtr field, std::vector<Term> terms);  // normalizes

  static Polynomial constant(FieldPtr field, Elem c);
  static Polynomial monomial(FieldPtr field, const Monomial& m, Elem c);
  static Polynomial variable(FieldPtr field, int i);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  Elem coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Elem c) const;
  Polynomial times(const Monomial& m, Elem c) const;
  Polynomial pow(unsigned e) const;
  // f^(p^e) by raising coefficients and exponents; valid in characteristic p.
  Polynomial frobenius_power(unsigned e) const;
  Polynomial derivative(int var) const;
  Polynomial monic() const;
  // Re-expresses coefficients in a larger field.
  Polynomial mapped(const Embedding& emb) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Term> terms_;
};

// Parses `3*x^2*y + (t+1)*z^3 - y*z^2` style text. Integers are reduced mod
// p; `t` denotes the modulus root of an extension field. Throws
// Error(syntax) with the column of the offending character.
Polynomial parse_polynomial(const FieldPtr& field, std::string_view text);

std::string element_to_string(const Field& f, Elem c);

}  // namespace tc
