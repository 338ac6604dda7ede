#include "doctest.h"
#include "tc/curve.hpp"
#include "tc/error.hpp"

using namespace tc;

namespace {

ErrorCode code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invariant;
}

}  // namespace

TEST_SUITE("curve") {

TEST_CASE("smoothness") {
  auto P = [](unsigned p, const char* s) { return parse_polynomial(make_field(p, 1), s); };
  CHECK_FALSE(is_smooth_cubic(P(3, "x^3+y^3+z^3")));
  CHECK(is_smooth_cubic(P(2, "x^3+y^3+z^3")));
  CHECK(is_smooth_cubic(P(5, "x^3+y^3+z^3")));
  CHECK_FALSE(is_smooth_cubic(P(5, "y^2*z - x^3 - x^2*z")));
  CHECK(is_smooth_cubic(P(5, "y^2*z - x^3 - x*z^2")));
  CHECK(code_of([&] { make_curve(P(5, "x^2*y + z^2")); }) == ErrorCode::not_cubic);
  CHECK(code_of([&] { make_curve(P(3, "x^3+y^3+z^3")); }) == ErrorCode::singular_cubic);
}

TEST_CASE("hasse invariant") {
  auto fermat = [](unsigned p) { return make_curve(parse_polynomial(make_field(p, 1), "x^3+y^3+z^3")); };
  CHECK(fermat(2).hasse == 0);
  CHECK(fermat(2).supersingular);
  CHECK(fermat(5).hasse == 0);
  CHECK(fermat(7).hasse == 6);
  CHECK_FALSE(fermat(7).supersingular);
  // independent oracle: coefficient of (xyz)^(p-1) in F^(p-1) by full expansion
  for (unsigned p : {7u, 11u, 13u}) {
    auto f = make_field(p, 1);
    auto F = parse_polynomial(f, "x^3+y^3+z^3+x*y*z");
    Elem c = F.pow(p - 1).coefficient(Monomial{{int(p) - 1, int(p) - 1, int(p) - 1}});
    CHECK(hasse_invariant(F).value == c);
  }
}

TEST_CASE("primary ideals") {
  auto f = make_field(5, 1);
  auto P = [&](const char* s) { return parse_polynomial(f, s); };
  auto fermat = make_curve(P("x^3+y^3+z^3"));
  CHECK(is_irrelevant_primary(fermat, {P("x^2"), P("y^2"), P("z^2")}));
  CHECK(is_irrelevant_primary(fermat, {P("x"), P("y")}));
  auto other = make_curve(P("y^2*z - x^3 - x*z^2"));
  CHECK_FALSE(is_irrelevant_primary(other, {P("x"), P("y")}));
  CHECK(code_of([&] { make_ideal(other, {P("x"), P("y")}); }) == ErrorCode::not_primary);
  CHECK(code_of([&] { make_ideal(fermat, {P("x")}); }) == ErrorCode::bad_ideal);
  CHECK(code_of([&] { make_ideal(fermat, {P("x"), P("y^2+x")}); }) == ErrorCode::bad_ideal);
  auto I = make_ideal(fermat, {P("x^2"), P("y^2"), P("z^2")});
  CHECK(I.degree_sum() == 6);
  CHECK(ideal_membership(P("x*x^2"), I));
  CHECK_FALSE(ideal_membership(P("x*y*z"), I));
}

}
