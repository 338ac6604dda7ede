#include "doctest.h"
#include "tc/groebner.hpp"

using namespace tc;

TEST_SUITE("groebner") {

TEST_CASE("normal forms") {
  auto f = make_field(5, 1);
  auto P = [&](const char* s) { return parse_polynomial(f, s); };
  CHECK(normal_form(P("x^3"), {P("x^3+y^3+z^3")}) == P("-y^3-z^3"));
  CHECK(normal_form(Polynomial(f), {P("x")}).is_zero());
  auto g = buchberger({P("x^2"), P("y^2")});
  CHECK(normal_form(P("x^2*y^2 + x^4"), g).is_zero());
}

TEST_CASE("reduced bases") {
  auto f = make_field(7, 1);
  auto P = [&](const char* s) { return parse_polynomial(f, s); };
  CHECK(buchberger({P("x")}) == GroebnerBasis{P("x")});
  CHECK(buchberger({P("1")}) == GroebnerBasis{P("1")});
  auto g = buchberger({P("x^2+y^2"), P("x*y")});
  REQUIRE(g.size() == 3);
  // sorted by leading monomial: xy < x^2 is false in degrevlex, y^3 is largest
  std::vector<Polynomial> expect{P("x*y"), P("x^2+y^2"), P("y^3")};
  for (const auto& e : expect) CHECK(std::find(g.begin(), g.end(), e) != g.end());
  CHECK(buchberger(g) == g);
}

TEST_CASE("membership against a hand multiple") {
  auto f = make_field(5, 1);
  auto P = [&](const char* s) { return parse_polynomial(f, s); };
  auto g = buchberger({P("x^2"), P("y^2"), P("z^2"), P("x^3+y^3+z^3")});
  CHECK(is_groebner_member(P("x*x^2"), g));
  CHECK_FALSE(is_groebner_member(P("x*y*z"), g));
  auto h = buchberger({P("x"), P("y"), P("x^3+y^3+z^3")});
  CHECK_FALSE(is_groebner_member(P("z^2"), h));
  CHECK(is_groebner_member(P("z^3"), h));
}

}
