#include <random>

#include "doctest.h"
#include "tc/upoly.hpp"

using namespace tc;
namespace up = tc::upoly;

TEST_SUITE("upoly") {

TEST_CASE("division and gcd") {
  auto f = make_field(7, 1);
  up::UPoly a{6, 0, 1};  // t^2 - 1
  up::UPoly b{1, 1};     // t + 1
  up::UPoly q, r;
  up::divmod(*f, a, b, q, r);
  CHECK(q == up::UPoly{6, 1});
  CHECK(up::deg(r) == -1);
  CHECK(up::gcd(*f, a, up::UPoly{6, 1}) == up::UPoly{6, 1});
  auto inv = up::inverse_mod(*f, up::UPoly{2}, a);
  CHECK(inv == up::UPoly{4});
}

TEST_CASE("irreducibility by exhaustion over F_3") {
  auto f = make_field(3, 1);
  // degree 2 and 3 monic polynomials: irreducible iff no root
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2) {
        up::UPoly p{Elem(c0), Elem(c1), Elem(c2), 1};
        bool root = false;
        for (Elem x = 0; x < 3; ++x) root |= up::eval(*f, p, x) == 0;
        CHECK(up::is_irreducible(*f, p) == !root);
      }
}

TEST_CASE("roots and primary decomposition") {
  auto f = make_field(5, 1);
  // (t - 1)^2 (t - 3) (t^2 + 2)
  up::UPoly p = up::mul(*f, up::mul(*f, up::UPoly{4, 1}, up::UPoly{4, 1}), up::UPoly{2, 1});
  p = up::mul(*f, p, up::UPoly{2, 0, 1});
  CHECK(up::roots(*f, p) == std::vector<Elem>{1, 3});
  auto parts = up::primary_decomposition(*f, p);
  REQUIRE(parts.size() == 3);
  up::UPoly prod{1};
  int mult = 0;
  for (const auto& part : parts) {
    prod = up::mul(*f, prod, part.power);
    CHECK(up::is_irreducible(*f, part.irreducible));
    mult += part.multiplicity * up::deg(part.irreducible);
  }
  CHECK(prod == p);
  CHECK(mult == 5);
}

TEST_CASE("roots over an extension field") {
  auto f = make_field(2, 4);
  // t^2 + t + 1 splits over F_16
  auto r = up::roots(*f, up::UPoly{1, 1, 1});
  REQUIRE(r.size() == 2);
  for (Elem x : r) CHECK(f->add(f->add(f->mul(x, x), x), 1) == 0);
  CHECK(r[0] < r[1]);
}

TEST_CASE("random products factor back") {
  for (auto [p, k] : {std::pair{2u, 1}, {3u, 1}, {2u, 2}, {5u, 1}}) {
    auto f = make_field(p, k);
    std::mt19937_64 rng(p + 10 * k);
    std::uniform_int_distribution<std::uint64_t> d(0, f->order() - 1);
    for (int it = 0; it < 30; ++it) {
      up::UPoly a{1};
      for (int j = 0; j < 3; ++j) {
        up::UPoly g(3);
        for (auto& c : g) c = static_cast<Elem>(d(rng));
        g.push_back(1);
        a = up::mul(*f, a, g);
      }
      auto parts = up::primary_decomposition(*f, a);
      up::UPoly prod{1};
      for (const auto& part : parts) prod = up::mul(*f, prod, part.power);
      CHECK(prod == a);
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          CHECK(up::deg(up::gcd(*f, parts[i].power, parts[j].power)) == 0);
    }
  }
}

}
