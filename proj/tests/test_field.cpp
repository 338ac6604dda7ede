#include <optional>
#include <random>

#include "doctest.h"
#include "tc/error.hpp"
#include "tc/field.hpp"
#include "tc/upoly.hpp"

using namespace tc;

namespace {

// Schoolbook product of coefficient vectors reduced by a monic modulus.
std::vector<std::uint32_t> naive_mul(std::uint32_t p, const std::vector<std::uint32_t>& mod,
                                     std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
  const std::size_t k = mod.size() - 1;
  std::vector<std::uint64_t> c(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i + j] = (c[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    std::uint64_t lead = c[d];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) c[d - k + i] = (c[d - k + i] + (p - lead) * mod[i]) % p;
  }
  return {c.begin(), c.begin() + k};
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime field arithmetic") {
  auto f = make_field(7, 1);
  CHECK(f->order() == 7);
  CHECK(f->mul(3, 5) == 1);
  CHECK(f->inv(3) == 5);
  CHECK(f->neg(0) == 0);
  CHECK(f->from_int(-1) == 6);
  CHECK(f->pow(3, 6) == 1);
  CHECK(f->generator() == 0);
}

TEST_CASE("smallest irreducible moduli") {
  CHECK(find_irreducible(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(find_irreducible(2, 3) == std::vector<std::uint32_t>{1, 1, 0, 1});  // t^3 + t + 1
  CHECK(find_irreducible(3, 2) == std::vector<std::uint32_t>{1, 0, 1});     // t^2 + 1
  CHECK(find_irreducible(5, 2) == std::vector<std::uint32_t>{2, 0, 1});     // t^2 + 2
  CHECK(find_irreducible(7, 2) == std::vector<std::uint32_t>{1, 0, 1});     // -1 is a non-square mod 7
  CHECK(make_field(2, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("invalid characteristic and extension") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::invariant;
  };
  CHECK(code([] { make_field(4, 1); }) == ErrorCode::bad_char);
  CHECK(code([] { make_field(1, 1); }) == ErrorCode::bad_char);
  CHECK(code([] { make_field(5, 0); }) == ErrorCode::bad_extension);
  CHECK(code([] { make_field(2, 40); }) == ErrorCode::bad_extension);
  CHECK(std::string(error_tag(ErrorCode::bad_char)) == "E_CHAR");
}

TEST_CASE("extension multiplication agrees with schoolbook reduction") {
  for (auto [p, k] : {std::pair{2u, 4}, {3u, 3}, {5u, 2}, {7u, 2}, {2u, 8}}) {
    auto f = make_field(p, k);
    std::mt19937_64 rng(p * 100 + k);
    std::uniform_int_distribution<std::uint64_t> d(0, f->order() - 1);
    for (int i = 0; i < 300; ++i) {
      Elem a = static_cast<Elem>(d(rng)), b = static_cast<Elem>(d(rng));
      auto expect = naive_mul(p, f->modulus(), f->coeffs(a), f->coeffs(b));
      CHECK(f->coeffs(f->mul(a, b)) == expect);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->mul(a, f->add(b, 1)) == f->add(f->mul(a, b), a));
    }
  }
}

TEST_CASE("frobenius fixes exactly the prime field") {
  auto f = make_field(3, 3);
  int fixed = 0;
  for (Elem a = 0; a < f->order(); ++a)
    if (f->frobenius(a) == a) ++fixed;
  CHECK(fixed == 3);
  for (Elem a = 0; a < f->order(); ++a) CHECK(f->pow(a, f->order()) == a);
}

TEST_CASE("embedding sends t to the smallest root") {
  for (auto [p, k, m] : {std::tuple{2u, 2, 2}, {2u, 2, 3}, {3u, 2, 2}, {5u, 1, 3}, {2u, 3, 2}}) {
    auto src = make_field(p, k);
    auto dst = make_field(p, k * m);
    Embedding emb(src, dst);
    // brute-force root enumeration of the source modulus in the target
    std::optional<Elem> smallest;
    for (Elem x = 0; x < dst->order() && !smallest; ++x) {
      Elem acc = 0;
      const auto& mod = src->modulus();
      for (std::size_t i = mod.size(); i-- > 0;) acc = dst->add(dst->mul(acc, x), dst->from_int(mod[i]));
      if (acc == 0) smallest = x;
    }
    if (k > 1) {
      REQUIRE(smallest);
      CHECK(emb.image_of_generator() == *smallest);
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> d(0, src->order() - 1);
    for (int i = 0; i < 100; ++i) {
      Elem a = static_cast<Elem>(d(rng)), b = static_cast<Elem>(d(rng));
      CHECK(emb(src->mul(a, b)) == dst->mul(emb(a), emb(b)));
      CHECK(emb(src->add(a, b)) == dst->add(emb(a), emb(b)));
    }
  }
  CHECK_THROWS_AS(Embedding(make_field(2, 2), make_field(2, 3)), Error);
  CHECK_THROWS_AS(Embedding(make_field(2, 2), make_field(3, 2)), Error);
}

}
