#include <random>

#include "doctest.h"
#include "tc/linalg.hpp"

using namespace tc;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.order() - 1);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(d(rng));
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("echelon, kernels and solving") {
  for (auto [p, k] : {std::pair{5u, 1}, {2u, 1}, {2u, 3}, {65521u, 1}}) {
    auto fp = make_field(p, k);
    const Field& f = *fp;
    std::mt19937_64 rng(p);
    for (int it = 0; it < 20; ++it) {
      // rank-deficient by construction: product of thin factors
      Matrix a = la::mul(f, random_matrix(f, 9, 4, rng), random_matrix(f, 4, 7, rng));
      auto e = la::echelon(f, a);
      CHECK(e.rank() <= 4);
      for (std::size_t i = 0; i < e.rank(); ++i) {
        CHECK(e.rows(i, e.pivots[i]) == 1);
        for (std::size_t j = 0; j < e.rank(); ++j)
          if (j != i) CHECK(e.rows(j, e.pivots[i]) == 0);
      }
      Matrix n = la::nullspace(f, a);
      CHECK(n.rows() + e.rank() == a.cols());
      CHECK(la::is_zero(la::mul(f, a, la::transpose(n))));
      Matrix ln = la::left_nullspace(f, a);
      CHECK(ln.rows() + e.rank() == a.rows());
      CHECK(la::is_zero(la::mul(f, ln, a)));
      // a consistent system: b = a x0
      Matrix x0 = random_matrix(f, 7, 1, rng);
      Matrix b = la::mul(f, a, x0);
      Vec bv(a.rows());
      for (std::size_t i = 0; i < a.rows(); ++i) bv[i] = b(i, 0);
      auto x = la::solve(f, a, bv);
      REQUIRE(x);
      Matrix xm(7, 1);
      for (std::size_t i = 0; i < 7; ++i) xm(i, 0) = (*x)[i];
      CHECK(la::mul(f, a, xm) == b);
      // coordinates in the echelon basis reproduce the vector
      Vec v = la::vec_mul(f, random_matrix(f, 1, 9, rng).row_vec(0), a);
      auto c = la::coordinates(f, e, v);
      REQUIRE(c);
      CHECK(la::vec_mul(f, *c, e.rows) == v);
    }
  }
}

TEST_CASE("inconsistent system") {
  auto f = make_field(3, 1);
  Matrix a = Matrix::from_rows(2, {{1, 0}, {1, 0}});
  Vec b{1, 2};
  CHECK_FALSE(la::solve(*f, a, b).has_value());
}

}
