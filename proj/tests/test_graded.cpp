#include "doctest.h"
#include "tc/bundle.hpp"

using namespace tc;

namespace {

struct Fermat {
  FieldPtr f;
  CubicCurve curve;
  RingPtr R;
  explicit Fermat(unsigned p)
      : f(make_field(p, 1)), curve(make_curve(parse_polynomial(f, "x^3+y^3+z^3"))), R(coordinate_ring(curve)) {}
  Polynomial P(const char* s) const { return parse_polynomial(f, s); }
  GradedMap row_map(int target, std::vector<const char*> gens) const {
    GradedMap phi;
    phi.target.twists = {target};
    std::vector<Polynomial> row;
    for (auto g : gens) {
      row.push_back(P(g));
      phi.source.twists.push_back(target - row.back().degree());
    }
    phi.entries.assign(1, row);
    return phi;
  }
};

}  // namespace

TEST_SUITE("graded") {

TEST_CASE("hilbert values of the ring and its twists") {
  Fermat X(5);
  auto R = free_module(X.R, {{0}});
  CHECK(hilbert_value(R, 0) == 1);
  CHECK(hilbert_value(R, 2) == 6);
  CHECK(hilbert_value(R, 4) == 12);
  for (int t = 1; t < 12; ++t) CHECK(hilbert_value(R, t) == std::size_t(3 * t));
  CHECK(hilbert_value(free_module(X.R, {{-1}}), 1) == 1);
  CHECK(graded_piece_basis(R, 0).size() == 1);
  CHECK(rank_and_degree(R) == RankDegree{1, 0});
  CHECK(rank_and_degree(free_module(X.R, {{-1}})) == RankDegree{1, -3});
  CHECK(rank_and_degree(free_module(X.R, {{1, 2}})) == RankDegree{2, 9});
}

TEST_CASE("syzygy modules") {
  Fermat X(5);
  // (x, y): R(-1)^2 -> R
  auto koszul = syzygy_of_map(X.R, X.row_map(0, {"x", "y"}));
  CHECK(hilbert_value(koszul, 3) == 3);
  CHECK(hilbert_value(koszul, 1) == 0);
  auto b2 = graded_piece_basis(koszul, 2);
  REQUIRE(b2.size() == 1);
  // proportional to (y, -x)
  auto g = b2[0];
  CHECK((g[0] * X.P("x") + g[1] * X.P("y")).is_zero());
  CHECK(g[0].scaled(X.f->inv(g[0].leading().coeff)) == X.P("y"));
  CHECK(rank_and_degree(koszul) == RankDegree{1, -6});

  auto syz = syzygy_of_map(X.R, X.row_map(3, {"x^2", "y^2", "z^2"}));
  auto s0 = graded_piece_basis(syz, 0);
  REQUIRE(s0.size() == 1);
  Polynomial lead = s0[0][0];
  Elem c = X.f->inv(lead.leading().coeff);
  CHECK(s0[0][0].scaled(c) == X.P("x"));
  CHECK(s0[0][1].scaled(c) == X.P("y"));
  CHECK(s0[0][2].scaled(c) == X.P("z"));
  CHECK(rank_and_degree(syz) == RankDegree{2, 0});

  GradedMap zero = X.row_map(2, {"x", "y"});
  zero.entries[0] = {Polynomial(X.f), Polynomial(X.f)};
  auto all = syzygy_of_map(X.R, zero);
  for (int t = 0; t < 5; ++t) CHECK(hilbert_value(all, t) == zero.source.dim(*X.R, t));
}

TEST_CASE("hom pieces") {
  Fermat X(5);
  auto R = free_module(X.R, {{0}});
  auto Rm1 = free_module(X.R, {{-1}});
  CHECK(hom_piece(Rm1, R).basis.size() == 3);
  CHECK(hom_piece(R, Rm1).basis.size() == 0);
  CHECK(hom_piece(R, R).basis.size() == 1);
  auto syz = syzygy_of_map(X.R, X.row_map(3, {"x^2", "y^2", "z^2"}));
  CHECK(hom_piece(syz, syz).basis.size() == 2);
}

TEST_CASE("images of idempotents") {
  Fermat X(5);
  auto syz = syzygy_of_map(X.R, X.row_map(3, {"x^2", "y^2", "z^2"}));
  int t0 = regularity_index(syz);
  std::size_t d = syz.dim(t0);
  auto id = image_presentation(syz, {t0, Matrix::identity(d)});
  auto zero = image_presentation(syz, {t0, Matrix(d, d)});
  for (int t = 0; t < t0 + 3; ++t) {
    CHECK(id.piece(t).rows == syz.piece(t).rows);
    CHECK(zero.dim(t) == 0);
  }
  // map_at agrees with the identity below and above the generating degree
  for (int t : {t0 - 1, t0 + 2}) CHECK(map_at(syz, syz, {t0, Matrix::identity(d)}, t) == Matrix::identity(syz.dim(t)));
}

TEST_CASE("cohomology of line bundles") {
  Fermat X(5);
  auto O = free_module(X.R, {{0}});
  auto CO = cohomology_dims(O, 0);
  CHECK(CO.h0 == 1);
  CHECK(CO.h1 == 1);
  auto O1 = cohomology_dims(free_module(X.R, {{1}}), 0);
  CHECK(O1.h0 == 3);
  CHECK(O1.h1 == 0);
}

}
