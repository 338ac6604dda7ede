#pragma once
// Syzygy bundles on the cubic: endomorphism algebras, decomposition into
// indecomposable summands, forcing data and vanishing of class components.

#include <optional>
#include <vector>

#include "tc/curve.hpp"
#include "tc/graded.hpp"

namespace tc {

RingPtr coordinate_ring(const CubicCurve& curve);

struct SyzygyBundle {
  IdealData ideal;
  int m;
  RingPtr ring;
  PresentedModule module;  // Syz(m) inside (+) R(m - d_i)
  int rank;
  int degree;
  int t0;  // regularity index of the module

  static int formula_degree(const IdealData& ideal, int m) {
    return -3 * (ideal.degree_sum() - (ideal.n() - 1) * m);
  }
};

// Throws Error(invariant) if the computed rank or degree disagrees with
// rank n - 1 and degree -3 (sum d_i - (n - 1) m).
SyzygyBundle syzygy_bundle(const IdealData& ideal, int m, RingPtr ring = nullptr);

// Degree-0 endomorphisms as matrices on the generating piece Syz(m)_{t0}.
struct EndAlgebra {
  FieldPtr field;
  int t0;
  std::size_t generator_dim;
  std::vector<Matrix> basis;  // canonical echelon basis; contains the identity in its span
  // structure[i * N + j] holds the coordinates of basis[i] * basis[j].
  std::vector<Vec> structure;
  std::vector<Matrix> radical;  // filled by decompose_bundle

  std::size_t dim() const { return basis.size(); }
  Vec coordinates(const Matrix& a) const;
};

EndAlgebra end_algebra(const SyzygyBundle& bundle);

// Raised when a simple factor of the algebra only splits over a larger field.
struct NeedsExtension {
  int degree;
};

// Complete system of orthogonal primitive idempotents of the algebra over its
// current field. Throws NeedsExtension when that is impossible without
// enlarging the field.
std::vector<Matrix> primitive_idempotents(const EndAlgebra& algebra);

// Radical of the algebra, given a complete primitive idempotent system.
std::vector<Matrix> radical_basis(const EndAlgebra& algebra, const std::vector<Matrix>& idempotents);

// True iff the unital corner algebra e A e is local with residue field the base field.
bool corner_is_split_local(const EndAlgebra& algebra, const Matrix& e);

struct Summand {
  Matrix projection;  // idempotent on Syz(m)_{t0}
  PresentedModule module;
  int rank;
  int degree;
};

struct Decomposition {
  SyzygyBundle bundle;  // over the splitting field
  EndAlgebra algebra;
  std::vector<Summand> summands;
  int extension_degree;  // relative to the ideal's field
};

struct DecomposeOptions {
  int max_extension = 4;
  int force_extension = 1;  // start over F_{q^force_extension}
};

// Throws Error(undecided) when no split field of degree <= max_extension works.
Decomposition decompose_bundle(const SyzygyBundle& bundle, const DecomposeOptions& opts = {});

struct ForcingData {
  Polynomial f0;
  int m;
  PresentedModule syz_prime;  // syzygies of (f0, f_1, ..., f_n) in R(0) + (+) R(m - d_i)
  int rank;

  // The inclusion Syz(m) -> Syz'(m): prepend a zero f0-coefficient.
  Vec include(const SyzygyBundle& bundle, int t, std::span<const Elem> v) const;
};

ForcingData forcing_data(const SyzygyBundle& bundle, const Polynomial& f0);

// c_j = 0 iff the projection onto the summand extends from Syz(m) to Syz'(m).
bool component_class_vanishes(const ForcingData& forcing, const SyzygyBundle& bundle, const Summand& summand);

struct CohomologyDims {
  long h0;
  long h1;
};
CohomologyDims cohomology_dims(const PresentedModule& M, int j, const RankDegree& rd);
CohomologyDims cohomology_dims(const PresentedModule& M, int j);

}  // namespace tc
