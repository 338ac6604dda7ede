#pragma once
// Graded free modules and their submodules over S = K[x,y,z] or R = S/(F).
//
// Everything is computed one graded piece at a time by linear algebra over
// K. Elements of R_s are coordinate vectors over the normal monomials of
// degree s (monomials not divisible by the leading monomial of F), listed
// largest first. An element of L_t for L = (+) R(a_i) concatenates the
// coordinates of its components in R_{t + a_i}.
//
// Twist convention: the module of syzygies of total degree m of f_1..f_n
// lives in (+) R(m - d_i); its degree-j piece holds the syzygies
// (g_1..g_n) with deg g_i = m - d_i + j, i.e. the sections of the sheaf
// R(m) twisted by O(j).

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tc/linalg.hpp"
#include "tc/polynomial.hpp"

namespace tc {

class GradedRing {
 public:
  // `relation` empty (zero polynomial) gives the polynomial ring S.
  GradedRing(FieldPtr field, std::optional<Polynomial> relation);

  const FieldPtr& field() const { return field_; }
  bool is_quotient() const { return relation_.has_value(); }
  const std::optional<Polynomial>& relation() const { return relation_; }

  const std::vector<Monomial>& basis(int s) const;
  std::size_t dim(int s) const { return s < 0 ? 0 : basis(s).size(); }
  std::size_t index_of(const Monomial& m) const;  // m must be normal

  // Coordinates of the normal form of a homogeneous polynomial of degree s.
  Vec coords(const Polynomial& f, int s) const;
  Polynomial poly(std::span<const Elem> v, int s) const;

  // v in R_s times the variable `var`, landing in R_{s+1}.
  Vec mul_var(std::span<const Elem> v, int s, int var) const;
  Vec mul_monomial(std::span<const Elem> v, int s, const Monomial& m) const;
  Vec mul_poly(std::span<const Elem> v, int s, const Polynomial& g) const;

  // Rows g * w for every normal monomial w of degree `shift`, in basis order.
  Matrix multiples(std::span<const Elem> g, int s, int shift) const;

 private:
  struct SparseVec {
    std::vector<std::pair<std::uint32_t, Elem>> entries;
  };
  const SparseVec& monomial_nf(const Monomial& m) const;
  const std::vector<SparseVec>& var_map(int s, int var) const;

  FieldPtr field_;
  std::optional<Polynomial> relation_;  // monic
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, std::vector<Monomial>> basis_;
  mutable std::map<int, std::unordered_map<std::uint64_t, std::uint32_t>> index_;
  mutable std::unordered_map<std::uint64_t, SparseVec> nf_;
  mutable std::map<std::pair<int, int>, std::vector<SparseVec>> var_maps_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

struct TwistedFree {
  std::vector<int> twists;  // (+) R(a_i)

  int rank() const { return static_cast<int>(twists.size()); }
  std::size_t dim(const GradedRing& r, int t) const;
  std::size_t offset(const GradedRing& r, int t, int component) const;
  TwistedFree shifted(int d) const;
  bool operator==(const TwistedFree&) const = default;
};

// Converts between module elements and columns of polynomials.
Vec element_coords(const GradedRing& r, const TwistedFree& L, int t, const std::vector<Polynomial>& column);
std::vector<Polynomial> element_polys(const GradedRing& r, const TwistedFree& L, int t, std::span<const Elem> v);
Vec element_mul_var(const GradedRing& r, const TwistedFree& L, int t, std::span<const Elem> v, int var);
Vec element_mul_monomial(const GradedRing& r, const TwistedFree& L, int t, std::span<const Elem> v,
                         const Monomial& m);
// g * w for every normal monomial w of degree `shift`, in basis order.
std::vector<Vec> element_multiples(const GradedRing& r, const TwistedFree& L, std::span<const Elem> g, int s,
                                   int shift);

// Homogeneous map (+) R(a_j) -> (+) R(b_i); entry (i, j) has degree b_i - a_j.
struct GradedMap {
  TwistedFree source;
  TwistedFree target;
  std::vector<std::vector<Polynomial>> entries;  // [target i][source j]

  // Matrix of the degree-t piece in row convention: row k is the image of
  // the k-th basis element of source_t.
  Matrix piece(const GradedRing& r, int t) const;
  void validate() const;
};

// A graded submodule of a twisted free module, described by its graded
// pieces. Pieces are reduced row echelon bases in ambient coordinates.
class PresentedModule {
 public:
  using PieceFn = std::function<Matrix(int)>;

  PresentedModule(RingPtr ring, TwistedFree ambient, PieceFn piece, int probe_start, std::string kind);

  const RingPtr& ring() const { return ring_; }
  const TwistedFree& ambient() const { return ambient_; }
  const std::string& kind() const { return kind_; }
  int probe_start() const { return probe_start_; }

  // Echelon basis of M_t (cached per instance).
  const la::Echelon& piece(int t) const;
  std::size_t dim(int t) const { return piece(t).rank(); }
  // Coordinates of an ambient vector in the echelon basis of M_t.
  std::optional<Vec> coordinates(int t, std::span<const Elem> v) const;

  // The same module with every degree shifted: result_t = M_{t+d}.
  PresentedModule twisted(int d) const;

 private:
  RingPtr ring_;
  TwistedFree ambient_;
  PieceFn piece_fn_;
  int probe_start_;
  std::string kind_;
  struct Cache {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const la::Echelon>> pieces;
  };
  std::shared_ptr<Cache> cache_;
};

PresentedModule free_module(const RingPtr& ring, const TwistedFree& L);

// Kernel of a homogeneous map, as a submodule of its source.
PresentedModule syzygy_of_map(const RingPtr& ring, const GradedMap& phi);

// Submodule generated by homogeneous elements given as (degree, ambient vector).
PresentedModule generated_module(const RingPtr& ring, const TwistedFree& L,
                                 std::vector<std::pair<int, Vec>> gens, std::string kind);

std::vector<std::vector<Polynomial>> graded_piece_basis(const PresentedModule& M, int t);
std::size_t hilbert_value(const PresentedModule& M, int t);

// From dim M_t = 3 rank t + degree for large t, valid for saturated modules
// of locally free sheaves on the cubic. Throws Error(invariant) if the
// probed values are not linear.
struct RankDegree {
  int rank;
  int degree;
  bool operator==(const RankDegree&) const = default;
};
RankDegree rank_and_degree(const PresentedModule& M);

// Smallest t0 such that h^1 of the associated sheaf vanishes in every twist
// >= t0 - 1. For an MCM module this makes M_{>= t0} generated by M_{t0} with
// only linear relations over S.
int regularity_index(const PresentedModule& M, const RankDegree& rd);
int regularity_index(const PresentedModule& M);

// A degree-0 endomorphism (or homomorphism) known on a generating piece.
// Row convention: the image of basis vector a of M_{t0} is sum_b X(a,b) n_b.
struct ModuleMap {
  int t0;
  Matrix matrix;
};

// Matrix of a degree-0 homomorphism M -> N on the degree-t bases.
Matrix map_at(const PresentedModule& M, const PresentedModule& N, const ModuleMap& f, int t);

// Degree-d homomorphisms M -> N, d = 0 by default: a basis of
// Hom(M, N(d))_0 given on the generating piece M_{t0}.
struct HomPiece {
  int t0;
  std::vector<Matrix> basis;
};
HomPiece hom_piece(const PresentedModule& M, const PresentedModule& N, int d = 0);
HomPiece hom_piece_at(const PresentedModule& M, const PresentedModule& N, int t0);

// The submodule of M's ambient generated by the images of M's elements.
PresentedModule image_presentation(const PresentedModule& M, const ModuleMap& e);

}  // namespace tc
