#pragma once
// Tight closure of homogeneous primary ideals in the homogeneous coordinate
// ring of a smooth plane cubic, decided through the syzygy bundle.

#include <optional>
#include <string>
#include <vector>

#include "tc/bundle.hpp"

namespace tc {

struct Rational {
  long num = 0;
  long den = 1;
  static Rational make(long n, long d);
  bool operator==(const Rational&) const = default;
  std::string to_string() const;
};
bool operator<(const Rational& a, const Rational& b);

struct SummandReport {
  int rank;
  int degree;
  bool negative;               // degree < 0
  std::optional<bool> vanishes;  // class component c_j = 0
};

struct ClosureCertificate {
  bool member = false;
  int m = 0;
  bool in_ideal = false;  // decided by ideal membership alone
  int extension_degree = 1;
  std::vector<SummandReport> summands;
};

struct ClosureOptions {
  int max_extension = 4;
  int threads = 1;
};

ClosureCertificate tight_closure_member(const IdealData& ideal, const Polynomial& f0, const ClosureOptions& opts = {});

// Degree-m piece of the tight closure in R_m coordinates, computed for every
// negative summand of Syz(m) as the image of H^0 of the quotient by the other
// summands. Works over the decomposition's field.
la::Echelon closure_piece(const Decomposition& dec);

struct FrobeniusResult {
  std::optional<int> found_at_e;  // smallest e with f^q in I^[q], q = p^e
  int e_max;
  int e_tested;    // largest e actually tested
  bool truncated;  // stopped before e_max because R_{qm} exceeded max_piece_dim
};
// Exponents whose graded piece R_{qm} has dimension above max_piece_dim are
// not attempted; the result is then flagged as truncated.
FrobeniusResult frobenius_member(const IdealData& ideal, const Polynomial& f0, int e_max,
                                 std::size_t max_piece_dim = 1500);

struct SlopeReport {
  std::vector<std::pair<int, int>> summands;  // (rank, degree) of Syz(0)
  Rational mu_min;
  Rational mu_max;
  Rational threshold_low;   // mu_min / 3
  Rational threshold_high;  // mu_max / 3
  Rational k;               // sum d_i / (n - 1)
  bool semistable;
  int extension_degree;
};
SlopeReport slope_and_threshold(const IdealData& ideal, const ClosureOptions& opts = {});

struct DegreePiece {
  int m;
  std::string source;  // "ideal", "criterion" or "all"
  std::size_t closure_dim;
  std::size_t ideal_dim;
  std::size_t ring_dim;
};

struct ClosureIdeal {
  SlopeReport slopes;
  std::vector<Polynomial> generators;  // minimal, sorted by degree then echelon order
  std::vector<DegreePiece> pieces;
};
ClosureIdeal tight_closure_ideal(const IdealData& ideal, const ClosureOptions& opts = {});

// Echelon basis of I_s inside R_s.
la::Echelon ideal_piece(const GradedRing& r, const IdealData& ideal, int s);
// Smallest s with I_s = R_s (then also for every larger s).
int saturation_degree(const GradedRing& r, const IdealData& ideal);

}  // namespace tc
