#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowforge/betti.hpp"
#include "chowforge/chow_ring.hpp"
#include "chowforge/series.hpp"

namespace chowforge {

/// Member of the filtration family: F0 is an up-set of variable flats, F1 is
/// (x_G : G ⊄ F) plus an initial segment of coat(F).
struct FiltrationIdeal {
  enum class Tag { f0, f1 };
  Tag tag = Tag::f0;
  std::vector<int> upset;    // F0
  int flat = -1;             // F1
  std::vector<int> segment;  // F1, ascending in the coatom order

  static FiltrationIdeal zero() { return {}; }
  static FiltrationIdeal positive(const ChowRing& r);
  static FiltrationIdeal f0(const ChowRing& r, std::vector<int> upset);
  static FiltrationIdeal f1(const ChowRing& r, int flat, std::vector<int> segment);

  /// Variable flats generating the ideal, sorted by variable index.
  std::vector<int> generators(const ChowRing& r) const;
  bool is_zero(const ChowRing& r) const { return generators(r).empty(); }
  std::string to_string(const ChowRing& r) const;
};

struct WitnessStep {
  FiltrationIdeal j;
  int x = -1;  // flat of the removed variable
  FiltrationIdeal c;
};

/// One step of the inductive argument. Throws ZeroIdeal on (0) and
/// ClosedFormInapplicable when the predicted colon is not in the family.
WitnessStep filtration_witness_step(const ChowRing& r, const FiltrationIdeal& i);

struct FiltrationReport {
  bool pass = true;
  bool complete = true;  // false when the budget stopped the walk
  long visited = 0;
  long steps_checked = 0;
  long sampled = 0;
  std::vector<std::string> violations;
  std::string to_text() const;
};

struct WalkOptions {
  long max_nodes = 200000;
  long samples = 0;  // extra random F0/F1 members checked against oracle colons
  std::uint64_t seed = 1;
};

/// Walks the witness graph from (0) and A_+ and checks every step against the oracle.
/// A walk cut off by max_nodes comes back with complete = false and pass = false.
FiltrationReport verify_filtration(const ChowRing& r, const WalkOptions& opt = {});

struct KoszulCertificate {
  int i_max = 0;
  std::vector<int> hilbert;
  BettiTable betti;
  bool linear = true;
  std::optional<std::pair<int, int>> witness;  // first nonlinear (i, j)
  RationalSeries poincare;                      // 1/HS(-t) to t^i_max
  bool froberg = true;
  bool pass() const { return linear && froberg; }
  std::string to_text() const;
};

/// Smallest j_max that sees every nonzero beta_{i,j}, i <= i_max, once the rows below
/// i_max are linear: the syzygies of F_{i-1} sit in degrees <= (i-1) + top degree.
inline int complete_j_max(int i_max, int top_degree) { return std::max(i_max + 1, i_max + top_degree - 1); }

/// Betti table of k up to i_max (internal degrees up to j_max, default complete_j_max),
/// linearity, and the identity sum beta_i t^i * HS(-t) = 1 mod t^(i_max+1).
template <class K>
KoszulCertificate koszul_certificate(const GradedQuotient<K>& q, int i_max, const BettiLimits& lim = {}, int j_max = -1) {
  if (!q.is_artinian()) throw Error(ErrorKind::CutoffExceeded, "ring is not Artinian within its degree cutoff");
  KoszulCertificate c;
  c.i_max = i_max;
  c.hilbert = q.hilbert_function();
  while (c.hilbert.size() > 1 && c.hilbert.back() == 0) c.hilbert.pop_back();
  c.betti = betti_of_residue_field(q, i_max, j_max < 0 ? complete_j_max(i_max, q.top_degree()) : j_max, lim);
  c.witness = c.betti.first_nonlinear();
  c.linear = !c.witness.has_value();
  c.poincare = poincare_from_hilbert(RationalSeries::polynomial(c.hilbert), i_max);
  for (int i = 0; i <= i_max; ++i)
    if (Rational(c.betti.total(i)) != c.poincare.coeff(i)) c.froberg = false;
  return c;
}

}  // namespace chowforge
