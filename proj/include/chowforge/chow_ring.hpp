#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "chowforge/coatom_order.hpp"
#include "chowforge/graded_quotient.hpp"
#include "chowforge/lattice.hpp"
#include "chowforge/matroid.hpp"
#include "chowforge/polynomial.hpp"
#include "chowforge/series.hpp"

namespace chowforge {

enum class ChowKind { standard, augmented };

/// x_{F_1}^{a_1} ... x_{F_r}^{a_r} with F_1 ⊋ ... ⊋ F_r (lattice ids).
struct NestedMonomial {
  std::vector<int> chain;
  std::vector<int> exponents;

  int degree() const;
  friend bool operator==(const NestedMonomial&, const NestedMonomial&) = default;
  /// graded, then chain ids, then exponents
  friend bool operator<(const NestedMonomial& a, const NestedMonomial& b);
};

struct ChowElement {
  std::map<NestedMonomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  /// -1 for zero
  int degree() const { return terms.empty() ? -1 : terms.begin()->first.degree(); }
  void add(const NestedMonomial& m, const Rational& c);
  friend bool operator==(const ChowElement&, const ChowElement&) = default;
};

/// Chow ring (or augmented Chow ring) of a simple matroid in the atom-free
/// presentation. Variables are flats of rank >= 2 (augmented: >= 1), listed
/// largest first for the lex order: rank ascending, then coatom order descending.
class ChowRing {
 public:
  explicit ChowRing(const Matroid& m, ChowKind kind = ChowKind::standard);

  ChowKind kind() const { return kind_; }
  bool augmented() const { return kind_ == ChowKind::augmented; }
  const Matroid& matroid() const { return *matroid_; }
  const Lattice& lattice() const { return *lattice_; }
  const CoatomOrder& order() const { return order_; }
  int rank() const { return lattice_->height(); }
  int socle_degree() const { return augmented() ? rank() : rank() - 1; }
  /// Smallest flat rank at which the "rank >= k" colon forms apply (3, or 2 augmented).
  int colon_threshold() const { return augmented() ? 2 : 3; }
  int nvars() const { return static_cast<int>(var_flat_.size()); }
  int variable_of(int flat) const { return flat_var_[static_cast<std::size_t>(flat)]; }
  int flat_of(int var) const { return var_flat_[static_cast<std::size_t>(var)]; }
  bool is_variable(int flat) const { return variable_of(flat) >= 0; }
  int flat_rank(int flat) const { return lattice_->rank(flat); }
  std::string flat_name(int flat) const { return element_label(*lattice_, flat); }
  std::vector<std::string> variable_names() const;
  /// Flats of the variables, largest variable first.
  const std::vector<int>& variable_flats() const { return var_flat_; }
  /// Hyperplanes that are variables.
  std::vector<int> hyperplanes() const;

  PresentedAlgebra presentation() const;
  /// Feichtner-Yuzvinsky presentation (augmented: with the y_i and every flat).
  PresentedAlgebra presentation_fy() const;
  /// Three families; each polynomial's leading term is its largest monomial.
  std::vector<Polynomial> groebner_basis() const;
  /// Variable names, largest first.
  std::vector<std::string> monomial_order() const { return variable_names(); }

  bool is_nested(const NestedMonomial& m) const;
  std::vector<NestedMonomial> nested_basis(int d) const;
  std::vector<int> hilbert_function() const;
  RationalSeries hilbert_series() const;

  Monomial monomial_of(const NestedMonomial& m) const;
  Polynomial to_polynomial(const ChowElement& e) const;
  ChowElement normal_form(const Monomial& m) const;
  ChowElement normal_form(const Polynomial& p) const;
  ChowElement multiply(const ChowElement& a, const ChowElement& b) const;
  ChowElement variable(int flat) const;
  ChowElement one() const;
  ChowElement scaled(const ChowElement& a, const Rational& c) const;
  ChowElement sum(const ChowElement& a, const ChowElement& b) const;

  std::string to_string(const NestedMonomial& m) const;
  std::string to_string(const ChowElement& e) const;

  /// Degree-by-degree model of the same presentation, cut off one past the socle degree.
  const GradedQuotient<Rational>& oracle() const;
  template <class K>
  GradedQuotient<K> build_oracle() const {
    return GradedQuotient<K>(presentation());
  }
  Elem<Rational> to_oracle(const ChowElement& e) const;
  ChowElement from_oracle(const Elem<Rational>& e) const;
  Elem<Rational> oracle_variable(int flat) const;

 private:
  void reduce_into(std::map<Monomial, Rational, std::greater<>>& work, ChowElement& out) const;
  void expand_tail(const Monomial& rest, int f, int power, const Rational& coef,
                   std::map<Monomial, Rational, std::greater<>>& work) const;

  ChowKind kind_;
  std::shared_ptr<const Matroid> matroid_;
  std::shared_ptr<const Lattice> lattice_;
  CoatomOrder order_;
  std::vector<int> var_flat_;
  std::vector<int> flat_var_;
  std::vector<std::vector<int>> above_;  // variable flats strictly above each flat

  struct Cache {
    std::once_flag once;
    std::unique_ptr<GradedQuotient<Rational>> oracle;
    std::mutex mu;
    std::unordered_map<Monomial, ChowElement, MonomialHash> nf;
  };
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------- ideals

/// Ideal given by a closed form: variables x_F for listed flats, or A_+, or A.
struct IdealDescriptor {
  enum class Shape { generated, positive, unit };
  Shape shape = Shape::generated;
  std::string rule;
  std::vector<int> flats;

  std::string to_string(const ChowRing& r) const;
};

SubspaceIdeal<Rational> realize(const ChowRing& r, const IdealDescriptor& d);
/// (x_F : F in flats) in the oracle.
SubspaceIdeal<Rational> variable_ideal(const ChowRing& r, const std::vector<int>& flats);

/// (0 : x_E) = (x_H : H ∈ coat E), or A_+ below the rank threshold.
IdealDescriptor truncation_annihilator(const ChowRing& r);
/// Kernel of A -> Chow(M|F): (x_G : G ⊄ F).
IdealDescriptor restriction_kernel(const ChowRing& r, int f);
/// (x_G : G ∈ up) : x_F for an up-set containing everything above F and nothing below.
IdealDescriptor upset_colon(const ChowRing& r, const std::vector<int>& up, int f);
/// (0 : x_H') = (x_F : F ⊄ H').
IdealDescriptor hyperplane_annihilator(const ChowRing& r, int hp);
/// (0 : (x_H : H ∈ hs)) = (x_F : F ⊄ H for all H ∈ hs).
IdealDescriptor hyperplane_set_annihilator(const ChowRing& r, const std::vector<int>& hs);
/// (x_H : H ∈ hs) : x_H'. Throws CoveringConditionViolated when no closed form applies.
IdealDescriptor hyperplane_set_colon(const ChowRing& r, const std::vector<int>& hs, int hp);
/// {H ∧ H' : H ∈ hs} ∩ coat(H'), in coatom order.
std::vector<int> restricted_coatoms(const ChowRing& r, const std::vector<int>& hs, int hp);
/// Covering condition: every H ∈ hs has H ∧ H' below some element of restricted_coatoms.
bool covering_condition(const ChowRing& r, const std::vector<int>& hs, int hp);

/// Nested monomials of degree d spanning (x_H : H ∈ hs).
std::vector<NestedMonomial> hyperplane_ideal_basis(const ChowRing& r, const std::vector<int>& hs, int d);

// ---------------------------------------------------------------- reports

struct CheckLine {
  std::string what;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  bool pass() const;
  void add(std::string what, bool ok, std::string detail = {});
  std::string to_text() const;
};

/// Kernel of A -> rf, where rf is the ring (same kind) of the restriction to f, computed by the oracle.
SubspaceIdeal<Rational> restriction_kernel_oracle(const ChowRing& r, const ChowRing& rf, int f);

/// HF(A/(0:x_E)) against the truncation and HF(A/(0:x_H)) against each restriction,
/// plus the kernels of the natural surjections.
CheckReport quotient_isomorphism_checks(const ChowRing& r);

struct GorensteinReport {
  bool symmetric = true;
  std::vector<int> socle_dims;
  bool socle_spanned_by_top_power = true;
  bool pairings_full_rank = true;
  bool pass() const {
    int total = 0;
    for (int d : socle_dims) total += d;
    return symmetric && total == 1 && socle_spanned_by_top_power && pairings_full_rank;
  }
};
GorensteinReport gorenstein_report(const ChowRing& r);

/// Set of ground elements of `s` re-indexed as positions inside `within`.
ElementSet compress(ElementSet s, ElementSet within);

}  // namespace chowforge
