#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "chowforge/linalg.hpp"
#include "chowforge/polynomial.hpp"

namespace chowforge {

/// Homogeneous element of a graded quotient: coordinates in the basis of one degree.
template <class K>
struct Elem {
  int degree = 0;
  SparseVec<K> v;
  bool is_zero() const { return v.empty(); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m) h = (h ^ e) * 1099511628211ULL;
    return h;
  }
};

/// Degree-by-degree model of k[x]/I up to a cutoff.
///
/// A_d is built as (A_{d-1} ⊗ V) modulo commutators and the relations, with
/// columns indexed by the monomials b·x_v (b a basis monomial of A_{d-1}).
/// Columns are ordered by decreasing lex monomial order and eliminated left
/// to right, so the surviving basis consists of the smallest monomials.
template <class K>
class GradedQuotient {
 public:
  using Vec = SparseVec<K>;

  explicit GradedQuotient(const PresentedAlgebra& a);

  int nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const std::vector<std::string>& variable_names() const { return names_; }
  /// dim A_d. Beyond the cutoff: 0 when Artinian, otherwise CutoffTooSmall.
  int dim(int d) const;
  std::vector<int> hilbert_function() const;
  bool is_artinian() const { return dims_.back() == 0; }
  /// Largest d with A_d != 0.
  int top_degree() const;
  const std::vector<Monomial>& basis(int d) const { return basis_[static_cast<std::size_t>(d)]; }

  Vec times_variable(int d, const Vec& u, int var) const;
  Vec times_monomial(int d, const Vec& u, const Monomial& m) const;
  Elem<K> multiply(const Elem<K>& a, const Elem<K>& b) const;
  Elem<K> one() const { return {0, Vec{{0, K(1)}}}; }
  Elem<K> variable(int var) const;
  Elem<K> normal_form(const Monomial& m) const;
  Elem<K> normal_form(const Polynomial& p) const;
  /// Index of a basis monomial in degree deg(m), or -1.
  int basis_index(const Monomial& m) const;
  /// Basis monomial j of degree d equals basis(d-1)[first] times variable second.
  std::pair<int, int> parent(int d, int j) const { return parent_[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)]; }

  std::string to_string(const Elem<K>& e) const;

 private:
  struct Relation {
    int degree = 0;
    std::vector<std::pair<Monomial, K>> terms;
  };
  void build_degree(int d);

  int nvars_ = 0;
  int max_degree_ = 0;
  std::vector<std::string> names_;
  std::vector<int> dims_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> basis_index_;
  // mult_[d][b*nvars+v] = x_v * basis_d[b] in A_{d+1}
  std::vector<std::vector<Vec>> mult_;
  // variable sequence of each basis monomial, for times_monomial
  std::vector<std::vector<std::pair<int, int>>> parent_;  // [d][b] = (parent index, var)
  std::vector<Relation> rels_;
  std::vector<std::vector<Monomial>> mono_by_var_;  // monomial relations involving each variable
};

/// Per-degree subspaces I_d ⊆ A_d closed under multiplication by variables.
template <class K>
class SubspaceIdeal {
 public:
  explicit SubspaceIdeal(const GradedQuotient<K>& q);
  const GradedQuotient<K>& ring() const { return *q_; }
  int dim(int d) const;
  std::vector<int> dims() const;
  /// dims of A/I
  std::vector<int> quotient_dims() const;
  bool contains(const Elem<K>& e) const;
  typename GradedQuotient<K>::Vec reduce(const Elem<K>& e) const;
  const RowEchelon<K>& slice(int d) const { return slices_[static_cast<std::size_t>(d)]; }
  RowEchelon<K>& slice(int d) { return slices_[static_cast<std::size_t>(d)]; }
  /// Generators used to build the ideal, when known.
  const std::vector<Elem<K>>& generators() const { return gens_; }
  std::vector<Elem<K>>& generators() { return gens_; }
  /// Basis vectors of all slices, as elements.
  std::vector<Elem<K>> spanning_elements() const;

 private:
  const GradedQuotient<K>* q_;
  std::vector<RowEchelon<K>> slices_;
  std::vector<Elem<K>> gens_;
};

template <class K>
SubspaceIdeal<K> zero_ideal(const GradedQuotient<K>& q);
template <class K>
SubspaceIdeal<K> maximal_ideal(const GradedQuotient<K>& q);
template <class K>
SubspaceIdeal<K> ideal_span(const GradedQuotient<K>& q, const std::vector<Elem<K>>& gens);
template <class K>
SubspaceIdeal<K> ideal_sum(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b);
/// {g : g f ∈ J}
template <class K>
SubspaceIdeal<K> colon(const SubspaceIdeal<K>& j, const Elem<K>& f);
/// {g : g I ⊆ J}, using I's generators (or a spanning set when none are recorded).
template <class K>
SubspaceIdeal<K> colon(const SubspaceIdeal<K>& j, const SubspaceIdeal<K>& i);
template <class K>
SubspaceIdeal<K> annihilator(const SubspaceIdeal<K>& i);
template <class K>
SubspaceIdeal<K> socle(const GradedQuotient<K>& q);
template <class K>
bool is_subset(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b);
template <class K>
bool equals_ideal(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b);
/// Number of minimal generators in each degree: dim I_d - dim (A_1 I_{d-1}).
template <class K>
std::vector<int> minimal_generator_counts(const SubspaceIdeal<K>& i);
/// True when e is not in A_1 · I_{d-1} (e must lie in I).
template <class K>
bool is_minimal_generator(const SubspaceIdeal<K>& i, const Elem<K>& e);

struct LinearFormsCertificate {
  bool linear = true;
  int degree = -1;   // first degree needing a non-linear generator
  int deficit = 0;   // how many generators are missing there
};
template <class K>
LinearFormsCertificate is_generated_by_linear_forms(const SubspaceIdeal<K>& i);

/// Kernel of the algebra map src -> tgt sending variable v to images[v]
/// (a degree-1 element of tgt, or a zero element).
template <class K>
SubspaceIdeal<K> kernel_of_map(const GradedQuotient<K>& src, const GradedQuotient<K>& tgt,
                               const std::vector<Elem<K>>& images);

extern template class GradedQuotient<Rational>;
extern template class GradedQuotient<ModP>;
extern template class SubspaceIdeal<Rational>;
extern template class SubspaceIdeal<ModP>;

}  // namespace chowforge

#include "chowforge/graded_quotient_impl.hpp"
