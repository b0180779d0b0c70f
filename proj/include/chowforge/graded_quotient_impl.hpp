#pragma once

// Template definitions for graded_quotient.hpp.

namespace chowforge {

template <class K>
GradedQuotient<K>::GradedQuotient(const PresentedAlgebra& a)
    : nvars_(a.nvars()), max_degree_(a.max_degree), names_(a.variables) {
  if (max_degree_ < 0) throw Error(ErrorKind::CutoffTooSmall, "negative degree cutoff");
  std::vector<Monomial> monos;
  for (const auto& r : a.relations) {
    if (r.is_zero()) continue;
    int e = r.homogeneous_degree();
    if (e == 0) throw Error(ErrorKind::MalformedSpec, "constant relation");
    if (e > max_degree_)
      throw Error(ErrorKind::CutoffTooSmall,
                  "relation of degree " + std::to_string(e) + " above cutoff " + std::to_string(max_degree_));
    Relation rd;
    rd.degree = e;
    for (const auto& [m, c] : r.terms()) {
      if (static_cast<int>(m.size()) != nvars_) throw Error(ErrorKind::MalformedSpec, "relation has wrong number of variables");
      K k = from_rational<K>(c);
      if (!chowforge::is_zero(k)) rd.terms.emplace_back(m, k);
    }
    if (rd.terms.empty()) continue;
    if (rd.terms.size() == 1) monos.push_back(rd.terms.front().first);
    rels_.push_back(std::move(rd));
  }
  std::sort(monos.begin(), monos.end());
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  mono_by_var_.assign(static_cast<std::size_t>(nvars_), {});
  for (const auto& m : monos)
    for (int v = 0; v < nvars_; ++v)
      if (m[static_cast<std::size_t>(v)]) mono_by_var_[static_cast<std::size_t>(v)].push_back(m);

  dims_.assign(1, 1);
  basis_.assign(1, {Monomial(static_cast<std::size_t>(nvars_), 0)});
  basis_index_.resize(1);
  basis_index_[0][basis_[0][0]] = 0;
  parent_.assign(1, {{-1, -1}});
  for (int d = 1; d <= max_degree_; ++d) build_degree(d);
  mult_.resize(static_cast<std::size_t>(max_degree_ + 1));
}

template <class K>
void GradedQuotient<K>::build_degree(int d) {
  const int n = nvars_;
  const auto& prev = basis_[static_cast<std::size_t>(d - 1)];
  const int p = static_cast<int>(prev.size());

  // distinct, non-killed monomials b * x_v
  std::unordered_map<Monomial, int, MonomialHash> seen;
  std::vector<Monomial> monos;
  std::vector<std::pair<int, int>> origin;
  std::vector<int> cell(static_cast<std::size_t>(p) * static_cast<std::size_t>(n), -1);
  for (int b = 0; b < p; ++b)
    for (int v = 0; v < n; ++v) {
      Monomial m = prev[static_cast<std::size_t>(b)];
      ++m[static_cast<std::size_t>(v)];
      bool killed = false;
      for (const auto& r : mono_by_var_[static_cast<std::size_t>(v)])
        if (divides(r, m)) {
          killed = true;
          break;
        }
      if (killed) continue;
      auto [it, inserted] = seen.emplace(m, static_cast<int>(monos.size()));
      if (inserted) {
        monos.push_back(m);
        origin.emplace_back(b, v);
      }
      cell[static_cast<std::size_t>(b * n + v)] = it->second;
    }
  // column order: decreasing monomial
  std::vector<int> order(monos.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (monos[static_cast<std::size_t>(x)] != monos[static_cast<std::size_t>(y)])
      return monos[static_cast<std::size_t>(x)] > monos[static_cast<std::size_t>(y)];
    return x < y;
  });
  std::vector<int> col_of(monos.size());
  for (std::size_t c = 0; c < order.size(); ++c) col_of[static_cast<std::size_t>(order[c])] = static_cast<int>(c);
  for (auto& c : cell)
    if (c >= 0) c = col_of[static_cast<std::size_t>(c)];
  const int ncols = static_cast<int>(monos.size());

  RowEchelon<K> ech(ncols);
  std::vector<std::pair<int, K>> entries;
  auto add_expansion = [&](const Vec& u, int v, const K& coef) {
    for (const auto& [b, c] : u) {
      int col = cell[static_cast<std::size_t>(b * n + v)];
      if (col >= 0) entries.emplace_back(col, coef * c);
    }
  };
  // commutators
  if (d >= 2) {
    const auto& pp = mult_[static_cast<std::size_t>(d - 2)];
    int q = dims_[static_cast<std::size_t>(d - 2)];
    for (int a = 0; a < q; ++a)
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          const Vec& ux = pp[static_cast<std::size_t>(a * n + x)];
          const Vec& uy = pp[static_cast<std::size_t>(a * n + y)];
          if (ux.size() == 1 && uy.size() == 1 && ux[0].second == K(1) && uy[0].second == K(1) &&
              cell[static_cast<std::size_t>(ux[0].first * n + y)] == cell[static_cast<std::size_t>(uy[0].first * n + x)])
            continue;
          entries.clear();
          add_expansion(ux, y, K(1));
          add_expansion(uy, x, K(-1));
          if (entries.empty()) continue;
          ech.insert(sparse_collect(std::move(entries)));
          entries = {};
        }
  }
  // relations times basis monomials of complementary degree
  for (const auto& r : rels_) {
    if (r.degree > d) continue;
    int base = d - r.degree;
    int q = dims_[static_cast<std::size_t>(base)];
    for (int a = 0; a < q; ++a) {
      entries.clear();
      for (const auto& [m, c] : r.terms) {
        Monomial rest = m;
        int last = -1;
        for (std::size_t i = rest.size(); i-- > 0;)
          if (rest[i]) {
            --rest[i];
            last = static_cast<int>(i);
            break;
          }
        Vec u = times_monomial(base, Vec{{a, K(1)}}, rest);
        add_expansion(u, last, c);
      }
      if (entries.empty()) continue;
      ech.insert(sparse_collect(std::move(entries)));
      entries = {};
    }
  }
  ech.make_reduced();

  std::vector<int> basis_of_col(static_cast<std::size_t>(ncols), -1);
  std::vector<Monomial> basis;
  std::vector<std::pair<int, int>> parents;
  for (int c = 0; c < ncols; ++c) {
    if (ech.is_pivot(c)) continue;
    basis_of_col[static_cast<std::size_t>(c)] = static_cast<int>(basis.size());
    basis.push_back(monos[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])]);
    parents.push_back(origin[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])]);
  }
  std::vector<Vec> mult(static_cast<std::size_t>(p) * static_cast<std::size_t>(n));
  for (int b = 0; b < p; ++b)
    for (int v = 0; v < n; ++v) {
      int c = cell[static_cast<std::size_t>(b * n + v)];
      if (c < 0) continue;
      Vec& out = mult[static_cast<std::size_t>(b * n + v)];
      if (!ech.is_pivot(c)) {
        out.emplace_back(basis_of_col[static_cast<std::size_t>(c)], K(1));
      } else {
        const auto& row = ech.row(ech.pivot_row(c));
        for (std::size_t t = 1; t < row.size(); ++t) out.emplace_back(basis_of_col[static_cast<std::size_t>(row[t].first)], -row[t].second);
      }
    }
  if (mult_.size() < static_cast<std::size_t>(d)) mult_.resize(static_cast<std::size_t>(d));
  mult_[static_cast<std::size_t>(d - 1)] = std::move(mult);
  dims_.push_back(static_cast<int>(basis.size()));
  std::unordered_map<Monomial, int, MonomialHash> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  basis_index_.push_back(std::move(idx));
  basis_.push_back(std::move(basis));
  parent_.push_back(std::move(parents));
}

template <class K>
int GradedQuotient<K>::dim(int d) const {
  if (d < 0) return 0;
  if (d <= max_degree_) return dims_[static_cast<std::size_t>(d)];
  if (is_artinian()) return 0;
  throw Error(ErrorKind::CutoffTooSmall, "degree " + std::to_string(d) + " beyond cutoff " + std::to_string(max_degree_));
}

template <class K>
std::vector<int> GradedQuotient<K>::hilbert_function() const {
  return dims_;
}

template <class K>
int GradedQuotient<K>::top_degree() const {
  int t = 0;
  for (int d = 0; d <= max_degree_; ++d)
    if (dims_[static_cast<std::size_t>(d)] > 0) t = d;
  return t;
}

template <class K>
typename GradedQuotient<K>::Vec GradedQuotient<K>::times_variable(int d, const Vec& u, int var) const {
  if (u.empty()) return {};
  if (d + 1 > max_degree_) {
    if (is_artinian()) return {};
    throw Error(ErrorKind::CutoffTooSmall, "product lands in degree " + std::to_string(d + 1) + " beyond cutoff");
  }
  const auto& table = mult_[static_cast<std::size_t>(d)];
  if (u.size() == 1 && u[0].second == K(1)) return table[static_cast<std::size_t>(u[0].first * nvars_ + var)];
  std::vector<std::pair<int, K>> acc;
  for (const auto& [b, c] : u)
    for (const auto& [j, x] : table[static_cast<std::size_t>(b * nvars_ + var)]) acc.emplace_back(j, c * x);
  return sparse_collect(std::move(acc));
}

template <class K>
typename GradedQuotient<K>::Vec GradedQuotient<K>::times_monomial(int d, const Vec& u, const Monomial& m) const {
  Vec cur = u;
  int deg = d;
  for (int v = 0; v < nvars_ && !cur.empty(); ++v)
    for (int k = 0; k < m[static_cast<std::size_t>(v)] && !cur.empty(); ++k) {
      cur = times_variable(deg, cur, v);
      ++deg;
    }
  return cur;
}

template <class K>
Elem<K> GradedQuotient<K>::multiply(const Elem<K>& a, const Elem<K>& b) const {
  Elem<K> out{a.degree + b.degree, {}};
  if (a.v.empty() || b.v.empty()) return out;
  if (out.degree > max_degree_) {
    if (is_artinian()) return out;
    throw Error(ErrorKind::CutoffTooSmall, "product lands beyond cutoff");
  }
  std::vector<std::pair<int, K>> acc;
  for (const auto& [j, c] : b.v) {
    Vec t = times_monomial(a.degree, a.v, basis_[static_cast<std::size_t>(b.degree)][static_cast<std::size_t>(j)]);
    for (auto& [i, x] : t) acc.emplace_back(i, c * x);
  }
  out.v = sparse_collect(std::move(acc));
  return out;
}

template <class K>
Elem<K> GradedQuotient<K>::variable(int var) const {
  return {1, times_variable(0, Vec{{0, K(1)}}, var)};
}

template <class K>
Elem<K> GradedQuotient<K>::normal_form(const Monomial& m) const {
  int d = degree(m);
  if (d > max_degree_) {
    if (is_artinian()) return {d, {}};
    throw Error(ErrorKind::CutoffTooSmall, "monomial of degree " + std::to_string(d) + " beyond cutoff");
  }
  return {d, times_monomial(0, Vec{{0, K(1)}}, m)};
}

template <class K>
Elem<K> GradedQuotient<K>::normal_form(const Polynomial& p) const {
  int d = p.homogeneous_degree();
  Elem<K> out{std::max(d, 0), {}};
  std::vector<std::pair<int, K>> acc;
  for (const auto& [m, c] : p.terms()) {
    Elem<K> t = normal_form(m);
    K k = from_rational<K>(c);
    for (auto& [i, x] : t.v) acc.emplace_back(i, k * x);
  }
  out.v = sparse_collect(std::move(acc));
  return out;
}

template <class K>
int GradedQuotient<K>::basis_index(const Monomial& m) const {
  int d = degree(m);
  if (d > max_degree_) return -1;
  const auto& idx = basis_index_[static_cast<std::size_t>(d)];
  auto it = idx.find(m);
  return it == idx.end() ? -1 : it->second;
}

template <class K>
std::string GradedQuotient<K>::to_string(const Elem<K>& e) const {
  if (e.v.empty()) return "0";
  Polynomial p(nvars_);
  std::string s;
  for (std::size_t t = 0; t < e.v.size(); ++t) {
    const auto& [i, c] = e.v[t];
    std::string coef;
    if constexpr (std::is_same_v<K, Rational>) {
      coef = c.get_str();
    } else {
      coef = std::to_string(c.v);
    }
    std::string mono;
    const Monomial& m = basis_[static_cast<std::size_t>(e.degree)][static_cast<std::size_t>(i)];
    for (int v = 0; v < nvars_; ++v) {
      if (!m[static_cast<std::size_t>(v)]) continue;
      if (!mono.empty()) mono += "*";
      mono += names_[static_cast<std::size_t>(v)];
      if (m[static_cast<std::size_t>(v)] > 1) mono += "^" + std::to_string(m[static_cast<std::size_t>(v)]);
    }
    if (mono.empty()) mono = "1";
    if (t) s += " + ";
    s += (coef == "1" ? "" : coef + "*") + mono;
  }
  return s;
}

// ---------------------------------------------------------------- ideals

template <class K>
SubspaceIdeal<K>::SubspaceIdeal(const GradedQuotient<K>& q) : q_(&q) {
  for (int d = 0; d <= q.max_degree(); ++d) slices_.emplace_back(q.dim(d));
}

template <class K>
int SubspaceIdeal<K>::dim(int d) const {
  if (d < 0) return 0;
  if (d > q_->max_degree()) {
    if (q_->is_artinian()) return 0;
    throw Error(ErrorKind::NotArtinianWithinCutoff, "ideal degree beyond cutoff");
  }
  return slices_[static_cast<std::size_t>(d)].rank();
}

template <class K>
std::vector<int> SubspaceIdeal<K>::dims() const {
  std::vector<int> out;
  for (const auto& s : slices_) out.push_back(s.rank());
  return out;
}

template <class K>
std::vector<int> SubspaceIdeal<K>::quotient_dims() const {
  std::vector<int> out;
  for (int d = 0; d <= q_->max_degree(); ++d) out.push_back(q_->dim(d) - slices_[static_cast<std::size_t>(d)].rank());
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

template <class K>
bool SubspaceIdeal<K>::contains(const Elem<K>& e) const {
  if (e.v.empty()) return true;
  if (e.degree > q_->max_degree()) return q_->is_artinian();
  return slices_[static_cast<std::size_t>(e.degree)].contains(e.v);
}

template <class K>
typename GradedQuotient<K>::Vec SubspaceIdeal<K>::reduce(const Elem<K>& e) const {
  if (e.v.empty() || e.degree > q_->max_degree()) return {};
  return slices_[static_cast<std::size_t>(e.degree)].reduce(e.v);
}

template <class K>
std::vector<Elem<K>> SubspaceIdeal<K>::spanning_elements() const {
  std::vector<Elem<K>> out;
  for (int d = 0; d < static_cast<int>(slices_.size()); ++d)
    for (int r = 0; r < slices_[static_cast<std::size_t>(d)].rank(); ++r) out.push_back({d, slices_[static_cast<std::size_t>(d)].row(r)});
  return out;
}

template <class K>
SubspaceIdeal<K> zero_ideal(const GradedQuotient<K>& q) {
  return SubspaceIdeal<K>(q);
}

template <class K>
SubspaceIdeal<K> maximal_ideal(const GradedQuotient<K>& q) {
  std::vector<Elem<K>> gens;
  for (int v = 0; v < q.nvars(); ++v) gens.push_back(q.variable(v));
  return ideal_span(q, gens);
}

template <class K>
SubspaceIdeal<K> ideal_span(const GradedQuotient<K>& q, const std::vector<Elem<K>>& gens) {
  SubspaceIdeal<K> out(q);
  int top = q.max_degree();
  std::vector<std::vector<const Elem<K>*>> by_degree(static_cast<std::size_t>(top + 1));
  for (const auto& g : gens) {
    if (g.v.empty()) continue;
    if (g.degree > top) {
      if (q.is_artinian()) continue;
      throw Error(ErrorKind::NotArtinianWithinCutoff, "generator beyond cutoff");
    }
    by_degree[static_cast<std::size_t>(g.degree)].push_back(&g);
    out.generators().push_back(g);
  }
  for (int d = 0; d <= top; ++d) {
    auto& s = out.slice(d);
    for (const auto* g : by_degree[static_cast<std::size_t>(d)]) s.insert(g->v);
    if (d == 0) continue;
    const auto& prev = out.slice(d - 1);
    for (int r = 0; r < prev.rank() && s.rank() < s.ncols(); ++r)
      for (int v = 0; v < q.nvars() && s.rank() < s.ncols(); ++v) s.insert(q.times_variable(d - 1, prev.row(r), v));
  }
  return out;
}

template <class K>
SubspaceIdeal<K> ideal_sum(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b) {
  std::vector<Elem<K>> gens = a.spanning_elements();
  auto more = b.spanning_elements();
  gens.insert(gens.end(), more.begin(), more.end());
  SubspaceIdeal<K> out = ideal_span(a.ring(), gens);
  std::vector<Elem<K>> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  out.generators() = g.empty() ? gens : g;
  return out;
}

namespace detail {

template <class K>
std::vector<Elem<K>> generators_or_minimal(const SubspaceIdeal<K>& i) {
  if (!i.generators().empty()) return i.generators();
  const auto& q = i.ring();
  std::vector<Elem<K>> out;
  for (int d = 0; d <= q.max_degree(); ++d) {
    RowEchelon<K> lower(q.dim(d));
    if (d > 0)
      for (int r = 0; r < i.slice(d - 1).rank(); ++r)
        for (int v = 0; v < q.nvars(); ++v) lower.insert(q.times_variable(d - 1, i.slice(d - 1).row(r), v));
    for (int r = 0; r < i.slice(d).rank(); ++r)
      if (lower.insert(i.slice(d).row(r))) out.push_back({d, i.slice(d).row(r)});
  }
  return out;
}

}  // namespace detail

template <class K>
SubspaceIdeal<K> colon(const SubspaceIdeal<K>& j, const Elem<K>& f) {
  const auto& q = j.ring();
  SubspaceIdeal<K> out(q);
  bool everything = j.contains(f);
  for (int d = 0; d <= q.max_degree(); ++d) {
    auto& s = out.slice(d);
    int nd = q.dim(d);
    bool all = everything;
    if (!all && d + f.degree > q.max_degree()) {
      if (!q.is_artinian()) throw Error(ErrorKind::NotArtinianWithinCutoff, "colon needs degrees beyond cutoff");
      all = true;
    }
    if (all) {
      for (int b = 0; b < nd; ++b) s.insert(SparseVec<K>{{b, K(1)}});
      continue;
    }
    std::vector<SparseVec<K>> images;
    for (int b = 0; b < nd; ++b) {
      Elem<K> g{d, SparseVec<K>{{b, K(1)}}};
      images.push_back(j.reduce(q.multiply(g, f)));
    }
    auto ker = kernel_basis(images, q.dim(d + f.degree)).first;
    for (auto& v : ker) s.insert(v);
  }
  return out;
}

template <class K>
SubspaceIdeal<K> colon(const SubspaceIdeal<K>& j, const SubspaceIdeal<K>& i) {
  const auto& q = j.ring();
  std::vector<Elem<K>> gens = detail::generators_or_minimal(i);
  SubspaceIdeal<K> out(q);
  for (int d = 0; d <= q.max_degree(); ++d) {
    auto& s = out.slice(d);
    int nd = q.dim(d);
    std::vector<int> offset;
    int total = 0;
    for (const auto& g : gens) {
      offset.push_back(total);
      if (d + g.degree <= q.max_degree()) total += q.dim(d + g.degree);
      else if (!q.is_artinian()) throw Error(ErrorKind::NotArtinianWithinCutoff, "colon needs degrees beyond cutoff");
    }
    std::vector<SparseVec<K>> images;
    for (int b = 0; b < nd; ++b) {
      Elem<K> x{d, SparseVec<K>{{b, K(1)}}};
      SparseVec<K> img;
      for (std::size_t t = 0; t < gens.size(); ++t) {
        if (d + gens[t].degree > q.max_degree()) continue;
        for (auto& [c, val] : j.reduce(q.multiply(x, gens[t]))) img.emplace_back(c + offset[t], val);
      }
      images.push_back(std::move(img));
    }
    auto [ker, rk] = kernel_basis(images, total);
    (void)rk;
    for (auto& v : ker) s.insert(v);
  }
  return out;
}

template <class K>
SubspaceIdeal<K> annihilator(const SubspaceIdeal<K>& i) {
  return colon(zero_ideal(i.ring()), i);
}

template <class K>
SubspaceIdeal<K> socle(const GradedQuotient<K>& q) {
  return annihilator(maximal_ideal(q));
}

template <class K>
bool is_subset(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b) {
  for (int d = 0; d <= a.ring().max_degree(); ++d)
    for (int r = 0; r < a.slice(d).rank(); ++r)
      if (!b.slice(d).contains(a.slice(d).row(r))) return false;
  return true;
}

template <class K>
bool equals_ideal(const SubspaceIdeal<K>& a, const SubspaceIdeal<K>& b) {
  return a.dims() == b.dims() && is_subset(a, b);
}

template <class K>
std::vector<int> minimal_generator_counts(const SubspaceIdeal<K>& i) {
  const auto& q = i.ring();
  std::vector<int> out;
  for (int d = 0; d <= q.max_degree(); ++d) {
    RowEchelon<K> lower(q.dim(d));
    if (d > 0)
      for (int r = 0; r < i.slice(d - 1).rank(); ++r)
        for (int v = 0; v < q.nvars(); ++v) lower.insert(q.times_variable(d - 1, i.slice(d - 1).row(r), v));
    out.push_back(i.dim(d) - lower.rank());
  }
  return out;
}

template <class K>
bool is_minimal_generator(const SubspaceIdeal<K>& i, const Elem<K>& e) {
  const auto& q = i.ring();
  int d = e.degree;
  if (e.v.empty()) return false;
  if (d == 0) return true;
  RowEchelon<K> lower(q.dim(d));
  for (int r = 0; r < i.slice(d - 1).rank(); ++r)
    for (int v = 0; v < q.nvars(); ++v) lower.insert(q.times_variable(d - 1, i.slice(d - 1).row(r), v));
  return !lower.contains(e.v);
}

template <class K>
LinearFormsCertificate is_generated_by_linear_forms(const SubspaceIdeal<K>& i) {
  LinearFormsCertificate cert;
  auto counts = minimal_generator_counts(i);
  for (int d = 0; d < static_cast<int>(counts.size()); ++d) {
    if (d == 1) continue;
    if (counts[static_cast<std::size_t>(d)] > 0) {
      cert.linear = false;
      cert.degree = d;
      cert.deficit = counts[static_cast<std::size_t>(d)];
      return cert;
    }
  }
  return cert;
}

template <class K>
SubspaceIdeal<K> kernel_of_map(const GradedQuotient<K>& src, const GradedQuotient<K>& tgt, const std::vector<Elem<K>>& images) {
  SubspaceIdeal<K> out(src);
  int top = src.max_degree();
  // image of each basis monomial, built variable by variable
  std::vector<std::vector<Elem<K>>> img(static_cast<std::size_t>(top + 1));
  img[0] = {tgt.one()};
  for (int d = 1; d <= top; ++d) {
    const auto& basis = src.basis(d);
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
      auto [pb, pv] = src.parent(d, j);
      img[static_cast<std::size_t>(d)].push_back(
          tgt.multiply(img[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(pb)], images[static_cast<std::size_t>(pv)]));
    }
    int codim = d <= tgt.max_degree() ? tgt.dim(d) : 0;
    std::vector<SparseVec<K>> vecs;
    for (const auto& e : img[static_cast<std::size_t>(d)]) vecs.push_back(d <= tgt.max_degree() ? e.v : SparseVec<K>{});
    auto [ker, rk] = kernel_basis(vecs, codim);
    (void)rk;
    for (auto& v : ker) out.slice(d).insert(v);
  }
  return out;
}

}  // namespace chowforge
