#include "chowforge/chow_ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chowforge {

// ---------------------------------------------------------------- monomials

int NestedMonomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

bool operator<(const NestedMonomial& a, const NestedMonomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.chain != b.chain) return a.chain < b.chain;
  return a.exponents < b.exponents;
}

void ChowElement::add(const NestedMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

namespace {

void add_work(std::map<Monomial, Rational, std::greater<>>& work, const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = work.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) work.erase(it);
  }
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- ring

ChowRing::ChowRing(const Matroid& m, ChowKind kind) : kind_(kind), matroid_(std::make_shared<const Matroid>(m)) {
  if (m.rank() < 1) throw Error(ErrorKind::RankZero, "Chow ring needs rank at least 1");
  if (!m.is_simple()) throw Error(ErrorKind::NotSimple, "Chow ring needs a simple matroid");
  lattice_ = std::make_shared<const Lattice>(Lattice::of_flats(*matroid_));
  order_ = coatom_order(*lattice_);
  const Lattice& l = *lattice_;
  int min_rank = augmented() ? 1 : 2;
  for (int f = 0; f < l.size(); ++f)
    if (l.rank(f) >= min_rank) var_flat_.push_back(f);
  std::sort(var_flat_.begin(), var_flat_.end(), [&](int a, int b) {
    if (l.rank(a) != l.rank(b)) return l.rank(a) < l.rank(b);
    return order_.position(a) > order_.position(b);
  });
  flat_var_.assign(static_cast<std::size_t>(l.size()), -1);
  for (std::size_t v = 0; v < var_flat_.size(); ++v) flat_var_[static_cast<std::size_t>(var_flat_[v])] = static_cast<int>(v);
  above_.resize(static_cast<std::size_t>(l.size()));
  for (int f = 0; f < l.size(); ++f)
    for (int g : var_flat_)
      if (l.less(f, g)) above_[static_cast<std::size_t>(f)].push_back(g);
  cache_ = std::make_shared<Cache>();
}

std::vector<std::string> ChowRing::variable_names() const {
  std::vector<std::string> out;
  for (int f : var_flat_) out.push_back("x_" + flat_name(f));
  return out;
}

std::vector<int> ChowRing::hyperplanes() const {
  std::vector<int> out;
  for (int h : lattice_->coatoms_of(lattice_->top()))
    if (is_variable(h)) out.push_back(h);
  std::sort(out.begin(), out.end(), [&](int a, int b) { return order_.less(a, b); });
  return out;
}

namespace {

Polynomial sum_of_variables(const ChowRing& r, const std::vector<int>& flats) {
  Polynomial p(r.nvars());
  for (int f : flats) p += Polynomial::variable(r.nvars(), r.variable_of(f));
  return p;
}

// variable flats G >= f
std::vector<int> up_closed(const ChowRing& r, int f) {
  std::vector<int> out;
  for (int g : r.variable_flats())
    if (r.lattice().leq(f, g)) out.push_back(g);
  return out;
}

}  // namespace

PresentedAlgebra ChowRing::presentation() const {
  const Lattice& l = *lattice_;
  const int n = nvars();
  PresentedAlgebra a;
  a.name = std::string(augmented() ? "aChow" : "Chow") + "(" + (matroid_->name().empty() ? "M" : matroid_->name()) + ")";
  a.variables = variable_names();
  a.max_degree = socle_degree() + 1;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!l.comparable(flat_of(x), flat_of(y))) a.relations.push_back(Polynomial::variable(n, x) * Polynomial::variable(n, y));
  const int ground = matroid_->ground_size();
  auto atom = [&](int i) { return l.index_of(ElementSet{i}); };
  if (!augmented()) {
    for (int f : var_flat_)
      for (int i = 1; i <= ground; ++i) {
        if (l.set(f).contains(i)) continue;
        a.relations.push_back(Polynomial::variable(n, variable_of(f)) * sum_of_variables(*this, up_closed(*this, l.join(f, atom(i)))));
      }
    for (int i = 1; i <= ground; ++i)
      for (int j = i + 1; j <= ground; ++j) {
        Polynomial s = sum_of_variables(*this, up_closed(*this, l.join(atom(i), atom(j))));
        a.relations.push_back(s * s);
      }
  } else {
    for (int f : var_flat_)
      for (int i = 1; i <= ground; ++i) {
        if (l.set(f).contains(i)) continue;
        a.relations.push_back(Polynomial::variable(n, variable_of(f)) * sum_of_variables(*this, up_closed(*this, atom(i))));
      }
    for (int i = 1; i <= ground; ++i) {
      Polynomial s = sum_of_variables(*this, up_closed(*this, atom(i)));
      a.relations.push_back(s * s);
    }
  }
  return a;
}

PresentedAlgebra ChowRing::presentation_fy() const {
  const Lattice& l = *lattice_;
  PresentedAlgebra a;
  a.max_degree = socle_degree() + 1;
  std::vector<int> flats;
  for (int f = 0; f < l.size(); ++f)
    if (f != l.bottom() || augmented()) flats.push_back(f);
  std::sort(flats.begin(), flats.end(), [&](int x, int y) {
    if (l.rank(x) != l.rank(y)) return l.rank(x) < l.rank(y);
    return order_.position(x) > order_.position(y);
  });
  const int ground = matroid_->ground_size();
  if (!augmented()) {
    a.name = "ChowFY(" + (matroid_->name().empty() ? std::string("M") : matroid_->name()) + ")";
    const int n = static_cast<int>(flats.size());
    for (int f : flats) a.variables.push_back("x_" + flat_name(f));
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (!l.comparable(flats[static_cast<std::size_t>(x)], flats[static_cast<std::size_t>(y)]))
          a.relations.push_back(Polynomial::variable(n, x) * Polynomial::variable(n, y));
    for (int i = 1; i <= ground; ++i) {
      Polynomial s(n);
      for (int x = 0; x < n; ++x)
        if (l.set(flats[static_cast<std::size_t>(x)]).contains(i)) s += Polynomial::variable(n, x);
      a.relations.push_back(s);
    }
    return a;
  }
  // y_i for i in E, then x_F = y_{F+e} for every flat F including the empty one
  a.name = "aChowFY(" + (matroid_->name().empty() ? std::string("M") : matroid_->name()) + ")";
  const int n = ground + static_cast<int>(flats.size());
  for (int i = 1; i <= ground; ++i) a.variables.push_back("y_" + std::to_string(i));
  for (int f : flats) a.variables.push_back("x_" + flat_name(f));
  auto xv = [&](int k) { return Polynomial::variable(n, ground + k); };
  const int nf = static_cast<int>(flats.size());
  for (int x = 0; x < nf; ++x)
    for (int y = x + 1; y < nf; ++y)
      if (!l.comparable(flats[static_cast<std::size_t>(x)], flats[static_cast<std::size_t>(y)])) a.relations.push_back(xv(x) * xv(y));
  for (int i = 1; i <= ground; ++i)
    for (int k = 0; k < nf; ++k)
      if (!l.set(flats[static_cast<std::size_t>(k)]).contains(i)) a.relations.push_back(Polynomial::variable(n, i - 1) * xv(k));
  for (int i = 1; i <= ground; ++i) {
    Polynomial s = Polynomial::variable(n, i - 1);
    for (int k = 0; k < nf; ++k)
      if (l.set(flats[static_cast<std::size_t>(k)]).contains(i)) s += xv(k);
    a.relations.push_back(s);
  }
  Polynomial all(n);
  for (int k = 0; k < nf; ++k) all += xv(k);
  a.relations.push_back(all);
  return a;
}

std::vector<Polynomial> ChowRing::groebner_basis() const {
  const Lattice& l = *lattice_;
  const int n = nvars();
  std::vector<Polynomial> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!l.comparable(flat_of(x), flat_of(y))) out.push_back(Polynomial::variable(n, x) * Polynomial::variable(n, y));
  for (int f : var_flat_) {
    Polynomial s = sum_of_variables(*this, up_closed(*this, f));
    for (int fp : var_flat_)
      if (l.less(fp, f)) out.push_back(Polynomial::variable(n, variable_of(fp)) * s.pow(l.rank(f) - l.rank(fp)));
  }
  for (int f : var_flat_) {
    Polynomial s = sum_of_variables(*this, up_closed(*this, f));
    out.push_back(s.pow(l.rank(f) + (augmented() ? 1 : 0)));
  }
  return out;
}

bool ChowRing::is_nested(const NestedMonomial& m) const {
  const Lattice& l = *lattice_;
  if (m.chain.size() != m.exponents.size()) return false;
  for (std::size_t k = 0; k < m.chain.size(); ++k) {
    int f = m.chain[k];
    if (f < 0 || f >= l.size() || !is_variable(f) || m.exponents[k] < 1) return false;
    int below_rank = 0;
    if (k + 1 < m.chain.size()) {
      if (!l.less(m.chain[k + 1], f)) return false;
      below_rank = l.rank(m.chain[k + 1]);
      if (m.exponents[k] >= l.rank(f) - below_rank) return false;
    } else {
      int cap = augmented() ? l.rank(f) : l.rank(f) - 1;
      if (m.exponents[k] > cap) return false;
    }
  }
  return true;
}

std::vector<NestedMonomial> ChowRing::nested_basis(int d) const {
  std::vector<NestedMonomial> out;
  if (d < 0) return out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  const Lattice& l = *lattice_;
  NestedMonomial cur;
  // cur holds F_1..F_k with exponents; the last exponent is still unconstrained from below
  std::function<void(int)> rec = [&](int remaining) {
    int f = cur.chain.back();
    int a = cur.exponents.back();
    if (remaining == 0) {
      int cap = augmented() ? l.rank(f) : l.rank(f) - 1;
      if (a <= cap) out.push_back(cur);
      return;
    }
    for (int g : var_flat_) {
      if (!l.less(g, f)) continue;
      if (a >= l.rank(f) - l.rank(g)) continue;
      int gcap = augmented() ? l.rank(g) : l.rank(g) - 1;
      for (int e = 1; e <= std::min(remaining, gcap); ++e) {
        cur.chain.push_back(g);
        cur.exponents.push_back(e);
        rec(remaining - e);
        cur.chain.pop_back();
        cur.exponents.pop_back();
      }
    }
  };
  for (int f : var_flat_) {
    int cap = augmented() ? l.rank(f) : l.rank(f) - 1;
    for (int e = 1; e <= std::min(d, cap); ++e) {
      cur.chain = {f};
      cur.exponents = {e};
      rec(d - e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ChowRing::hilbert_function() const {
  std::vector<int> hf;
  for (int d = 0; d <= socle_degree(); ++d) hf.push_back(static_cast<int>(nested_basis(d).size()));
  return hf;
}

RationalSeries ChowRing::hilbert_series() const { return RationalSeries::polynomial(hilbert_function()); }

Monomial ChowRing::monomial_of(const NestedMonomial& m) const {
  Monomial out(static_cast<std::size_t>(nvars()), 0);
  for (std::size_t k = 0; k < m.chain.size(); ++k) {
    int v = variable_of(m.chain[k]);
    if (v < 0) throw Error(ErrorKind::NotAFlat, flat_name(m.chain[k]) + " is not a variable");
    out[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(out[static_cast<std::size_t>(v)] + m.exponents[k]);
  }
  return out;
}

Polynomial ChowRing::to_polynomial(const ChowElement& e) const {
  Polynomial p(nvars());
  for (const auto& [m, c] : e.terms) p.add_term(monomial_of(m), c);
  return p;
}

void ChowRing::expand_tail(const Monomial& rest, int f, int power, const Rational& coef,
                           std::map<Monomial, Rational, std::greater<>>& work) const {
  // rest * ((sum_{G ⊇ F} x_G)^power - x_F^power)
  const Lattice& l = *lattice_;
  std::vector<int> cand;
  for (int g : above_[static_cast<std::size_t>(f)]) {
    bool ok = true;
    for (int v = 0; v < nvars() && ok; ++v)
      if (rest[static_cast<std::size_t>(v)] && !l.comparable(flat_of(v), g)) ok = false;
    if (ok) cand.push_back(g);
  }
  if (cand.empty()) return;
  const int fv = variable_of(f);
  Monomial base = rest;
  std::vector<std::pair<int, int>> picks;  // (flat, exponent)
  for (int j = 0; j < power; ++j) {
    int k = power - j;
    Rational outer = coef * Rational(binomial(power, j)) * Rational(factorial(k));
    base[static_cast<std::size_t>(fv)] = static_cast<std::uint16_t>(rest[static_cast<std::size_t>(fv)] + j);
    // chains g_1 ⊊ g_2 ⊊ ... among cand with exponents summing to k
    std::function<void(std::size_t, int, long)> rec = [&](std::size_t from, int left, long denom) {
      if (left == 0) {
        Monomial m = base;
        for (auto [g, e] : picks) m[static_cast<std::size_t>(variable_of(g))] = static_cast<std::uint16_t>(m[static_cast<std::size_t>(variable_of(g))] + e);
        add_work(work, m, outer / Rational(denom));
        return;
      }
      for (std::size_t t = from; t < cand.size(); ++t) {
        int g = cand[t];
        if (!picks.empty() && !l.less(picks.back().first, g)) continue;
        for (int e = 1; e <= left; ++e) {
          picks.emplace_back(g, e);
          rec(t + 1, left - e, denom * factorial(e));
          picks.pop_back();
        }
      }
    };
    rec(0, k, 1);
  }
}

void ChowRing::reduce_into(std::map<Monomial, Rational, std::greater<>>& work, ChowElement& out) const {
  const Lattice& l = *lattice_;
  const int n = nvars();
  std::vector<int> sup;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    Rational c = it->second;
    work.erase(it);
    sup.clear();
    // descending variable index = descending rank
    for (int v = n - 1; v >= 0; --v)
      if (m[static_cast<std::size_t>(v)]) sup.push_back(v);
    bool chain = true;
    for (std::size_t k = 0; k + 1 < sup.size() && chain; ++k)
      if (!l.less(flat_of(sup[k + 1]), flat_of(sup[k]))) chain = false;
    if (!chain) continue;
    bool rewritten = false;
    for (std::size_t k = 0; k < sup.size() && !rewritten; ++k) {
      int f = flat_of(sup[k]);
      int a = m[static_cast<std::size_t>(sup[k])];
      int cap = k + 1 < sup.size() ? l.rank(f) - l.rank(flat_of(sup[k + 1])) : l.rank(f) + (augmented() ? 1 : 0);
      if (a >= cap) {
        Monomial rest = m;
        rest[static_cast<std::size_t>(sup[k])] = static_cast<std::uint16_t>(a - cap);
        expand_tail(rest, f, cap, -c, work);
        rewritten = true;
      }
    }
    if (rewritten) continue;
    NestedMonomial nm;
    for (int v : sup) {
      nm.chain.push_back(flat_of(v));
      nm.exponents.push_back(m[static_cast<std::size_t>(v)]);
    }
    out.add(nm, c);
  }
}

ChowElement ChowRing::normal_form(const Monomial& m) const {
  if (static_cast<int>(m.size()) != nvars()) throw Error(ErrorKind::MalformedSpec, "monomial has wrong number of variables");
  {
    std::lock_guard<std::mutex> g(cache_->mu);
    auto it = cache_->nf.find(m);
    if (it != cache_->nf.end()) return it->second;
  }
  std::map<Monomial, Rational, std::greater<>> work;
  work.emplace(m, Rational(1));
  ChowElement out;
  reduce_into(work, out);
  std::lock_guard<std::mutex> g(cache_->mu);
  cache_->nf.emplace(m, out);
  return out;
}

ChowElement ChowRing::normal_form(const Polynomial& p) const {
  p.homogeneous_degree();
  ChowElement out;
  for (const auto& [m, c] : p.terms()) {
    ChowElement t = normal_form(m);
    for (const auto& [nm, x] : t.terms) out.add(nm, c * x);
  }
  return out;
}

ChowElement ChowRing::multiply(const ChowElement& a, const ChowElement& b) const {
  ChowElement out;
  for (const auto& [ma, ca] : a.terms) {
    Monomial xa = monomial_of(ma);
    for (const auto& [mb, cb] : b.terms) {
      Monomial m = xa;
      Monomial xb = monomial_of(mb);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(m[i] + xb[i]);
      ChowElement t = normal_form(m);
      Rational cc = ca * cb;
      for (const auto& [nm, x] : t.terms) out.add(nm, cc * x);
    }
  }
  return out;
}

ChowElement ChowRing::variable(int flat) const {
  int v = variable_of(flat);
  if (v < 0) throw Error(ErrorKind::NotAFlat, flat_name(flat) + " is not a variable");
  return normal_form(variable_monomial(nvars(), v));
}

ChowElement ChowRing::one() const {
  ChowElement e;
  e.add({}, Rational(1));
  return e;
}

ChowElement ChowRing::scaled(const ChowElement& a, const Rational& c) const {
  ChowElement out;
  for (const auto& [m, x] : a.terms) out.add(m, c * x);
  return out;
}

ChowElement ChowRing::sum(const ChowElement& a, const ChowElement& b) const {
  ChowElement out = a;
  for (const auto& [m, x] : b.terms) out.add(m, x);
  return out;
}

std::string ChowRing::to_string(const NestedMonomial& m) const {
  if (m.chain.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < m.chain.size(); ++k) {
    if (k) s += "*";
    s += "x_" + flat_name(m.chain[k]);
    if (m.exponents[k] > 1) s += "^" + std::to_string(m.exponents[k]);
  }
  return s;
}

std::string ChowRing::to_string(const ChowElement& e) const {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    Rational a = abs(c);
    if (first) s += sgn(c) < 0 ? "-" : "";
    else s += sgn(c) < 0 ? " - " : " + ";
    first = false;
    std::string mono = to_string(m);
    if (mono == "1") s += a.get_str();
    else s += (a == 1 ? "" : a.get_str() + "*") + mono;
  }
  return s;
}

const GradedQuotient<Rational>& ChowRing::oracle() const {
  std::call_once(cache_->once, [&] { cache_->oracle = std::make_unique<GradedQuotient<Rational>>(presentation()); });
  return *cache_->oracle;
}

Elem<Rational> ChowRing::to_oracle(const ChowElement& e) const {
  const auto& q = oracle();
  Elem<Rational> out{std::max(e.degree(), 0), {}};
  std::vector<std::pair<int, Rational>> acc;
  for (const auto& [m, c] : e.terms) {
    int j = q.basis_index(monomial_of(m));
    if (j < 0) {
      // not a standard monomial of the oracle: go through its normal form
      Elem<Rational> t = q.normal_form(monomial_of(m));
      for (auto& [i, x] : t.v) acc.emplace_back(i, c * x);
    } else {
      acc.emplace_back(j, c);
    }
  }
  out.v = sparse_collect(std::move(acc));
  return out;
}

ChowElement ChowRing::from_oracle(const Elem<Rational>& e) const {
  const auto& q = oracle();
  ChowElement out;
  for (const auto& [j, c] : e.v) {
    const Monomial& m = q.basis(e.degree)[static_cast<std::size_t>(j)];
    ChowElement t = normal_form(m);
    for (const auto& [nm, x] : t.terms) out.add(nm, c * x);
  }
  return out;
}

Elem<Rational> ChowRing::oracle_variable(int flat) const {
  int v = variable_of(flat);
  if (v < 0) throw Error(ErrorKind::NotAFlat, flat_name(flat) + " is not a variable");
  return oracle().variable(v);
}

// ---------------------------------------------------------------- closed forms

std::string IdealDescriptor::to_string(const ChowRing& r) const {
  if (shape == Shape::positive) return "A_+";
  if (shape == Shape::unit) return "A";
  if (flats.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (i) s += ", ";
    s += "x_" + r.flat_name(flats[i]);
  }
  return s + ")";
}

SubspaceIdeal<Rational> variable_ideal(const ChowRing& r, const std::vector<int>& flats) {
  std::vector<Elem<Rational>> gens;
  for (int f : flats) gens.push_back(r.oracle_variable(f));
  return ideal_span(r.oracle(), gens);
}

SubspaceIdeal<Rational> realize(const ChowRing& r, const IdealDescriptor& d) {
  switch (d.shape) {
    case IdealDescriptor::Shape::positive:
      return maximal_ideal(r.oracle());
    case IdealDescriptor::Shape::unit:
      return ideal_span(r.oracle(), std::vector<Elem<Rational>>{r.oracle().one()});
    default:
      return variable_ideal(r, d.flats);
  }
}

namespace {

void sort_flats(const ChowRing& r, std::vector<int>& v) {
  std::sort(v.begin(), v.end(), [&](int a, int b) { return r.variable_of(a) < r.variable_of(b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void require_variable(const ChowRing& r, int f) {
  if (f < 0 || f >= r.lattice().size() || !r.is_variable(f))
    throw Error(ErrorKind::NotAFlat, "flat is not a variable of the ring");
}

void require_hyperplane(const ChowRing& r, int h) {
  if (h < 0 || h >= r.lattice().size() || !r.lattice().covers(h, r.lattice().top()) || !r.is_variable(h))
    throw Error(ErrorKind::NotAHyperplane, (h >= 0 && h < r.lattice().size() ? r.flat_name(h) : std::to_string(h)) + " is not a hyperplane variable");
}

std::vector<int> not_below(const ChowRing& r, int f) {
  std::vector<int> out;
  for (int g : r.variable_flats())
    if (!r.lattice().leq(g, f)) out.push_back(g);
  return out;
}

}  // namespace

IdealDescriptor truncation_annihilator(const ChowRing& r) {
  IdealDescriptor d;
  d.rule = "truncation-annihilator";
  int top = r.lattice().top();
  if (!r.is_variable(top)) throw Error(ErrorKind::RankZero, "x_E is not a variable in rank 1");
  if (r.rank() < r.colon_threshold()) {
    d.shape = IdealDescriptor::Shape::positive;
    return d;
  }
  d.flats = r.hyperplanes();
  sort_flats(r, d.flats);
  return d;
}

IdealDescriptor restriction_kernel(const ChowRing& r, int f) {
  require_variable(r, f);
  IdealDescriptor d;
  d.rule = "restriction-kernel";
  d.flats = not_below(r, f);
  return d;
}

IdealDescriptor upset_colon(const ChowRing& r, const std::vector<int>& up, int f) {
  require_variable(r, f);
  const Lattice& l = r.lattice();
  for (int g : up) {
    require_variable(r, g);
    if (l.leq(g, f)) throw Error(ErrorKind::ClosedFormInapplicable, "the set meets [0, F]");
  }
  for (int g : r.variable_flats())
    if (l.less(f, g) && std::find(up.begin(), up.end(), g) == up.end())
      throw Error(ErrorKind::ClosedFormInapplicable, "the set misses " + r.flat_name(g) + " above F");
  IdealDescriptor d;
  d.rule = "upset-colon";
  if (l.rank(f) < r.colon_threshold()) {
    d.shape = IdealDescriptor::Shape::positive;
    return d;
  }
  d.flats = not_below(r, f);
  for (int g : l.coatoms_of(f))
    if (r.is_variable(g)) d.flats.push_back(g);
  sort_flats(r, d.flats);
  return d;
}

IdealDescriptor hyperplane_annihilator(const ChowRing& r, int hp) {
  require_hyperplane(r, hp);
  IdealDescriptor d;
  d.rule = "hyperplane-annihilator";
  d.flats = not_below(r, hp);
  return d;
}

IdealDescriptor hyperplane_set_annihilator(const ChowRing& r, const std::vector<int>& hs) {
  for (int h : hs) require_hyperplane(r, h);
  IdealDescriptor d;
  d.rule = "hyperplane-set-annihilator";
  if (hs.empty()) {
    d.shape = IdealDescriptor::Shape::unit;
    return d;
  }
  for (int g : r.variable_flats()) {
    bool all = true;
    for (int h : hs)
      if (r.lattice().leq(g, h)) all = false;
    if (all) d.flats.push_back(g);
  }
  return d;
}

std::vector<int> restricted_coatoms(const ChowRing& r, const std::vector<int>& hs, int hp) {
  const Lattice& l = r.lattice();
  std::vector<int> out;
  for (int h : hs) {
    int m = l.meet(h, hp);
    if (l.covers(m, hp) && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](int a, int b) { return r.order().less(a, b); });
  return out;
}

bool covering_condition(const ChowRing& r, const std::vector<int>& hs, int hp) {
  const Lattice& l = r.lattice();
  auto rc = restricted_coatoms(r, hs, hp);
  for (int h : hs) {
    int m = l.meet(h, hp);
    bool found = false;
    for (int f : rc)
      if (l.leq(m, f)) found = true;
    if (!found) return false;
  }
  return true;
}

IdealDescriptor hyperplane_set_colon(const ChowRing& r, const std::vector<int>& hs, int hp) {
  require_hyperplane(r, hp);
  for (int h : hs) require_hyperplane(r, h);
  if (std::find(hs.begin(), hs.end(), hp) != hs.end())
    throw Error(ErrorKind::ClosedFormInapplicable, "H' belongs to the hyperplane set");
  if (hs.empty()) return hyperplane_annihilator(r, hp);
  IdealDescriptor d;
  d.rule = "hyperplane-set-colon";
  if (r.lattice().rank(hp) < r.colon_threshold()) {
    d.shape = IdealDescriptor::Shape::positive;
    return d;
  }
  if (!covering_condition(r, hs, hp))
    throw Error(ErrorKind::CoveringConditionViolated, "some H ∧ " + r.flat_name(hp) + " lies under no element of coat_H(H')");
  d.flats = not_below(r, hp);
  for (int f : restricted_coatoms(r, hs, hp)) d.flats.push_back(f);
  sort_flats(r, d.flats);
  return d;
}

std::vector<NestedMonomial> hyperplane_ideal_basis(const ChowRing& r, const std::vector<int>& hs, int d) {
  for (int h : hs) require_hyperplane(r, h);
  std::vector<NestedMonomial> out;
  if (hs.empty()) return out;
  const Lattice& l = r.lattice();
  int top = l.top();
  for (const auto& m : r.nested_basis(d)) {
    if (m.chain.empty()) continue;
    int f1 = m.chain[0];
    if (std::find(hs.begin(), hs.end(), f1) != hs.end()) {
      out.push_back(m);
      continue;
    }
    if (f1 != top) continue;
    if (m.chain.size() >= 2) {
      int f2 = m.chain[1];
      bool under = false;
      for (int h : hs)
        if (l.less(f2, h)) under = true;
      if (under && m.exponents[0] == r.rank() - l.rank(f2) - 1) out.push_back(m);
    } else if (!r.augmented()) {
      if (m.exponents[0] == r.rank() - 1) out.push_back(m);
    } else {
      if (m.exponents[0] == r.rank()) out.push_back(m);
    }
  }
  return out;
}

// ---------------------------------------------------------------- reports

bool CheckReport::pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

void CheckReport::add(std::string what, bool ok, std::string detail) { lines.push_back({std::move(what), ok, std::move(detail)}); }

std::string CheckReport::to_text() const {
  std::ostringstream s;
  for (const auto& l : lines) {
    s << (l.pass ? "ok   " : "FAIL ") << l.what;
    if (!l.detail.empty()) s << "  " << l.detail;
    s << '\n';
  }
  return s.str();
}

ElementSet compress(ElementSet s, ElementSet within) {
  ElementSet out;
  int k = 0;
  for (int e : within.ascending()) {
    ++k;
    if (s.contains(e)) out.insert(k);
  }
  return out;
}

namespace {

std::string hf_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> trimmed(std::vector<int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

// element set of g inside the simplification of t
ElementSet simplified_set(const Matroid& t, ElementSet g) {
  ElementSet out;
  const auto& byr = t.flats_by_rank();
  if (byr.size() < 2) return out;
  int k = 0;
  for (ElementSet a : byr[1]) {
    ++k;
    if (a.is_subset_of(g)) out.insert(k);
  }
  return out;
}

}  // namespace

SubspaceIdeal<Rational> restriction_kernel_oracle(const ChowRing& r, const ChowRing& rf, int f) {
  const Lattice& l = r.lattice();
  ElementSet fs = l.set(f);
  std::vector<Elem<Rational>> images;
  for (int g : r.variable_flats()) {
    Elem<Rational> img{1, {}};
    if (l.leq(g, f)) {
      auto id = rf.lattice().find(compress(l.set(g), fs));
      if (id && rf.is_variable(*id)) img = rf.oracle_variable(*id);
    }
    images.push_back(img);
  }
  return kernel_of_map(r.oracle(), rf.oracle(), images);
}

CheckReport quotient_isomorphism_checks(const ChowRing& r) {
  CheckReport rep;
  const Lattice& l = r.lattice();
  const auto& a = r.oracle();
  std::string tag = r.augmented() ? "aChow" : "Chow";
  int top = l.top();
  if (!r.is_variable(top)) {
    rep.add("rank one: ring is the field", r.hilbert_function() == std::vector<int>{1});
    return rep;
  }
  // truncation
  {
    auto ann = colon(zero_ideal(a), r.oracle_variable(top));
    auto got = ann.quotient_dims();
    Matroid t = truncation(r.matroid());
    if (t.rank() == 0) {
      rep.add("HF(A/(0:x_E)) = HF(" + tag + "(T(M)))", got == std::vector<int>{1}, hf_string(got) + " vs (1)");
    } else {
      Matroid ts = simplify(t);
      ChowRing rt(ts, r.kind());
      auto want = trimmed(rt.hilbert_function());
      rep.add("HF(A/(0:x_E)) = HF(" + tag + "(T(M)))", got == want, hf_string(got) + " vs " + hf_string(want));
      std::vector<Elem<Rational>> images;
      for (int g : r.variable_flats()) {
        Elem<Rational> img{1, {}};
        if (!l.covers(g, top)) {
          auto id = rt.lattice().find(simplified_set(t, l.set(g)));
          if (id && rt.is_variable(*id)) img = rt.oracle_variable(*id);
        }
        images.push_back(img);
      }
      auto ker = kernel_of_map(a, rt.oracle(), images);
      auto closed = realize(r, truncation_annihilator(r));
      rep.add("ker(A -> " + tag + "(T(M))) = (0:x_E)", equals_ideal(ker, ann) && equals_ideal(ker, closed),
              hf_string(ker.dims()) + " vs " + hf_string(closed.dims()));
    }
  }
  // restrictions to hyperplanes
  for (int h : r.hyperplanes()) {
    auto ann = colon(zero_ideal(a), r.oracle_variable(h));
    auto got = ann.quotient_dims();
    ElementSet hs = l.set(h);
    ChowRing rh(restriction(r.matroid(), hs), r.kind());
    auto want = trimmed(rh.hilbert_function());
    std::string name = r.flat_name(h);
    rep.add("HF(A/(0:x_" + name + ")) = HF(" + tag + "(M|" + name + "))", got == want, hf_string(got) + " vs " + hf_string(want));
    auto ker = restriction_kernel_oracle(r, rh, h);
    auto closed = realize(r, restriction_kernel(r, h));
    rep.add("ker(A -> " + tag + "(M|" + name + ")) = (0:x_" + name + ")", equals_ideal(ker, ann) && equals_ideal(ker, closed),
            hf_string(ker.dims()) + " vs " + hf_string(closed.dims()));
  }
  return rep;
}

GorensteinReport gorenstein_report(const ChowRing& r) {
  GorensteinReport rep;
  const auto& a = r.oracle();
  const int s = r.socle_degree();
  std::vector<int> hf;
  for (int d = 0; d <= s; ++d) hf.push_back(a.dim(d));
  for (int d = 0; d <= s; ++d)
    if (hf[static_cast<std::size_t>(d)] != hf[static_cast<std::size_t>(s - d)]) rep.symmetric = false;
  if (a.dim(s + 1) != 0) rep.symmetric = false;
  auto soc = socle(a);
  rep.socle_dims = soc.dims();
  while (rep.socle_dims.size() > static_cast<std::size_t>(s + 1)) rep.socle_dims.pop_back();
  // x_E^s
  Elem<Rational> top_power = a.one();
  if (r.is_variable(r.lattice().top()))
    top_power = a.normal_form(variable_monomial(r.nvars(), r.variable_of(r.lattice().top()), s));
  rep.socle_spanned_by_top_power = !top_power.is_zero() && soc.contains(top_power) && soc.dim(s) == 1;
  for (int d = 0; d < s; ++d)
    if (soc.dim(d) != 0) rep.socle_spanned_by_top_power = false;
  // pairings A_i x A_{s-i} -> A_s
  if (a.dim(s) != 1) {
    rep.pairings_full_rank = false;
    return rep;
  }
  for (int i = 0; i <= s; ++i) {
    int di = a.dim(i), dj = a.dim(s - i);
    RowEchelon<Rational> ech(dj);
    for (int p = 0; p < di; ++p) {
      SparseVec<Rational> row;
      for (int q = 0; q < dj; ++q) {
        auto prod = a.multiply(Elem<Rational>{i, {{p, Rational(1)}}}, Elem<Rational>{s - i, {{q, Rational(1)}}});
        if (!prod.v.empty()) row.emplace_back(q, prod.v[0].second);
      }
      ech.insert(row);
    }
    if (ech.rank() != di || di != dj) rep.pairings_full_rank = false;
  }
  return rep;
}

}  // namespace chowforge
