#include "chowforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "chowforge/augmented.hpp"
#include "chowforge/building_sets.hpp"
#include "chowforge/chow_ring.hpp"
#include "chowforge/coatom_order.hpp"
#include "chowforge/corpus.hpp"
#include "chowforge/io.hpp"
#include "chowforge/koszul.hpp"

namespace chowforge {

namespace {

struct Options {
  std::string uniform, matroid_file, corpus, lattice_file, presentation_file, building = "max";
  std::string field, json_out;
  bool augmented = false;
  int imax = 4, jmax = -1, degree = -1;
  long budget = 4000000, samples = 0, max_nodes = 200000;
  std::uint64_t seed = 1;
  double timeout = 0;
  std::string a, b, ideal, by;
  int jobs = 1;
  bool koszul = false, filtration = false;
};

struct Ctx {
  Options o;
  std::ostream& out;
  std::ostream& err;
};

Error usage(const std::string& what) { return Error(ErrorKind::Usage, what); }

FieldDescriptor field_of(const Options& o) {
  if (!o.field.empty()) return parse_field(o.field);
  if (const char* env = std::getenv("CHOWFORGE_FIELD")) return parse_field(env);
  return {};
}

int count_sources(const Options& o) {
  return !o.uniform.empty() + !o.matroid_file.empty() + !o.corpus.empty() + !o.lattice_file.empty() +
         !o.presentation_file.empty();
}

Matroid load_matroid(const Options& o) {
  if (count_sources(o) != 1) throw usage("give exactly one of --uniform, --matroid, --corpus");
  if (!o.uniform.empty()) {
    int r = 0, n = 0;
    char comma = 0;
    std::istringstream s(o.uniform);
    if (!(s >> r >> comma >> n) || comma != ',' || !s.eof()) throw usage("--uniform expects r,n");
    if (r < 0 || n < 1 || r > n || n > kMaxMatroidGround) throw usage("--uniform needs 0 <= r <= n <= 20, n >= 1");
    Matroid m = Matroid::uniform(r, n);
    m.set_name("U" + std::to_string(r) + "," + std::to_string(n));
    return m;
  }
  if (!o.matroid_file.empty()) {
    Matroid m = matroid_from_json(read_json_file(o.matroid_file));
    if (m.name().empty()) m.set_name(o.matroid_file);
    return m;
  }
  if (!o.corpus.empty()) {
    auto m = corpus_matroid(o.corpus);
    if (!m) throw usage("no corpus matroid named '" + o.corpus + "'");
    return *m;
  }
  throw usage("this command needs a matroid source");
}

Lattice load_lattice(const Options& o) {
  if (count_sources(o) != 1) throw usage("give exactly one of --lattice, --uniform, --matroid, --corpus");
  if (!o.lattice_file.empty()) return lattice_from_json(read_json_file(o.lattice_file));
  if (o.corpus == "fig3") return figure3_lattice();
  return Lattice::of_flats(load_matroid(o));
}

std::string ring_name(const ChowRing& r) {
  return std::string(r.augmented() ? "aChow(" : "Chow(") + r.matroid().name() + ")";
}

void emit_json(const Ctx& c, const Json& j) {
  if (c.o.json_out.empty()) return;
  if (c.o.json_out == "-") c.out << j.dump(2) << '\n';
  else write_json_file(c.o.json_out, j);
}

// text goes to stdout unless the JSON report is going there
std::ostream& text(const Ctx& c) {
  static std::ostringstream sink;
  if (c.o.json_out == "-") {
    sink.str("");
    return sink;
  }
  return c.out;
}

std::vector<int> trimmed(std::vector<int> hf) {
  while (hf.size() > 1 && hf.back() == 0) hf.pop_back();
  return hf;
}

// ---------------------------------------------------------------- element parsing

ChowElement parse_element(const ChowRing& r, const std::string& src) {
  if (src.size() > 5 && src.substr(src.size() - 5) == ".json") return element_from_json(r, read_json_file(src));
  std::string s;
  for (char ch : src)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw usage("empty element");
  std::size_t pos = 0;
  auto bad = [&](const std::string& why) { return usage("cannot parse '" + src + "': " + why); };
  auto read_number = [&]() {
    std::size_t st = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    return parse_rational(s.substr(st, pos - st));
  };
  Polynomial total(r.nvars());
  while (pos < s.size()) {
    Rational sign = 1;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    Polynomial term = Polynomial::constant(r.nvars(), sign);
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (s[pos] == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        term = term * Polynomial::constant(r.nvars(), read_number());
      } else if (s[pos] == 'x') {
        std::size_t st = ++pos;
        if (pos < s.size() && s[pos] == '_') st = ++pos;
        std::string flat;
        if (pos < s.size() && s[pos] == '{') {
          auto close = s.find('}', pos);
          if (close == std::string::npos) throw bad("unclosed brace");
          flat = s.substr(pos + 1, close - pos - 1);
          pos = close + 1;
        } else {
          while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == ',')) ++pos;
          flat = s.substr(st, pos - st);
        }
        int f = r.lattice().index_of(ElementSet::parse(flat));
        if (!r.is_variable(f)) throw bad("x_" + flat + " is not a variable");
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          std::size_t es = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (es == pos) throw bad("missing exponent");
          e = std::stoi(s.substr(es, pos - es));
        }
        term = term * Polynomial::variable(r.nvars(), r.variable_of(f)).pow(e);
      } else {
        throw bad(std::string("unexpected '") + s[pos] + "'");
      }
      any = true;
    }
    if (!any) throw bad("empty term");
    total = total + term;
  }
  return r.normal_form(total);
}

std::vector<int> parse_flat_list(const ChowRing& r, const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "0" || text == "()") return out;
  for (int id : parse_elements(r.lattice(), text)) {
    if (!r.is_variable(id)) throw usage(r.flat_name(id) + " is not a variable of " + ring_name(r));
    out.push_back(id);
  }
  return out;
}

// ---------------------------------------------------------------- certificates

template <class K>
KoszulCertificate certify_with_field(const PresentedAlgebra& a, const Options& o) {
  GradedQuotient<K> q(a);
  BettiLimits lim;
  lim.max_domain = o.budget;
  if (o.timeout > 0)
    lim.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(o.timeout));
  return koszul_certificate(q, o.imax, lim, o.jmax);
}

KoszulCertificate certify(PresentedAlgebra a, const Options& o) {
  a.field = field_of(o);
  if (a.field.is_rational()) return certify_with_field<Rational>(a, o);
  ModulusScope scope(a.field.characteristic);
  return certify_with_field<ModP>(a, o);
}

std::vector<int> hilbert_over_field(const PresentedAlgebra& a0, FieldDescriptor f) {
  PresentedAlgebra a = a0;
  a.field = f;
  if (f.is_rational()) return GradedQuotient<Rational>(a).hilbert_function();
  ModulusScope scope(f.characteristic);
  return GradedQuotient<ModP>(a).hilbert_function();
}

struct RingSource {
  std::string name;
  PresentedAlgebra algebra;
};

BuildingSet building_of(const Lattice& l, const std::string& spec) {
  if (spec == "max") return maximal_building_set(l);
  if (spec == "min") return minimal_building_set(l);
  return make_building_set(l, parse_elements(l, spec));
}

RingSource ring_source(const Options& o) {
  if (!o.presentation_file.empty()) {
    if (count_sources(o) != 1) throw usage("give exactly one source");
    auto a = presentation_from_json(read_json_file(o.presentation_file));
    return {a.name.empty() ? o.presentation_file : a.name, a};
  }
  if (!o.lattice_file.empty() || o.corpus == "fig3") {
    Lattice l = load_lattice(o);
    auto d = dlg_presentation(l, building_of(l, o.building), field_of(o));
    return {"D(L,G)", d.algebra};
  }
  ChowRing r(load_matroid(o), o.augmented ? ChowKind::augmented : ChowKind::standard);
  return {ring_name(r), r.presentation()};
}

int report_certificate(const Ctx& c, const std::string& name, const KoszulCertificate& k, bool grid_only) {
  auto& t = text(c);
  t << "ring: " << name << '\n';
  if (grid_only) {
    t << k.betti.to_text();
  } else {
    t << k.to_text();
    if (k.witness) t << "witness: beta_{" << k.witness->first << "," << k.witness->second << "}=" << k.betti.at(k.witness->first, k.witness->second) << '\n';
  }
  Json j;
  j["ring"] = name;
  j["certificate"] = certificate_to_json(k);
  emit_json(c, j);
  if (grid_only) return kExitOk;
  return k.pass() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- commands

int cmd_matroid_info(const Ctx& c) {
  Matroid m = load_matroid(c.o);
  auto& t = text(c);
  t << "name: " << m.name() << '\n' << "ground: " << m.ground_size() << '\n' << "rank: " << m.rank() << '\n';
  t << "simple: " << (m.is_simple() ? "yes" : "no") << '\n' << "flats by rank:";
  Json counts = Json::array();
  for (const auto& row : m.flats_by_rank()) {
    t << ' ' << row.size();
    counts.push_back(row.size());
  }
  t << '\n';
  t << "bases: " << m.bases().size() << '\n';
  Json j = matroid_to_json(m);
  j["rank_of_ground"] = m.rank();
  j["simple"] = m.is_simple();
  j["flat_counts"] = counts;
  emit_json(c, j);
  return kExitOk;
}

int cmd_lattice_show(const Ctx& c) {
  Lattice l = load_lattice(c.o);
  auto& t = text(c);
  for (std::size_t k = 0; k < l.by_rank().size(); ++k) {
    t << "rank " << k << ":";
    for (int x : l.by_rank()[k]) t << ' ' << element_label(l, x);
    t << '\n';
  }
  long covers = 0;
  for (int a = 0; a < l.size(); ++a) covers += static_cast<long>(l.covers_up(a).size());
  t << l.size() << " elements, " << covers << " covers\n";
  emit_json(c, lattice_to_json(l));
  return kExitOk;
}

int cmd_lattice_order(const Ctx& c, bool verify) {
  Lattice l = load_lattice(c.o);
  if (!l.has_sets()) throw usage("the coatom order needs a lattice of flats");
  CoatomOrder ord = coatom_order(l);
  auto& t = text(c);
  Json j;
  Json ranks = Json::array();
  for (std::size_t k = 0; k < l.by_rank().size(); ++k) {
    std::vector<int> row = l.by_rank()[k];
    std::sort(row.begin(), row.end(), [&](int a, int b) { return ord.less(b, a); });
    Json r = Json::array();
    if (!verify) t << "rank " << k << ": ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!verify) t << (i ? " > " : "") << element_label(l, row[i]);
      r.push_back(element_label(l, row[i]));
    }
    if (!verify) t << '\n';
    ranks.push_back(r);
  }
  j["descending_by_rank"] = ranks;
  int code = kExitOk;
  if (verify) {
    auto rep = verify_total_coatom_order(l, ord);
    t << "total coatom order: " << rep.describe(l) << '\n';
    j["pass"] = rep.pass;
    j["report"] = rep.describe(l);
    if (!rep.pass) code = kExitFail;
  }
  emit_json(c, j);
  return code;
}

int cmd_hilbert(const Ctx& c, ChowKind kind) {
  ChowRing r(load_matroid(c.o), kind);
  FieldDescriptor f = field_of(c.o);
  std::vector<int> hf = f.is_rational() ? r.hilbert_function() : trimmed(hilbert_over_field(r.presentation(), f));
  hf = trimmed(hf);
  text(c) << polynomial_string(hf) << '\n';
  Json j;
  j["ring"] = ring_name(r);
  j["field"] = field_to_json(f);
  j["hilbert"] = hf;
  j["series"] = polynomial_string(hf);
  emit_json(c, j);
  return kExitOk;
}

int cmd_basis(const Ctx& c, ChowKind kind) {
  ChowRing r(load_matroid(c.o), kind);
  auto& t = text(c);
  Json j;
  j["ring"] = ring_name(r);
  Json degrees = Json::array();
  int lo = c.o.degree >= 0 ? c.o.degree : 0;
  int hi = c.o.degree >= 0 ? c.o.degree : r.socle_degree();
  for (int d = lo; d <= hi; ++d) {
    auto basis = r.nested_basis(d);
    t << "degree " << d << " (" << basis.size() << "):";
    Json list = Json::array();
    for (const auto& m : basis) {
      t << ' ' << r.to_string(m);
      ChowElement e;
      e.add(m, 1);
      list.push_back(element_to_json(r, e)["terms"][0]);
    }
    t << '\n';
    degrees.push_back({{"degree", d}, {"monomials", list}});
  }
  j["basis"] = degrees;
  emit_json(c, j);
  return kExitOk;
}

int cmd_groebner(const Ctx& c, ChowKind kind) {
  ChowRing r(load_matroid(c.o), kind);
  auto names = r.variable_names();
  auto& t = text(c);
  t << "order: ";
  for (std::size_t i = 0; i < names.size(); ++i) t << (i ? " > " : "") << names[i];
  t << '\n';
  PresentedAlgebra g;
  g.name = "GB " + ring_name(r);
  g.variables = names;
  g.max_degree = r.socle_degree() + 1;
  for (const auto& p : r.groebner_basis()) {
    t << p.to_string(names) << '\n';
    g.relations.push_back(p);
  }
  emit_json(c, presentation_to_json(g));
  return kExitOk;
}

int cmd_presentation(const Ctx& c, ChowKind kind) {
  ChowRing r(load_matroid(c.o), kind);
  auto a = r.presentation();
  a.name = ring_name(r);
  a.field = field_of(c.o);
  auto& t = text(c);
  t << a.name << ": " << a.nvars() << " variables, " << a.relations.size() << " relations\n";
  for (const auto& p : a.relations) t << p.to_string(a.variables) << '\n';
  emit_json(c, presentation_to_json(a));
  return kExitOk;
}

int cmd_multiply(const Ctx& c, ChowKind kind) {
  if (c.o.a.empty() || c.o.b.empty()) throw usage("multiply needs --a and --b");
  ChowRing r(load_matroid(c.o), kind);
  ChowElement p = r.multiply(parse_element(r, c.o.a), parse_element(r, c.o.b));
  text(c) << r.to_string(p) << '\n';
  emit_json(c, element_to_json(r, p));
  return kExitOk;
}

std::optional<IdealDescriptor> closed_form_for(const ChowRing& r, const std::vector<int>& j, int x, std::string& note) {
  const Lattice& l = r.lattice();
  bool hyper = l.covers(x, l.top());
  bool all_hyper = std::all_of(j.begin(), j.end(), [&](int h) { return l.covers(h, l.top()); });
  try {
    if (j.empty() && x == l.top()) return truncation_annihilator(r);
    if (j.empty() && hyper) return hyperplane_annihilator(r, x);
    if (all_hyper && hyper) return hyperplane_set_colon(r, j, x);
    return upset_colon(r, j, x);
  } catch (const Error& e) {
    note = e.what();
  }
  return std::nullopt;
}

int cmd_colon(const Ctx& c, ChowKind kind) {
  if (c.o.by.empty()) throw usage("colon needs --by FLAT");
  ChowRing r(load_matroid(c.o), kind);
  std::vector<int> jf = parse_flat_list(r, c.o.ideal);
  auto by = parse_flat_list(r, c.o.by);
  if (by.size() != 1) throw usage("--by takes one flat");
  int x = by[0];
  auto jr = variable_ideal(r, jf);
  auto cq = colon(jr, r.oracle_variable(x));
  auto ann = colon(zero_ideal(r.oracle()), r.oracle_variable(x));
  auto gens = minimal_generator_counts(cq);
  auto lin = is_generated_by_linear_forms(cq);
  auto& t = text(c);
  std::string jname = "(";
  for (std::size_t i = 0; i < jf.size(); ++i) jname += (i ? ", x_" : "x_") + r.flat_name(jf[i]);
  jname += jf.empty() ? "0)" : ")";
  t << "ring: " << ring_name(r) << '\n' << jname << " : x_" << r.flat_name(x) << '\n';
  t << "dimensions:";
  for (int d = 0; d <= r.socle_degree(); ++d) t << ' ' << cq.dim(d);
  t << "\nminimal generators by degree:";
  for (std::size_t d = 0; d < gens.size(); ++d) t << ' ' << gens[d];
  t << '\n' << "generated by linear forms: " << (lin.linear ? "yes" : "no") << '\n';
  // generators needed beyond the annihilator of x
  auto extra = ann;
  std::vector<int> beyond;
  for (int d = 0; d <= r.oracle().max_degree(); ++d) {
    int need = 0;
    for (const auto& e : cq.spanning_elements())
      if (e.degree == d && !extra.contains(e)) {
        extra = ideal_sum(extra, ideal_span(r.oracle(), std::vector<Elem<Rational>>{e}));
        ++need;
      }
    beyond.push_back(need);
  }
  t << "generators beyond (0 : x_" << r.flat_name(x) << ") by degree:";
  for (int n : beyond) t << ' ' << n;
  t << '\n';
  std::string note;
  auto cf = closed_form_for(r, jf, x, note);
  Json j;
  j["ring"] = ring_name(r);
  j["ideal"] = jname;
  j["by"] = r.flat_name(x);
  j["dims"] = cq.dims();
  j["minimal_generators"] = gens;
  j["linear"] = lin.linear;
  j["beyond_annihilator"] = beyond;
  int code = kExitOk;
  if (cf) {
    bool eq = equals_ideal(cq, realize(r, *cf));
    t << "closed form " << cf->to_string(r) << ": " << (eq ? "matches" : "DIFFERS") << '\n';
    j["closed_form"] = cf->to_string(r);
    j["closed_form_matches"] = eq;
    if (!eq) code = kExitFail;
  } else {
    t << "closed form: not applicable (" << note << ")\n";
    j["closed_form"] = nullptr;
    j["closed_form_note"] = note;
  }
  emit_json(c, j);
  return code;
}

int cmd_koszul(const Ctx& c, bool grid_only) {
  auto src = ring_source(c.o);
  return report_certificate(c, src.name, certify(src.algebra, c.o), grid_only);
}

int cmd_filtration(const Ctx& c) {
  ChowRing r(load_matroid(c.o), c.o.augmented ? ChowKind::augmented : ChowKind::standard);
  WalkOptions w;
  w.max_nodes = c.o.max_nodes;
  w.samples = c.o.samples;
  w.seed = c.o.seed;
  auto rep = verify_filtration(r, w);
  text(c) << "ring: " << ring_name(r) << '\n' << rep.to_text();
  Json j;
  j["ring"] = ring_name(r);
  j["filtration"] = filtration_to_json(rep);
  emit_json(c, j);
  if (!rep.complete) return kExitBudget;
  return rep.pass ? kExitOk : kExitFail;
}

int cmd_dlg_build(const Ctx& c) {
  Lattice l = load_lattice(c.o);
  auto& t = text(c);
  std::vector<int> g;
  if (c.o.building == "max") g = maximal_building_set(l).elements;
  else if (c.o.building == "min") g = minimal_building_set(l).elements;
  else g = parse_elements(l, c.o.building);
  auto rep = is_building_set(l, g);
  if (!rep.ok) {
    t << "not a building set: " << rep.reason << '\n';
    Json j;
    j["building_set"] = false;
    j["witness"] = element_label(l, rep.witness);
    j["reason"] = rep.reason;
    emit_json(c, j);
    return kExitFail;
  }
  auto d = dlg_presentation(l, make_building_set(l, g), field_of(c.o));
  t << "G:";
  for (int x : make_building_set(l, g).elements) t << ' ' << element_label(l, x);
  t << "\nminimal non-nested sets:";
  for (const auto& nf : d.complex.minimal_nonfaces) {
    t << " {";
    for (std::size_t i = 0; i < nf.size(); ++i) t << (i ? "," : "") << element_label(l, nf[i]);
    t << '}';
  }
  t << '\n';
  for (const auto& p : d.algebra.relations) t << p.to_string(d.algebra.variables) << '\n';
  auto hf = trimmed(hilbert_over_field(d.algebra, field_of(c.o)));
  t << "HF: " << polynomial_string(hf) << '\n';
  Json j = presentation_to_json(d.algebra);
  j["hilbert"] = hf;
  emit_json(c, j);
  return kExitOk;
}

int cmd_dlg_certify(const Ctx& c) {
  Lattice l = load_lattice(c.o);
  auto d = dlg_presentation(l, building_of(l, c.o.building), field_of(c.o));
  return report_certificate(c, "D(L,G)", certify(d.algebra, c.o), false);
}

struct CorpusLine {
  std::string text;
  bool pass = true;
  Json json;
};

CorpusLine corpus_job(const CorpusEntry& e, const Options& o) {
  CorpusLine line;
  std::ostringstream s;
  Lattice l = Lattice::of_flats(e.matroid);
  auto order = verify_total_coatom_order(l, coatom_order(l));
  s << e.name << ": " << l.size() << " flats, order " << (order.pass ? "ok" : "FAIL");
  line.json["name"] = e.name;
  line.json["flats"] = l.size();
  line.json["order"] = order.pass;
  line.pass = order.pass;
  for (auto kind : {ChowKind::standard, ChowKind::augmented}) {
    ChowRing r(e.matroid, kind);
    auto hf = trimmed(r.hilbert_function());
    auto ohf = trimmed(r.oracle().hilbert_function());
    bool agree = hf == ohf;
    const char* tag = kind == ChowKind::augmented ? "aChow" : "Chow";
    s << ", " << tag << ' ' << polynomial_string(hf) << (agree ? "" : " (oracle differs)");
    Json rj;
    rj["hilbert"] = hf;
    rj["nested_matches_oracle"] = agree;
    line.pass = line.pass && agree;
    if (o.koszul) {
      auto k = certify(r.presentation(), o);
      s << (k.pass() ? " koszul-ok" : " koszul-FAIL");
      rj["koszul"] = k.pass();
      line.pass = line.pass && k.pass();
    }
    if (o.filtration) {
      WalkOptions w;
      w.max_nodes = o.max_nodes;
      auto f = verify_filtration(r, w);
      s << (f.pass ? " filtration-ok" : " filtration-FAIL");
      rj["filtration"] = f.pass;
      line.pass = line.pass && f.pass;
    }
    line.json[tag] = rj;
  }
  line.text = s.str();
  return line;
}

int cmd_corpus(const Ctx& c) {
  auto corpus = matroid_corpus();
  std::vector<CorpusLine> lines(corpus.size());
  std::vector<std::future<CorpusLine>> futures;
  std::size_t next = 0;
  // bounded pool, results merged in corpus order
  while (next < corpus.size() || !futures.empty()) {
    while (next < corpus.size() && static_cast<int>(futures.size()) < std::max(1, c.o.jobs)) {
      futures.push_back(std::async(std::launch::async, [&, i = next] { return corpus_job(corpus[i], c.o); }));
      ++next;
    }
    std::size_t base = next - futures.size();
    lines[base] = futures.front().get();
    futures.erase(futures.begin());
  }
  auto& t = text(c);
  bool all = true;
  Json j = Json::array();
  for (const auto& l : lines) {
    t << l.text << '\n';
    all = all && l.pass;
    j.push_back(l.json);
  }
  // the raw lattice of the corpus
  Lattice f3 = figure3_lattice();
  auto d = dlg_presentation(f3, maximal_building_set(f3));
  auto hf = trimmed(GradedQuotient<Rational>(d.algebra).hilbert_function());
  t << "fig3: " << f3.size() << " elements, D(L,G_max) " << polynomial_string(hf) << '\n';
  Json out;
  out["matroids"] = j;
  out["fig3_hilbert"] = hf;
  out["pass"] = all;
  emit_json(c, out);
  return all ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- option wiring

void add_source(CLI::App* s, Options& o, bool lattice = false, bool presentation = false) {
  s->add_option("--uniform", o.uniform, "uniform matroid r,n");
  s->add_option("--matroid", o.matroid_file, "matroid JSON file");
  s->add_option("--corpus", o.corpus, "built-in corpus entry");
  if (lattice) s->add_option("--lattice", o.lattice_file, "lattice JSON file (raw or flats)");
  if (presentation) s->add_option("--presentation", o.presentation_file, "presentation JSON file");
  s->add_option("--field", o.field, "coefficient field: Q or a prime");
  s->add_option("--json", o.json_out, "write the JSON report here ('-' for stdout)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Ctx c{Options{}, out, err};
  Options& o = c.o;
  CLI::App app{"Chow rings of matroids: bases, colons, Koszul certificates"};
  app.name("chowforge");
  app.require_subcommand(1);
  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> f) {
    auto* s = parent->add_subcommand(name, help);
    s->callback([&action, f] { action = f; });
    return s;
  };

  auto* matroid = app.add_subcommand("matroid", "matroid queries")->require_subcommand(1);
  add_source(leaf(matroid, "info", "ground set, rank, flat counts", [&] { return cmd_matroid_info(c); }), o);

  auto* lattice = app.add_subcommand("lattice", "lattice of flats")->require_subcommand(1);
  add_source(leaf(lattice, "show", "elements by rank", [&] { return cmd_lattice_show(c); }), o, true);
  add_source(leaf(lattice, "order", "coatom order, largest first", [&] { return cmd_lattice_order(c, false); }), o, true);
  add_source(leaf(lattice, "verify-order", "check the total coatom order", [&] { return cmd_lattice_order(c, true); }), o, true);

  for (auto kind : {ChowKind::standard, ChowKind::augmented}) {
    bool aug = kind == ChowKind::augmented;
    auto* ring = app.add_subcommand(aug ? "achow" : "chow", aug ? "augmented Chow ring" : "Chow ring")->require_subcommand(1);
    add_source(leaf(ring, "hilbert", "Hilbert series", [&, kind] { return cmd_hilbert(c, kind); }), o);
    auto* basis = leaf(ring, "basis", "nested monomial basis", [&, kind] { return cmd_basis(c, kind); });
    add_source(basis, o);
    basis->add_option("--degree", o.degree, "only this degree");
    add_source(leaf(ring, "groebner", "Groebner basis", [&, kind] { return cmd_groebner(c, kind); }), o);
    add_source(leaf(ring, "presentation", "atom-free presentation", [&, kind] { return cmd_presentation(c, kind); }), o);
    auto* mul = leaf(ring, "multiply", "product in normal form", [&, kind] { return cmd_multiply(c, kind); });
    add_source(mul, o);
    mul->add_option("--a", o.a, "element: expression such as 'x_12 + 2*x_123^2', or a .json file")->required();
    mul->add_option("--b", o.b, "element")->required();
    auto* col = leaf(ring, "colon", "(x_F : F in ideal) : x_by", [&, kind] { return cmd_colon(c, kind); });
    add_source(col, o);
    col->add_option("--ideal", o.ideal, "flats generating the ideal, e.g. 1234,2345 (empty for 0)");
    col->add_option("--by", o.by, "flat of the variable")->required();
  }

  auto* koszul = app.add_subcommand("koszul", "Koszul certificates")->require_subcommand(1);
  for (const char* name : {"certify", "betti"}) {
    bool grid = std::string(name) == "betti";
    auto* s = leaf(koszul, name, grid ? "Betti table of k" : "linearity and Froberg identity up to --imax",
                   [&, grid] { return cmd_koszul(c, grid); });
    add_source(s, o, true, true);
    s->add_flag("--augmented", o.augmented, "use the augmented ring");
    s->add_option("--building", o.building, "building set for --lattice: max, min, or a list");
    s->add_option("--imax", o.imax, "homological cutoff");
    s->add_option("--jmax", o.jmax, "internal degree cutoff (default imax + top degree - 1, at least imax+1)");
    s->add_option("--budget", o.budget, "largest free module rank per step");
    s->add_option("--timeout", o.timeout, "seconds");
  }
  auto* filt = leaf(koszul, "filtration", "walk the filtration witness graph", [&] { return cmd_filtration(c); });
  add_source(filt, o);
  filt->add_flag("--augmented", o.augmented, "use the augmented ring");
  filt->add_option("--samples", o.samples, "extra random family members");
  filt->add_option("--seed", o.seed, "sampling seed");
  filt->add_option("--max-nodes", o.max_nodes, "walk budget");

  auto* dlg = app.add_subcommand("dlg", "D(L,G) over a building set")->require_subcommand(1);
  for (const char* name : {"build", "certify"}) {
    bool cert = std::string(name) == "certify";
    auto* s = leaf(dlg, name, cert ? "Koszul certificate of D(L,G)" : "presentation and Hilbert function",
                   [&, cert] { return cert ? cmd_dlg_certify(c) : cmd_dlg_build(c); });
    add_source(s, o, true);
    s->add_option("--building", o.building, "max, min, or element labels such as 1,2,3,123");
    if (cert) {
      s->add_option("--imax", o.imax, "homological cutoff");
      s->add_option("--jmax", o.jmax, "internal degree cutoff (default imax + top degree - 1, at least imax+1)");
      s->add_option("--budget", o.budget, "largest free module rank per step");
      s->add_option("--timeout", o.timeout, "seconds");
    }
  }

  auto* corpus = app.add_subcommand("corpus", "built-in corpus")->require_subcommand(1);
  auto* run = leaf(corpus, "run", "order, Hilbert functions, optional certificates", [&] { return cmd_corpus(c); });
  run->add_option("--field", o.field, "coefficient field: Q or a prime");
  run->add_option("--json", o.json_out, "write the JSON report here ('-' for stdout)");
  run->add_flag("--koszul", o.koszul, "Koszul certificate for every ring");
  run->add_flag("--filtration", o.filtration, "filtration walk for every ring");
  run->add_option("--imax", o.imax, "homological cutoff");
  run->add_option("--budget", o.budget, "largest free module rank per step");
  run->add_option("--max-nodes", o.max_nodes, "walk budget");
  run->add_option("--jobs", o.jobs, "parallel jobs");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!action) {
    err << "usage: no command\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::BudgetExceeded:
      case ErrorKind::CutoffExceeded:
      case ErrorKind::CutoffTooSmall:
      case ErrorKind::NotArtinianWithinCutoff:
        return kExitBudget;
      case ErrorKind::NotABuildingSet:
        return kExitFail;
      default:
        return kExitUsage;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace chowforge
