#include "chowforge/io.hpp"

#include <fstream>
#include <sstream>

namespace chowforge {

namespace {

Json set_to_json(ElementSet s) { return Json(s.ascending()); }

ElementSet set_from_json(const Json& j) {
  if (j.is_string()) return ElementSet::parse(j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "expected an element list");
  ElementSet s;
  for (const auto& e : j) s.insert(e.get<int>());
  return s;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::MalformedSpec, "expected an integer or \"p/q\"");
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::MalformedSpec, std::string("missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

FieldDescriptor parse_field(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "Q" || t == "q" || t == "0") return {};
  if (t.rfind("GF(", 0) == 0 && t.back() == ')') t = t.substr(3, t.size() - 4);
  if (t.rfind("p=", 0) == 0) t = t.substr(2);
  unsigned long p = 0;
  try {
    std::size_t used = 0;
    p = std::stoul(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedSpec, "bad field '" + text + "'");
  }
  if (!is_prime_u32(p) || p > 2147483647UL) throw Error(ErrorKind::MalformedSpec, "field characteristic must be a prime below 2^31");
  FieldDescriptor f;
  f.characteristic = static_cast<std::uint32_t>(p);
  return f;
}

Json field_to_json(const FieldDescriptor& f) {
  if (f.is_rational()) return "Q";
  return Json{{"p", f.characteristic}};
}

FieldDescriptor field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (j.is_object() && j.contains("p")) return parse_field(std::to_string(j.at("p").get<long>()));
  if (j.is_number_integer()) return parse_field(std::to_string(j.get<long>()));
  throw Error(ErrorKind::MalformedSpec, "bad field");
}

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["ground"] = m.ground_size();
  const auto& b = m.backing();
  if (auto u = std::get_if<UniformBacking>(&b)) {
    j["kind"] = "uniform";
    j["rank"] = u->r;
  } else if (auto l = std::get_if<LinearBacking>(&b)) {
    j["kind"] = "linear";
    Json rows = Json::array();
    for (const auto& row : l->rows) {
      Json r = Json::array();
      for (const auto& x : row) r.push_back(format_rational(x));
      rows.push_back(r);
    }
    j["rows"] = rows;
    j["field"] = field_to_json(l->field);
  } else if (auto g = std::get_if<GraphicBacking>(&b)) {
    j["kind"] = "graphic";
    j["vertices"] = g->vertices;
    Json e = Json::array();
    for (auto [u, v] : g->edges) e.push_back({u, v});
    j["edges"] = e;
  } else if (auto bs = std::get_if<BasesBacking>(&b)) {
    j["kind"] = "bases";
    Json a = Json::array();
    for (auto s : bs->bases) a.push_back(set_to_json(s));
    j["bases"] = a;
  } else if (auto fs = std::get_if<FlatsBacking>(&b)) {
    j["kind"] = "flats";
    Json a = Json::array();
    for (auto s : fs->flats) a.push_back(set_to_json(s));
    j["flats"] = a;
  }
  if (!m.name().empty()) j["name"] = m.name();
  return j;
}

Matroid matroid_from_json(const Json& j) {
  int n = need(j, "ground").get<int>();
  std::string kind = need(j, "kind").get<std::string>();
  Matroid m = [&]() -> Matroid {
    if (kind == "uniform") return Matroid::uniform(need(j, "rank").get<int>(), n);
    if (kind == "linear") {
      std::vector<std::vector<Rational>> rows;
      for (const auto& r : need(j, "rows")) {
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(rational_from_json(x));
        rows.push_back(std::move(row));
      }
      for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::MalformedSpec, "row length differs from ground");
      FieldDescriptor f = j.contains("field") ? field_from_json(j.at("field")) : FieldDescriptor{};
      return Matroid::linear(rows, f);
    }
    if (kind == "graphic") {
      std::vector<std::pair<int, int>> edges;
      for (const auto& e : need(j, "edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      if (static_cast<int>(edges.size()) != n) throw Error(ErrorKind::MalformedSpec, "edge count differs from ground");
      return Matroid::graphic(need(j, "vertices").get<int>(), edges);
    }
    if (kind == "bases") {
      std::vector<ElementSet> s;
      for (const auto& e : need(j, "bases")) s.push_back(set_from_json(e));
      return Matroid::from_bases(n, s);
    }
    if (kind == "flats") {
      std::vector<ElementSet> s;
      for (const auto& e : need(j, "flats")) s.push_back(set_from_json(e));
      return Matroid::from_flats(n, s);
    }
    throw Error(ErrorKind::MalformedSpec, "unknown matroid kind '" + kind + "'");
  }();
  if (j.contains("name")) m.set_name(j.at("name").get<std::string>());
  return m;
}

Json lattice_to_json(const Lattice& l) {
  Json j;
  if (l.has_sets() && l.matroid()) {
    const Matroid& m = *l.matroid();
    j["ground"] = m.ground_size();
    j["kind"] = "flats";
    Json ranks = Json::array();
    for (const auto& row : l.by_rank()) {
      Json r = Json::array();
      for (int x : row) r.push_back(set_to_json(l.set(x)));
      ranks.push_back(r);
    }
    j["flats_by_rank"] = ranks;
    Json cov = Json::array();
    for (int a = 0; a < l.size(); ++a)
      for (int b : l.covers_up(a)) cov.push_back({set_to_json(l.set(a)), set_to_json(l.set(b))});
    j["covers"] = cov;
    CoatomOrder ord = coatom_order(l);
    Json co = Json::array();
    for (const auto& row : l.by_rank()) {
      std::vector<int> s = row;
      std::sort(s.begin(), s.end(), [&](int a, int b) { return ord.less(a, b); });
      Json r = Json::array();
      for (int x : s) r.push_back(element_label(l, x));
      co.push_back(r);
    }
    j["coatom_order"] = co;
    return j;
  }
  Json names = Json::array();
  for (int a = 0; a < l.size(); ++a) names.push_back(l.name(a));
  j["elements"] = names;
  Json cov = Json::array();
  for (int a = 0; a < l.size(); ++a)
    for (int b : l.covers_up(a)) cov.push_back({l.name(a), l.name(b)});
  j["covers"] = cov;
  return j;
}

Lattice lattice_from_json(const Json& j) {
  if (j.is_object() && j.contains("elements")) {
    std::vector<std::string> names;
    for (const auto& e : j.at("elements")) names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    auto id = [&](const Json& e) -> int {
      if (e.is_number_integer()) {
        int v = e.get<int>();
        if (v < 0 || v >= static_cast<int>(names.size())) throw Error(ErrorKind::MalformedSpec, "cover id out of range");
        return v;
      }
      std::string s = e.is_string() ? e.get<std::string>() : e.dump();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
      throw Error(ErrorKind::MalformedSpec, "cover names unknown element '" + s + "'");
    };
    std::vector<std::pair<int, int>> covers;
    for (const auto& c : need(j, "covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorKind::MalformedSpec, "cover must be a pair");
      covers.emplace_back(id(c.at(0)), id(c.at(1)));
    }
    return Lattice::from_covers(names, covers);
  }
  if (j.is_object() && j.contains("flats_by_rank")) {
    std::vector<ElementSet> flats;
    for (const auto& row : j.at("flats_by_rank"))
      for (const auto& f : row) flats.push_back(set_from_json(f));
    return Lattice::of_flats(Matroid::from_flats(need(j, "ground").get<int>(), flats));
  }
  return Lattice::of_flats(matroid_from_json(j));
}

Json presentation_to_json(const PresentedAlgebra& a) {
  Json j;
  j["name"] = a.name;
  j["field"] = field_to_json(a.field);
  j["max_degree"] = a.max_degree;
  j["variables"] = a.variables;
  Json rels = Json::array();
  for (const auto& p : a.relations) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      Json t;
      t["exponents"] = std::vector<int>(it->first.begin(), it->first.end());
      t["coeff"] = format_rational(it->second);
      terms.push_back(t);
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return j;
}

PresentedAlgebra presentation_from_json(const Json& j) {
  PresentedAlgebra a;
  if (j.contains("name")) a.name = j.at("name").get<std::string>();
  if (j.contains("field")) a.field = field_from_json(j.at("field"));
  a.variables = need(j, "variables").get<std::vector<std::string>>();
  a.max_degree = need(j, "max_degree").get<int>();
  int nv = a.nvars();
  for (const auto& rel : need(j, "relations")) {
    Polynomial p(nv);
    for (const auto& t : rel) {
      auto e = need(t, "exponents").get<std::vector<int>>();
      if (static_cast<int>(e.size()) != nv) throw Error(ErrorKind::MalformedSpec, "exponent vector has the wrong length");
      Monomial m(e.begin(), e.end());
      p.add_term(m, rational_from_json(need(t, "coeff")));
    }
    a.relations.push_back(p);
  }
  return a;
}

Json betti_to_json(const BettiTable& b) {
  Json j;
  j["i_max"] = b.i_max;
  j["j_max"] = b.j_max;
  Json entries = Json::array();
  for (int i = 0; i <= b.i_max; ++i)
    for (int k = 0; k <= b.j_max; ++k)
      if (b.at(i, k) != 0) entries.push_back({{"i", i}, {"j", k}, {"beta", b.at(i, k)}});
  j["entries"] = entries;
  Json totals = Json::array();
  for (int i = 0; i <= b.i_max; ++i) totals.push_back(b.total(i));
  j["totals"] = totals;
  return j;
}

Json element_to_json(const ChowRing& r, const ChowElement& e) {
  Json j;
  j["augmented"] = r.augmented();
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms) {
    Json t;
    Json chain = Json::array();
    for (int f : m.chain) chain.push_back(set_to_json(r.lattice().set(f)));
    t["chain"] = chain;
    t["exponents"] = m.exponents;
    t["coeff"] = format_rational(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

ChowElement element_from_json(const ChowRing& r, const Json& j) {
  const Json* terms = &j;
  if (j.is_object()) {
    if (j.contains("augmented") && j.at("augmented").get<bool>() != r.augmented())
      throw Error(ErrorKind::MalformedSpec, "element belongs to the other ring kind");
    terms = &need(j, "terms");
  }
  Polynomial p(r.nvars());
  for (const auto& t : *terms) {
    Polynomial mono = Polynomial::constant(r.nvars(), rational_from_json(need(t, "coeff")));
    const auto& chain = need(t, "chain");
    auto ex = need(t, "exponents").get<std::vector<int>>();
    if (ex.size() != chain.size()) throw Error(ErrorKind::MalformedSpec, "chain and exponents differ in length");
    for (std::size_t k = 0; k < chain.size(); ++k) {
      int f = r.lattice().index_of(set_from_json(chain[k]));
      if (!r.is_variable(f)) throw Error(ErrorKind::NotAFlat, r.flat_name(f) + " is not a variable");
      if (ex[k] < 0) throw Error(ErrorKind::MalformedSpec, "negative exponent");
      mono = mono * Polynomial::variable(r.nvars(), r.variable_of(f)).pow(ex[k]);
    }
    p = p + mono;
  }
  return r.normal_form(p);
}

Json certificate_to_json(const KoszulCertificate& c) {
  Json j;
  j["hilbert"] = c.hilbert;
  j["i_max"] = c.i_max;
  j["betti"] = betti_to_json(c.betti);
  Json pc = Json::array();
  for (int i = 0; i <= c.i_max; ++i) pc.push_back(format_rational(c.poincare.coeff(i)));
  j["poincare"] = pc;
  j["linear"] = c.linear;
  j["froberg"] = c.froberg;
  if (c.witness) j["witness"] = {{"i", c.witness->first}, {"j", c.witness->second}, {"beta", c.betti.at(c.witness->first, c.witness->second)}};
  j["pass"] = c.pass();
  return j;
}

Json filtration_to_json(const FiltrationReport& f) {
  Json j;
  j["pass"] = f.pass;
  j["complete"] = f.complete;
  j["visited"] = f.visited;
  j["steps_checked"] = f.steps_checked;
  j["sampled"] = f.sampled;
  j["violations"] = f.violations;
  return j;
}

Json check_report_to_json(const CheckReport& c) {
  Json j;
  j["pass"] = c.pass();
  Json lines = Json::array();
  for (const auto& l : c.lines) lines.push_back({{"check", l.what}, {"pass", l.pass}, {"detail", l.detail}});
  j["checks"] = lines;
  return j;
}

Json hilbert_to_json(const std::vector<int>& hf) { return Json(hf); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::MalformedSpec, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace chowforge
