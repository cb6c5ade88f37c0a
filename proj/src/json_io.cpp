#include "suspla/json_io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace suspla {

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) throw SchemaError(msg);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  expect(j.is_object(), where + " must be a JSON object");
  auto it = j.find(key);
  expect(it != j.end(), where + " is missing the \"" + key + "\" key");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  expect(j.is_string(), where + " must be a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& where) {
  expect(j.is_number_integer(), where + " must be an integer");
  return j.get<int>();
}

/* Linear combinations travel as arrays of [basis name, scalar string].
 * Repeated names are summed on read; writers never produce them. */
Json vec_to_json(const SparseVec& v, const std::function<std::string(int)>& name_of) {
  Json out = Json::array();
  const auto terms = v.terms();
  for (const auto& [idx, c] : terms) out.push_back(Json::array({name_of(idx), c.str()}));
  return out;
}

SparseVec vec_from_json(const Json& j, const Field& field,
                        const std::function<int(const std::string&)>& index_of,
                        const std::string& where) {
  expect(j.is_array(), where + " must be an array of [name, scalar] pairs");
  std::map<int, Scalar> acc;
  for (const auto& item : j) {
    expect(item.is_array() && item.size() == 2, where + " entries must be [name, scalar] pairs");
    const std::string name = as_string(item[0], where + " entry name");
    const int idx = index_of(name);
    expect(idx >= 0, where + " refers to unknown basis element '" + name + "'");
    const Scalar c = Scalar::parse(field, as_string(item[1], where + " entry scalar"));
    auto [it, fresh] = acc.emplace(idx, c);
    if (!fresh) it->second = it->second + c;
  }
  std::vector<SparseVec::Term> terms;
  for (const auto& [idx, c] : acc)
    if (!c.is_zero()) terms.push_back({idx, c});
  return SparseVec::of_terms(std::move(terms));
}

/* Keys of the form "a|b" where both halves are basis names.  Names may
 * themselves contain '|', so every split point is tried and the match must
 * be unique. */
std::pair<int, int> split_pair_key(const std::string& key,
                                   const std::function<int(const std::string&)>& index_of,
                                   const std::string& where) {
  std::vector<std::pair<int, int>> hits;
  for (size_t pos = key.find('|'); pos != std::string::npos; pos = key.find('|', pos + 1)) {
    const int a = index_of(key.substr(0, pos));
    const int b = index_of(key.substr(pos + 1));
    if (a >= 0 && b >= 0) hits.emplace_back(a, b);
  }
  expect(!hits.empty(), where + " key '" + key + "' does not split into two basis names");
  expect(hits.size() == 1, where + " key '" + key + "' splits ambiguously");
  return hits.front();
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << dump_json(j);
  if (!out) throw SchemaError("write to '" + path + "' failed");
}

Json field_to_json(const Field& f) {
  Json j = Json::object();
  if (f.char_zero()) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.p;
  }
  return j;
}

Field field_from_json(const Json& j) {
  const std::string kind = as_string(member(j, "kind", "field"), "field kind");
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    const int p = as_int(member(j, "p", "field"), "field p");
    expect(p >= 2, "field p must be at least 2");
    return Field::prime(static_cast<uint32_t>(p));
  }
  throw SchemaError("unknown field kind '" + kind + "'");
}

Json monoid_to_json(const Monoid& m) {
  Json j = Json::object();
  if (m.kind() == Monoid::Kind::FreeRank1) {
    j["kind"] = "free_rank1";
    j["generator"] = m.generator();
    return j;
  }
  j["kind"] = "finite_table";
  Json elements = Json::array();
  for (int e = 0; e < m.size(); ++e) elements.push_back(m.name(e));
  j["elements"] = std::move(elements);
  j["identity"] = m.identity();
  Json table = Json::array();
  for (int a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < m.size(); ++b) row.push_back(m.mul(a, b));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

Monoid monoid_from_json(const Json& j) {
  const std::string kind = as_string(member(j, "kind", "monoid"), "monoid kind");
  if (kind == "free_rank1")
    return Monoid::free_rank1(as_string(member(j, "generator", "monoid"), "monoid generator"));
  expect(kind == "finite_table", "unknown monoid kind '" + kind + "'");
  const Json& elems = member(j, "elements", "monoid");
  expect(elems.is_array(), "monoid elements must be an array");
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(as_string(e, "monoid element"));
  const int identity = as_int(member(j, "identity", "monoid"), "monoid identity");
  const Json& tab = member(j, "table", "monoid");
  expect(tab.is_array(), "monoid table must be an array of rows");
  std::vector<std::vector<int>> table;
  for (const auto& row : tab) {
    expect(row.is_array(), "monoid table rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(as_int(v, "monoid table entry"));
    table.push_back(std::move(r));
  }
  return Monoid::finite_table(std::move(names), identity, std::move(table));
}

Json lie_to_json(const SuspensiveLie& L) {
  Json j = Json::object();
  j["field"] = field_to_json(L.field());
  j["monoid"] = monoid_to_json(L.monoid());
  const auto name_of = [&L](int idx) { return L.describe(idx); };

  Json basis = Json::array();
  for (int i = 0; i < L.dim(); ++i) {
    Json b = Json::object();
    b["name"] = L.describe(i);
    b["degree"] = L.monoid().name(L.degree_of(i));
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);

  Json action = Json::object();
  for (const auto& [g, images] : L.action_data()) {
    Json per_g = Json::object();
    for (const auto& [idx, img] : images) per_g[L.describe(idx)] = vec_to_json(img, name_of);
    action[L.monoid().name(g)] = std::move(per_g);
  }
  j["action"] = std::move(action);

  Json bracket = Json::object();
  for (const auto& [pair, value] : L.bracket_data())
    bracket[L.describe(pair.first) + "|" + L.describe(pair.second)] = vec_to_json(value, name_of);
  j["bracket"] = std::move(bracket);
  return j;
}

SuspensiveLie lie_from_json(const Json& j) {
  expect(j.is_object(), "lie document must be a JSON object");
  Monoid monoid = monoid_from_json(member(j, "monoid", "lie document"));
  Field field = Field::rationals();
  if (j.contains("field")) field = field_from_json(j.at("field"));

  const Json& basis_j = member(j, "basis", "lie document");
  expect(basis_j.is_array(), "lie basis must be an array");
  std::vector<BasisElement> basis;
  for (const auto& b : basis_j) {
    const std::string name = as_string(member(b, "name", "lie basis entry"), "lie basis name");
    const std::string deg = as_string(member(b, "degree", "lie basis entry"), "lie basis degree");
    basis.push_back({name, monoid.parse_element(deg)});
  }
  SuspensiveLie L(field, monoid, std::move(basis));

  const auto index_of = [&L](const std::string& n) { return L.index_of(n); };
  if (j.contains("action")) {
    const Json& action = j.at("action");
    expect(action.is_object(), "lie action must be an object keyed by monoid elements");
    for (const auto& [gname, images] : action.items()) {
      const int g = L.monoid().parse_element(gname);
      expect(images.is_object(), "lie action block must be an object keyed by basis names");
      for (const auto& [bname, img] : images.items()) {
        const int idx = L.index_of(bname);
        expect(idx >= 0, "lie action refers to unknown basis element '" + bname + "'");
        L.set_action(g, idx, vec_from_json(img, L.field(), index_of, "lie action image"));
      }
    }
  }
  if (j.contains("bracket")) {
    const Json& bracket = j.at("bracket");
    expect(bracket.is_object(), "lie bracket must be an object keyed by basis pairs");
    for (const auto& [key, value] : bracket.items()) {
      const auto [a, b] = split_pair_key(key, index_of, "lie bracket");
      L.set_bracket(a, b, vec_from_json(value, L.field(), index_of, "lie bracket value"));
    }
  }
  return L;
}

Json bialgebra_to_json(const PresentedBialgebra& A, const RigidStructure* rigid) {
  Json j = Json::object();
  j["field"] = field_to_json(A.field());
  if (A.graded()) j["monoid"] = monoid_to_json(A.monoid());
  const auto name_of = [&A](int idx) { return A.name(idx); };

  Json basis = Json::array();
  for (int i = 0; i < A.dim(); ++i) {
    Json b = Json::object();
    b["name"] = A.name(i);
    if (A.graded()) b["degree"] = A.monoid().name(*A.degree_of(i));
    basis.push_back(std::move(b));
  }
  j["basis"] = std::move(basis);

  j["unit"] = vec_to_json(A.unit(), name_of);

  Json counit = Json::object();
  for (const auto& [idx, c] : A.counit_table()) counit[A.name(idx)] = c.str();
  j["counit"] = std::move(counit);

  Json mult = Json::object();
  for (const auto& [pair, value] : A.mult_table())
    mult[A.name(pair.first) + "|" + A.name(pair.second)] = vec_to_json(value, name_of);
  for (const auto& pair : A.overflow_pairs())
    mult[A.name(pair.first) + "|" + A.name(pair.second)] = "overflow";
  j["mult"] = std::move(mult);

  Json comult = Json::object();
  for (const auto& [idx, t] : A.comult_table()) {
    Json terms = Json::array();
    const auto& tt = t.terms();
    for (const auto& [legs, c] : tt)
      terms.push_back(Json::array({A.name(legs.first), A.name(legs.second), c.str()}));
    comult[A.name(idx)] = std::move(terms);
  }
  j["comult"] = std::move(comult);

  if (rigid != nullptr) {
    Json rj = Json::object();
    rj["monoid"] = monoid_to_json(rigid->monoid);
    Json eta = Json::object();
    for (const auto& [g, v] : rigid->eta) {
      const auto terms = v.terms();
      expect(terms.size() == 1 && terms.front().second.is_one(),
             "rigid eta of '" + rigid->monoid.name(g) +
                 "' is not a basis vector and has no document form");
      eta[rigid->monoid.name(g)] = A.name(terms.front().first);
    }
    rj["eta"] = std::move(eta);
    j["rigid"] = std::move(rj);
  }
  return j;
}

PresentedBialgebra bialgebra_from_json(const Json& j) {
  expect(j.is_object(), "bialgebra document must be a JSON object");
  const Field field = field_from_json(member(j, "field", "bialgebra document"));

  std::optional<Monoid> monoid;
  if (j.contains("monoid")) monoid = monoid_from_json(j.at("monoid"));
  else if (j.contains("rigid")) monoid = monoid_from_json(member(j.at("rigid"), "monoid", "rigid block"));

  const Json& basis_j = member(j, "basis", "bialgebra document");
  expect(basis_j.is_array(), "bialgebra basis must be an array");

  std::vector<PresentedBialgebra::Element> graded_basis;
  std::vector<std::string> plain_names;
  bool any_degree = false;
  for (const auto& b : basis_j) {
    const std::string name = as_string(member(b, "name", "bialgebra basis entry"), "basis name");
    plain_names.push_back(name);
    PresentedBialgebra::Element e;
    e.name = name;
    if (b.contains("degree")) {
      any_degree = true;
      expect(monoid.has_value(), "bialgebra basis has degrees but no monoid is declared");
      e.degree = monoid->parse_element(as_string(b.at("degree"), "basis degree"));
    }
    graded_basis.push_back(std::move(e));
  }
  if (any_degree)
    for (const auto& e : graded_basis)
      expect(e.degree.has_value(), "bialgebra basis mixes graded and ungraded entries");

  PresentedBialgebra A = any_degree
                             ? PresentedBialgebra(field, *monoid, std::move(graded_basis))
                             : PresentedBialgebra(field, std::move(plain_names));
  const auto index_of = [&A](const std::string& n) { return A.index_of(n); };

  A.set_unit(vec_from_json(member(j, "unit", "bialgebra document"), field, index_of, "unit"));

  const Json& counit = member(j, "counit", "bialgebra document");
  expect(counit.is_object(), "counit must be an object keyed by basis names");
  for (const auto& [name, value] : counit.items()) {
    const int idx = A.index_of(name);
    expect(idx >= 0, "counit refers to unknown basis element '" + name + "'");
    A.set_counit(idx, Scalar::parse(field, as_string(value, "counit value")));
  }

  const Json& mult = member(j, "mult", "bialgebra document");
  expect(mult.is_object(), "mult must be an object keyed by basis pairs");
  for (const auto& [key, value] : mult.items()) {
    const auto [a, b] = split_pair_key(key, index_of, "mult");
    if (value.is_string()) {
      expect(value.get<std::string>() == "overflow",
             "mult entry '" + key + "' must be a term array or the string \"overflow\"");
      A.set_mult_overflow(a, b);
    } else {
      A.set_mult(a, b, vec_from_json(value, field, index_of, "mult value"));
    }
  }

  const Json& comult = member(j, "comult", "bialgebra document");
  expect(comult.is_object(), "comult must be an object keyed by basis names");
  for (const auto& [name, terms] : comult.items()) {
    const int idx = A.index_of(name);
    expect(idx >= 0, "comult refers to unknown basis element '" + name + "'");
    expect(terms.is_array(), "comult entries must be arrays of [left, right, scalar] triples");
    std::vector<Tensor2::Term> parsed;
    for (const auto& t : terms) {
      expect(t.is_array() && t.size() == 3,
             "comult entries must be arrays of [left, right, scalar] triples");
      const int l = A.index_of(as_string(t[0], "comult left leg"));
      const int r = A.index_of(as_string(t[1], "comult right leg"));
      expect(l >= 0 && r >= 0, "comult term of '" + name + "' uses an unknown basis element");
      parsed.push_back({{l, r}, Scalar::parse(field, as_string(t[2], "comult scalar"))});
    }
    A.set_comult(idx, Tensor2::of_terms(std::move(parsed)));
  }
  return A;
}

std::optional<RigidStructure> rigid_from_json(const Json& j, const PresentedBialgebra& A) {
  if (!j.is_object() || !j.contains("rigid")) return std::nullopt;
  const Json& rj = j.at("rigid");
  Monoid monoid = monoid_from_json(member(rj, "monoid", "rigid block"));
  if (A.graded())
    expect(monoid == A.monoid(), "rigid monoid differs from the grading monoid");
  RigidStructure rigid{std::move(monoid), {}};
  const Json& eta = member(rj, "eta", "rigid block");
  expect(eta.is_object(), "rigid eta must be an object keyed by monoid elements");
  for (const auto& [gname, bname] : eta.items()) {
    const int g = rigid.monoid.parse_element(gname);
    const int idx = A.index_of(as_string(bname, "rigid eta value"));
    expect(idx >= 0, "rigid eta of '" + gname + "' names an unknown basis element");
    rigid.eta[g] = SparseVec::unit(idx, Scalar::one(A.field()));
  }
  return rigid;
}

Json envelope_to_json(const TruncatedEnvelope& env) {
  Json j = bialgebra_to_json(env.algebra, &env.rigid);
  Json filtration = Json::object();
  for (int i = 0; i < env.algebra.dim(); ++i) filtration[env.algebra.name(i)] = env.level[i];
  j["filtration"] = std::move(filtration);
  Json window = Json::array();
  const auto& elems = env.window.elements();
  for (int e : elems) window.push_back(env.window.monoid().name(e));
  j["window"] = std::move(window);
  j["lie_cap"] = env.lie_cap;
  return j;
}

Json mm_report_to_json(const MMReport& r, const DegreeWindow& window, std::uint64_t seed) {
  Json j = Json::object();
  switch (r.verdict) {
    case Status::Pass: j["verdict"] = "pass"; break;
    case Status::Fail: j["verdict"] = "fail"; break;
    case Status::Indeterminate: j["verdict"] = "indeterminate"; break;
  }
  Json dims = Json::object();
  for (const auto& [degree, labels] : r.per_degree_dims) {
    Json per = Json::object();
    for (const auto& [label, d] : labels) per[label] = d;
    dims[window.monoid().name(degree)] = std::move(per);
  }
  j["per_degree_dims"] = std::move(dims);
  j["witnesses"] = r.witnesses;
  Json welems = Json::array();
  const auto& elems = window.elements();
  for (int e : elems) welems.push_back(window.monoid().name(e));
  j["window"] = std::move(welems);
  j["seed"] = seed;
  return j;
}

}  // namespace suspla
