#include "pqn/specfile.hpp"

#include <algorithm>
#include <set>

#include "pqn/error.hpp"
#include "pqn/poly_parser.hpp"

namespace pqn {

const std::vector<std::pair<SuiteId, std::string>>& suiteNames() {
  static const std::vector<std::pair<SuiteId, std::string>> table = {
      {SuiteId::PqnAxioms, "pqn-axioms"},
      {SuiteId::DeformTheorem, "deform-theorem"},
      {SuiteId::BracketIdentities, "bracket-identities"},
      {SuiteId::CourantAxioms, "courant-axioms"},
      {SuiteId::ThmCourant, "thm-courant"},
      {SuiteId::LemmaIdentities, "lemma-identities"},
  };
  return table;
}

std::optional<SuiteId> suiteFromName(const std::string& name) {
  for (const auto& [id, n] : suiteNames())
    if (n == name) return id;
  return std::nullopt;
}

const std::string& suiteName(SuiteId id) {
  for (const auto& [i, n] : suiteNames())
    if (i == id) return n;
  throw Error("unknown suite id");
}

SpecFile::SpecFile(Chart chart_, MultiVector pi_, EndoField n_, Form phi_)
    : chart(std::move(chart_)), pi(std::move(pi_)), n(std::move(n_)), phi(std::move(phi_)) {}

bool operator==(const SpecFile& a, const SpecFile& b) {
  return a.chart == b.chart && a.pi == b.pi && a.n == b.n && a.phi == b.phi &&
         a.omega == b.omega && a.suites == b.suites && a.seed == b.seed &&
         a.degreeCap == b.degreeCap && a.provenance == b.provenance;
}

namespace {

[[noreturn]] void specError(const std::string& message) { throw ParseError(message, 1, 1); }

IndexTuple parseTupleKey(const std::string& key, int dim, int arity) {
  std::string body = key;
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    specError("component key '" + key + "' must look like \"(i,j,...)\"");
  body = body.substr(1, body.size() - 2);
  IndexTuple tuple;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // tolerate surrounding spaces
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty() || !std::all_of(item.begin(), item.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      specError("component key '" + key + "' has a malformed index");
    const long v = std::stol(item);
    if (v < 1 || v > dim)
      specError("index " + std::to_string(v) + " in key '" + key + "' out of range 1.." +
                std::to_string(dim));
    tuple.push_back(static_cast<int>(v - 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(tuple.size()) != arity)
    specError("component key '" + key + "' must have " + std::to_string(arity) + " indices");
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] <= tuple[i - 1])
      specError("component key '" + key + "' is not strictly increasing");
  return tuple;
}

std::string tupleKey(const IndexTuple& tuple) {
  std::string key = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(tuple[i] + 1);
  }
  return key + ")";
}

template <Variance V>
AltTensor<V> parseSparseTensor(const Json& obj, const Chart& chart, int degree, const char* what) {
  AltTensor<V> t(chart, degree);
  if (!obj.is_object()) specError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string()) specError(std::string(what) + " components must be strings");
    const IndexTuple tuple = parseTupleKey(key, chart.dim(), degree);
    Polynomial p = parsePolynomial(value.template get<std::string>(), chart);
    if (p.isZero()) continue;
    if (!t.component(tuple).isZero())
      specError(std::string(what) + " has a duplicate component " + key);
    t.accumulate(tuple, p);
  }
  return t;
}

template <Variance V>
Json sparseTensorJson(const AltTensor<V>& t) {
  Json obj = Json::object();
  for (const auto& [idx, c] : t.components()) obj[tupleKey(idx)] = c.str(t.chart().varNames());
  return obj;
}

void rejectUnknownKeys(const Json& doc) {
  static const std::set<std::string> known = {"dim",   "vars",  "pi",         "N",
                                              "phi",   "omega", "suites",     "seed",
                                              "degree_cap",     "provenance"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known.count(key)) specError("unknown key '" + key + "' in spec file");
  }
}

}  // namespace

SpecFile parseSpec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; recover line/column from it.
    int line = 1, column = 1;
    for (std::size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }
  if (!doc.is_object()) specError("spec file must be a JSON object");
  rejectUnknownKeys(doc);

  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    specError("spec file needs an integer \"dim\"");
  const int dim = doc["dim"].get<int>();
  if (dim < 1 || dim > 6) specError("dim must be in 1..6");

  std::vector<std::string> names;
  if (doc.contains("vars")) {
    if (!doc["vars"].is_array()) specError("\"vars\" must be an array of names");
    for (const auto& v : doc["vars"]) {
      if (!v.is_string()) specError("\"vars\" entries must be strings");
      names.push_back(v.get<std::string>());
    }
  } else {
    names = Chart::standard(dim).varNames();
  }
  Chart chart(dim, std::move(names));

  // The cap applies while parsing component polynomials. An explicit
  // degree_cap entry wins; otherwise the ambient cap (environment/default,
  // installed by the caller) stays in force.
  int degreeCap = polynomialDegreeCap();
  if (doc.contains("degree_cap")) {
    if (!doc["degree_cap"].is_number_integer()) specError("\"degree_cap\" must be an integer");
    degreeCap = doc["degree_cap"].get<int>();
    if (degreeCap < 1) specError("\"degree_cap\" must be positive");
  }
  const int previousCap = polynomialDegreeCap();
  setPolynomialDegreeCap(degreeCap);

  try {
    MultiVector pi = doc.contains("pi")
                         ? parseSparseTensor<Variance::Contravariant>(doc["pi"], chart, 2, "\"pi\"")
                         : MultiVector(chart, 2);

    EndoField n(chart);
    if (doc.contains("N")) {
      const Json& mat = doc["N"];
      if (!mat.is_array() || static_cast<int>(mat.size()) != dim)
        specError("\"N\" must be an n x n matrix of polynomial strings");
      for (int i = 0; i < dim; ++i) {
        if (!mat[i].is_array() || static_cast<int>(mat[i].size()) != dim)
          specError("\"N\" must be an n x n matrix of polynomial strings");
        for (int j = 0; j < dim; ++j) {
          if (!mat[i][j].is_string()) specError("\"N\" entries must be polynomial strings");
          n.setEntry(i, j, parsePolynomial(mat[i][j].get<std::string>(), chart));
        }
      }
    } else {
      n = EndoField::identity(chart);
    }

    Form phi = doc.contains("phi")
                   ? parseSparseTensor<Variance::Covariant>(doc["phi"], chart, 3, "\"phi\"")
                   : Form(chart, 3);

    SpecFile spec(chart, std::move(pi), std::move(n), std::move(phi));
    spec.degreeCap = degreeCap;

    if (doc.contains("omega"))
      spec.omega = parseSparseTensor<Variance::Covariant>(doc["omega"], chart, 2, "\"omega\"");

    if (doc.contains("suites")) {
      if (!doc["suites"].is_array()) specError("\"suites\" must be an array of suite names");
      for (const auto& s : doc["suites"]) {
        if (!s.is_string()) specError("\"suites\" entries must be strings");
        const auto id = suiteFromName(s.get<std::string>());
        if (!id) specError("unknown suite '" + s.get<std::string>() + "'");
        spec.suites.push_back(*id);
      }
    }

    if (doc.contains("seed")) {
      if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
        specError("\"seed\" must be an integer");
      spec.seed = doc["seed"].get<std::uint64_t>();
    }

    if (doc.contains("provenance")) {
      if (!doc["provenance"].is_object()) specError("\"provenance\" must be an object");
      spec.provenance = doc["provenance"];
    }

    setPolynomialDegreeCap(previousCap);
    return spec;
  } catch (...) {
    setPolynomialDegreeCap(previousCap);
    throw;
  }
}

Json specToJson(const SpecFile& spec) {
  Json doc;
  doc["dim"] = spec.chart.dim();
  doc["vars"] = spec.chart.varNames();
  doc["pi"] = sparseTensorJson(spec.pi);
  Json mat = Json::array();
  for (int i = 0; i < spec.chart.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < spec.chart.dim(); ++j)
      row.push_back(spec.n.entry(i, j).str(spec.chart.varNames()));
    mat.push_back(std::move(row));
  }
  doc["N"] = std::move(mat);
  doc["phi"] = sparseTensorJson(spec.phi);
  if (spec.omega) doc["omega"] = sparseTensorJson(*spec.omega);
  if (!spec.suites.empty()) {
    Json arr = Json::array();
    for (const auto id : spec.suites) arr.push_back(suiteName(id));
    doc["suites"] = std::move(arr);
  }
  doc["seed"] = spec.seed;
  doc["degree_cap"] = spec.degreeCap;
  if (!spec.provenance.is_null()) doc["provenance"] = spec.provenance;
  return doc;
}

std::string printSpec(const SpecFile& spec) { return specToJson(spec).dump(2) + "\n"; }

std::string inputDigest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace pqn
