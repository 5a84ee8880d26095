#include "pqn/report.hpp"

#include <algorithm>

namespace pqn {

void CheckReport::merge(const CheckReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

void CheckReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

bool CheckReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* CheckReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

Json CheckReport::toJson() const {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["id"] = c.id;
    item["pass"] = c.pass;
    if (c.witness) {
      Json w;
      w["name"] = c.witness->name;
      w["defect"] = c.witness->payload;
      item["witness"] = std::move(w);
    }
    arr.push_back(std::move(item));
  }
  return arr;
}

namespace {

template <Variance V>
Json tensorComponents(const AltTensor<V>& t) {
  Json obj = Json::object();
  for (const auto& [idx, c] : t.components())
    obj[AltTensor<V>::componentName(idx)] = c.str(t.chart().varNames());
  return obj;
}

std::string pointString(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

template <Variance V>
Witness tensorWitness(std::string name, const AltTensor<V>& defect, const char* kind) {
  const auto point = defect.chart().samplePoint();
  Json payload;
  payload["kind"] = kind;
  payload["degree"] = defect.degree();
  payload["components"] = tensorComponents(defect);
  Json sample;
  sample["point"] = Json::array();
  for (const auto& r : point) sample["point"].push_back(r.str());
  Json values = Json::object();
  for (const auto& [idx, c] : defect.components())
    values[AltTensor<V>::componentName(idx)] = c.evaluate(point).str();
  sample["values"] = std::move(values);
  payload["sample"] = std::move(sample);

  std::string text = name + ": " + defect.str();
  if (!defect.isZero()) {
    text += " | at " + pointString(point) + ":";
    bool first = true;
    for (const auto& [idx, c] : defect.components()) {
      text += (first ? " " : ", ");
      text += AltTensor<V>::componentName(idx) + " -> " + c.evaluate(point).str();
      first = false;
    }
  }
  return Witness{std::move(name), std::move(text), std::move(payload)};
}

}  // namespace

Json componentsJson(const Form& t) { return tensorComponents(t); }
Json componentsJson(const MultiVector& t) { return tensorComponents(t); }

Witness witnessOf(std::string name, const Form& defect) {
  return tensorWitness(std::move(name), defect, "form");
}

Witness witnessOf(std::string name, const MultiVector& defect) {
  return tensorWitness(std::move(name), defect, "multivector");
}

Witness witnessOf(std::string name, const EndoField& defect) {
  const auto point = defect.chart().samplePoint();
  Json payload;
  payload["kind"] = "endomorphism";
  Json rows = Json::array();
  Json sampleRows = Json::array();
  const int n = defect.chart().dim();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    Json sampleRow = Json::array();
    for (int j = 0; j < n; ++j) {
      row.push_back(defect.entry(i, j).str(defect.chart().varNames()));
      sampleRow.push_back(defect.entry(i, j).evaluate(point).str());
    }
    rows.push_back(std::move(row));
    sampleRows.push_back(std::move(sampleRow));
  }
  payload["matrix"] = std::move(rows);
  Json sample;
  sample["point"] = Json::array();
  for (const auto& r : point) sample["point"].push_back(r.str());
  sample["matrix"] = std::move(sampleRows);
  payload["sample"] = std::move(sample);
  std::string text = name + ": " + defect.str();
  return Witness{std::move(name), std::move(text), std::move(payload)};
}

Witness witnessOf(std::string name, const Polynomial& defect, const Chart& chart) {
  const auto point = chart.samplePoint();
  Json payload;
  payload["kind"] = "polynomial";
  payload["value"] = defect.str(chart.varNames());
  Json sample;
  sample["point"] = Json::array();
  for (const auto& r : point) sample["point"].push_back(r.str());
  sample["value"] = defect.evaluate(point).str();
  payload["sample"] = std::move(sample);
  std::string text = name + ": " + defect.str(chart.varNames()) + " | at " +
                     pointString(point) + ": " + defect.evaluate(point).str();
  return Witness{std::move(name), std::move(text), std::move(payload)};
}

Witness witnessText(std::string name, std::string text) {
  Json payload;
  payload["kind"] = "note";
  payload["note"] = text;
  std::string full = name + ": " + text;
  return Witness{std::move(name), std::move(full), std::move(payload)};
}

}  // namespace pqn
