#include "pacdim/classes.hpp"

#include <map>

namespace pacdim {

void ConceptClass::validate() const {
  if (concepts.empty()) throw validation_error("concept class must be nonempty");
  for (const auto& c : concepts)
    if (c.domain() != domain)
      throw validation_error("concept domain differs from class domain");
  if (!names.empty() && names.size() != concepts.size())
    throw validation_error("names must be empty or match the number of concepts");
}

ValidationReport ConceptClass::validation_report() const {
  ValidationReport report;
  try {
    validate();
  } catch (const validation_error& e) {
    report.valid = false;
    report.problems.push_back(e.what());
    return report;
  }
  std::map<std::vector<std::uint64_t>, int> seen;
  for (int i = 0; i < size(); ++i) {
    auto [it, inserted] = seen.try_emplace(concepts[i].blocks(), i);
    if (!inserted)
      report.warnings.push_back("duplicate concepts at indices " + std::to_string(it->second) +
                                " and " + std::to_string(i));
  }
  return report;
}

void FunctionClass::validate() const {
  if (functions.empty()) throw validation_error("function class must be nonempty");
  for (const auto& table : functions) {
    if (static_cast<int>(table.size()) != domain.size)
      throw validation_error("value table does not cover the full domain");
    for (const auto& v : table)
      if (numerator(v) < 0 || numerator(v) > denominator(v))
        throw validation_error("function value outside [0,1]");
  }
}

ValidationReport FunctionClass::validation_report() const {
  ValidationReport report;
  try {
    validate();
  } catch (const validation_error& e) {
    report.valid = false;
    report.problems.push_back(e.what());
    return report;
  }
  auto cmp = [this](int a, int b) { return functions[a] < functions[b]; };
  std::map<int, int, decltype(cmp)> seen(cmp);
  for (int i = 0; i < size(); ++i) {
    auto [it, inserted] = seen.try_emplace(i, i);
    if (!inserted)
      report.warnings.push_back("duplicate functions at indices " +
                                std::to_string(it->second) + " and " + std::to_string(i));
  }
  return report;
}

FunctionClass indicator_class(const ConceptClass& c) {
  c.validate();
  FunctionClass f;
  f.domain = c.domain;
  f.functions.reserve(c.concepts.size());
  for (const auto& set : c.concepts) {
    std::vector<Rational> table(c.domain.size, Rational(0));
    for (int p = set.find_first(); p >= 0; p = set.find_next(p)) table[p] = 1;
    f.functions.push_back(std::move(table));
  }
  return f;
}

void LabeledSample::validate(const Domain& domain, bool binary_labels) const {
  if (points.size() != labels.size())
    throw validation_error("sample points and labels differ in length");
  for (int p : points)
    if (p < 0 || p >= domain.size) throw validation_error("sample point outside domain");
  for (const auto& r : labels) {
    if (r < 0 || r > 1) throw validation_error("sample label outside [0,1]");
    if (binary_labels && r != 0 && r != 1)
      throw validation_error("sample label must be 0 or 1 for concept classes");
  }
}

bool LabeledSample::binary() const {
  for (const auto& r : labels)
    if (r != 0 && r != 1) return false;
  return true;
}

LabeledSample label_by_concept(const std::vector<int>& points, const DomainSet& target) {
  LabeledSample s;
  s.points = points;
  s.labels.reserve(points.size());
  for (int p : points) s.labels.emplace_back(target.test(p) ? 1 : 0);
  return s;
}

LabeledSample label_by_function(const std::vector<int>& points,
                                const std::vector<Rational>& target) {
  LabeledSample s;
  s.points = points;
  s.labels.reserve(points.size());
  for (int p : points) s.labels.push_back(target.at(p));
  return s;
}

}  // namespace pacdim
