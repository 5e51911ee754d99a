#include "pacdim/json_io.hpp"

#include <fstream>

namespace pacdim {

Json rational_to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw validation_error("expected a rational string \"p/q\" or an integer");
}

Json domain_to_json(const Domain& d) { return Json{{"size", d.size}}; }

Domain domain_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j["size"].is_number_integer())
    throw validation_error("domain must be {\"size\": N}");
  return Domain(j["size"].get<int>());
}

Json set_to_json(const DomainSet& s) {
  Json arr = Json::array();
  for (int p = s.find_first(); p >= 0; p = s.find_next(p)) arr.push_back(p);
  return arr;
}

DomainSet set_from_json(const Domain& d, const Json& j) {
  if (!j.is_array()) throw validation_error("a set must be an array of points");
  DomainSet s(d);
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw validation_error("set entries must be integers");
    s.set(e.get<int>());
  }
  return s;
}

Json concept_class_to_json(const ConceptClass& c) {
  Json out;
  out["domain"] = c.domain.size;
  Json arr = Json::array();
  for (const auto& set : c.concepts) arr.push_back(set_to_json(set));
  out["concepts"] = std::move(arr);
  if (!c.names.empty()) out["names"] = c.names;
  return out;
}

ConceptClass concept_class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("concepts"))
    throw validation_error("concept class must carry \"domain\" and \"concepts\"");
  ConceptClass c;
  c.domain = Domain(j["domain"].get<int>());
  for (const auto& e : j["concepts"]) c.concepts.push_back(set_from_json(c.domain, e));
  if (j.contains("names")) c.names = j["names"].get<std::vector<std::string>>();
  c.validate();
  return c;
}

Json function_class_to_json(const FunctionClass& f) {
  Json out;
  out["domain"] = f.domain.size;
  Json arr = Json::array();
  for (const auto& table : f.functions) {
    Json row = Json::array();
    for (const auto& v : table) row.push_back(rational_to_json(v));
    arr.push_back(std::move(row));
  }
  out["functions"] = std::move(arr);
  return out;
}

FunctionClass function_class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("functions"))
    throw validation_error("function class must carry \"domain\" and \"functions\"");
  FunctionClass f;
  f.domain = Domain(j["domain"].get<int>());
  for (const auto& row : j["functions"]) {
    std::vector<Rational> table;
    for (const auto& v : row) table.push_back(rational_from_json(v));
    f.functions.push_back(std::move(table));
  }
  f.validate();
  return f;
}

Json measure_to_json(const DiscreteMeasure& mu) {
  Json out;
  out["domain"] = mu.domain().size;
  Json arr = Json::array();
  for (const auto& w : mu.weights()) arr.push_back(rational_to_json(w));
  out["weights"] = std::move(arr);
  return out;
}

DiscreteMeasure measure_from_json(const Json& j) {
  const Json* weights = nullptr;
  std::optional<Domain> dom;
  if (j.is_array()) {
    weights = &j;
  } else if (j.is_object() && j.contains("weights")) {
    weights = &j["weights"];
    if (j.contains("domain")) dom = Domain(j["domain"].get<int>());
  } else {
    throw validation_error("measure must be a weight array or {\"domain\",\"weights\"}");
  }
  std::vector<Rational> w;
  for (const auto& e : *weights) w.push_back(rational_from_json(e));
  if (!dom) dom = Domain(static_cast<int>(w.size()));
  return DiscreteMeasure(*dom, std::move(w));
}

Json null_region_to_json(const NullRegion& z) { return Json{{"z", set_to_json(z.z)}}; }

NullRegion null_region_from_json(const Domain& d, const Json& j) {
  if (!j.is_object() || !j.contains("z"))
    throw validation_error("null region must be {\"z\": [points]}");
  return NullRegion(d, set_from_json(d, j["z"]));
}

Json certificate_to_json(const ShatterCertificate& cert) {
  Json out;
  out["n"] = cert.n;
  Json sel = Json::object();
  for (std::size_t J = 0; J < cert.selectors.size(); ++J)
    sel[std::to_string(J)] = cert.selectors[J];
  out["selectors"] = std::move(sel);
  if (cert.witness) {
    Json levels = Json::array();
    for (const auto& h : cert.witness->levels) levels.push_back(rational_to_json(h));
    out["witness"] = std::move(levels);
  }
  if (cert.epsilon) out["epsilon"] = rational_to_json(*cert.epsilon);
  return out;
}

ShatterCertificate certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("selectors"))
    throw validation_error("certificate must carry \"n\" and \"selectors\"");
  ShatterCertificate cert;
  cert.n = j["n"].get<int>();
  if (cert.n < 0 || cert.n > 24) throw validation_error("certificate n outside supported range");
  cert.selectors.assign(std::size_t{1} << cert.n, -1);
  for (const auto& [key, value] : j["selectors"].items()) {
    std::size_t J = std::stoull(key);
    if (J >= cert.selectors.size())
      throw validation_error("certificate selector key outside 0..2^n-1");
    cert.selectors[J] = value.get<int>();
  }
  for (int idx : cert.selectors)
    if (idx < 0) throw validation_error("certificate selector table must have 2^n entries");
  if (j.contains("witness")) {
    WitnessFunction w;
    for (const auto& e : j["witness"]) w.levels.push_back(rational_from_json(e));
    cert.witness = std::move(w);
  }
  if (j.contains("epsilon")) cert.epsilon = rational_from_json(j["epsilon"]);
  return cert;
}

Json cluster_family_to_json(const ClusterFamily& family) {
  Json out;
  out["domain"] = family.domain.size;
  Json arr = Json::array();
  for (const auto& cluster : family.clusters) arr.push_back(set_to_json(cluster));
  out["clusters"] = std::move(arr);
  return out;
}

ClusterFamily cluster_family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain") || !j.contains("clusters"))
    throw validation_error("cluster family must carry \"domain\" and \"clusters\"");
  ClusterFamily family;
  family.domain = Domain(j["domain"].get<int>());
  for (const auto& e : j["clusters"]) family.clusters.push_back(set_from_json(family.domain, e));
  family.validate();
  return family;
}

Json traced_class_to_json(const TracedClass& traced) {
  Json out;
  out["class"] = concept_class_to_json(traced.cls);
  out["index_map"] = traced.index_map;
  return out;
}

Json profile_to_json(const FatDimensionProfile& profile) {
  Json out = Json::object();
  for (const auto& [scale, dim] : profile.table()) out[format_rational(scale)] = dim;
  return out;
}

FatDimensionProfile profile_from_json(const Json& j) {
  if (!j.is_object()) throw validation_error("profile must map rational scales to dimensions");
  std::map<Rational, int> table;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw validation_error("profile dimensions must be integers");
    table[parse_rational(key)] = value.get<int>();
  }
  return FatDimensionProfile(std::move(table));
}

namespace {

Json quantiles_json(double lo, double q25, double med, double q75, double hi) {
  return Json{{"min", lo}, {"q25", q25}, {"median", med}, {"q75", q75}, {"max", hi}};
}

}  // namespace

Json gc_report_to_json(const GCReport& report, const Rational& eps) {
  Json out;
  out["n"] = report.n;
  out["trials"] = report.trials;
  out["epsilon"] = rational_to_json(eps);
  out["exceed_count"] = report.exceed_count;
  out["deviation_exceed_rate"] = report.deviation_exceed_rate;
  out["deviation_quantiles"] =
      quantiles_json(report.dev_min, report.dev_q25, report.dev_median, report.dev_q75,
                     report.dev_max);
  Json devs = Json::array();
  for (const auto& d : report.deviations) devs.push_back(rational_to_json(d));
  out["deviations"] = std::move(devs);
  out["seed"] = report.seed;
  out["rng"] = report.rng_algorithm;
  return out;
}

Json pac_report_to_json(const PACEvalReport& report, const Rational& eps) {
  Json out;
  out["rule"] = report.rule;
  out["target"] = report.target;
  out["n"] = report.n;
  out["trials"] = report.trials;
  out["epsilon"] = rational_to_json(eps);
  out["exceed_count"] = report.exceed_count;
  out["exceed_rate"] = report.exceed_rate;
  out["rule_error_count"] = report.rule_error_count;
  Json errs = Json::array();
  for (const auto& e : report.errors) errs.push_back(rational_to_json(e));
  out["errors"] = std::move(errs);
  out["error_summary"] =
      Json{{"min", report.err_min}, {"median", report.err_median}, {"max", report.err_max}};
  out["seed"] = report.seed;
  out["rng"] = report.rng_algorithm;
  return out;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open file: " + path);
  return Json::parse(in);  // nlohmann parse_error on malformed input
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw validation_error("failed writing file: " + path);
}

}  // namespace pacdim
