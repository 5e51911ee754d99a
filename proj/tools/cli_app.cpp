#include "cli_app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pacdim/bounds.hpp"
#include "pacdim/errors.hpp"
#include "pacdim/generators.hpp"
#include "pacdim/json_io.hpp"
#include "pacdim/packing.hpp"
#include "pacdim/sampling.hpp"

namespace pacdim::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputOptions {
  std::string out_path;  // empty = stdout
  std::string csv_path;
  bool timing = false;
};

struct GenSpec {
  std::string kind;
  std::map<std::string, long long> params;
};

std::optional<GenSpec> parse_gen_spec(const std::string& spec) {
  if (spec.rfind("gen:", 0) != 0) return std::nullopt;
  GenSpec g;
  std::string rest = spec.substr(4);
  auto colon = rest.find(':');
  g.kind = rest.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream ss(rest.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw validation_error("malformed generator parameter: " + item);
      g.params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    }
  }
  return g;
}

long long gen_param(const GenSpec& g, const std::string& key) {
  auto it = g.params.find(key);
  if (it == g.params.end())
    throw validation_error("generator " + g.kind + " needs parameter " + key);
  return it->second;
}

/// A class argument: an explicit file, or a generator expression.
struct LoadedClass {
  std::optional<ConceptClass> concepts;
  std::optional<FunctionClass> functions;
  std::optional<IntervalCodeClass> coded;
  std::optional<FiniteCofiniteFamily> family;  // closed-form family for pac-sim
  std::string description;
  std::vector<std::string> warnings;

  Domain domain() const {
    if (concepts) return concepts->domain;
    if (functions) return functions->domain;
    if (coded) return coded->functions.domain;
    if (family) return Domain(family->n_points);
    throw validation_error("class not loaded");
  }
};

GeneratorGuard make_guard(long long cap, std::optional<std::uint64_t> seed) {
  GeneratorGuard guard;
  if (cap > 0) guard.cap = static_cast<std::size_t>(cap);
  guard.subsample_seed = seed;
  return guard;
}

void note_guard(const GuardInfo& info, LoadedClass& loaded) {
  if (info.subsampled)
    loaded.warnings.push_back("enumeration guard: subsampled " + std::to_string(info.emitted) +
                              " of " + info.full_size + " members");
}

/// `implicit_families` keeps gen:finite-cofinite symbolic (closed-form
/// full-family rules) instead of materializing; pac-sim wants that.
LoadedClass load_class(const std::string& spec, const GeneratorGuard& guard,
                       bool implicit_families) {
  LoadedClass loaded;
  loaded.description = spec;
  if (auto gen = parse_gen_spec(spec)) {
    if (gen->kind == "finite-cofinite") {
      int n = static_cast<int>(gen_param(*gen, "N"));
      int m = static_cast<int>(gen_param(*gen, "m"));
      if (implicit_families) {
        loaded.family = FiniteCofiniteFamily{n, m, OrderPreset::kDudleyDurst};
      } else {
        GuardInfo info;
        loaded.concepts = gen_finite_cofinite(n, m, guard, &info);
        note_guard(info, loaded);
      }
    } else if (gen->kind == "initial-segments") {
      loaded.concepts = gen_initial_segments(static_cast<int>(gen_param(*gen, "N")));
    } else if (gen->kind == "interval-code") {
      GuardInfo info;
      loaded.coded = gen_interval_code(static_cast<int>(gen_param(*gen, "n")),
                                       static_cast<int>(gen_param(*gen, "grid")), guard, &info);
      note_guard(info, loaded);
    } else {
      throw validation_error("unknown generator: " + gen->kind);
    }
    return loaded;
  }
  Json j = load_json_file(spec);
  if (j.contains("concepts"))
    loaded.concepts = concept_class_from_json(j);
  else if (j.contains("functions"))
    loaded.functions = function_class_from_json(j);
  else
    throw validation_error("class file must carry \"concepts\" or \"functions\"");
  return loaded;
}

const ConceptClass& require_concepts(const LoadedClass& loaded) {
  if (loaded.concepts) return *loaded.concepts;
  throw validation_error("this command needs a concept class");
}

/// Function-typed view: plain function classes, coded classes, or the
/// indicator tables of a concept class.
FunctionClass function_view(const LoadedClass& loaded) {
  if (loaded.functions) return *loaded.functions;
  if (loaded.coded) return loaded.coded->functions;
  if (loaded.concepts) return indicator_class(*loaded.concepts);
  throw validation_error("this command needs a function class");
}

DiscreteMeasure load_measure(const std::string& spec, const Domain& domain) {
  if (spec.empty() || spec == "uniform") return DiscreteMeasure::uniform(domain);
  DiscreteMeasure mu = measure_from_json(load_json_file(spec));
  if (mu.domain() != domain)
    throw validation_error("measure domain does not match the class domain");
  return mu;
}

std::string echo_command(int argc, char** argv) {
  std::string echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo += ' ';
    echo += argv[i];
  }
  return echo;
}

void emit_report(const Json& payload, const std::string& command,
                 const std::vector<std::string>& warnings, const OutputOptions& out,
                 const std::optional<Json>& rng, double elapsed_ms) {
  Json report;
  report["command"] = command;
  report["payload"] = payload;
  report["version"] = kVersion;
  report["warnings"] = warnings;
  if (rng) report["rng"] = *rng;
  if (out.timing) report["timing_ms"] = elapsed_ms;
  std::string text = canonical_dump(report);
  if (out.out_path.empty())
    std::cout << text;
  else
    write_text_file(out.out_path, text);
  std::cerr << "done in " << elapsed_ms << " ms\n";
}

void emit_csv(const std::string& path, const std::string& header,
              const std::vector<Rational>& values, const Rational& eps) {
  std::string csv = header + "\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    csv += std::to_string(i) + "," + format_rational(values[i]) + "," +
           (values[i] > eps ? "1" : "0") + "\n";
  write_text_file(path, csv);
}

int env_threads() {
  if (const char* env = std::getenv("PACDIM_THREADS")) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

struct ConstraintOptions {
  long long min_size = 0;
  std::string not_null_file;
  std::string null_points;  // inline "1,2,3" form

  ClusterConstraint build(const Domain& domain) const {
    std::optional<NullRegion> region;
    if (!not_null_file.empty())
      region = null_region_from_json(domain, load_json_file(not_null_file));
    else if (!null_points.empty()) {
      std::vector<int> pts;
      std::stringstream ss(null_points);
      std::string item;
      while (std::getline(ss, item, ',')) pts.push_back(std::stoi(item));
      region = NullRegion(domain, DomainSet::from_points(domain, pts));
    }
    if (region && min_size > 0)
      return ClusterConstraint::both_of(std::move(*region), static_cast<int>(min_size));
    if (region) return ClusterConstraint::not_null_of(std::move(*region));
    if (min_size > 0) return ClusterConstraint::min_size_of(static_cast<int>(min_size));
    throw validation_error("cluster constraint required: --min-size and/or --not-null/--null-z");
  }

  Json describe() const {
    Json j = Json::object();
    if (min_size > 0) j["min_size"] = min_size;
    if (!not_null_file.empty()) j["not_null"] = not_null_file;
    if (!null_points.empty()) j["null_z"] = null_points;
    return j;
  }
};

DomainSet resolve_target_set(const std::string& target, const LoadedClass& loaded) {
  Domain domain = loaded.domain();
  if (target == "omega") return DomainSet::full(domain);
  if (target == "empty") return DomainSet(domain);
  if (target.rfind("set:", 0) == 0) {
    Json arr = Json::parse(target.substr(4));
    return set_from_json(domain, arr);
  }
  if (!target.empty() && std::isdigit(static_cast<unsigned char>(target[0]))) {
    const ConceptClass& cls = require_concepts(loaded);
    int idx = std::stoi(target);
    if (idx < 0 || idx >= cls.size()) throw validation_error("target index outside the class");
    return cls.concepts[idx];
  }
  throw validation_error("target must be an index, omega, empty, or set:[...]");
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"exact combinatorial-dimension toolkit and PAC learning simulator"};
  app.require_subcommand(1);

  std::string class_spec, measure_spec, profile_file, certificate_file, report_file;
  std::string function_class_file, rule_name = "first-consistent", order_name = "dudley-durst";
  std::string target_spec, eps_text, delta_text, r_text, big_c_text = "1";
  long long n = 0, trials = 0, d_param = 0, max_n = -1, gen_cap = 0;
  std::optional<std::uint64_t> seed, gen_seed;
  int threads = env_threads();
  bool emit_certificate = false;
  OutputOptions out;
  ConstraintOptions constraint;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", out.out_path, "write the JSON report to this path");
    cmd->add_flag("--timing", out.timing,
                  "include wall time in the report (breaks byte-determinism)");
  };
  auto add_class = [&](CLI::App* cmd) {
    cmd->add_option("--class", class_spec, "class file or generator spec (gen:...)")->required();
    cmd->add_option("--gen-cap", gen_cap, "enumeration guard cap for generators");
    cmd->add_option("--gen-seed", gen_seed, "subsample seed when a generator exceeds its cap");
  };
  auto add_dim_common = [&](CLI::App* cmd) {
    add_class(cmd);
    cmd->add_option("--max-n", max_n,
                    "stop the search at this dimension (result is then a lower bound)");
    cmd->add_flag("--emit-certificate", emit_certificate, "include the selector certificate");
    add_output(cmd);
  };
  auto add_constraint = [&](CLI::App* cmd) {
    cmd->add_option("--min-size", constraint.min_size, "minimum cluster size");
    cmd->add_option("--not-null", constraint.not_null_file, "null region JSON file");
    cmd->add_option("--null-z", constraint.null_points, "inline null region points, e.g. 0,3,4");
  };

  auto* dim_vc = app.add_subcommand("dim-vc", "exact VC dimension");
  add_dim_common(dim_vc);

  auto* dim_cluster_vc = app.add_subcommand("dim-cluster-vc", "cluster-shattering VC dimension");
  add_dim_common(dim_cluster_vc);
  add_constraint(dim_cluster_vc);
  dim_cluster_vc->add_option("--threads", threads, "first-level branch parallelism");

  auto* dim_fat = app.add_subcommand("dim-fat", "fat-shattering dimension");
  add_dim_common(dim_fat);
  dim_fat->add_option("--eps", eps_text, "margin")->required();

  auto* dim_cluster_fat =
      app.add_subcommand("dim-cluster-fat", "cluster fat-shattering dimension");
  add_dim_common(dim_cluster_fat);
  dim_cluster_fat->add_option("--eps", eps_text, "margin")->required();
  add_constraint(dim_cluster_fat);

  auto* witness = app.add_subcommand("witness", "carve the cluster family out of a certificate");
  add_class(witness);
  witness->add_option("--certificate", certificate_file, "certificate JSON file")->required();
  add_output(witness);

  auto* packing = app.add_subcommand("packing", "packing number under d_mu");
  add_class(packing);
  packing->add_option("--measure", measure_spec, "measure file or 'uniform'");
  packing->add_option("--r", r_text, "separation radius")->required();
  add_output(packing);

  auto* bound_vc = app.add_subcommand("bound-vc", "VC sample-complexity bound");
  bound_vc->add_option("--eps", eps_text)->required();
  bound_vc->add_option("--delta", delta_text)->required();
  bound_vc->add_option("--d", d_param)->required();
  add_output(bound_vc);

  auto* bound_fat = app.add_subcommand("bound-fat", "fat-shattering sample-complexity bound");
  bound_fat->add_option("--eps", eps_text)->required();
  bound_fat->add_option("--delta", delta_text)->required();
  bound_fat->add_option("--profile", profile_file, "fat-dimension profile JSON")->required();
  bound_fat->add_option("--big-c", big_c_text, "universal constant (echoed in the report)");
  add_output(bound_fat);

  auto* gc_sim = app.add_subcommand("gc-sim", "uniform-deviation Monte Carlo");
  add_class(gc_sim);
  gc_sim->add_option("--measure", measure_spec, "measure file or 'uniform'");
  gc_sim->add_option("--n", n, "sample size")->required();
  gc_sim->add_option("--trials", trials)->required();
  gc_sim->add_option("--eps", eps_text)->required();
  gc_sim->add_option("--seed", seed, "rng seed (stochastic commands refuse to run without one)")
      ->required();
  gc_sim->add_option("--threads", threads);
  gc_sim->add_option("--csv", out.csv_path, "also write per-trial rows as CSV");
  add_output(gc_sim);

  auto* pac_sim = app.add_subcommand("pac-sim", "PAC evaluation of a learning rule");
  add_class(pac_sim);
  pac_sim->add_option("--rule", rule_name, "first-consistent | min-segment | exact-code");
  pac_sim->add_option("--order", order_name, "dudley-durst | behw-fixed");
  pac_sim->add_option("--target", target_spec, "concept index, omega, empty, or set:[...]")
      ->required();
  pac_sim->add_option("--measure", measure_spec, "measure file or 'uniform'");
  pac_sim->add_option("--n", n, "sample size")->required();
  pac_sim->add_option("--trials", trials)->required();
  pac_sim->add_option("--eps", eps_text)->required();
  pac_sim->add_option("--seed", seed, "rng seed (stochastic commands refuse to run without one)")
      ->required();
  pac_sim->add_option("--threads", threads);
  pac_sim->add_option("--csv", out.csv_path, "also write per-trial rows as CSV");
  add_output(pac_sim);

  auto* validate = app.add_subcommand("validate", "check invariants of an input or report file");
  validate->add_option("--class", class_spec, "concept class file");
  validate->add_option("--function-class", function_class_file, "function class file");
  validate->add_option("--measure", measure_spec, "measure file");
  validate->add_option("--report", report_file, "emitted report file");
  add_output(validate);

  CLI11_PARSE(app, argc, argv);

  const auto started = std::chrono::steady_clock::now();
  const std::string command = echo_command(argc, argv);
  std::vector<std::string> warnings;
  std::optional<Json> rng_echo;
  if (seed) rng_echo = Json{{"algorithm", std::string(kRngAlgorithmId)}, {"seed", *seed}};

  try {
    GeneratorGuard guard = make_guard(gen_cap, gen_seed);
    Json payload;

    if (dim_vc->parsed()) {
      auto loaded = load_class(class_spec, guard, false);
      warnings = loaded.warnings;
      std::optional<int> cap;
      if (max_n >= 0) cap = static_cast<int>(max_n);
      auto result = vc_dimension_search(require_concepts(loaded), cap);
      payload["vc"] = result.dimension;
      payload["capped"] = result.capped;
      if (!result.points.empty()) payload["points"] = result.points;
      if (emit_certificate && result.certificate)
        payload["certificate"] = certificate_to_json(*result.certificate);
    } else if (dim_cluster_vc->parsed()) {
      auto loaded = load_class(class_spec, guard, false);
      warnings = loaded.warnings;
      const auto& cls = require_concepts(loaded);
      std::optional<int> cap;
      if (max_n >= 0) cap = static_cast<int>(max_n);
      auto result = cluster_vc(cls, constraint.build(cls.domain), cap, threads);
      payload["cluster_vc"] = result.dimension;
      payload["capped"] = result.capped;
      payload["constraint"] = constraint.describe();
      if (result.clusters) payload["clusters"] = cluster_family_to_json(*result.clusters);
      if (emit_certificate && result.certificate)
        payload["certificate"] = certificate_to_json(*result.certificate);
    } else if (dim_fat->parsed()) {
      auto loaded = load_class(class_spec, guard, false);
      warnings = loaded.warnings;
      auto functions = function_view(loaded);
      std::optional<int> cap;
      if (max_n >= 0) cap = static_cast<int>(max_n);
      auto result = fat_dimension_search(functions, parse_rational(eps_text), cap);
      payload["fat"] = result.dimension;
      payload["capped"] = result.capped;
      payload["epsilon"] = eps_text;
      if (!result.points.empty()) payload["points"] = result.points;
      if (emit_certificate && result.certificate)
        payload["certificate"] = certificate_to_json(*result.certificate);
    } else if (dim_cluster_fat->parsed()) {
      auto loaded = load_class(class_spec, guard, false);
      warnings = loaded.warnings;
      auto functions = function_view(loaded);
      std::optional<int> cap;
      if (max_n >= 0) cap = static_cast<int>(max_n);
      auto result = cluster_fat_dimension(functions, parse_rational(eps_text),
                                          constraint.build(functions.domain), cap);
      payload["cluster_fat"] = result.dimension;
      payload["capped"] = result.capped;
      payload["epsilon"] = eps_text;
      payload["constraint"] = constraint.describe();
      if (result.clusters) payload["clusters"] = cluster_family_to_json(*result.clusters);
      if (emit_certificate && result.certificate)
        payload["certificate"] = certificate_to_json(*result.certificate);
    } else if (witness->parsed()) {
      auto loaded = load_class(class_spec, guard, false);
      warnings = loaded.warnings;
      const auto& cls = require_concepts(loaded);
      auto cert = certificate_from_json(load_json_file(certificate_file));
      auto family = witness_clusters(cert, cls);
      payload["clusters"] = cluster_family_to_json(family);
      payload["pairwise_disjoint"] = family.pairwise_disjoint();
    } else if (packing->parsed()) {
      auto loaded = load_class(class_spec, guard, false);
      warnings = loaded.warnings;
      const auto& cls = require_concepts(loaded);
      auto mu = load_measure(measure_spec, cls.domain);
      auto result = packing_number(cls, mu, parse_rational(r_text));
      payload["packing"] = result.size;
      payload["exact"] = result.exact;
      payload["members"] = result.members;
      payload["r"] = r_text;
    } else if (bound_vc->parsed()) {
      BoundParams params{parse_rational(eps_text), parse_rational(delta_text),
                         static_cast<int>(d_param), Rational(1)};
      payload["bound"] = vc_sample_bound(params);
      payload["epsilon"] = eps_text;
      payload["delta"] = delta_text;
      payload["d"] = d_param;
    } else if (bound_fat->parsed()) {
      BoundParams params{parse_rational(eps_text), parse_rational(delta_text), 0,
                         parse_rational(big_c_text)};
      auto profile = profile_from_json(load_json_file(profile_file));
      payload["bound"] = fat_sample_bound(params, profile);
      payload["epsilon"] = eps_text;
      payload["delta"] = delta_text;
      payload["big_c"] = format_rational(params.big_c);
      payload["scale"] = format_rational(params.epsilon / 24);
      payload["d_at_scale"] = profile.dimension_at(params.epsilon / 24);
    } else if (gc_sim->parsed()) {
      auto loaded = load_class(class_spec, guard, false);
      warnings = loaded.warnings;
      Rational eps = parse_rational(eps_text);
      GCReport report;
      if (loaded.concepts) {
        auto mu = load_measure(measure_spec, loaded.concepts->domain);
        report = ucem_simulate(*loaded.concepts, mu, n, static_cast<int>(trials), eps, *seed,
                               threads);
      } else {
        auto functions = function_view(loaded);
        auto mu = load_measure(measure_spec, functions.domain);
        report = ucem_simulate(functions, mu, n, static_cast<int>(trials), eps, *seed, threads);
      }
      payload = gc_report_to_json(report, eps);
      if (!out.csv_path.empty())
        emit_csv(out.csv_path, "trial,deviation,exceeded", report.deviations, eps);
    } else if (pac_sim->parsed()) {
      auto preset = order_preset_from_name(order_name);
      if (!preset) throw validation_error("unknown order preset: " + order_name);
      auto loaded = load_class(class_spec, guard, rule_name == "first-consistent");
      warnings = loaded.warnings;
      Rational eps = parse_rational(eps_text);
      PACEvalReport report;
      if (rule_name == "first-consistent") {
        if (loaded.family) {
          FiniteCofiniteFamily family = *loaded.family;
          family.order = *preset;
          auto mu = load_measure(measure_spec, Domain(family.n_points));
          DomainSet target = resolve_target_set(target_spec, loaded);
          report = evaluate_pac(
              [&family](const LabeledSample& s) { return family.first_consistent(s); }, target,
              mu, static_cast<int>(n), static_cast<int>(trials), eps, *seed, threads);
        } else if (loaded.concepts) {
          auto ordered = with_preset_order(*loaded.concepts, *preset);
          auto mu = load_measure(measure_spec, ordered.cls.domain);
          DomainSet target = resolve_target_set(target_spec, loaded);
          report = evaluate_pac(
              [&ordered](const LabeledSample& s) {
                return ordered.cls.concepts[first_consistent(ordered, s)];
              },
              target, mu, static_cast<int>(n), static_cast<int>(trials), eps, *seed, threads);
        } else {
          auto functions = function_view(loaded);
          auto ordered = with_preset_order(functions, *preset);
          auto mu = load_measure(measure_spec, functions.domain);
          int target_index = std::stoi(target_spec);
          report = evaluate_pac(
              functions,
              [&ordered](const LabeledSample& s) { return first_consistent(ordered, s); },
              target_index, mu, static_cast<int>(n), static_cast<int>(trials), eps, *seed,
              threads);
        }
      } else if (rule_name == "min-segment") {
        const auto& cls = require_concepts(loaded);
        auto ordered = with_preset_order(cls, *preset);
        auto mu = load_measure(measure_spec, cls.domain);
        DomainSet target = resolve_target_set(target_spec, loaded);
        report = evaluate_pac(
            [&ordered](const LabeledSample& s) {
              return ordered.cls.concepts[min_containing_segment(ordered, s)];
            },
            target, mu, static_cast<int>(n), static_cast<int>(trials), eps, *seed, threads);
      } else if (rule_name == "exact-code") {
        if (!loaded.coded)
          throw validation_error("exact-code needs a coded class (gen:interval-code:...)");
        auto decoder = ExactCodeRule::from_codes(loaded.coded->codes);
        auto mu = load_measure(measure_spec, loaded.coded->functions.domain);
        int target_index = std::stoi(target_spec);
        report = evaluate_pac(
            loaded.coded->functions,
            [&decoder](const LabeledSample& s) { return decoder.decode(s); }, target_index, mu,
            static_cast<int>(n), static_cast<int>(trials), eps, *seed, threads);
      } else {
        throw validation_error("unknown rule: " + rule_name);
      }
      report.rule = rule_name + "/" + order_name + " over " + class_spec;
      report.target = target_spec;
      payload = pac_report_to_json(report, eps);
      if (!out.csv_path.empty())
        emit_csv(out.csv_path, "trial,error,exceeded", report.errors, eps);
    } else if (validate->parsed()) {
      ValidationReport vr;
      std::string kind;
      if (!class_spec.empty()) {
        kind = "concept-class";
        vr = concept_class_from_json(load_json_file(class_spec)).validation_report();
      } else if (!function_class_file.empty()) {
        kind = "function-class";
        vr = function_class_from_json(load_json_file(function_class_file)).validation_report();
      } else if (!measure_spec.empty()) {
        kind = "measure";
        measure_from_json(load_json_file(measure_spec));  // the constructor validates
      } else if (!report_file.empty()) {
        kind = "report";
        Json rep = load_json_file(report_file);
        for (const char* key : {"command", "payload", "version", "warnings"})
          if (!rep.contains(key))
            throw validation_error(std::string("report is missing \"") + key + "\"");
      } else {
        throw validation_error("validate needs --class, --function-class, --measure or --report");
      }
      if (!vr.valid) throw validation_error(vr.problems.front());
      payload["valid"] = true;
      payload["kind"] = kind;
      payload["warnings"] = vr.warnings;
    }

    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    emit_report(payload, command, warnings, out, rng_echo, elapsed_ms);
    return 0;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pacdim::cli
