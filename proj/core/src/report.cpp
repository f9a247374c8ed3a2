#include "fex/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "fex/alpha.hpp"
#include "fex/certificates.hpp"
#include "fex/error.hpp"
#include "fex/extension.hpp"
#include "fex/peak.hpp"
#include "fex/random.hpp"

namespace fex::report {

using nlohmann::json;

namespace {

constexpr double kBoundTolerance = 1e-9;
constexpr double kUpperTolerance = 1e-6;

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::config, "config field '" + field + "': " + what);
}

std::uint64_t read_unsigned(const json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  config_error(field, "expected a nonnegative integer");
}

std::int64_t read_integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) config_error(field, "expected an integer");
  return v.get<std::int64_t>();
}

Complex read_complex(const json& v, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  config_error(field, "expected a number or a [re, im] pair");
}

std::vector<std::uint64_t> read_seeds(const json& v) {
  std::vector<std::uint64_t> seeds;
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    const auto dots = text.find("..");
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    if (dots == std::string::npos ||
        std::from_chars(begin, begin + dots, lo).ptr != begin + dots ||
        std::from_chars(begin + dots + 2, end, hi).ptr != end || hi < lo) {
      config_error("seeds", "expected a range like \"0..9\"");
    }
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      seeds.push_back(read_unsigned(v[i], "seeds[" + std::to_string(i) + "]"));
    }
  } else {
    seeds.push_back(read_unsigned(v, "seeds"));
  }
  if (seeds.empty()) config_error("seeds", "must not be empty");
  return seeds;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json element_json(const GroupSpec& spec, ElementIndex i) {
  const auto r = spec.residues(i);
  return json(std::vector<std::int64_t>(r.begin(), r.end()));
}

json elements_json(const GroupSpec& spec, std::span<const ElementIndex> xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(element_json(spec, x));
  return out;
}

json certificate_json(const NormCertificate& c) {
  return {{"grid_max", c.grid_max},
          {"slack", c.slack},
          {"lo", c.lo()},
          {"hi", c.hi()},
          {"grid_resolution", c.grid_resolution},
          {"argmax_phase", c.argmax}};
}

json chain_json(const ChainReport& c) {
  return {{"n", c.n},
          {"norm_hi", c.norm_hi},
          {"square_function", c.square_function},
          {"image_norm_sum", c.image_norm_sum},
          {"lower_bound", c.lower_bound},
          {"square_function_margin", c.square_function_margin},
          {"image_norm_margin", c.image_norm_margin},
          {"lower_bound_margin", c.lower_bound_margin},
          {"cauchy_schwarz_excess", c.cauchy_schwarz_excess},
          {"min_image_norm", c.min_image_norm},
          {"passed", c.passed}};
}

class Checks {
 public:
  /// margin >= -tolerance passes.
  void add(std::string name, double margin, double tolerance) {
    const bool passed = margin >= -tolerance;
    if (!passed) ++violations_;
    items_.push_back({{"name", std::move(name)}, {"passed", passed}, {"margin", margin}});
  }
  void add_flag(std::string name, bool passed, double margin) {
    if (!passed) ++violations_;
    items_.push_back({{"name", std::move(name)}, {"passed", passed}, {"margin", margin}});
  }
  void write(json& report) const {
    report["checks"] = items_;
    report["violations"] = violations_;
  }
  std::size_t violations() const noexcept { return violations_; }

 private:
  json items_ = json::array();
  std::size_t violations_ = 0;
};

struct Instance {
  GroupSpec spec;
  PointSet points;
  std::vector<ElementIndex> differences;
  PeakFunction peak;
};

Instance make_instance(const GroupSpec& spec, PointSet points) {
  auto differences = difference_set(spec, points);
  auto base = greedy_base_set(spec, differences);
  auto peak = build_peak(spec, base);
  return Instance{spec, std::move(points), std::move(differences), std::move(peak)};
}

Instance make_instance(const InstanceConfig& config) {
  GroupSpec spec(config.group);
  if (config.points.empty()) config_error("K", "must list at least one point");
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    if (!spec.contains(config.points[i])) {
      config_error("K[" + std::to_string(i) + "]", "not an element of the group");
    }
  }
  return make_instance(spec, PointSet(spec, config.points));
}

json header(const InstanceConfig& config) {
  return {{"schema_version", kSchemaVersion},
          {"mode", to_string(config.mode)},
          {"config", to_json(config)}};
}

void describe_instance(json& report, const Instance& inst) {
  report["group"] = std::vector<std::int64_t>(inst.spec.factors().begin(), inst.spec.factors().end());
  report["K"] = elements_json(inst.spec, inst.points.points());
  report["n"] = inst.points.size();
  const auto bounds = theorem_bounds(inst.points.size());
  report["theorem_lower"] = bounds.lower;
  report["theorem_upper"] = bounds.upper;
  report["difference_set"] = elements_json(inst.spec, inst.differences);
  report["base_set"] = elements_json(inst.spec, inst.peak.base_set);
}

json peak_json(const PeakValidation& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"worst_violation", c.worst_violation}});
  }
  return {{"passed", v.all_passed()}, {"worst_violation", v.worst_violation()}, {"checks", checks}};
}

json alpha_json(const AlphaReport& a) {
  return {{"n", a.n},
          {"theorem_lower", a.theorem_lower},
          {"theorem_upper", a.theorem_upper},
          {"canonical", certificate_json(a.canonical)},
          {"optimized", certificate_json(a.optimized)},
          {"iterations", a.iterations},
          {"trace", a.trace}};
}

void check_alpha(Checks& checks, const AlphaReport& a) {
  checks.add("optimized_not_worse_than_canonical", a.canonical.hi() - a.optimized.hi(),
             kBoundTolerance);
  checks.add("optimized_above_theorem_lower", a.optimized.hi() - a.theorem_lower, kBoundTolerance);
}

AlphaOptions alpha_options(const InstanceConfig& config) {
  AlphaOptions options;
  options.resolution = config.phase_grid;
  options.budget = config.budget;
  options.seed = config.seed;
  return options;
}

RunResult run_bounds(const InstanceConfig& config) {
  const auto inst = make_instance(config);
  const auto validation = validate_peak(inst.peak, inst.differences);
  const auto op = canonical_operator(inst.spec, inst.points, inst.peak);
  const auto cert = norm_certified(op, config.phase_grid);
  const auto bounds = theorem_bounds(inst.points.size());

  json report = header(config);
  describe_instance(report, inst);
  report["peak_validation"] = peak_json(validation);
  report["canonical"] = certificate_json(cert);

  Checks checks;
  checks.add_flag("peak_properties", validation.all_passed(), validation.margin());
  checks.add("canonical_grid_max_below_theorem_upper", bounds.upper - cert.grid_max,
             kUpperTolerance);
  checks.add("canonical_hi_above_theorem_lower", cert.hi() - bounds.lower, kBoundTolerance);
  if (inst.points.size() <= EnumerationBudget{}.max_sign_points) {
    const auto signs = sign_statistics(op);
    report["sign_max"] = signs.max;
    report["rademacher_average"] = signs.average;
    checks.add("sign_max_below_certificate", cert.hi() - signs.max, kBoundTolerance);
  }
  checks.write(report);
  return {report, {}, checks.violations() > 0};
}

RunResult run_alpha(const InstanceConfig& config) {
  const auto inst = make_instance(config);
  const auto alpha = optimize_alpha(inst.spec, inst.points, inst.peak, alpha_options(config));
  json report = header(config);
  describe_instance(report, inst);
  report["alpha"] = alpha_json(alpha);
  Checks checks;
  check_alpha(checks, alpha);
  checks.write(report);
  return {report, {}, checks.violations() > 0};
}

RunResult run_chain(const InstanceConfig& config) {
  const auto inst = make_instance(config);
  const auto alpha = optimize_alpha(inst.spec, inst.points, inst.peak, alpha_options(config));
  const auto canonical = canonical_operator(inst.spec, inst.points, inst.peak);
  const auto canonical_chain = chain_check(canonical, config.phase_grid);
  const auto optimized_chain = chain_check(alpha.best_operator, config.phase_grid);

  json report = header(config);
  describe_instance(report, inst);
  report["alpha"] = alpha_json(alpha);
  report["canonical_chain"] = chain_json(canonical_chain);
  report["optimized_chain"] = chain_json(optimized_chain);
  Checks checks;
  check_alpha(checks, alpha);
  for (const auto& [label, c] : {std::pair{"canonical", &canonical_chain},
                                 std::pair{"optimized", &optimized_chain}}) {
    const std::string prefix = label;
    checks.add(prefix + "_square_function", c->square_function_margin, kBoundTolerance);
    checks.add(prefix + "_image_norm_sum", c->image_norm_margin, kBoundTolerance);
    checks.add(prefix + "_theorem_lower", c->lower_bound_margin, kBoundTolerance);
    checks.add(prefix + "_cauchy_schwarz", -c->cauchy_schwarz_excess, 1e-12);
    checks.add(prefix + "_diagonal", c->min_image_norm - 1.0, kBoundTolerance);
  }
  checks.write(report);
  return {report, {}, checks.violations() > 0};
}

RunResult run_khinchin(const InstanceConfig& config) {
  std::vector<std::vector<Complex>> vectors = config.vectors;
  if (config.max_n < 1 || config.max_n > 20) config_error("max_n", "must lie in 1..20");
  Rng rng(config.seed);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const auto n = 1 + rng.below(config.max_n);
    std::vector<Complex> a(n);
    for (auto& z : a) z = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    vectors.push_back(std::move(a));
  }
  if (vectors.empty()) config_error("vectors", "no vectors given and samples == 0");

  json report = header(config);
  json items = json::array();
  double worst = std::numeric_limits<double>::infinity();
  std::size_t failures = 0;
  for (const auto& a : vectors) {
    const auto r = khinchin_check(a);
    json coeffs = json::array();
    for (const auto& z : r.a) coeffs.push_back(complex_json(z));
    items.push_back({{"n", r.n},
                     {"a", coeffs},
                     {"exact_average", r.exact_average},
                     {"rhs", r.rhs},
                     {"ratio", r.ratio},
                     {"passed", r.passed}});
    worst = std::min(worst, r.ratio);
    if (!r.passed) ++failures;
  }
  report["reports"] = items;
  report["min_ratio"] = worst;
  Checks checks;
  checks.add_flag("khinchin_szarek", failures == 0, worst - 1.0);
  checks.write(report);
  return {report, {}, checks.violations() > 0};
}

RunResult run_sweep(const InstanceConfig& config, const Progress& progress) {
  GroupSpec spec(config.group);
  if (config.n_max < 1) config_error("n_max", "must be >= 1");
  if (config.n_max > spec.order()) config_error("n_max", "exceeds the group order");

  json report = header(config);
  report["group"] = config.group;
  json rows = json::array();
  json summary = json::array();
  std::ostringstream csv;
  csv << "n,seed,theorem_lower,canonical_hi,optimized_hi,theorem_upper\n";
  Checks checks;

  for (std::size_t n = 1; n <= config.n_max; ++n) {
    const auto bounds = theorem_bounds(n);
    double best = std::numeric_limits<double>::infinity();
    double worst = -std::numeric_limits<double>::infinity();
    for (auto seed : config.seeds) {
      Rng rng(seed, n);
      const auto picked = rng.sample_without_replacement(spec.order(), n);
      const auto inst = make_instance(spec, PointSet(spec, std::vector<ElementIndex>(picked.begin(), picked.end())));
      auto options = alpha_options(config);
      options.seed = seed;
      const auto alpha = optimize_alpha(inst.spec, inst.points, inst.peak, options);

      const double margin = alpha.optimized.hi() - bounds.lower;
      rows.push_back({{"n", n},
                      {"seed", seed},
                      {"K", elements_json(spec, inst.points.points())},
                      {"theorem_lower", bounds.lower},
                      {"canonical_grid_max", alpha.canonical.grid_max},
                      {"canonical_hi", alpha.canonical.hi()},
                      {"optimized_hi", alpha.optimized.hi()},
                      {"theorem_upper", bounds.upper},
                      {"margin", margin}});
      csv << n << ',' << seed << ',' << format_number(bounds.lower) << ','
          << format_number(alpha.canonical.hi()) << ',' << format_number(alpha.optimized.hi())
          << ',' << format_number(bounds.upper) << '\n';
      const std::string tag = "n=" + std::to_string(n) + ",seed=" + std::to_string(seed);
      checks.add("sandwich_lower[" + tag + "]", margin, kBoundTolerance);
      checks.add("canonical_upper[" + tag + "]", bounds.upper - alpha.canonical.grid_max,
                 kUpperTolerance);
      best = std::min(best, alpha.optimized.hi());
      worst = std::max(worst, alpha.optimized.hi());
      if (progress) progress("sweep " + tag + " optimized_hi=" + format_number(alpha.optimized.hi()));
    }
    summary.push_back({{"n", n},
                       {"theorem_lower", bounds.lower},
                       {"best_norm_hi", best},
                       {"worst_norm_hi", worst},
                       {"theorem_upper", bounds.upper},
                       {"margin", best - bounds.lower}});
  }
  report["rows"] = rows;
  report["summary"] = summary;
  checks.write(report);
  return {report, csv.str(), checks.violations() > 0};
}

void require(const json&, const std::string& key, bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::config, "report field '" + key + "' " + what);
}

void require_number(const json& doc, const std::string& key, const std::string& label = {}) {
  require(doc, label.empty() ? key : label, doc.contains(key) && doc.at(key).is_number(),
          "must be a number");
}

void require_certificate(const json& doc, const std::string& key) {
  require(doc, key, doc.contains(key) && doc.at(key).is_object(), "must be an object");
  const auto& c = doc.at(key);
  for (const char* f : {"grid_max", "slack", "lo", "hi", "grid_resolution"}) {
    require_number(c, f, key + "." + f);
  }
  require(c, key, c.at("lo").get<double>() <= c.at("hi").get<double>(), "must have lo <= hi");
}

}  // namespace

const char* to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::bounds: return "bounds";
    case Mode::alpha: return "alpha";
    case Mode::chain: return "chain";
    case Mode::khinchin: return "khinchin";
    case Mode::sweep: return "sweep";
  }
  return "bounds";
}

Mode parse_mode(std::string_view name) {
  for (auto m : {Mode::bounds, Mode::alpha, Mode::chain, Mode::khinchin, Mode::sweep}) {
    if (name == to_string(m)) return m;
  }
  config_error("mode", "unknown mode '" + std::string(name) + "'");
}

InstanceConfig parse_config(const json& doc) {
  if (!doc.is_object()) config_error("<root>", "expected a JSON object");
  InstanceConfig c;
  if (doc.contains("schema_version") && read_integer(doc["schema_version"], "schema_version") != kSchemaVersion) {
    config_error("schema_version", "unsupported version");
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) config_error("mode", "expected a string");
    c.mode = parse_mode(doc["mode"].get<std::string>());
  }
  if (!doc.contains("group") || !doc["group"].is_array() || doc["group"].empty()) {
    config_error("group", "expected a nonempty list of cyclic orders");
  }
  for (std::size_t i = 0; i < doc["group"].size(); ++i) {
    const auto factor = read_integer(doc["group"][i], "group[" + std::to_string(i) + "]");
    if (factor < 1) config_error("group[" + std::to_string(i) + "]", "cyclic order must be >= 1");
    c.group.push_back(factor);
  }
  if (doc.contains("K")) {
    const auto& k = doc["K"];
    if (!k.is_array()) config_error("K", "expected a list of residue vectors");
    for (std::size_t i = 0; i < k.size(); ++i) {
      const std::string field = "K[" + std::to_string(i) + "]";
      GroupElement e;
      if (k[i].is_array()) {
        for (std::size_t j = 0; j < k[i].size(); ++j) {
          e.residues.push_back(read_integer(k[i][j], field + "[" + std::to_string(j) + "]"));
        }
      } else {
        e.residues.push_back(read_integer(k[i], field));
      }
      if (e.residues.size() != c.group.size()) config_error(field, "rank does not match the group");
      for (std::size_t j = 0; j < e.residues.size(); ++j) {
        if (e.residues[j] < 0 || e.residues[j] >= c.group[j]) config_error(field, "residue out of range");
      }
      for (std::size_t p = 0; p < c.points.size(); ++p) {
        if (c.points[p] == e) config_error(field, "duplicates K[" + std::to_string(p) + "]");
      }
      c.points.push_back(std::move(e));
    }
  }
  for (const char* key : {"phase_grid", "grid", "M"}) {
    if (doc.contains(key)) c.phase_grid = read_unsigned(doc[key], key);
  }
  if (doc.contains("budget")) c.budget = read_unsigned(doc["budget"], "budget");
  if (doc.contains("seed")) c.seed = read_unsigned(doc["seed"], "seed");
  if (doc.contains("n_max")) c.n_max = read_unsigned(doc["n_max"], "n_max");
  if (doc.contains("seeds")) c.seeds = read_seeds(doc["seeds"]);
  if (doc.contains("vectors")) {
    const auto& vs = doc["vectors"];
    if (!vs.is_array()) config_error("vectors", "expected a list of coefficient lists");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const std::string field = "vectors[" + std::to_string(i) + "]";
      if (!vs[i].is_array() || vs[i].empty()) config_error(field, "expected a nonempty list");
      std::vector<Complex> a;
      for (std::size_t j = 0; j < vs[i].size(); ++j) {
        a.push_back(read_complex(vs[i][j], field + "[" + std::to_string(j) + "]"));
      }
      c.vectors.push_back(std::move(a));
    }
  }
  if (doc.contains("samples")) c.samples = read_unsigned(doc["samples"], "samples");
  if (doc.contains("max_n")) c.max_n = read_unsigned(doc["max_n"], "max_n");
  return c;
}

InstanceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::config, "cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::config, path.string() + ": " + e.what());
  }
  return parse_config(doc);
}

json to_json(const InstanceConfig& c) {
  json k = json::array();
  for (const auto& p : c.points) k.push_back(p.residues);
  json vectors = json::array();
  for (const auto& a : c.vectors) {
    json coeffs = json::array();
    for (const auto& z : a) coeffs.push_back(complex_json(z));
    vectors.push_back(coeffs);
  }
  return {{"schema_version", kSchemaVersion},
          {"mode", to_string(c.mode)},
          {"group", c.group},
          {"K", k},
          {"phase_grid", c.phase_grid},
          {"budget", c.budget},
          {"seed", c.seed},
          {"n_max", c.n_max},
          {"seeds", c.seeds},
          {"vectors", vectors},
          {"samples", c.samples},
          {"max_n", c.max_n}};
}

RunResult run(const InstanceConfig& config, const Progress& progress) {
  if (config.mode != Mode::khinchin && config.phase_grid < 4) {
    throw Error(ErrorKind::resolution, "phase_grid must be >= 4");
  }
  switch (config.mode) {
    case Mode::bounds: return run_bounds(config);
    case Mode::alpha: return run_alpha(config);
    case Mode::chain: return run_chain(config);
    case Mode::khinchin: return run_khinchin(config);
    case Mode::sweep: return run_sweep(config, progress);
  }
  config_error("mode", "unhandled");
}

void validate_report(const json& doc) {
  require(doc, "<root>", doc.is_object(), "must be an object");
  require(doc, "schema_version",
          doc.contains("schema_version") && doc["schema_version"].is_number_integer() &&
              doc["schema_version"].get<int>() == kSchemaVersion,
          "must equal the current schema version");
  require(doc, "mode", doc.contains("mode") && doc["mode"].is_string(), "must be a string");
  const auto mode = parse_mode(doc["mode"].get<std::string>());
  require(doc, "config", doc.contains("config") && doc["config"].is_object(), "must be an object");
  parse_config(doc["config"]);
  require(doc, "checks", doc.contains("checks") && doc["checks"].is_array(), "must be an array");
  for (const auto& c : doc["checks"]) {
    require(c, "checks[]",
            c.is_object() && c.contains("name") && c["name"].is_string() && c.contains("passed") &&
                c["passed"].is_boolean() && c.contains("margin") && c["margin"].is_number(),
            "entries need name, passed and margin");
  }
  require(doc, "violations", doc.contains("violations") && doc["violations"].is_number_unsigned(),
          "must be a nonnegative integer");

  if (mode == Mode::bounds || mode == Mode::alpha || mode == Mode::chain) {
    for (const char* key : {"n", "theorem_lower", "theorem_upper"}) require_number(doc, key);
    for (const char* key : {"group", "K", "difference_set", "base_set"}) {
      require(doc, key, doc.contains(key) && doc[key].is_array(), "must be an array");
    }
    require(doc, "theorem_upper",
            doc["theorem_lower"].get<double>() <= doc["theorem_upper"].get<double>(),
            "must not be below theorem_lower");
  }
  switch (mode) {
    case Mode::bounds:
      require_certificate(doc, "canonical");
      require(doc, "peak_validation", doc.contains("peak_validation") && doc["peak_validation"].is_object(),
              "must be an object");
      break;
    case Mode::alpha:
    case Mode::chain: {
      require(doc, "alpha", doc.contains("alpha") && doc["alpha"].is_object(), "must be an object");
      const auto& a = doc["alpha"];
      require_certificate(a, "canonical");
      require_certificate(a, "optimized");
      require(a, "alpha.trace", a.contains("trace") && a["trace"].is_array(), "must be an array");
      if (mode == Mode::chain) {
        for (const char* key : {"canonical_chain", "optimized_chain"}) {
          require(doc, key, doc.contains(key) && doc[key].is_object(), "must be an object");
          for (const char* f : {"norm_hi", "square_function", "image_norm_sum", "lower_bound"}) {
            require_number(doc[key], f);
          }
        }
      }
      break;
    }
    case Mode::khinchin:
      require(doc, "reports", doc.contains("reports") && doc["reports"].is_array(), "must be an array");
      for (const auto& r : doc["reports"]) {
        for (const char* f : {"n", "exact_average", "rhs", "ratio"}) require_number(r, f);
      }
      break;
    case Mode::sweep:
      for (const char* key : {"rows", "summary"}) {
        require(doc, key, doc.contains(key) && doc[key].is_array(), "must be an array");
      }
      for (const auto& r : doc["rows"]) {
        for (const char* f : {"n", "seed", "theorem_lower", "canonical_hi", "optimized_hi", "theorem_upper"}) {
          require_number(r, f);
        }
      }
      for (const auto& r : doc["summary"]) {
        for (const char* f : {"n", "theorem_lower", "best_norm_hi", "theorem_upper"}) require_number(r, f);
      }
      break;
  }
}

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

}  // namespace fex::report
