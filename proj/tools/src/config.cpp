#include "pararadon_tools/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace pararadon::tools {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + ": expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + ": expected an integer");
  return v.get<int>();
}

// a scalar applies to every axis; an array must have one entry per axis
template <class T, class Read>
std::array<T, kMaxDim> per_axis(const json& v, int dim, const std::string& where, Read read,
                                std::array<T, kMaxDim> fallback) {
  std::array<T, kMaxDim> out = fallback;
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != dim) {
      throw ConfigError(where + ": expected " + std::to_string(dim) + " entries");
    }
    for (int i = 0; i < dim; ++i) out[i] = read(v[i], where);
  } else {
    const T x = read(v, where);
    for (int i = 0; i < dim; ++i) out[i] = x;
  }
  return out;
}

FunctionSpec parse_function(const json& v, int dim, const std::string& where) {
  reject_unknown(v, {"kind", "center", "width", "degree", "kappa"}, where);
  FunctionSpec f;
  if (!v.contains("kind") || !v["kind"].is_string()) throw ConfigError(where + ": 'kind' required");
  f.kind = v["kind"].get<std::string>();
  static const std::set<std::string> kinds{"gaussian", "unit_gaussian", "hermite_gaussian",
                                           "phi_class", "phi_moment"};
  if (!kinds.count(f.kind)) throw ConfigError(where + ": unknown kind '" + f.kind + "'");
  if (v.contains("center")) f.center = per_axis<double>(v["center"], dim, where + ".center", number, f.center);
  if (v.contains("width")) f.width = per_axis<double>(v["width"], dim, where + ".width", number, f.width);
  if (v.contains("degree")) f.degree = per_axis<int>(v["degree"], dim, where + ".degree", integer, f.degree);
  if (v.contains("kappa")) f.kappa = number(v["kappa"], where + ".kappa");
  for (int i = 0; i < dim; ++i) {
    if (!(f.width[i] > 0.0)) throw ConfigError(where + ": widths must be positive");
    if (f.degree[i] < 0) throw ConfigError(where + ": degrees must be non-negative");
  }
  return f;
}

FracOrder parse_alpha_json(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(where + ": expected a number or [re, im]");
}

json axis_array(const GridSpec& g, bool points) {
  json a = json::array();
  for (int i = 0; i < g.dim; ++i) {
    if (points) {
      a.push_back(g.points[i]);
    } else {
      a.push_back(g.half_extent[i]);
    }
  }
  return a;
}

}  // namespace

TestFunction FunctionSpec::build(int dim) const {
  if (kind == "gaussian") return TestFunction::gaussian(dim, center, width);
  if (kind == "unit_gaussian") return TestFunction::unit_gaussian(dim);
  if (kind == "hermite_gaussian") return TestFunction::hermite_gaussian(dim, center, width, degree);
  if (kind == "phi_class") return TestFunction::phi_class(dim, center, width, kappa, degree[dim - 1]);
  if (kind == "phi_moment") return TestFunction::phi_moment(dim);
  throw ConfigError("unknown function kind '" + kind + "'");
}

bool FunctionSpec::phi_class() const { return kind == "phi_class" || kind == "phi_moment"; }

const char* to_string(SuiteName s) {
  switch (s) {
    case SuiteName::identities: return "identities";
    case SuiteName::norms: return "norms";
    case SuiteName::multipliers: return "multipliers";
  }
  return "?";
}

SuiteConfig SuiteConfig::defaults(int n) {
  if (n != 2 && n != 3) throw ConfigError("dim must be 2 or 3");
  SuiteConfig c;
  c.dim = n;
  c.grid = GridSpec::cube(n, 8.0, n == 2 ? 128 : 64);
  const int last = n - 1;

  FunctionSpec a;
  a.kind = "phi_class";
  a.kappa = 6.0;
  FunctionSpec b;
  b.kind = "phi_class";
  b.kappa = 7.0;
  for (int i = 0; i < last; ++i) {
    b.center[i] = 0.4;
    b.width[i] = 0.9;
  }
  b.center[last] = -0.3;
  b.width[last] = 1.1;
  b.degree[last] = 1;
  FunctionSpec g;
  g.kind = "gaussian";
  for (int i = 0; i < last; ++i) {
    g.center[i] = 0.3;
    g.width[i] = 0.8;
  }
  g.center[last] = -0.2;
  g.width[last] = 0.6;
  FunctionSpec u;
  u.kind = "unit_gaussian";
  c.functions = {a, b, g, u};

  c.alphas = {FracOrder(1.0), FracOrder(0.5)};
  c.suites = {SuiteName::identities};
  return c;
}

std::vector<SuiteName> parse_suites(const std::vector<std::string>& names) {
  std::vector<SuiteName> out;
  auto add = [&](SuiteName s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const auto& s : names) {
    if (s == "identities") {
      add(SuiteName::identities);
    } else if (s == "norms") {
      add(SuiteName::norms);
    } else if (s == "multipliers") {
      add(SuiteName::multipliers);
    } else if (s == "all") {
      add(SuiteName::identities);
      add(SuiteName::norms);
      add(SuiteName::multipliers);
    } else {
      throw ConfigError("unknown suite '" + s +
                        "' (expected identities, norms, multipliers or all)");
    }
  }
  return out;
}

FracOrder parse_alpha(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw ConfigError("alpha '" + text + "': expected RE or RE,IM");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw ConfigError("alpha '" + text + "': expected RE,IM");
  }
  std::string rest;
  if (is >> rest) throw ConfigError("alpha '" + text + "': trailing characters");
  return {re, im};
}

SuiteConfig parse_config(const json& doc) {
  reject_unknown(doc, {"dim", "grid", "functions", "alphas", "suites", "tolerances", "output",
                       "policy", "seed", "random_pairs"},
                 "config");
  const int dim = doc.contains("dim") ? integer(doc["dim"], "dim") : 2;
  SuiteConfig c = SuiteConfig::defaults(dim);

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    reject_unknown(g, {"half_extent", "points"}, "grid");
    GridSpec spec = c.grid;
    if (g.contains("half_extent")) {
      spec.half_extent = per_axis<double>(g["half_extent"], dim, "grid.half_extent", number,
                                          spec.half_extent);
    }
    if (g.contains("points")) {
      spec.points = per_axis<int>(g["points"], dim, "grid.points", integer, spec.points);
    }
    try {
      validate(spec);
    } catch (const Error& e) {
      throw ConfigError(std::string("grid: ") + e.what());
    }
    c.grid = spec;
  }
  if (doc.contains("functions")) {
    const json& fs = doc["functions"];
    if (!fs.is_array()) throw ConfigError("functions: expected an array");
    c.functions.clear();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      c.functions.push_back(parse_function(fs[i], dim, "functions[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("alphas")) {
    const json& as = doc["alphas"];
    if (!as.is_array()) throw ConfigError("alphas: expected an array");
    c.alphas.clear();
    for (std::size_t i = 0; i < as.size(); ++i) {
      c.alphas.push_back(parse_alpha_json(as[i], "alphas[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("suites")) {
    const json& s = doc["suites"];
    std::vector<std::string> names;
    if (s.is_string()) {
      names.push_back(s.get<std::string>());
    } else if (s.is_array()) {
      for (const auto& e : s) {
        if (!e.is_string()) throw ConfigError("suites: expected strings");
        names.push_back(e.get<std::string>());
      }
    } else {
      throw ConfigError("suites: expected a string or an array of strings");
    }
    c.suites = parse_suites(names);
  }
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    reject_unknown(t, {"symbol", "same_fft", "quad_spectral", "quad_quad", "limit", "conjugation",
                       "l1_linf", "slope"},
                   "tolerances");
    auto set = [&](const char* key, double& field) {
      if (!t.contains(key)) return;
      field = number(t[key], std::string("tolerances.") + key);
      if (!(field > 0.0)) throw ConfigError(std::string("tolerances.") + key + ": must be positive");
    };
    set("symbol", c.tolerances.paths.symbol);
    set("same_fft", c.tolerances.paths.same_fft);
    set("quad_spectral", c.tolerances.paths.quad_spectral);
    set("quad_quad", c.tolerances.paths.quad_quad);
    set("limit", c.tolerances.limit);
    set("conjugation", c.tolerances.conjugation);
    set("l1_linf", c.tolerances.l1_linf);
    set("slope", c.tolerances.slope);
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) throw ConfigError("output: expected a string");
    c.output = doc["output"].get<std::string>();
  }
  if (doc.contains("policy")) {
    if (!doc["policy"].is_string()) throw ConfigError("policy: expected a string");
    try {
      c.policy = parse_policy(doc["policy"].get<std::string>());
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ConfigError("seed: expected a non-negative integer");
    c.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("random_pairs")) {
    c.random_pairs = integer(doc["random_pairs"], "random_pairs");
    if (c.random_pairs < 0) throw ConfigError("random_pairs: must be non-negative");
  }
  return c;
}

SuiteConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

SuiteConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

json to_json(const SuiteConfig& c) {
  json doc;
  doc["dim"] = c.dim;
  doc["grid"] = {{"half_extent", axis_array(c.grid, false)}, {"points", axis_array(c.grid, true)}};
  doc["functions"] = json::array();
  for (const auto& f : c.functions) {
    json e{{"kind", f.kind}};
    if (f.kind != "unit_gaussian" && f.kind != "phi_moment") {
      e["center"] = std::vector<double>(f.center.begin(), f.center.begin() + c.dim);
      e["width"] = std::vector<double>(f.width.begin(), f.width.begin() + c.dim);
      e["degree"] = std::vector<int>(f.degree.begin(), f.degree.begin() + c.dim);
      if (f.kind == "phi_class") e["kappa"] = f.kappa;
    }
    doc["functions"].push_back(e);
  }
  doc["alphas"] = json::array();
  for (const auto& a : c.alphas) doc["alphas"].push_back({a.re(), a.im()});
  doc["suites"] = json::array();
  for (auto s : c.suites) doc["suites"].push_back(to_string(s));
  doc["tolerances"] = {{"symbol", c.tolerances.paths.symbol},
                       {"same_fft", c.tolerances.paths.same_fft},
                       {"quad_spectral", c.tolerances.paths.quad_spectral},
                       {"quad_quad", c.tolerances.paths.quad_quad},
                       {"limit", c.tolerances.limit},
                       {"conjugation", c.tolerances.conjugation},
                       {"l1_linf", c.tolerances.l1_linf},
                       {"slope", c.tolerances.slope}};
  doc["output"] = c.output.string();
  doc["policy"] = to_string(c.policy);
  doc["seed"] = c.seed;
  doc["random_pairs"] = c.random_pairs;
  return doc;
}

}  // namespace pararadon::tools
