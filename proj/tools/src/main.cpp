#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pararadon/spatial.hpp"
#include "pararadon/spectral.hpp"
#include "pararadon/transversal.hpp"
#include "pararadon_tools/config.hpp"
#include "pararadon_tools/report.hpp"
#include "pararadon_tools/suite.hpp"

using namespace pararadon;
using namespace pararadon::tools;
using nlohmann::json;

namespace {

struct CommonFlags {
  std::string config;
  int dim = 0;
  std::vector<std::string> alphas;
  std::vector<std::string> suites;
  std::string out;
  std::string policy;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* app, CommonFlags& f, bool with_suite) {
  app->add_option("--config", f.config, "JSON configuration file");
  app->add_option("--dim", f.dim, "dimension n (2 or 3)");
  app->add_option("--alpha", f.alphas, "order RE,IM (repeatable)");
  if (with_suite) app->add_option("--suite", f.suites, "identities, norms, multipliers or all");
  app->add_option("--out", f.out, "output directory");
  app->add_option("--policy", f.policy, "singular-plane policy: zero_fill or half_shift");
  app->add_option_function<std::uint64_t>(
      "--seed", [&f](std::uint64_t s) { f.seed = s; f.seed_set = true; }, "seed for random orders");
}

// the config file first, then every flag that was given on top of it
SuiteConfig resolve(const CommonFlags& f, const std::vector<std::string>& forced_suites = {}) {
  json doc = json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot open config file " + f.config);
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("malformed JSON in ") + f.config + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: expected an object");
  }
  if (f.dim != 0) {
    if (doc.contains("dim") && doc["dim"] != f.dim) {
      // grid and functions given for another dimension no longer apply
      doc.erase("grid");
      doc.erase("functions");
    }
    doc["dim"] = f.dim;
  }
  if (!f.alphas.empty()) {
    doc["alphas"] = json::array();
    for (const auto& a : f.alphas) {
      const FracOrder o = parse_alpha(a);
      doc["alphas"].push_back({o.re(), o.im()});
    }
  }
  if (!forced_suites.empty()) {
    doc["suites"] = forced_suites;
  } else if (!f.suites.empty()) {
    doc["suites"] = f.suites;
  }
  if (!f.out.empty()) doc["output"] = f.out;
  if (!f.policy.empty()) doc["policy"] = f.policy;
  if (f.seed_set) doc["seed"] = f.seed;
  return parse_config(doc);
}

FracOrder first_alpha(const SuiteConfig& c) {
  if (c.alphas.empty()) throw ConfigError("an order is needed (--alpha RE,IM)");
  return c.alphas.front();
}

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  throw ConfigError("sign must be + or -");
}

int dump_multiplier(const SuiteConfig& c, const std::string& kind, const std::string& sign_text,
                    bool dual, double eps) {
  const Grid g(c.grid);
  const FracOrder a = first_alpha(c);
  const Sign sign = parse_sign(sign_text);
  MultiplierField m = [&] {
    if (kind == "fracint") {
      return eps > 0.0 ? make_multiplier_regularized(g, a, sign, eps, dual)
                       : make_multiplier(g, a, sign, dual, c.policy);
    }
    if (kind == "riesz_even") return make_riesz_type_multiplier(g, a, RieszKind::even, c.policy);
    if (kind == "riesz_odd") return make_riesz_type_multiplier(g, a, RieszKind::odd, c.policy);
    throw ConfigError("unknown multiplier kind '" + kind + "'");
  }();
  std::filesystem::create_directories(c.output);
  const auto path = c.output / "multiplier.prf";
  const json meta{{"kind", kind},         {"alpha", {a.re(), a.im()}}, {"sign", to_string(sign)},
                  {"dual", dual},         {"eps", eps},               {"policy", to_string(c.policy)}};
  write_field(path, SampledField(g, Domain::frequency,
                                 std::vector<cplx>(m.values().begin(), m.values().end())),
              meta);
  std::cout << path.string() << '\n';
  return 0;
}

int dump_transform(const SuiteConfig& c, const std::string& op, std::size_t index,
                   const std::string& sign_text) {
  if (index >= c.functions.size()) throw ConfigError("--function index out of range");
  const TestFunction f = c.functions[index].build(c.dim);
  const Grid g(c.grid);
  const Sign sign = parse_sign(sign_text);
  json meta{{"operator", op}, {"function", index}, {"sign", to_string(sign)}};
  auto with_alpha = [&] {
    const FracOrder a = first_alpha(c);
    meta["alpha"] = {a.re(), a.im()};
    return a;
  };
  SampledField out = SampledField::zeros(g);
  if (op == "input") {
    out = sample(f, g);
  } else if (op == "spectral") {
    out = apply_multiplier(f, make_multiplier(g, with_alpha(), sign, false, c.policy));
  } else if (op == "spectral_dual") {
    out = apply_multiplier(f, make_multiplier(g, with_alpha(), sign, true, c.policy));
  } else if (op == "quadrature") {
    out = parabolic_fracint_cont(f, with_alpha(), sign, g);
  } else if (op == "quadrature_dual") {
    out = dual_parabolic_fracint(f, with_alpha(), sign, g);
  } else if (op == "radon") {
    out = parabolic_radon(f, g);
  } else if (op == "dual_radon") {
    out = dual_parabolic_radon(f, g);
  } else if (op == "transversal") {
    const FracOrder a = with_alpha();
    out = a == FracOrder{} ? transversal_radon(f, g) : transversal_fracint(f, a, sign, g);
  } else if (op == "riesz") {
    out = riesz_potential_n(sample(f, g), with_alpha().value(), c.policy);
  } else {
    throw ConfigError("unknown operator '" + op + "'");
  }
  std::filesystem::create_directories(c.output);
  const auto path = c.output / "transform.prf";
  write_field(path, out, meta);
  std::cout << path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parabolic Radon transforms and fractional integrals: checks and field dumps"};
  app.require_subcommand(1);

  CommonFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "run the identity suite (or --suite)");
  add_common(verify, verify_flags, true);

  CommonFlags norm_flags;
  auto* norms = app.add_subcommand("norms", "run the exponent and scaling experiments");
  add_common(norms, norm_flags, false);

  CommonFlags mult_flags;
  std::string mult_kind = "fracint";
  std::string mult_sign = "+";
  bool mult_dual = false;
  double mult_eps = 0.0;
  auto* mult = app.add_subcommand("multiplier", "dump a symbol on the frequency grid");
  add_common(mult, mult_flags, false);
  mult->add_option("--kind", mult_kind, "fracint, riesz_even or riesz_odd");
  mult->add_option("--sign", mult_sign, "+ or -");
  mult->add_flag("--dual", mult_dual, "symbol of the dual operator");
  mult->add_option("--regularized", mult_eps, "eps > 0: damped symbol (fracint only)");

  CommonFlags tr_flags;
  std::string tr_op = "spectral";
  std::string tr_sign = "+";
  std::size_t tr_index = 0;
  auto* transform = app.add_subcommand("transform", "apply one operator and dump the field");
  add_common(transform, tr_flags, false);
  transform->add_option("--operator", tr_op,
                        "input, spectral, spectral_dual, quadrature, quadrature_dual, radon, "
                        "dual_radon, transversal or riesz");
  transform->add_option("--function", tr_index, "index into the configured functions");
  transform->add_option("--sign", tr_sign, "+ or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return run_suite(resolve(verify_flags), std::cout);
    if (*norms) return run_suite(resolve(norm_flags, {"norms"}), std::cout);
    if (*mult) return dump_multiplier(resolve(mult_flags), mult_kind, mult_sign, mult_dual, mult_eps);
    if (*transform) return dump_transform(resolve(tr_flags), tr_op, tr_index, tr_sign);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
