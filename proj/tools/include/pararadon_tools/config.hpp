#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pararadon/identities.hpp"
#include "pararadon/spectral.hpp"
#include "pararadon/test_function.hpp"

namespace pararadon::tools {

/// Raised for malformed or inconsistent configuration; maps to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// JSON description of a test function.
///   {"kind": "gaussian", "center": [..], "width": [..]}
///   {"kind": "unit_gaussian"}
///   {"kind": "hermite_gaussian", "center": [..], "width": [..], "degree": [..]}
///   {"kind": "phi_class", "center": [..], "width": [..], "kappa": 6, "degree": 0}
///   {"kind": "phi_moment"}
struct FunctionSpec {
  std::string kind = "gaussian";
  std::array<double, kMaxDim> center{};
  std::array<double, kMaxDim> width{1.0, 1.0, 1.0};
  std::array<int, kMaxDim> degree{};
  double kappa = 6.0;

  [[nodiscard]] TestFunction build(int dim) const;
  /// Spectrum negligible on xi_n = 0 (phi_class, phi_moment).
  [[nodiscard]] bool phi_class() const;
};

enum class SuiteName { identities, norms, multipliers };

const char* to_string(SuiteName s);

struct SuiteTolerances {
  Tolerances paths{};
  double limit = 0.1;        ///< alpha -> 0 sup error at the smallest alpha
  double conjugation = 1e-4;
  double l1_linf = 1e-3;
  double slope = 0.02;
};

struct SuiteConfig {
  int dim = 2;
  GridSpec grid = GridSpec::cube(2, 8.0, 128);
  std::vector<FunctionSpec> functions;
  std::vector<FracOrder> alphas;
  std::vector<SuiteName> suites;
  SuiteTolerances tolerances{};
  std::filesystem::path output = "pararadon_out";
  SingularPolicy policy = SingularPolicy::zero_fill;
  std::uint64_t seed = 20240601;
  int random_pairs = 20;

  /// The documented defaults for dimension n.
  static SuiteConfig defaults(int n = 2);
};

/// Parses a configuration document on top of the defaults. Unknown keys at
/// any level, wrong types and invalid values throw ConfigError.
SuiteConfig parse_config(const nlohmann::json& doc);
SuiteConfig parse_config_text(const std::string& text);
SuiteConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const SuiteConfig& c);

std::vector<SuiteName> parse_suites(const std::vector<std::string>& names);

/// "RE,IM" or "RE".
FracOrder parse_alpha(const std::string& text);

}  // namespace pararadon::tools
