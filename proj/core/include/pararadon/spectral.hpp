#pragma once

#include <functional>
#include <optional>
#include <string>

#include "pararadon/sampled_field.hpp"
#include "pararadon/test_function.hpp"

namespace pararadon {

/// Which complex power branch_power evaluates.
///   plus_i:  (+i t)^lambda = exp(lambda log|t| + lambda pi i/2 sgn t)
///   minus_i: (-i t)^lambda = exp(lambda log|t| - lambda pi i/2 sgn t)
///   shifted: z^lambda with z = eps - i t (sign +) or eps + i t (sign -),
///            principal argument in (-pi/2, pi/2)
struct PowerForm {
  enum class Kind { plus_i, minus_i, shifted };
  Kind kind = Kind::plus_i;
  double eps = 0.0;
  Sign sign = Sign::plus;

  static PowerForm plus_i() { return {Kind::plus_i, 0.0, Sign::plus}; }
  static PowerForm minus_i() { return {Kind::minus_i, 0.0, Sign::plus}; }
  static PowerForm shifted(double eps, Sign sign) { return {Kind::shifted, eps, sign}; }
};

/// Throws Error for t = 0 with an unshifted form, or eps <= 0.
cplx branch_power(double t, cplx lambda, const PowerForm& form);

/// What happens on the plane xi_n = 0, where the symbols are singular.
///   zero_fill:  the symbol is set to 0 there
///   half_shift: the whole frequency lattice is offset by half a step along
///               xi_n (the input is modulated by e^{i dxi_n x_n / 2} and the
///               output demodulated), so no node lies on the plane
enum class SingularPolicy { zero_fill, half_shift };

const char* to_string(SingularPolicy p);
SingularPolicy parse_policy(const std::string& name);

/// q_{alpha+-}(xi) = (-+i xi_n)^{-alpha-(n-1)/2} omega_+-(xi); with dual the
/// argument is (xi', -xi_n). Throws Error at xi_n = 0.
cplx symbol_q(const Point& xi, int n, FracOrder alpha, Sign sign, bool dual = false);

/// Transform of the kernel damped by e^{-eps y_n} (sign +) or
/// e^{eps y_n - 2 eps |y'|^2} (sign -); finite for every xi.
cplx symbol_q_regularized(const Point& xi, int n, FracOrder alpha, Sign sign, double eps,
                          bool dual = false);

enum class RieszKind { even, odd };

const char* to_string(RieszKind k);

/// (q_+ + q_-) / (2 cos(alpha pi/2)) for even, (q_+ - q_-) / (2i sin(alpha pi/2))
/// for odd. Throws Error where the normaliser vanishes.
cplx symbol_riesz_type(const Point& xi, int n, FracOrder alpha, RieszKind kind);

/// Symbol values on the frequency nodes of a grid.
class MultiplierField {
 public:
  enum class Kind { fracint, regularized, riesz_potential, riesz_type, custom };

  using Symbol = std::function<cplx(const Point&)>;

  /// Evaluates `symbol` on the (possibly half-shifted) frequency lattice of
  /// g. Under zero_fill, nodes on xi_n = 0 get `plane_value`, or the symbol
  /// itself when no plane value is given.
  MultiplierField(const Grid& g, SingularPolicy policy, const Symbol& symbol,
                  std::optional<cplx> plane_value = cplx(0.0));

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] SingularPolicy policy() const { return policy_; }
  [[nodiscard]] std::span<const cplx> values() const { return values_; }
  [[nodiscard]] cplx operator[](std::size_t j) const { return values_[j]; }
  /// The frequency at which node j was evaluated.
  [[nodiscard]] Point node(std::size_t j) const;

  Kind kind = Kind::custom;
  FracOrder order{};
  Sign sign = Sign::plus;
  bool dual = false;
  /// false when the symbol is finite on xi_n = 0 (no plane-mass check needed)
  bool singular = true;

 private:
  Grid grid_;
  SingularPolicy policy_;
  std::vector<cplx> values_;
};

MultiplierField make_multiplier(const Grid& g, FracOrder alpha, Sign sign, bool dual = false,
                                SingularPolicy policy = SingularPolicy::zero_fill);

/// Regularised symbol; no singular plane, so no policy.
MultiplierField make_multiplier_regularized(const Grid& g, FracOrder alpha, Sign sign,
                                            double eps, bool dual = false);

struct ApplyReport {
  /// sum over the xi_n = 0 plane of |f^|^2 divided by the total, under zero_fill
  double plane_mass_fraction = 0.0;
  bool warned = false;
};

inline constexpr double kPlaneMassTolerance = 1e-10;

/// Inverse transform of m * f^. Under zero_fill a warning is emitted when
/// the plane mass fraction of f exceeds kPlaneMassTolerance.
SampledField apply_multiplier(const SampledField& f, const MultiplierField& m,
                              ApplyReport* report = nullptr);
/// Samples f on m.grid() first.
SampledField apply_multiplier(const TestFunction& f, const MultiplierField& m,
                              ApplyReport* report = nullptr);

/// P^alpha_+- (or its dual) through the multiplier q_{alpha+-}.
SampledField spectral_fracint(const SampledField& f, FracOrder alpha, Sign sign,
                              bool dual = false,
                              SingularPolicy policy = SingularPolicy::zero_fill);

/// Multiplier |xi_n|^{-lambda}; at xi_n = 0 the value is 1 for lambda = 0,
/// 0 for Re lambda < 0 and follows the policy otherwise.
SampledField riesz_potential_n(const SampledField& f, cplx lambda,
                               SingularPolicy policy = SingularPolicy::zero_fill);

MultiplierField make_riesz_type_multiplier(const Grid& g, FracOrder alpha, RieszKind kind,
                                           SingularPolicy policy = SingularPolicy::zero_fill);

SampledField riesz_type_fracint(const SampledField& f, FracOrder alpha, RieszKind kind,
                                SingularPolicy policy = SingularPolicy::zero_fill);

}  // namespace pararadon
