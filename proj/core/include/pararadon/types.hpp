#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace pararadon {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr int kMaxDim = 3;

/// A point of R^n, n <= 3. Unused trailing coordinates are ignored.
using Point = std::array<double, kMaxDim>;

/// Selects the half-line of the kernel: `plus` integrates over
/// y_n > |y'|^2, `minus` over y_n < |y'|^2.
enum class Sign { plus, minus };

inline constexpr double sign_value(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

/// Complex order alpha = alpha0 + i*gamma.
struct FracOrder {
  double alpha0 = 0.0;
  double gamma = 0.0;

  constexpr FracOrder() = default;
  constexpr FracOrder(double re, double im = 0.0) : alpha0(re), gamma(im) {}
  explicit FracOrder(cplx a) : alpha0(a.real()), gamma(a.imag()) {}

  [[nodiscard]] cplx value() const { return {alpha0, gamma}; }
  [[nodiscard]] constexpr double re() const { return alpha0; }
  [[nodiscard]] constexpr double im() const { return gamma; }

  /// (1-n)/2 <= Re alpha <= 1, the range of the L^p-L^q theory.
  [[nodiscard]] constexpr bool in_strip(int n) const {
    return alpha0 >= 0.5 * (1 - n) && alpha0 <= 1.0;
  }

  friend FracOrder operator+(FracOrder a, FracOrder b) {
    return {a.alpha0 + b.alpha0, a.gamma + b.gamma};
  }
  friend FracOrder operator-(FracOrder a, FracOrder b) {
    return {a.alpha0 - b.alpha0, a.gamma - b.gamma};
  }
  friend bool operator==(FracOrder, FracOrder) = default;
};

/// Raised for argument and precondition violations across the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pararadon
