#include "pararadon/special.hpp"

#include <array>
#include <cmath>

namespace pararadon {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Gamma(z) for Re z >= 1/2.
cplx log_gamma_right(cplx z) {
  z -= 1.0;
  cplx a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_pole(z)) throw Error("log_gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

cplx gamma(cplx z) {
  if (is_pole(z)) throw Error("gamma: pole at non-positive integer");
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * std::exp(log_gamma_right(1.0 - z)));
  return std::exp(log_gamma_right(z));
}

cplx rgamma(cplx z) {
  if (is_pole(z)) return 0.0;
  if (z.real() < 0.5) return std::sin(kPi * z) * std::exp(log_gamma_right(1.0 - z)) / kPi;
  return std::exp(-log_gamma_right(z));
}

double hermite_he(int d, double u) {
  if (d == 0) return 1.0;
  double prev = 1.0;
  double cur = u;
  for (int k = 1; k < d; ++k) {
    const double next = u * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_he_majorant(int d, double u) {
  // He_d(i v) = i^d H+_d(v) where H+ has the absolute coefficients, so
  // H+ obeys the recurrence with the sign of the k-term flipped.
  const double a = std::abs(u);
  if (d == 0) return 1.0;
  double prev = 1.0;
  double cur = a;
  for (int k = 1; k < d; ++k) {
    const double next = a * cur + k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace pararadon
