#pragma once

#include <vector>

#include "pararadon/point_function.hpp"

namespace pararadon {

enum class TestKind { gaussian, hermite_gaussian, phi_class };

const char* to_string(TestKind k);

/// One separable term
///
///   coef * prod_i He_{d_i}(u_i) exp(-u_i^2 / 2) exp(i k_i x_i),   u_i = (x_i - c_i) / sigma_i,
///
/// whose Fourier transform (kernel e^{+i x.xi}) is
///
///   coef * prod_i e^{i c_i (xi_i + k_i)} sigma_i sqrt(2 pi) (i sigma_i (xi_i + k_i))^{d_i}
///                 exp(-sigma_i^2 (xi_i + k_i)^2 / 2).
struct Atom {
  cplx coef{1.0, 0.0};
  std::array<double, kMaxDim> center{0.0, 0.0, 0.0};
  std::array<double, kMaxDim> width{1.0, 1.0, 1.0};
  std::array<int, kMaxDim> degree{0, 0, 0};
  std::array<double, kMaxDim> wavevector{0.0, 0.0, 0.0};
};

/// Closed-form Schwartz function: a finite sum of Hermite-Gauss atoms.
///
/// Evaluation, the Fourier transform, x_n-derivatives, reflection,
/// translation and anisotropic dilation are all exact. The phi_class
/// family is modulated along x_n so that its spectrum sits around
/// xi_n = -kappa; with sigma_n * kappa >= 6 the spectrum on the plane
/// xi_n = 0 is below exp(-18) of its peak.
class TestFunction {
 public:
  TestFunction(int dim, TestKind kind, std::vector<Atom> atoms);

  /// exp(-|x - c|^2 / (2 sigma^2)) per axis.
  static TestFunction gaussian(int dim, const std::array<double, kMaxDim>& center = {},
                               const std::array<double, kMaxDim>& width = {1.0, 1.0, 1.0});
  /// exp(-|x|^2)
  static TestFunction unit_gaussian(int dim);
  static TestFunction hermite_gaussian(int dim, const std::array<double, kMaxDim>& center,
                                       const std::array<double, kMaxDim>& width,
                                       const std::array<int, kMaxDim>& degree);
  /// Gaussian in x', Hermite-Gauss times exp(i kappa x_n) along x_n.
  static TestFunction phi_class(int dim, const std::array<double, kMaxDim>& center,
                                const std::array<double, kMaxDim>& width, double kappa,
                                int degree_n = 0);
  /// The function with spectrum xi_n^2 exp(-|xi|^2): vanishes on xi_n = 0 to second order.
  static TestFunction phi_moment(int dim);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] TestKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<Atom>& atoms() const { return atoms_; }

  cplx operator()(const Point& x) const;
  /// Analytic Fourier transform, kernel e^{+i x.xi}.
  [[nodiscard]] cplx spectrum(const Point& xi) const;

  /// d^k/dx_n^k, exact (stays in the family).
  [[nodiscard]] TestFunction derivative_n(int k) const;
  /// x -> f(-x)
  [[nodiscard]] TestFunction reflected() const;
  /// x -> f(x - h)
  [[nodiscard]] TestFunction translated(const Point& h) const;
  /// x -> f(l1 x', l2 x_n)
  [[nodiscard]] TestFunction dilated(double l1, double l2) const;
  [[nodiscard]] TestFunction scaled(cplx s) const;

  /// Box outside which every atom is below rel_tol times its own peak.
  [[nodiscard]] Box support(double rel_tol) const;
  /// Upper bound of |f(x)| over the region |x_axis| >= r.
  [[nodiscard]] double tail_bound(int axis, double r) const;

  [[nodiscard]] PointFunction as_point_function(double rel_tol = 1e-16) const;

  friend TestFunction operator+(const TestFunction& a, const TestFunction& b);

 private:
  int dim_;
  TestKind kind_;
  std::vector<Atom> atoms_;
};

/// Closed-form sampling: values[j] = f(x_j).
SampledField sample(const TestFunction& f, const Grid& g);

/// Exact spectrum on the frequency nodes of g.
SampledField sample_spectrum(const TestFunction& f, const Grid& g);

}  // namespace pararadon
