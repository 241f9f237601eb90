#include "pararadon/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "pararadon/special.hpp"

namespace pararadon {

RealRule gauss_jacobi(int count, double a, double b) {
  if (count < 1) throw Error("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw Error("gauss_jacobi: exponents must exceed -1");

  // Recurrence coefficients of the monic Jacobi polynomials.
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(std::max(count - 1, 1));
  const double ab = a + b;
  diag(0) = (b - a) / (ab + 2.0);
  for (int k = 1; k < count; ++k) {
    const double t = 2.0 * k + ab;
    diag(k) = (b * b - a * a) / (t * (t + 2.0));
  }
  for (int k = 1; k < count; ++k) {
    const double t = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  RealRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  if (count == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mu0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(count - 1), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error("gauss_jacobi: eigen solver failed");
  for (int k = 0; k < count; ++k) {
    rule.nodes[k] = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[k] = mu0 * v0 * v0;
  }
  return rule;
}

RealRule gauss_legendre(int count) { return gauss_jacobi(count, 0.0, 0.0); }

QuadratureConfig QuadratureConfig::refined() const {
  QuadratureConfig c = *this;
  c.jacobi_nodes *= 2;
  c.panel_nodes *= 2;
  c.inner_step *= 0.5;
  return c;
}

namespace {

// \int_0^1 x^{c-1} P_k(2x - 1) dx for k = 0..count-1
std::vector<cplx> shifted_legendre_moments(cplx c, int count) {
  std::vector<cplx> m(count);
  m[0] = 1.0 / c;
  for (int k = 1; k < count; ++k) m[k] = m[k - 1] * (c - double(k)) / (c + double(k));
  return m;
}

}  // namespace

QuadRule::QuadRule(FracOrder alpha, const QuadratureConfig& config)
    : alpha_(alpha), config_(config), panel_(gauss_legendre(config.panel_nodes)) {
  if (!(alpha.alpha0 > 0.0)) throw Error("QuadRule: Re alpha must be positive");
  const double s0 = config.split;
  const int count = config.jacobi_nodes;
  const RealRule head = gauss_jacobi(count, 0.0, alpha.alpha0 - 1.0);
  head_nodes_.resize(count);
  head_weights_.resize(count);
  for (int k = 0; k < count; ++k) head_nodes_[k] = 0.5 * s0 * (1.0 + head.nodes[k]);

  if (alpha.gamma == 0.0) {
    const double scale = std::pow(0.5 * s0, alpha.alpha0);
    for (int k = 0; k < count; ++k) head_weights_[k] = scale * head.weights[k];
    return;
  }
  // Complex exponent: keep the Gauss-Jacobi nodes and choose the weights so
  // the rule integrates s^{alpha-1} p(s) exactly for deg p < count.
  Eigen::MatrixXd basis(count, count);
  for (int j = 0; j < count; ++j) {
    const double x = head.nodes[j];
    double prev = 1.0;
    double cur = x;
    basis(0, j) = 1.0;
    if (count > 1) basis(1, j) = x;
    for (int k = 2; k < count; ++k) {
      const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
      prev = cur;
      cur = next;
      basis(k, j) = cur;
    }
  }
  const std::vector<cplx> m = shifted_legendre_moments(alpha.value(), count);
  const cplx scale = std::exp(alpha.value() * std::log(s0));
  Eigen::VectorXcd rhs(count);
  for (int k = 0; k < count; ++k) rhs(k) = scale * m[k];
  const Eigen::VectorXcd w = basis.cast<cplx>().fullPivLu().solve(rhs);
  for (int k = 0; k < count; ++k) head_weights_[k] = w(k);
}

void QuadRule::build(double s_lo, double s_hi, std::vector<double>& nodes,
                     std::vector<cplx>& weights) const {
  nodes.clear();
  weights.clear();
  const double s0 = config_.split;
  if (!(s_hi > s_lo)) return;
  if (s_lo < s0) {
    nodes.assign(head_nodes_.begin(), head_nodes_.end());
    weights.assign(head_weights_.begin(), head_weights_.end());
  }
  const double start = std::max(s0, s_lo);
  if (!(s_hi > start)) return;
  const int panels = static_cast<int>(std::ceil((s_hi - start) / config_.panel_width));
  const double width = (s_hi - start) / panels;
  const cplx exponent = alpha_.value() - 1.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = start + p * width;
    for (std::size_t k = 0; k < panel_.nodes.size(); ++k) {
      const double s = lo + 0.5 * width * (1.0 + panel_.nodes[k]);
      nodes.push_back(s);
      weights.push_back(0.5 * width * panel_.weights[k] * std::exp(exponent * std::log(s)));
    }
  }
}

}  // namespace pararadon
