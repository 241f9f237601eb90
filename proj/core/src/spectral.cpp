#include "pararadon/spectral.hpp"

#include <cmath>
#include <sstream>

#include "pararadon/diagnostics.hpp"
#include "pararadon/fourier.hpp"
#include "pararadon/parallel.hpp"

namespace pararadon {

namespace {

const cplx kI{0.0, 1.0};

double sgn(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }

double sq_prime(const Point& xi, int n) {
  double r = 0.0;
  for (int i = 0; i + 1 < n; ++i) r += xi[i] * xi[i];
  return r;
}

}  // namespace

cplx branch_power(double t, cplx lambda, const PowerForm& form) {
  switch (form.kind) {
    case PowerForm::Kind::plus_i:
    case PowerForm::Kind::minus_i: {
      if (t == 0.0) throw Error("branch_power: singular input t = 0");
      const double side = form.kind == PowerForm::Kind::plus_i ? 1.0 : -1.0;
      return std::exp(lambda * std::log(std::abs(t)) + side * lambda * (0.5 * kPi * kI) * sgn(t));
    }
    case PowerForm::Kind::shifted: {
      if (!(form.eps > 0.0)) throw Error("branch_power: eps must be positive");
      const double im = form.sign == Sign::plus ? -t : t;
      // |z| and arg z of z = eps + i im, arg in (-pi/2, pi/2) since eps > 0
      const double modulus = std::hypot(form.eps, im);
      const double arg = std::atan2(im, form.eps);
      return std::exp(lambda * cplx(std::log(modulus), arg));
    }
  }
  throw Error("branch_power: unknown form");
}

const char* to_string(SingularPolicy p) {
  return p == SingularPolicy::zero_fill ? "zero_fill" : "half_shift";
}

SingularPolicy parse_policy(const std::string& name) {
  if (name == "zero_fill") return SingularPolicy::zero_fill;
  if (name == "half_shift") return SingularPolicy::half_shift;
  throw Error("unknown singular policy '" + name + "' (expected zero_fill or half_shift)");
}

const char* to_string(RieszKind k) { return k == RieszKind::even ? "even" : "odd"; }

cplx symbol_q(const Point& xi, int n, FracOrder alpha, Sign sign, bool dual) {
  const double t = dual ? -xi[n - 1] : xi[n - 1];
  if (t == 0.0) throw Error("symbol_q: singular plane xi_n = 0");
  const double half = 0.5 * (n - 1);
  const cplx lambda = -alpha.value() - half;
  // (-+ i t)^lambda: q_+ uses (-i t), q_- uses (+i t)
  const PowerForm form = sign == Sign::plus ? PowerForm::minus_i() : PowerForm::plus_i();
  cplx omega = std::pow(kPi, half) * std::exp(-kI * sq_prime(xi, n) / (4.0 * t));
  if (sign == Sign::minus) omega *= std::exp(kI * (half * kPi) * sgn(t));
  return branch_power(t, lambda, form) * omega;
}

cplx symbol_q_regularized(const Point& xi, int n, FracOrder alpha, Sign sign, double eps,
                          bool dual) {
  if (!(eps > 0.0)) throw Error("symbol_q_regularized: eps must be positive");
  const double t = dual ? -xi[n - 1] : xi[n - 1];
  const double half = 0.5 * (n - 1);
  const cplx z(eps, -t);  // eps - i t
  const cplx gauss = std::pow(kPi, half) * std::exp(-sq_prime(xi, n) / (4.0 * z));
  if (sign == Sign::plus) {
    return branch_power(t, -alpha.value() - half, PowerForm::shifted(eps, Sign::plus)) * gauss;
  }
  return branch_power(t, -alpha.value(), PowerForm::shifted(eps, Sign::minus)) *
         branch_power(t, cplx(-half), PowerForm::shifted(eps, Sign::plus)) * gauss;
}

cplx symbol_riesz_type(const Point& xi, int n, FracOrder alpha, RieszKind kind) {
  const cplx a = alpha.value();
  const cplx half_angle = 0.5 * kPi * a;
  const cplx plus = symbol_q(xi, n, alpha, Sign::plus);
  const cplx minus = symbol_q(xi, n, alpha, Sign::minus);
  if (kind == RieszKind::even) {
    const cplx norm = 2.0 * std::cos(half_angle);
    if (std::abs(norm) < 1e-13) {
      throw Error("riesz_type: cos(alpha pi/2) vanishes, even kind undefined at this alpha");
    }
    return (plus + minus) / norm;
  }
  const cplx norm = 2.0 * kI * std::sin(half_angle);
  if (std::abs(norm) < 1e-13) {
    throw Error("riesz_type: sin(alpha pi/2) vanishes, odd kind undefined at this alpha");
  }
  return (plus - minus) / norm;
}

MultiplierField::MultiplierField(const Grid& g, SingularPolicy policy, const Symbol& symbol,
                                 std::optional<cplx> plane_value)
    : grid_(g), policy_(policy), values_(g.size()) {
  const int last = g.dim() - 1;
  const int plane = g.points(last) / 2;
  parallel_for(g.size(), [&](std::size_t j) {
    if (plane_value && policy_ == SingularPolicy::zero_fill && g.unflatten(j)[last] == plane) {
      values_[j] = *plane_value;
    } else {
      values_[j] = symbol(node(j));
    }
  });
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error("MultiplierField: non-finite symbol value");
    }
  }
}

Point MultiplierField::node(std::size_t j) const {
  Point xi = grid_.frequency(j);
  if (policy_ == SingularPolicy::half_shift) {
    const int last = grid_.dim() - 1;
    xi[last] += 0.5 * grid_.freq_step(last);
  }
  return xi;
}

MultiplierField make_multiplier(const Grid& g, FracOrder alpha, Sign sign, bool dual,
                                SingularPolicy policy) {
  const int n = g.dim();
  MultiplierField m(
      g, policy, [&](const Point& xi) { return symbol_q(xi, n, alpha, sign, dual); });
  m.kind = MultiplierField::Kind::fracint;
  m.order = alpha;
  m.sign = sign;
  m.dual = dual;
  return m;
}

MultiplierField make_multiplier_regularized(const Grid& g, FracOrder alpha, Sign sign,
                                            double eps, bool dual) {
  if (!(eps > 0.0)) throw Error("make_multiplier_regularized: eps must be positive");
  const int n = g.dim();
  MultiplierField m(
      g, SingularPolicy::zero_fill,
      [&](const Point& xi) { return symbol_q_regularized(xi, n, alpha, sign, eps, dual); },
      std::nullopt);
  m.kind = MultiplierField::Kind::regularized;
  m.singular = false;
  m.order = alpha;
  m.sign = sign;
  m.dual = dual;
  return m;
}

namespace {

SampledField modulate(const SampledField& f, double delta) {
  const Grid& g = f.grid();
  const int last = g.dim() - 1;
  std::vector<cplx> v(f.values().begin(), f.values().end());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double x = g.nodes(last)[g.unflatten(j)[last]];
    v[j] *= std::exp(cplx(0.0, delta * x));
  }
  return {g, f.tag(), std::move(v)};
}

double plane_mass_fraction(const SampledField& spectrum) {
  const Grid& g = spectrum.grid();
  const int last = g.dim() - 1;
  const int plane = g.points(last) / 2;
  double on_plane = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const double w = std::norm(spectrum[j]);
    total += w;
    if (g.unflatten(j)[last] == plane) on_plane += w;
  }
  return total > 0.0 ? on_plane / total : 0.0;
}

}  // namespace

SampledField apply_multiplier(const SampledField& f, const MultiplierField& m,
                              ApplyReport* report) {
  if (f.tag() != Domain::space) throw Error("apply_multiplier: spatial field expected");
  if (!(f.grid().spec() == m.grid().spec())) throw Error("apply_multiplier: grid mismatch");
  const int last = f.grid().dim() - 1;
  const bool shifted = m.policy() == SingularPolicy::half_shift;
  const double delta = 0.5 * f.grid().freq_step(last);

  const SampledField spectrum = fourier_forward(shifted ? modulate(f, delta) : f);
  ApplyReport local;
  if (!shifted && m.singular) {
    local.plane_mass_fraction = plane_mass_fraction(spectrum);
    if (local.plane_mass_fraction > kPlaneMassTolerance) {
      local.warned = true;
      std::ostringstream msg;
      msg << "zero_fill: spectral mass on xi_n = 0 is " << local.plane_mass_fraction
          << " of the total (limit " << kPlaneMassTolerance
          << "); the input is not Phi-class on this grid, consider half_shift";
      emit_warning(msg.str());
    }
  }
  if (report) *report = local;

  std::vector<cplx> v = SampledField(spectrum).release();
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= m[j];
  SampledField out = fourier_inverse(SampledField(f.grid(), Domain::frequency, std::move(v)));
  return shifted ? modulate(out, -delta) : out;
}

SampledField apply_multiplier(const TestFunction& f, const MultiplierField& m,
                              ApplyReport* report) {
  return apply_multiplier(sample(f, m.grid()), m, report);
}

SampledField spectral_fracint(const SampledField& f, FracOrder alpha, Sign sign, bool dual,
                              SingularPolicy policy) {
  return apply_multiplier(f, make_multiplier(f.grid(), alpha, sign, dual, policy));
}

SampledField riesz_potential_n(const SampledField& f, cplx lambda, SingularPolicy policy) {
  const int last = f.grid().dim() - 1;
  // |0|^{-lambda}: 1 at lambda = 0, 0 for Re lambda < 0, singular otherwise (filled with 0)
  const cplx plane = lambda == cplx(0.0) ? cplx(1.0) : cplx(0.0);
  MultiplierField m(
      f.grid(), policy,
      [&](const Point& xi) -> cplx {
        const double t = std::abs(xi[last]);
        if (t == 0.0) return plane;
        return std::exp(-lambda * std::log(t));
      },
      std::nullopt);
  m.kind = MultiplierField::Kind::riesz_potential;
  m.singular = lambda != cplx(0.0) && lambda.real() >= 0.0;
  m.order = FracOrder(lambda);
  return apply_multiplier(f, m);
}

MultiplierField make_riesz_type_multiplier(const Grid& g, FracOrder alpha, RieszKind kind,
                                           SingularPolicy policy) {
  const int n = g.dim();
  // validates the normaliser before touching the grid
  (void)symbol_riesz_type(Point{1.0, 1.0, 1.0}, n, alpha, kind);
  MultiplierField m(
      g, policy, [&](const Point& xi) { return symbol_riesz_type(xi, n, alpha, kind); });
  m.kind = MultiplierField::Kind::riesz_type;
  m.order = alpha;
  return m;
}

SampledField riesz_type_fracint(const SampledField& f, FracOrder alpha, RieszKind kind,
                                SingularPolicy policy) {
  return apply_multiplier(f, make_riesz_type_multiplier(f.grid(), alpha, kind, policy));
}

}  // namespace pararadon
