// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "qnmlab/qnm1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qnmlab/errors.hpp"

namespace qnmlab
{

namespace
{

constexpr cplx I{0.0, 1.0};
constexpr double inf = std::numeric_limits<double>::infinity();

// Amplitudes in a region of wavenumber k2 matching value f and slope df at its left edge.
std::pair<cplx, cplx> match(cplx f, cplx df, cplx k2)
{
  const cplx g = df / (I * k2);
  return {0.5 * (f + g), 0.5 * (f - g)};
}

}  // namespace

StackWave StackWave::from_left(const LayeredStack1D &stack, cplx omega, cplx forward,
                               cplx backward)
{
  if (omega == cplx(0.0))
  {
    throw std::invalid_argument("StackWave: omega must be non-zero");
  }
  StackWave w(stack, omega);
  const auto &layers = stack.layers();
  w.regions_.reserve(layers.size() + 2);
  const double el = stack.eps_left();
  w.regions_.push_back({0.0, -inf, 0.0, el, omega * std::sqrt(el), forward, backward});

  auto append = [&](double begin, double end, double eps)
  {
    const Region &prev = w.regions_.back();
    const double d = begin - prev.origin;
    const cplx ef = std::exp(I * prev.k * d), eb = std::exp(-I * prev.k * d);
    const cplx f = prev.forward * ef + prev.backward * eb;
    const cplx df = I * prev.k * (prev.forward * ef - prev.backward * eb);
    const cplx k = omega * std::sqrt(eps);
    const auto [fw, bw] = match(f, df, k);
    w.regions_.push_back({begin, begin, end, eps, k, fw, bw});
  };
  const auto &x = stack.interfaces();
  for (std::size_t j = 0; j < layers.size(); ++j)
  {
    append(x[j], x[j + 1], layers[j].eps);
  }
  append(stack.length(), inf, stack.eps_right());
  return w;
}

StackWave StackWave::from_right(const LayeredStack1D &stack, cplx omega, cplx forward,
                                cplx backward)
{
  const Matrix2c m = transfer_matrix(stack, omega);
  const Eigen::Vector2cd left = m.inverse() * Eigen::Vector2cd(forward, backward);
  return from_left(stack, omega, left(0), left(1));
}

const StackWave::Region &StackWave::region_at(double x) const
{
  return regions_[stack_.region_of(x) + 1];
}

cplx StackWave::value(double x) const
{
  const auto &r = region_at(x);
  const double s = x - r.origin;
  return r.forward * std::exp(I * r.k * s) + r.backward * std::exp(-I * r.k * s);
}

cplx StackWave::derivative(double x) const
{
  const auto &r = region_at(x);
  const double s = x - r.origin;
  return I * r.k * (r.forward * std::exp(I * r.k * s) - r.backward * std::exp(-I * r.k * s));
}

StackWave StackWave::scaled(cplx alpha) const
{
  StackWave w = *this;
  for (auto &r : w.regions_)
  {
    r.forward *= alpha;
    r.backward *= alpha;
  }
  return w;
}

Matrix2c transfer_matrix(const LayeredStack1D &stack, cplx omega)
{
  const auto from_fwd = StackWave::from_left(stack, omega, 1.0, 0.0).regions().back();
  const auto from_bwd = StackWave::from_left(stack, omega, 0.0, 1.0).regions().back();
  Matrix2c m;
  m << from_fwd.forward, from_bwd.forward, from_fwd.backward, from_bwd.backward;
  return m;
}

cplx qnm_condition_1d(const LayeredStack1D &stack, cplx omega)
{
  return StackWave::from_left(stack, omega, 0.0, 1.0).regions().back().backward;
}

cplx overlap_integral_1d(const StackWave &a, const StackWave &b, double x0, double x1,
                         bool conjugate_first)
{
  cplx total = 0.0;
  const auto &ra = a.regions();
  const auto &rb = b.regions();
  for (std::size_t r = 0; r < ra.size(); ++r)
  {
    const double u = std::max(x0, ra[r].begin);
    const double v = std::min(x1, ra[r].end);
    if (!(v > u))
    {
      continue;
    }
    struct Term
    {
      cplx coef, q;
    };
    Term as[2], bs[2];
    if (conjugate_first)
    {
      as[0] = {std::conj(ra[r].forward), -std::conj(ra[r].k)};
      as[1] = {std::conj(ra[r].backward), std::conj(ra[r].k)};
    }
    else
    {
      as[0] = {ra[r].forward, ra[r].k};
      as[1] = {ra[r].backward, -ra[r].k};
    }
    bs[0] = {rb[r].forward, rb[r].k};
    bs[1] = {rb[r].backward, -rb[r].k};
    const double s0 = u - ra[r].origin;
    cplx part = 0.0;
    for (const auto &p : as)
    {
      for (const auto &q : bs)
      {
        const cplx qq = p.q + q.q;
        part += p.coef * q.coef * std::exp(I * qq * s0) * integrate_exp(qq, v - u);
      }
    }
    total += ra[r].eps * part;
  }
  return total;
}

namespace
{

cplx surface_term(const StackWave &a, const StackWave &b, double x_left, double x_right)
{
  const auto &st = a.stack();
  const cplx ends = std::sqrt(st.eps_right()) * a.value(x_right) * b.value(x_right) +
                    std::sqrt(st.eps_left()) * a.value(x_left) * b.value(x_left);
  return I / (a.omega() + b.omega()) * ends;
}

cplx inner_product(const StackWave &a, const StackWave &b, double x_left, double x_right)
{
  return overlap_integral_1d(a, b, x_left, x_right) + surface_term(a, b, x_left, x_right);
}

bool has_contrast(const LayeredStack1D &stack)
{
  const double e = stack.eps_left();
  if (stack.eps_right() != e)
  {
    return true;
  }
  return std::any_of(stack.layers().begin(), stack.layers().end(),
                     [e](const Layer &l) { return l.eps != e; });
}

}  // namespace

Qnm1D Qnm1D::scaled(cplx alpha) const
{
  Qnm1D out = *this;
  out.wave = wave.scaled(alpha);
  for (auto &s : out.samples)
  {
    s *= alpha;
  }
  out.norm *= alpha * alpha;
  return out;
}

Qnm1D find_qnm_1d(const LayeredStack1D &stack, cplx omega_guess)
{
  if (!has_contrast(stack))
  {
    throw NoConvergence("homogeneous medium: no quasinormal modes exist", omega_guess, INFINITY);
  }
  const auto root = find_root_complex([&](cplx w) { return qnm_condition_1d(stack, w); },
                                      omega_guess, 1e-12, 60);
  const ComplexFrequency freq{root.root};
  if (!freq.is_physical())
  {
    std::ostringstream msg;
    msg << "root at omega = " << root.root << " is not a decaying resonance";
    throw SpuriousRoot(msg.str(), root.root, root.residual);
  }

  StackWave wave = StackWave::from_left(stack, freq.omega, 0.0, 1.0);
  const double len = stack.length();
  const cplx norm = inner_product(wave, wave, 0.0, len);
  wave = wave.scaled(1.0 / std::sqrt(norm));

  double max_eps = std::max(stack.eps_left(), stack.eps_right());
  for (const auto &l : stack.layers())
  {
    max_eps = std::max(max_eps, l.eps);
  }
  const double wavelength = 2.0 * pi / (std::abs(freq.omega) * std::sqrt(max_eps));
  int intervals = std::max(64, int(std::ceil(64.0 * len / wavelength)));
  intervals += intervals % 2;

  Qnm1D mode{freq, wave, {}, {}, inner_product(wave, wave, 0.0, len)};
  mode.grid.resize(intervals + 1);
  mode.samples.resize(intervals + 1);
  for (int i = 0; i <= intervals; ++i)
  {
    const double x = len * i / intervals;
    mode.grid[i] = x;
    mode.samples[i] = wave.value(x);
  }
  return mode;
}

std::vector<double> scan_qnm_guesses_1d(const LayeredStack1D &stack, double omega_max,
                                        int points)
{
  std::vector<double> w(points), mag(points);
  for (int i = 0; i < points; ++i)
  {
    w[i] = omega_max * (i + 1) / points;
    mag[i] = std::abs(qnm_condition_1d(stack, w[i]));
  }
  std::vector<double> minima;
  for (int i = 1; i + 1 < points; ++i)
  {
    if (mag[i] < mag[i - 1] && mag[i] <= mag[i + 1])
    {
      minima.push_back(w[i]);
    }
  }
  return minima;
}

cplx qnm_inner_product_1d(const Qnm1D &a, const Qnm1D &b, double x_left, double x_right)
{
  if (x_left > 0.0 || x_right < a.stack().length())
  {
    throw std::invalid_argument("qnm_inner_product_1d: interval must contain the stack");
  }
  return inner_product(a.wave, b.wave, x_left, x_right);
}

ModeLength mode_length_1d(const Qnm1D &mode, double x_c)
{
  double peak = 0.0;
  for (const auto &s : mode.samples)
  {
    peak = std::max(peak, std::norm(s));
  }
  const cplx f = mode.value(x_c);
  if (std::norm(f) < 1e-12 * peak)
  {
    throw NearZeroField("mode_length_1d: x_c lies on a node of the mode");
  }
  const cplx v = mode.norm / (f * f);
  if (!(v.real() > 0.0))
  {
    throw DomainError("mode_length_1d: Re v_Q must be positive");
  }
  const double n2 = mode.stack().eps_at(x_c);
  return {v, std::norm(v) / (v.real() * n2)};
}

}  // namespace qnmlab
