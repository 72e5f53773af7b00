// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "qnmlab/numerics.hpp"
#include "qnmlab/structures.hpp"

namespace qnmlab
{

using Matrix2c = Eigen::Matrix2cd;

// Maps (forward, backward) plane-wave amplitudes in the left cladding, referenced at x = 0,
// to those in the right cladding, referenced at x = L. det M = k_left / k_right.
Matrix2c transfer_matrix(const LayeredStack1D &stack, cplx omega);

// Backward amplitude on the right when only the outgoing wave exists on the left; zero
// exactly at the quasinormal frequencies.
cplx qnm_condition_1d(const LayeredStack1D &stack, cplx omega);

// Piecewise plane-wave solution of f'' + ω²ε(x) f = 0 on the whole line. In region r the
// field is F_r exp(ik_r s) + B_r exp(-ik_r s) with s measured from the region's left edge
// (x = 0 for the left cladding).
class StackWave
{
public:
  // Solution with the given (forward, backward) amplitudes in the left cladding.
  static StackWave from_left(const LayeredStack1D &stack, cplx omega, cplx forward,
                             cplx backward);
  // Solution with the given (forward, backward) amplitudes in the right cladding.
  static StackWave from_right(const LayeredStack1D &stack, cplx omega, cplx forward,
                              cplx backward);

  cplx omega() const { return omega_; }
  const LayeredStack1D &stack() const { return stack_; }

  cplx value(double x) const;
  cplx derivative(double x) const;

  struct Region
  {
    double origin;  // reference point of the exponentials
    double begin, end;
    double eps;
    cplx k;
    cplx forward, backward;
  };
  const std::vector<Region> &regions() const { return regions_; }

  StackWave scaled(cplx alpha) const;

private:
  StackWave(const LayeredStack1D &stack, cplx omega) : stack_(stack), omega_(omega) {}
  const Region &region_at(double x) const;

  LayeredStack1D stack_;
  cplx omega_;
  std::vector<Region> regions_;  // left cladding, layers..., right cladding
};

// ∫_{x0}^{x1} ε(x) a(x) b(x) dx in closed form; with conjugate_first the integrand uses
// conj(a).
cplx overlap_integral_1d(const StackWave &a, const StackWave &b, double x0, double x1,
                         bool conjugate_first = false);

// Quasinormal mode of a layered stack, normalized so that ⟨⟨f|f⟩⟩ = norm (1 as returned by
// find_qnm_1d).
struct Qnm1D
{
  ComplexFrequency omega;
  StackWave wave;
  std::vector<double> grid;  // uniform samples of [0, L]
  std::vector<cplx> samples;
  cplx norm;

  const LayeredStack1D &stack() const { return wave.stack(); }
  cplx value(double x) const { return wave.value(x); }

  // The same mode multiplied by alpha; the stored norm scales by alpha².
  Qnm1D scaled(cplx alpha) const;
};

// Newton search from `omega_guess` for a root of qnm_condition_1d (|residual| <= 1e-10),
// assembling and normalizing the field. Throws NoConvergence, or SpuriousRoot when the root
// has Im ω >= 0 or Re ω <= 0.
Qnm1D find_qnm_1d(const LayeredStack1D &stack, cplx omega_guess);

// Real frequencies in (0, omega_max] at local minima of |qnm_condition_1d|, ascending.
std::vector<double> scan_qnm_guesses_1d(const LayeredStack1D &stack, double omega_max,
                                        int points = 2000);

// ⟨⟨a|b⟩⟩ over [x_left, x_right] (which must contain the stack): the unconjugated ∫ εab plus
// i√ε/(ω_a+ω_b)·a·b at each end point.
cplx qnm_inner_product_1d(const Qnm1D &a, const Qnm1D &b, double x_left, double x_right);

// Corrected mode length: v_Q = ⟨⟨f|f⟩⟩/f(x_c)² and L_eff = |v_Q|²/(n_c² Re v_Q).
struct ModeLength
{
  cplx v_q;
  double l_eff;
};

// Throws NearZeroField when x_c sits on a node (|f(x_c)|² < 1e-12 max|f|²) and DomainError
// when Re v_Q <= 0.
ModeLength mode_length_1d(const Qnm1D &mode, double x_c);

}  // namespace qnmlab
