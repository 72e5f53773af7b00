// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "qnmlab/errors.hpp"
#include "qnmlab/numerics.hpp"

namespace qnmlab
{
namespace
{

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

TEST(Bessel, HankelMatchesReferenceValues)
{
  for (const auto &s : oracle::cylinder_samples)
  {
    SCOPED_TRACE(::testing::Message() << "z = " << s.z);
    EXPECT_LE(rel(hankel0_first_kind(s.z), s.h0), 1e-10);
    EXPECT_LE(rel(hankel1_first_kind(s.z), s.h1), 1e-10);
  }
}

TEST(Bessel, FirstAndSecondKindMatchReferenceValues)
{
  // Absolute error scaled by the larger of |J| and |Y|: near a zero of J_n a relative
  // measure says nothing about the evaluation.
  for (const auto &s : oracle::cylinder_samples)
  {
    SCOPED_TRACE(::testing::Message() << "z = " << s.z);
    const auto f = bessel_jy01(s.z);
    const double s0 = std::max(std::abs(s.j0), std::abs(s.y0));
    const double s1 = std::max(std::abs(s.j1), std::abs(s.y1));
    EXPECT_LE(std::abs(f.j0 - s.j0) / s0, 1e-11);
    EXPECT_LE(std::abs(f.y0 - s.y0) / s0, 1e-11);
    EXPECT_LE(std::abs(f.j1 - s.j1) / s1, 1e-11);
    EXPECT_LE(std::abs(f.y1 - s.y1) / s1, 1e-11);
    EXPECT_LE(std::abs(bessel_j0(s.z) - s.j0) / s0, 1e-11);
    EXPECT_LE(std::abs(bessel_j1(s.z) - s.j1) / s1, 1e-11);
  }
}

TEST(Bessel, ContinuousAcrossSeriesAsymptoticSeam)
{
  for (double t = -3.0; t <= 3.0; t += 0.25)
  {
    const cplx dir = std::exp(cplx(0.0, t));
    const cplx inside = (12.0 - 5e-10) * dir, outside = (12.0 + 5e-10) * dir;
    EXPECT_LE(rel(hankel0_first_kind(inside), hankel0_first_kind(outside)), 1e-8);
    EXPECT_LE(rel(hankel1_first_kind(inside), hankel1_first_kind(outside)), 1e-8);
  }
}

TEST(Bessel, WronskianOnRealAxis)
{
  // J0 Y0' - J0' Y0 = 2/(πx), with derivatives by central differences.
  const double h = 1e-5;
  for (double x = 0.5; x <= 20.0; x += 0.37)
  {
    const auto f = bessel_jy01(x);
    const auto fp = bessel_jy01(x + h), fm = bessel_jy01(x - h);
    const cplx dj = (fp.j0 - fm.j0) / (2.0 * h), dy = (fp.y0 - fm.y0) / (2.0 * h);
    EXPECT_NEAR((f.j0 * dy - dj * f.y0).real(), 2.0 / (pi * x), 1e-6) << "x = " << x;
  }
}

TEST(Bessel, ConjugateSymmetry)
{
  std::mt19937 gen(20260101);
  std::uniform_real_distribution<double> re(0.05, 45.0), im(-5.0, 5.0);
  for (int i = 0; i < 200; ++i)
  {
    const cplx z(re(gen), im(gen));
    const auto a = bessel_jy01(z), b = bessel_jy01(std::conj(z));
    EXPECT_LE(rel(b.j0, std::conj(a.j0)), 1e-13);
    EXPECT_LE(rel(b.y0, std::conj(a.y0)), 1e-13);
  }
}

TEST(Bessel, SingularAtOrigin)
{
  EXPECT_THROW(hankel0_first_kind(0.0), DomainError);
  EXPECT_THROW(bessel_jy01(0.0), DomainError);
  EXPECT_EQ(bessel_j0(0.0), cplx(1.0));
  EXPECT_EQ(bessel_j1(0.0), cplx(0.0));
}

TEST(Quadrature, GaussLegendreMatchesReference)
{
  const auto r5 = gauss_legendre(5);
  const auto r12 = gauss_legendre(12);
  for (int i = 0; i < 5; ++i)
  {
    EXPECT_NEAR(r5.nodes[i], oracle::gauss_nodes_5[i], 1e-15);
    EXPECT_NEAR(r5.weights[i], oracle::gauss_weights_5[i], 1e-15);
  }
  for (int i = 0; i < 12; ++i)
  {
    EXPECT_NEAR(r12.nodes[i], oracle::gauss_nodes_12[i], 1e-15);
    EXPECT_NEAR(r12.weights[i], oracle::gauss_weights_12[i], 1e-15);
  }
}

TEST(Quadrature, ExactForPolynomialsUpToDegree2nMinus1)
{
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int n = 1; n <= 20; ++n)
  {
    const auto rule = gauss_legendre(n, -0.3, 1.7);
    std::vector<double> c(2 * n);
    for (auto &v : c)
    {
      v = coef(gen);
    }
    double exact = 0.0, quad = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
    {
      exact += c[k] * (std::pow(1.7, k + 1) - std::pow(-0.3, k + 1)) / double(k + 1);
      scale += std::abs(c[k]) * std::pow(1.7, k + 1) / double(k + 1);
    }
    for (int i = 0; i < n; ++i)
    {
      double p = 0.0;
      for (std::size_t k = c.size(); k-- > 0;)
      {
        p = p * rule.nodes[i] + c[k];
      }
      quad += rule.weights[i] * p;
    }
    EXPECT_NEAR(quad, exact, 1e-14 * scale) << "n = " << n;
  }
}

TEST(Quadrature, IntegrateExpClosedForm)
{
  EXPECT_NEAR(std::abs(integrate_exp(0.0, 2.5) - 2.5), 0.0, 1e-15);
  const cplx q(1.3, -0.4);
  const cplx want = (std::exp(cplx(0.0, 1.0) * q * 0.8) - 1.0) / (cplx(0.0, 1.0) * q);
  EXPECT_LE(rel(integrate_exp(q, 0.8), want), 1e-14);
  // Small-argument branch agrees with the closed form where both are accurate.
  const cplx tiny(1e-5, 2e-6);
  const cplx direct = (std::exp(cplx(0.0, 1.0) * tiny * 30.0) - 1.0) / (cplx(0.0, 1.0) * tiny);
  EXPECT_LE(rel(integrate_exp(tiny, 30.0), direct), 1e-9);
}

TEST(Roots, NewtonFindsPolynomialRoots)
{
  auto f = [](cplx z) { return (z - cplx(1.0, -0.5)) * (z + 2.0) * (z - cplx(0.0, 3.0)); };
  const auto r = find_root_complex(f, cplx(1.2, -0.2), 1e-13, 50);
  EXPECT_LE(std::abs(r.root - cplx(1.0, -0.5)), 1e-12);
  EXPECT_LE(r.residual, 1e-13);
}

TEST(Roots, ReportsNonConvergence)
{
  auto f = [](cplx z) { return std::exp(z); };  // no roots
  try
  {
    find_root_complex(f, 0.0, 1e-12, 20);
    FAIL() << "expected NoConvergence";
  }
  catch (const NoConvergence &e)
  {
    EXPECT_GT(e.residual(), 0.0);
  }
  EXPECT_THROW(find_root_complex(f, 0.0, 0.0, 20), std::invalid_argument);
}

TEST(Frequency, QualityFactorAndUnits)
{
  const ComplexFrequency w{cplx(2.0, -0.01)};
  EXPECT_DOUBLE_EQ(w.q_factor(), 100.0);
  EXPECT_TRUE(w.is_physical());
  EXPECT_FALSE(ComplexFrequency{cplx(2.0, 0.01)}.is_physical());
  const cplx nu(0.4218, -0.0013);
  EXPECT_LE(std::abs(ComplexFrequency::from_normalized(nu, 1.0).normalized(1.0) - nu), 1e-16);
}

ComplexMatrix random_matrix(std::mt19937 &gen, int n)
{
  std::normal_distribution<double> d;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
  {
    for (int j = 0; j < n; ++j)
    {
      a(i, j) = cplx(d(gen), d(gen));
    }
  }
  return a;
}

TEST(Eigen, DenseSolveSortedByDistanceToTarget)
{
  std::mt19937 gen(11);
  for (int trial = 0; trial < 10; ++trial)
  {
    const auto a = random_matrix(gen, 30);
    const cplx target(0.3, -0.2);
    const auto pairs = dense_eigensolve(a, target);
    ASSERT_EQ(pairs.size(), 30u);
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
    {
      EXPECT_LE(std::abs(pairs[i].value - target), std::abs(pairs[i + 1].value - target));
    }
    for (const auto &p : pairs)
    {
      EXPECT_LE((a * p.vector - p.value * p.vector).norm(), 1e-10 * a.norm());
    }
  }
}

TEST(Eigen, InverseIterationAgreesWithDenseSolve)
{
  std::mt19937 gen(12);
  for (int trial = 0; trial < 10; ++trial)
  {
    const auto a = random_matrix(gen, 40);
    const cplx target(1.0, 0.0);
    const auto dense = dense_eigensolve(a, target).front();
    const auto near = nearest_eigenpair(a, target);
    EXPECT_LE(std::abs(near.value - dense.value), 1e-10 * std::abs(dense.value));
  }
}

TEST(Eigen, InverseIterationSeparatesEquidistantPair)
{
  // Eigenvalues 0 and 2 are equidistant from the shift 1; the closer one (1.9) must win.
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a(0, 0) = 0.0;
  a(1, 1) = 2.0;
  a(2, 2) = 1.9;
  a(0, 1) = 0.3;
  const auto p = nearest_eigenpair(a, 1.0);
  EXPECT_NEAR(std::abs(p.value - 1.9), 0.0, 1e-12);
}

TEST(Eigen, RejectsNonFiniteMatrix)
{
  ComplexMatrix a = ComplexMatrix::Identity(3, 3);
  a(1, 2) = cplx(NAN, 0.0);
  EXPECT_THROW(dense_eigensolve(a), NoConvergence);
}

}  // namespace
}  // namespace qnmlab
