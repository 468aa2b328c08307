#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace corefall {

// Pairwise (cascade) summation: error grows O(log n) instead of O(n), which
// keeps averaged curves reproducible to full precision across run orders.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

namespace detail {

// continued fraction for the regularized incomplete beta (Lentz's method)
inline double beta_cf(double a, double b, double x) {
  const double tiny = 1e-300, eps = 1e-10;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0, d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace detail

// I_x(a, b), the regularized incomplete beta function, to ~1e-10
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  // the continued fraction converges fast only below the distribution mean
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * detail::beta_cf(a, b, x) / a;
  return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(b) - std::lgamma(a) +
                        b * std::log1p(-x) + a * std::log(x)) *
                   detail::beta_cf(b, a, 1.0 - x) / b;
}

// two-sided p-value of a t statistic with nu degrees of freedom:
// p = I_{nu/(nu+t^2)}(nu/2, 1/2)
inline double student_t_two_sided_p(double t, int nu) {
  if (nu < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
  double x = nu / (nu + t * t);
  return regularized_incomplete_beta(nu / 2.0, 0.5, x);
}

struct pearson_result {
  double r = 0.0;
  double p = 1.0;
  int n = 0;
};

// Pearson correlation with the exact two-sided significance test under the
// t distribution with n-2 degrees of freedom. Requires n >= 3 and
// nondegenerate inputs (both variances positive).
inline pearson_result pearson(std::span<const double> x,
                              std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("series lengths differ");
  std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("need at least 3 points");
  double mx = pairwise_sum(x) / n, my = pairwise_sum(y) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw std::invalid_argument("constant series has no correlation");
  pearson_result out;
  out.n = static_cast<int>(n);
  out.r = sxy / std::sqrt(sxx * syy);
  if (out.r > 1.0) out.r = 1.0;
  if (out.r < -1.0) out.r = -1.0;
  int nu = out.n - 2;
  double denom = 1.0 - out.r * out.r;
  if (denom <= 1e-15) {
    out.p = 0.0;  // perfectly collinear
  } else {
    double t = out.r * std::sqrt(nu / denom);
    out.p = student_t_two_sided_p(t, nu);
  }
  return out;
}

}  // namespace corefall
