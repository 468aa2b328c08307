#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <vector>

#include "corefall/rng.hpp"
#include "corefall/stats.hpp"
#include "support.hpp"

using namespace corefall;

TEST_CASE("pairwise sum matches plain accumulation") {
  std::vector<double> xs;
  corefall::rng64 rng(3);
  for (int i = 0; i < 1000; ++i) xs.push_back(rng.unit() - 0.5);
  double plain = std::accumulate(xs.begin(), xs.end(), 0.0);
  REQUIRE(pairwise_sum(xs) == Catch::Approx(plain).margin(1e-9));
  REQUIRE(pairwise_sum(std::vector<double>{}) == 0.0);
  REQUIRE(pairwise_sum(std::vector<double>{1, 2, 3, 4}) == 10.0);
}

TEST_CASE("regularized incomplete beta basics") {
  // I_x(1,1) is the identity
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.92, 1.0})
    REQUIRE(regularized_incomplete_beta(1, 1, x) == Catch::Approx(x).margin(1e-12));
  // symmetry point of a symmetric distribution
  REQUIRE(regularized_incomplete_beta(2, 2, 0.5) == Catch::Approx(0.5).margin(1e-12));
  REQUIRE(regularized_incomplete_beta(5, 5, 0.5) == Catch::Approx(0.5).margin(1e-12));
  // reflection identity
  for (double x : {0.12, 0.33, 0.71})
    REQUIRE(regularized_incomplete_beta(2.5, 4.0, x) ==
            Catch::Approx(1.0 - regularized_incomplete_beta(4.0, 2.5, 1.0 - x))
                .margin(1e-10));
  // I_x(1,2) = 1 - (1-x)^2
  REQUIRE(regularized_incomplete_beta(1, 2, 0.25) ==
          Catch::Approx(1.0 - 0.75 * 0.75).margin(1e-12));
}

TEST_CASE("two-sided t-tail against numeric integration") {
  for (int nu : {1, 2, 5, 10, 30}) {
    for (double t : {0.0, 0.5, 1.0, 2.0, 3.5}) {
      double got = student_t_two_sided_p(t, nu);
      double want = support::t_two_sided_by_integration(t, nu);
      INFO("nu=" << nu << " t=" << t);
      REQUIRE(got == Catch::Approx(want).margin(1e-6));
    }
  }
  REQUIRE(student_t_two_sided_p(0.0, 7) == Catch::Approx(1.0).margin(1e-12));
  // textbook value: P(|T_10| > 2.228) = 0.05
  REQUIRE(student_t_two_sided_p(2.228, 10) == Catch::Approx(0.05).margin(5e-4));
}

TEST_CASE("tail probability shrinks as the statistic grows") {
  double prev = 1.1;
  for (double t : {0.0, 0.5, 1.0, 1.5, 2.5, 4.0, 8.0}) {
    double p = student_t_two_sided_p(t, 12);
    REQUIRE(p < prev);
    prev = p;
  }
}

TEST_CASE("correlation of exact linear data") {
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> up{2, 4, 6, 8, 10};
  std::vector<double> down{5, 4, 3, 2, 1};
  auto r1 = pearson(x, up);
  REQUIRE(r1.r == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(r1.p == 0.0);
  REQUIRE(r1.n == 5);
  auto r2 = pearson(x, down);
  REQUIRE(r2.r == Catch::Approx(-1.0).margin(1e-12));
  REQUIRE(r2.p == 0.0);
}

TEST_CASE("correlation on a standard worked example") {
  // hand-computed: r = 0.9458..., t = r*sqrt(3/(1-r^2)), p via the t-tail
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> y{2, 1, 4, 5, 6};
  auto res = pearson(x, y);
  double mx = 3, my = 3.6, sxx = 0, syy = 0, sxy = 0;
  for (int i = 0; i < 5; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  double r = sxy / std::sqrt(sxx * syy);
  REQUIRE(res.r == Catch::Approx(r).margin(1e-12));
  double t = r * std::sqrt(3.0 / (1.0 - r * r));
  REQUIRE(res.p ==
          Catch::Approx(support::t_two_sided_by_integration(t, 3)).margin(1e-6));
}

TEST_CASE("correlation input validation") {
  std::vector<double> two{1, 2};
  std::vector<double> twob{3, 4};
  REQUIRE_THROWS_AS(pearson(two, twob), std::invalid_argument);
  std::vector<double> x{1, 2, 3};
  std::vector<double> flat{7, 7, 7};
  REQUIRE_THROWS_AS(pearson(x, flat), std::invalid_argument);
  REQUIRE_THROWS_AS(pearson(flat, x), std::invalid_argument);
  std::vector<double> longer{1, 2, 3, 4};
  REQUIRE_THROWS_AS(pearson(x, longer), std::invalid_argument);
}

TEST_CASE("correlation of noisy data stays in range") {
  corefall::rng64 rng(555);
  std::vector<double> x, y;
  for (int i = 0; i < 50; ++i) {
    double v = rng.unit();
    x.push_back(v);
    y.push_back(0.5 * v + 0.5 * rng.unit());
  }
  auto res = pearson(x, y);
  REQUIRE(res.r > 0.3);
  REQUIRE(res.r < 1.0);
  REQUIRE(res.p >= 0.0);
  REQUIRE(res.p <= 1.0);
  REQUIRE(res.p == Catch::Approx(support::t_two_sided_by_integration(
                       res.r * std::sqrt((res.n - 2) / (1.0 - res.r * res.r)),
                       res.n - 2))
                       .margin(1e-6));
}
