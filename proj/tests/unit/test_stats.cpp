#include <cmath>
#include <random>

#include "doctest.h"
#include "psk/stats.hpp"

using namespace psk;

TEST_CASE("chi-square survival") {
  CHECK(stats::chi_square_survival(0.0, 3) == doctest::Approx(1.0));
  // 99% quantile of chi2(2) is 9.2103.
  CHECK(stats::chi_square_survival(9.21034, 2) == doctest::Approx(0.01).epsilon(1e-4));
}

TEST_CASE("goodness of fit") {
  const std::vector<std::size_t> exact{250, 250, 500};
  const std::vector<double> probs{0.25, 0.25, 0.5};
  const auto r = stats::chi_square_gof(exact, probs);
  CHECK(r.statistic == 0.0);
  CHECK(r.dof == 2);
  CHECK(r.p_value == doctest::Approx(1.0));
  const std::vector<std::size_t> skewed{400, 100, 500};
  CHECK(stats::chi_square_gof(skewed, probs).p_value < 1e-6);
  const std::vector<std::size_t> impossible{1, 0};
  CHECK(stats::chi_square_gof(impossible, std::vector<double>{0.0, 1.0}).p_value == 0.0);
}

TEST_CASE("normality checks reject a uniform sample") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.7320508, 1.7320508);
  std::vector<double> xs(20000);
  for (auto& x : xs) x = u(rng);
  CHECK(stats::ks_statistic_normal(xs) > stats::ks_critical_99(xs.size()));
  CHECK(stats::jarque_bera(xs).p_value < 0.01);
}

TEST_CASE("mean estimate") {
  const std::vector<double> v{1, 2, 3, 4};
  const auto e = stats::mean_estimate(v);
  CHECK(e.mean == 2.5);
  CHECK(e.standard_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}
