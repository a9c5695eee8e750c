#include "psk/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "psk/errors.hpp"

namespace psk::stats {

MeanEstimate mean_estimate(std::span<const double> values) {
  const auto n = static_cast<double>(values.size());
  if (values.size() < 2) throw InvalidArgument("mean_estimate needs at least two values");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1) / n)};
}

double chi_square_survival(double statistic, double dof) {
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, std::max(0.0, statistic)));
}

ChiSquareResult chi_square_gof(std::span<const std::size_t> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) throw InvalidArgument("chi_square_gof: size mismatch");
  double total = 0.0;
  for (auto c : observed) total += static_cast<double>(c);
  ChiSquareResult r;
  int categories = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probabilities[i];
    if (expected == 0.0) {
      if (observed[i] != 0) return {INFINITY, 0, 0.0};
      continue;
    }
    ++categories;
    const double diff = static_cast<double>(observed[i]) - expected;
    r.statistic += diff * diff / expected;
  }
  r.dof = categories - 1;
  r.p_value = r.dof > 0 ? chi_square_survival(r.statistic, r.dof) : 1.0;
  return r;
}

double ks_statistic_normal(std::vector<double> values, double mean, double sd) {
  std::sort(values.begin(), values.end());
  const boost::math::normal_distribution<double> dist(mean, sd);
  const auto n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double f = boost::math::cdf(dist, values[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_99(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

ChiSquareResult jarque_bera(std::span<const double> values) {
  const auto n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  const double skew = m3 / std::pow(m2, 1.5);
  const double kurt = m4 / (m2 * m2);
  ChiSquareResult r;
  r.statistic = n / 6.0 * (skew * skew + (kurt - 3.0) * (kurt - 3.0) / 4.0);
  r.dof = 2;
  r.p_value = chi_square_survival(r.statistic, 2);
  return r;
}

}  // namespace psk::stats
