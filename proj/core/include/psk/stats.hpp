#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace psk::stats {

struct MeanEstimate {
  double mean = 0;
  double standard_error = 0;  // sample standard deviation / √N
};

MeanEstimate mean_estimate(std::span<const double> values);

/// Upper tail P(X ≥ statistic) for X ~ χ²(dof).
double chi_square_survival(double statistic, double dof);

struct ChiSquareResult {
  double statistic = 0;
  double dof = 0;
  double p_value = 0;
};

/// Pearson goodness of fit of `observed` counts against `probabilities` (same length, sum 1).
/// Categories with zero probability must have zero counts; they do not contribute a degree of freedom.
ChiSquareResult chi_square_gof(std::span<const std::size_t> observed, std::span<const double> probabilities);

/// sup |F_n − Φ| for the empirical distribution of `values`.
double ks_statistic_normal(std::vector<double> values, double mean = 0.0, double sd = 1.0);

/// Asymptotic Kolmogorov critical value at the 99% level: 1.6276 / √N.
double ks_critical_99(std::size_t n);

/// Jarque–Bera statistic and its χ²(2) p-value.
ChiSquareResult jarque_bera(std::span<const double> values);

}  // namespace psk::stats
