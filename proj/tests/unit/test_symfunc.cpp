#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "psk/characters.hpp"
#include "psk/errors.hpp"
#include "psk/symfunc.hpp"

using namespace psk;

namespace {

// Distinct nonnegative entries, pairwise gap at least 0.05.
std::vector<double> distinct_point(int m, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.5);
  while (true) {
    std::vector<double> x(static_cast<std::size_t>(m));
    for (auto& v : x) v = u(rng);
    bool ok = true;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]) < 0.05) ok = false;
    if (ok) return x;
  }
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("power sums") {
  const std::vector<double> half{0.5, 0.5};
  CHECK(power_sum(1, half) == 1.0);
  CHECK(power_sum(2, half) == 0.5);
  CHECK(power_sum(3, std::vector<double>{1, 0, 0, 0}) == 1.0);
  CHECK(power_sum_partition(Partition({1, 1, 1}), half) == 1.0);
  CHECK(power_sum_partition(Partition({2, 1}), half) == 0.5);
  CHECK(power_sum_partition(Partition({3}), half) == 0.25);
  CHECK_THROWS_AS(power_sum(0, half), InvalidArgument);
}

TEST_CASE("power_sum_matrix") {
  CHECK(power_sum_matrix(5, ComplexMatrix::Identity(3, 3)) == Complex(3, 0));
  ComplexMatrix D = ComplexMatrix::Zero(2, 2);
  D(0, 0) = 2;
  D(1, 1) = 3;
  CHECK(power_sum_matrix(2, D) == Complex(13, 0));
  ComplexMatrix N = ComplexMatrix::Zero(2, 2);
  N(0, 1) = 4.0;
  CHECK(power_sum_matrix(2, N) == Complex(0, 0));
}

TEST_CASE("power_sum_matrix is similarity invariant") {
  Rng rng(3);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 20; ++t) {
    ComplexMatrix X(3, 3), U(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        X(i, j) = Complex(nd(rng), nd(rng)) * 0.5;
        U(i, j) = Complex(nd(rng), nd(rng));
      }
    U += ComplexMatrix::Identity(3, 3) * 3.0;  // keep it well conditioned
    const ComplexMatrix Y = U * X * U.inverse();
    for (int d = 1; d <= 6; ++d) CHECK(std::abs(power_sum_matrix(d, Y) - power_sum_matrix(d, X)) < 1e-8);
  }
}

TEST_CASE("schur_ssyt hand values") {
  CHECK(schur_ssyt(Partition({2}), std::vector<double>{1, 1}) == 3.0);
  CHECK(schur_ssyt(Partition({1, 1}), std::vector<double>{1, 1}) == 1.0);
  const std::vector<double> x{0.3, 1.7, 0.2};
  CHECK(schur_ssyt(Partition({1}), x) == doctest::Approx(power_sum(1, x)));
  CHECK(schur_ssyt(Partition({1, 1, 1, 1}), x) == 0.0);
}

TEST_CASE("schur_weyl_determinant") {
  CHECK(schur_weyl_determinant(Partition({2}), std::vector<double>{2, 1}) == doctest::Approx(7.0));
  CHECK(schur_weyl_determinant(Partition({1, 1}), std::vector<double>{2, 1}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(schur_weyl_determinant(Partition({2}), std::vector<double>{1, 1}), InvalidArgument);
  CHECK_THROWS_AS(schur_weyl_determinant(Partition({2}), std::vector<double>{1, 1 + 1e-9}), InvalidArgument);
  CHECK(schur_weyl_determinant(Partition({1, 1, 1}), std::vector<double>{2, 1}) == 0.0);
}

TEST_CASE("weyl determinant agrees with the tableau sum on random distinct inputs") {
  Rng rng(17);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 4);
    const auto parts = partitions_of(n);
    const auto& l = parts[rng() % parts.size()];
    const auto x = distinct_point(m, rng);
    CHECK(rel_close(schur_weyl_determinant(l, x), schur_ssyt(l, x), 1e-9));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("schur_from_characters") {
  CHECK(schur_from_characters(Partition({2}), std::vector<double>{2, 1}) == doctest::Approx(7.0));
  // e_n of m ones is C(m, n).
  const int binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
      const Complex s = schur_from_characters(column, ComplexMatrix::Identity(m, m));
      CHECK(s.real() == doctest::Approx(binom[m][n]));
      CHECK(std::abs(s.imag()) < 1e-12);
    }
  CHECK_THROWS_AS(schur_from_characters(Partition({15}), std::vector<double>{1.0}), CapExceeded);
}

TEST_CASE("character route on a diagonal matrix matches the tableau sum, including zero for long shapes") {
  Rng rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::vector<double> x(static_cast<std::size_t>(m));
      for (auto& v : x) v = u(rng);
      ComplexMatrix X = ComplexMatrix::Zero(m, m);
      for (int i = 0; i < m; ++i) X(i, i) = x[static_cast<std::size_t>(i)];
      for (const auto& l : partitions_of(n)) {
        const double expected = schur_ssyt(l, x);
        const Complex got = schur_from_characters(l, X);
        CHECK(std::abs(got.real() - expected) <= 1e-9 * std::max(1.0, expected));
        if (l.length() > m) CHECK(std::abs(got.real()) < 1e-12);
      }
    }
}

TEST_CASE("three Schur evaluators agree and the branching sum matches them") {
  Rng rng(29);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m)
      for (const auto& l : partitions_of(n))
        for (int rep = 0; rep < 3; ++rep) {
          const auto x = distinct_point(m, rng);
          const double a = schur_ssyt(l, x);
          const double b = schur_weyl_determinant(l, x);
          const double c = schur_from_characters(l, x);
          const double d = schur_branching(l, x);
          REQUIRE(rel_close(b, a, 1e-9));
          REQUIRE(rel_close(c, a, 1e-9));
          REQUIRE(rel_close(d, a, 1e-12));
        }
  const std::vector<double> y{0.4, 0.9};
  CHECK(oracle::schur_by_fillings(Partition({3, 1}), y) == doctest::Approx(schur_ssyt(Partition({3, 1}), y)));
}

TEST_CASE("schur evaluation is homogeneous of degree n") {
  Rng rng(31);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int t = 0; t < 30; ++t) {
    const auto x = distinct_point(3, rng);
    const double r = u(rng);
    std::vector<double> rx = x;
    for (auto& v : rx) v *= r;
    for (const auto& l : partitions_of(4)) {
      CHECK(rel_close(schur_ssyt(l, rx), std::pow(r, 4) * schur_ssyt(l, x), 1e-12));
      CHECK(rel_close(schur_from_characters(l, rx), std::pow(r, 4) * schur_from_characters(l, x), 1e-9));
    }
  }
}

TEST_CASE("Frobenius formula holds for every element of S_n, n <= 5") {
  Rng rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      std::vector<double> x(static_cast<std::size_t>(m));
      for (auto& v : x) v = u(rng);
      for (const auto& g : enumerate_group(n)) {
        const Partition mu = cycle_type(g);
        double rhs = 0.0;
        for (const auto& l : partitions_of(n, m)) rhs += static_cast<double>(character(l, mu)) * schur_ssyt(l, x);
        REQUIRE(std::abs(power_sum_partition(mu, x) - rhs) < 1e-10);
      }
    }
}
