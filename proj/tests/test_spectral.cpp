#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "phasequant/coherent.hpp"
#include "phasequant/errors.hpp"
#include "phasequant/spectral.hpp"

#include "oracle_data.hpp"

using namespace phasequant;

TEST_CASE("ratio supremum: interior hump at k = 1/4") {
  const auto sup = spectral::ratio_supremum(0.25, 500.0);
  CHECK(std::abs(sup.sup - oracle::kSupRatioKQuarter) <= 1e-10);
  CHECK(std::abs(sup.at_rho - 1.00440) <= 1e-3);
}

TEST_CASE("ratio supremum: k = 1/2 stays at or below 2") {
  const auto sup = spectral::ratio_supremum(0.5, 500.0);
  CHECK(sup.sup <= 2.0);
  CHECK(sup.sup > 1.998);  // approached at the right edge of the grid
  // The interior hump sits below the plateau for k = 1/2.
  CHECK(std::abs(coherent::g_over_bessel(0.5, 2.2448) - oracle::kHumpKHalf) <= 1e-8);
}

TEST_CASE("admissibility flips across the threshold") {
  CHECK(!spectral::admissible(0.25));
  CHECK(!spectral::admissible(0.31));
  CHECK(spectral::admissible(0.33));
  CHECK(spectral::admissible(0.5));
  CHECK(oracle::kThresholdK > 0.31);
  CHECK(oracle::kThresholdK < 0.33);
}

TEST_CASE("threshold bisection reproduces the frozen bracket exactly") {
  const auto rep = spectral::threshold_scan(0.2, 0.5, 1e-3);
  CHECK(rep.bracket_lo == oracle::kBisectionLo);
  CHECK(rep.bracket_hi == oracle::kBisectionHi);
  CHECK(rep.bracket_lo < oracle::kThresholdK);
  CHECK(rep.bracket_hi > oracle::kThresholdK);
  CHECK(rep.k_grid.size() == 11);  // 2 endpoints + 9 bisection midpoints
  for (std::size_t i = 1; i < rep.k_grid.size(); ++i) {
    CHECK(rep.k_grid[i] > rep.k_grid[i - 1]);
    // Above the threshold the supremum sits at the far edge of the rho range
    // where the ratio is 2 - O(1/rho) for every k, so successive values agree
    // to ~1e-8 rather than decreasing strictly; 1e-6 is the scan's own slack.
    CHECK(rep.sup_ratio[i] <= rep.sup_ratio[i - 1] + 1e-6);
    // The decision invariant is sharp: above 2 strictly below the bracket,
    // at or below 2 from its upper end on.
    CHECK((rep.k_grid[i] <= rep.bracket_lo) == (rep.sup_ratio[i] > 2.0));
  }
}

TEST_CASE("threshold scan rejects non-bracketing intervals") {
  CHECK_THROWS_AS(spectral::threshold_scan(0.33, 0.5, 1e-3), domain_error);
  CHECK_THROWS_AS(spectral::threshold_scan(0.2, 0.25, 1e-3), domain_error);
  CHECK_THROWS_AS(spectral::threshold_scan(0.2, 0.5, 0.0), domain_error);
  CHECK_THROWS_AS(spectral::ratio_supremum(0.5, 10.0), domain_error);
}

TEST_CASE("cosine spectra match frozen extremes") {
  const auto k1 = spectral::cos_spectrum(1.0, 250);
  CHECK(k1.eigenvalues.size() == 250);
  CHECK(std::abs(k1.eigenvalues[249] - oracle::kMaxEigK1Dim250) <= 1e-9);
  CHECK(k1.max_residual <= 1e-10);

  const auto half = spectral::cos_spectrum(0.5, 500);
  CHECK(std::abs(half.eigenvalues[499] - oracle::kMaxEigKHalf) <= 1e-9);

  const auto quarter = spectral::cos_spectrum(0.25, 250);
  CHECK(std::abs(quarter.eigenvalues[249] - oracle::kMaxEigKQuarter) <= 1e-9);
}

TEST_CASE("cosine spectrum is symmetric and sorted") {
  const auto s = spectral::cos_spectrum(0.8, 120);
  for (int i = 1; i < 120; ++i) CHECK(s.eigenvalues[i] >= s.eigenvalues[i - 1]);
  for (int i = 0; i < 60; ++i) {
    CAPTURE(i);
    CHECK(std::abs(s.eigenvalues[i] + s.eigenvalues[119 - i]) <= 1e-12);
  }
}

TEST_CASE("improper recursion overflows at frozen indices outside the spectrum") {
  const auto a15 = spectral::improper_eigenvector(1.0, 1.5, 3000);
  CHECK(a15.overflowed);
  CHECK(a15.overflow_index >= oracle::kOverflowIndexMu15 - 2);
  CHECK(a15.overflow_index <= oracle::kOverflowIndexMu15 + 2);
  CHECK(static_cast<int>(a15.a.size()) == a15.overflow_index + 1);

  const auto a20 = spectral::improper_eigenvector(1.0, 2.0, 3000);
  CHECK(a20.overflow_index >= oracle::kOverflowIndexMu20 - 2);
  CHECK(a20.overflow_index <= oracle::kOverflowIndexMu20 + 2);

  const auto a12 = spectral::improper_eigenvector(1.0, 1.2, 3000);
  CHECK(a12.overflow_index >= oracle::kOverflowIndexMu12 - 2);
  CHECK(a12.overflow_index <= oracle::kOverflowIndexMu12 + 2);
}

TEST_CASE("improper recursion stays bounded inside the spectrum") {
  const auto a = spectral::improper_eigenvector(1.0, 0.5, 2000);
  CHECK(!a.overflowed);
  CHECK(a.overflow_index == -1);
  CHECK(a.a.size() == 2001);
  CHECK(a.a[0] == 1.0);
  double max_abs = 0.0;
  for (double x : a.a) max_abs = std::max(max_abs, std::abs(x));
  CHECK(max_abs < 100.0);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(spectral::cos_spectrum(0.0, 100), domain_error);
  CHECK_THROWS_AS(spectral::cos_spectrum(1.0, 1), domain_error);
  CHECK_THROWS_AS(spectral::improper_eigenvector(-1.0, 0.5, 100), domain_error);
  CHECK_THROWS_AS(spectral::improper_eigenvector(1.0, 0.5, 1), domain_error);
}
