#pragma once

#include <cstddef>
#include <vector>

#include "periodrel/place.hpp"
#include "periodrel/relations.hpp"
#include "periodrel/series.hpp"

namespace periodrel {

/// g x g grid of truncated series sharing one truncation order, with a
/// per-entry flag asserting integer coefficients.
class GFunMatrix {
 public:
  GFunMatrix(std::size_t g, std::vector<TruncatedSeries> entries, std::vector<bool> integral = {});

  std::size_t g() const { return g_; }
  int order() const { return entries_.front().order(); }
  const TruncatedSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * g_ + j]; }
  bool integral(std::size_t i, std::size_t j) const { return integral_[i * g_ + j]; }
  const std::vector<TruncatedSeries>& entries() const { return entries_; }

  friend GFunMatrix operator+(const GFunMatrix& a, const GFunMatrix& b);
  friend bool operator==(const GFunMatrix& a, const GFunMatrix& b) { return a.entries_ == b.entries_; }

 private:
  std::size_t g_;
  std::vector<TruncatedSeries> entries_;
  std::vector<bool> integral_;
};

/// Coefficient series a_{ikl}, 0 <= i, l < g, 0 <= k <= N.
class GaussManinCoefficients {
 public:
  /// Flat storage indexed [(i * (N + 1) + k) * g + l].
  GaussManinCoefficients(std::size_t g, int n, std::vector<TruncatedSeries> a,
                         bool integral_asserted = false);

  /// Every coefficient is the zero series of the given order.
  static GaussManinCoefficients zero(std::size_t g, int n, int order);

  std::size_t g() const { return g_; }
  int N() const { return n_; }
  const TruncatedSeries& a(std::size_t i, int k, std::size_t l) const;
  void set(std::size_t i, int k, std::size_t l, TruncatedSeries s);
  const std::vector<TruncatedSeries>& all() const { return a_; }
  bool integral_asserted() const { return integral_asserted_; }
  void set_integral_asserted(bool v) { integral_asserted_ = v; }

 private:
  std::size_t index(std::size_t i, int k, std::size_t l) const;
  std::size_t g_;
  int n_;
  std::vector<TruncatedSeries> a_;
  bool integral_asserted_;
};

/// G_ij = sum_k sum_l a_{ikl} d^k/dX^k F_lj; the order drops by N.
GFunMatrix derive_G(const GFunMatrix& F, const GaussManinCoefficients& a);

struct PlaceRadius {
  Place place;
  double r = 1.0;
  bool certified = true;
};

/// r_v = min of 1, the radius bounds of every a_{ikl} and |x|_v over the
/// excluded values, for each requested place. Certified iff every input
/// bound is certified.
std::vector<PlaceRadius> compute_radii(const GaussManinCoefficients& a,
                                       const std::vector<Scalar>& excluded_values,
                                       const std::vector<Place>& places);

struct EntryDiscrepancy {
  char matrix = 'F';  // 'F' or 'G'
  std::size_t row = 0, col = 0;  // 1-based
  double discrepancy = 0.0;
  double tail_bound = 0.0;
  bool flagged = false;
};

struct PeriodCheckReport {
  Place place;
  std::vector<EntryDiscrepancy> entries;
  bool consistent = true;
};

/// Evaluates every F_ij, G_ij at x and compares with the period matrices of
/// the data: an entry is flagged when |value - period|_v exceeds its tail
/// bound plus the tolerance.
PeriodCheckReport check_period_equation(const GFunMatrix& F, const GFunMatrix& G,
                                        const SyntheticPeriodData& data, const Scalar& x,
                                        const Place& v, double tolerance);

}  // namespace periodrel
