#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "periodrel/place.hpp"
#include "periodrel/scalar.hpp"

namespace periodrel {

/// Power series a_0 + a_1 X + ... + a_N X^N known up to X^N ("order N").
/// Arithmetic between series of different order keeps the smaller order.
class TruncatedSeries {
 public:
  /// Coefficients a_0..a_N; order = coeffs.size() - 1. Must be nonempty.
  explicit TruncatedSeries(std::vector<Scalar> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries constant(const Scalar& c, int order);
  /// The series X.
  static TruncatedSeries variable(int order);
  static TruncatedSeries generate(int order, const std::function<Scalar(int)>& coeff);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  TruncatedSeries truncate(int order) const;
  /// Formal derivative; order drops by one (order 0 stays order 0 with value 0).
  TruncatedSeries derivative() const;
  TruncatedSeries derivative(int k) const;

  bool has_integer_coefficients() const;
  bool is_zero() const;
  std::string str() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Scalar& c, TruncatedSeries s);
  TruncatedSeries operator-() const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// f(g(X)) to the shared order. Requires g(0) = 0.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// 1/h. Requires h(0) != 0.
TruncatedSeries reciprocal(const TruncatedSeries& h);

/// g with f(g(X)) = g(f(X)) = X, via order-doubling Newton iteration.
/// Requires f(0) = 0 and f'(0) != 0.
TruncatedSeries compositional_inverse(const TruncatedSeries& f);

struct RadiusReport {
  Place place;
  double lower_bound = 0.0;  // +inf when every computed coefficient past a_0 vanishes
  bool certified = false;
};

/// Lower bound for the v-adic radius of convergence.
///
/// At a finite place where every computed coefficient has |a_n|_p <= 1 the
/// bound is 1; it is certified only when the caller asserts structurally that
/// all coefficients (not just the computed ones) are p-integral. Otherwise the
/// heuristic min_{n>=1} |a_n|_v^(-1/n) over the computed range is returned,
/// never certified.
RadiusReport radius_lower_bound(const TruncatedSeries& f, const Place& v,
                                bool integral_asserted = false);

enum class BoundednessVerdict { bounded, unbounded_evidence, inconclusive };

struct PrimeAppearance {
  int n = 0;      // first index whose denominator is divisible by p
  long p = 0;
};

struct GloballyBoundedReport {
  bool positive_radius_everywhere = false;
  std::vector<long> bad_primes;                 // primes dividing some computed denominator
  std::vector<PrimeAppearance> first_appearance; // one entry per bad prime, sorted by p
  std::optional<PrimeAppearance> witness;        // set iff verdict == unbounded_evidence
  std::optional<std::string> unresolved_cofactor;
  BoundednessVerdict verdict = BoundednessVerdict::inconclusive;
};

/// Scans coefficient denominators for evidence against global boundedness.
///
/// bounded: every computed coefficient is integral, or the denominator
///   support stays below prime_bound and the lcm of denominators stops
///   growing after the first half of the range.
/// unbounded_evidence: some denominator has a prime factor > prime_bound;
///   the witness is the first appearance of the smallest such prime.
/// inconclusive: otherwise.
GloballyBoundedReport globally_bounded_scan(const TruncatedSeries& f, long prime_bound);

struct SeriesEvaluation {
  Scalar partial_sum;                               // exact sum_{n<=N} a_n x^n
  std::optional<std::complex<double>> float_value;  // archimedean places only
  double tail_bound = 0.0;
  bool heuristic = true;
};

/// Evaluates f at x with an estimate of the truncation error at place v.
///
/// Finite place with integral_tail: the caller asserts p-integral
/// coefficients, the certified radius is 1 and the tail is bounded exactly by
/// |x|_p^(N+1). Any other case gives a heuristic tail estimate from the
/// growth of the last computed coefficients.
SeriesEvaluation eval_with_tail_bound(const TruncatedSeries& f, const Scalar& x, const Place& v,
                                      bool integral_tail);

}  // namespace periodrel
