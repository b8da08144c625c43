#include "periodrel/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "periodrel/errors.hpp"

namespace periodrel {

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DimensionError("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw DimensionError("negative truncation order");
  return TruncatedSeries(std::vector<Scalar>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, int order) {
  auto s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  auto s = zero(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::generate(int order, const std::function<Scalar(int)>& coeff) {
  auto s = zero(order);
  for (int n = 0; n <= order; ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
  return s;
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  if (order < 0) throw DimensionError("negative truncation order");
  if (order > this->order()) throw DimensionError("cannot extend a series beyond its known order");
  return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return zero(0);
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) d[n - 1] = Scalar(static_cast<long>(n)) * coeffs_[n];
  return TruncatedSeries(std::move(d));
}

TruncatedSeries TruncatedSeries::derivative(int k) const {
  TruncatedSeries s = *this;
  for (int i = 0; i < k; ++i) s = s.derivative();
  return s;
}

bool TruncatedSeries::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& c) { return c.is_rational() && c.a().is_integer(); });
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n].is_zero()) continue;
    os << (first ? "" : " + ") << "(" << coeffs_[n].str() << ")";
    if (n > 0) os << "*X^" << n;
    first = false;
  }
  if (first) os << "0";
  os << " + O(X^" << coeffs_.size() << ")";
  return os.str();
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Scalar> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (!b.coeffs_[j].is_zero()) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const Scalar& c, TruncatedSeries s) {
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

TruncatedSeries TruncatedSeries::operator-() const { return Scalar(-1) * *this; }

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!g[0].is_zero()) throw PreconditionError("inner series must vanish at origin");
  const int order = std::min(f.order(), g.order());
  const TruncatedSeries inner = g.truncate(order);
  // Horner: f(g) = a_0 + g (a_1 + g (a_2 + ...)).
  TruncatedSeries acc = TruncatedSeries::constant(f[static_cast<std::size_t>(order)], order);
  for (int n = order - 1; n >= 0; --n) {
    acc = acc * inner + TruncatedSeries::constant(f[static_cast<std::size_t>(n)], order);
  }
  return acc;
}

TruncatedSeries reciprocal(const TruncatedSeries& h) {
  if (h[0].is_zero()) throw PreconditionError("reciprocal needs a nonzero constant term");
  const std::size_t len = h.coeffs().size();
  const Scalar inv0 = h[0].inverse();
  std::vector<Scalar> b(len);
  b[0] = inv0;
  for (std::size_t n = 1; n < len; ++n) {
    Scalar acc;
    for (std::size_t k = 1; k <= n; ++k)
      if (!h[k].is_zero()) acc += h[k] * b[n - k];
    b[n] = -(inv0 * acc);
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries compositional_inverse(const TruncatedSeries& f) {
  const int order = f.order();
  if (order < 1) throw PreconditionError("compositional inverse needs truncation order >= 1");
  if (!f[0].is_zero()) throw PreconditionError("compositional inverse needs f(0) = 0");
  if (f[1].is_zero()) throw PreconditionError("compositional inverse needs f'(0) != 0");

  const TruncatedSeries fprime = f.derivative();
  std::vector<Scalar> g(static_cast<std::size_t>(order) + 1);
  g[1] = f[1].inverse();

  // Invariant: f(g) = X mod X^(prec+1).
  int prec = 1;
  while (prec < order) {
    const int next = std::min(2 * prec, order);
    const TruncatedSeries gp(std::vector<Scalar>(g.begin(), g.begin() + next + 1));
    const TruncatedSeries err = compose(f.truncate(next), gp) - TruncatedSeries::variable(next);
    // err vanishes through X^prec, so 1/f'(g) is only needed through X^(next-prec-1).
    const int m = next - prec - 1;
    const TruncatedSeries r = reciprocal(compose(fprime.truncate(m), gp.truncate(m)));
    for (int n = prec + 1; n <= next; ++n) {
      Scalar corr;
      for (int i = prec + 1; i <= n; ++i) {
        const auto ei = static_cast<std::size_t>(i);
        if (!err[ei].is_zero()) corr += err[ei] * r[static_cast<std::size_t>(n - i)];
      }
      g[static_cast<std::size_t>(n)] -= corr;
    }
    prec = next;
  }

  TruncatedSeries inv(std::move(g));
  if (!(compose(f, inv) == TruncatedSeries::variable(order))) {
    throw InvariantViolation("Newton inversion failed its f(g) = X self-check");
  }
  return inv;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// min_{n>=1, a_n != 0} |a_n|_v^(-1/n), computed through logarithms.
double heuristic_radius(const TruncatedSeries& f, const Place& v) {
  double best = kInf;
  for (int n = 1; n <= f.order(); ++n) {
    const Scalar& a = f[static_cast<std::size_t>(n)];
    if (a.is_zero()) continue;
    double log_abs;
    if (!v.is_archimedean() && a.is_rational()) {
      log_abs = -valuation(a.a(), mpz_class(v.prime())) * std::log(static_cast<double>(v.prime()));
    } else {
      log_abs = std::log(abs_at_place(a, v));
    }
    best = std::min(best, std::exp(-log_abs / n));
  }
  return best;
}

bool all_p_integral(const TruncatedSeries& f, long p) {
  const Place v = Place::finite(p);
  for (const auto& a : f.coeffs())
    if (!a.is_zero() && abs_at_place(a, v) > 1.0) return false;
  return true;
}

}  // namespace

RadiusReport radius_lower_bound(const TruncatedSeries& f, const Place& v, bool integral_asserted) {
  RadiusReport report{v, 0.0, false};
  if (!v.is_archimedean() && all_p_integral(f, v.prime())) {
    report.lower_bound = 1.0;
    report.certified = integral_asserted;
    return report;
  }
  report.lower_bound = heuristic_radius(f, v);
  return report;
}

namespace {

std::vector<long> primes_up_to(long n) {
  std::vector<long> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

mpz_class coefficient_denominator(const Scalar& c) {
  mpz_class l;
  const mpz_class da = c.a().den(), db = c.b().den();
  mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  return l;
}

constexpr long kWitnessSearchLimit = 1000000;

}  // namespace

GloballyBoundedReport globally_bounded_scan(const TruncatedSeries& f, long prime_bound) {
  GloballyBoundedReport report;
  const long search_limit = std::max(prime_bound, kWitnessSearchLimit);
  const std::vector<long> small = primes_up_to(std::max(prime_bound, 2L));
  std::vector<long> large;  // filled lazily, only when a cofactor survives

  std::vector<PrimeAppearance> seen;
  auto note = [&](int n, long p) {
    for (const auto& s : seen)
      if (s.p == p) return;
    seen.push_back({n, p});
  };

  mpz_class lcm_half = 1, lcm_all = 1;
  const int half = f.order() / 2;
  for (int n = 0; n <= f.order(); ++n) {
    mpz_class den = coefficient_denominator(f[static_cast<std::size_t>(n)]);
    mpz_lcm(lcm_all.get_mpz_t(), lcm_all.get_mpz_t(), den.get_mpz_t());
    if (n <= half) mpz_lcm(lcm_half.get_mpz_t(), lcm_half.get_mpz_t(), den.get_mpz_t());
    for (long p : small) {
      if (den == 1) break;
      if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
        note(n, p);
        mpz_class q(p);
        mpz_remove(den.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
      }
    }
    if (den == 1) continue;
    if (large.empty()) large = primes_up_to(search_limit);
    for (long p : large) {
      if (p <= prime_bound) continue;
      if (den == 1) break;
      if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p))) {
        note(n, p);
        mpz_class q(p);
        mpz_remove(den.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
      }
    }
    if (den != 1 && !report.unresolved_cofactor) {
      report.unresolved_cofactor = den.get_str();
      if (!report.witness) report.witness = PrimeAppearance{n, 0};
    }
  }

  std::sort(seen.begin(), seen.end(),
            [](const PrimeAppearance& x, const PrimeAppearance& y) { return x.p < y.p; });
  report.first_appearance = seen;
  for (const auto& s : seen) report.bad_primes.push_back(s.p);

  for (const auto& s : seen) {
    if (s.p > prime_bound) {
      report.witness = s;
      break;
    }
  }

  bool positive = heuristic_radius(f, Place::archimedean()) > 0.0;
  for (long p : report.bad_primes) positive = positive && heuristic_radius(f, Place::finite(p)) > 0.0;
  report.positive_radius_everywhere = positive;

  if (seen.empty() && !report.unresolved_cofactor) {
    report.verdict = BoundednessVerdict::bounded;
  } else if (report.witness) {
    report.verdict = BoundednessVerdict::unbounded_evidence;
  } else if (lcm_half == lcm_all) {
    report.verdict = BoundednessVerdict::bounded;
  } else {
    report.verdict = BoundednessVerdict::inconclusive;
  }
  return report;
}

SeriesEvaluation eval_with_tail_bound(const TruncatedSeries& f, const Scalar& x, const Place& v,
                                      bool integral_tail) {
  const int order = f.order();
  SeriesEvaluation out;

  // Exact partial sum by Horner.
  Scalar acc = f[static_cast<std::size_t>(order)];
  for (int n = order - 1; n >= 0; --n) acc = acc * x + f[static_cast<std::size_t>(n)];
  out.partial_sum = acc;
  if (v.is_archimedean()) out.float_value = acc.embed(v.embedding());

  if (x.is_zero()) {
    out.tail_bound = 0.0;
    out.heuristic = false;
    return out;
  }

  const double ax = abs_at_place(x, v);
  if (!v.is_archimedean() && integral_tail) {
    if (ax >= 1.0) throw PreconditionError("evaluation outside certified disc");
    if (!all_p_integral(f, v.prime())) {
      throw PreconditionError("integral tail asserted but a computed coefficient is not p-integral");
    }
    // Same valuation path as abs_at_place, so an exact tail compares equal.
    out.tail_bound = abs_at_place(x.pow(order + 1), v);
    out.heuristic = false;
    return out;
  }

  // Growth rate from the last computed coefficient ratios.
  constexpr int kWindow = 5;
  double rho = 0.0;
  bool have_ratio = false;
  int last_nonzero = -1;
  for (int n = order; n >= 0; --n) {
    if (!f[static_cast<std::size_t>(n)].is_zero()) {
      last_nonzero = n;
      break;
    }
  }
  for (int n = std::max(1, order - kWindow + 1); n <= order; ++n) {
    const Scalar& cur = f[static_cast<std::size_t>(n)];
    const Scalar& prev = f[static_cast<std::size_t>(n - 1)];
    if (cur.is_zero() || prev.is_zero()) continue;
    rho = std::max(rho, abs_at_place(cur, v) / abs_at_place(prev, v));
    have_ratio = true;
  }
  if (!have_ratio) {
    const double r = heuristic_radius(f, v);
    rho = std::isinf(r) ? 0.0 : 1.0 / r;
  }
  if (last_nonzero < 0 || rho == 0.0) {
    out.tail_bound = 0.0;
    return out;
  }
  const double q = rho * ax;
  if (q >= 1.0) throw PreconditionError("evaluation outside certified disc");
  const double last_term =
      abs_at_place(f[static_cast<std::size_t>(last_nonzero)], v) * std::pow(ax, last_nonzero);
  const double first_tail_term = last_term * std::pow(q, order + 1 - last_nonzero);
  out.tail_bound = v.is_archimedean() ? first_tail_term / (1.0 - q) : first_tail_term;
  return out;
}

}  // namespace periodrel
