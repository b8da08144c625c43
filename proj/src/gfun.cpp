#include "periodrel/gfun.hpp"

#include <algorithm>
#include <cmath>

#include "periodrel/errors.hpp"

namespace periodrel {

GFunMatrix::GFunMatrix(std::size_t g, std::vector<TruncatedSeries> entries, std::vector<bool> integral)
    : g_(g), entries_(std::move(entries)), integral_(std::move(integral)) {
  if (g_ < 1 || entries_.size() != g_ * g_) throw DimensionError("series matrix needs g*g entries");
  for (const auto& s : entries_)
    if (s.order() != entries_.front().order())
      throw DimensionError("series matrix entries must share one truncation order");
  if (integral_.empty()) {
    for (const auto& s : entries_) integral_.push_back(s.has_integer_coefficients());
  } else if (integral_.size() != entries_.size()) {
    throw DimensionError("one integrality flag per entry");
  }
}

GFunMatrix operator+(const GFunMatrix& a, const GFunMatrix& b) {
  if (a.g_ != b.g_) throw DimensionError("series matrix sum shape mismatch");
  std::vector<TruncatedSeries> sum;
  std::vector<bool> integral;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    sum.push_back(a.entries_[k] + b.entries_[k]);
    integral.push_back(a.integral_[k] && b.integral_[k]);
  }
  return GFunMatrix(a.g_, std::move(sum), std::move(integral));
}

GaussManinCoefficients::GaussManinCoefficients(std::size_t g, int n, std::vector<TruncatedSeries> a,
                                               bool integral_asserted)
    : g_(g), n_(n), a_(std::move(a)), integral_asserted_(integral_asserted) {
  if (g_ < 1 || n_ < 0) throw PreconditionError("coefficient family needs g >= 1 and N >= 0");
  if (a_.size() != g_ * g_ * static_cast<std::size_t>(n_ + 1))
    throw DimensionError("coefficient family needs g*g*(N+1) series");
}

GaussManinCoefficients GaussManinCoefficients::zero(std::size_t g, int n, int order) {
  return GaussManinCoefficients(
      g, n, std::vector<TruncatedSeries>(g * g * static_cast<std::size_t>(n + 1), TruncatedSeries::zero(order)),
      true);
}

std::size_t GaussManinCoefficients::index(std::size_t i, int k, std::size_t l) const {
  if (i >= g_ || l >= g_ || k < 0 || k > n_) throw DimensionError("coefficient index out of range");
  return (i * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(k)) * g_ + l;
}

const TruncatedSeries& GaussManinCoefficients::a(std::size_t i, int k, std::size_t l) const {
  return a_[index(i, k, l)];
}

void GaussManinCoefficients::set(std::size_t i, int k, std::size_t l, TruncatedSeries s) {
  a_[index(i, k, l)] = std::move(s);
}

GFunMatrix derive_G(const GFunMatrix& F, const GaussManinCoefficients& a) {
  const std::size_t g = F.g();
  if (a.g() != g) throw DimensionError("coefficient family and series matrix differ in g");
  const int n = a.N();
  if (F.order() < n) throw PreconditionError("insufficient precision");
  const int out_order = F.order() - n;
  for (const auto& s : a.all())
    if (s.order() < out_order) throw PreconditionError("insufficient precision");

  std::vector<TruncatedSeries> entries;
  std::vector<bool> integral;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      TruncatedSeries sum = TruncatedSeries::zero(out_order);
      bool is_integral = true;
      for (int k = 0; k <= n; ++k)
        for (std::size_t l = 0; l < g; ++l) {
          const TruncatedSeries& coeff = a.a(i, k, l);
          if (coeff.is_zero()) continue;
          sum += (coeff * F(l, j).derivative(k)).truncate(out_order);
          is_integral = is_integral && F.integral(l, j) && coeff.has_integer_coefficients();
        }
      entries.push_back(sum.truncate(out_order));
      integral.push_back(is_integral);
    }
  return GFunMatrix(g, std::move(entries), std::move(integral));
}

std::vector<PlaceRadius> compute_radii(const GaussManinCoefficients& a,
                                       const std::vector<Scalar>& excluded_values,
                                       const std::vector<Place>& places) {
  std::vector<PlaceRadius> out;
  for (const auto& v : places) {
    PlaceRadius pr{v, 1.0, true};
    for (const auto& s : a.all()) {
      const RadiusReport rep = radius_lower_bound(s, v, a.integral_asserted());
      pr.r = std::min(pr.r, rep.lower_bound);
      pr.certified = pr.certified && rep.certified;
    }
    for (const auto& x : excluded_values) {
      if (x.is_zero()) throw PreconditionError("excluded values must be nonzero");
      pr.r = std::min(pr.r, abs_at_place(x, v));
    }
    out.push_back(pr);
  }
  return out;
}

PeriodCheckReport check_period_equation(const GFunMatrix& F, const GFunMatrix& G,
                                        const SyntheticPeriodData& data, const Scalar& x,
                                        const Place& v, double tolerance) {
  const std::size_t g = F.g();
  if (G.g() != g || data.g != g) throw DimensionError("series matrices and data differ in g");
  PeriodCheckReport rep;
  rep.place = v;
  auto check = [&](char name, const GFunMatrix& series, const Matrix& periods) {
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        const SeriesEvaluation ev = eval_with_tail_bound(series(i, j), x, v, series.integral(i, j));
        EntryDiscrepancy e;
        e.matrix = name;
        e.row = i + 1;
        e.col = j + 1;
        e.tail_bound = ev.tail_bound;
        if (v.is_archimedean()) {
          e.discrepancy = std::abs(*ev.float_value - periods(i, j).embed(v.embedding()));
        } else {
          e.discrepancy = abs_at_place(ev.partial_sum - periods(i, j), v);
        }
        e.flagged = e.discrepancy > e.tail_bound + tolerance;
        rep.consistent = rep.consistent && !e.flagged;
        rep.entries.push_back(e);
      }
  };
  check('F', F, data.F);
  check('G', G, data.G);
  return rep;
}

}  // namespace periodrel
