#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "periodrel/matrix.hpp"
#include "periodrel/monomial.hpp"
#include "periodrel/scalar.hpp"

namespace periodrel {

/// Sparse polynomial in period variables with exact scalar coefficients.
/// Terms are kept in decreasing degrevlex order, so the first term is the
/// leading term; zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, DegRevLexGreater>;

  MultiPoly() = default;
  MultiPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static MultiPoly variable(VarId v);
  static MultiPoly term(const Scalar& c, const Monomial& m);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Scalar& leading_coefficient() const;

  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  /// True for the zero polynomial and for polynomials with one term degree.
  bool is_homogeneous() const;
  bool all_coefficients_rational() const;
  /// Sorted distinct variable keys.
  std::vector<std::uint32_t> variables() const;

  void add_term(const Monomial& m, const Scalar& c);

  MultiPoly derivative(VarId v) const;
  Scalar evaluate(const std::function<Scalar(VarId)>& value) const;
  /// Simultaneous substitution; variables missing from the map stay put.
  MultiPoly substitute(const std::unordered_map<std::uint32_t, MultiPoly>& images) const;
  /// Renames every variable through f. f must be injective on the support.
  MultiPoly rename(const std::function<VarId(VarId)>& f) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Scalar& c, const MultiPoly& p);
  MultiPoly operator-() const;
  MultiPoly mul_term(const Scalar& c, const Monomial& m) const;
  MultiPoly pow(unsigned exponent) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string str() const;

 private:
  TermMap terms_;
};

/// P(Y, Z) at numeric g x g matrices. Variables outside the Y and Z blocks
/// raise PreconditionError.
Scalar evaluate_at(const MultiPoly& p, const Matrix& y, const Matrix& z);

/// True when no monomial occurs in both polynomials.
bool disjoint_support(const MultiPoly& a, const MultiPoly& b);

}  // namespace periodrel
