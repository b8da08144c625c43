#pragma once

#include <random>

#include "oracles.hpp"
#include "periodrel/multipoly.hpp"
#include "periodrel/trivial_ideal.hpp"

namespace support {

using namespace periodrel;

/// Converts a rational polynomial in the Y, Z variables of size g.
inline oracle::Poly to_oracle(const MultiPoly& p, std::size_t g) {
  const auto vars = period_variables(g);
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(vars.size(), 0);
    for (const auto& [k, exp] : m.factors()) {
      const auto it = std::find_if(vars.begin(), vars.end(), [k = k](VarId v) { return v.key() == k; });
      REQUIRE(it != vars.end());
      e[static_cast<std::size_t>(it - vars.begin())] = static_cast<int>(exp);
    }
    out.terms[e] = c.to_rational().value();
  }
  return out;
}

inline Matrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
  return m;
}

inline Rational random_rational(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

}  // namespace support
