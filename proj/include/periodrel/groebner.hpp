#pragma once

#include <cstddef>
#include <vector>

#include "periodrel/multipoly.hpp"

namespace periodrel {

/// Resource caps for exact membership. Exceeding any of them raises
/// UndecidedError rather than running unbounded.
struct GroebnerLimits {
  std::size_t max_pairs = 20000;    // critical pairs considered
  std::size_t max_variables = 18;   // distinct variables across P and generators
  int max_degree = 4;               // total degree of P and of every generator
};

inline constexpr const char* kUndecidedMessage =
    "membership undecided at this scale; use probabilistic nonmembership";

/// Reduced Groebner basis (monic, degrevlex) of the ideal spanned by the
/// generators. Coefficients must be rational.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators,
                                      const GroebnerLimits& limits = {});

/// Complete reduction of p modulo the polynomials in basis.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

struct ReductionResult {
  MultiPoly remainder;
  bool in_ideal = false;
  std::size_t basis_size = 0;
  std::size_t pairs_considered = 0;
};

/// Ideal membership of p in <generators> via a Groebner basis.
ReductionResult buchberger_reduce(const MultiPoly& p, const std::vector<MultiPoly>& generators,
                                  const GroebnerLimits& limits = {});

}  // namespace periodrel
