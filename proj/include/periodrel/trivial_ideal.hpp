#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periodrel/groebner.hpp"
#include "periodrel/matrix.hpp"
#include "periodrel/multipoly.hpp"
#include "periodrel/polymatrix.hpp"

namespace periodrel {

/// The ideal generated by the entries of Y^t Z - Z^t Y in the 2g^2 variables
/// Y_ij, Z_ij.
class TrivialIdeal {
 public:
  explicit TrivialIdeal(std::size_t g);

  std::size_t g() const { return g_; }
  /// f_ij for i < j, in lexicographic order of (i, j).
  const std::vector<MultiPoly>& generators() const { return gens_; }
  /// f_ij = sum_k (Y_ki Z_kj - Z_ki Y_kj) for any 1 <= i, j <= g.
  MultiPoly f(std::size_t i, std::size_t j) const;
  /// Y^t Z - Z^t Y.
  PolyMatrix generator_matrix() const;

 private:
  std::size_t g_;
  std::vector<MultiPoly> gens_;
};

TrivialIdeal generators(std::size_t g);

/// The ordered variable list Y_11, ..., Y_gg, Z_11, ..., Z_gg.
std::vector<VarId> period_variables(std::size_t g);

/// Rank over the base field of the Jacobian of the generators at (Y0, Z0).
std::size_t jacobian_rank_at(const TrivialIdeal& ideal, const Matrix& y0, const Matrix& z0);

struct RadicalityReport {
  std::size_t g = 0;
  std::size_t generator_count = 0;  // m = g(g-1)/2
  Matrix witness_y, witness_z;
  bool witness_on_V = false;
  std::size_t rank = 0;
  std::size_t random_points_tried = 0;
  bool radical = false;
  std::string verdict;  // "radical" or "witness insufficient"
  std::string primality;
};

/// Checks the Jacobian criterion (rank m at a point of V) at (I, 0), falling
/// back to 50 random points of V.
RadicalityReport radicality_certificate(const TrivialIdeal& ideal);

enum class MembershipStatus { in_ideal_certified, not_in_ideal_certified, undecided };

std::string to_string(MembershipStatus s);

struct Witness {
  std::string label;
  Matrix y, z;
  Scalar value;
};

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::undecided;
  std::string method;  // "evaluation", "groebner", "row_permutation" or "none"
  std::optional<Witness> witness;
  std::optional<MultiPoly> remainder;
  std::optional<std::vector<std::size_t>> permutation;
  std::size_t points_evaluated = 0;
  std::string monomial_order = kMonomialOrderName;
  std::string note;
};

/// The three structured points of V tried before random ones:
/// (I, 0), (I, I) and (I, S) with S symmetric.
std::vector<Witness> structured_witnesses(std::size_t g);

/// Evaluates p at the structured witnesses and at sample_budget random points
/// of V; returns the first point where p does not vanish.
std::optional<Witness> find_nonvanishing_point(const MultiPoly& p, std::size_t g,
                                               std::size_t sample_budget, std::uint64_t seed,
                                               std::size_t* points_evaluated = nullptr);

/// Nonmembership by evaluation first; Groebner reduction over Q for g <= 3
/// when every sampled value vanishes.
MembershipVerdict membership(const MultiPoly& p, const TrivialIdeal& ideal,
                             std::size_t sample_budget, std::uint64_t seed = 0,
                             const GroebnerLimits& limits = {});

/// Y_ij -> Y_{perm(i) j}, Z_ij -> Z_{perm(i) j}. perm is 1-based, size g.
MultiPoly permute_rows(const MultiPoly& p, const std::vector<std::size_t>& perm);

/// True when permuting the rows of Y and Z simultaneously changes p.
bool row_permutation_test(const MultiPoly& p, const std::vector<std::size_t>& perm);

/// The transposition of rows 1 and g.
std::vector<std::size_t> swap_first_last(std::size_t g);

}  // namespace periodrel
