#include <doctest.h>

#include "periodrel/errors.hpp"
#include "periodrel/groebner.hpp"
#include "periodrel/symplectic.hpp"
#include "periodrel/trivial_ideal.hpp"
#include "test_support.hpp"

using namespace periodrel;

namespace {

MultiPoly Y(int i, int j) { return MultiPoly::variable(VarId::y(i, j)); }
MultiPoly Z(int i, int j) { return MultiPoly::variable(VarId::z(i, j)); }

}  // namespace

TEST_CASE("generator examples") {
  CHECK(TrivialIdeal(1).generators().empty());
  const TrivialIdeal i2(2);
  REQUIRE(i2.generators().size() == 1);
  CHECK(i2.generators()[0] == Y(1, 1) * Z(1, 2) + Y(2, 1) * Z(2, 2) - Z(1, 1) * Y(1, 2) - Z(2, 1) * Y(2, 2));
  for (std::size_t g = 1; g <= 5; ++g) {
    const TrivialIdeal I(g);
    CHECK(I.generators().size() == g * (g - 1) / 2);
    for (const auto& f : I.generators()) {
      CHECK(f.total_degree() == 2);
      CHECK(f.is_homogeneous());
      CHECK(f.size() == 2 * g);
    }
    for (std::size_t i = 1; i <= g; ++i) {
      CHECK(I.f(i, i).is_zero());
      for (std::size_t j = 1; j <= g; ++j) CHECK(I.f(i, j) == -I.f(j, i));
    }
    CHECK(I.generator_matrix().transpose() == PolyMatrix::from_numeric(-Matrix::identity(g)) * I.generator_matrix());
  }
  CHECK(period_variables(2).size() == 8);
  CHECK(period_variables(2).front() == VarId::y(1, 1));
  CHECK(period_variables(2).back() == VarId::z(2, 2));
}

TEST_CASE("generators vanish on isotropic frames") {
  for (std::size_t g = 1; g <= 4; ++g) {
    const TrivialIdeal I(g);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const IsotropicFrame fr = project_to_V(sample_symplectic(g, seed));
      for (const auto& f : I.generators()) CHECK(evaluate_at(f, fr.y(), fr.z()).is_zero());
    }
  }
}

TEST_CASE("Jacobian rank and radicality") {
  const TrivialIdeal I3(3);
  CHECK(jacobian_rank_at(I3, Matrix::identity(3), Matrix::zero(3, 3)) == 3);
  CHECK(jacobian_rank_at(I3, Matrix::zero(3, 3), Matrix::zero(3, 3)) == 0);
  for (std::size_t g : {1u, 2u, 3u, 4u, 5u}) {
    const RadicalityReport r = radicality_certificate(TrivialIdeal(g));
    CHECK(r.radical);
    CHECK(r.verdict == "radical");
    CHECK(r.witness_on_V);
    CHECK(r.rank == g * (g - 1) / 2);
    CHECK(r.generator_count == g * (g - 1) / 2);
    CHECK(r.random_points_tried == 0);
  }
}

TEST_CASE("membership examples") {
  const TrivialIdeal I(3);
  const MembershipVerdict y11 = membership(Y(1, 1), I, 10, 1);
  CHECK(y11.status == MembershipStatus::not_in_ideal_certified);
  CHECK(y11.method == "evaluation");
  REQUIRE(y11.witness.has_value());
  CHECK_FALSE(evaluate_at(Y(1, 1), y11.witness->y, y11.witness->z).is_zero());
  CHECK(y11.witness->value == evaluate_at(Y(1, 1), y11.witness->y, y11.witness->z));

  const MembershipVerdict gen = membership(I.f(1, 2), I, 10, 1);
  CHECK(gen.status == MembershipStatus::in_ideal_certified);
  CHECK(gen.method == "groebner");
  REQUIRE(gen.remainder.has_value());
  CHECK(gen.remainder->is_zero());

  const MembershipVerdict combo = membership(Y(1, 1) * I.f(1, 2) + Z(2, 2) * I.f(1, 3), I, 10, 1);
  CHECK(combo.status == MembershipStatus::in_ideal_certified);

  CHECK(membership(MultiPoly(), I, 0).status == MembershipStatus::in_ideal_certified);
  CHECK(membership(MultiPoly(), TrivialIdeal(1), 0).status == MembershipStatus::in_ideal_certified);
  CHECK(membership(Y(1, 1), TrivialIdeal(1), 0).status == MembershipStatus::not_in_ideal_certified);

  // Above g = 3 a vanishing polynomial is left undecided.
  const TrivialIdeal I4(4);
  const MembershipVerdict big = membership(I4.f(1, 4), I4, 10, 1);
  CHECK(big.status == MembershipStatus::undecided);
  CHECK(to_string(big.status) == "undecided");
}

TEST_CASE("structured witnesses lie on V") {
  for (std::size_t g = 1; g <= 4; ++g) {
    const auto ws = structured_witnesses(g);
    CHECK(ws.size() == 3);
    for (const auto& w : ws) CHECK(IsotropicFrame(w.y, w.z).g() == g);
  }
  std::size_t count = 0;
  CHECK_FALSE(find_nonvanishing_point(TrivialIdeal(3).f(1, 2), 3, 30, 5, &count).has_value());
  CHECK(count == 33);
}

TEST_CASE("row permutations") {
  CHECK(swap_first_last(3) == std::vector<std::size_t>{3, 2, 1});
  const MultiPoly p = Y(1, 1) * Z(1, 2);
  CHECK(permute_rows(p, {2, 1}) == Y(2, 1) * Z(2, 2));
  CHECK(row_permutation_test(p, {2, 1}));
  CHECK_FALSE(row_permutation_test(Y(1, 1) + Y(2, 1), {2, 1}));
  CHECK_THROWS_AS(permute_rows(p, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(permute_rows(p, {1, 3}), PreconditionError);

  // Generators are invariant under simultaneous row permutation, so any
  // ideal combination stays inside the ideal.
  const TrivialIdeal I(3);
  for (const auto& f : I.generators()) CHECK(permute_rows(f, {3, 1, 2}) == f);
  const MultiPoly combo = Y(1, 1) * I.f(1, 2) - Z(3, 2) * I.f(2, 3);
  const MultiPoly moved = permute_rows(combo, {3, 1, 2});
  CHECK(buchberger_reduce(moved, I.generators()).in_ideal);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const IsotropicFrame fr = project_to_V(sample_symplectic(3, seed));
    CHECK(evaluate_at(moved, fr.y(), fr.z()).is_zero());
  }
}
