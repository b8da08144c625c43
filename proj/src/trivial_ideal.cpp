#include "periodrel/trivial_ideal.hpp"

#include <algorithm>

#include "periodrel/errors.hpp"
#include "periodrel/symplectic.hpp"

namespace periodrel {

namespace {

MultiPoly var(Block b, std::size_t i, std::size_t j) {
  return MultiPoly::variable({b, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), 1});
}

constexpr std::size_t kRadicalityFallbackPoints = 50;

}  // namespace

TrivialIdeal::TrivialIdeal(std::size_t g) : g_(g) {
  if (g < 1) throw PreconditionError("trivial ideal requires g >= 1");
  for (std::size_t i = 1; i <= g; ++i)
    for (std::size_t j = i + 1; j <= g; ++j) gens_.push_back(f(i, j));
}

MultiPoly TrivialIdeal::f(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > g_ || j > g_) throw DimensionError("generator index out of range");
  MultiPoly p;
  for (std::size_t k = 1; k <= g_; ++k) {
    p += var(Block::Y, k, i) * var(Block::Z, k, j);
    p -= var(Block::Z, k, i) * var(Block::Y, k, j);
  }
  return p;
}

PolyMatrix TrivialIdeal::generator_matrix() const {
  const PolyMatrix y = PolyMatrix::symbolic(Block::Y, g_);
  const PolyMatrix z = PolyMatrix::symbolic(Block::Z, g_);
  return y.transpose() * z - z.transpose() * y;
}

TrivialIdeal generators(std::size_t g) { return TrivialIdeal(g); }

std::vector<VarId> period_variables(std::size_t g) {
  std::vector<VarId> vars;
  for (Block b : {Block::Y, Block::Z})
    for (std::size_t i = 1; i <= g; ++i)
      for (std::size_t j = 1; j <= g; ++j)
        vars.push_back({b, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), 1});
  return vars;
}

std::size_t jacobian_rank_at(const TrivialIdeal& ideal, const Matrix& y0, const Matrix& z0) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return 0;
  const auto vars = period_variables(ideal.g());
  Matrix jac(gens.size(), vars.size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < vars.size(); ++c)
      jac(r, c) = evaluate_at(gens[r].derivative(vars[c]), y0, z0);
  return jac.rank();
}

RadicalityReport radicality_certificate(const TrivialIdeal& ideal) {
  const std::size_t g = ideal.g();
  RadicalityReport rep;
  rep.g = g;
  rep.generator_count = ideal.generators().size();
  rep.primality =
      "primality of the ideal rests on irreducibility of V, which is assumed, not verified";

  auto on_V = [&](const Matrix& y, const Matrix& z) {
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const MultiPoly& f) { return evaluate_at(f, y, z).is_zero(); });
  };
  auto try_point = [&](const Matrix& y, const Matrix& z) {
    rep.witness_y = y;
    rep.witness_z = z;
    rep.witness_on_V = on_V(y, z);
    rep.rank = jacobian_rank_at(ideal, y, z);
    return rep.witness_on_V && rep.rank >= rep.generator_count;
  };

  bool ok = try_point(Matrix::identity(g), Matrix::zero(g, g));
  for (std::size_t s = 0; !ok && s < kRadicalityFallbackPoints; ++s) {
    const IsotropicFrame fr = project_to_V(sample_symplectic(g, s));
    ++rep.random_points_tried;
    ok = try_point(fr.y(), fr.z());
  }
  rep.radical = ok;
  rep.verdict = ok ? "radical" : "witness insufficient";
  return rep;
}

std::string to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::in_ideal_certified: return "in_ideal_certified";
    case MembershipStatus::not_in_ideal_certified: return "not_in_ideal_certified";
    case MembershipStatus::undecided: return "undecided";
  }
  return "undecided";
}

std::vector<Witness> structured_witnesses(std::size_t g) {
  Matrix s(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) s(i, j) = Scalar(static_cast<long>(std::min(i, j) + 1));
  return {{"(I,0)", Matrix::identity(g), Matrix::zero(g, g), Scalar(0)},
          {"(I,I)", Matrix::identity(g), Matrix::identity(g), Scalar(0)},
          {"(I,S)", Matrix::identity(g), s, Scalar(0)}};
}

std::optional<Witness> find_nonvanishing_point(const MultiPoly& p, std::size_t g,
                                               std::size_t sample_budget, std::uint64_t seed,
                                               std::size_t* points_evaluated) {
  std::size_t count = 0;
  std::optional<Witness> found;
  for (auto& w : structured_witnesses(g)) {
    ++count;
    w.value = evaluate_at(p, w.y, w.z);
    if (!w.value.is_zero()) {
      found = std::move(w);
      break;
    }
  }
  for (std::size_t s = 0; !found && s < sample_budget; ++s) {
    const IsotropicFrame fr = project_to_V(sample_symplectic(g, seed + s));
    ++count;
    const Scalar v = evaluate_at(p, fr.y(), fr.z());
    if (!v.is_zero())
      found = Witness{"torsor sample seed " + std::to_string(seed + s), fr.y(), fr.z(), v};
  }
  if (points_evaluated) *points_evaluated = count;
  return found;
}

MembershipVerdict membership(const MultiPoly& p, const TrivialIdeal& ideal,
                             std::size_t sample_budget, std::uint64_t seed,
                             const GroebnerLimits& limits) {
  MembershipVerdict v;
  v.witness = find_nonvanishing_point(p, ideal.g(), sample_budget, seed, &v.points_evaluated);
  if (v.witness) {
    v.status = MembershipStatus::not_in_ideal_certified;
    v.method = "evaluation";
    return v;
  }
  if (ideal.generators().empty()) {
    // The zero ideal: only the zero polynomial belongs to it.
    v.remainder = p;
    v.method = "groebner";
    v.status = p.is_zero() ? MembershipStatus::in_ideal_certified
                           : MembershipStatus::not_in_ideal_certified;
    return v;
  }
  if (ideal.g() > 3) {
    v.method = "none";
    v.note = "all sampled values vanish; exact membership not attempted for g > 3";
    return v;
  }
  if (!p.all_coefficients_rational()) {
    v.method = "none";
    v.note = "all sampled values vanish; exact membership runs over the rationals only";
    return v;
  }
  try {
    const ReductionResult r = buchberger_reduce(p, ideal.generators(), limits);
    v.method = "groebner";
    v.remainder = r.remainder;
    v.status = r.in_ideal ? MembershipStatus::in_ideal_certified
                          : MembershipStatus::not_in_ideal_certified;
  } catch (const UndecidedError& e) {
    v.method = "none";
    v.note = e.what();
  }
  return v;
}

MultiPoly permute_rows(const MultiPoly& p, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i + 1) throw PreconditionError("not a permutation of 1..g");
  return p.rename([&](VarId v) {
    if (v.block != Block::Y && v.block != Block::Z)
      throw PreconditionError("row permutation acts on Y and Z variables only");
    if (v.row > perm.size()) throw DimensionError("permutation shorter than the variable rows");
    VarId w = v;
    w.row = static_cast<std::uint8_t>(perm[v.row - 1]);
    return w;
  });
}

bool row_permutation_test(const MultiPoly& p, const std::vector<std::size_t>& perm) {
  return !(permute_rows(p, perm) == p);
}

std::vector<std::size_t> swap_first_last(std::size_t g) {
  std::vector<std::size_t> perm(g);
  for (std::size_t i = 0; i < g; ++i) perm[i] = i + 1;
  if (g > 1) std::swap(perm.front(), perm.back());
  return perm;
}

}  // namespace periodrel
