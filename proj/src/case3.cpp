#include <random>

#include "periodrel/errors.hpp"
#include "periodrel/relations.hpp"
#include "periodrel/symplectic.hpp"

namespace periodrel {

namespace {

constexpr const char* kCase3GenusError = "Case 3 construction requires even g > 2";
constexpr std::size_t kCase3SampleBudget = 20;

void require_case3_genus(std::size_t g) {
  if (g <= 2 || g % 2 != 0) throw PreconditionError(kCase3GenusError);
}

MultiPoly var(Block b, std::size_t i, std::size_t j) {
  return MultiPoly::variable({b, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), 1});
}

Matrix random_int_matrix(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(dist(rng));
  return m;
}

}  // namespace

std::unordered_map<std::uint32_t, MultiPoly> change_of_basis_substitution(const Matrix& n) {
  const std::size_t g = n.rows() / 2;
  const Matrix a = n.block(0, 0, g, g), b = n.block(0, g, g, g);
  const Matrix c = n.block(g, 0, g, g), d = n.block(g, g, g, g);
  std::unordered_map<std::uint32_t, MultiPoly> images;
  for (std::size_t i = 1; i <= g; ++i)
    for (std::size_t j = 1; j <= g; ++j) {
      MultiPoly yi, zi;
      for (std::size_t k = 1; k <= g; ++k) {
        yi += a(k - 1, i - 1) * var(Block::Y, k, j) + c(k - 1, i - 1) * var(Block::Z, k, j);
        zi += b(k - 1, i - 1) * var(Block::Y, k, j) + d(k - 1, i - 1) * var(Block::Z, k, j);
      }
      images.emplace(VarId::y(int(i), int(j)).key(), std::move(yi));
      images.emplace(VarId::z(int(i), int(j)).key(), std::move(zi));
    }
  return images;
}

Case3Input random_case3_input(std::size_t g, std::uint64_t seed, long d) {
  require_case3_genus(g);
  std::mt19937_64 rng(seed);
  Case3Input in;
  in.g = g;
  do in.H = random_int_matrix(g, g, -3, 3, rng); while (in.H.determinant().is_zero());

  Matrix bsym(g, g);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) bsym(i, j) = bsym(j, i) = Scalar(coeff(rng));
  const Matrix shear = Matrix::from_blocks(Matrix::identity(g), Scalar::sqrt_of(d) * bsym,
                                           Matrix::zero(g, g), Matrix::identity(g));
  const Matrix s = sample_symplectic(g, rng()).matrix() * shear;

  std::uniform_int_distribution<int> ra(1, 3), rb(1, 2);
  const Scalar r = Scalar::quadratic(d, ra(rng), rb(rng));
  in.e = r * r;
  in.N = r.inverse() * s;
  if (!(in.e * (in.N.transpose() * standard_J(g) * in.N) == standard_J(g)))
    throw InvariantViolation("change of basis is not a symplectic similitude");
  return in;
}

Case3Result build_case3_relation(const Case3Input& input) {
  const std::size_t g = input.g;
  require_case3_genus(g);
  if (input.H.rows() != g || input.H.cols() != g || input.N.rows() != 2 * g ||
      input.N.cols() != 2 * g)
    throw DimensionError("Case 3 input has inconsistent dimensions");
  if (input.H.determinant().is_zero()) throw PreconditionError("degenerate period matrix");
  if (!(input.e * (input.N.transpose() * standard_J(g) * input.N) == standard_J(g)))
    throw InvariantViolation("e N^t J N != J for the supplied change of basis");
  const std::size_t h = g / 2;

  Case3Result res;
  const Matrix j = standard_J(h);
  res.m_prime = input.H.transpose() * j * input.H;

  // R and S are the (1,2) and (1,h+2) entries of X^t J X.
  const PolyMatrix x = PolyMatrix::symbolic(Block::X, g);
  const PolyMatrix xjx = x.transpose() * PolyMatrix::from_numeric(j) * x;
  res.R = xjx(0, 1);
  res.S = xjx(0, h + 1);
  if (res.R.is_zero() || res.S.is_zero() || !disjoint_support(res.R, res.S))
    throw InvariantViolation("R and S must be nonzero with disjoint supports");

  const Scalar m12 = res.m_prime(0, 1);
  const Scalar m1s = res.m_prime(0, h + 1);
  if (m12.is_zero()) {
    res.lambda = 1;
    res.mu = 0;
  } else if (m1s.is_zero()) {
    res.lambda = 0;
    res.mu = 1;
  } else {
    res.lambda = m1s;
    res.mu = -m12;
  }
  // lambda M'_12 + mu M'_1,h+2 = 0 makes Q = lambda R + mu S vanish at H.
  res.Q = res.lambda * res.R + res.mu * res.S;
  res.q_at_h = res.Q.evaluate([&](VarId v) { return input.H(v.row - 1, v.col - 1); });
  if (!res.q_at_h.is_zero()) throw InvariantViolation("Q(H) != 0");

  // Top half of X -> top half of Y, bottom half of X -> top half of Z.
  std::unordered_map<std::uint32_t, MultiPoly> lift;
  for (std::size_t i = 1; i <= h; ++i)
    for (std::size_t c = 1; c <= g; ++c) {
      lift.emplace(VarId::x(int(i), int(c)).key(), var(Block::Y, i, c));
      lift.emplace(VarId::x(int(h + i), int(c)).key(), var(Block::Z, i, c));
    }
  res.p_hat = res.Q.substitute(lift);
  const auto phi = change_of_basis_substitution(input.N);
  res.p_v = res.p_hat.substitute(phi);

  res.permutation = swap_first_last(g);
  res.p_hat_changed = row_permutation_test(res.p_hat, res.permutation);
  res.p_v_changed = row_permutation_test(res.p_v, res.permutation);

  const PolyMatrix gen = TrivialIdeal(g).generator_matrix();
  res.phi_scale = input.e.inverse();
  res.phi_identity = gen.substitute(phi) == MultiPoly(res.phi_scale) * gen;

  // Periods realising H: top halves of (F^, G^) are H, bottom halves random,
  // and (F; G) = N^{-t} (F^; G^).
  std::mt19937_64 rng(0x5eed ^ g);
  Matrix fhat = random_int_matrix(g, g, -3, 3, rng);
  Matrix ghat = random_int_matrix(g, g, -3, 3, rng);
  fhat.set_block(0, 0, input.H.block(0, 0, h, g));
  ghat.set_block(0, 0, input.H.block(h, 0, h, g));
  const Matrix fg = input.N.transpose().inverse() * Matrix::vstack(fhat, ghat);
  res.F = fg.block(0, 0, g, g);
  res.G = fg.block(g, 0, g, g);
  res.vanishes_on_data = evaluate_at(res.p_v, res.F, res.G).is_zero();

  RelationCertificate& cert = res.certificate;
  cert.kind = ConstructionKind::case3;
  cert.polynomial = res.p_v;
  cert.degree = res.p_v.total_degree();
  cert.vanishing_evidence.push_back({"case3 periods realising H", res.vanishes_on_data});
  MembershipVerdict& nt = cert.nontriviality;
  nt.method = "row_permutation";
  nt.permutation = res.permutation;
  nt.status = (res.p_hat_changed && res.phi_identity && !res.p_hat.is_zero())
                  ? MembershipStatus::not_in_ideal_certified
                  : MembershipStatus::undecided;
  nt.witness = find_nonvanishing_point(res.p_v, g, kCase3SampleBudget, 0, &nt.points_evaluated);
  nt.note = "ideal elements are invariant under simultaneous row permutations of Y and Z; "
            "the swap of rows 1 and g changes p_hat, and Phi preserves the ideal";
  cert.justification = {"Q = lambda R + mu S vanishes at H",
                        "p_v(F, G) = p_hat(F^, G^) = Q(H) = 0",
                        "Phi maps Y^t Z - Z^t Y to (1/e)(Y^t Z - Z^t Y)"};
  return res;
}

}  // namespace periodrel
