#include "periodrel/relations.hpp"

#include <random>

#include "periodrel/errors.hpp"

namespace periodrel {

namespace {

constexpr const char* kScalarActionError = "no relation derivable from scalar endomorphism";
constexpr const char* kCouplingError = "endomorphism spectra force coupling; supply F manually";
constexpr std::size_t kProductSampleBudget = 20;

Matrix random_int_matrix(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(dist(rng));
  return m;
}

Matrix random_invertible(std::size_t g, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_int_matrix(g, g, -3, 3, rng);
    if (!m.determinant().is_zero()) return m;
  }
}

}  // namespace

void EndomorphismAction::validate() const {
  if (g < 1) throw PreconditionError("action requires g >= 1");
  for (const Matrix* m : {&A, &B, &D})
    if (m->rows() != g || m->cols() != g) throw DimensionError("action blocks must be g x g");
}

bool EndomorphismAction::is_scalar() const {
  return B.is_zero() && A == D && A.is_scalar_multiple_of_identity();
}

PolyMatrix build_nonarch_relation(const EndomorphismAction& act) {
  act.validate();
  const PolyMatrix y = PolyMatrix::symbolic(Block::Y, act.g);
  const PolyMatrix z = PolyMatrix::symbolic(Block::Z, act.g);
  const PolyMatrix yt = y.transpose();
  const PolyMatrix zt = z.transpose();
  const PolyMatrix adj = adjugate(yt);
  const MultiPoly det = determinant(y);
  if (!(yt * adj == det * PolyMatrix::identity(act.g)))
    throw InvariantViolation("Y^t adj(Y^t) != det(Y) I");
  return yt * PolyMatrix::from_numeric(act.A) * adj * zt -
         det * (yt * PolyMatrix::from_numeric(act.B)) -
         det * (zt * PolyMatrix::from_numeric(act.D));
}

NontrivialEntry select_nontrivial_entry(const PolyMatrix& p, const EndomorphismAction& act) {
  act.validate();
  if (act.is_scalar()) throw PreconditionError(kScalarActionError);
  const std::size_t g = act.g;
  NontrivialEntry out;
  out.y = Matrix::identity(g);
  if (!act.B.is_zero()) {
    out.case_number = 1;
    out.z = Matrix::zero(g, g);
    out.expected = -act.B;
  } else if (!(act.A == act.D)) {
    out.case_number = 2;
    out.z = Matrix::identity(g);
    out.expected = act.A - act.D;
  } else {
    out.case_number = 3;
    out.z = Matrix::zero(g, g);
    const Matrix& a = act.A;
    bool chosen = false;
    // A not diagonal: z = E_ii for a column i holding a nonzero off-diagonal entry.
    for (std::size_t i = 0; i < g && !chosen; ++i)
      for (std::size_t k = 0; k < g && !chosen; ++k)
        if (k != i && !a(k, i).is_zero()) {
          out.z(i, i) = Scalar(1);
          chosen = true;
        }
    // A diagonal, not scalar: z = E_ij + E_ji with A_ii != A_jj.
    for (std::size_t i = 0; i < g && !chosen; ++i)
      for (std::size_t j = i + 1; j < g && !chosen; ++j)
        if (!(a(i, i) == a(j, j))) {
          out.z(i, j) = out.z(j, i) = Scalar(1);
          chosen = true;
        }
    if (!chosen) throw InvariantViolation("non-scalar action without a distinguishing entry");
    out.expected = a * out.z - out.z * act.D;
  }
  const Matrix value = p.evaluate_at(out.y, out.z);
  if (!(value == out.expected))
    throw InvariantViolation("relation value at the witness differs from the case table");
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (!value(i, j).is_zero()) {
        out.row = i + 1;
        out.col = j + 1;
        out.value = value(i, j);
        return out;
      }
  throw InvariantViolation("relation vanishes at the witness point");
}

bool SyntheticPeriodData::satisfies(const EndomorphismAction& act) const {
  const Matrix ft = F.transpose();
  const Matrix gt = G.transpose();
  return M * ft == ft * act.A && M * gt == ft * act.B + gt * act.D;
}

SyntheticPeriodData synthesize_period_data(const EndomorphismAction& act, std::uint64_t seed) {
  act.validate();
  if (act.is_scalar()) throw PreconditionError(kScalarActionError);
  const std::size_t g = act.g;
  std::mt19937_64 rng(seed);
  SyntheticPeriodData data;
  data.g = g;
  data.F = random_invertible(g, rng);
  const Matrix ft = data.F.transpose();
  data.M = ft * act.A * ft.inverse();

  // vec(M X - X D) = (I kron M - D^t kron I) vec(X) with X = G^t.
  const Matrix id = Matrix::identity(g);
  const Matrix lin = Matrix::kron(id, data.M) - Matrix::kron(act.D.transpose(), id);
  const Matrix rhs = (ft * act.B).vec();
  // With X = F^t Y the system is A Y - Y D = B, so solvability does not depend on F.
  const LinearSolution probe = solve_linear(lin, rhs);
  if (!probe.consistent) throw PreconditionError(kCouplingError);
  std::vector<Scalar> free_values;
  std::uniform_int_distribution<int> dist(-2, 2);
  for (std::size_t k = 0; k < probe.free_columns.size(); ++k) free_values.emplace_back(dist(rng));
  const LinearSolution sol = solve_linear(lin, rhs, free_values);
  data.G = Matrix::unvec(sol.solution, g, g).transpose();
  if (!data.satisfies(act)) throw InvariantViolation("synthetic period data violates M F^t = F^t A or M G^t = F^t B + G^t D");
  return data;
}

bool verify_relation_on_data(const PolyMatrix& p, const SyntheticPeriodData& data) {
  return p.evaluate_at(data.F, data.G).is_zero();
}

EndomorphismAction random_action(std::size_t g, std::uint64_t seed, int kind) {
  if (g < 1) throw PreconditionError("action requires g >= 1");
  std::mt19937_64 rng(seed);
  if (kind == 0) kind = static_cast<int>(seed % 3) + 1;
  if (kind == 3 && g == 1) kind = 2;  // every 1 x 1 matrix is scalar
  EndomorphismAction act;
  act.g = g;
  act.B = Matrix::zero(g, g);
  switch (kind) {
    case 1: {
      act.A = random_int_matrix(g, g, -3, 3, rng);
      // Disjoint spectra of A and D keep A Y - Y D = B solvable for every B.
      const Matrix id = Matrix::identity(g);
      do act.D = random_int_matrix(g, g, -3, 3, rng);
      while ((Matrix::kron(id, act.A) - Matrix::kron(act.D.transpose(), id)).determinant().is_zero());
      do act.B = random_int_matrix(g, g, -3, 3, rng); while (act.B.is_zero());
      break;
    }
    case 2:
      act.A = random_int_matrix(g, g, -3, 3, rng);
      do act.D = random_int_matrix(g, g, -3, 3, rng); while (act.D == act.A);
      break;
    case 3:
      do act.A = random_int_matrix(g, g, -3, 3, rng); while (act.A.is_scalar_multiple_of_identity());
      act.D = act.A;
      break;
    default:
      throw PreconditionError("action kind must be 0, 1, 2 or 3");
  }
  return act;
}

std::string to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::nonarch: return "nonarch";
    case ConstructionKind::case3: return "case3";
    case ConstructionKind::product: return "product";
  }
  return "nonarch";
}

RelationCertificate nonarch_certificate(const EndomorphismAction& act, std::uint64_t seed) {
  const PolyMatrix p = build_nonarch_relation(act);
  const NontrivialEntry entry = select_nontrivial_entry(p, act);
  const SyntheticPeriodData data = synthesize_period_data(act, seed);

  RelationCertificate cert;
  cert.kind = ConstructionKind::nonarch;
  cert.polynomial = p(entry.row - 1, entry.col - 1);
  cert.degree = cert.polynomial.total_degree();
  cert.vanishing_evidence.push_back(
      {"synthetic seed " + std::to_string(seed), verify_relation_on_data(p, data)});
  cert.nontriviality.status = MembershipStatus::not_in_ideal_certified;
  cert.nontriviality.method = "evaluation";
  cert.nontriviality.witness =
      Witness{"case " + std::to_string(entry.case_number), entry.y, entry.z, entry.value};
  cert.nontriviality.points_evaluated = 1;
  cert.justification = {
      "entry (" + std::to_string(entry.row) + "," + std::to_string(entry.col) +
          ") of Y^t A adj(Y^t) Z^t - det(Y) Y^t B - det(Y) Z^t D",
      "vanishes on any (F, G) with M F^t = F^t A and M G^t = F^t B + G^t D",
      "witness lies on V and gives a nonzero value"};
  return cert;
}

RelationCertificate assemble_global_relation(const std::vector<RelationCertificate>& parts) {
  if (parts.empty()) throw PreconditionError("no relation parts to assemble");
  for (const auto& part : parts)
    if (part.nontriviality.status != MembershipStatus::not_in_ideal_certified)
      throw PreconditionError("part lacks non-triviality certificate");
  if (parts.size() == 1) return parts.front();

  RelationCertificate out;
  out.kind = ConstructionKind::product;
  out.polynomial = MultiPoly(Scalar(1));
  std::size_t g = 1;
  for (const auto& part : parts) {
    out.polynomial *= part.polynomial;
    out.degree += part.degree;
    for (auto key : part.polynomial.variables()) g = std::max<std::size_t>(g, VarId::from_key(key).row);
    for (auto key : part.polynomial.variables()) g = std::max<std::size_t>(g, VarId::from_key(key).col);
    for (const auto& rec : part.vanishing_evidence) out.vanishing_evidence.push_back(rec);
    out.factors.push_back(part);
  }
  if (out.polynomial.total_degree() != out.degree)
    throw InvariantViolation("product degree differs from the sum of part degrees");
  out.nontriviality.method = "primality";
  out.nontriviality.status = MembershipStatus::not_in_ideal_certified;
  out.nontriviality.witness =
      find_nonvanishing_point(out.polynomial, g, kProductSampleBudget, 0,
                              &out.nontriviality.points_evaluated);
  if (out.nontriviality.witness) {
    out.nontriviality.method = "evaluation";
  } else {
    out.nontriviality.note = "no nonvanishing sample found; relies on primality of the ideal";
  }
  out.justification = {"product of factors, none of which lies in the ideal",
                       "the ideal is prime (assumed: irreducibility of V is not verified here)"};
  return out;
}

}  // namespace periodrel
