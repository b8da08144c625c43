#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "periodrel/matrix.hpp"
#include "periodrel/multipoly.hpp"
#include "periodrel/polymatrix.hpp"
#include "periodrel/trivial_ideal.hpp"

namespace periodrel {

/// The block upper-triangular matrix (A, B; 0, D) of an endomorphism acting on
/// de Rham cohomology.
struct EndomorphismAction {
  std::size_t g = 0;
  Matrix A, B, D;

  /// Checks that A, B, D are g x g.
  void validate() const;
  /// True when (A, B; 0, D) = lambda I_2g.
  bool is_scalar() const;
};

/// g x g matrix P = Y^t A adj(Y^t) Z^t - det(Y) Y^t B - det(Y) Z^t D.
/// Every nonzero entry is homogeneous of degree g + 1.
PolyMatrix build_nonarch_relation(const EndomorphismAction& act);

struct NontrivialEntry {
  std::size_t row = 0, col = 0;  // 1-based
  int case_number = 0;           // 1: B != 0, 2: A != D, 3: A = D not scalar
  Matrix y, z;
  Scalar value;                  // P_{row,col}(y, z)
  Matrix expected;               // -B, A - D or A z - z D
};

/// Picks an entry of P with a point (y, z) of V where it does not vanish,
/// following the three-case analysis. Throws PreconditionError for scalar
/// actions.
NontrivialEntry select_nontrivial_entry(const PolyMatrix& p, const EndomorphismAction& act);

/// Period matrices F, G with M F^t = F^t A and M G^t = F^t B + G^t D.
struct SyntheticPeriodData {
  std::size_t g = 0;
  Matrix M, F, G;

  bool satisfies(const EndomorphismAction& act) const;
};

/// Draws F, sets M = F^t A F^{-t} and solves the Sylvester system
/// M G^t - G^t D = F^t B through its Kronecker linearisation.
SyntheticPeriodData synthesize_period_data(const EndomorphismAction& act, std::uint64_t seed);

/// True iff every entry of P vanishes at (F, G).
bool verify_relation_on_data(const PolyMatrix& p, const SyntheticPeriodData& data);

/// A seeded non-scalar action over Q. kind 1 gives B != 0 with A, D of disjoint
/// spectra, kind 2 gives B = 0 and A != D, kind 3 gives B = 0 and A = D not
/// scalar; kind 0 picks by seed.
EndomorphismAction random_action(std::size_t g, std::uint64_t seed, int kind = 0);

enum class ConstructionKind { nonarch, case3, product };
std::string to_string(ConstructionKind k);

struct VanishingRecord {
  std::string data_id;
  bool exact_zero = false;
};

struct RelationCertificate {
  MultiPoly polynomial;
  int degree = 0;
  ConstructionKind kind = ConstructionKind::nonarch;
  std::vector<VanishingRecord> vanishing_evidence;
  MembershipVerdict nontriviality;
  std::string monomial_order = kMonomialOrderName;
  std::vector<std::string> justification;
  std::vector<RelationCertificate> factors;
};

/// Nonarchimedean certificate: the selected entry of build_nonarch_relation,
/// its vanishing on synthesised period data and its evaluation witness.
RelationCertificate nonarch_certificate(const EndomorphismAction& act, std::uint64_t seed);

/// Real-quadratic Case 3 input: a synthetic g x g period matrix H and a change
/// of basis N = (A, B; C, D) with e N^t J N = J.
struct Case3Input {
  std::size_t g = 0;
  Matrix H;
  Matrix N;
  Scalar e;

  Matrix A() const { return N.block(0, 0, g, g); }
  Matrix B() const { return N.block(0, g, g, g); }
  Matrix C() const { return N.block(g, 0, g, g); }
  Matrix D() const { return N.block(g, g, g, g); }
};

/// Seeded Case3Input over Q(sqrt d): H random invertible over Q, N = S / r
/// with S in Sp_2g(Q(sqrt d)) and e = r^2 for a random r in Q(sqrt d).
Case3Input random_case3_input(std::size_t g, std::uint64_t seed, long d = 2);

struct Case3Result {
  Matrix m_prime;                 // H^t J H
  Scalar lambda, mu;
  MultiPoly R, S, Q;              // in the X block
  Scalar q_at_h;                  // Q(H), must be zero
  MultiPoly p_hat;                // Q with the top halves of Y and Z substituted
  MultiPoly p_v;                  // p_hat(A^t Y + C^t Z, B^t Y + D^t Z)
  std::vector<std::size_t> permutation;
  bool p_hat_changed = false;     // row swap changes p_hat
  bool p_v_changed = false;       // row swap changes p_v
  Scalar phi_scale;               // Phi(Y^t Z - Z^t Y) = phi_scale (Y^t Z - Z^t Y)
  bool phi_identity = false;
  bool vanishes_on_data = false;  // p_v(F, G) = 0 for the F, G realising H
  Matrix F, G;
  RelationCertificate certificate;
};

/// Builds the degree-2 Case 3 relation and its non-triviality evidence.
Case3Result build_case3_relation(const Case3Input& input);

/// Phi: Y -> A^t Y + C^t Z, Z -> B^t Y + D^t Z on the Y, Z variables.
std::unordered_map<std::uint32_t, MultiPoly> change_of_basis_substitution(const Matrix& n);

/// Product of certified parts; each part must carry a not_in_ideal verdict.
RelationCertificate assemble_global_relation(const std::vector<RelationCertificate>& parts);

}  // namespace periodrel
