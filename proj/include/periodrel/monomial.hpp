#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace periodrel {

/// Which g x g block of period variables a variable belongs to. X is the
/// auxiliary g x g matrix used before substituting into (Y, Z).
enum class Block : std::uint8_t { Y = 0, Z = 1, Yprime = 2, Zprime = 3, X = 4 };

/// A period variable Y_ij, Z_ij, Y'_ij, Z'_ij or X_ij (1-based row/col), with a
/// copy index for multi-factor settings.
struct VarId {
  Block block = Block::Y;
  std::uint8_t row = 1;
  std::uint8_t col = 1;
  std::uint8_t copy = 1;

  static VarId y(int i, int j) { return {Block::Y, u8(i), u8(j), 1}; }
  static VarId z(int i, int j) { return {Block::Z, u8(i), u8(j), 1}; }
  static VarId x(int i, int j) { return {Block::X, u8(i), u8(j), 1}; }

  /// Packed key; ascending keys give the variable order
  /// Y_11 < Y_12 < ... < Y_gg < Z_11 < ... < Z_gg < Y'_11 < ...
  std::uint32_t key() const {
    return (std::uint32_t(block) << 24) | (std::uint32_t(copy) << 16) |
           (std::uint32_t(row) << 8) | std::uint32_t(col);
  }
  static VarId from_key(std::uint32_t k) {
    return {Block((k >> 24) & 0xff), std::uint8_t((k >> 8) & 0xff), std::uint8_t(k & 0xff),
            std::uint8_t((k >> 16) & 0xff)};
  }

  std::string name() const;
  friend bool operator==(const VarId& a, const VarId& b) { return a.key() == b.key(); }
  friend auto operator<=>(const VarId& a, const VarId& b) { return a.key() <=> b.key(); }

 private:
  static std::uint8_t u8(int v);
};

std::string block_name(Block b);
Block parse_block(const std::string& name);

/// Power product, stored sparsely as (variable key, exponent) pairs sorted by
/// ascending key with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t exponent = 1);
  /// Factors in any order; repeated variables are merged, zero exponents dropped.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  /// this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  /// True when the two monomials share no variable.
  static bool coprime(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  std::string str() const;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Degree reverse lexicographic order with Y_11 the smallest variable.
/// Returns <0, 0, >0 as a is smaller, equal, greater than b.
int degrevlex_compare(const Monomial& a, const Monomial& b);

/// Strict weak ordering placing larger monomials first.
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) > 0; }
};

/// Name recorded in certificates for the monomial order in use.
inline constexpr const char* kMonomialOrderName =
    "degrevlex, Y_11 < ... < Y_gg < Z_11 < ... < Z_gg";

}  // namespace periodrel
