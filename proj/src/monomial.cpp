#include "periodrel/monomial.hpp"

#include <algorithm>

#include "periodrel/errors.hpp"

namespace periodrel {

std::uint8_t VarId::u8(int v) {
  if (v < 1 || v > 255) throw PreconditionError("variable index out of range: " + std::to_string(v));
  return static_cast<std::uint8_t>(v);
}

std::string block_name(Block b) {
  switch (b) {
    case Block::Y: return "Y";
    case Block::Z: return "Z";
    case Block::Yprime: return "Yp";
    case Block::Zprime: return "Zp";
    case Block::X: return "X";
  }
  return "?";
}

Block parse_block(const std::string& name) {
  if (name == "Y") return Block::Y;
  if (name == "Z") return Block::Z;
  if (name == "Yp") return Block::Yprime;
  if (name == "Zp") return Block::Zprime;
  if (name == "X") return Block::X;
  throw PreconditionError("unknown variable block '" + name + "'");
}

std::string VarId::name() const {
  std::string s = block_name(block) + "_" + std::to_string(row) + "_" + std::to_string(col);
  if (copy != 1) s += "^(" + std::to_string(copy) + ")";
  return s;
}

Monomial Monomial::of(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.push_back({v.key(), exponent});
    m.degree_ = exponent;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [k, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == k) {
      m.factors_.back().second += e;
    } else {
      m.factors_.push_back({k, e});
    }
    m.degree_ += e;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  const auto k = v.key();
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{k, 0});
  return (it != factors_.end() && it->first == k) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [k, e] : factors_) {
    while (it != other.factors_.end() && it->first < k) ++it;
    if (it == other.factors_.end() || it->first != k || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial q;
  auto it = other.factors_.begin();
  for (const auto& [k, e] : factors_) {
    std::uint32_t sub = 0;
    while (it != other.factors_.end() && it->first < k) ++it;
    if (it != other.factors_.end() && it->first == k) sub = it->second;
    if (sub > e) throw PreconditionError("monomial quotient is not exact");
    if (e > sub) {
      q.factors_.push_back({k, e - sub});
      q.degree_ += e - sub;
    }
  }
  if (q.degree_ + other.degree_ != degree_) throw PreconditionError("monomial quotient is not exact");
  return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    Factor f;
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      f = *i++;
    } else if (i == a.factors_.end() || j->first < i->first) {
      f = *j++;
    } else {
      f = {i->first, std::max(i->second, j->second)};
      ++i;
      ++j;
    }
    m.factors_.push_back(f);
    m.degree_ += f.second;
  }
  return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) return false;
    if (i->first < j->first) ++i; else ++j;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    }
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [k, e] : factors_) {
    if (!s.empty()) s += "*";
    s += VarId::from_key(k).name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // Same degree: at the smallest variable where the exponents differ, the
  // monomial with the smaller exponent is the larger one.
  auto i = a.factors().begin(), j = b.factors().begin();
  const auto ie = a.factors().end(), je = b.factors().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) return -1;  // a has extra power of a smaller var
    if (i == ie || j->first < i->first) return 1;
    if (i->second != j->second) return i->second > j->second ? -1 : 1;
    ++i;
    ++j;
  }
  return 0;
}

}  // namespace periodrel
