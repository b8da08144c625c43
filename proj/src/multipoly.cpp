#include "periodrel/multipoly.hpp"

#include <algorithm>
#include <set>

#include "periodrel/errors.hpp"

namespace periodrel {

MultiPoly::MultiPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(VarId v) { return term(Scalar(1), Monomial::of(v)); }

MultiPoly MultiPoly::term(const Scalar& c, const Monomial& m) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Scalar& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

bool MultiPoly::all_coefficients_rational() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_rational(); });
}

std::vector<std::uint32_t> MultiPoly::variables() const {
  std::set<std::uint32_t> keys;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) keys.insert(f.first);
  return {keys.begin(), keys.end()};
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::derivative(VarId v) const {
  MultiPoly out;
  const auto key = v.key();
  for (const auto& [m, c] : terms_) {
    const auto e = m.exponent(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> fs = m.factors();
    for (auto& f : fs)
      if (f.first == key) f.second -= 1;
    out.add_term(Monomial::from_factors(std::move(fs)), c * Scalar(static_cast<long>(e)));
  }
  return out;
}

Scalar MultiPoly::evaluate(const std::function<Scalar(VarId)>& value) const {
  std::unordered_map<std::uint32_t, Scalar> cache;
  Scalar sum;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (const auto& [k, e] : m.factors()) {
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, value(VarId::from_key(k))).first;
      t *= it->second.pow(e);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::unordered_map<std::uint32_t, MultiPoly>& images) const {
  // Powers of each image are cached; exponents here are small.
  std::map<std::pair<std::uint32_t, std::uint32_t>, MultiPoly> powers;
  auto power_of = [&](std::uint32_t key, std::uint32_t e) -> const MultiPoly& {
    auto it = powers.find({key, e});
    if (it != powers.end()) return it->second;
    const auto img = images.find(key);
    MultiPoly base = img == images.end() ? MultiPoly::variable(VarId::from_key(key)) : img->second;
    return powers.emplace(std::make_pair(key, e), base.pow(e)).first->second;
  };
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    MultiPoly t(c);
    for (const auto& [k, e] : m.factors()) t *= power_of(k, e);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::rename(const std::function<VarId(VarId)>& f) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> fs;
    fs.reserve(m.factors().size());
    for (const auto& [k, e] : m.factors()) fs.push_back({f(VarId::from_key(k)).key(), e});
    out.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly operator*(const Scalar& c, const MultiPoly& p) {
  MultiPoly out;
  if (c.is_zero()) return out;
  for (const auto& [m, k] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), m, c * k);
  return out;
}

MultiPoly MultiPoly::operator-() const { return Scalar(-1) * *this; }

MultiPoly MultiPoly::mul_term(const Scalar& c, const Monomial& m) const {
  MultiPoly out;
  if (c.is_zero()) return out;
  // Multiplying by a monomial preserves the term order.
  for (const auto& [mm, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, c * k);
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(Scalar(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  for (auto j = b.terms_.begin(); j != b.terms_.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (m.is_one()) {
      s += c.str();
    } else if (c == Scalar(1)) {
      s += m.str();
    } else {
      s += "(" + c.str() + ")*" + m.str();
    }
  }
  return s;
}

Scalar evaluate_at(const MultiPoly& p, const Matrix& y, const Matrix& z) {
  return p.evaluate([&](VarId v) -> Scalar {
    const Matrix* src = nullptr;
    if (v.block == Block::Y) src = &y;
    if (v.block == Block::Z) src = &z;
    if (src == nullptr || v.copy != 1)
      throw PreconditionError("cannot evaluate variable " + v.name() + " at a (Y, Z) point");
    if (v.row > src->rows() || v.col > src->cols())
      throw DimensionError("variable " + v.name() + " outside the evaluation point");
    return (*src)(v.row - 1, v.col - 1);
  });
}

bool disjoint_support(const MultiPoly& a, const MultiPoly& b) {
  for (const auto& [m, c] : a.terms())
    if (b.terms().count(m)) return false;
  return true;
}

}  // namespace periodrel
