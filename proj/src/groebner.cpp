#include "periodrel/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "periodrel/errors.hpp"

namespace periodrel {

namespace {

MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p.leading_coefficient().inverse() * p;
}

void require_rational(const MultiPoly& p) {
  if (!p.all_coefficients_rational())
    throw PreconditionError("Groebner computations run over the rationals only");
}

// Reduces the leading term repeatedly, then the tail, against basis.
MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& basis) {
  MultiPoly remainder;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Scalar lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& b : basis) {
      if (b.is_zero() || !b.leading_monomial().divides(lm)) continue;
      const Monomial q = lm.quotient(b.leading_monomial());
      p -= b.mul_term(lc / b.leading_coefficient(), q);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      p -= MultiPoly::term(lc, lm);
    }
  }
  return remainder;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(f.leading_coefficient().inverse(), l.quotient(f.leading_monomial())) -
         g.mul_term(g.leading_coefficient().inverse(), l.quotient(g.leading_monomial()));
}

struct Pair {
  std::uint32_t degree;
  std::size_t i, j;
  Monomial lcm;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    // Normal selection: smallest lcm first, ties by index.
    const int c = degrevlex_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }
};

void check_limits(const std::vector<MultiPoly>& polys, const GroebnerLimits& limits) {
  std::set<std::uint32_t> vars;
  for (const auto& p : polys) {
    if (p.total_degree() > limits.max_degree) throw UndecidedError(kUndecidedMessage);
    for (auto k : p.variables()) vars.insert(k);
  }
  if (vars.size() > limits.max_variables) throw UndecidedError(kUndecidedMessage);
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& generators,
                                  const GroebnerLimits& limits, std::size_t& pairs_considered) {
  std::vector<MultiPoly> g;
  for (const auto& f : generators) {
    require_rational(f);
    MultiPoly r = monic(reduce_full(f, g));
    if (!r.is_zero()) g.push_back(std::move(r));
  }

  std::set<Pair, PairLess> pending;
  auto pair_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    Monomial l = Monomial::lcm(g[a].leading_monomial(), g[b].leading_monomial());
    return pending.count(Pair{l.degree(), a, b, l}) > 0;
  };
  auto add_pairs_for = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i].is_zero()) continue;
      Monomial l = Monomial::lcm(g[i].leading_monomial(), g[n].leading_monomial());
      pending.insert(Pair{l.degree(), i, n, std::move(l)});
    }
  };
  for (std::size_t n = 1; n < g.size(); ++n) add_pairs_for(n);

  pairs_considered = 0;
  while (!pending.empty()) {
    if (++pairs_considered > limits.max_pairs) throw UndecidedError(kUndecidedMessage);
    const Pair pr = *pending.begin();
    pending.erase(pending.begin());
    const MultiPoly& f = g[pr.i];
    const MultiPoly& h = g[pr.j];
    if (f.is_zero() || h.is_zero()) continue;
    // Product criterion.
    if (Monomial::coprime(f.leading_monomial(), h.leading_monomial())) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || g[k].is_zero()) continue;
      if (g[k].leading_monomial().divides(pr.lcm) && !pair_pending(pr.i, k) &&
          !pair_pending(pr.j, k))
        chain = true;
    }
    if (chain) continue;
    MultiPoly r = reduce_full(s_polynomial(f, h), g);
    if (r.is_zero()) continue;
    g.push_back(monic(r));
    add_pairs_for(g.size() - 1);
  }

  // Minimalise, then interreduce.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = g[i].leading_monomial();
      const auto& lj = g[j].leading_monomial();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const MultiPoly lead = MultiPoly::term(Scalar(1), minimal[i].leading_monomial());
    minimal[i] = lead + reduce_full(minimal[i] - lead, others);
  }
  std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return degrevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return minimal;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators,
                                      const GroebnerLimits& limits) {
  check_limits(generators, limits);
  std::size_t pairs = 0;
  return buchberger(generators, limits, pairs);
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
  return reduce_full(p, basis);
}

ReductionResult buchberger_reduce(const MultiPoly& p, const std::vector<MultiPoly>& generators,
                                  const GroebnerLimits& limits) {
  if (generators.empty()) throw PreconditionError("generator list must be nonempty");
  require_rational(p);
  std::vector<MultiPoly> all = generators;
  all.push_back(p);
  check_limits(all, limits);
  ReductionResult res;
  const auto basis = buchberger(generators, limits, res.pairs_considered);
  res.basis_size = basis.size();
  res.remainder = reduce_full(p, basis);
  res.in_ideal = res.remainder.is_zero();
  return res;
}

}  // namespace periodrel
