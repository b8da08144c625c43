#include "periodrel/json_io.hpp"

#include <cmath>

#include "periodrel/errors.hpp"

namespace periodrel::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw PreconditionError("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string bound_name(BoundednessVerdict v) {
  switch (v) {
    case BoundednessVerdict::bounded: return "bounded";
    case BoundednessVerdict::unbounded_evidence: return "unbounded_evidence";
    case BoundednessVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace

json real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("rational must be a string or an integer");
}

json to_json(const Scalar& s) {
  if (s.is_rational()) return to_json(s.a());
  return {{"d", s.d()}, {"a", to_json(s.a())}, {"b", to_json(s.b())}};
}

Scalar scalar_from_json(const json& j) {
  if (j.is_object()) {
    const long d = field(j, "d").get<long>();
    const Rational b = rational_from_json(field(j, "b"));
    const Rational a = rational_from_json(field(j, "a"));
    return Scalar::quadratic(d, a, b);
  }
  return Scalar(rational_from_json(j));
}

json to_json(const Place& v) {
  if (v.is_archimedean())
    return {{"kind", "arch"}, {"embedding", v.embedding() == Embedding::sigma ? "sigma" : "tau"}};
  return {{"kind", "finite"}, {"p", v.prime()}};
}

Place place_from_json(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "arch") {
    const std::string e = j.value("embedding", std::string("sigma"));
    if (e != "sigma" && e != "tau") bad("embedding must be sigma or tau");
    return Place::archimedean(e == "sigma" ? Embedding::sigma : Embedding::tau);
  }
  if (kind == "finite") return Place::finite(field(j, "p").get<long>());
  bad("place kind must be arch or finite");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) bad("matrix must be a list of rows");
  Matrix m(j.size(), j.front().size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) bad("ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = scalar_from_json(j[i][k]);
  }
  return m;
}

json to_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const json& j) {
  const int order = field(j, "order").get<int>();
  const json& cs = field(j, "coeffs");
  if (!cs.is_array() || static_cast<int>(cs.size()) != order + 1)
    bad("series needs order + 1 coefficients");
  std::vector<Scalar> coeffs;
  for (const auto& c : cs) coeffs.push_back(scalar_from_json(c));
  return TruncatedSeries(std::move(coeffs));
}

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& [k, e] : m.factors()) {
      const VarId v = VarId::from_key(k);
      json f = {block_name(v.block), v.row, v.col, e};
      if (v.copy != 1) f.push_back(v.copy);
      mono.push_back(std::move(f));
    }
    terms.push_back({{"coeff", to_json(c)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

MultiPoly poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be a list of terms");
  MultiPoly p;
  for (const auto& t : j) {
    std::vector<Monomial::Factor> fs;
    for (const auto& f : field(t, "monomial")) {
      if (!f.is_array() || f.size() < 4 || f.size() > 5) bad("monomial factor must be [block, i, j, exp]");
      VarId v{parse_block(f[0].get<std::string>()), 1, 1, 1};
      const int i = f[1].get<int>(), c = f[2].get<int>(), e = f[3].get<int>();
      if (i < 1 || c < 1 || i > 255 || c > 255 || e < 0) bad("variable index or exponent out of range");
      v.row = static_cast<std::uint8_t>(i);
      v.col = static_cast<std::uint8_t>(c);
      if (f.size() == 5) v.copy = static_cast<std::uint8_t>(f[4].get<int>());
      fs.push_back({v.key(), static_cast<std::uint32_t>(e)});
    }
    p.add_term(Monomial::from_factors(std::move(fs)), scalar_from_json(field(t, "coeff")));
  }
  return p;
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

PolyMatrix poly_matrix_from_json(const json& j) {
  const auto rows = field(j, "rows").get<std::size_t>();
  const auto cols = field(j, "cols").get<std::size_t>();
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) bad("entries do not match rows");
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols) bad("entries do not match cols");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = poly_from_json(e[i][k]);
  }
  return m;
}

json to_json(const EndomorphismAction& a) {
  return {{"g", a.g}, {"A", to_json(a.A)}, {"B", to_json(a.B)}, {"D", to_json(a.D)}};
}

EndomorphismAction action_from_json(const json& j) {
  EndomorphismAction a;
  a.g = field(j, "g").get<std::size_t>();
  a.A = matrix_from_json(field(j, "A"));
  a.B = matrix_from_json(field(j, "B"));
  a.D = matrix_from_json(field(j, "D"));
  a.validate();
  return a;
}

json to_json(const SyntheticPeriodData& d) {
  return {{"g", d.g}, {"M", to_json(d.M)}, {"F", to_json(d.F)}, {"G", to_json(d.G)}};
}

SyntheticPeriodData period_data_from_json(const json& j) {
  SyntheticPeriodData d;
  d.g = field(j, "g").get<std::size_t>();
  d.F = matrix_from_json(field(j, "F"));
  d.G = matrix_from_json(field(j, "G"));
  if (j.contains("M")) d.M = matrix_from_json(j.at("M"));
  if (d.F.rows() != d.g || d.F.cols() != d.g || d.G.rows() != d.g || d.G.cols() != d.g)
    throw DimensionError("period matrices must be g x g");
  return d;
}

json to_json(const GFunMatrix& m) {
  json entries = json::array(), integral = json::array();
  for (std::size_t i = 0; i < m.g(); ++i) {
    json row = json::array(), flags = json::array();
    for (std::size_t k = 0; k < m.g(); ++k) {
      row.push_back(to_json(m(i, k)));
      flags.push_back(m.integral(i, k));
    }
    entries.push_back(std::move(row));
    integral.push_back(std::move(flags));
  }
  return {{"g", m.g()}, {"order", m.order()}, {"entries", std::move(entries)}, {"integral", std::move(integral)}};
}

GFunMatrix gfun_matrix_from_json(const json& j) {
  const auto g = field(j, "g").get<std::size_t>();
  const json& e = field(j, "entries");
  if (!e.is_array() || e.size() != g) bad("entries must have g rows");
  std::vector<TruncatedSeries> entries;
  std::vector<bool> integral;
  for (std::size_t i = 0; i < g; ++i) {
    if (!e[i].is_array() || e[i].size() != g) bad("entries must have g columns");
    for (std::size_t k = 0; k < g; ++k) {
      entries.push_back(series_from_json(e[i][k]));
      if (j.contains("integral")) integral.push_back(j.at("integral").at(i).at(k).get<bool>());
    }
  }
  return GFunMatrix(g, std::move(entries), std::move(integral));
}

json to_json(const GaussManinCoefficients& a) {
  json outer = json::array();
  for (std::size_t i = 0; i < a.g(); ++i) {
    json ks = json::array();
    for (int k = 0; k <= a.N(); ++k) {
      json ls = json::array();
      for (std::size_t l = 0; l < a.g(); ++l) ls.push_back(to_json(a.a(i, k, l)));
      ks.push_back(std::move(ls));
    }
    outer.push_back(std::move(ks));
  }
  return {{"g", a.g()}, {"N", a.N()}, {"integral_asserted", a.integral_asserted()}, {"a", std::move(outer)}};
}

GaussManinCoefficients coefficients_from_json(const json& j) {
  const auto g = field(j, "g").get<std::size_t>();
  const int n = field(j, "N").get<int>();
  const json& a = field(j, "a");
  std::vector<TruncatedSeries> flat;
  for (std::size_t i = 0; i < g; ++i)
    for (int k = 0; k <= n; ++k)
      for (std::size_t l = 0; l < g; ++l) flat.push_back(series_from_json(a.at(i).at(k).at(l)));
  return GaussManinCoefficients(g, n, std::move(flat), j.value("integral_asserted", false));
}

json to_json(const SymplecticSample& s) {
  return {{"g", s.g()}, {"multiplier", to_json(s.multiplier())}, {"matrix", to_json(s.matrix())},
          {"verified", is_symplectic_similitude(s.matrix(), Scalar(s.multiplier()))}};
}

json to_json(const IsotropicFrame& f) { return {{"Y", to_json(f.y())}, {"Z", to_json(f.z())}}; }

json to_json(const RadiusReport& r) {
  return {{"place", to_json(r.place)}, {"lower_bound", real(r.lower_bound)}, {"certified", r.certified}};
}

json to_json(const GloballyBoundedReport& r) {
  json first = json::array();
  for (const auto& a : r.first_appearance) first.push_back({{"n", a.n}, {"p", a.p}});
  json out = {{"positive_radius_everywhere", r.positive_radius_everywhere},
              {"bad_primes", r.bad_primes},
              {"first_appearance", std::move(first)},
              {"verdict", bound_name(r.verdict)}};
  out["witness"] = r.witness ? json{{"n", r.witness->n}, {"p", r.witness->p}} : json(nullptr);
  if (r.unresolved_cofactor) out["unresolved_cofactor"] = *r.unresolved_cofactor;
  return out;
}

json to_json(const SeriesEvaluation& e) {
  json out = {{"partial_sum", to_json(e.partial_sum)},
              {"tail_bound", real(e.tail_bound)},
              {"heuristic", e.heuristic}};
  if (e.float_value) out["float_value"] = {real(e.float_value->real()), real(e.float_value->imag())};
  return out;
}

json to_json(const Witness& w) {
  return {{"label", w.label}, {"Y", to_json(w.y)}, {"Z", to_json(w.z)}, {"value", to_json(w.value)}};
}

json to_json(const MembershipVerdict& v) {
  json out = {{"status", to_string(v.status)},
              {"method", v.method},
              {"points_evaluated", v.points_evaluated},
              {"monomial_order", v.monomial_order}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.remainder) out["remainder"] = to_json(*v.remainder);
  if (v.permutation) out["permutation"] = *v.permutation;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json to_json(const RadicalityReport& r) {
  return {{"g", r.g},
          {"generator_count", r.generator_count},
          {"witness", {{"Y", to_json(r.witness_y)}, {"Z", to_json(r.witness_z)}}},
          {"witness_on_V", r.witness_on_V},
          {"rank", r.rank},
          {"random_points_tried", r.random_points_tried},
          {"verdict", r.verdict},
          {"primality", r.primality}};
}

json to_json(const NontrivialEntry& e) {
  return {{"entry", {e.row, e.col}}, {"case", e.case_number}, {"Y", to_json(e.y)},
          {"Z", to_json(e.z)}, {"value", to_json(e.value)}, {"expected_matrix", to_json(e.expected)}};
}

json to_json(const RelationCertificate& c) {
  json evidence = json::array();
  for (const auto& r : c.vanishing_evidence) evidence.push_back({{"data", r.data_id}, {"exact_zero", r.exact_zero}});
  json factors = json::array();
  for (const auto& f : c.factors) factors.push_back(to_json(f));
  return {{"kind", to_string(c.kind)},
          {"degree", c.degree},
          {"homogeneous", c.polynomial.is_homogeneous()},
          {"polynomial", to_json(c.polynomial)},
          {"vanishing_evidence", std::move(evidence)},
          {"nontriviality", to_json(c.nontriviality)},
          {"monomial_order", c.monomial_order},
          {"justification", c.justification},
          {"factors", std::move(factors)}};
}

json to_json(const Case3Result& r) {
  return {{"M_prime", to_json(r.m_prime)},
          {"lambda", to_json(r.lambda)},
          {"mu", to_json(r.mu)},
          {"R", to_json(r.R)},
          {"S", to_json(r.S)},
          {"Q", to_json(r.Q)},
          {"Q_at_H", to_json(r.q_at_h)},
          {"P_hat", to_json(r.p_hat)},
          {"permutation", r.permutation},
          {"P_hat_changed_by_swap", r.p_hat_changed},
          {"P_v_changed_by_swap", r.p_v_changed},
          {"phi_scale", to_json(r.phi_scale)},
          {"phi_identity", r.phi_identity},
          {"vanishes_on_periods", r.vanishes_on_data},
          {"certificate", to_json(r.certificate)}};
}

json to_json(const PlaceRadius& r) {
  return {{"place", to_json(r.place)}, {"r", real(r.r)}, {"certified", r.certified}};
}

json to_json(const PeriodCheckReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"matrix", std::string(1, e.matrix)},
                       {"entry", {e.row, e.col}},
                       {"discrepancy", real(e.discrepancy)},
                       {"tail_bound", real(e.tail_bound)},
                       {"flagged", e.flagged}});
  return {{"place", to_json(r.place)}, {"consistent", r.consistent}, {"entries", std::move(entries)}};
}

}  // namespace periodrel::json_io
