#include "periodrel/cli.hpp"

#include <gmp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "periodrel/errors.hpp"
#include "periodrel/json_io.hpp"

#ifndef PERIODREL_VERSION
#define PERIODREL_VERSION "unknown"
#endif

namespace periodrel::cli {

using json = nlohmann::json;
namespace jio = periodrel::json_io;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Common {
  std::size_t g = 2;
  std::uint64_t seed = 0;
  int order = 20;
  std::size_t budget = 20;
  std::string out_path;
  bool pretty = false;
};

// Shared state of one invocation: inputs read, seed used, outcome.
struct Run {
  std::string command;
  std::map<std::string, std::string> digests;
  bool seeded = false;
  std::string outcome;

  json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    digests[path] = fnv1a_hex(bytes);
    return json::parse(bytes);
  }
};

// Accepts a bare value, an object holding it under key, or a full report.
json unwrap(const json& j, const char* key) {
  const json& body = j.is_object() && j.contains("manifest") && j.contains("result") ? j.at("result") : j;
  return body.is_object() && body.contains(key) ? body.at(key) : body;
}

TruncatedSeries builtin_series(const std::string& name, int order) {
  if (name == "geometric") return TruncatedSeries::generate(order, [](int) { return Scalar(1); });
  if (name == "exp") {
    Rational c = 1;
    std::vector<Scalar> coeffs;
    for (int n = 0; n <= order; ++n) {
      if (n > 0) c /= Rational(n);
      coeffs.emplace_back(c);
    }
    return TruncatedSeries(std::move(coeffs));
  }
  if (name == "central-binomial-squared") {
    mpz_class c = 1;
    std::vector<Scalar> coeffs;
    for (int n = 0; n <= order; ++n) {
      if (n > 0) c = c * (2 * n) * (2 * n - 1) / (n * n);  // C(2n, n) from C(2n-2, n-1)
      coeffs.emplace_back(Rational(mpz_class(c * c)));
    }
    return TruncatedSeries(std::move(coeffs));
  }
  if (name == "x-plus-x2") {
    return TruncatedSeries::generate(order, [](int n) { return Scalar(n == 1 || n == 2 ? 1 : 0); });
  }
  throw PreconditionError("unknown builtin series '" + name +
                          "' (geometric, exp, central-binomial-squared, x-plus-x2)");
}

Place place_from_flags(long prime, bool tau) {
  if (prime > 0) return Place::finite(prime);
  return Place::archimedean(tau ? Embedding::tau : Embedding::sigma);
}

// Renders JSON as indented "key: value" text.
void render_text(const json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar_like = [](const json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const json& e) {
      return !e.is_object() && (!e.is_array() || std::all_of(e.begin(), e.end(), [](const json& x) {
        return x.is_primitive();
      }));
    });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalar_like(v)) {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (scalar_like(v)) {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact period-relation toolkit", "periodrel"};
  app.require_subcommand(1);
  Common opt;
  Run state;
  std::function<json()> action;

  auto common = [&](CLI::App* sub, bool with_g, bool with_seed) {
    if (with_g) sub->add_option("--g", opt.g, "dimension g")->check(CLI::Range(1, 64));
    if (with_seed)
      sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--out", opt.out_path, "write the report to this file");
    sub->add_flag("--pretty", opt.pretty, "human-readable text instead of JSON");
  };
  auto leaf = [](CLI::App* parent, const std::string& name, const std::string& help) {
    return parent->add_subcommand(name, help);
  };
  auto bind = [&](CLI::App* sub, std::string command, std::function<json()> fn) {
    const bool seeded = sub->get_option_no_throw("--seed") != nullptr;
    sub->callback([&state, &action, seeded, command = std::move(command), fn = std::move(fn)] {
      state.command = command;
      state.seeded = seeded;
      action = fn;
    });
  };

  // ---- series ----------------------------------------------------------
  CLI::App* series = app.add_subcommand("series", "truncated power series");
  series->require_subcommand(1);
  std::string series_path, builtin, x_text = "0";
  long prime = 0, prime_bound = 50;
  bool tau = false, integral = false;
  auto series_input = [&](CLI::App* sub) {
    auto* f = sub->add_option("--series", series_path, "series JSON file");
    auto* b = sub->add_option("--builtin", builtin,
                              "geometric | exp | central-binomial-squared | x-plus-x2");
    f->excludes(b);
    sub->add_option("--order", opt.order, "truncation order for builtin series")->check(CLI::Range(0, 2000));
  };
  auto load_series = [&]() {
    if (!series_path.empty()) return jio::series_from_json(state.read_json(series_path));
    if (!builtin.empty()) return builtin_series(builtin, opt.order);
    throw PreconditionError("supply --series FILE or --builtin NAME");
  };
  auto place_flags = [&](CLI::App* sub) {
    sub->add_option("--prime", prime, "finite place p (default: archimedean)");
    sub->add_flag("--tau", tau, "use the conjugate embedding at the archimedean place");
  };

  CLI::App* s_inv = leaf(series, "invert", "compositional inverse");
  series_input(s_inv);
  common(s_inv, false, false);
  bind(s_inv, "series invert", [&] {
    const TruncatedSeries f = load_series();
    const TruncatedSeries g = compositional_inverse(f);
    const bool ok = compose(f, g) == TruncatedSeries::variable(f.order()) &&
                    compose(g, f) == TruncatedSeries::variable(f.order());
    state.outcome = ok ? "inverse verified" : "inverse failed verification";
    return json{{"input", jio::to_json(f)},
                {"inverse", jio::to_json(g)},
                {"verified_both_compositions", ok},
                {"inverse_integral", g.has_integer_coefficients()}};
  });

  CLI::App* s_rad = leaf(series, "radius", "radius of convergence lower bound");
  series_input(s_rad);
  place_flags(s_rad);
  s_rad->add_flag("--integral", integral, "assert integer coefficients structurally");
  common(s_rad, false, false);
  bind(s_rad, "series radius", [&] {
    const RadiusReport r = radius_lower_bound(load_series(), place_from_flags(prime, tau), integral);
    state.outcome = r.certified ? "certified bound" : "heuristic bound";
    return jio::to_json(r);
  });

  CLI::App* s_gb = leaf(series, "gb-scan", "scan for global boundedness");
  series_input(s_gb);
  s_gb->add_option("--prime-bound", prime_bound, "primes above this count as unbounded evidence");
  common(s_gb, false, false);
  bind(s_gb, "series gb-scan", [&] {
    const GloballyBoundedReport r = globally_bounded_scan(load_series(), prime_bound);
    json j = jio::to_json(r);
    state.outcome = j["verdict"].get<std::string>();
    return j;
  });

  CLI::App* s_eval = leaf(series, "eval", "evaluate with a tail bound");
  series_input(s_eval);
  place_flags(s_eval);
  s_eval->add_option("--x", x_text, "evaluation point (rational)");
  s_eval->add_flag("--integral", integral, "assert integer coefficients structurally");
  common(s_eval, false, false);
  bind(s_eval, "series eval", [&] {
    const SeriesEvaluation e =
        eval_with_tail_bound(load_series(), Scalar(Rational::parse(x_text)), place_from_flags(prime, tau), integral);
    state.outcome = e.heuristic ? "heuristic tail" : "certified tail";
    return jio::to_json(e);
  });

  // ---- symplectic ------------------------------------------------------
  CLI::App* symp = app.add_subcommand("symplectic", "symplectic similitude samples");
  symp->require_subcommand(1);
  std::string mu_text = "1";
  int word_length = 8;
  CLI::App* sy_s = leaf(symp, "sample", "random symplectic similitude");
  sy_s->add_option("--mu", mu_text, "multiplier (rational)");
  sy_s->add_option("--word-length", word_length, "number of generators")->check(CLI::Range(0, 200));
  common(sy_s, true, true);
  bind(sy_s, "symplectic sample", [&] {
    const SymplecticSample s = with_multiplier(sample_symplectic(opt.g, opt.seed, word_length),
                                               Rational::parse(mu_text));
    state.outcome = "sample verified";
    return json{{"sample", jio::to_json(s)}, {"projection", jio::to_json(project_to_V(s))}};
  });

  // ---- ideal -----------------------------------------------------------
  CLI::App* ideal = app.add_subcommand("ideal", "ideal of trivial relations");
  ideal->require_subcommand(1);
  std::string poly_path;
  CLI::App* i_gens = leaf(ideal, "gens", "generators f_ij, i < j");
  common(i_gens, true, false);
  bind(i_gens, "ideal gens", [&] {
    const TrivialIdeal I(opt.g);
    json gens = json::array();
    std::size_t idx = 0;
    for (std::size_t i = 1; i <= opt.g; ++i)
      for (std::size_t j = i + 1; j <= opt.g; ++j)
        gens.push_back({{"i", i}, {"j", j}, {"poly", jio::to_json(I.generators()[idx++])}});
    state.outcome = std::to_string(I.generators().size()) + " generators";
    return json{{"g", opt.g}, {"count", I.generators().size()}, {"generators", std::move(gens)},
                {"monomial_order", kMonomialOrderName}};
  });

  CLI::App* i_rad = leaf(ideal, "radical", "Jacobian radicality certificate");
  common(i_rad, true, false);
  bind(i_rad, "ideal radical", [&] {
    const RadicalityReport r = radicality_certificate(TrivialIdeal(opt.g));
    state.outcome = r.verdict;
    return jio::to_json(r);
  });

  CLI::App* i_mem = leaf(ideal, "member", "ideal membership");
  i_mem->add_option("--poly", poly_path, "polynomial JSON file")->required();
  i_mem->add_option("--budget", opt.budget, "random points of V to evaluate");
  common(i_mem, true, true);
  bind(i_mem, "ideal member", [&] {
    const MultiPoly p = jio::poly_from_json(unwrap(state.read_json(poly_path), "poly"));
    const MembershipVerdict v = membership(p, TrivialIdeal(opt.g), opt.budget, opt.seed);
    state.outcome = to_string(v.status);
    json j = jio::to_json(v);
    if (v.witness) j["re_evaluation"] = jio::to_json(evaluate_at(p, v.witness->y, v.witness->z));
    return j;
  });

  // ---- relation --------------------------------------------------------
  CLI::App* rel = app.add_subcommand("relation", "period relation constructions");
  rel->require_subcommand(1);
  std::string act_path, rel_path, data_path;
  long d_field = 2;

  CLI::App* r_build = leaf(rel, "build-nonarch", "nonarchimedean relation from an action");
  r_build->add_option("--act", act_path, "action JSON file")->required();
  common(r_build, false, true);
  bind(r_build, "relation build-nonarch", [&] {
    const EndomorphismAction act = jio::action_from_json(state.read_json(act_path));
    const PolyMatrix p = build_nonarch_relation(act);
    const NontrivialEntry e = select_nontrivial_entry(p, act);
    const RelationCertificate cert = nonarch_certificate(act, opt.seed);
    state.outcome = "relation of degree " + std::to_string(cert.degree);
    return json{{"relation", jio::to_json(p)}, {"selected", jio::to_json(e)}, {"certificate", jio::to_json(cert)}};
  });

  CLI::App* r_syn = leaf(rel, "synthesize", "synthetic period data for an action");
  r_syn->add_option("--act", act_path, "action JSON file")->required();
  common(r_syn, false, true);
  bind(r_syn, "relation synthesize", [&] {
    const EndomorphismAction act = jio::action_from_json(state.read_json(act_path));
    const SyntheticPeriodData data = synthesize_period_data(act, opt.seed);
    state.outcome = "period data verified";
    return json{{"data", jio::to_json(data)}, {"verified", data.satisfies(act)}};
  });

  CLI::App* r_ver = leaf(rel, "verify", "evaluate a relation on period data");
  r_ver->add_option("--rel", rel_path, "relation JSON file")->required();
  r_ver->add_option("--data", data_path, "period data JSON file")->required();
  common(r_ver, false, false);
  bind(r_ver, "relation verify", [&] {
    const PolyMatrix p = jio::poly_matrix_from_json(unwrap(state.read_json(rel_path), "relation"));
    const SyntheticPeriodData data = jio::period_data_from_json(unwrap(state.read_json(data_path), "data"));
    const Matrix values = p.evaluate_at(data.F, data.G);
    const bool ok = values.is_zero();
    state.outcome = ok ? "relation vanishes" : "relation does not vanish";
    return json{{"vanishes", ok}, {"values", jio::to_json(values)}};
  });

  CLI::App* r_c3 = leaf(rel, "case3", "real-quadratic Case 3 relation");
  r_c3->add_option("--d", d_field, "squarefree d > 1 of the real quadratic field");
  common(r_c3, true, true);
  bind(r_c3, "relation case3", [&] {
    const Case3Input in = random_case3_input(opt.g, opt.seed, d_field);
    const Case3Result r = build_case3_relation(in);
    state.outcome = to_string(r.certificate.nontriviality.status);
    json j = jio::to_json(r);
    j["input"] = {{"g", in.g}, {"H", jio::to_json(in.H)}, {"N", jio::to_json(in.N)}, {"e", jio::to_json(in.e)}};
    return j;
  });

  // ---- gfun ------------------------------------------------------------
  CLI::App* gf = app.add_subcommand("gfun", "period G-function series");
  gf->require_subcommand(1);
  std::string f_path, g_path, a_path;
  std::vector<std::string> excluded;
  std::vector<long> primes;
  bool arch = false;
  double tolerance = 0.0;

  CLI::App* g_der = leaf(gf, "derive", "G from F and the coefficient family");
  g_der->add_option("--F", f_path, "F series matrix JSON")->required();
  g_der->add_option("--a", a_path, "coefficient family JSON")->required();
  common(g_der, false, false);
  bind(g_der, "gfun derive", [&] {
    const GFunMatrix F = jio::gfun_matrix_from_json(state.read_json(f_path));
    const GaussManinCoefficients a = jio::coefficients_from_json(state.read_json(a_path));
    const GFunMatrix G = derive_G(F, a);
    state.outcome = "G of order " + std::to_string(G.order());
    return json{{"G", jio::to_json(G)}};
  });

  CLI::App* g_rad = leaf(gf, "radii", "per-place radii r_v");
  g_rad->add_option("--a", a_path, "coefficient family JSON")->required();
  g_rad->add_option("--exclude", excluded, "excluded value |x(s)| data (rational), repeatable");
  g_rad->add_option("--prime", primes, "finite place, repeatable");
  g_rad->add_flag("--arch", arch, "include the archimedean place");
  common(g_rad, false, false);
  bind(g_rad, "gfun radii", [&] {
    const GaussManinCoefficients a = jio::coefficients_from_json(state.read_json(a_path));
    std::vector<Scalar> xs;
    for (const auto& t : excluded) xs.emplace_back(Rational::parse(t));
    std::vector<Place> places;
    if (arch) places.push_back(Place::archimedean());
    for (long p : primes) places.push_back(Place::finite(p));
    if (places.empty()) throw PreconditionError("request at least one place (--arch or --prime)");
    json radii = json::array();
    for (const auto& r : compute_radii(a, xs, places)) radii.push_back(jio::to_json(r));
    state.outcome = std::to_string(places.size()) + " places";
    return json{{"radii", std::move(radii)}};
  });

  CLI::App* g_chk = leaf(gf, "check", "compare series values with period matrices");
  g_chk->add_option("--F", f_path, "F series matrix JSON")->required();
  g_chk->add_option("--G", g_path, "G series matrix JSON")->required();
  g_chk->add_option("--data", data_path, "period data JSON")->required();
  g_chk->add_option("--x", x_text, "evaluation point (rational)");
  place_flags(g_chk);
  g_chk->add_option("--tolerance", tolerance, "extra slack added to each tail bound");
  common(g_chk, false, false);
  bind(g_chk, "gfun check", [&] {
    const GFunMatrix F = jio::gfun_matrix_from_json(unwrap(state.read_json(f_path), "F"));
    const GFunMatrix G = jio::gfun_matrix_from_json(unwrap(state.read_json(g_path), "G"));
    const SyntheticPeriodData data = jio::period_data_from_json(unwrap(state.read_json(data_path), "data"));
    const PeriodCheckReport r = check_period_equation(F, G, data, Scalar(Rational::parse(x_text)),
                                                      place_from_flags(prime, tau), tolerance);
    state.outcome = r.consistent ? "consistent" : "discrepancy flagged";
    return jio::to_json(r);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (!action) {
    err << "usage error: no command given\n";
    return 2;
  }

  auto emit = [&](const json& report) -> int {
    std::ostringstream buf;
    if (opt.pretty) {
      render_text(report, buf, 0);
    } else {
      buf << report.dump(2) << "\n";
    }
    if (opt.out_path.empty()) {
      out << buf.str();
      return 0;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
      out << json{{"error", "cannot write output file '" + opt.out_path + "'"}}.dump() << "\n";
      return 1;
    }
    f << buf.str();
    return 0;
  };

  try {
    json result = action();
    json manifest = {{"command", state.command},
                     {"arguments", args},
                     {"seed", state.seeded ? json(opt.seed) : json(nullptr)},
                     {"versions", {{"periodrel", PERIODREL_VERSION}, {"gmp", gmp_version}}},
                     {"input_digests", state.digests},
                     {"outcome", state.outcome}};
    return emit(json{{"manifest", std::move(manifest)}, {"result", std::move(result)}});
  } catch (const std::exception& e) {
    out << json{{"error", e.what()}, {"command", state.command}}.dump() << "\n";
    return 1;
  }
}

}  // namespace periodrel::cli
