#pragma once

// crank-parity command line: coeffs, verify, asymptotic, distinct, ladder,
// dump-series. Output goes to the given streams so the commands can be
// driven from tests.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crankparity.hpp"

namespace crankparity::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "crank-parity/1";

enum class Output { json, csv, text };

struct RunConfig {
  int terms = 2000;
  int precision_bits = 128;
  int oracle_max = 60;
  Output output = Output::text;
  bool parallel = false;
};

inline std::string str(const BigInt& x) { return to_decimal(x); }

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

/// Decimal digits carried by a binary precision.
inline int digits_for(int bits) { return static_cast<int>(std::floor(bits * std::log10(2.0))); }

// g(q) to at least `trunc`, optionally persisted under CRANK_PARITY_CACHE_DIR.
inline Series load_g(int trunc) {
  const char* dir = std::getenv("CRANK_PARITY_CACHE_DIR");
  if (!dir || !*dir) return g_series(trunc);
  const std::filesystem::path path = std::filesystem::path(dir) / "g.dump";
  if (std::ifstream in{path}) {
    try {
      Series cached = read_dump(in);
      if (cached.trunc() >= trunc && cached.offset() == 0) return cached.truncated(trunc);
    } catch (const Error&) {
    }
  }
  Series g = g_series(trunc);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out{tmp};
    if (out) write_dump(out, g);
  }
  std::filesystem::rename(tmp, path, ec);
  return g;
}

inline json check_json(const IdentityCheck& c) {
  return json{{"name", c.name}, {"order", c.order}, {"pass", c.holds()}, {"first_mismatch", opt(c.first_mismatch)}};
}

inline json congruence_json(const CongruenceReport& r) {
  return json{{"alpha", r.alpha}, {"modulus", str(r.modulus)}, {"count", r.tested_n.size()}, {"failures", r.failures}};
}

inline json gpoly_json(const GLaurentPoly& p) {
  json o = json::object();
  for (const auto& [j, c] : p.terms()) o[std::to_string(j)] = str(c);
  return o;
}

inline json violations_json(const std::vector<ValuationViolation>& v) {
  json a = json::array();
  for (const auto& x : v)
    a.push_back({{"matrix", std::string(1, x.matrix)}, {"i", x.i}, {"j", x.j}, {"valuation", x.valuation}, {"bound", x.bound}});
  return a;
}

struct VerifyOptions {
  std::string check;
  std::vector<int> alphas;  // family, ladder (max), claimL
  int n_max = -1;           // family: 10000, weighted: 40, adh: oracle_max
  int ladder_terms = 21;
};

/// Runs one named check. Returns a JSON report with at least "check" and "pass".
inline json run_check(const VerifyOptions& o, const RunConfig& cfg) {
  json r{{"check", o.check}};
  const std::string& c = o.check;
  if (c == "family") {
    const int n_max = o.n_max < 0 ? 10000 : o.n_max;
    const std::vector<int> alphas = o.alphas.empty() ? std::vector<int>{0, 1, 2} : o.alphas;
    const Series g = load_g(n_max + 1);
    bool pass = true;
    json reports = json::array();
    for (int a : alphas) {
      const CongruenceReport rep = verify_family_congruence(a, n_max, g);
      pass = pass && rep.passed();
      reports.push_back(congruence_json(rep));
    }
    r["n_max"] = n_max;
    r["reports"] = reports;
    r["pass"] = pass;
  } else if (c == "ramatype") {
    const IdentityCheck k = ramatype_check(cfg.terms, load_g(5 * cfg.terms));
    r.update(check_json(k));
    r["check"] = c;
  } else if (c == "chan") {
    r.update(check_json(chan_expansion_check(cfg.terms, load_g(cfg.terms))));
    r["check"] = c;
  } else if (c == "combproof") {
    r.update(check_json(combproof_check(cfg.terms, load_g(cfg.terms))));
    r["check"] = c;
  } else if (c == "ladder") {
    const int alpha = o.alphas.empty() ? 2 : o.alphas.front();
    const auto states = ladder(alpha, o.ladder_terms);
    const auto bad = check_ladder_valuations(states);
    json st = json::array();
    for (const auto& s : states)
      st.push_back({{"nu", s.nu}, {"known_below", s.known_below}, {"degree_bound", s.degree_bound}, {"complete", s.complete}});
    r["alpha_max"] = alpha;
    r["states"] = st;
    r["violations"] = violations_json(bad);
    r["pass"] = bad.empty();
  } else if (c == "claimL") {
    const std::vector<int> alphas = o.alphas.empty() ? std::vector<int>{0, 1} : o.alphas;
    bool pass = true;
    json reports = json::array();
    for (int a : alphas) {
      // coefficients up to 5^(2a+1) (T-1) - shift of g are needed
      const int T = a == 0 ? 200 : std::max(8, 1000 / static_cast<int>(ipow(5, 2 * a)) + 1);
      const IdentityCheck k = claimL_check(a, T);
      pass = pass && k.holds();
      json kj = check_json(k);
      kj["alpha"] = a;
      reports.push_back(kj);
    }
    r["reports"] = reports;
    r["pass"] = pass;
  } else if (c == "informative") {
    const InformativeReport k = informative_series_check(cfg.terms);
    r["order"] = cfg.terms;
    r["two_sum"] = check_json(k.two_sum);
    r["part1"] = check_json(k.part1);
    r["part2"] = check_json(k.part2);
    r["formula_mismatch"] = opt(k.formula_mismatch);
    r["pass"] = k.holds();
  } else if (c == "watson-whipple") {
    r.update(check_json(watson_whipple_specialization_check(cfg.terms)));
    r["check"] = c;
  } else if (c == "adh") {
    const int n_max = o.n_max < 0 ? cfg.oracle_max : o.n_max;
    if (n_max > 90) throw Error(ErrorKind::invalid_input, "adh uses the enumeration oracle; --n-max must be <= 90");
    const AdhReport k = adh_check(distinct_rank_oracle_values(n_max));
    json primes = json::object();
    for (const auto& [p, v] : k.bootstrap.values) primes[std::to_string(p)] = v;
    r["n_max"] = n_max;
    r["prime_values"] = primes;
    r["gauge_prime"] = opt(k.bootstrap.gauge_prime);
    r["first_mismatch"] = opt(k.first_mismatch);
    r["unresolved"] = k.unresolved;
    r["pass"] = k.passed();
  } else if (c == "weighted") {
    const int n_max = o.n_max < 0 ? 40 : o.n_max;
    const WeightedReport k = weighted_identity_check(n_max, load_g(n_max + 1));
    r["n_max"] = n_max;
    r["partitions_checked"] = k.partitions_checked;
    r["omega_mismatch"] = k.omega_mismatch ? json(k.omega_mismatch->parts) : json(nullptr);
    r["sum_mismatch"] = opt(k.sum_mismatch);
    r["pass"] = k.passed();
  } else {
    throw Error(ErrorKind::invalid_input, "unknown check " + c);
  }
  return r;
}

inline void print_report_text(std::ostream& out, const json& r) {
  out << r.at("check").get<std::string>() << ": " << (r.at("pass").get<bool>() ? "PASS" : "FAIL");
  for (const auto& [k, v] : r.items()) {
    if (k == "check" || k == "pass" || k == "name") continue;
    out << "  " << k << "=" << v.dump();
  }
  out << '\n';
}

/// Runs the CLI on `args` (without the program name). Exit code 0 iff every
/// requested check passed; 1 on a failed check; 2 on usage or computation errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crank-parity series, congruence and asymptotic checks", "crank-parity"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string output = "text";
  app.add_option("--terms", cfg.terms, "series truncation T")->check(CLI::Range(8, 1 << 24));
  app.add_option("--precision-bits", cfg.precision_bits, "MPFR precision")->check(CLI::Range(53, 1 << 16));
  app.add_option("--oracle-max", cfg.oracle_max, "largest n for partition enumeration")->check(CLI::Range(1, 90));
  app.add_option("--output", output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--parallel", cfg.parallel, "split sweeps across threads");

  int lo = 1, hi = 20;
  std::string source = "both";
  auto* coeffs = app.add_subcommand("coeffs", "g coefficients next to the crank-parity oracle");
  coeffs->add_option("--from", lo)->check(CLI::NonNegativeNumber);
  coeffs->add_option("--to", hi)->check(CLI::NonNegativeNumber);
  coeffs->add_option("--source", source)->check(CLI::IsMember({"series", "oracle", "both"}));

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run a named identity or congruence check");
  verify
      ->add_option("check", vo.check)
      ->required()
      ->check(CLI::IsMember({"family", "ramatype", "chan", "combproof", "ladder", "claimL", "informative",
                             "watson-whipple", "adh", "weighted"}));
  verify->add_option("--alpha", vo.alphas)->check(CLI::Range(0, 12));
  verify->add_option("--n-max", vo.n_max)->check(CLI::PositiveNumber);
  verify->add_option("--ladder-terms", vo.ladder_terms)->check(CLI::Range(2, 1000));

  int alo = 1, ahi = 200;
  auto* asym = app.add_subcommand("asymptotic", "main term and error bound per n");
  asym->add_option("--from", alo)->check(CLI::PositiveNumber);
  asym->add_option("--to", ahi)->check(CLI::PositiveNumber);

  int dlo = 1, dhi = 60;
  auto* dist = app.add_subcommand("distinct", "distinct-parts crank difference by cases");
  dist->add_option("--from", dlo)->check(CLI::PositiveNumber);
  dist->add_option("--to", dhi)->check(CLI::PositiveNumber);

  int imax = 6, lalpha = 2, lterms = 21;
  auto* lad = app.add_subcommand("ladder", "A/B matrices, ladder polynomials and valuation tables (JSON)");
  lad->add_option("--imax", imax)->check(CLI::Range(0, 40));
  lad->add_option("--alpha", lalpha)->check(CLI::Range(0, 4));
  lad->add_option("--ladder-terms", lterms)->check(CLI::Range(2, 1000));

  std::string series_name = "g";
  auto* dump = app.add_subcommand("dump-series", "write a series as exponent<TAB>coefficient lines");
  dump->add_option("name", series_name)
      ->check(CLI::IsMember({"g", "f", "distinct-crank", "distinct-rank", "F", "G", "phi"}));

  std::vector<std::string> argv_store{"crank-parity"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.output = output == "json" ? Output::json : output == "csv" ? Output::csv : Output::text;

  try {
    if (*coeffs) {
      if (hi < lo) throw Error(ErrorKind::invalid_input, "--to must be >= --from");
      const bool want_series = source != "oracle", want_oracle = source != "series";
      if (want_oracle && hi > cfg.oracle_max && source == "oracle")
        throw Error(ErrorKind::invalid_input, "oracle range exceeds --oracle-max " + std::to_string(cfg.oracle_max));
      if (want_series && hi >= cfg.terms) throw TruncationError(hi + 1, "coeffs up to n = " + std::to_string(hi));
      const Series g = want_series ? load_g(cfg.terms) : Series::zero(1);
      bool pass = true;
      json rows = json::array();
      if (cfg.output == Output::csv) out << "n,series,oracle,flag\n";
      for (int n = lo; n <= hi; ++n) {
        std::optional<BigInt> s, o;
        if (want_series) s = g.coeff(n);
        if (want_oracle && n >= 1 && n <= cfg.oracle_max) o = BigInt(crank_parity_oracle(n));
        std::string flag;
        if (s && o) {
          flag = *s == *o ? "match" : n == 1 ? "anomaly" : "mismatch";
          pass = pass && flag != "mismatch";
        }
        if (cfg.output == Output::json) {
          rows.push_back({{"n", n}, {"series", s ? json(str(*s)) : json(nullptr)},
                          {"oracle", o ? json(str(*o)) : json(nullptr)}, {"flag", flag}});
        } else {
          const char sep = cfg.output == Output::csv ? ',' : '\t';
          out << n << sep << (s ? str(*s) : "") << sep << (o ? str(*o) : "") << sep << flag << '\n';
        }
      }
      if (cfg.output == Output::json)
        out << json{{"schema", kSchema}, {"command", "coeffs"}, {"pass", pass}, {"rows", rows}}.dump(2) << '\n';
      return pass ? 0 : 1;
    }

    if (*verify) {
      json r = run_check(vo, cfg);
      const bool pass = r.at("pass").get<bool>();
      if (cfg.output == Output::text) {
        print_report_text(out, r);
      } else {
        json doc{{"schema", kSchema}, {"command", "verify"}};
        doc.update(r);
        out << doc.dump(2) << '\n';
      }
      return pass ? 0 : 1;
    }

    if (*asym) {
      if (ahi < alo) throw Error(ErrorKind::invalid_input, "--to must be >= --from");
      if (ahi >= cfg.terms) throw TruncationError(ahi + 1, "asymptotic sweep to n = " + std::to_string(ahi));
      const auto bits = static_cast<mpfr_prec_t>(cfg.precision_bits);
      const auto reports = verify_error_bound(alo, ahi, load_g(ahi + 1), bits, cfg.parallel);
      const int digits = digits_for(cfg.precision_bits);
      bool pass = true;
      json rows = json::array();
      if (cfg.output != Output::json) out << "n,exact,main,abs_error,bound,pass\n";
      for (const auto& r : reports) {
        pass = pass && r.pass;
        if (cfg.output == Output::json) {
          rows.push_back({{"n", r.n}, {"exact", str(r.exact)}, {"main", r.main.to_string(digits)},
                          {"abs_error", r.abs_error.to_string(12)}, {"bound", r.bound.to_string(12)}, {"pass", r.pass}});
        } else {
          out << r.n << ',' << str(r.exact) << ',' << r.main.to_string(digits) << ',' << r.abs_error.to_string(12)
              << ',' << r.bound.to_string(12) << ',' << (r.pass ? "true" : "false") << '\n';
        }
      }
      if (cfg.output == Output::json)
        out << json{{"schema", kSchema}, {"command", "asymptotic"}, {"precision_bits", cfg.precision_bits},
                    {"pass", pass}, {"rows", rows}}
                   .dump(2)
            << '\n';
      return pass ? 0 : 1;
    }

    if (*dist) {
      if (dhi < dlo) throw Error(ErrorKind::invalid_input, "--to must be >= --from");
      bool pass = true;
      json rows = json::array();
      if (cfg.output == Output::csv) out << "n,case,formula,oracle,a,b\n";
      for (int n = dlo; n <= dhi; ++n) {
        const int f = exact_formula(n);
        std::optional<std::int64_t> o;
        if (n <= cfg.oracle_max) o = distinct_crank_parity_oracle(n);
        const int a = a_of_n(n), b = b_of_n(n);
        pass = pass && (!o || *o == f) && a + b == f;
        const std::string label = to_string(formula_case(n));
        if (cfg.output == Output::json) {
          rows.push_back({{"n", n}, {"case", label}, {"formula", f}, {"oracle", opt(o)}, {"a", a}, {"b", b}});
        } else if (cfg.output == Output::csv) {
          out << n << ",\"" << label << "\"," << f << ',' << (o ? std::to_string(*o) : "") << ',' << a << ',' << b
              << '\n';
        } else {
          out << n << '\t' << label << '\t' << f << '\t' << (o ? std::to_string(*o) : "-") << '\t' << a << '\t' << b
              << '\n';
        }
      }
      if (cfg.output == Output::json)
        out << json{{"schema", kSchema}, {"command", "distinct"}, {"pass", pass}, {"rows", rows}}.dump(2) << '\n';
      return pass ? 0 : 1;
    }

    if (*lad) {
      const ABMatrices m = compute_AB(imax, 25 * imax + 60);
      const auto ab_bad = check_AB_valuations(m);
      const auto states = ladder(lalpha, lterms);
      const auto l_bad = check_ladder_valuations(states);
      auto matrix = [](const std::vector<std::vector<BigInt>>& rows) {
        json a = json::array();
        for (const auto& row : rows) {
          json r = json::array();
          for (const auto& x : row) r.push_back(str(x));
          a.push_back(r);
        }
        return a;
      };
      auto valuations = [](const std::vector<std::vector<BigInt>>& rows) {
        json a = json::array();
        for (const auto& row : rows) {
          json r = json::array();
          for (const auto& x : row) r.push_back(sgn(x) == 0 ? json(nullptr) : json(valuation5(x)));
          a.push_back(r);
        }
        return a;
      };
      json st = json::array();
      for (const auto& s : states) {
        json vals = json::object();
        for (const auto& [j, c] : s.gpoly.terms()) vals[std::to_string(j)] = valuation5(c);
        st.push_back({{"nu", s.nu}, {"known_below", s.known_below}, {"degree_bound", s.degree_bound},
                      {"complete", s.complete}, {"coefficients", gpoly_json(s.gpoly)}, {"valuations", vals}});
      }
      const bool pass = ab_bad.empty() && l_bad.empty();
      out << json{{"schema", kSchema},
                  {"command", "ladder"},
                  {"pass", pass},
                  {"imax", imax},
                  {"A", matrix(m.A)},
                  {"B", matrix(m.B)},
                  {"A_valuations", valuations(m.A)},
                  {"B_valuations", valuations(m.B)},
                  {"ab_violations", violations_json(ab_bad)},
                  {"ladder", st},
                  {"ladder_violations", violations_json(l_bad)}}
                 .dump(2)
          << '\n';
      return pass ? 0 : 1;
    }

    if (*dump) {
      const int T = cfg.terms;
      Series s = Series::one(1);
      if (series_name == "g") s = load_g(T);
      else if (series_name == "f") s = f_series(T);
      else if (series_name == "distinct-crank") s = distinct_crank_series(T);
      else if (series_name == "distinct-rank") s = distinct_rank_series(T);
      else if (series_name == "F") s = eta_quotient(kFSpec, T);
      else if (series_name == "G") s = eta_quotient(kGSpec, T);
      else s = eta_quotient(kPhiSpec, T);
      write_dump(out, s);
      return 0;
    }
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << "; rerun with --terms " << e.required() << " or more\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace crankparity::cli
