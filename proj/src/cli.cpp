#include "quon/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quon/energy.hpp"
#include "quon/fock.hpp"
#include "quon/group_algebra.hpp"
#include "quon/rng.hpp"
#include "quon/scalar.hpp"
#include "quon/zagier.hpp"

namespace quon::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kReportVersion = "1.0";
constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kSingular = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;
  std::string method = "product";
  int n = 2;
  bool symbolic = true;
  Rat q0 = 0;
  std::string q_text = "symbolic";
  std::uint64_t seed = 2026;
  std::string format = "text";
  std::string out_path;
  bool with_inverse = false;
};

Rat rat_pow(const Rat& base, int e) {
  Rat out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

std::string rat_str(const Rat& r) { return r.str(); }

/// Accepts "symbolic" or an exact integer / a/b literal; anything else,
/// including the excluded points q = +-1, is a usage error.
void parse_q(const std::string& text, RunConfig& cfg) {
  if (text == "symbolic") {
    cfg.symbolic = true;
    cfg.q_text = "symbolic";
    return;
  }
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string num, den;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') num += text[i++];
  if (i < text.size() && text[i] == '/') {
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') den += text[i++];
    if (den.empty()) throw UsageError("malformed q literal: " + text);
  }
  if (num.empty() || i != text.size())
    throw UsageError("q must be \"symbolic\" or an exact a/b literal, got: " +
                     text);
  Rat value{Int(num)};
  if (!den.empty()) {
    const Int d(den);
    if (d == 0) throw UsageError("q literal has zero denominator: " + text);
    value /= Rat(d);
  }
  if (negative) value = -value;
  if (value == 1 || value == -1)
    throw UsageError("q = 1 and q = -1 are excluded (singular points)");
  cfg.symbolic = false;
  cfg.q0 = value;
  cfg.q_text = rat_str(value);
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move report into place: " + path);
}

json envelope(const RunConfig& cfg) {
  json j;
  j["version"] = kReportVersion;
  j["command"] = cfg.command;
  if (!cfg.target.empty()) j["target"] = cfg.target;
  if (cfg.command == "coeffs") j["method"] = cfg.method;
  j["n"] = cfg.n;
  j["mode"] = cfg.symbolic ? "symbolic" : "specialized";
  j["q"] = cfg.q_text;
  j["seed"] = cfg.seed;
  return j;
}

std::vector<int> draw_distinct_modes(Rng& rng, int count) {
  std::vector<int> modes;
  while (static_cast<int>(modes.size()) < count) {
    const int c = static_cast<int>(rng.int_in(1, 12));
    bool seen = false;
    for (int m : modes) seen = seen || m == c;
    if (!seen) modes.push_back(c);
  }
  return modes;
}

Rat draw_energy(Rng& rng) {
  return Rat(rng.int_in(-6, 6)) / Rat(rng.int_in(1, 5));
}

std::size_t nonzero_terms(const QPolynomial& p) {
  std::size_t count = 0;
  for (int d = 0; d <= p.degree(); ++d)
    if (p.coeff(d) != 0) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// matrix

int cmd_matrix(const RunConfig& cfg, json& report, std::string& text) {
  if (cfg.n < 1 || cfg.n > 6) throw UsageError("matrix supports 1 <= n <= 6");
  if (cfg.with_inverse) {
    if (cfg.symbolic && cfg.n > 4)
      throw UsageError("the symbolic inverse supports n <= 4");
    if (!cfg.symbolic && cfg.n > 5)
      throw UsageError("the specialized inverse supports n <= 5");
  }
  const ZagierMatrix m = ZagierMatrix::build(cfg.n);
  std::ostringstream t;
  t << "A_" << cfg.n << " (" << m.order() << " x " << m.order() << ")\n";
  json labels = json::array();
  for (const Permutation& p : m.permutations()) labels.push_back(p.images());
  json entries = json::array();
  for (std::size_t r = 0; r < m.order(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.order(); ++c) {
      const std::string value = cfg.symbolic
                                    ? m.entry(r, c).str()
                                    : rat_str(rat_pow(cfg.q0, m.exponent(r, c)));
      row.push_back(value);
      t << value << (c + 1 < m.order() ? ", " : "\n");
    }
    entries.push_back(std::move(row));
  }
  report["permutations"] = std::move(labels);
  report["entries"] = std::move(entries);
  if (cfg.with_inverse) {
    json inv = json::array();
    t << "inverse of A_" << cfg.n << "\n";
    if (cfg.symbolic) {
      const Matrix<QRational> im = invert(m);
      for (std::size_t r = 0; r < m.order(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.order(); ++c) {
          row.push_back(im(r, c).str());
          t << im(r, c).str() << (c + 1 < m.order() ? ", " : "\n");
        }
        inv.push_back(std::move(row));
      }
    } else {
      const Matrix<Rat> im = invert_at(m, cfg.q0);
      for (std::size_t r = 0; r < m.order(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.order(); ++c) {
          row.push_back(rat_str(im(r, c)));
          t << rat_str(im(r, c)) << (c + 1 < m.order() ? ", " : "\n");
        }
        inv.push_back(std::move(row));
      }
    }
    report["inverse"] = std::move(inv);
  }
  text = t.str();
  return kPass;
}

// ---------------------------------------------------------------------------
// coeffs

json coeff_table_json(int n, const XGroupPolynomial& coeffs) {
  json rows = json::array();
  for (const Permutation& p : all_permutations(n)) {
    for (int i = 1; i <= n; ++i) {
      json row;
      row["perm"] = p.images();
      row["i"] = i;
      row["value"] = coeffs.coefficient(p, i - 1).str();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void coeff_table_text(int n, const XGroupPolynomial& coeffs,
                      std::ostringstream& t) {
  for (const Permutation& p : all_permutations(n))
    for (int i = 1; i <= n; ++i)
      t << "c_" << i << p.str() << " = " << coeffs.coefficient(p, i - 1).str()
        << "\n";
}

int cmd_coeffs(const RunConfig& cfg, json& report, std::string& text) {
  const int bound = cfg.symbolic ? 4 : 5;
  if (cfg.n < 1 || cfg.n > bound)
    throw UsageError(std::string("coeffs supports 1 <= n <= 4 symbolically "
                                 "and n <= 5 at rational q"));
  const bool want_product = cfg.method == "product" || cfg.method == "both";
  const bool want_explicit = cfg.method == "explicit" || cfg.method == "both";
  std::ostringstream t;
  int code = kPass;
  XGroupPolynomial product(cfg.n), explicit_form(cfg.n);
  if (want_product) {
    product = cfg.symbolic ? coeffs_via_product(cfg.n)
                           : coeffs_via_product_at(cfg.n, cfg.q0);
    report["coeffs"] = coeff_table_json(cfg.n, product);
    t << "coefficients via the generating product\n";
    coeff_table_text(cfg.n, product, t);
  }
  if (want_explicit) {
    explicit_form = cfg.symbolic ? coeffs_via_explicit(cfg.n)
                                 : coeffs_via_explicit_at(cfg.n, cfg.q0);
    const char* key = cfg.method == "both" ? "coeffs_explicit" : "coeffs";
    report[key] = coeff_table_json(cfg.n, explicit_form);
    t << "coefficients via the explicit inverse-matrix sum\n";
    coeff_table_text(cfg.n, explicit_form, t);
  }
  if (cfg.method == "both") {
    const bool equal = product == explicit_form;
    report["methods_agree"] = equal;
    t << (equal ? "both methods agree\n" : "METHOD MISMATCH\n");
    if (!equal) code = kCheckFailed;
  }
  text = t.str();
  return code;
}

// ---------------------------------------------------------------------------
// verify

int verify_det(const RunConfig& cfg, json& report, std::ostringstream& t) {
  bool equal = false;
  if (cfg.symbolic) {
    if (cfg.n < 1 || cfg.n > 5)
      throw UsageError("verify det supports n <= 5 symbolically; "
                       "n = 6 needs a rational --q");
    const QPolynomial det = determinant(ZagierMatrix::build(cfg.n));
    const QPolynomial formula = zagier_formula(cfg.n);
    equal = det == formula;
    report["determinant_degree"] = det.degree();
    report["equal"] = equal;
    if (cfg.n <= 3) {
      report["determinant"] = det.str();
      t << "determinant: " << det.str() << "\n";
    }
    t << "degree " << det.degree() << ", formula degree " << formula.degree()
      << "\n";
  } else {
    if (cfg.n < 1 || cfg.n > 6)
      throw UsageError("verify det supports n <= 6 at rational q");
    const Rat det = determinant_at(ZagierMatrix::build(cfg.n), cfg.q0);
    const Rat formula = zagier_formula_at(cfg.n, cfg.q0);
    equal = det == formula;
    report["determinant"] = rat_str(det);
    report["formula"] = rat_str(formula);
    report["equal"] = equal;
    t << "determinant at q = " << cfg.q_text << ": " << rat_str(det) << "\n";
  }
  report["holds"] = equal;
  return equal ? kPass : kCheckFailed;
}

int verify_eigen(const RunConfig& cfg, json& report, std::ostringstream& t) {
  const int bound = cfg.symbolic ? 3 : 4;
  if (cfg.n < 1 || cfg.n > bound)
    throw UsageError("verify eigen supports n <= 3 symbolically and n <= 4 "
                     "at rational q");
  const std::vector<XGroupPolynomial> levels =
      cfg.symbolic ? energy_levels(cfg.n) : energy_levels_at(cfg.n, cfg.q0);
  const QRational q_param =
      cfg.symbolic ? QRational::q_power(1) : QRational(cfg.q0);
  Rng rng(cfg.seed);
  const int draws = 20;
  json violations = json::array();
  for (int d = 0; d < draws; ++d) {
    const OrderedTuple modes{draw_distinct_modes(rng, cfg.n)};
    EnergyAssignment energies;
    Rat total = 0;
    for (int j = 1; j <= modes.size(); ++j) {
      const Rat e = draw_energy(rng);
      energies.set(modes(j), e);
      total += e;
    }
    const FockState x = FockState::basis(modes);
    const FockState applied = apply_energy(energies, x, levels, q_param);
    if (applied != QRational(total) * x) {
      std::ostringstream v;
      v << "draw " << d << " on " << modes.str()
        << ": state is not an eigenvector of eigenvalue " << rat_str(total);
      violations.push_back(v.str());
    }
  }
  const bool holds = violations.empty();
  report["draws"] = draws;
  report["violations"] = std::move(violations);
  report["holds"] = holds;
  t << draws << " seeded eigenvalue draws, "
    << report["violations"].size() << " violations\n";
  return holds ? kPass : kCheckFailed;
}

json symmetry_json(const CoefficientSymmetryReport& rep, bool asserted) {
  json j;
  j["holds"] = rep.holds;
  json violations = json::array();
  for (const CoefficientSymmetryViolation& v : rep.violations) {
    json row;
    row["perm"] = v.perm.images();
    row["i"] = v.i;
    row["value_at_i"] = v.value_at_i;
    row["value_at_image"] = v.value_at_image;
    violations.push_back(std::move(row));
  }
  j["violations"] = std::move(violations);
  j["mode"] = rep.specialized ? "specialized" : "symbolic";
  j["q"] = rep.specialized ? rat_str(rep.q0) : "symbolic";
  j["pairs_checked"] = rep.pairs_checked;
  j["asserted"] = asserted;
  return j;
}

int verify_remark1(const RunConfig& cfg, json& report, std::ostringstream& t) {
  if (cfg.n < 1 || cfg.n > 5)
    throw UsageError("verify remark1 supports n <= 5");
  if (cfg.n == 5 && cfg.symbolic)
    throw UsageError("n = 5 runs at a rational specialization; pass --q a/b");
  const bool asserted = cfg.n <= 4;
  const CoefficientSymmetryReport rep =
      cfg.symbolic ? check_coefficient_symmetry(cfg.n)
                   : check_coefficient_symmetry_at(cfg.n, cfg.q0);
  const json payload = symmetry_json(rep, asserted);
  for (auto it = payload.begin(); it != payload.end(); ++it)
    report[it.key()] = it.value();
  t << "coefficient symmetry over " << rep.pairs_checked << " pairs: "
    << (rep.holds ? "holds" : "violated") << "\n";
  if (!asserted)
    t << "evidence only: the identity is open at this size\n";
  if (asserted && !rep.holds) return kCheckFailed;
  return kPass;
}

int verify_greenberg(const RunConfig& cfg, json& report,
                     std::ostringstream& t) {
  if (!cfg.symbolic)
    throw UsageError("the number-operator check runs at q = 0; omit --q");
  if (cfg.n < 1 || cfg.n > 5)
    throw UsageError("verify greenberg supports n <= 5");
  const GreenbergReport rep = greenberg_limit_check(cfg.n, cfg.seed);
  report["evaluated_at"] = "0";
  report["draws"] = rep.draws;
  report["coefficients_degenerate"] = rep.coefficients_degenerate;
  report["actions_match"] = rep.actions_match;
  report["holds"] = rep.holds;
  report["violations"] = rep.mismatches;
  t << "q = 0 number-operator comparison over " << rep.draws << " draws: "
    << (rep.holds ? "holds" : "violated") << "\n";
  return rep.holds ? kPass : kCheckFailed;
}

int verify_integrality(const RunConfig& cfg, json& report,
                       std::ostringstream& t) {
  if (!cfg.symbolic)
    throw UsageError("the integrality check is about symbolic entries; "
                     "omit --q");
  if (cfg.n < 1 || cfg.n > 4)
    throw UsageError("verify integrality supports n <= 4");
  const IntegralityReport rep = check_integrality(cfg.n);
  report["entries_checked"] = rep.entries_checked;
  report["holds"] = rep.holds;
  json violations = json::array();
  for (const auto& [r, c] : rep.violations)
    violations.push_back(json::array({r, c}));
  report["violations"] = std::move(violations);
  t << "delta_" << cfg.n << " times the inverse: " << rep.entries_checked
    << " entries, " << (rep.holds ? "all integer polynomials" : "violations")
    << "\n";
  return rep.holds ? kPass : kCheckFailed;
}

int verify_rp(const RunConfig& cfg, json& report, std::ostringstream& t) {
  const int bound = cfg.symbolic ? 4 : 5;
  if (cfg.n < 1 || cfg.n > bound)
    throw UsageError("verify rp supports p <= 4 symbolically and p <= 5 at "
                     "rational q");
  const XGroupPolynomial defining = cfg.symbolic
                                        ? r_p_defining(cfg.n)
                                        : r_p_defining_at(cfg.n, cfg.q0);
  const XGroupPolynomial closed =
      cfg.symbolic ? r_p_closed(cfg.n) : r_p_closed_at(cfg.n, cfg.q0);
  const bool equal = defining == closed;
  report["terms"] = closed.terms().size();
  report["equal"] = equal;
  report["holds"] = equal;
  if (cfg.n <= 3) {
    report["closed_form"] = closed.str();
    t << "closed form: " << closed.str() << "\n";
  }
  t << "defining and closed contraction elements "
    << (equal ? "agree" : "DIFFER") << " (" << closed.terms().size()
    << " terms)\n";
  return equal ? kPass : kCheckFailed;
}

int cmd_verify(const RunConfig& cfg, json& report, std::string& text) {
  std::ostringstream t;
  int code;
  if (cfg.target == "det") code = verify_det(cfg, report, t);
  else if (cfg.target == "eigen") code = verify_eigen(cfg, report, t);
  else if (cfg.target == "remark1") code = verify_remark1(cfg, report, t);
  else if (cfg.target == "greenberg") code = verify_greenberg(cfg, report, t);
  else if (cfg.target == "integrality") code = verify_integrality(cfg, report, t);
  else if (cfg.target == "rp") code = verify_rp(cfg, report, t);
  else throw UsageError("unknown verify target: " + cfg.target);
  t << "result: " << (code == kPass ? "PASS" : "FAIL") << "\n";
  text = t.str();
  return code;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const RunConfig& cfg, json& report, std::string& text) {
  if (cfg.n < 2 || cfg.n > 6)
    throw UsageError("bench supports 2 <= n <= 6 (documented bound)");
  const Rat q0 = cfg.symbolic ? Rat(1) / Rat(3) : cfg.q0;
  report["bench_q"] = rat_str(q0);
  json rows = json::array();
  std::ostringstream t;
  t << "op, n, mode, ms, terms\n";
  const auto timed = [&](int m, const char* op, const char* mode,
                         auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t terms = body();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    json row;
    row["op"] = op;
    row["n"] = m;
    row["mode"] = mode;
    row["ms"] = ms;
    row["terms"] = terms;
    rows.push_back(std::move(row));
    t << op << ", " << m << ", " << mode << ", " << ms << ", " << terms
      << "\n";
  };
  for (int m = 2; m <= cfg.n; ++m) {
    timed(m, "build", "symbolic", [&] {
      const ZagierMatrix a = ZagierMatrix::build(m);
      return a.order() * a.order();
    });
    if (m <= 5)
      timed(m, "det", "symbolic", [&] {
        return nonzero_terms(determinant(ZagierMatrix::build(m)));
      });
    timed(m, "det", "rational", [&] {
      determinant_at(ZagierMatrix::build(m), q0);
      return std::size_t{1};
    });
    if (m <= 4)
      timed(m, "invert", "symbolic", [&] {
        const Matrix<QRational> inv = invert(ZagierMatrix::build(m));
        return inv.rows() * inv.cols();
      });
    if (m <= 5)
      timed(m, "invert", "rational", [&] {
        const Matrix<Rat> inv = invert_at(ZagierMatrix::build(m), q0);
        return inv.rows() * inv.cols();
      });
    if (m <= 4)
      timed(m, "coeffs", "symbolic",
            [&] { return coeffs_via_product(m).terms().size(); });
    if (m <= 5)
      timed(m, "coeffs", "rational",
            [&] { return coeffs_via_product_at(m, q0).terms().size(); });
  }
  report["rows"] = std::move(rows);
  text = t.str();
  return kPass;
}

}  // namespace

int run(int argc, char** argv) {
  RunConfig cfg;
  std::string q_text = "symbolic";

  CLI::App app{"exact arithmetic for the energy operator of infinite "
               "statistics"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "size parameter");
    sub->add_option("--q", q_text,
                    "symbolic (default) or an exact rational a/b");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--format", cfg.format, "stdout rendering")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "write the JSON report here");
  };

  CLI::App* matrix = app.add_subcommand("matrix", "emit A_n, optionally its "
                                                  "inverse");
  add_common(matrix);
  matrix->add_flag("--inverse", cfg.with_inverse, "also emit the inverse");

  CLI::App* coeffs = app.add_subcommand("coeffs", "emit the energy "
                                                  "coefficient table");
  add_common(coeffs);
  coeffs->add_option("--method", cfg.method, "construction route")
      ->check(CLI::IsMember({"product", "explicit", "both"}));

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("target", cfg.target, "what to verify")
      ->required()
      ->check(CLI::IsMember(
          {"det", "eigen", "remark1", "greenberg", "integrality", "rp"}));
  add_common(verify);

  CLI::App* bench = app.add_subcommand("bench", "time the exact kernels");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (matrix->parsed()) cfg.command = "matrix";
  else if (coeffs->parsed()) cfg.command = "coeffs";
  else if (verify->parsed()) cfg.command = "verify";
  else cfg.command = "bench";
  if (bench->parsed() && !bench->count("--n")) cfg.n = 4;

  try {
    parse_q(q_text, cfg);
    json report = envelope(cfg);
    std::string text;
    int code;
    if (cfg.command == "matrix") code = cmd_matrix(cfg, report, text);
    else if (cfg.command == "coeffs") code = cmd_coeffs(cfg, report, text);
    else if (cfg.command == "verify") code = cmd_verify(cfg, report, text);
    else code = cmd_bench(cfg, report, text);

    const std::string dumped = report.dump(2) + "\n";
    if (cfg.format == "json") std::cout << dumped;
    else std::cout << text;
    std::string path = cfg.out_path;
    if (cfg.command == "verify" && path.empty()) path = "quon-report.json";
    if (!path.empty()) write_atomic(path, dumped);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const singular_error& e) {
    std::cerr << "singular specialization: " << e.what() << "\n";
    return kSingular;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace quon::cli
