#include "glaisher/cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "glaisher/acceptance.hpp"
#include "glaisher/identities.hpp"
#include "glaisher/poly.hpp"
#include "glaisher/specfrac.hpp"

namespace glaisher {

namespace {

constexpr double kPi = std::numbers::pi;

struct OutputOpts {
  std::string format = "text";
};

struct QuadOpts {
  double tol = 1e-12;
  long max_evals = 2000000;
  std::string scheme = "gauss";

  QuadConfig config() const {
    QuadConfig cfg;
    cfg.abs_tol = tol;
    cfg.rel_tol = tol;
    cfg.max_evals = max_evals;
    cfg.scheme = scheme == "de" ? QuadScheme::DoubleExp : QuadScheme::SubstGauss;
    return cfg;
  }
};

void add_output_opts(CLI::App* sub, OutputOpts& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_quad_opts(CLI::App* sub, QuadOpts& q) {
  sub->add_option("--tol", q.tol, "Quadrature tolerance (absolute and relative)");
  sub->add_option("--max-evals", q.max_evals, "Quadrature evaluation budget");
  sub->add_option("--scheme", q.scheme, "Quadrature scheme")
      ->check(CLI::IsMember({"gauss", "de"}));
}

void emit_reports(const std::vector<VerificationReport>& reports, const OutputOpts& o,
                  std::ostream& out) {
  if (o.format == "json") {
    out << reports_to_json(reports) << "\n";
  } else if (o.format == "csv") {
    out << report_csv_header() << "\n";
    for (const auto& r : reports) out << report_to_csv(r) << "\n";
  } else {
    for (const auto& r : reports) out << report_to_text(r) << "\n";
  }
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) vals.push_back(std::stod(item));
  }
  if (vals.empty()) throw CLI::ValidationError("empty list: '" + csv + "'");
  return vals;
}

Family family_from_string(const std::string& name) {
  if (name == "th1") return Family::Th1;
  if (name == "th2") return Family::Th2;
  if (name == "th2ga") return Family::Th2GeneralA;
  if (name == "th3") return Family::Th3;
  if (name == "glaisher1") return Family::Glaisher1;
  if (name == "glaisher2") return Family::Glaisher2;
  if (name == "lemma2") return Family::Lemma2;
  if (name == "iv") return Family::IsmailValent;
  throw CLI::ValidationError("unknown family '" + name + "'");
}

struct VerifySpec {
  int theorem = 0;
  std::string family;
  int n = 1;
  double a = 1.0;
  int k = 0;
  double modulus = 0.5;
  double theta = 0.0;
  int j = 0;

  FamilyParams params() const {
    FamilyParams p;
    if (!family.empty()) {
      p.family = family_from_string(family);
    } else if (theorem == 1) {
      p.family = Family::Th1;
    } else if (theorem == 2) {
      p.family = a == 1.0 ? Family::Th2 : Family::Th2GeneralA;
    } else if (theorem == 3) {
      p.family = Family::Th3;
    } else {
      throw CLI::ValidationError("provide --theorem {1,2,3} or --family");
    }
    p.n = n;
    p.a = a;
    p.k = k;
    p.modulus = modulus;
    p.theta = theta;
    if (p.family == Family::Lemma2 && theta == 0.0 && j >= 1 && n >= 1)
      p.theta = kPi * (2 * j - 1) / (2.0 * n);
    return p;
  }
};

void add_verify_params(CLI::App* sub, VerifySpec& v) {
  sub->add_option("--theorem", v.theorem, "Theorem number (1, 2 or 3)");
  sub->add_option("--family", v.family,
                  "Family: th1 th2 th2ga th3 glaisher1 glaisher2 lemma2 iv");
  sub->add_option("--n", v.n, "Index n");
  sub->add_option("--a", v.a, "Parameter a");
  sub->add_option("--k", v.k, "Power index k");
  sub->add_option("--modulus", v.modulus, "Elliptic modulus (iv)");
  sub->add_option("--theta", v.theta, "Angle theta (lemma2)");
  sub->add_option("--j", v.j, "Root index j, sets theta = pi(2j-1)/(2n) (lemma2)");
}

int cmd_verify(const VerifySpec& spec, const OutputOpts& o, const QuadOpts& q,
               std::ostream& out) {
  VerificationReport r = verify(spec.params(), q.config());
  emit_reports({r}, o, out);
  return r.pass ? 0 : 1;
}

int cmd_sweep(const VerifySpec& spec, const std::string& n_list, const std::string& a_list,
              const std::string& k_list, const OutputOpts& o, const QuadOpts& q,
              std::ostream& out) {
  std::vector<int> ns, ks;
  std::vector<double> as;
  for (double v : parse_list(n_list.empty() ? std::to_string(spec.n) : n_list))
    ns.push_back(static_cast<int>(v));
  for (double v : parse_list(a_list.empty() ? fmt17(spec.a) : a_list)) as.push_back(v);
  for (double v : parse_list(k_list.empty() ? std::to_string(spec.k) : k_list))
    ks.push_back(static_cast<int>(v));

  std::vector<FamilyParams> combos;
  for (int n : ns)
    for (double a : as)
      for (int k : ks) {
        VerifySpec s = spec;
        s.n = n;
        s.a = a;
        s.k = k;
        FamilyParams p = s.params();
        validate(p);  // invalid combinations are usage errors
        combos.push_back(p);
      }

  std::vector<VerificationReport> reports(combos.size());
  const QuadConfig cfg = q.config();
  const int threads = std::min<int>(worker_threads(), static_cast<int>(combos.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < combos.size(); ++i) reports[i] = verify(combos[i], cfg);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (size_t i = t; i < combos.size(); i += threads)
          reports[i] = verify(combos[i], cfg);
      });
    for (auto& th : pool) th.join();
  }
  sort_reports(reports);
  emit_reports(reports, o, out);
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass; })
             ? 0
             : 1;
}

std::string cx_pair(Cx v) {
  return "(" + fmt17(v.real()) + ", " + fmt17(v.imag()) + ")";
}

int cmd_expand(int lemma, int n, double a, int k, std::ostream& out) {
  PFExpansion ex;
  if (lemma == 1) ex = expansion_lemma1(n, Cx(a, 0.0));
  else if (lemma == 4) ex = expansion_lemma4(n, a);
  else if (lemma == 5) ex = expansion_lemma5(n, k);
  else throw CLI::ValidationError("--lemma must be 1, 4 or 5");
  out << "constant " << cx_pair(ex.constant) << "\n";
  for (const auto& term : ex.terms)
    out << "pole " << cx_pair(term.pole) << " residue " << cx_pair(term.residue) << "\n";
  for (const auto& note : ex.notes) out << "# " << note << "\n";
  return 0;
}

int cmd_poly(const std::string& which, int n, const std::string& a_str, std::ostream& out) {
  const BigRat a = rat_parse(a_str);
  if (which == "qlemma1") {
    for (const auto& coef : build_Q_lemma1(n, a).coeffs()) out << rat_to_string(coef) << "\n";
  } else if (which == "plemma1") {
    for (const auto& coef : build_P_lemma1(n, a).coeffs()) out << rat_to_string(coef) << "\n";
  } else if (which == "rlemma4") {
    Lemma4Result r = build_R_lemma4(n, a);
    out << "constant " << rat_to_string(r.constant) << "\n";
    for (const auto& coef : r.remainder.coeffs()) out << rat_to_string(coef) << "\n";
  } else if (which == "qscaled") {
    for (const auto& coef : build_Q_scaled(n).coeffs()) out << rat_to_string(coef) << "\n";
  } else {
    throw CLI::ValidationError("--which must be qlemma1, plemma1, rlemma4 or qscaled");
  }
  return 0;
}

int cmd_sums(int n, std::ostream& out) {
  bool ok = true;
  auto line = [&](const std::string& name, double value, double expect, double tol) {
    const double err = std::abs(value - expect);
    ok = ok && err <= tol;
    out << name << " = " << fmt17(value) << " expected " << fmt17(expect)
        << " |err| = " << fmt17(err) << "\n";
  };
  if (n % 2 == 1) {
    line("LEMMA3", finite_sum(SumKind::Lemma3, n), n, 1e-12);
    line("ATANH_CANCEL", finite_sum(SumKind::AtanhCancel, n), 0.0, 1e-12);
  } else {
    line("TAN_EVEN", finite_sum(SumKind::TanEven, n),
         ((n / 2) % 2 == 0 ? 1.0 : -1.0) * n, 1e-12);
  }
  if (n >= 2) {
    const double lhs = finite_sum(SumKind::Th3Sum, n, 0);
    const double rhs = finite_sum(SumKind::Th3AltRhs, n);
    line("TH3_ALT", lhs, rhs, 1e-12);
  }
  return ok ? 0 : 1;
}

int cmd_symmetry(const std::string& family, int n, int k, const OutputOpts& o,
                 const QuadOpts& q, std::ostream& out) {
  SymFamily fam;
  if (family == "th1") fam = SymFamily::Th1Sym;
  else if (family == "th3") fam = SymFamily::Th3Sym;
  else throw CLI::ValidationError("--family must be th1 or th3");
  SymmetryReport s = symmetry_check(fam, n, k, q.config());
  if (o.format == "text") {
    out << (fam == SymFamily::Th1Sym ? "TH1_SYM" : "TH3_SYM") << " n=" << n;
    if (fam == SymFamily::Th3Sym) out << " k=" << k;
    out << "\n  J_real = " << cx_pair(s.j_real) << "\n  J_imag = " << cx_pair(s.j_imag)
        << "\n  |J_imag - J_real| = " << fmt17(s.symmetry_err)
        << "\n  jacobian_max_rel = " << fmt17(s.jacobian_max_rel)
        << "\n  chain: factor " << fmt17(s.chain_factor) << " * Re(J_real) = "
        << fmt17(s.chain_value) << " vs " << fmt17(s.chain_reference)
        << " (err " << fmt17(s.chain_err) << ")\n  " << (s.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& note : s.notes) out << "  note: " << note << "\n";
  } else {
    emit_reports({s.to_report(1e-8)}, o, out);
  }
  return s.pass ? 0 : 1;
}

int cmd_all(bool exploratory, const OutputOpts& o, const QuadOpts& q, std::ostream& out) {
  const auto criteria = run_acceptance_criteria(q.config(), exploratory);
  bool gating_pass = true;
  std::vector<VerificationReport> reports;
  for (const auto& c : criteria) {
    for (const auto& r : c.reports) reports.push_back(r);
    if (c.gating && !c.pass) gating_pass = false;
  }
  sort_reports(reports);
  if (o.format != "text") {
    emit_reports(reports, o, out);
  }
  for (const auto& c : criteria) {
    out << "criterion " << c.id << " [" << c.label << "]: " << (c.pass ? "PASS" : "FAIL")
        << (c.gating ? "" : " (non-gating)") << "\n";
    for (const auto& d : c.details) out << "    " << d << "\n";
  }
  out << (gating_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return gating_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical verification of a family of trigonometric-hyperbolic integral identities"};
  app.require_subcommand(1);

  OutputOpts output;
  QuadOpts quad_opts;
  VerifySpec spec;

  auto* verify_cmd = app.add_subcommand("verify", "Check one identity");
  add_verify_params(verify_cmd, spec);
  add_output_opts(verify_cmd, output);
  add_quad_opts(verify_cmd, quad_opts);

  auto* sweep_cmd = app.add_subcommand("sweep", "Check an identity across parameter lists");
  std::string n_list, a_list, k_list;
  add_verify_params(sweep_cmd, spec);
  sweep_cmd->add_option("--n-list", n_list, "Comma-separated n values");
  sweep_cmd->add_option("--a-list", a_list, "Comma-separated a values");
  sweep_cmd->add_option("--k-list", k_list, "Comma-separated k values");
  add_output_opts(sweep_cmd, output);
  add_quad_opts(sweep_cmd, quad_opts);

  auto* expand_cmd = app.add_subcommand("expand", "Print a partial fraction expansion");
  int ex_lemma = 1, ex_n = 1, ex_k = 0;
  double ex_a = 1.0;
  expand_cmd->add_option("--lemma", ex_lemma, "Lemma number: 1, 4 or 5")->required();
  expand_cmd->add_option("--n", ex_n, "Index n")->required();
  expand_cmd->add_option("--a", ex_a, "Parameter a (lemmas 1 and 4)");
  expand_cmd->add_option("--k", ex_k, "Power index k (lemma 5)");

  auto* poly_cmd = app.add_subcommand("poly", "Print exact polynomial coefficients");
  std::string poly_which = "qscaled", poly_a = "1";
  int poly_n = 1;
  poly_cmd->add_option("--which", poly_which, "qlemma1, plemma1, rlemma4 or qscaled")
      ->required();
  poly_cmd->add_option("--n", poly_n, "Index n")->required();
  poly_cmd->add_option("--a", poly_a, "Rational a, e.g. 2 or 1/2 or 0.5");

  auto* sums_cmd = app.add_subcommand("sums", "Evaluate the finite sum identities");
  int sums_n = 3;
  sums_cmd->add_option("--n", sums_n, "Index n")->required();

  auto* sym_cmd = app.add_subcommand("symmetry", "Real-axis vs imaginary-axis integrals");
  std::string sym_family = "th1";
  int sym_n = 1, sym_k = 0;
  sym_cmd->add_option("--family", sym_family, "th1 or th3")->required();
  sym_cmd->add_option("--n", sym_n, "Index n")->required();
  sym_cmd->add_option("--k", sym_k, "Power index k (th3)");
  add_output_opts(sym_cmd, output);
  add_quad_opts(sym_cmd, quad_opts);

  auto* all_cmd = app.add_subcommand("all", "Run the full verification battery");
  bool exploratory = false;
  all_cmd->add_flag("--exploratory", exploratory,
                    "Include exploratory checks (does not affect the exit code)");
  add_output_opts(all_cmd, output);
  add_quad_opts(all_cmd, quad_opts);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(spec, output, quad_opts, out);
    if (sweep_cmd->parsed())
      return cmd_sweep(spec, n_list, a_list, k_list, output, quad_opts, out);
    if (expand_cmd->parsed()) return cmd_expand(ex_lemma, ex_n, ex_a, ex_k, out);
    if (poly_cmd->parsed()) return cmd_poly(poly_which, poly_n, poly_a, out);
    if (sums_cmd->parsed()) return cmd_sums(sums_n, out);
    if (sym_cmd->parsed())
      return cmd_symmetry(sym_family, sym_n, sym_k, output, quad_opts, out);
    if (all_cmd->parsed()) return cmd_all(exploratory, output, quad_opts, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace glaisher
