#include "uqso/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "uqso/commutant.hpp"
#include "uqso/djembed.hpp"
#include "uqso/expression.hpp"
#include "uqso/json_io.hpp"
#include "uqso/pbw.hpp"
#include "uqso/reps.hpp"

namespace uqso::cli {

int exit_code_for(ErrorKind kind) { return 10 + static_cast<int>(kind); }

namespace {

pbw::Variant parse_variant(const std::string& s) {
  return s == "minus" ? pbw::Variant::Minus : pbw::Variant::Plus;
}

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

int report_relations(const pbw::RelationReport& report, const std::string& out_path, std::ostream& out) {
  std::size_t failures = 0;
  for (const auto& c : report.checks) {
    out << c.relation << "  exact-zero: " << (c.exact_zero() ? "true" : "false");
    if (!c.exact_zero()) {
      out << "  residual: " << c.residual.to_string();
      ++failures;
    }
    out << "\n";
  }
  out << report.checks.size() << " relations, " << failures << " not exact zero\n";
  if (!out_path.empty())
    io::write_json_file(out_path, io::relation_report_to_json(report));
  return failures == 0 ? kOk : kCheckFailed;
}

int report_checks(const djembed::CheckReport& report, const std::string& out_path, std::ostream& out) {
  std::size_t failures = 0;
  for (const auto& e : report.entries) {
    out << (e.pass ? "PASS " : "FAIL ") << "[" << e.mode << "] " << e.check;
    if (e.residual)
      out << "  residual: " << sci(*e.residual);
    out << "\n";
    failures += e.pass ? 0 : 1;
  }
  out << report.entries.size() << " checks, " << failures << " failed\n";
  if (!out_path.empty())
    io::write_json_file(out_path, io::check_report_to_json(report));
  return failures == 0 ? kOk : kCheckFailed;
}

struct Options {
  int n = 0;
  std::string variant = "plus";
  std::string out;
  std::string expression;
  bool classical = false;
  int degree = 4;
  int trials = 500;
  std::uint64_t seed = 0;
  std::string params;
  std::string rep;
  int order = 0;
  int t = 1;
  std::optional<double> tol;
  bool commutant = false;
  int samples = 20;
  int twoJ = 0;
  double q_re = 0.0;
  double q_im = 0.0;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms and root-of-unity representations for U'_q(so_n)", "uqso"};
  app.require_subcommand(1);
  Options o;
  const auto variants = CLI::IsMember({"plus", "minus"});

  auto* relations = app.add_subcommand("relations-verify", "Reduce every defining relation to PBW normal form");
  relations->add_option("--n", o.n, "rank n >= 3")->required();
  relations->add_option("--variant", o.variant, "generator family")->check(variants);
  relations->add_flag("--classical", o.classical, "check the q = 1 relations instead");
  relations->add_option("--out", o.out, "JSON report path");

  auto* reduce = app.add_subcommand("pbw-reduce", "Print the PBW normal form of an expression");
  reduce->add_option("--n", o.n, "rank n >= 3")->required();
  reduce->add_option("--variant", o.variant, "variant of plain I<k><l> leaves")->check(variants);
  reduce->add_option("expression", o.expression, "expression, e.g. \"I32*I21\"")->required();

  auto* commrel = app.add_subcommand("commrel-verify", "Verify the commutation relations of the derived generators");
  commrel->add_option("--n", o.n, "rank n >= 3")->required();
  commrel->add_option("--variant", o.variant, "generator family")->check(variants);
  commrel->add_option("--out", o.out, "JSON report path");

  auto* fuzz = app.add_subcommand("assoc-fuzz", "Random associativity checks of PBW multiplication");
  fuzz->add_option("--n", o.n, "rank n >= 3")->required();
  fuzz->add_option("--degree", o.degree, "maximal monomial degree");
  fuzz->add_option("--trials", o.trials, "number of triples");
  fuzz->add_option("--seed", o.seed, "random seed")->required();
  fuzz->add_option("--variant", o.variant, "generator family")->check(variants);

  auto* build = app.add_subcommand("rep-build", "Build the representation matrices for a parameter file");
  build->add_option("--params", o.params, "parameter JSON")->required();
  build->add_option("--out", o.out, "representation dump path")->required();

  auto* verify = app.add_subcommand("rep-verify", "Residuals of the defining relations on a representation dump");
  verify->add_option("--rep", o.rep, "representation dump")->required();
  verify->add_option("--q-order", o.order, "order k of q")->required();
  verify->add_option("--q-t", o.t, "q = exp(2 pi i t / k)");
  verify->add_option("--tol", o.tol, "residual tolerance (default 1e-9, times dim above 100)");
  verify->add_flag("--commutant", o.commutant, "also compute the commutant dimension");
  verify->add_option("--out", o.out, "JSON report path");

  auto* commutant = app.add_subcommand("rep-commutant", "Commutant dimension of a representation dump");
  commutant->add_option("--rep", o.rep, "representation dump")->required();
  commutant->add_option("--tol", o.tol, "relative singular value cutoff (default 1e-8)");

  auto* embed = app.add_subcommand("embed-verify", "Check the embedding into U_q(sl_n) on the vector representation");
  embed->add_option("--n", o.n, "rank n >= 3")->required();
  embed->add_option("--samples", o.samples, "numeric q values for the coherence check");
  embed->add_option("--seed", o.seed, "seed for the numeric q values");
  embed->add_option("--out", o.out, "JSON report path");

  auto* psi = app.add_subcommand("psi-verify", "Check psi on the U_q(sl_2) irrep of dimension twoJ + 1");
  psi->alias("verify-psi");
  psi->add_option("--two-j", o.twoJ, "twice the spin")->required()->check(CLI::NonNegativeNumber);
  psi->add_option("--q-re", o.q_re, "real part of q")->required();
  psi->add_option("--q-im", o.q_im, "imaginary part of q");
  psi->add_option("--tol", o.tol, "residual tolerance (default 1e-10)");
  psi->add_option("--out", o.out, "JSON report path");

  auto* sample = app.add_subcommand("params-sample", "Sample generic parameters");
  sample->add_option("--n", o.n, "rank n >= 3")->required();
  sample->add_option("--k", o.order, "order of the root of unity")->required();
  sample->add_option("--t", o.t, "q = exp(2 pi i t / k)");
  sample->add_option("--seed", o.seed, "random seed")->required();
  sample->add_option("--out", o.out, "parameter JSON path (stdout if omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*relations) {
      auto v = parse_variant(o.variant);
      auto report = o.classical ? pbw::verify_classical_defining_relations(o.n, v)
                                : pbw::verify_defining_relations(o.n, v);
      return report_relations(report, o.out, out);
    }
    if (*reduce) {
      auto tree = expr::parse_expression(o.expression, o.n);
      out << expr::evaluate(tree, o.n, parse_variant(o.variant)).to_string() << "\n";
      return kOk;
    }
    if (*commrel)
      return report_relations(pbw::verify_commutation_relations(o.n, parse_variant(o.variant)), o.out, out);
    if (*fuzz) {
      auto report = pbw::associativity_fuzz(o.n, o.degree, o.trials, o.seed, parse_variant(o.variant));
      out << "trials: " << report.trials << "  failures: " << report.failures << "\n";
      for (const auto& w : report.witnesses)
        out << "  witness: " << w << "\n";
      return report.all_pass() ? kOk : kCheckFailed;
    }
    if (*build) {
      auto omega = io::params_from_json(io::read_json_file(o.params));
      auto ops = reps::build_representation(omega);
      io::write_json_file(o.out, io::rep_to_json(ops));
      out << "dim " << ops.front().dim << ", " << ops.size() << " generators written to " << o.out << "\n";
      return kOk;
    }
    if (*verify) {
      auto ops = io::rep_from_json(io::read_json_file(o.rep));
      RootOfUnity root(o.order, o.t);
      auto report = reps::relation_residual(ops, root);
      const std::size_t dim = ops.empty() ? 0 : ops.front().dim;
      const double tol = o.tol.value_or(dim > 100 ? 1e-9 * static_cast<double>(dim) : 1e-9);
      bool ok = true;
      for (const auto& r : report.residuals) {
        bool pass = r.residual < tol;
        ok = ok && pass;
        out << (pass ? "PASS " : "FAIL ") << std::left << std::setw(60) << r.relation << " " << sci(r.residual) << "\n";
      }
      std::optional<std::size_t> cdim;
      if (o.commutant) {
        cdim = reps::commutant_dimension(ops);
        out << "commutant dimension: " << *cdim << "\n";
        ok = ok && *cdim == 1;
      }
      out << "max residual " << sci(report.max_residual()) << " (tolerance " << sci(tol) << ")\n";
      if (!o.out.empty())
        io::write_json_file(o.out, io::residual_report_to_json(report, cdim));
      return ok ? kOk : kCheckFailed;
    }
    if (*commutant) {
      auto ops = io::rep_from_json(io::read_json_file(o.rep));
      std::size_t d = reps::commutant_dimension(ops, o.tol.value_or(1e-8));
      out << "commutant dimension: " << d << "\n";
      return d == 1 ? kOk : kCheckFailed;
    }
    if (*embed)
      return report_checks(djembed::verify_embedding(o.n, o.samples, o.seed == 0 ? 1 : o.seed), o.out, out);
    if (*psi)
      return report_checks(djembed::verify_psi(o.twoJ, QValue(o.q_re, o.q_im), o.tol.value_or(1e-10)), o.out, out);
    if (*sample) {
      auto omega = reps::random_generic_params(o.n, o.order, o.seed, o.t);
      auto json = io::params_to_json(omega);
      if (o.out.empty()) {
        out << json.dump(2) << "\n";
      } else {
        io::write_json_file(o.out, json);
        out << omega.parameter_count() << " complex parameters written to " << o.out << "\n";
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error (InvalidArgument): malformed JSON: " << e.what() << "\n";
    return exit_code_for(ErrorKind::InvalidArgument);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

} // namespace uqso::cli
