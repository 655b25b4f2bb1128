#include "cli.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degenbell/boson.hpp"
#include "degenbell/fock.hpp"
#include "degenbell/numeric.hpp"
#include "degenbell/stirling_bell.hpp"
#include "degenbell/verify.hpp"

namespace degenbell::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

std::string rstr(const Real& x) { return x.str(15); }

double as_double(const Real& x) { return x.convert_to<double>(); }

Complex parse_z(const std::string& text) {
  const auto parse_part = [&](const std::string& part) {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("--z: malformed number \"" + part + "\"");
    }
    if (used != part.size())
      throw std::invalid_argument("--z: malformed number \"" + part + "\"");
    return value;
  };
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return Complex(Real(parse_part(text)), Real(0));
  return Complex(Real(parse_part(text.substr(0, comma))),
                 Real(parse_part(text.substr(comma + 1))));
}

struct CommonArgs {
  unsigned nmax = 0;
  unsigned n = 0;
  unsigned k = 0;
  unsigned r = 0;
  unsigned dim = 64;
  unsigned seed = 0;
  double tol = 1e-10;
  double t = 1.0;
  std::string lambda = "0";
  std::string x = "1";
  std::string z = "1";
  std::string format = "text";
  std::string expr;
  std::string suite = "all";
};

int run_stirling(const CommonArgs& a, std::ostream& out) {
  const StirlingTable table(a.nmax, a.r, Rational::parse(a.lambda));
  if (a.format == "csv") {
    out << table.to_csv();
  } else if (a.format == "json") {
    out << table.to_json().dump(2) << '\n';
  } else {
    out << "degenerate r-Stirling table, r=" << a.r << " lambda=" << table.lambda().str()
        << " nmax=" << a.nmax << '\n';
    for (unsigned n = 0; n <= a.nmax; ++n) {
      out << "n=" << n << ':';
      for (const Rational& v : table.row(n)) out << ' ' << v.str();
      out << '\n';
    }
  }
  return kOk;
}

int run_bell(const CommonArgs& a, std::ostream& out) {
  const Rational lambda = Rational::parse(a.lambda);
  const Rational x = Rational::parse(a.x);
  std::vector<BellPolynomial> polys;
  for (unsigned n = 0; n <= a.nmax; ++n) polys.push_back(bell_poly(n, a.r, lambda));
  if (a.format == "csv") {
    out << "n,value\n";
    for (const BellPolynomial& p : polys) out << p.n << ',' << p.eval(x).str() << '\n';
  } else if (a.format == "json") {
    nlohmann::json j;
    j["r"] = a.r;
    j["lambda"] = lambda.str();
    j["x"] = x.str();
    nlohmann::json rows = nlohmann::json::array();
    for (const BellPolynomial& p : polys) {
      nlohmann::json row;
      row["n"] = p.n;
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Rational& c : p.coeffs) coeffs.push_back(c.str());
      row["coeffs"] = std::move(coeffs);
      row["value"] = p.eval(x).str();
      rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << "degenerate r-Bell polynomials, r=" << a.r << " lambda=" << lambda.str()
        << " x=" << x.str() << '\n';
    for (const BellPolynomial& p : polys)
      out << "phi_" << p.n << " = " << p.str() << "  ->  " << p.eval(x).str() << '\n';
  }
  return kOk;
}

int run_normal_order(const CommonArgs& a, std::ostream& out) {
  const NormalForm nf = normal_order(parse(a.expr));
  if (a.format == "csv") {
    out << "i,j,coeff\n";
    for (const auto& [key, c] : nf.terms())
      out << key.first << ',' << key.second << ',' << c.str() << '\n';
  } else if (a.format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : nf.terms())
      terms.push_back({{"create", key.first}, {"annihilate", key.second}, {"coeff", c.str()}});
    nlohmann::json j;
    j["terms"] = std::move(terms);
    j["text"] = nf.str();
    out << j.dump(2) << '\n';
  } else {
    out << nf.str() << '\n';
  }
  return kOk;
}

int run_dobinski(const CommonArgs& a, std::ostream& out) {
  const Rational lambda = Rational::parse(a.lambda);
  const Rational x = Rational::parse(a.x);
  const DobinskiResult res = dobinski(a.k, a.r, lambda, x, Real(a.tol));
  const Real exact = to_real(bell_eval(a.k, a.r, lambda, x));
  const Real diff = abs(res.value - exact);
  if (a.format == "csv") {
    out << "value,bound,terms,exact,diff\n";
    out << rstr(res.value) << ',' << rstr(res.bound) << ',' << res.terms << ',' << rstr(exact)
        << ',' << rstr(diff) << '\n';
  } else if (a.format == "json") {
    nlohmann::json j;
    j["value"] = as_double(res.value);
    j["bound"] = as_double(res.bound);
    j["terms"] = res.terms;
    j["exact"] = as_double(exact);
    j["diff"] = as_double(diff);
    out << j.dump(2) << '\n';
  } else {
    out << "value = " << rstr(res.value) << '\n'
        << "tail bound = " << rstr(res.bound) << " (after " << res.terms + 1 << " terms)\n"
        << "exact polynomial value = " << rstr(exact) << '\n'
        << "difference = " << rstr(diff) << '\n';
  }
  return kOk;
}

int run_expect(const CommonArgs& a, std::ostream& out) {
  const Rational lambda = Rational::parse(a.lambda);
  const Complex z = parse_z(a.z);
  const ExpectationResult res = expectation(z, deg_number_power(a.n, a.r, lambda), a.dim);
  if (a.format == "csv") {
    out << "value_re,value_im,truncation_bound,dim\n";
    out << rstr(res.value.real()) << ',' << rstr(res.value.imag()) << ','
        << rstr(res.truncation_bound) << ',' << res.dim << '\n';
  } else if (a.format == "json") {
    nlohmann::json j;
    j["value_re"] = as_double(res.value.real());
    j["value_im"] = as_double(res.value.imag());
    j["truncation_bound"] = as_double(res.truncation_bound);
    j["dim"] = res.dim;
    out << j.dump(2) << '\n';
  } else {
    out << "<z| (N + " << a.r << ")_{" << a.n << "," << lambda.str() << "} |z>"
        << " at z = " << z.real().str(6) << (z.imag() < 0 ? " - " : " + ")
        << abs(z.imag()).str(6) << "i, dim = " << res.dim << '\n'
        << "value = " << rstr(res.value.real()) << " + " << rstr(res.value.imag()) << "i\n"
        << "truncation bound = " << rstr(res.truncation_bound) << '\n';
  }
  return kOk;
}

int run_genfun(const CommonArgs& a, std::ostream& out) {
  const Rational lambda = Rational::parse(a.lambda);
  const Complex z = parse_z(a.z);
  const GenfunResult res = genfun_eval(z, a.r, lambda, Real(a.t), a.dim);
  const Real diff = abs(res.truncated - res.closed_form);
  if (a.format == "csv") {
    out << "truncated,closed_form,bound,diff,dim\n";
    out << rstr(res.truncated) << ',' << rstr(res.closed_form) << ',' << rstr(res.bound) << ','
        << rstr(diff) << ',' << res.dim << '\n';
  } else if (a.format == "json") {
    nlohmann::json j;
    j["truncated"] = as_double(res.truncated);
    j["closed_form"] = as_double(res.closed_form);
    j["bound"] = as_double(res.bound);
    j["diff"] = as_double(diff);
    j["dim"] = res.dim;
    out << j.dump(2) << '\n';
  } else {
    out << "truncated sum = " << rstr(res.truncated) << '\n'
        << "closed form   = " << rstr(res.closed_form) << '\n'
        << "difference    = " << rstr(diff) << " (tail bound " << rstr(res.bound) << ")\n";
  }
  return kOk;
}

int run_verify(const CommonArgs& a, std::ostream& out) {
  std::vector<CheckReport> reports;
  if (a.suite == "all") {
    reports = run_all_suites(a.seed);
  } else {
    reports.push_back(run_suite(a.suite, a.seed));
  }
  std::size_t total_cases = 0;
  std::size_t failed_suites = 0;
  for (const CheckReport& r : reports) {
    total_cases += r.size();
    if (!r.all_pass()) ++failed_suites;
  }
  if (a.format == "json") {
    nlohmann::json suites = nlohmann::json::array();
    for (const CheckReport& r : reports) {
      nlohmann::json entry;
      entry["suite"] = r.name();
      entry["cases"] = r.size();
      nlohmann::json failures = nlohmann::json::array();
      for (const CheckCase& c : r.cases())
        if (!c.pass) failures.push_back(c.key);
      entry["failures"] = std::move(failures);
      suites.push_back(std::move(entry));
    }
    nlohmann::json j;
    j["seed"] = a.seed;
    j["grid"] = grid_description();
    j["suites"] = std::move(suites);
    out << j.dump(2) << '\n';
  } else {
    out << "grid: " << grid_description() << '\n';
    out << "seed: " << a.seed << '\n';
    for (const CheckReport& r : reports) {
      out << std::left << std::setw(22) << r.name() << std::right << std::setw(6) << r.size()
          << " cases  ";
      if (r.all_pass()) {
        out << "ok\n";
      } else {
        out << "FAILED (" << r.failures() << ")\n";
        const CheckCase* c = r.first_failure();
        out << "  first failure: " << c->key << '\n';
        if (!c->detail.empty()) out << "    " << c->detail << '\n';
      }
    }
    if (failed_suites == 0)
      out << "all " << reports.size() << " suites passed (" << total_cases << " cases)\n";
    else
      out << failed_suites << " of " << reports.size() << " suites failed\n";
  }
  return failed_suites == 0 ? kOk : kVerifyFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact degenerate r-Stirling / r-Bell computations with a boson-operator "
               "normal-ordering engine and Fock-space cross-checks"};
  app.require_subcommand(1);
  CommonArgs a;

  CLI::App* stirling = app.add_subcommand("stirling", "print a table of connection coefficients");
  stirling->add_option("--nmax", a.nmax, "deepest row")->required();
  stirling->add_option("--r", a.r, "shift parameter");
  stirling->add_option("--lambda", a.lambda, "degeneracy parameter (rational, e.g. 1/2)");
  stirling->add_option("--format", a.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* bell = app.add_subcommand("bell", "print Bell polynomials and their values");
  bell->add_option("--nmax", a.nmax, "highest degree")->required();
  bell->add_option("--r", a.r, "shift parameter");
  bell->add_option("--lambda", a.lambda, "degeneracy parameter (rational)");
  bell->add_option("--x", a.x, "evaluation point (rational)");
  bell->add_option("--format", a.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* norm = app.add_subcommand("normal-order", "normally order an operator expression");
  norm->add_option("expr", a.expr, "expression over a, ad, N, e.g. \"(N + 2)_{3, 1/2}\"")
      ->required();
  norm->add_option("--format", a.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* dob = app.add_subcommand("dobinski", "truncated exponential-series evaluation");
  dob->add_option("--k", a.k, "polynomial degree")->required();
  dob->add_option("--r", a.r, "shift parameter");
  dob->add_option("--lambda", a.lambda, "degeneracy parameter (rational)");
  dob->add_option("--x", a.x, "evaluation point (positive rational)");
  dob->add_option("--tol", a.tol, "tail-bound stopping tolerance");
  dob->add_option("--format", a.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* expect = app.add_subcommand("expect", "coherent-state expectation of (N + r)_{n,lambda}");
  expect->add_option("--n", a.n, "falling-factorial depth")->required();
  expect->add_option("--r", a.r, "shift parameter");
  expect->add_option("--lambda", a.lambda, "degeneracy parameter (rational)");
  expect->add_option("--z", a.z, "coherent amplitude, \"re\" or \"re,im\"");
  expect->add_option("--dim", a.dim, "Fock truncation dimension")->check(CLI::PositiveNumber);
  expect->add_option("--format", a.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* genfun = app.add_subcommand("genfun", "generating-function value against its closed form");
  genfun->add_option("--r", a.r, "shift parameter");
  genfun->add_option("--lambda", a.lambda, "degeneracy parameter (rational)");
  genfun->add_option("--z", a.z, "coherent amplitude, \"re\" or \"re,im\"");
  genfun->add_option("--t", a.t, "evaluation point of the generating variable");
  genfun->add_option("--dim", a.dim, "Fock truncation dimension")->check(CLI::PositiveNumber);
  genfun->add_option("--format", a.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run identity suites over the fixed grid");
  verify->add_option("--suite", a.suite, "suite name or \"all\"");
  verify->add_option("--seed", a.seed, "seed for the randomized word suite");
  verify->add_option("--format", a.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (stirling->parsed()) return run_stirling(a, out);
    if (bell->parsed()) return run_bell(a, out);
    if (norm->parsed()) return run_normal_order(a, out);
    if (dob->parsed()) return run_dobinski(a, out);
    if (expect->parsed()) return run_expect(a, out);
    if (genfun->parsed()) return run_genfun(a, out);
    if (verify->parsed()) {
      if (a.suite != "all" && !is_suite_name(a.suite)) {
        err << "error: unknown suite \"" << a.suite << "\"; valid names:";
        for (const std::string& name : suite_names()) err << ' ' << name;
        err << " all\n";
        return kUsage;
      }
      return run_verify(a, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (!e.expected().empty()) {
      err << "; expected:";
      for (const std::string& want : e.expected()) err << ' ' << want;
    }
    err << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace degenbell::cli
