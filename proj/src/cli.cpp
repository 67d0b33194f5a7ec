#include "cylwalk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cylwalk/asymptotics.hpp"
#include "cylwalk/error.hpp"
#include "cylwalk/formulas.hpp"
#include "cylwalk/lattice.hpp"
#include "cylwalk/verify.hpp"

namespace cylwalk::cli {

namespace {

using Json = nlohmann::ordered_json;

// Floats are serialised with 12 significant digits; formatting first and
// reparsing keeps JSON, CSV and text consistent and byte-stable.
std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json num(double v) { return Json::parse(fmt_double(v)); }

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt_double(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

// A document is either a flat record or a record whose "suites" array holds
// one flat record per row.
std::vector<Json> rows_of(const Json& doc) {
  if (!doc.contains("suites")) return {doc};
  std::vector<Json> rows;
  for (const auto& s : doc["suites"]) rows.push_back(s);
  return rows;
}

void write_csv(const Json& doc, std::ostream& os) {
  const auto rows = rows_of(doc);
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      os << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    os << '\n';
  }
}

void write_text(const Json& doc, std::ostream& os) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "suites") {
      for (const auto& s : value) {
        os << "suite " << s["suite"].get<std::string>() << ": " << s["passed"] << " passed, " << s["failed"] << " failed\n";
        for (const auto& f : s["failures"]) os << "  FAIL " << f.get<std::string>() << '\n';
      }
    } else {
      os << key << " = " << scalar_text(value) << '\n';
    }
  }
}

void write_doc(const Json& doc, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    write_csv(doc, os);
  } else if (format == "text") {
    write_text(doc, os);
  } else {
    os << doc.dump(2) << '\n';
  }
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FormulaMismatch:
    case ErrorKind::NotCyclic:
    case ErrorKind::InexactDivision:
    case ErrorKind::QuadratureFailure:
      return false;
    default:
      return true;
  }
}

struct PathArgs {
  int M = 0, N = 0;
  std::vector<int> a, e;
};

void add_path_options(CLI::App* cmd, PathArgs& p) {
  cmd->add_option("--M", p.M, "cylinder circumference")->required();
  cmd->add_option("--N", p.N, "number of steps")->required();
  cmd->add_option("--a", p.a, "start points, comma separated")->required()->delimiter(',');
  cmd->add_option("--e", p.e, "end points, comma separated")->required()->delimiter(',');
}

Json path_header(const char* command, const CylinderConfig& cfg) {
  Json doc;
  doc["command"] = command;
  doc["M"] = cfg.M;
  doc["N"] = cfg.N;
  doc["a"] = cfg.a;
  doc["e"] = cfg.e;
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonintersecting lattice paths on a cylinder"};
  app.require_subcommand(1);
  app.fallthrough();  // --format and --out may follow the subcommand
  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "write the result to a file instead of stdout");

  PathArgs count_args;
  double count_x = 1.0;
  std::string count_method = "both";
  int max_steps = EnumerationOptions{}.max_total_steps;
  unsigned workers = 1;
  auto* count = app.add_subcommand("count", "unsigned family count and generating function value");
  add_path_options(count, count_args);
  count->add_option("--x", count_x, "evaluation point of the generating function");
  count->add_option("--method", count_method)->check(CLI::IsMember({"det", "brute", "both"}));
  count->add_option("--max-steps", max_steps, "enumeration cap on r*N");
  count->add_option("--workers", workers, "enumeration threads (0 = all cores)");

  PathArgs gf_args;
  bool gf_signed = false;
  auto* gf = app.add_subcommand("gf", "generating function as a Laurent polynomial");
  add_path_options(gf, gf_args);
  gf->add_flag("--signed", gf_signed, "signed weights in x and y instead of the unsigned x-only count");

  int z_N = 0, z_r = 0, z_nu = 0;
  std::string z_method = "both";
  auto* z = app.add_subcommand("z", "families with equidistant start and end points");
  z->add_option("--N", z_N)->required();
  z->add_option("--r", z_r)->required();
  z->add_option("--nu", z_nu)->required();
  z->add_option("--method", z_method)->check(CLI::IsMember({"closed", "det", "both"}));

  int fe_nu = 0;
  std::optional<int> fe_N, fe_r;
  bool fe_integral = false, fe_density = false;
  auto* fe = app.add_subcommand("free-energy", "free energy per site");
  fe->add_option("--nu", fe_nu)->required();
  fe->add_option("--N", fe_N);
  fe->add_option("--r", fe_r);
  fe->add_flag("--integral", fe_integral, "r -> infinity limit at fixed N");
  fe->add_flag("--density", fe_density, "two-dimensional limit");

  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "lgv", "circulant", "trig", "asym"}));
  verify->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  Json doc;
  int status = kSuccess;
  try {
    if (*count) {
      const CylinderConfig cfg = validate_config(count_args.M, count_args.N, count_args.a, count_args.e);
      doc = path_header("count", cfg);
      doc["x"] = num(count_x);
      doc["method"] = count_method;
      std::optional<LaurentPoly2> det, brute;
      if (count_method != "brute") det = unsigned_count_gf(cfg);
      if (count_method != "det") {
        EnumerationOptions opts;
        opts.max_total_steps = max_steps;
        opts.workers = workers;
        opts.keep_families = false;
        brute = enumerate_families(cfg, opts).unsigned_gf.substitute_y(1);
      }
      const LaurentPoly2& gf_used = det ? *det : *brute;
      doc["count"] = gf_used.sum_coefficients().get_str();
      doc["value"] = num(gf_used.evaluate(count_x, 1.0).real());
      doc["gf"] = gf_used.to_string();
      if (det && brute) {
        const bool agree = *det == *brute;
        doc["brute_count"] = brute->sum_coefficients().get_str();
        doc["methods_agree"] = agree;
        if (!agree) {
          doc["brute_gf"] = brute->to_string();
          err << "determinant and exhaustive search disagree\n";
          status = kVerificationFailure;
        }
      }
    } else if (*gf) {
      const CylinderConfig cfg = validate_config(gf_args.M, gf_args.N, gf_args.a, gf_args.e);
      doc = path_header("gf", cfg);
      doc["signed"] = gf_signed;
      doc["gf"] = (gf_signed ? signed_gf_det(cfg) : unsigned_count_gf(cfg)).to_string();
    } else if (*z) {
      equidistant_config(z_N, z_r, z_nu);  // input validation for every method
      doc["command"] = "z";
      doc["N"] = z_N;
      doc["r"] = z_r;
      doc["nu"] = z_nu;
      doc["method"] = z_method;
      if (z_method == "both") {
        const ZCountResult res = z_count(z_N, z_r, z_nu);
        doc["closed_form"] = num(res.closed_form_value);
        doc["rounded"] = res.rounded.get_str();
        doc["exact"] = res.exact.get_str();
        doc["methods_agree"] = res.methods_agree;
        if (!res.methods_agree) {
          err << "closed form and determinant disagree\n";
          status = kVerificationFailure;
        }
      } else if (z_method == "closed") {
        const double v = z_closed_form(z_N, z_r, z_nu);
        doc["closed_form"] = num(v);
        doc["rounded"] = mpz_class(std::round(v)).get_str();
      } else {
        doc["exact"] = z_exact(z_N, z_r, z_nu).get_str();
      }
    } else if (*fe) {
      const int modes = (fe_r ? 1 : 0) + (fe_integral ? 1 : 0) + (fe_density ? 1 : 0);
      if (modes != 1 || (fe_density && fe_N) || (!fe_density && !fe_N)) {
        err << "error: free-energy needs exactly one of --N with --r, --N with --integral, or --density\n";
        return kInvalidInput;
      }
      const FreeEnergyReport rep = fe_density  ? free_energy_density(fe_nu)
                                   : fe_r      ? free_energy_finite(*fe_N, *fe_r, fe_nu)
                                               : free_energy_integral(*fe_N, fe_nu);
      doc["command"] = "free-energy";
      doc["nu"] = rep.nu;
      doc["N"] = rep.N ? Json(*rep.N) : Json(nullptr);
      doc["method"] = std::string(to_string(rep.method));
      doc["value"] = num(rep.value);
      doc["r_used"] = rep.r_used;
      doc["error_estimate"] = num(rep.error_estimate);
    } else {
      const Tolerance tol = Tolerance::from_env();
      doc["command"] = "verify";
      doc["suite"] = suite;
      doc["seed"] = seed;
      doc["tolerance"] = num(tol.rel);
      bool ok = true;
      Json suites = Json::array();
      for (const SuiteResult& res : run_suites(suite, seed, tol)) {
        Json s;
        s["suite"] = res.name;
        s["passed"] = res.passed;
        s["failed"] = res.failed;
        s["failures"] = res.failures;
        suites.push_back(s);
        ok = ok && res.ok();
      }
      doc["ok"] = ok;
      doc["suites"] = suites;
      if (!ok) status = kVerificationFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kInvalidInput : kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (out_path.empty()) {
    write_doc(doc, format, out);
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << '\n';
      return kInvalidInput;
    }
    write_doc(doc, format, file);
  }
  return status;
}

}  // namespace cylwalk::cli
