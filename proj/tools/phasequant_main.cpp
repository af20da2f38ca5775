#include <complex>
#include <filesystem>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "phasequant/coherent.hpp"
#include "phasequant/errors.hpp"
#include "phasequant/irrep.hpp"
#include "phasequant/report_io.hpp"
#include "phasequant/reproduce.hpp"
#include "phasequant/spectral.hpp"
#include "phasequant/two_mode.hpp"

namespace {

using nlohmann::json;
using phasequant::report_io::csv_line;
using phasequant::report_io::format_double;
using phasequant::report_io::write_text;

int run_reproduce(const std::string& only, const std::string& out) {
  const auto& registry = phasequant::reproduce::claim_registry();
  std::vector<int> ids;
  if (only.empty()) {
    for (const auto& info : registry) ids.push_back(info.id);
  } else {
    for (const auto& info : registry)
      if (only == info.slug) ids.push_back(info.id);
    if (ids.empty())
      throw phasequant::domain_error("reproduce: unknown claim slug '" + only + "'");
  }

  if (!out.empty()) std::filesystem::create_directories(out);

  json report;
  report["schema"] = "phasequant/1";
  report["command"] = "reproduce";
  report["claims"] = json::array();
  bool all_pass = true;
  int passed = 0;
  for (int id : ids) {
    const phasequant::reproduce::ClaimResult res = phasequant::reproduce::run_claim(id);
    all_pass = all_pass && res.pass;
    passed += res.pass ? 1 : 0;
    std::printf("[%s] claim %2d %-20s %s\n", res.pass ? "PASS" : "FAIL", res.id,
                res.slug.c_str(), res.details.c_str());
    json entry;
    entry["id"] = res.id;
    entry["slug"] = res.slug;
    entry["pass"] = res.pass;
    entry["details"] = res.details;
    entry["values"] = json::object();
    for (const auto& [name, value] : res.values) entry["values"][name] = value;
    report["claims"].push_back(entry);
    if (!out.empty()) {
      std::string csv = csv_line({"name", "value"});
      csv += csv_line({"pass", res.pass ? "1" : "0"});
      for (const auto& [name, value] : res.values) csv += csv_line({name, format_double(value)});
      write_text((std::filesystem::path(out) / (res.slug + ".csv")).string(), csv);
    }
  }
  report["all_pass"] = all_pass;
  std::printf("%d/%zu claims passed\n", passed, ids.size());
  // report.json goes last so its presence marks a complete run.
  if (!out.empty())
    write_text((std::filesystem::path(out) / "report.json").string(), report.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

int run_scan_k(double lo, double hi, double tol, double rho_max, const std::string& out) {
  const phasequant::spectral::ScanReport rep =
      phasequant::spectral::threshold_scan(lo, hi, tol, rho_max);
  json doc;
  doc["schema"] = "phasequant/1";
  doc["command"] = "scan-k";
  doc["k_lo"] = lo;
  doc["k_hi"] = hi;
  doc["tol"] = tol;
  doc["rho_max"] = rho_max;
  doc["bracket"] = {rep.bracket_lo, rep.bracket_hi};
  doc["evaluations"] = json::array();
  for (std::size_t i = 0; i < rep.k_grid.size(); ++i) {
    doc["evaluations"].push_back({{"k", rep.k_grid[i]},
                                  {"sup_ratio", rep.sup_ratio[i]},
                                  {"argmax_rho", rep.argmax_rho[i]}});
  }
  write_text(out, doc.dump(2) + "\n");
  return 0;
}

int run_spectrum(double k, int dim, const std::string& out) {
  const phasequant::spectral::CosSpectrum spec = phasequant::spectral::cos_spectrum(k, dim);
  std::string csv = csv_line({"index", "eigenvalue"});
  for (int i = 0; i < spec.eigenvalues.size(); ++i)
    csv += csv_line({std::to_string(i), format_double(spec.eigenvalues[i])});
  write_text(out, csv);
  return 0;
}

int run_coherent(double k, double rho, double alpha, double omega, int dim, double quad_tol,
                 const std::string& out) {
  namespace coh = phasequant::coherent;
  coh::CoherentSpec spec;
  spec.params.k = k;
  spec.params.omega_angle = omega;
  spec.rho = rho;
  spec.alpha = alpha;
  const int used_dim = dim > 0 ? dim : coh::recommended_dim(spec);
  const phasequant::irrep::StateVector v = coh::coherent_vector(spec, used_dim);

  std::string csv = csv_line({"k", "rho", "alpha", "quantity", "value", "method"});
  const auto row = [&](const std::string& quantity, double value, const std::string& method) {
    csv += csv_line({format_double(k), format_double(rho), format_double(alpha), quantity,
                     format_double(value), method});
  };

  row("dim", used_dim, "truncation");
  row("tail_bound", v.tail_bound, "truncation");

  const coh::K12Moments k12 = coh::k12_moments(spec);
  row("mean_K1", k12.mean_K1, "closed_form");
  row("mean_K2", k12.mean_K2, "closed_form");
  row("var_K1", k12.var_K1, "closed_form");
  row("var_K2", k12.var_K2, "closed_form");

  const coh::K3Moments k3 = coh::k3_moments(spec);
  row("mean_K3", k3.mean, "closed_form");
  row("second_K3", k3.second, "closed_form");
  row("var_K3", k3.var, "closed_form");
  row("mean_n", k3.mean - k, "closed_form");
  row("var_n", k3.var, "closed_form");
  if (k3.mean > k) row("fano", k3.var / (k3.mean - k), "closed_form");

  if (rho <= 320.0) {
    row("g", coh::g_function(k, rho, coh::GMethod::series), "series");
    if (rho > 0.0) row("g", coh::g_function(k, rho, coh::GMethod::integral), "integral");
  }
  row("g_over_bessel", coh::g_over_bessel(k, rho), "series");

  const coh::TrigExpectation trig = coh::trig_expectation(spec);
  row("mean_cos", trig.mean_cos, "closed_form");
  row("mean_sin", trig.mean_sin, "closed_form");
  row("second_moment_cos", coh::trig_second_moment(spec, used_dim), "matrix");

  const coh::UncertaintyCheck unc = coh::uncertainty_check(spec);
  row("uncertainty_lhs", unc.lhs, "closed_form");
  row("uncertainty_rhs", unc.rhs, "closed_form");

  coh::QuadConfig cfg;
  cfg.target_abs_err = quad_tol;
  const coh::CompletenessResult comp = coh::completeness_check(k, 0, cfg);
  row("completeness_integral", comp.integral, "quadrature");
  row("completeness_tail_bound", comp.tail_bound, "quadrature");

  write_text(out, csv);
  return 0;
}

int run_two_mode(int M, const std::string& out) {
  namespace tm = phasequant::two_mode;
  const auto sectors = tm::irrep_decomposition(M);
  const double comm = tm::two_mode_commutator_defect(M);
  const tm::DiracCheck dirac = tm::dirac_sqrt_check(M);

  json doc;
  doc["schema"] = "phasequant/1";
  doc["command"] = "two-mode";
  doc["M"] = M;
  doc["commutator_defect"] = comm;
  doc["sqrt_defect"] = dirac.defect;
  doc["sqrt_eigen_ok"] = dirac.eigen_ok;
  doc["sectors"] = json::array();
  for (const auto& sec : sectors) {
    doc["sectors"].push_back({{"delta", sec.delta},
                              {"k", sec.k},
                              {"length", sec.states.size()},
                              {"element_defect", sec.max_element_defect},
                              {"k3_defect", sec.max_k3_defect}});
  }
  write_text(out, doc.dump(2) + "\n");
  return 0;
}

int run_dump_operator(const std::string& kind_str, double k, double omega, int dim,
                      const std::string& out) {
  namespace ir = phasequant::irrep;
  const ir::OperatorKind kind = ir::kind_from_name(kind_str);
  ir::IrrepParams params;
  params.k = k;
  params.omega_angle = omega;
  const ir::TridiagonalOperator op = ir::build_operator(kind, params, dim);
  const Eigen::MatrixXcd dense = op.dense();

  std::string csv = csv_line({"row", "col", "re", "im"});
  for (int i = 0; i < dim; ++i) {
    for (int j = std::max(0, i - 1); j <= std::min(dim - 1, i + 1); ++j) {
      const std::complex<double> v = dense(i, j);
      if (v == std::complex<double>(0.0, 0.0)) continue;
      csv += csv_line({std::to_string(i), std::to_string(j), format_double(v.real()),
                       format_double(v.imag())});
    }
  }
  write_text(out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated ladder-representation phase observables: operators, coherent states, "
               "spectra, and the headline numerical checks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI file (flags take precedence)");

  std::string rep_only, rep_out;
  CLI::App* rep = app.add_subcommand("reproduce", "Run the headline numerical checks");
  rep->add_option("--only", rep_only, "Run a single check by slug");
  rep->add_option("--out", rep_out, "Directory for report.json and per-claim CSVs")
      ->envname("PHASEQUANT_OUT");

  double scan_lo = 0.2, scan_hi = 0.5, scan_tol = 1e-3, scan_rho_max = 500.0;
  std::string scan_out = "-";
  CLI::App* scan = app.add_subcommand("scan-k", "Bisect the admissibility threshold in k");
  scan->add_option("--lo", scan_lo, "Lower end of the k interval");
  scan->add_option("--hi", scan_hi, "Upper end of the k interval");
  scan->add_option("--tol", scan_tol, "Bracket width target");
  scan->add_option("--rho-max", scan_rho_max, "Upper end of the rho grid");
  scan->add_option("--out", scan_out, "Output path ('-' for stdout)");

  double spec_k = 1.0;
  int spec_dim = 400;
  std::string spec_out = "-";
  CLI::App* spec = app.add_subcommand("spectrum", "Eigenvalues of the truncated cosine operator");
  spec->add_option("--k", spec_k, "Representation index")->required();
  spec->add_option("--dim", spec_dim, "Truncation dimension");
  spec->add_option("--out", spec_out, "Output path ('-' for stdout)");

  double coh_k = 1.0, coh_rho = 1.0, coh_alpha = 0.0, coh_omega = 0.0, coh_quad_tol = 1e-9;
  int coh_dim = 0;
  std::string coh_out = "-";
  CLI::App* coh = app.add_subcommand("coherent", "Moments and diagnostics of a coherent state");
  coh->add_option("--k", coh_k, "Representation index")->required();
  coh->add_option("--rho", coh_rho, "Radial parameter |z|")->required();
  coh->add_option("--alpha", coh_alpha, "Phase of z");
  coh->add_option("--omega", coh_omega, "Dressing phase of the ladder operators");
  coh->add_option("--dim", coh_dim, "Truncation dimension (0 = automatic)");
  coh->add_option("--quad-tol", coh_quad_tol, "Quadrature error budget");
  coh->add_option("--out", coh_out, "Output path ('-' for stdout)");

  int tm_M = 12;
  std::string tm_out = "-";
  CLI::App* tm = app.add_subcommand("two-mode", "Two-oscillator sector decomposition");
  tm->add_option("--M", tm_M, "Per-mode cutoff");
  tm->add_option("--out", tm_out, "Output path ('-' for stdout)");

  std::string dump_kind = "K1", dump_out = "-";
  double dump_k = 1.0, dump_omega = 0.0;
  int dump_dim = 16;
  CLI::App* dump = app.add_subcommand("dump-operator", "Nonzero entries of a truncated generator");
  dump->add_option("--kind", dump_kind, "K1, K2, K3, Kplus, Kminus, CosPhi, SinPhi")->required();
  dump->add_option("--k", dump_k, "Representation index");
  dump->add_option("--omega", dump_omega, "Dressing phase");
  dump->add_option("--dim", dump_dim, "Truncation dimension");
  dump->add_option("--out", dump_out, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rep->parsed()) return run_reproduce(rep_only, rep_out);
    if (scan->parsed()) return run_scan_k(scan_lo, scan_hi, scan_tol, scan_rho_max, scan_out);
    if (spec->parsed()) return run_spectrum(spec_k, spec_dim, spec_out);
    if (coh->parsed())
      return run_coherent(coh_k, coh_rho, coh_alpha, coh_omega, coh_dim, coh_quad_tol, coh_out);
    if (tm->parsed()) return run_two_mode(tm_M, tm_out);
    if (dump->parsed())
      return run_dump_operator(dump_kind, dump_k, dump_omega, dump_dim, dump_out);
  } catch (const phasequant::truncation_error& e) {
    std::fprintf(stderr, "error: %s (required dim %d)\n", e.what(), e.required_dim);
    return 3;
  } catch (const phasequant::convergence_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const phasequant::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const phasequant::mismatch_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
