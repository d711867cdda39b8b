// Command-line front end: generation, computation, verification, and
// plot-data export for the recursive Mandelbrot matrix family.
//
// Exit codes: 0 success / all checks passed, 1 check failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mandelmat/eigvec.hpp"
#include "mandelmat/exact.hpp"
#include "mandelmat/homotopy.hpp"
#include "mandelmat/io.hpp"
#include "mandelmat/matgen.hpp"
#include "mandelmat/polyeval.hpp"
#include "mandelmat/singular.hpp"
#include "mandelmat/verify.hpp"

namespace {

namespace mm = mandelmat;
namespace fs = std::filesystem;

fs::path resolve_out(const std::string& out, const std::string& fallback) {
  fs::path p = out.empty() ? fs::path(fallback) : fs::path(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("MANDELMAT_OUT_DIR"); dir != nullptr)
      p = fs::path(dir) / p;
  }
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  return p;
}

std::string fmt(double v) { return mm::format_double(v); }

int cmd_gen(int n, const std::string& kind, const std::string& format,
            const std::string& out) {
  if (format == "dot") {
    const mm::Digraph g = mm::digraph(n);
    const fs::path path = resolve_out(out, "g" + std::to_string(n) + ".dot");
    mm::export_dot(g, path);
    mm::write_json_sidecar(fs::path(path).replace_extension(".json"), n,
                           g.vertex_count,
                           static_cast<mm::Index>(g.edges.size()), "digraph");
    std::cout << path.string() << "\n";
    return 0;
  }
  mm::SparseIntMatrix m;
  if (kind == "m") m = mm::mandelbrot_matrix(n);
  else if (kind == "s") m = mm::s_matrix(n);
  else if (kind == "jw") m = mm::jordan_wielandt(n);
  else if (kind == "inv") m = mm::mandelbrot_inverse(n);
  else if (kind == "j") m = mm::anti_identity(mm::family_dim(n));
  else throw CLI::ValidationError("--kind", "unknown matrix kind " + kind);
  const fs::path path =
      resolve_out(out, kind + std::to_string(n) + ".mtx");
  mm::export_matrix_market(m, path);
  mm::write_json_sidecar(fs::path(path).replace_extension(".json"), n, m.dim(),
                         m.nnz(), kind);
  std::cout << path.string() << "\n";
  return 0;
}

std::string fmt15(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

int cmd_perron(int n, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const mm::PerronResult p = tol > 0 ? mm::perron_root(n, tol) : mm::perron_root(n);
  const auto t1 = std::chrono::steady_clock::now();
  std::cout << "seed       " << fmt15(p.seed) << "\n";
  std::cout << "rho        " << fmt15(p.rho) << "\n";
  std::cout << "iterations " << p.iterations << "\n";
  std::cout << "residual   " << fmt(p.residual) << "\n";
  std::cout << "time_us    "
            << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()
            << "\n";
  return 0;
}

int cmd_eigvec(int n, const std::string& method, const std::string& norm,
               const std::string& out) {
  mm::EigvecResult v = method == "solve"
                           ? mm::eigenvector_solve(n, mm::perron_root(n).rho)
                           : mm::eigenvector_recursive(n);
  if (norm == "first") v = mm::renormalize(v, mm::Normalization::first_entry_one);
  if (!out.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(v.components.size());
    for (std::size_t i = 0; i < v.components.size(); ++i)
      rows.push_back({std::to_string(i + 1), fmt(v.components[i]),
                      fmt(std::log2(v.components[i]))});
    mm::write_csv(resolve_out(out, ""), {"index", "component", "log2_component"},
                  rows);
  }
  std::cout << "n          " << v.n << "\n";
  std::cout << "rho        " << fmt(v.rho) << "\n";
  std::cout << "method     " << mm::to_string(v.method) << "\n";
  std::cout << "dim        " << v.components.size() << "\n";
  if (n >= 2) std::cout << "middle     " << fmt(mm::middle_entry(v)) << "\n";
  return 0;
}

int cmd_svd(int n, double tol, const std::string& out) {
  const mm::SingularTriple t =
      tol > 0 ? mm::dominant_singular_triple(n, tol) : mm::dominant_singular_triple(n);
  std::cout << "n          " << t.n << "\n";
  std::cout << "sigma      " << fmt(t.sigma) << "\n";
  std::cout << "iterations " << t.iterations << "\n";
  std::cout << "bound      " << fmt(mm::sigma_bound_value(n)) << "\n";
  if (n >= 2) {
    const double slack = (mm::sigma_bound_value(n) - t.sigma) / t.sigma;
    std::cout << "slack      " << fmt(slack) << "\n";
  }
  if (!out.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(t.u.size());
    for (std::size_t i = 0; i < t.u.size(); ++i)
      rows.push_back({std::to_string(i + 1), fmt(std::abs(t.u[i])),
                      fmt(std::log2(std::abs(t.u[i])))});
    mm::write_csv(resolve_out(out, ""), {"index", "abs_u", "log2_abs_u"}, rows);
  }
  return 0;
}

int cmd_svals(int n, bool allow_large, const std::string& out) {
  const mm::SingularSpectrum s = mm::all_singular_values(n, allow_large);
  if (!out.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < s.sigmas.size(); ++i)
      rows.push_back({std::to_string(n), std::to_string(i + 1),
                      fmt(std::log2(static_cast<double>(i + 1))),
                      fmt(s.sigmas[i]), fmt(s.s_eigs[i])});
    mm::write_csv(resolve_out(out, ""),
                  {"n", "index", "log2_index", "sigma", "s_eig"}, rows);
  }
  std::cout << "n          " << s.n << "\n";
  std::cout << "sigma_max  " << fmt(s.sigmas.front()) << "\n";
  std::cout << "sigma_min  " << fmt(s.sigmas.back()) << "\n";
  std::cout << "min_gap    " << fmt(mm::min_magnitude_gap(s)) << "\n";
  return 0;
}

int cmd_spectrum(int n, bool allow_large, const std::string& out) {
  const auto eigs = mm::spectrum_small(n, allow_large);
  if (!out.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(eigs.size());
    for (const auto& z : eigs) rows.push_back({fmt(z.real()), fmt(z.imag())});
    mm::write_csv(resolve_out(out, ""), {"re", "im"}, rows);
  }
  std::cout << "n      " << n << "\n";
  std::cout << "count  " << eigs.size() << "\n";
  return 0;
}

int cmd_homotopy(int n, int max_n, int steps, bool chain, const std::string& out) {
  std::vector<std::vector<std::string>> rows;
  if (chain) {
    const mm::ChainedData data = mm::chained_figure_data(max_n, steps);
    for (const auto& pt : data.points)
      rows.push_back({std::to_string(pt.path_id), fmt(pt.t), fmt(pt.abs_lambda),
                      fmt(pt.lambda_squared),
                      fmt(2.0193 * pt.t - 0.7914)});
    std::cout << "stages      " << data.stage_path_counts.size() << "\n";
    for (std::size_t s = 0; s < data.stage_path_counts.size(); ++s)
      std::cout << "paths[" << s + 1 << "]    " << data.stage_path_counts[s] << "\n";
  } else {
    const auto paths = mm::track_paths(n, steps);
    int id = 0;
    for (const auto& p : paths) {
      for (const auto& [eps, lambda] : p.samples)
        rows.push_back({std::to_string(id), fmt(n + eps), fmt(std::abs(lambda)),
                        fmt(lambda * lambda), fmt(2.0193 * (n + eps) - 0.7914)});
      ++id;
    }
    std::cout << "paths       " << paths.size() << "\n";
  }
  if (!out.empty())
    mm::write_csv(resolve_out(out, ""),
                  {"path_id", "t", "abs_lambda", "lambda_squared", "bound_sq"},
                  rows);
  return 0;
}

void write_gnuplot_stub(const std::string& kind, const fs::path& csv,
                        const fs::path& script) {
  std::ostringstream os;
  os << "set datafile separator ','\n";
  if (kind == "eigvec" || kind == "singvec") {
    os << "set logscale y 2\n";
    os << "plot '" << csv.string() << "' skip 1 using 1:2 with points pt 7 ps 0.2 notitle\n";
  } else if (kind == "spectrum_complex") {
    os << "set size ratio -1\n";
    os << "plot '" << csv.string() << "' skip 1 using 1:2 with points pt 7 ps 0.4 notitle\n";
  } else if (kind == "svals_all") {
    os << "plot '" << csv.string() << "' skip 1 using 3:4 with points pt 7 ps 0.3 notitle\n";
  } else {
    os << "plot '" << csv.string() << "' skip 1 using 2:3 with points pt 7 ps 0.2 notitle, \\\n";
    os << "     sqrt(2.0193*x - 0.7914) with lines dt 2 title 'bound'\n";
  }
  mm::atomic_write_text(script, os.str());
}

int cmd_export(const std::string& kind, int n, int min_n, bool allow_large,
               int steps, const std::string& out, bool gnuplot) {
  if (gnuplot && !out.empty()) {
    const fs::path csv = resolve_out(out, "");
    write_gnuplot_stub(kind, csv, fs::path(csv).replace_extension(".gp"));
  }
  if (kind == "eigvec") {
    return cmd_eigvec(n, "recursive", "first", out);
  }
  if (kind == "singvec") {
    return cmd_svd(n, 0.0, out);
  }
  if (kind == "spectrum_complex") {
    return cmd_spectrum(n, allow_large, out);
  }
  if (kind == "svals_all") {
    std::vector<std::vector<std::string>> rows;
    for (int k = std::min(min_n, n); k <= n; ++k) {
      const mm::SingularSpectrum s = mm::all_singular_values(k, allow_large);
      for (std::size_t i = 0; i < s.sigmas.size(); ++i)
        rows.push_back({std::to_string(k), std::to_string(i + 1),
                        fmt(std::log2(static_cast<double>(i + 1))),
                        fmt(s.sigmas[i]), fmt(s.s_eigs[i])});
    }
    mm::write_csv(resolve_out(out, "svals.csv"),
                  {"n", "index", "log2_index", "sigma", "s_eig"}, rows);
    std::cout << "rows   " << rows.size() << "\n";
    return 0;
  }
  if (kind == "homotopy") {
    return cmd_homotopy(1, n, steps, /*chain=*/true, out);
  }
  throw CLI::ValidationError("--kind", "unknown export kind " + kind);
}

int cmd_verify(int max_n, bool allow_large, const std::string& out) {
  mm::VerifyOptions opts;
  opts.max_n = max_n;
  opts.allow_large = allow_large;
  const auto results = mm::run_verification(opts);
  std::cout << mm::format_report(results);
  if (!out.empty()) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& c = results[i];
      os << "  {\"name\": \"" << c.name << "\", \"n\": " << c.n
         << ", \"statistic\": " << mm::format_double(c.statistic)
         << ", \"pass\": " << (c.pass ? "true" : "false") << "}"
         << (i + 1 < results.size() ? ",\n" : "\n");
    }
    os << "]\n";
    mm::atomic_write_text(resolve_out(out, ""), os.str());
  }
  return mm::all_passed(results) ? 0 : 1;
}

int cmd_conjectures(int n, const std::string& out) {
  const double slack = mm::sigma_bound_check(n);
  std::ostringstream os;
  os << "{\n  \"n\": " << n << ",\n  \"slack\": " << mm::format_double(slack)
     << ",\n  \"discriminant_positive\": ";
  if (n <= mm::kCharPolyDefaultCeiling)
    os << (mm::discriminant_positivity(n) ? "true" : "false");
  else
    os << "null";
  os << "\n}\n";
  const std::string text = os.str();
  std::cout << text;
  if (!out.empty()) mm::atomic_write_text(resolve_out(out, ""), text);
  return slack >= 0.0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recursive Mandelbrot matrix family: construction, dominant "
               "eigenstructure, singular spectra, eigenvalue homotopies"};
  app.require_subcommand(1);

  int n = 7, max_n = 5, min_n = 7, steps = 256;
  double tol = 0.0;
  bool allow_large = false, chain = false;
  std::string out, format = "mm", kind = "m", method = "solve", norm = "last";

  auto* gen = app.add_subcommand("gen", "Write a family matrix (Matrix Market + JSON sidecar) or digraph (DOT)");
  gen->add_option("--n", n, "order")->required();
  gen->add_option("--kind", kind, "m | s | jw | inv | j");
  gen->add_option("--format", format, "mm | dot")
      ->check(CLI::IsMember({"mm", "dot"}));
  gen->add_option("--out", out, "output path");

  auto* perron = app.add_subcommand("perron", "Dominant eigenvalue by Newton on the C recurrence");
  perron->add_option("--n", n, "order")->required();
  perron->add_option("--tol", tol, "relative step tolerance");

  auto* eigvec = app.add_subcommand("eigvec", "Dominant eigenvector (CSV: index,component,log2_component)");
  eigvec->add_option("--n", n, "order")->required();
  eigvec->add_option("--method", method, "solve | recursive")
      ->check(CLI::IsMember({"solve", "recursive"}));
  eigvec->add_option("--normalization", norm, "last | first")
      ->check(CLI::IsMember({"last", "first"}));
  eigvec->add_option("--out", out, "CSV path");

  auto* svd = app.add_subcommand("svd", "Dominant singular triple by power iteration on S_n (CSV: index,abs_u,log2_abs_u)");
  svd->add_option("--n", n, "order")->required();
  svd->add_option("--tol", tol, "residual tolerance");
  svd->add_option("--out", out, "CSV path for |u|");

  auto* svals = app.add_subcommand("svals", "Full singular spectrum of M_n (CSV: n,index,log2_index,sigma,s_eig)");
  svals->add_option("--n", n, "order")->required();
  svals->add_flag("--allow-large", allow_large, "raise the dense ceiling to 13");
  svals->add_option("--out", out, "CSV path");

  auto* spectrum = app.add_subcommand("spectrum", "All eigenvalues of M_n (CSV: re,im)");
  spectrum->add_option("--n", n, "order")->required();
  spectrum->add_flag("--allow-large", allow_large, "raise the dense ceiling to 12");
  spectrum->add_option("--out", out, "CSV path");

  auto* homotopy = app.add_subcommand("homotopy", "Eigenvalue paths of T(eps) (CSV: path_id,t,abs_lambda,lambda_squared,bound_sq)");
  homotopy->add_option("--n", n, "order (single stage)");
  homotopy->add_option("--max-n", max_n, "stages 1..max_n-1 when chaining");
  homotopy->add_option("--steps", steps, "grid steps per stage");
  homotopy->add_flag("--chain", chain, "chain stages in the figure-12 layout");
  homotopy->add_option("--out", out, "CSV path");

  auto* verify = app.add_subcommand("verify", "Run the invariant sweep; exit 0 iff all checks pass");
  verify->add_option("--max-n", max_n, "largest order to sweep")->required();
  verify->add_flag("--allow-large", allow_large, "raise the dense ceilings");
  verify->add_option("--out", out, "also write the checks as JSON {name, n, statistic, pass}");

  auto* conjectures = app.add_subcommand("conjectures", "JSON report {n, slack, discriminant_positive} for the two conjectures");
  conjectures->add_option("--n", n, "order")->required();
  conjectures->add_option("--out", out, "JSON path");

  auto* exp = app.add_subcommand("export", "Plot-data exports for the figure reproductions");
  exp->add_option("--kind", kind, "eigvec | singvec | spectrum_complex | svals_all | homotopy")
      ->required();
  exp->add_option("--n", n, "order (or n_max for homotopy)")->required();
  exp->add_option("--min-n", min_n, "first order for svals_all");
  exp->add_option("--steps", steps, "grid steps per homotopy stage");
  exp->add_flag("--allow-large", allow_large, "raise the dense ceilings");
  exp->add_option("--out", out, "output path")->required();
  bool gnuplot = false;
  exp->add_flag("--gnuplot", gnuplot, "also write a gnuplot script stub next to the CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(n, kind, format, out);
    if (perron->parsed()) return cmd_perron(n, tol);
    if (eigvec->parsed()) return cmd_eigvec(n, method, norm, out);
    if (svd->parsed()) return cmd_svd(n, tol, out);
    if (svals->parsed()) return cmd_svals(n, allow_large, out);
    if (spectrum->parsed()) return cmd_spectrum(n, allow_large, out);
    if (homotopy->parsed()) return cmd_homotopy(n, max_n, steps, chain, out);
    if (verify->parsed()) return cmd_verify(max_n, allow_large, out);
    if (conjectures->parsed()) return cmd_conjectures(n, out);
    if (exp->parsed())
      return cmd_export(kind, n, min_n, allow_large, steps, out, gnuplot);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "size error: " << e.what() << " (see --allow-large)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
