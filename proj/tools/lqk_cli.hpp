#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with string arguments and capture both streams.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lqk/certifier.hpp"
#include "lqk/kernel.hpp"
#include "lqk/norms.hpp"
#include "lqk/series_check.hpp"

namespace lqk::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { ok = 0, claim_violated = 1, usage = 2 };

using json = nlohmann::ordered_json;

/// Round-trip decimal form used for every CSV field.
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// UTC time from SOURCE_DATE_EPOCH when set, otherwise the wall clock.
inline std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
    try {
      t = static_cast<std::time_t>(std::stoll(env));
    } catch (const std::exception&) {
    }
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline json manifest(const std::string& subcommand, json params,
                     std::optional<std::uint64_t> seed = std::nullopt) {
  json m;
  m["tool"] = "lqk";
  m["version"] = kVersion;
  m["subcommand"] = subcommand;
  m["parameters"] = std::move(params);
  m["seed"] = seed ? json(*seed) : json(nullptr);
  m["timestamp"] = timestamp();
  return m;
}

/// Manifest as leading `# ` comment lines of a CSV file.
inline std::string csv_manifest(const json& m) { return "# manifest: " + m.dump() + "\n"; }

inline json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

enum class Format { text, json, csv };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Writes `content` to `path`, or to `fallback` if path is empty.
inline void emit(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw domain_error("cannot open output file '" + path + "'");
  f << content;
}

// ---------------------------------------------------------------------------
// norm

struct NormOpts {
  int p = 2;
  double q = 2, r = 2;
  std::vector<int> alpha{0, 0, 0};
  bool oracle = false;
};

inline int cmd_norm(const NormOpts& o, Format fmt, Streams s) {
  const MultiIndex a{o.alpha.at(0), o.alpha.at(1), o.alpha.at(2)};
  const DomainParams d(o.p, o.q, o.r);
  const double value = norm_sq(d.p(), d.q(), d.r(), a);
  std::optional<QuadratureResult> quad;
  double rel = 0.0;
  if (o.oracle) {
    quad = norm_sq_quadrature(d.p(), d.q(), d.r(), a);
    rel = std::abs(quad->value - value) / value;
  }
  const bool consistent = !quad || rel <= 1e-8;

  json params{{"p", o.p}, {"q", o.q}, {"r", o.r}, {"alpha", o.alpha}, {"oracle", o.oracle}};
  if (fmt == Format::json) {
    json j;
    j["manifest"] = manifest("norm", params);
    j["norm_sq"] = value;
    if (quad) j["oracle"] = {{"value", quad->value}, {"error_estimate", quad->error_estimate}, {"rel_err", rel}};
    s.out << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    s.out << csv_manifest(manifest("norm", params)) << "p,q,r,a1,a2,a3,norm_sq,oracle,rel_err\n"
          << o.p << "," << num(o.q) << "," << num(o.r) << "," << a.a1 << "," << a.a2 << "," << a.a3
          << "," << num(value) << "," << (quad ? num(quad->value) : "") << ","
          << (quad ? num(rel) : "") << "\n";
  } else {
    s.out << "norm_sq = " << num(value) << "\n";
    if (quad) s.out << "oracle  = " << num(quad->value) << "  rel_err = " << num(rel) << "\n";
  }
  if (!consistent) s.err << "error: closed form and quadrature disagree (rel_err " << rel << ")\n";
  return consistent ? ok : claim_violated;
}

// ---------------------------------------------------------------------------
// kernel

struct KernelOpts {
  int p = 2;
  double q = 2, r = 2;
  std::vector<double> nu1{0, 0}, nu2{0, 0}, nu3{0, 0};
  bool series = false;
  bool printed_variant = false;
};

inline int cmd_kernel(const KernelOpts& o, Format fmt, Streams s) {
  const DomainParams d(o.p, o.q, o.r);
  const KernelArgs args{{o.nu1[0], o.nu1[1]}, {o.nu2[0], o.nu2[1]}, {o.nu3[0], o.nu3[1]}};
  if (o.p == 1 && args.nu1 != cplx{}) throw domain_error("kernel: p = 1 is available on the slice nu1 = 0 only");
  if (o.printed_variant && o.p != 2) throw domain_error("kernel: --printed-variant needs p = 2");

  const KernelValue closed =
      o.p == 2 ? kernel_closed_p2(d.q(), d.r(), args,
                                  o.printed_variant ? Nu1Base::printed_square : Nu1Base::one_minus_nu1)
               : kernel_slice_closed_p1(d.q(), d.r(), args.nu2, args.nu3);
  std::optional<KernelValue> series;
  if (o.series)
    series = o.p == 2 ? kernel_series_p2(d.q(), d.r(), args)
                      : kernel_slice_series_p1(d.q(), d.r(), args.nu2, args.nu3);

  json params{{"p", o.p},     {"q", o.q},     {"r", o.r},
              {"nu1", o.nu1}, {"nu2", o.nu2}, {"nu3", o.nu3},
              {"series", o.series}, {"printed_variant", o.printed_variant}};
  if (fmt == Format::json) {
    json j;
    j["manifest"] = manifest("kernel", params);
    j["closed"] = cplx_json(closed.value);
    if (series) j["series"] = {{"value", cplx_json(series->value)}, {"tail_bound", series->tail_bound}};
    s.out << j.dump(2) << "\n";
  } else if (fmt == Format::csv) {
    s.out << csv_manifest(manifest("kernel", params))
          << "closed_re,closed_im,series_re,series_im,tail_bound\n"
          << num(closed.value.real()) << "," << num(closed.value.imag()) << ","
          << (series ? num(series->value.real()) : "") << ","
          << (series ? num(series->value.imag()) : "") << ","
          << (series ? num(series->tail_bound) : "") << "\n";
  } else {
    s.out << "K (closed) = " << num(closed.value.real()) << " + " << num(closed.value.imag()) << "i\n";
    if (series)
      s.out << "K (series) = " << num(series->value.real()) << " + " << num(series->value.imag())
            << "i  tail <= " << num(series->tail_bound) << "\n";
  }
  return ok;
}

// ---------------------------------------------------------------------------
// check-series

struct CheckSeriesOpts {
  SeriesCheckConfig cfg;
  std::string out_path;
};

inline int cmd_check_series(const CheckSeriesOpts& o, Format fmt, Streams s) {
  const SeriesCheckConfig& c = o.cfg;
  const auto samples = run_series_check(c);
  std::size_t failures = 0;
  double worst = 0.0;
  for (const auto& x : samples) {
    failures += x.pass ? 0 : 1;
    worst = std::max(worst, x.rel_err);
  }

  json params{{"p", c.p},
              {"q", c.q ? json(*c.q) : json("random")},
              {"r", c.r ? json(*c.r) : json("random")},
              {"samples", c.samples},
              {"radius", c.radius},
              {"nu1_radius", c.nu1_radius.value_or(c.radius)},
              {"tol", c.tol},
              {"printed_variant", c.printed_variant}};
  const json m = manifest("check-series", params, c.seed);

  std::ostringstream csv;
  csv << csv_manifest(m)
      << "index,q,r,nu1_re,nu1_im,nu2_re,nu2_im,nu3_re,nu3_im,series_re,series_im,closed_re,"
         "closed_im,rel_err,tail_bound,pass\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& x = samples[i];
    csv << i << "," << num(x.q) << "," << num(x.r) << "," << num(x.args.nu1.real()) << ","
        << num(x.args.nu1.imag()) << "," << num(x.args.nu2.real()) << "," << num(x.args.nu2.imag())
        << "," << num(x.args.nu3.real()) << "," << num(x.args.nu3.imag()) << ","
        << num(x.series.real()) << "," << num(x.series.imag()) << "," << num(x.closed.real()) << ","
        << num(x.closed.imag()) << "," << num(x.rel_err) << "," << num(x.tail_bound) << ","
        << (x.pass ? 1 : 0) << "\n";
  }

  if (!o.out_path.empty()) emit(o.out_path, csv.str(), s.out);
  if (fmt == Format::csv && o.out_path.empty()) {
    s.out << csv.str();
  } else if (fmt == Format::json) {
    json j;
    j["manifest"] = m;
    j["samples"] = samples.size();
    j["failures"] = failures;
    j["max_rel_err"] = worst;
    j["pass"] = failures == 0;
    s.out << j.dump(2) << "\n";
  } else if (fmt == Format::text) {
    s.out << (failures == 0 ? "PASS" : "FAIL") << "  " << samples.size() - failures << "/"
          << samples.size() << " samples within tol " << num(c.tol) << ", max rel_err "
          << num(worst) << "\n";
  }
  return failures == 0 ? ok : claim_violated;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyOpts {
  std::string domain = "p2";
  std::vector<double> r_values;  ///< p1
  SweepConfig sweep = SweepConfig::defaults();
  std::string out_path;
};

inline json grid_point_json(const GridPoint& p) {
  const StabilityReport& rep = p.report;
  return {{"q", p.q},
          {"r", p.r},
          {"eps", p.eps},
          {"stable", rep.stable},
          {"cond_i", rep.cond_i.holds},
          {"cond_i_margin", rep.cond_i.margin},
          {"cond_ii", rep.cond_ii.holds},
          {"g_min", rep.cond_ii.g_min},
          {"g_argmin_eta", rep.cond_ii.argmin_eta},
          {"cond_iii", rep.cond_iii.holds},
          {"falsifier_min_root_modulus", rep.falsifier.min_root_modulus},
          {"falsifier_min_abs_on_torus", rep.falsifier.min_abs_on_torus},
          {"analytic_cond_i", p.analytic.cond_i},
          {"analytic_cond_ii", p.analytic.cond_ii},
          {"analytic_slack_plus", p.analytic.slack_plus},
          {"analytic_slack_minus", p.analytic.slack_minus},
          {"agrees", p.agrees},
          {"pass", p.passes},
          {"error", p.error}};
}

inline json witness_json(const ZeroWitness& w) {
  return {{"q", w.q},
          {"r", w.r},
          {"eps_onset", w.eps_onset},
          {"eps", w.eps},
          {"g_min_at_eps_1", w.g_min_at_one},
          {"seed_eta", w.seed_eta},
          {"fibre_angle", w.w},
          {"nu2", cplx_json(w.nu2)},
          {"nu3", cplx_json(w.nu3)},
          {"z", {cplx_json(w.z.z1), cplx_json(w.z.z2), cplx_json(w.z.z3)}},
          {"w", {cplx_json(w.w_point.z1), cplx_json(w.w_point.z2), cplx_json(w.w_point.z3)}},
          {"abs_G", std::abs(w.G_value)},
          {"G_scale", w.G_scale},
          {"abs_kernel", std::abs(w.kernel)},
          {"kernel_origin", w.kernel_origin},
          {"kernel_relative", w.kernel_relative()},
          {"tolerance", 1e-8},
          {"revalidated", w.revalidate()},
          {"g_proportionality",
           {{"ratio", w.proportionality.ratio_mean}, {"relative_spread", w.proportionality.relative_spread}}},
          {"onset_scan",
           {{"monotone", w.onset.monotone}, {"eps", w.onset.eps}, {"stable", w.onset.stable}}}};
}

inline int certify_p2_cmd(const CertifyOpts& o, Format fmt, Streams s) {
  const Certificate cert = certify_p2(o.sweep);
  json params{{"domain", "p2"},
              {"q_grid", o.sweep.q_grid},
              {"r_grid", o.sweep.r_grid},
              {"eps_grid", o.sweep.eps_grid},
              {"falsifier", {{"enabled", o.sweep.falsifier.enabled},
                             {"angles", o.sweep.falsifier.angles},
                             {"radii", o.sweep.falsifier.radii}}}};
  json j;
  j["manifest"] = manifest("certify", params);
  j["claim"] = cert.claim;
  j["claim_confirmed"] = cert.verdict;
  j["verdict"] = cert.verdict ? "pass" : "fail";
  j["grid_points"] = cert.points.size();
  j["counterexamples"] = cert.counterexamples;
  json pts = json::array();
  for (const auto& p : cert.points) pts.push_back(grid_point_json(p));
  j["points"] = std::move(pts);

  if (!o.out_path.empty()) emit(o.out_path, j.dump(2) + "\n", s.out);
  if (fmt == Format::json && o.out_path.empty()) {
    s.out << j.dump(2) << "\n";
  } else {
    s.out << "claim: " << cert.claim << "\n"
          << "grid points: " << cert.points.size() << "  passed: "
          << cert.points.size() - cert.counterexamples.size() << "\n";
    for (std::size_t i : cert.counterexamples) {
      const auto& p = cert.points[i];
      s.out << "  counterexample q=" << num(p.q) << " r=" << num(p.r) << " eps=" << num(p.eps)
            << " stable=" << p.report.stable << " agrees=" << p.agrees
            << (p.error.empty() ? "" : " error=" + p.error) << "\n";
    }
    s.out << "verdict: " << (cert.verdict ? "PASS" : "FAIL") << "\n";
  }
  if (!cert.verdict) s.err << "certificate failed at " << cert.counterexamples.size() << " grid point(s)\n";
  return cert.verdict ? ok : claim_violated;
}

inline int certify_p1_cmd(const CertifyOpts& o, Format fmt, Streams s) {
  const std::vector<double> rs =
      o.r_values.empty() ? std::vector<double>{0.5, 1, 2, 3, 4, 8} : o.r_values;
  json params{{"domain", "p1"}, {"r", rs}};
  json j;
  j["manifest"] = manifest("certify", params);
  j["claim"] = "D^1_{r,r} is not a Lu Qi-Keng domain for any r > 0";

  json coeffs = json::array();
  for (const auto& a : expansion::audit_G_coefficients())
    coeffs.push_back({{"j", a.j},
                      {"k", a.k},
                      {"expanded", a.expanded.to_string()},
                      {"printed", a.printed.to_string()},
                      {"matches", a.matches}});
  j["coefficient_audit"] = std::move(coeffs);

  bool all = true;
  json witnesses = json::array();
  std::ostringstream text;
  for (double r : rs) {
    try {
      const ZeroWitness w = find_zero_p1(r);
      const bool good = w.revalidate() && w.kernel_relative() < 1e-8;
      all = all && good;
      witnesses.push_back(witness_json(w));
      text << "r=" << num(r) << "  eps*=" << num(w.eps_onset) << "  nu2=" << num(w.nu2.real())
           << (w.nu2.imag() < 0 ? "" : "+") << num(w.nu2.imag()) << "i  nu3=" << num(w.nu3.real())
           << (w.nu3.imag() < 0 ? "" : "+") << num(w.nu3.imag()) << "i  |K|/K(0)="
           << num(w.kernel_relative()) << (good ? "" : "  INVALID") << "\n";
    } catch (const inconsistency_error& e) {
      all = false;
      witnesses.push_back({{"r", r}, {"error", e.what()}});
      text << "r=" << num(r) << "  no witness: " << e.what() << "\n";
      s.err << "r=" << r << ": " << e.what() << "\n";
    }
  }
  j["witnesses"] = std::move(witnesses);
  j["claim_confirmed"] = all;
  j["verdict"] = all ? "zero-found" : "fail";

  if (!o.out_path.empty()) emit(o.out_path, j.dump(2) + "\n", s.out);
  if (fmt == Format::json && o.out_path.empty()) {
    s.out << j.dump(2) << "\n";
  } else {
    s.out << "claim: " << j["claim"].get<std::string>() << "\n" << text.str()
          << "verdict: " << (all ? "ZERO FOUND" : "FAIL") << "\n";
  }
  return all ? ok : claim_violated;
}

inline int cmd_certify(const CertifyOpts& o, Format fmt, Streams s) {
  if (fmt == Format::csv) throw domain_error("certify: CSV output is not available, use --json");
  if (o.domain == "p2") {
    if (!o.r_values.empty()) throw domain_error("certify: -r applies to --domain p1; use --r-grid");
    return certify_p2_cmd(o, fmt, s);
  }
  for (double r : o.r_values)
    if (!(r > 0.0)) throw domain_error("certify: r must be positive");
  return certify_p1_cmd(o, fmt, s);
}

// ---------------------------------------------------------------------------
// scan

struct ScanOpts {
  std::string domain = "p2";
  double q = 2, r = 2;
  int resolution = 64;
  std::string out_path;
};

inline int cmd_scan(const ScanOpts& o, Format fmt, Streams s) {
  const DomainParams d(o.domain == "p2" ? 2 : 1, o.q, o.r);
  const ScanReport rep = kernel_min_modulus_scan(d, o.resolution);
  json params{{"domain", o.domain}, {"q", o.q}, {"r", o.r}, {"resolution", o.resolution}};
  const json m = manifest("scan", params);

  std::ostringstream csv;
  csv << csv_manifest(m) << "nu2_mod,nu2_phase,nu3_mod,nu3_phase,abs_kernel\n";
  for (const ScanRow& row : rep.rows)
    csv << num(row.nu2_mod) << "," << num(row.nu2_phase) << "," << num(row.nu3_mod) << ","
        << num(row.nu3_phase) << "," << num(row.abs_kernel) << "\n";

  if (!o.out_path.empty()) emit(o.out_path, csv.str(), s.out);
  if (fmt == Format::json) {
    json j;
    j["manifest"] = m;
    j["min_abs_kernel"] = rep.min_abs;
    j["argmin_nu2"] = cplx_json(rep.argmin_nu2);
    j["argmin_nu3"] = cplx_json(rep.argmin_nu3);
    j["origin_abs_kernel"] = rep.origin_abs;
    s.out << j.dump(2) << "\n";
    return ok;
  }
  if (o.out_path.empty()) s.out << csv.str();
  s.out << "# min_abs_kernel=" << num(rep.min_abs) << " at nu2=" << num(rep.argmin_nu2.real())
        << "," << num(rep.argmin_nu2.imag()) << " nu3=" << num(rep.argmin_nu3.real()) << ","
        << num(rep.argmin_nu3.imag()) << " origin=" << num(rep.origin_abs) << "\n";
  return ok;
}

// ---------------------------------------------------------------------------

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bergman kernels of intersections of complex ellipsoids: norms, kernels, "
               "stability certificates and zero witnesses",
               "lqk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  bool want_json = false, want_csv = false;
  auto add_format = [&](CLI::App* sub) {
    auto* j = sub->add_flag("--json", want_json, "JSON output");
    auto* c = sub->add_flag("--csv", want_csv, "CSV output");
    j->excludes(c);
  };

  NormOpts norm;
  auto* sn = app.add_subcommand("norm", "squared L2 norm of a monomial");
  sn->add_option("-p", norm.p, "1 or 2")->check(CLI::IsMember({1, 2}));
  sn->add_option("-q", norm.q, "exponent of |z2|");
  sn->add_option("-r", norm.r, "exponent of |z3|");
  sn->add_option("-a,--alpha", norm.alpha, "multi-index a1 a2 a3")->expected(3);
  sn->add_flag("--oracle", norm.oracle, "compare against adaptive quadrature");
  add_format(sn);

  KernelOpts kern;
  auto* sk = app.add_subcommand("kernel", "Bergman kernel at nu_i = z_i conj(w_i)");
  sk->add_option("-p", kern.p, "1 or 2")->check(CLI::IsMember({1, 2}));
  sk->add_option("-q", kern.q, "exponent of |z2|");
  sk->add_option("-r", kern.r, "exponent of |z3|");
  sk->add_option("--nu1", kern.nu1, "real and imaginary part")->expected(2);
  sk->add_option("--nu2", kern.nu2, "real and imaginary part")->expected(2);
  sk->add_option("--nu3", kern.nu3, "real and imaginary part")->expected(2);
  sk->add_flag("--series", kern.series, "also sum the monomial series");
  sk->add_flag("--printed-variant", kern.printed_variant, "use the (1 - nu1^2) base");
  add_format(sk);

  CheckSeriesOpts chk;
  double chk_q = 0, chk_r = 0, chk_nu1 = 0;
  auto* sc = app.add_subcommand("check-series", "closed form against the series at random points");
  sc->add_option("-p", chk.cfg.p, "1 or 2")->check(CLI::IsMember({1, 2}));
  auto* oq = sc->add_option("-q", chk_q, "fixed q (random per sample if omitted)");
  auto* orr = sc->add_option("-r", chk_r, "fixed r (random per sample if omitted)");
  sc->add_option("--samples", chk.cfg.samples, "number of points");
  sc->add_option("--radius", chk.cfg.radius, "bound on the convergence ratios");
  auto* on1 = sc->add_option("--nu1-radius", chk_nu1, "bound on |nu1| (defaults to --radius)");
  sc->add_option("--tol", chk.cfg.tol, "relative tolerance");
  sc->add_option("--seed", chk.cfg.seed, "RNG seed");
  sc->add_flag("--printed-variant", chk.cfg.printed_variant, "use the (1 - nu1^2) base");
  sc->add_option("--out", chk.out_path, "write the CSV table to this file");
  add_format(sc);

  CertifyOpts cert;
  auto* sv = app.add_subcommand("certify", "zero-freeness certificate (p2) or zero witness (p1)");
  sv->add_option("--domain", cert.domain, "p2 or p1")->check(CLI::IsMember({"p2", "p1"}));
  sv->add_option("-r", cert.r_values, "r values for p1 (q = r)");
  sv->add_option("--q-grid", cert.sweep.q_grid, "q values for p2");
  sv->add_option("--r-grid", cert.sweep.r_grid, "r values for p2");
  sv->add_option("--eps-grid", cert.sweep.eps_grid, "eps values in (0, 1) for p2");
  sv->add_option("--angles", cert.sweep.falsifier.angles, "falsifier angles");
  sv->add_option("--radii", cert.sweep.falsifier.radii, "falsifier torus samples per axis");
  bool no_falsifier = false;
  sv->add_flag("--no-falsifier", no_falsifier, "skip the falsifier");
  sv->add_option("--out", cert.out_path, "write the JSON certificate to this file");
  add_format(sv);

  ScanOpts scan;
  auto* ss = app.add_subcommand("scan", "|K| over a polar grid on the slice z1 = w1 = 0");
  ss->add_option("--domain", scan.domain, "p2 or p1")->check(CLI::IsMember({"p2", "p1"}));
  ss->add_option("-q", scan.q, "exponent of |z2|");
  ss->add_option("-r", scan.r, "exponent of |z3|");
  ss->add_option("--resolution", scan.resolution, "grid points per modulus and phase axis");
  ss->add_option("--out", scan.out_path, "write the CSV table to this file");
  add_format(ss);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  const Format fmt = want_json ? Format::json : want_csv ? Format::csv : Format::text;
  Streams s{out, err};
  try {
    if (sn->parsed()) return cmd_norm(norm, fmt, s);
    if (sk->parsed()) return cmd_kernel(kern, fmt, s);
    if (sc->parsed()) {
      if (*oq) chk.cfg.q = chk_q;
      if (*orr) chk.cfg.r = chk_r;
      if (*on1) chk.cfg.nu1_radius = chk_nu1;
      return cmd_check_series(chk, fmt, s);
    }
    if (sv->parsed()) {
      cert.sweep.falsifier.enabled = !no_falsifier;
      return cmd_certify(cert, fmt, s);
    }
    if (ss->parsed()) return cmd_scan(scan, fmt, s);
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const pole_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return claim_violated;
  }
  return usage;
}

}  // namespace lqk::cli
