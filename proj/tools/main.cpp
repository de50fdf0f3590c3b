// hankelforge: logarithmic coefficients of inverse univalent functions,
// the second Hankel determinant H_{2,1} of those coefficients, and grid
// certification of the sharp bounds 19/288, 1/144 and 1/36 for the three
// function classes of order 1/2.
//
// Exit codes: 0 success, 1 validation or I/O error, 2 certification
// invariant failure, 3 internal numerical inconsistency.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "hankelforge/certifier.hpp"
#include "hankelforge/coefficient_formulas.hpp"
#include "hankelforge/hankel.hpp"
#include "hankelforge/parallel.hpp"
#include "hankelforge/random_utils.hpp"
#include "hankelforge/report_io.hpp"

namespace hf = hankelforge;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitInconsistency = 3;

struct CommonOpts {
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", opts.output, "Write the result to this path instead of stdout");
}

int write_out(const CommonOpts& opts, const std::string& payload) {
  if (opts.output.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream ofs(opts.output, std::ios::binary);
  if (!ofs) {
    std::cerr << "error: cannot open --output path '" << opts.output << "'\n";
    return kExitUsage;
  }
  ofs << payload;
  return ofs ? kExitOk : kExitUsage;
}

hf::OutputFormat fmt_of(const CommonOpts& opts) { return *hf::parse_format(opts.format); }

hf::FunctionClass class_of(const std::string& name) {
  const auto cls = hf::parse_class(name);
  if (!cls) throw CLI::ValidationError("--class", "unknown class '" + name + "'");
  return *cls;
}

std::string fd(double v) { return hf::format_double(v); }

// Cross-checks the four coordinate systems on seeded tuples; used by
// `certify` and `hankel` to guard against silent formula corruption.
double identity_spot_check(hf::FunctionClass cls, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < count; ++trial) {
    const hf::SchurParams params{hf::uniform01(rng), hf::random_in_disk(rng),
                                 hf::random_in_disk(rng)};
    const hf::CaratheodoryCoeffs c = hf::coeffs_from_schur(params);
    const hf::CoefficientTriple a = hf::coeff_map(cls, c);
    const hf::cplx via_tau = hf::h21_in_tau(cls, params).value;
    const hf::cplx via_c = hf::h21_in_c(cls, c).value;
    const hf::cplx via_a = hf::h21_from_a(a.a2, a.a3, a.a4).value;
    const auto gammas = hf::inverse_log_coefficients(
        hf::TaylorSeries::normalized(a.a2, a.a3, a.a4, 0.0, 6));
    const hf::cplx via_gamma = hf::h21_from_gammas(gammas[0], gammas[1], gammas[2]).value;
    worst = std::max({worst, std::abs(via_tau - via_c), std::abs(via_c - via_a),
                      std::abs(via_a - via_gamma)});
  }
  return worst;
}

int run_selftest(std::uint64_t seed, bool full);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hankelforge: inverse logarithmic coefficients, Hankel determinants and "
               "sharp-bound certification for classes of order 1/2"};
  app.require_subcommand(1);

  // coeffs
  CommonOpts coeffs_opts;
  double co_tau1 = 0.0, co_t2re = 0.0, co_t2im = 0.0, co_t3re = 0.0, co_t3im = 0.0;
  CLI::App* coeffs =
      app.add_subcommand("coeffs", "Caratheodory coefficients from Schur parameters");
  coeffs->add_option("--tau1", co_tau1, "tau1 in [0,1]")->required();
  coeffs->add_option("--tau2-re", co_t2re, "Re tau2");
  coeffs->add_option("--tau2-im", co_t2im, "Im tau2");
  coeffs->add_option("--tau3-re", co_t3re, "Re tau3");
  coeffs->add_option("--tau3-im", co_t3im, "Im tau3");
  add_common(coeffs, coeffs_opts);

  // invert
  CommonOpts invert_opts;
  double iv[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  CLI::App* invert =
      app.add_subcommand("invert", "Inverse-series coefficients A2..A5 from a2..a5");
  invert->add_option("--a2", iv[0], "Re a2");
  invert->add_option("--a2-im", iv[1], "Im a2");
  invert->add_option("--a3", iv[2], "Re a3");
  invert->add_option("--a3-im", iv[3], "Im a3");
  invert->add_option("--a4", iv[4], "Re a4");
  invert->add_option("--a4-im", iv[5], "Im a4");
  invert->add_option("--a5", iv[6], "Re a5");
  invert->add_option("--a5-im", iv[7], "Im a5");
  add_common(invert, invert_opts);

  // logcoeffs
  CommonOpts log_opts;
  double lv[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  CLI::App* logc = app.add_subcommand(
      "logcoeffs", "Logarithmic coefficients gamma_n of f and Gamma_n of its inverse");
  logc->add_option("--a2", lv[0], "Re a2");
  logc->add_option("--a2-im", lv[1], "Im a2");
  logc->add_option("--a3", lv[2], "Re a3");
  logc->add_option("--a3-im", lv[3], "Im a3");
  logc->add_option("--a4", lv[4], "Re a4");
  logc->add_option("--a4-im", lv[5], "Im a4");
  logc->add_option("--a5", lv[6], "Re a5");
  logc->add_option("--a5-im", lv[7], "Im a5");
  add_common(logc, log_opts);

  // hankel
  CommonOpts hankel_opts;
  std::string hk_class;
  double hk[6] = {0, 0, 0, 0, 0, 0};
  CLI::App* hankel = app.add_subcommand(
      "hankel", "H_{2,1} from Caratheodory coefficients, cross-checked in all forms");
  hankel->add_option("--class", hk_class, "starlike-half, convex-half or r-half")->required();
  hankel->add_option("--c1", hk[0], "Re c1");
  hankel->add_option("--c1-im", hk[1], "Im c1");
  hankel->add_option("--c2", hk[2], "Re c2");
  hankel->add_option("--c2-im", hk[3], "Im c2");
  hankel->add_option("--c3", hk[4], "Re c3");
  hankel->add_option("--c3-im", hk[5], "Im c3");
  add_common(hankel, hankel_opts);

  // ymax
  CommonOpts ymax_opts;
  double yA = 0.0, yB = 0.0, yC = 0.0;
  int y_radial = 64, y_angular = 64;
  bool y_oracle_too = false;
  CLI::App* ymax = app.add_subcommand("ymax", "Closed-form Y(A,B,C) with branch reporting");
  ymax->add_option("--A", yA, "A")->required();
  ymax->add_option("--B", yB, "B")->required();
  ymax->add_option("--C", yC, "C")->required();
  ymax->add_flag("--with-oracle", y_oracle_too, "Also run the brute-force oracle");
  ymax->add_option("--radial-steps", y_radial, "Oracle radial steps (>= 64)");
  ymax->add_option("--angular-steps", y_angular, "Oracle angular steps (>= 64)");
  add_common(ymax, ymax_opts);

  // certify
  CommonOpts certify_opts;
  std::string ct_class;
  hf::GridSpec grid;
  bool ct_serial = false;
  int ct_threads = 0;
  CLI::App* certify = app.add_subcommand(
      "certify", "Grid search over the Schur parameter space against the sharp bound");
  certify->add_option("--class", ct_class, "starlike-half, convex-half or r-half")->required();
  certify->add_option("--n-tau1", grid.n_tau1, "tau1 resolution (>= 32)");
  certify->add_option("--n-tau2-modulus", grid.n_tau2_modulus, "|tau2| resolution (>= 32)");
  certify->add_option("--n-tau2-phase", grid.n_tau2_phase, "arg tau2 resolution (>= 32)");
  certify->add_option("--n-tau3-phase", grid.n_tau3_phase, "arg tau3 resolution (>= 8)");
  certify->add_option("--rounds", grid.refinement_rounds, "Refinement rounds");
  certify->add_flag("--serial", ct_serial, "Disable the OpenMP grid scan");
  certify->add_option("--threads", ct_threads, "Worker cap (0 = automatic)");
  add_common(certify, certify_opts);

  // extremal
  CommonOpts extremal_opts;
  std::string ex_class;
  CLI::App* extremal =
      app.add_subcommand("extremal", "Attainment witnesses and membership diagnostics");
  extremal->add_option("--class", ex_class, "starlike-half, convex-half or r-half")->required();
  add_common(extremal, extremal_opts);

  // selftest
  std::uint64_t st_seed = 0;
  bool st_full = false;
  CLI::App* selftest =
      app.add_subcommand("selftest", "Oracle-equivalence suites for every module");
  selftest->add_option("--seed", st_seed, "Seed for the randomized suites (default 0)");
  selftest->add_flag("--full", st_full, "Acceptance-scale sample counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      const hf::CaratheodoryCoeffs c = hf::coeffs_from_schur(
          {co_tau1, hf::cplx(co_t2re, co_t2im), hf::cplx(co_t3re, co_t3im)});
      const hf::KeyValues kv{{"c1_re", fd(c.c1.real())}, {"c1_im", fd(c.c1.imag())},
                             {"c2_re", fd(c.c2.real())}, {"c2_im", fd(c.c2.imag())},
                             {"c3_re", fd(c.c3.real())}, {"c3_im", fd(c.c3.imag())},
                             {"admissible", c.admissible() ? "true" : "false"}};
      return write_out(coeffs_opts, hf::emit_key_values(kv, fmt_of(coeffs_opts)));
    }

    if (invert->parsed()) {
      const hf::cplx a2(iv[0], iv[1]), a3(iv[2], iv[3]), a4(iv[4], iv[5]), a5(iv[6], iv[7]);
      const hf::InverseCoefficients out = hf::inverse_closed_form(a2, a3, a4, a5);
      const hf::TaylorSeries inv =
          hf::invert_series(hf::TaylorSeries::normalized(a2, a3, a4, a5, 8));
      const double dev =
          std::max({std::abs(inv.coeff(2) - out.A2), std::abs(inv.coeff(3) - out.A3),
                    std::abs(inv.coeff(4) - out.A4), std::abs(inv.coeff(5) - out.A5)});
      if (dev > 1e-10) {
        std::cerr << "error: closed-form and series inversion disagree by " << dev << "\n";
        return kExitInconsistency;
      }
      const hf::KeyValues kv{{"A2_re", fd(out.A2.real())}, {"A2_im", fd(out.A2.imag())},
                             {"A3_re", fd(out.A3.real())}, {"A3_im", fd(out.A3.imag())},
                             {"A4_re", fd(out.A4.real())}, {"A4_im", fd(out.A4.imag())},
                             {"A5_re", fd(out.A5.real())}, {"A5_im", fd(out.A5.imag())},
                             {"series_deviation", fd(dev)}};
      return write_out(invert_opts, hf::emit_key_values(kv, fmt_of(invert_opts)));
    }

    if (logc->parsed()) {
      const hf::cplx a2(lv[0], lv[1]), a3(lv[2], lv[3]), a4(lv[4], lv[5]), a5(lv[6], lv[7]);
      const hf::TaylorSeries f = hf::TaylorSeries::normalized(a2, a3, a4, a5, 8);
      const auto gammas = hf::log_coefficients(f);
      const hf::InverseLogCoefficients big = hf::gamma_closed_form(a2, a3, a4, a5);
      const auto series_path = hf::inverse_log_coefficients(f);
      const double dev = std::max(
          {std::abs(series_path[0] - big.Gamma1), std::abs(series_path[1] - big.Gamma2),
           std::abs(series_path[2] - big.Gamma3), std::abs(series_path[3] - big.Gamma4)});
      if (dev > 1e-10) {
        std::cerr << "error: closed-form and series Gamma_n disagree by " << dev << "\n";
        return kExitInconsistency;
      }
      hf::KeyValues kv;
      for (int n = 1; n <= 4; ++n) {
        kv.emplace_back("gamma" + std::to_string(n) + "_re",
                        fd(gammas[static_cast<std::size_t>(n - 1)].real()));
        kv.emplace_back("gamma" + std::to_string(n) + "_im",
                        fd(gammas[static_cast<std::size_t>(n - 1)].imag()));
      }
      const hf::cplx Gs[4] = {big.Gamma1, big.Gamma2, big.Gamma3, big.Gamma4};
      for (int n = 1; n <= 4; ++n) {
        kv.emplace_back("Gamma" + std::to_string(n) + "_re", fd(Gs[n - 1].real()));
        kv.emplace_back("Gamma" + std::to_string(n) + "_im", fd(Gs[n - 1].imag()));
      }
      kv.emplace_back("series_deviation", fd(dev));
      return write_out(log_opts, hf::emit_key_values(kv, fmt_of(log_opts)));
    }

    if (hankel->parsed()) {
      const hf::FunctionClass cls = class_of(hk_class);
      const hf::CaratheodoryCoeffs c{hf::cplx(hk[0], hk[1]), hf::cplx(hk[2], hk[3]),
                                     hf::cplx(hk[4], hk[5])};
      const hf::HankelValue via_c = hf::h21_in_c(cls, c);
      const hf::CoefficientTriple a = hf::coeff_map(cls, c);
      const hf::cplx via_a = hf::h21_from_a(a.a2, a.a3, a.a4).value;
      const auto gammas = hf::inverse_log_coefficients(
          hf::TaylorSeries::normalized(a.a2, a.a3, a.a4, 0.0, 6));
      const hf::cplx via_gamma = hf::h21_from_gammas(gammas[0], gammas[1], gammas[2]).value;
      const double dev = std::max(std::abs(via_c.value - via_a), std::abs(via_a - via_gamma));
      if (dev > 1e-12) {
        std::cerr << "error: coordinate systems disagree by " << dev << "\n";
        return kExitInconsistency;
      }
      const hf::KeyValues kv{{"class", std::string(hf::class_name(cls))},
                             {"h21_re", fd(via_c.value.real())},
                             {"h21_im", fd(via_c.value.imag())},
                             {"abs_h21", fd(std::abs(via_c.value))},
                             {"a2_re", fd(a.a2.real())},
                             {"a3_re", fd(a.a3.real())},
                             {"a4_re", fd(a.a4.real())},
                             {"cross_form_deviation", fd(dev)}};
      return write_out(hankel_opts, hf::emit_key_values(kv, fmt_of(hankel_opts)));
    }

    if (ymax->parsed()) {
      const hf::YResult r = hf::y_eval({yA, yB, yC});
      hf::KeyValues kv{{"value", fd(r.value)},
                       {"branch", std::string(hf::branch_name(r.branch))}};
      if (r.argmax_hint) {
        kv.emplace_back("argmax_hint_re", fd(r.argmax_hint->real()));
        kv.emplace_back("argmax_hint_im", fd(r.argmax_hint->imag()));
      }
      if (y_oracle_too) {
        const double oracle = hf::y_oracle({yA, yB, yC}, y_radial, y_angular);
        kv.emplace_back("oracle", fd(oracle));
        kv.emplace_back("gap", fd(std::abs(oracle - r.value)));
      }
      if (r.consistency_flag) kv.emplace_back("consistency_flag", "true");
      return write_out(ymax_opts, hf::emit_key_values(kv, fmt_of(ymax_opts)));
    }

    if (certify->parsed()) {
      const hf::FunctionClass cls = class_of(ct_class);
      const double spot = identity_spot_check(cls, 0, 200);
      if (spot > 1e-12) {
        std::cerr << "error: cross-form identity violated by " << spot << "\n";
        return kExitInconsistency;
      }
      const auto t0 = std::chrono::steady_clock::now();
      const hf::CertificationReport rep = hf::search_max(cls, grid, !ct_serial, ct_threads);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      std::cerr << "certify " << hf::class_name(cls) << ": " << rep.evaluations
                << " evaluations in " << fd(dt.count()) << " s ("
                << (ct_serial ? 1 : hf::effective_thread_count(ct_threads)) << " worker(s))\n";
      const int write_rc = write_out(certify_opts, hf::emit_report(rep, fmt_of(certify_opts)));
      if (write_rc != kExitOk) return write_rc;
      if (!rep.bound_respected() || !rep.sound()) {
        std::cerr << "error: search exceeded the theoretical bound\n";
        return kExitInvariant;
      }
      if (!rep.attained()) {
        std::cerr << "error: attainment gap " << fd(rep.gap) << " exceeds 1e-6\n";
        return kExitInvariant;
      }
      return kExitOk;
    }

    if (extremal->parsed()) {
      const hf::ExtremalReport rep = hf::extremal_check(class_of(ex_class));
      return write_out(extremal_opts, hf::emit_report(rep, fmt_of(extremal_opts)));
    }

    if (selftest->parsed()) return run_selftest(st_seed, st_full);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistency;
  }

  return kExitOk;
}

namespace {

int run_selftest(std::uint64_t seed, bool full) {
  using clock = std::chrono::steady_clock;
  const auto started = clock::now();
  bool all_ok = true;
  const auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << " (" << detail << ")\n";
    all_ok = all_ok && ok;
  };

  // Closed forms against the series path.
  {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    const int n = full ? 5000 : 500;
    for (int trial = 0; trial < n; ++trial) {
      const hf::cplx a2 = 2.0 * hf::random_in_disk(rng), a3 = 2.0 * hf::random_in_disk(rng);
      const hf::cplx a4 = 2.0 * hf::random_in_disk(rng), a5 = 2.0 * hf::random_in_disk(rng);
      const hf::TaylorSeries f = hf::TaylorSeries::normalized(a2, a3, a4, a5, 8);
      const hf::TaylorSeries inv = hf::invert_series(f);
      const hf::InverseCoefficients cf = hf::inverse_closed_form(a2, a3, a4, a5);
      worst = std::max({worst, std::abs(inv.coeff(2) - cf.A2), std::abs(inv.coeff(3) - cf.A3),
                        std::abs(inv.coeff(4) - cf.A4), std::abs(inv.coeff(5) - cf.A5)});
      const auto gs = hf::inverse_log_coefficients(f);
      const hf::InverseLogCoefficients gf = hf::gamma_closed_form(a2, a3, a4, a5);
      worst = std::max({worst, std::abs(gs[0] - gf.Gamma1), std::abs(gs[1] - gf.Gamma2),
                        std::abs(gs[2] - gf.Gamma3), std::abs(gs[3] - gf.Gamma4)});
    }
    report("closed forms vs series inversion", worst <= 1e-12, "max deviation " + fd(worst));
  }

  // Round trip f(F(w)) = w.
  {
    std::mt19937_64 rng(seed + 1);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      hf::TaylorSeries f = hf::TaylorSeries::identity(8);
      for (int n = 2; n <= 8; ++n) f.coeff(n) = 2.0 * hf::random_in_disk(rng);
      worst = std::max(worst, hf::max_coeff_distance(hf::compose(f, hf::invert_series(f)),
                                                     hf::TaylorSeries::identity(8)));
    }
    report("series inversion round trip", worst <= 1e-10, "max deviation " + fd(worst));
  }

  // Koebe extremality.
  {
    const hf::TaylorSeries inv = hf::invert_series(hf::TaylorSeries::koebe(8));
    const auto gammas = hf::inverse_log_coefficients(hf::TaylorSeries::koebe(8));
    double worst = 0.0;
    for (int n = 2; n <= 4; ++n)
      worst = std::max(worst, std::abs(std::abs(inv.coeff(n)) - hf::koebe_inverse_bound(n)));
    for (int n = 1; n <= 4; ++n)
      worst = std::max(worst, std::abs(std::abs(gammas[static_cast<std::size_t>(n - 1)]) -
                                       hf::koebe_inverse_log_bound(n)));
    report("Koebe extremality", worst <= 1e-12, "max deviation " + fd(worst));
  }

  // Caratheodory coefficient bound.
  {
    std::mt19937_64 rng(seed + 2);
    bool ok = true;
    const int n = full ? 10000 : 2000;
    for (int trial = 0; trial < n; ++trial)
      ok = ok && hf::coeffs_from_schur({hf::uniform01(rng), hf::random_in_disk(rng),
                                        hf::random_in_disk(rng)})
                     .admissible(1e-12);
    report("|c_n| <= 2 on random Schur parameters", ok, std::to_string(n) + " tuples");
  }

  // Boundary functions reproduce their coefficients.
  {
    std::mt19937_64 rng(seed + 3);
    double worst = 0.0;
    for (int regime = 0; regime < 3; ++regime) {
      for (int trial = 0; trial < (full ? 60 : 20); ++trial) {
        hf::SchurParams p{0.97 * hf::uniform01(rng), 0.97 * hf::random_in_disk(rng),
                          hf::random_on_circle(rng)};
        if (regime == 0) p.tau1 = 1.0;
        if (regime == 1) p.tau2 = hf::random_on_circle(rng);
        const hf::RationalFunction b = hf::boundary_function(p);
        const auto got = hf::taylor_coefficients_fourier([&](hf::cplx z) { return b(z); }, 4);
        const hf::CaratheodoryCoeffs want = hf::coeffs_from_schur(p);
        worst = std::max({worst, std::abs(got[1] - want.c1), std::abs(got[2] - want.c2),
                          std::abs(got[3] - want.c3)});
      }
    }
    report("boundary functions reproduce (c1, c2, c3)", worst <= 1e-9,
           "max deviation " + fd(worst));
  }

  // Positivity of boundary functions.
  {
    std::mt19937_64 rng(seed + 4);
    bool ok = true;
    const std::vector<double> radii{0.3, 0.6, 0.9, 0.99};
    for (int trial = 0; trial < (full ? 60 : 20); ++trial) {
      const hf::SchurParams p{0.97 * hf::uniform01(rng), hf::random_on_circle(rng),
                              hf::random_in_disk(rng)};
      const hf::RationalFunction b = hf::boundary_function(p);
      ok = ok &&
           hf::verify_positive_real_part([&](hf::cplx z) { return b(z); }, radii, 720).ok;
    }
    report("positive real part on circle grids", ok, "radii up to 0.99");
  }

  // Coordinate-system identity.
  {
    double worst = 0.0;
    for (const hf::FunctionClass cls : hf::kAllClasses)
      worst = std::max(worst, identity_spot_check(cls, seed + 5, full ? 10000 : 2000));
    report("H21 coordinate-system identity", worst <= 1e-12, "max deviation " + fd(worst));
  }

  // Rotation invariance of |H21|.
  {
    std::mt19937_64 rng(seed + 6);
    double worst = 0.0;
    for (int trial = 0; trial < (full ? 1000 : 300); ++trial) {
      const hf::cplx a2 = hf::random_in_disk(rng), a3 = hf::random_in_disk(rng),
                     a4 = hf::random_in_disk(rng);
      const hf::cplx w = hf::random_on_circle(rng);
      worst = std::max(worst,
                       std::abs(std::abs(hf::h21_from_a(a2, a3, a4).value) -
                                std::abs(hf::h21_from_a(w * a2, w * w * a3, w * w * w * a4)
                                             .value)));
    }
    report("rotation invariance of |H21|", worst <= 1e-12, "max deviation " + fd(worst));
  }

  // Closed-form Y against brute force.
  {
    const auto inputs = hf::sample_y_inputs(full ? 100000 : 3000, seed + 7);
    const hf::SweepResult res = hf::oracle_agreement_sweep(inputs);
    report("Y(A,B,C) closed form vs brute force", res.max_gap <= 1e-5,
           "max gap " + fd(res.max_gap) + " over " + std::to_string(res.count) + " triples");
  }

  // Envelope identities.
  {
    std::mt19937_64 rng(seed + 8);
    const double bp = hf::tau1_breakpoint();
    double worst_env = 0.0, worst_poly = 0.0;
    for (int i = 0; i < (full ? 1000 : 300); ++i) {
      const double t_lo = 1e-4 + (bp - 1e-4) * hf::uniform01(rng);
      worst_env = std::max(worst_env,
                           std::abs(hf::case3_bound(hf::FunctionClass::StarlikeHalf, t_lo) -
                                    hf::envelope_phi(t_lo)));
      const double t_hi = bp + (1.0 - bp - 1e-4) * hf::uniform01(rng);
      worst_env = std::max(worst_env,
                           std::abs(hf::case3_bound(hf::FunctionClass::StarlikeHalf, t_hi) -
                                    hf::envelope_psi(t_hi)));
      const double t = 1e-4 + (1.0 - 2e-4) * hf::uniform01(rng);
      const double t2 = t * t;
      worst_poly =
          std::max(worst_poly, std::abs(hf::case3_bound(hf::FunctionClass::ConvexHalf, t) -
                                        (16.0 - 4.0 * t2 - 11.0 * t2 * t2) / 2304.0));
      worst_poly = std::max(
          worst_poly, std::abs(hf::case3_bound(hf::FunctionClass::BoundedTurningHalf, t) -
                               (64.0 - 24.0 * t2 - 39.0 * t2 * t2) / 2304.0));
    }
    report("case-3 envelopes", worst_env <= 1e-9 && worst_poly <= 1e-12,
           "starlike " + fd(worst_env) + ", quartics " + fd(worst_poly));
  }

  const std::chrono::duration<double> dt = clock::now() - started;
  std::cout << (all_ok ? "selftest passed" : "selftest FAILED") << " in " << fd(dt.count())
            << " s (seed " << seed << (full ? ", full" : "") << ")\n";
  return all_ok ? kExitOk : kExitInconsistency;
}

}  // namespace
