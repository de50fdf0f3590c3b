#include "hankelforge/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hankelforge/hankel.hpp"
#include "hankelforge/parallel.hpp"

namespace hankelforge {

namespace {

constexpr double kDomainTol = 1e-12;
constexpr double kWitnessTieTol = 1e-9;

double abs_h21(FunctionClass cls, double t1, cplx tau2, cplx tau3) {
  return std::abs(h21_in_tau(cls, SchurParams{t1, tau2, tau3}).value);
}

}  // namespace

double tau1_breakpoint() {
  static const double value = std::sqrt((std::sqrt(61.0) - 5.0) / 6.0);
  return value;
}

Fraction theoretical_bound(FunctionClass cls) {
  switch (cls) {
    case FunctionClass::StarlikeHalf: return {19, 288};
    case FunctionClass::ConvexHalf: return {1, 144};
    case FunctionClass::BoundedTurningHalf: return {1, 36};
  }
  throw std::logic_error("theoretical_bound: unreachable");
}

CaseBoundCoefficients case_coefficients(FunctionClass cls, double t) {
  if (!(t > 0.0 && t < 1.0))
    throw std::domain_error("case_coefficients: t must lie strictly inside (0,1)");
  const double t2 = t * t;
  const double s = 1.0 - t2;
  switch (cls) {
    case FunctionClass::StarlikeHalf:
      return {t * t2 / (4.0 * s), -t, -(3.0 + t2) / (4.0 * t), t * s / 12.0};
    case FunctionClass::ConvexHalf:
      return {-t * t2 / (24.0 * s), -t / 6.0, -(2.0 + t2) / (3.0 * t), t * s / 96.0};
    case FunctionClass::BoundedTurningHalf:
      return {-t * t2 / (72.0 * s), -4.0 * t / 9.0, -(8.0 + t2) / (9.0 * t), t * s / 32.0};
  }
  throw std::logic_error("case_coefficients: unreachable");
}

double envelope_phi(double t) {
  if (t < -kDomainTol || t > tau1_breakpoint() + kDomainTol)
    throw std::domain_error("envelope_phi: t outside [0, tau1_breakpoint()]");
  const double t2 = t * t;
  return (3.0 + 2.0 * t2 - 6.0 * t2 * t2) / 48.0;
}

double envelope_psi(double t) {
  if (t < tau1_breakpoint() - kDomainTol || t > 1.0 + kDomainTol)
    throw std::domain_error("envelope_psi: t outside [tau1_breakpoint(), 1]");
  const double t2 = t * t;
  return ((3.0 - 2.0 * t2) / 48.0) * std::sqrt((7.0 - 3.0 * t2) / (3.0 + t2));
}

double case3_bound(FunctionClass cls, double t) {
  const CaseBoundCoefficients cb = case_coefficients(cls, t);
  return cb.prefactor * y_eval({cb.A, cb.B, cb.C}).value;
}

YBranch case3_branch(FunctionClass cls, double t) {
  const CaseBoundCoefficients cb = case_coefficients(cls, t);
  return y_eval({cb.A, cb.B, cb.C}).branch;
}

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  if (count == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < count; ++i)
    v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return v;
}

std::vector<double> phase_grid(int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    v[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * i / count;
  return v;
}

struct StageResult {
  double max_abs = 0.0;
  SchurParams witness;
  bool witness_found = false;
  std::vector<double> slice_max;
  std::uint64_t evaluations = 0;
};

// Grid scan in two passes. Pass 1 finds per-tau1-slice maxima (slices are
// independent, so the parallel split cannot change any value). Pass 2
// rescans qualifying slices in index order and takes the first grid point
// within the tie tolerance of the maximum: that is the lexicographically
// smallest witness in (tau1, |tau2|, arg tau2, arg tau3).
StageResult scan_stage(FunctionClass cls, const std::vector<double>& t1s,
                       const std::vector<double>& rs, const std::vector<double>& th2s,
                       const std::vector<double>& th3s, bool parallel, int threads) {
  const int n1 = static_cast<int>(t1s.size());
  std::vector<cplx> tau2_dir(th2s.size()), tau3s(th3s.size());
  for (std::size_t k = 0; k < th2s.size(); ++k)
    tau2_dir[k] = cplx(std::cos(th2s[k]), std::sin(th2s[k]));
  for (std::size_t l = 0; l < th3s.size(); ++l)
    tau3s[l] = cplx(std::cos(th3s[l]), std::sin(th3s[l]));

  StageResult out;
  out.slice_max.assign(static_cast<std::size_t>(n1), 0.0);

  const int nthreads = effective_thread_count(threads);
  (void)nthreads;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (parallel)
#endif
  for (int i = 0; i < n1; ++i) {
    double slice_best = -1.0;
    for (const double r : rs) {
      for (const cplx dir : tau2_dir) {
        const cplx tau2 = r * dir;
        for (const cplx tau3 : tau3s) {
          const double v = abs_h21(cls, t1s[static_cast<std::size_t>(i)], tau2, tau3);
          if (v > slice_best) slice_best = v;
        }
      }
    }
    out.slice_max[static_cast<std::size_t>(i)] = slice_best;
  }
  out.evaluations = static_cast<std::uint64_t>(n1) * rs.size() * tau2_dir.size() * tau3s.size();

  out.max_abs = *std::max_element(out.slice_max.begin(), out.slice_max.end());

  for (int i = 0; i < n1 && !out.witness_found; ++i) {
    if (out.slice_max[static_cast<std::size_t>(i)] < out.max_abs - kWitnessTieTol) continue;
    for (std::size_t j = 0; j < rs.size() && !out.witness_found; ++j) {
      for (std::size_t k = 0; k < tau2_dir.size() && !out.witness_found; ++k) {
        const cplx tau2 = rs[j] * tau2_dir[k];
        for (std::size_t l = 0; l < tau3s.size() && !out.witness_found; ++l) {
          ++out.evaluations;
          if (abs_h21(cls, t1s[static_cast<std::size_t>(i)], tau2, tau3s[l]) >=
              out.max_abs - kWitnessTieTol) {
            out.witness = SchurParams{t1s[static_cast<std::size_t>(i)], tau2, tau3s[l]};
            out.witness_found = true;
          }
        }
      }
    }
  }
  return out;
}

double slice_envelope(FunctionClass cls, double t) {
  // Triangle-inequality bound for the tau1 slice, including the endpoint cases.
  if (t <= 1e-12) {
    switch (cls) {
      case FunctionClass::StarlikeHalf: return 1.0 / 16.0;
      case FunctionClass::ConvexHalf: return 1.0 / 144.0;
      case FunctionClass::BoundedTurningHalf: return 1.0 / 36.0;
    }
  }
  if (t >= 1.0 - 1e-12) {
    switch (cls) {
      case FunctionClass::StarlikeHalf: return 1.0 / 48.0;
      case FunctionClass::ConvexHalf: return 1.0 / 2304.0;
      case FunctionClass::BoundedTurningHalf: return 1.0 / 2304.0;
    }
  }
  return case3_bound(cls, t);
}

}  // namespace

CertificationReport search_max(FunctionClass cls, const GridSpec& grid, bool parallel,
                               int threads) {
  if (grid.n_tau1 < 32 || grid.n_tau2_modulus < 32 || grid.n_tau2_phase < 32)
    throw std::invalid_argument("search_max: tau1/tau2 grid resolutions must be >= 32");
  if (grid.n_tau3_phase < 8)
    throw std::invalid_argument("search_max: tau3 phase resolution must be >= 8");
  if (grid.refinement_rounds < 0)
    throw std::invalid_argument("search_max: refinement_rounds must be >= 0");

  CertificationReport rep;
  rep.cls = cls;
  rep.bound = theoretical_bound(cls);
  rep.grid = grid;
  rep.tau3_note =
      "tau3 searched on |tau3| = 1 only: the objective is affine in tau3, so the "
      "maximum over the closed disk is attained on the circle";

  const std::vector<double> t1s = linspace(0.0, 1.0, grid.n_tau1);
  const std::vector<double> rs = linspace(0.0, 1.0, grid.n_tau2_modulus);
  const std::vector<double> th2s = phase_grid(grid.n_tau2_phase);
  const std::vector<double> th3s = phase_grid(grid.n_tau3_phase);

  StageResult coarse = scan_stage(cls, t1s, rs, th2s, th3s, parallel, threads);
  rep.search_max = coarse.max_abs;
  rep.witness = coarse.witness;
  rep.evaluations = coarse.evaluations;

  // Coarse-slice diagnostics, downsampled.
  const int stride = std::max(1, grid.n_tau1 / 32);
  for (int i = 0; i < grid.n_tau1; i += stride) {
    const double t = t1s[static_cast<std::size_t>(i)];
    rep.diagnostics.push_back(
        {t, coarse.slice_max[static_cast<std::size_t>(i)], slice_envelope(cls, t)});
  }

  // Refinement rounds: windows of one coarse cell around the incumbent,
  // 21 points per axis, shrinking by a factor of 10 each round. The
  // incumbent stays on every refined grid, so the maximum never drops;
  // the witness moves only on strict improvement.
  double dt = 1.0 / (grid.n_tau1 - 1);
  double dr = 1.0 / (grid.n_tau2_modulus - 1);
  double dth2 = 2.0 * std::numbers::pi / grid.n_tau2_phase;
  double dth3 = 2.0 * std::numbers::pi / grid.n_tau3_phase;
  for (int round = 0; round < grid.refinement_rounds; ++round) {
    const double t0 = rep.witness.tau1;
    const double r0 = std::abs(rep.witness.tau2);
    const double a2 = std::atan2(rep.witness.tau2.imag(), rep.witness.tau2.real());
    const double a3 = std::atan2(rep.witness.tau3.imag(), rep.witness.tau3.real());
    const std::vector<double> ft1 = linspace(std::max(0.0, t0 - dt), std::min(1.0, t0 + dt), 21);
    const std::vector<double> fr = linspace(std::max(0.0, r0 - dr), std::min(1.0, r0 + dr), 21);
    const std::vector<double> fth2 = linspace(a2 - dth2, a2 + dth2, 21);
    const std::vector<double> fth3 = linspace(a3 - dth3, a3 + dth3, 21);
    StageResult fine = scan_stage(cls, ft1, fr, fth2, fth3, parallel, threads);
    rep.evaluations += fine.evaluations;
    if (fine.max_abs > rep.search_max) {
      rep.search_max = fine.max_abs;
      rep.witness = fine.witness;
    }
    dt *= 0.1;
    dr *= 0.1;
    dth2 *= 0.1;
    dth3 *= 0.1;
  }

  rep.gap = rep.bound.value() - rep.search_max;
  rep.max_violation = std::max(0.0, rep.search_max - rep.bound.value());
  return rep;
}

namespace {

struct DriverDiagnostics {
  double min_re = 0.0;
  bool positivity_ok = false;
  std::optional<cplx> pole_in_disk;
};

DriverDiagnostics check_driver(const RationalFunction& p) {
  DriverDiagnostics d;
  for (const cplx root : p.denominator_roots()) {
    if (std::abs(root) < 1.0 - 1e-9 && !d.pole_in_disk) d.pole_in_disk = root;
  }
  const std::vector<double> radii{0.3, 0.6, 0.9, 0.99};
  try {
    const PositivityReport rep = verify_positive_real_part(
        [&p](cplx z) { return p(z); }, radii, 720);
    d.min_re = rep.min_re;
    d.positivity_ok = rep.ok;
  } catch (const PoleError& e) {
    d.min_re = -std::numeric_limits<double>::infinity();
    d.positivity_ok = false;
    if (!d.pole_in_disk) d.pole_in_disk = e.location;
  }
  return d;
}

ExtremalCandidate candidate_from_driver(FunctionClass cls, std::string label,
                                        std::string formula, const RationalFunction& p,
                                        const CaratheodoryCoeffs& coeffs) {
  ExtremalCandidate cand;
  cand.label = std::move(label);
  cand.driver_formula = std::move(formula);
  cand.driver_coeffs = coeffs;
  cand.coeffs_admissible = coeffs.admissible();

  // Reconstruct f from the driver series; the closed-form coefficient map
  // must agree, and the larger of the two deviations is reported. Boundary
  // drivers put poles on the unit circle, so the truncation has to run deep
  // before the functional is trustworthy at radius 0.9.
  const TaylorSeries f = reconstruct_f(cls, p.to_series(96), 96);
  cand.a2 = f.coeff(2);
  cand.a3 = f.coeff(3);
  cand.a4 = f.coeff(4);
  const CoefficientTriple mapped = coeff_map(cls, coeffs);
  cand.path_agreement = std::max({std::abs(cand.a2 - mapped.a2),
                                  std::abs(cand.a3 - mapped.a3),
                                  std::abs(cand.a4 - mapped.a4)});

  const HankelValue h = h21_from_a(cand.a2, cand.a3, cand.a4);
  cand.h21 = h.value;
  cand.abs_h21 = std::abs(h.value);
  cand.matches_bound = std::abs(cand.abs_h21 - theoretical_bound(cls).value()) <= 1e-10;

  const DriverDiagnostics diag = check_driver(p);
  cand.driver_min_re = diag.min_re;
  cand.pole_in_disk = diag.pole_in_disk;
  cand.membership_ok = diag.positivity_ok && !diag.pole_in_disk;

  // Secondary diagnostic on the truncated reconstruction; radii stay at or
  // below 0.9 where truncation error is negligible.
  const std::vector<double> radii{0.3, 0.6, 0.9};
  cand.truncated_margin = membership_check(f, cls, radii, 720).min_margin;
  return cand;
}

}  // namespace

ExtremalReport extremal_check(FunctionClass cls) {
  ExtremalReport rep;
  rep.cls = cls;
  rep.bound = theoretical_bound(cls);

  if (cls == FunctionClass::StarlikeHalf) {
    // Candidate (a): z f'/f = 1/(1 - beta z^2) with beta = sqrt(19)/(3 sqrt(2)).
    // beta exceeds 1, so the driver has a pole inside the disk.
    const double beta = std::sqrt(19.0) / (3.0 * std::sqrt(2.0));
    const RationalFunction p_beta({1.0, 0.0, beta}, {1.0, 0.0, -beta});
    ExtremalCandidate a = candidate_from_driver(
        cls, "beta-driver", "(1 + beta z^2)/(1 - beta z^2), beta = sqrt(19)/(3 sqrt(2))",
        p_beta, CaratheodoryCoeffs{0.0, 2.0 * beta, 0.0});
    rep.candidates.push_back(std::move(a));

    // Candidate (b): the boundary driver at the search witness.
    const SchurParams witness{kPhiPeak, cplx(1.0, 0.0), cplx(0.0, 0.0)};
    const RationalFunction p_w = boundary_function(witness);
    ExtremalCandidate b = candidate_from_driver(
        cls, "schur-witness-driver",
        "(1 + (2/sqrt(6)) z + z^2)/(1 - z^2), from (tau1, tau2) = (1/sqrt(6), 1)", p_w,
        coeffs_from_schur(witness));
    b.schur = witness;
    rep.candidates.push_back(std::move(b));
    return rep;
  }

  const SchurParams witness{0.0, cplx(1.0, 0.0), cplx(0.0, 0.0)};
  const RationalFunction p = boundary_function(witness);
  ExtremalCandidate cand = candidate_from_driver(cls, "even-driver",
                                                 "(1 + z^2)/(1 - z^2)", p,
                                                 coeffs_from_schur(witness));
  cand.schur = witness;
  rep.candidates.push_back(std::move(cand));
  return rep;
}

}  // namespace hankelforge
