#include "hankelforge/ymax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hankelforge/parallel.hpp"
#include "hankelforge/random_utils.hpp"

namespace hankelforge {

namespace {

constexpr double kTieTol = 1e-12;

struct Candidate {
  YBranch branch;
  double value;
  bool flag = false;
};

// R(A,B,C) fallback chain of case (ii). Conditions are evaluated in listed
// order; a condition within kTieTol of equality keeps the chain going so
// the adjacent branch value is also considered.
void r_chain(double A, double B, double C, double aA, double aB, double aC,
             std::vector<Candidate>& out) {
  const double g1 = aA * aB - aC * (aB + 4.0 * aA);  // >= 0: first sub-branch
  if (g1 >= -kTieTol) {
    out.push_back({YBranch::r_first, aA + aB - aC});
    if (g1 > kTieTol) return;
  }
  const double g2 = aC * (aB - 4.0 * aA) - aA * aB;  // >= 0: second sub-branch
  if (g2 >= -kTieTol) {
    out.push_back({YBranch::r_second, -aA + aB + aC});
    if (g2 > kTieTol) return;
  }
  double radicand = 1.0 - B * B / (4.0 * A * C);
  bool flag = false;
  if (radicand < 0.0) {
    flag = radicand < -1e-9;
    radicand = 0.0;
  }
  out.push_back({YBranch::r_sqrt, (aC + aA) * std::sqrt(radicand), flag});
}

void case_ii_chain(double A, double B, double C, double aA, double aB, double aC,
                   std::vector<Candidate>& out) {
  const double B2 = B * B;
  const double T = -4.0 * A * C * (1.0 / (C * C) - 1.0);
  const double d1a = B2 - T;                 // cond 1 needs >= 0
  const double d1b = aB - 2.0 * (1.0 - aC);  // cond 1 needs < 0
  if (d1a >= -kTieTol && d1b <= kTieTol) {
    if (aC < 1.0 - 1e-15)
      out.push_back({YBranch::ii_neg_parabola, 1.0 - aA + B2 / (4.0 * (1.0 - aC))});
    if (d1a > kTieTol && d1b < -kTieTol && aC < 1.0 - 1e-15) return;
  }
  const double m2 = std::min(4.0 * (1.0 + aC) * (1.0 + aC), T);
  const double d2 = m2 - B2;  // cond 2 needs > 0
  if (d2 >= -kTieTol) {
    out.push_back({YBranch::ii_pos_parabola, 1.0 + aA + B2 / (4.0 * (1.0 + aC))});
    if (d2 > kTieTol) return;
  }
  r_chain(A, B, C, aA, aB, aC, out);
}

// Closed-point maximizer for case (i); used only as a hint. A global sign
// flip leaves the objective unchanged, so reduce to A >= 0, C >= 0 first.
std::complex<double> case_i_hint(double A, double B, double C) {
  if (A < 0.0 || (A == 0.0 && C < 0.0)) {
    B = -B;
    C = -C;
  }
  const double u = B >= 0.0 ? 1.0 : -1.0;
  const double aC = std::abs(C);
  double rho = 1.0;
  if (aC < 1.0) rho = std::min(1.0, std::abs(B) / (2.0 * (1.0 - aC)));
  return {u * rho, 0.0};
}

}  // namespace

std::string_view branch_name(YBranch b) {
  switch (b) {
    case YBranch::i_sum: return "i_sum";
    case YBranch::i_parabola: return "i_parabola";
    case YBranch::ii_neg_parabola: return "ii_neg_parabola";
    case YBranch::ii_pos_parabola: return "ii_pos_parabola";
    case YBranch::r_first: return "R_first";
    case YBranch::r_second: return "R_second";
    case YBranch::r_sqrt: return "R_sqrt";
  }
  return "?";
}

YResult y_eval(const YInput& in) {
  const double A = in.A, B = in.B, C = in.C;
  const double aA = std::abs(A), aB = std::abs(B), aC = std::abs(C);

  std::vector<Candidate> cands;
  cands.reserve(4);
  if (A * C >= 0.0) {
    const double d = aB - 2.0 * (1.0 - aC);
    // At least one fires: d < -kTieTol forces aC < 1.
    if (d >= -kTieTol) cands.push_back({YBranch::i_sum, aA + aB + aC});
    if (d <= kTieTol && aC < 1.0 - 1e-15)
      cands.push_back({YBranch::i_parabola, 1.0 + aA + B * B / (4.0 * (1.0 - aC))});
  } else {
    case_ii_chain(A, B, C, aA, aB, aC, cands);
  }

  YResult res;
  res.value = -std::numeric_limits<double>::infinity();
  for (const Candidate& c : cands) {
    if (c.value > res.value) {
      res.value = c.value;
      res.branch = c.branch;
      res.consistency_flag = c.flag;
    }
  }
  if (res.branch == YBranch::i_sum || res.branch == YBranch::i_parabola)
    res.argmax_hint = case_i_hint(A, B, C);
  return res;
}

double y_objective(const YInput& in, std::complex<double> z) {
  const std::complex<double> p = in.A + z * (in.B + z * in.C);
  return std::abs(p) + 1.0 - std::norm(z);
}

namespace {

inline double objective_polar(const YInput& in, double r, double ct, double st) {
  const double x = r * ct, y = r * st;
  const double re = in.A + in.B * x + in.C * (x * x - y * y);
  const double im = y * (in.B + 2.0 * in.C * x);
  return std::sqrt(re * re + im * im) + 1.0 - r * r;
}

struct GridPoint {
  double value;
  int ir, it;
};

// Dense rectangle scan in (r, theta); returns the best point.
GridPoint scan_rect(const YInput& in, double r_lo, double r_hi, int nr,
                    double t_lo, double t_hi, int nt) {
  GridPoint best{-std::numeric_limits<double>::infinity(), 0, 0};
  for (int j = 0; j <= nt; ++j) {
    const double theta = t_lo + (t_hi - t_lo) * j / nt;
    const double ct = std::cos(theta), st = std::sin(theta);
    for (int i = 0; i <= nr; ++i) {
      const double r = r_lo + (r_hi - r_lo) * i / nr;
      const double v = objective_polar(in, r, ct, st);
      if (v > best.value) best = {v, i, j};
    }
  }
  return best;
}

// For part of the AC < 0 regime the maximum sits exactly on |z| = 1 at the
// end of a nearly flat diagonal ridge, which the 2-D walker cannot traverse
// within its shrinking windows. A dense 1-D sweep of the boundary circle
// with zoom refinement settles those cases.
double boundary_pass(const YInput& in, int angular_steps) {
  const double pi = std::numbers::pi;
  const int nt = 4 * angular_steps;
  double best = -std::numeric_limits<double>::infinity();
  double t0 = 0.0;
  for (int j = 0; j <= nt; ++j) {
    const double theta = pi * j / nt;
    const double v = objective_polar(in, 1.0, std::cos(theta), std::sin(theta));
    if (v > best) {
      best = v;
      t0 = theta;
    }
  }
  double dt = pi / nt;
  for (int round = 0; round < 4; ++round) {
    const double t_lo = t0 - dt, t_hi = t0 + dt;
    for (int j = 0; j <= 20; ++j) {
      const double theta = t_lo + (t_hi - t_lo) * j / 20.0;
      const double v = objective_polar(in, 1.0, std::cos(theta), std::sin(theta));
      if (v > best) {
        best = v;
        t0 = theta;
      }
    }
    dt *= 0.1;
  }
  return best;
}

double refine_around(const YInput& in, double r0, double t0, double dr, double dt) {
  double best = -std::numeric_limits<double>::infinity();
  for (int round = 0; round < 3; ++round) {
    // Walk: re-center at the same scale while the incumbent keeps landing on
    // the window frame (a shrinking window cannot travel along a ridge),
    // then zoom. A frame hit pinned at the domain boundary r = 0 or 1 does
    // not block the zoom.
    for (int walk = 0; walk < 64; ++walk) {
      const double r_lo = std::max(0.0, r0 - dr);
      const double r_hi = std::min(1.0, r0 + dr);
      const double t_lo = t0 - dt;
      const double t_hi = t0 + dt;
      const GridPoint gp = scan_rect(in, r_lo, r_hi, 20, t_lo, t_hi, 20);
      r0 = r_lo + (r_hi - r_lo) * gp.ir / 20.0;
      t0 = t_lo + (t_hi - t_lo) * gp.it / 20.0;
      best = std::max(best, gp.value);
      const bool r_settled = (gp.ir > 0 && gp.ir < 20) ||
                             (gp.ir == 0 && r_lo == 0.0) || (gp.ir == 20 && r_hi == 1.0);
      const bool t_settled = gp.it > 0 && gp.it < 20;
      if (r_settled && t_settled) break;
    }
    dr *= 0.1;
    dt *= 0.1;
  }
  return best;
}

}  // namespace

double y_oracle(const YInput& in_raw, int radial_steps, int angular_steps) {
  if (radial_steps < 64 || angular_steps < 64)
    throw std::invalid_argument("y_oracle: step counts must be at least 64");

  // Y(A,B,C) = Y(-A,-B,-C) = Y(A,-B,C); canonicalizing makes symmetric
  // inputs share one evaluation path bit for bit.
  YInput in = in_raw;
  if (in.A < 0.0 || (in.A == 0.0 && (in.B < 0.0 || (in.B == 0.0 && in.C < 0.0)))) {
    in.A = -in.A;
    in.B = -in.B;
    in.C = -in.C;
  }
  in.B = std::abs(in.B);

  const int nr = radial_steps, nt = angular_steps;
  const double pi = std::numbers::pi;

  // Coarse pass over [0,1] x [0,pi], keeping the full table so well
  // separated runner-up cells can seed their own refinements.
  std::vector<double> table(static_cast<std::size_t>((nr + 1) * (nt + 1)));
  std::vector<double> ct(static_cast<std::size_t>(nt + 1)), st(static_cast<std::size_t>(nt + 1));
  for (int j = 0; j <= nt; ++j) {
    const double theta = pi * j / nt;
    ct[static_cast<std::size_t>(j)] = std::cos(theta);
    st[static_cast<std::size_t>(j)] = std::sin(theta);
  }
  for (int i = 0; i <= nr; ++i) {
    const double r = static_cast<double>(i) / nr;
    for (int j = 0; j <= nt; ++j) {
      table[static_cast<std::size_t>(i * (nt + 1) + j)] =
          objective_polar(in, r, ct[static_cast<std::size_t>(j)], st[static_cast<std::size_t>(j)]);
    }
  }

  // Top three cells separated by more than two grid steps.
  struct Seed { int i, j; };
  std::vector<Seed> seeds;
  std::vector<double> seed_values;
  for (int pick = 0; pick < 3; ++pick) {
    double best = -std::numeric_limits<double>::infinity();
    Seed arg{-1, -1};
    for (int i = 0; i <= nr; ++i) {
      for (int j = 0; j <= nt; ++j) {
        bool excluded = false;
        for (const Seed& s : seeds)
          if (std::abs(s.i - i) <= 2 && std::abs(s.j - j) <= 2) excluded = true;
        if (excluded) continue;
        const double v = table[static_cast<std::size_t>(i * (nt + 1) + j)];
        if (v > best) {
          best = v;
          arg = {i, j};
        }
      }
    }
    if (arg.i < 0) break;
    seeds.push_back(arg);
    seed_values.push_back(best);
  }

  double result = boundary_pass(in, nt);
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    // Skip runner-ups that cannot contend even after refinement.
    if (k > 0 && seed_values[k] < seed_values[0] - 0.1) break;
    const double r0 = static_cast<double>(seeds[k].i) / nr;
    const double t0 = pi * seeds[k].j / nt;
    result = std::max(result, refine_around(in, r0, t0, 1.0 / nr, pi / nt));
  }
  return std::max(result, seed_values.empty() ? 1.0 : seed_values[0]);
}

std::vector<YInput> sample_y_inputs(std::size_t count, std::uint64_t seed, double box,
                                    bool include_boundary_samples) {
  std::mt19937_64 rng(seed);
  std::vector<YInput> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (include_boundary_samples && k % 20 == 19) {
      if (k % 40 == 19) {
        // |B| = 2(1 - |C|)
        const double A = uniform(rng, -box, box);
        const double C = uniform(rng, -1.0, 1.0);
        const double sgn = uniform01(rng) < 0.5 ? -1.0 : 1.0;
        out.push_back({A, sgn * 2.0 * (1.0 - std::abs(C)), C});
      } else {
        // B^2 = -4AC(C^-2 - 1) with AC < 0 and |C| <= 1
        double C = uniform(rng, -1.0, 1.0);
        if (std::abs(C) < 1e-3) C = C < 0 ? -1e-3 : 1e-3;
        double A = uniform(rng, 0.0, box);
        if (C > 0) A = -A;
        const double rhs = -4.0 * A * C * (1.0 / (C * C) - 1.0);
        const double sgn = uniform01(rng) < 0.5 ? -1.0 : 1.0;
        out.push_back({A, sgn * std::sqrt(std::max(0.0, rhs)), C});
      }
    } else {
      out.push_back({uniform(rng, -box, box), uniform(rng, -box, box), uniform(rng, -box, box)});
    }
  }
  return out;
}

SweepResult oracle_agreement_sweep(const std::vector<YInput>& inputs, int radial_steps,
                                   int angular_steps, bool parallel, int threads) {
  const std::size_t n = inputs.size();
  // Fixed chunk layout keeps the reduction order independent of the
  // worker count.
  constexpr std::size_t kChunks = 256;
  const std::size_t chunk_count = std::min(kChunks, std::max<std::size_t>(1, n));
  std::vector<double> chunk_gap(chunk_count, -1.0);
  std::vector<std::size_t> chunk_arg(chunk_count, 0);

  const int nthreads = effective_thread_count(threads);
  (void)nthreads;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (parallel)
#endif
  for (long long c = 0; c < static_cast<long long>(chunk_count); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * n / chunk_count;
    const std::size_t hi = (static_cast<std::size_t>(c) + 1) * n / chunk_count;
    double best = -1.0;
    std::size_t arg = lo;
    for (std::size_t k = lo; k < hi; ++k) {
      const double gap =
          std::abs(y_eval(inputs[k]).value - y_oracle(inputs[k], radial_steps, angular_steps));
      if (gap > best) {
        best = gap;
        arg = k;
      }
    }
    chunk_gap[static_cast<std::size_t>(c)] = best;
    chunk_arg[static_cast<std::size_t>(c)] = arg;
  }

  SweepResult res;
  res.count = n;
  for (std::size_t c = 0; c < chunk_count; ++c) {
    if (chunk_gap[c] > res.max_gap) {
      res.max_gap = chunk_gap[c];
      res.worst = inputs[chunk_arg[c]];
    }
  }
  return res;
}

}  // namespace hankelforge
