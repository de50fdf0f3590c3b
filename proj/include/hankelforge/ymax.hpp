#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace hankelforge {

/// Inputs of Y(A,B,C) = max over the closed unit disk of
/// |A + Bz + Cz^2| + 1 - |z|^2, with A, B, C real.
struct YInput {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

enum class YBranch {
  i_sum,             // |A| + |B| + |C|
  i_parabola,        // 1 + |A| + B^2 / (4(1 - |C|))
  ii_neg_parabola,   // 1 - |A| + B^2 / (4(1 - |C|))
  ii_pos_parabola,   // 1 + |A| + B^2 / (4(1 + |C|))
  r_first,           // |A| + |B| - |C|
  r_second,          // -|A| + |B| + |C|
  r_sqrt             // (|C| + |A|) sqrt(1 - B^2/(4AC))
};

std::string_view branch_name(YBranch b);

struct YResult {
  double value = 0.0;
  YBranch branch = YBranch::i_parabola;
  std::optional<std::complex<double>> argmax_hint;
  /// Set when the r_sqrt radicand went below -1e-9 and had to be clamped.
  bool consistency_flag = false;
};

/// Closed-form evaluation through the full decision tree. On a branch
/// condition boundary (equality within 1e-12) every adjacent branch value
/// is computed and the largest is returned, since the maximum itself is
/// continuous and only the labeling is ambiguous there.
YResult y_eval(const YInput& in);

/// The objective |A + Bz + Cz^2| + 1 - |z|^2.
double y_objective(const YInput& in, std::complex<double> z);

/// Brute-force maximization over a polar grid of the closed disk, followed
/// by three grid-zoom refinement rounds (factor 10) around the best cells.
/// Real coefficients give conjugate symmetry, so only the upper half disk
/// is scanned. Both step counts must be at least 64.
double y_oracle(const YInput& in, int radial_steps = 64, int angular_steps = 64);

struct SweepResult {
  double max_gap = 0.0;
  YInput worst;
  std::size_t count = 0;
};

/// Seeded triples in [-box, box]^3; when requested, roughly one in twenty
/// is placed on a branch-condition boundary (|B| = 2(1-|C|) or
/// B^2 = -4AC(C^-2 - 1)).
std::vector<YInput> sample_y_inputs(std::size_t count, std::uint64_t seed,
                                    double box = 3.0,
                                    bool include_boundary_samples = true);

/// max |y_eval - y_oracle| over the sample set. The parallel path chunks
/// the samples statically and reduces serially, so the result does not
/// depend on the worker count.
SweepResult oracle_agreement_sweep(const std::vector<YInput>& inputs,
                                   int radial_steps = 64, int angular_steps = 64,
                                   bool parallel = true, int threads = 0);

}  // namespace hankelforge
