#pragma once

#include <string>

namespace hankelforge {

/// Exact rational constant. Certified bounds are stored as integer
/// fractions so serialized reports never pick up float-literal drift.
struct Fraction {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace hankelforge
