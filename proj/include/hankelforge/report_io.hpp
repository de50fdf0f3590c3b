#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hankelforge/certifier.hpp"

namespace hankelforge {

enum class OutputFormat { json, csv, text };

std::optional<OutputFormat> parse_format(std::string_view name);

/// %.15g rendering used for every serialized number, so identical inputs
/// produce byte-identical reports.
std::string format_double(double v);

std::string emit_report(const CertificationReport& rep, OutputFormat fmt);
std::string emit_report(const ExtremalReport& rep, OutputFormat fmt);

/// Ordered key/value output for the small subcommands; values are
/// pre-rendered strings.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
std::string emit_key_values(const KeyValues& kv, OutputFormat fmt);

}  // namespace hankelforge
