#include "hankelforge/report_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hankelforge {

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  return std::nullopt;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

// Tiny structured JSON writer; enough for the report shapes used here.
struct JsonWriter {
  std::ostringstream os;
  bool need_comma = false;

  void comma() {
    if (need_comma) os << ",";
    need_comma = false;
  }
  void open_object() { comma(); os << "{"; }
  void close_object() { os << "}"; need_comma = true; }
  void open_array(const std::string& key) { comma(); os << "\"" << key << "\":["; }
  void close_array() { os << "]"; need_comma = true; }
  void key(const std::string& k) { comma(); os << "\"" << k << "\":"; }
  void string_field(const std::string& k, const std::string& v) {
    key(k);
    os << "\"" << json_escape(v) << "\"";
    need_comma = true;
  }
  void number_field(const std::string& k, double v) {
    key(k);
    // JSON has no literal for non-finite values.
    if (std::isfinite(v))
      os << format_double(v);
    else
      os << "null";
    need_comma = true;
  }
  void int_field(const std::string& k, long long v) {
    key(k);
    os << v;
    need_comma = true;
  }
  void bool_field(const std::string& k, bool v) {
    key(k);
    os << (v ? "true" : "false");
    need_comma = true;
  }
};

void write_witness(JsonWriter& w, const SchurParams& p) {
  w.key("witness");
  w.need_comma = false;
  w.open_object();
  w.number_field("tau1", p.tau1);
  w.number_field("tau2_re", p.tau2.real());
  w.number_field("tau2_im", p.tau2.imag());
  w.number_field("tau3_re", p.tau3.real());
  w.number_field("tau3_im", p.tau3.imag());
  w.close_object();
}

}  // namespace

std::string emit_report(const CertificationReport& rep, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      JsonWriter w;
      w.open_object();
      w.string_field("class", std::string(class_name(rep.cls)));
      w.string_field("bound_exact", rep.bound.str());
      w.string_field("theoretical_bound", rep.bound.str());
      w.number_field("bound_float", rep.bound.value());
      w.number_field("search_max", rep.search_max);
      w.number_field("gap", rep.gap);
      w.number_field("max_violation", rep.max_violation);
      write_witness(w, rep.witness);
      w.key("grid");
      w.need_comma = false;
      w.open_object();
      w.int_field("n_tau1", rep.grid.n_tau1);
      w.int_field("n_tau2_modulus", rep.grid.n_tau2_modulus);
      w.int_field("n_tau2_phase", rep.grid.n_tau2_phase);
      w.int_field("n_tau3_phase", rep.grid.n_tau3_phase);
      w.int_field("refinement_rounds", rep.grid.refinement_rounds);
      w.string_field("tau3_domain", rep.tau3_note);
      w.close_object();
      w.int_field("evaluations", static_cast<long long>(rep.evaluations));
      w.open_array("diagnostics");
      bool first = true;
      for (const CaseDiagnostic& d : rep.diagnostics) {
        if (!first) w.os << ",";
        first = false;
        w.need_comma = false;
        w.open_object();
        w.number_field("tau1", d.tau1);
        w.number_field("slice_max", d.slice_max);
        w.number_field("envelope", d.envelope);
        w.close_object();
      }
      w.close_array();
      w.close_object();
      w.os << "\n";
      return w.os.str();
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "class,bound_exact,bound_float,search_max,gap,max_violation,"
            "witness_tau1,witness_tau2_re,witness_tau2_im,witness_tau3_re,witness_tau3_im,"
            "n_tau1,n_tau2_modulus,n_tau2_phase,n_tau3_phase,refinement_rounds,evaluations\n";
      os << class_name(rep.cls) << "," << rep.bound.str() << ","
         << format_double(rep.bound.value()) << "," << format_double(rep.search_max) << ","
         << format_double(rep.gap) << "," << format_double(rep.max_violation) << ","
         << format_double(rep.witness.tau1) << "," << format_double(rep.witness.tau2.real())
         << "," << format_double(rep.witness.tau2.imag()) << ","
         << format_double(rep.witness.tau3.real()) << ","
         << format_double(rep.witness.tau3.imag()) << "," << rep.grid.n_tau1 << ","
         << rep.grid.n_tau2_modulus << "," << rep.grid.n_tau2_phase << ","
         << rep.grid.n_tau3_phase << "," << rep.grid.refinement_rounds << ","
         << rep.evaluations << "\n";
      return os.str();
    }
    case OutputFormat::text: {
      std::ostringstream os;
      os << "class            = " << class_name(rep.cls) << "\n"
         << "bound            = " << rep.bound.str() << " = "
         << format_double(rep.bound.value()) << "\n"
         << "search_max       = " << format_double(rep.search_max) << "\n"
         << "gap              = " << format_double(rep.gap) << "\n"
         << "max_violation    = " << format_double(rep.max_violation) << "\n"
         << "witness          = (tau1 = " << format_double(rep.witness.tau1) << ", tau2 = "
         << format_double(rep.witness.tau2.real()) << " + "
         << format_double(rep.witness.tau2.imag()) << "i, tau3 = "
         << format_double(rep.witness.tau3.real()) << " + "
         << format_double(rep.witness.tau3.imag()) << "i)\n"
         << "grid             = " << rep.grid.n_tau1 << " x " << rep.grid.n_tau2_modulus
         << " x " << rep.grid.n_tau2_phase << " x " << rep.grid.n_tau3_phase << ", "
         << rep.grid.refinement_rounds << " refinement rounds\n"
         << "evaluations      = " << rep.evaluations << "\n"
         << "note             = " << rep.tau3_note << "\n";
      return os.str();
    }
  }
  return {};
}

std::string emit_report(const ExtremalReport& rep, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      JsonWriter w;
      w.open_object();
      w.string_field("class", std::string(class_name(rep.cls)));
      w.string_field("bound_exact", rep.bound.str());
      w.number_field("bound_float", rep.bound.value());
      w.open_array("candidates");
      bool first = true;
      for (const ExtremalCandidate& c : rep.candidates) {
        if (!first) w.os << ",";
        first = false;
        w.need_comma = false;
        w.open_object();
        w.string_field("label", c.label);
        w.string_field("driver", c.driver_formula);
        w.number_field("c1_re", c.driver_coeffs.c1.real());
        w.number_field("c1_im", c.driver_coeffs.c1.imag());
        w.number_field("c2_re", c.driver_coeffs.c2.real());
        w.number_field("c2_im", c.driver_coeffs.c2.imag());
        w.number_field("c3_re", c.driver_coeffs.c3.real());
        w.number_field("c3_im", c.driver_coeffs.c3.imag());
        w.bool_field("coeffs_admissible", c.coeffs_admissible);
        w.number_field("a2_re", c.a2.real());
        w.number_field("a2_im", c.a2.imag());
        w.number_field("a3_re", c.a3.real());
        w.number_field("a3_im", c.a3.imag());
        w.number_field("a4_re", c.a4.real());
        w.number_field("a4_im", c.a4.imag());
        w.number_field("h21_re", c.h21.real());
        w.number_field("h21_im", c.h21.imag());
        w.number_field("abs_h21", c.abs_h21);
        w.bool_field("matches_bound", c.matches_bound);
        w.bool_field("membership_ok", c.membership_ok);
        w.number_field("driver_min_re", c.driver_min_re);
        w.bool_field("pole_in_disk", c.pole_in_disk.has_value());
        if (c.pole_in_disk) {
          w.number_field("pole_re", c.pole_in_disk->real());
          w.number_field("pole_im", c.pole_in_disk->imag());
        }
        w.number_field("truncated_margin", c.truncated_margin);
        w.number_field("path_agreement", c.path_agreement);
        w.close_object();
      }
      w.close_array();
      w.close_object();
      w.os << "\n";
      return w.os.str();
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "class,bound_exact,label,abs_h21,matches_bound,membership_ok,driver_min_re,"
            "pole_in_disk,a2_re,a3_re,a4_re,truncated_margin\n";
      for (const ExtremalCandidate& c : rep.candidates) {
        os << class_name(rep.cls) << "," << rep.bound.str() << "," << c.label << ","
           << format_double(c.abs_h21) << "," << (c.matches_bound ? 1 : 0) << ","
           << (c.membership_ok ? 1 : 0) << "," << format_double(c.driver_min_re) << ","
           << (c.pole_in_disk ? 1 : 0) << "," << format_double(c.a2.real()) << ","
           << format_double(c.a3.real()) << "," << format_double(c.a4.real()) << ","
           << format_double(c.truncated_margin) << "\n";
      }
      return os.str();
    }
    case OutputFormat::text: {
      std::ostringstream os;
      os << "class = " << class_name(rep.cls) << ", bound = " << rep.bound.str() << " = "
         << format_double(rep.bound.value()) << "\n";
      for (const ExtremalCandidate& c : rep.candidates) {
        os << "candidate " << c.label << "\n"
           << "  driver           = " << c.driver_formula << "\n"
           << "  (c1, c2, c3)     = (" << format_double(c.driver_coeffs.c1.real()) << ", "
           << format_double(c.driver_coeffs.c2.real()) << ", "
           << format_double(c.driver_coeffs.c3.real()) << ")"
           << (c.coeffs_admissible ? "" : "  [outside |c_n| <= 2]") << "\n"
           << "  (a2, a3, a4)     = (" << format_double(c.a2.real()) << ", "
           << format_double(c.a3.real()) << ", " << format_double(c.a4.real()) << ")\n"
           << "  |H21|            = " << format_double(c.abs_h21)
           << (c.matches_bound ? "  (matches bound)" : "  (does not match bound)") << "\n"
           << "  membership_ok    = " << (c.membership_ok ? "true" : "false") << "\n"
           << "  driver_min_re    = " << format_double(c.driver_min_re) << "\n";
        if (c.pole_in_disk)
          os << "  pole_in_disk     = " << format_double(c.pole_in_disk->real()) << " + "
             << format_double(c.pole_in_disk->imag()) << "i\n";
        os << "  truncated_margin = " << format_double(c.truncated_margin) << "\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string emit_key_values(const KeyValues& kv, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::json: {
      std::ostringstream os;
      os << "{";
      bool first = true;
      for (const auto& [k, v] : kv) {
        if (!first) os << ",";
        first = false;
        // Numeric and boolean values pass through unquoted.
        const bool raw = !v.empty() && (v == "true" || v == "false" ||
                                        v.find_first_not_of("0123456789+-.eE") ==
                                            std::string::npos);
        os << "\"" << json_escape(k) << "\":";
        if (raw)
          os << v;
        else
          os << "\"" << json_escape(v) << "\"";
      }
      os << "}\n";
      return os.str();
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      bool first = true;
      for (const auto& [k, v] : kv) {
        if (!first) os << ",";
        first = false;
        os << k;
      }
      os << "\n";
      first = true;
      for (const auto& [k, v] : kv) {
        if (!first) os << ",";
        first = false;
        os << v;
      }
      os << "\n";
      return os.str();
    }
    case OutputFormat::text: {
      std::ostringstream os;
      for (const auto& [k, v] : kv) os << k << " = " << v << "\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace hankelforge
