#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conecert {

/// Default relative tolerance for definiteness, membership, and feasibility
/// thresholds. Thresholds scale as tol * max(1, norm estimate) unless a
/// contract states otherwise.
inline constexpr double kDefaultTol = 1e-9;

enum class errc {
  not_symmetric,
  did_not_converge,
  dimension_mismatch,
  nonfinite_entry,
  singular_matrix,
  singular_generators,
  not_self_dual,
  unsupported_cone,
  not_interior,
  not_quasi_monotone,
  not_k_nonnegative,
  not_stable,
  not_diffusive,
  singular_scaling,
  internal_verification_failed,
  scale_too_large,
  parse_error,
  invalid_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_symmetric: return "not_symmetric";
    case errc::did_not_converge: return "did_not_converge";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::nonfinite_entry: return "nonfinite_entry";
    case errc::singular_matrix: return "singular_matrix";
    case errc::singular_generators: return "singular_generators";
    case errc::not_self_dual: return "not_self_dual";
    case errc::unsupported_cone: return "unsupported_cone";
    case errc::not_interior: return "not_interior";
    case errc::not_quasi_monotone: return "not_quasi_monotone";
    case errc::not_k_nonnegative: return "not_k_nonnegative";
    case errc::not_stable: return "not_stable";
    case errc::not_diffusive: return "not_diffusive";
    case errc::singular_scaling: return "singular_scaling";
    case errc::internal_verification_failed:
      return "internal_verification_failed";
    case errc::scale_too_large: return "scale_too_large";
    case errc::parse_error: return "parse_error";
    case errc::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Parse failure with 1-based source location.
class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t line, std::size_t column)
      : error(errc::parse_error, msg + " at line " + std::to_string(line) +
                                     ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

}  // namespace conecert
