#pragma once

#include <stdexcept>
#include <string>

namespace coag {

enum class errc {
  grid_mismatch,
  invalid_argument,
  unsupported_order,
  truncation,      // exponentially weighted integrand has not decayed at y_max
  blow_up,         // closed-form moment evaluated at or past its blow-up time
  solver_failure,  // NaN/overflow mid-run, or clipping budget exceeded
  config,          // malformed or inconsistent config file
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::grid_mismatch: return "grid_mismatch";
    case errc::invalid_argument: return "invalid_argument";
    case errc::unsupported_order: return "unsupported_order";
    case errc::truncation: return "truncation";
    case errc::blow_up: return "blow_up";
    case errc::solver_failure: return "solver_failure";
    case errc::config: return "config";
  }
  return "unknown";
}

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace coag
