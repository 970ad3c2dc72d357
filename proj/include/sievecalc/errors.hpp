#pragma once

#include <stdexcept>
#include <string>

namespace sievecalc {

enum class Errc {
  out_of_range,
  hypothesis_violation,
  domain,
  precision,
  budget,
  no_convergence,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::out_of_range:         return "OUT_OF_RANGE";
    case Errc::hypothesis_violation: return "HYPOTHESIS_VIOLATION";
    case Errc::domain:               return "DOMAIN";
    case Errc::precision:            return "PRECISION";
    case Errc::budget:               return "BUDGET";
    case Errc::no_convergence:       return "NO_CONVERGENCE";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace sievecalc
