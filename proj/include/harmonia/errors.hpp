#pragma once

#include <stdexcept>
#include <string>

namespace harmonia {

enum class Errc {
  degenerate_point,
  dimension_mismatch,
  zero_polynomial,
  both_zero,
  not_quasiconformal,
  too_few_planes,
  not_subgeneral_position,
  infeasible,
  stage_out_of_range,
  indeterminate_point,
  degenerate_curve,
  all_zero,
  hypothesis_failed,
  config_invalid,
  precondition_failed,
  too_few,
  no_witness,
  parse_error
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace harmonia
