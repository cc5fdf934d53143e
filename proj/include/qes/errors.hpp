#pragma once

#include <stdexcept>
#include <string>

namespace qes {

enum class ErrorKind {
  invalid_argument,
  parse,
  division_by_zero,
  unsupported_order,
  degenerate_spec,
  infeasible_weight,
  constraint_violation,
  unknown_id,
  out_of_range,
  recursion_breakdown,
  truncation_failure,
  factorization_failure,
  oracle_divergence,
  degenerate_spectrum,
  non_real_spectrum,
  domain,
  singularity,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qes
