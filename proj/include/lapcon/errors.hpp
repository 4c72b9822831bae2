#pragma once

#include <stdexcept>
#include <string>

namespace lapcon {

enum class Errc {
  non_positive_weight,
  self_loop,
  duplicate_arc,
  node_out_of_range,
  empty_graph_order,
  non_positive_step_size,
  non_positive_step_or_horizon,
  dimension_mismatch,
  graph_too_large_for_enumeration,
  convergence_failure,
  singular_pairing,
  step_size_outside_stochastic_range,
  no_convergence_within_budget,
  file_not_found,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace lapcon
