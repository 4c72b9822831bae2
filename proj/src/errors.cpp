#include "lapcon/errors.hpp"

namespace lapcon {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::non_positive_weight: return "NonPositiveWeight";
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_arc: return "DuplicateArc";
    case Errc::node_out_of_range: return "NodeOutOfRange";
    case Errc::empty_graph_order: return "EmptyGraphOrder";
    case Errc::non_positive_step_size: return "NonPositiveStepSize";
    case Errc::non_positive_step_or_horizon: return "NonPositiveStepOrHorizon";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::graph_too_large_for_enumeration: return "GraphTooLargeForEnumeration";
    case Errc::convergence_failure: return "ConvergenceFailure";
    case Errc::singular_pairing: return "SingularPairing";
    case Errc::step_size_outside_stochastic_range: return "StepSizeOutsideStochasticRange";
    case Errc::no_convergence_within_budget: return "NoConvergenceWithinBudget";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace lapcon
