#pragma once

#include <iosfwd>
#include <string>

#include "lapcon/digraph.hpp"

namespace lapcon {

/// Edge-list text format: one header line `n <count>`, then one line per arc
/// `<source> <target> <weight>`; the weight is optional (default 1.0) and `#`
/// starts a comment line. Parse errors carry the line number.
Digraph parse_edge_list(std::istream& in);

/// Reads `path`; throws file_not_found / parse_error / digraph build errors.
Digraph load_edge_list(const std::string& path);

void write_edge_list(const Digraph& g, std::ostream& out);

}  // namespace lapcon
