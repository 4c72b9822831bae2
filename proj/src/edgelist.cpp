#include "lapcon/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "lapcon/errors.hpp"

namespace lapcon {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& reason) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + reason);
}

bool blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string key;
      ls >> key;
      if (key != "n") parse_fail(lineno, "expected header 'n <count>', got '" + key + "'");
      if (!(ls >> n) || n < 0) parse_fail(lineno, "invalid node count");
      std::string extra;
      if (ls >> extra) parse_fail(lineno, "trailing token '" + extra + "' after node count");
      continue;
    }
    Arc a;
    if (!(ls >> a.source >> a.target)) parse_fail(lineno, "expected '<source> <target> [weight]'");
    if (!(ls >> a.weight)) a.weight = 1.0;  // weight optional
    std::string extra;
    if (ls >> extra) parse_fail(lineno, "trailing token '" + extra + "'");
    arcs.push_back(a);
  }
  if (n < 0) parse_fail(lineno, "missing header line 'n <count>'");
  return Digraph::build(n, std::move(arcs));
}

Digraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::file_not_found, path);
  return parse_edge_list(in);
}

void write_edge_list(const Digraph& g, std::ostream& out) {
  out << "n " << g.order() << "\n";
  out.precision(17);
  for (const Arc& a : g.arcs()) out << a.source << " " << a.target << " " << a.weight << "\n";
}

}  // namespace lapcon
