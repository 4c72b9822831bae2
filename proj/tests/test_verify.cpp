#include <doctest.h>

#include "lapcon/verify.hpp"
#include "test_util.hpp"

using namespace lapcon;
namespace tu = lapcon::testutil;

TEST_CASE("graph_from_mask enumerates all labeled digraphs") {
  CHECK(graph_from_mask(3, 0).arcs().empty());
  const Digraph full = graph_from_mask(3, 63);
  CHECK(full.arcs().size() == 6);
  const Digraph one = graph_from_mask(3, 1);  // lowest bit is pair (0, 1)
  REQUIRE(one.arcs().size() == 1);
  CHECK(one.arcs()[0].source == 0);
  CHECK(one.arcs()[0].target == 1);
}

TEST_CASE("path graph passes the suite with the documented expected failure") {
  VerifyOptions opt;
  opt.cesaro_m = 2000;  // keep the unit test quick
  const auto checks = verify_graph(tu::path(3), opt);
  CHECK(all_pass(checks));
  bool saw_expected_failure = false;
  for (const CheckResult& c : checks)
    if (c.name == "lemma2_original_formula") {
      CHECK(c.pass);
      CHECK(c.expected_failure);
      saw_expected_failure = true;
    }
  CHECK(saw_expected_failure);
}

TEST_CASE("strongly connected graph yields a consensus check") {
  VerifyOptions opt;
  opt.cesaro_m = 2000;
  const auto checks = verify_graph(tu::two_cycle(), opt);
  CHECK(all_pass(checks));
  bool consensus_checked = false;
  for (const CheckResult& c : checks)
    if (c.name == "consensus_spread" && c.detail.rfind("skipped", 0) != 0) consensus_checked = true;
  CHECK(consensus_checked);
}

TEST_CASE("exhaustive sweep over n=2 passes") {
  VerifyOptions opt;
  opt.cesaro_m = 2000;
  const ExhaustiveResult res = verify_exhaustive(2, opt);
  CHECK(res.graph_count == 4);
  CHECK(res.pass);
}
