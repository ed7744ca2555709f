#include <doctest.h>

#include <algorithm>
#include <random>

#include "hsc/matching.hpp"
#include "hsc/reach.hpp"
#include "hsc/select.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace hsc;
using namespace hsc::testing;

namespace {

std::vector<NaivePick> steps_as_picks(const SelectionResult& r) {
  std::vector<NaivePick> out;
  for (const auto& s : r.steps) out.push_back({s.node, s.gain});
  return out;
}

}  // namespace

TEST_CASE("verifier on the fixtures") {
  VerifyResult ok = verify_structural_controllability(example_pair(), {0});
  CHECK(ok.controllable);
  CHECK(ok.accessibility_ok);
  CHECK(ok.dilation_free);
  CHECK_FALSE(ok.odd_order);
  CHECK(ok.inaccessible.empty());

  VerifyResult miss = verify_structural_controllability(example_pair(), {1});
  CHECK_FALSE(miss.controllable);
  CHECK_FALSE(miss.accessibility_ok);
  CHECK(miss.inaccessible == std::vector<NodeId>{0, 2});

  // multi head: accessible but one signal cannot cover two nodes
  VerifyResult dil = verify_structural_controllability(multi_head_pair(), {0});
  CHECK_FALSE(dil.controllable);
  CHECK(dil.accessibility_ok);
  CHECK_FALSE(dil.dilation_free);
  CHECK(dil.uncovered.size() == 1);

  VerifyResult both = verify_structural_controllability(multi_head_pair(), {0, 1});
  CHECK(both.controllable);
}

TEST_CASE("odd order flags accessibility semantics") {
  DirectedHypergraph h = DirectedHypergraph::from_edges(
      2, 3, {Hyperedge{{1}, {0, 0}, false}});
  VerifyResult r = verify_structural_controllability(h, {0});
  CHECK(r.odd_order);
  CHECK(r.controllable);
  CHECK_FALSE(verify_structural_controllability(example_pair(), {0}).odd_order);
}

TEST_CASE("existing control edges participate in verification") {
  DirectedHypergraph h = with_drivers(example_pair(), {0});
  VerifyResult r = verify_structural_controllability(h, {});
  CHECK(r.controllable);
}

TEST_CASE("matching selector reports uncovered nodes honestly") {
  SelectionResult r = select_matching_only(example_pair());
  CHECK(r.method == Method::kMatching);
  CHECK(r.drivers == std::vector<NodeId>{0});
  CHECK(r.lower_bound == 1);
  CHECK(r.controllable);  // covering node 0 also reaches everything here

  SelectionResult r2 = select_matching_only(multi_head_pair());
  CHECK(r2.drivers == std::vector<NodeId>{0, 2});
  CHECK(r2.controllable);

  // accessible-but-uncovered instances stay uncontrollable
  DirectedHypergraph loop = DirectedHypergraph::from_edges(
      2, 3, {Hyperedge{{0}, {1, 1}, false}, Hyperedge{{1}, {0, 0}, false}});
  SelectionResult r3 = select_matching_only(loop);
  CHECK(r3.lower_bound == 0);
  CHECK(r3.drivers.empty());
  CHECK_FALSE(r3.controllable);
}

TEST_CASE("selectors reject controlled inputs") {
  DirectedHypergraph h = with_drivers(example_pair(), {0});
  CHECK_THROWS_AS(select_mag(h), ValidationError);
  CHECK_THROWS_AS(select_matching_only(h), ValidationError);
  CHECK_THROWS_AS(select_greedy(h), ValidationError);
  CHECK_THROWS_AS(select_optimal_bfs(h), ValidationError);
}

TEST_CASE("mag follows the full rescan greedy exactly") {
  std::mt19937_64 rng(51);
  RandomSpec spec;
  spec.min_n = 2;
  spec.max_n = 60;
  spec.ks = {2, 3, 4, 6};
  spec.edges_per_node = 1.2;
  spec.multi_head_prob = 0.25;
  for (int i = 0; i < 120; ++i) {
    DirectedHypergraph h = random_instance(rng, spec);
    SelectionResult r = select_mag(h);
    LowerBound lb = matching_lower_bound(h);

    REQUIRE(r.lower_bound == lb.count);
    CHECK(steps_as_picks(r) == naive_greedy(h, lb.uncovered));

    std::vector<NodeId> expect = lb.uncovered;
    for (const auto& s : r.steps) expect.push_back(s.node);
    std::sort(expect.begin(), expect.end());
    CHECK(r.drivers == expect);
    CHECK(r.controllable);
    CHECK(verify_structural_controllability(h, r.drivers).controllable);
  }
}

TEST_CASE("pure greedy matches the rescan reference from the empty set") {
  std::mt19937_64 rng(52);
  RandomSpec spec;
  spec.min_n = 2;
  spec.max_n = 40;
  spec.ks = {4};
  spec.edges_per_node = 1.3;
  for (int i = 0; i < 80; ++i) {
    DirectedHypergraph h = random_instance(rng, spec);
    SelectionResult r = select_greedy(h);
    std::vector<NaivePick> expect = naive_greedy(h, {});
    std::vector<NaivePick> got = steps_as_picks(r);
    REQUIRE(got.size() >= expect.size());
    got.resize(expect.size());
    CHECK(got == expect);
    CHECK(r.controllable);
  }
}

TEST_CASE("greedy ties break to the lowest id") {
  // nodes 0 and 2 both gain exactly themselves plus one successor
  DirectedHypergraph h = DirectedHypergraph::from_edges(
      4, 3,
      {Hyperedge{{1}, {0, 0}, false}, Hyperedge{{3}, {2, 2}, false}});
  SelectionResult r = select_greedy(h);
  REQUIRE(r.steps.size() == 2);
  CHECK(r.steps[0].node == 0);
  CHECK(r.steps[0].gain == 2);
  CHECK(r.steps[1].node == 2);
}

TEST_CASE("optimal search finds the first minimal verified subset") {
  SelectionResult r = select_optimal_bfs(example_pair());
  CHECK(r.drivers == std::vector<NodeId>{0});
  CHECK(r.controllable);

  SelectionResult r2 = select_optimal_bfs(multi_head_pair());
  CHECK(r2.drivers == std::vector<NodeId>{0, 1});

  DirectedHypergraph big = DirectedHypergraph::from_edges(13, 2, {});
  CHECK_THROWS_AS(select_optimal_bfs(big), CapacityError);
}

TEST_CASE("optimal equals an independent subset scan") {
  std::mt19937_64 rng(53);
  RandomSpec spec;
  spec.min_n = 2;
  spec.max_n = 7;
  spec.ks = {3, 4};
  spec.edges_per_node = 1.3;
  spec.multi_head_prob = 0.2;
  for (int i = 0; i < 40; ++i) {
    DirectedHypergraph h = random_instance(rng, spec);
    SelectionResult r = select_optimal_bfs(h);

    const std::uint32_t n = h.num_nodes();
    std::vector<NodeId> first;
    // combinations of ascending size, lexicographic within a size
    bool done = false;
    for (std::uint32_t size = 1; size <= n && !done; ++size) {
      std::vector<NodeId> comb(size);
      for (std::uint32_t j = 0; j < size; ++j) comb[j] = j;
      while (!done) {
        if (verify_structural_controllability(h, comb).controllable) {
          first = comb;
          done = true;
          break;
        }
        std::int64_t j = static_cast<std::int64_t>(size) - 1;
        while (j >= 0 && comb[j] == n - size + j) --j;
        if (j < 0) break;
        ++comb[j];
        for (std::uint32_t l = static_cast<std::uint32_t>(j) + 1; l < size; ++l)
          comb[l] = comb[l - 1] + 1;
      }
    }
    REQUIRE(done);
    CHECK(r.drivers == first);
    CHECK(r.controllable);
  }
}

TEST_CASE("sandwich inequality on random instances") {
  std::mt19937_64 rng(54);
  RandomSpec spec;
  spec.min_n = 4;
  spec.max_n = 9;
  spec.ks = {4, 6};
  spec.edges_per_node = 1.0;
  for (int i = 0; i < 60; ++i) {
    DirectedHypergraph h = random_instance(rng, spec);
    SelectionResult lb = select_matching_only(h);
    SelectionResult opt = select_optimal_bfs(h);
    SelectionResult mag = select_mag(h);
    CHECK(lb.lower_bound <= opt.drivers.size());
    CHECK(opt.drivers.size() <= mag.drivers.size());
  }
}

TEST_CASE("selection steps report their runtime and method names round trip") {
  SelectionResult r = run_selection(chain3(), Method::kMag);
  CHECK(r.method == Method::kMag);
  CHECK(r.runtime_ms >= 0.0);
  for (Method m : {Method::kMatching, Method::kGreedy, Method::kMag, Method::kOptimal}) {
    CHECK(method_from_name(method_name(m)) == m);
  }
  CHECK_THROWS_AS(method_from_name("unknown"), ValidationError);
}
