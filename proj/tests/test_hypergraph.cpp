#include <doctest.h>

#include <algorithm>
#include <random>

#include "hsc/hypergraph.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace hsc;
using namespace hsc::testing;

TEST_CASE("from_edges canonicalizes order and merges duplicates") {
  std::vector<Hyperedge> edges{
      Hyperedge{{2}, {1, 1, 0}, false},
      Hyperedge{{1}, {0, 0, 0}, false},
      Hyperedge{{2}, {0, 1, 1}, false},  // same as the first after sorting
      Hyperedge{{1, 2}, {0, 0, 0}, false},
  };
  DirectedHypergraph h = DirectedHypergraph::from_edges(3, 4, edges, {{0, 0}});

  REQUIRE(h.num_state_edges() == 3);
  REQUIRE(h.edges().size() == 4);
  CHECK(h.edges()[0].head == std::vector<NodeId>{1});
  CHECK(h.edges()[1].head == std::vector<NodeId>{1, 2});
  CHECK(h.edges()[2].head == std::vector<NodeId>{2});
  CHECK(h.edges()[2].tail == std::vector<NodeId>{0, 1, 1});
  CHECK(h.edges()[3].is_control);
  CHECK(h.edges()[3].tail == std::vector<NodeId>{h.control_node(0)});
  CHECK(h.num_controls() == 1);
}

TEST_CASE("from_edges validates ids, arity and order") {
  CHECK_THROWS_AS(DirectedHypergraph::from_edges(
                      3, 4, {Hyperedge{{3}, {0, 0, 0}, false}}),
                  ValidationError);
  CHECK_THROWS_AS(DirectedHypergraph::from_edges(
                      3, 4, {Hyperedge{{1}, {0, 0}, false}}),
                  ValidationError);
  CHECK_THROWS_AS(DirectedHypergraph::from_edges(
                      3, 4, {Hyperedge{{}, {0, 0, 0}, false}}),
                  ValidationError);
  CHECK_THROWS_AS(DirectedHypergraph::from_edges(3, 1, {}), ValidationError);
  CHECK_THROWS_AS(DirectedHypergraph::from_edges(
                      3, 4, {Hyperedge{{1}, {0, 0, 0}, false}}, {{5, 0}}),
                  ValidationError);
}

TEST_CASE("canonicalize_pattern sorts and dedupes the support") {
  SparsityPattern p;
  p.n = 3;
  p.k = 3;
  p.m = 1;
  p.nonzeros_a = {{2, 1, 0}, {1, 0, 0}, {2, 1, 0}};
  p.nonzeros_b = {{1, 0}, {1, 0}};
  canonicalize_pattern(p);
  CHECK(p.nonzeros_a == std::vector<std::vector<NodeId>>{{1, 0, 0}, {2, 1, 0}});
  CHECK(p.nonzeros_b == std::vector<std::pair<NodeId, NodeId>>{{1, 0}});

  SparsityPattern bad = p;
  bad.nonzeros_a.push_back({0, 0});
  CHECK_THROWS_AS(canonicalize_pattern(bad), ValidationError);
}

TEST_CASE("pattern round trip groups tail permutations into one edge") {
  SparsityPattern p;
  p.n = 3;
  p.k = 4;
  p.m = 1;
  p.nonzeros_a = {{2, 0, 1, 1}, {2, 1, 0, 1}, {2, 1, 1, 0}, {1, 0, 0, 0}};
  p.nonzeros_b = {{0, 0}};
  canonicalize_pattern(p);

  DirectedHypergraph h = build_hypergraph(p);
  REQUIRE(h.num_state_edges() == 2);
  CHECK(h.edges()[0] == Hyperedge{{1}, {0, 0, 0}, false});
  CHECK(h.edges()[1] == Hyperedge{{2}, {0, 1, 1}, false});
  CHECK(h.num_controls() == 1);

  SparsityPattern back = pattern_from_hypergraph(h);
  CHECK(back.nonzeros_a == p.nonzeros_a);
  CHECK(back.nonzeros_b == p.nonzeros_b);

  // A partial permutation group expands to the full group on the way back.
  SparsityPattern partial = p;
  partial.nonzeros_a = {{2, 0, 1, 1}, {1, 0, 0, 0}};
  DirectedHypergraph h2 = build_hypergraph(partial);
  CHECK(pattern_from_hypergraph(h2).nonzeros_a == p.nonzeros_a);
}

TEST_CASE("multi head edges split into one pattern row per head node") {
  DirectedHypergraph h = multi_head_pair();
  SparsityPattern p = pattern_from_hypergraph(h);
  CHECK(p.nonzeros_a ==
        std::vector<std::vector<NodeId>>{{1, 0, 0, 0}, {2, 0, 0, 0}});

  DirectedHypergraph split = build_hypergraph(p);
  CHECK(split.num_state_edges() == 2);
  CHECK(split.edges()[0].head == std::vector<NodeId>{1});
  CHECK(split.edges()[1].head == std::vector<NodeId>{2});
}

TEST_CASE("pattern round trip is exact on random single head instances") {
  std::mt19937_64 rng(61);
  RandomSpec spec;
  spec.min_n = 3;
  spec.max_n = 8;
  spec.ks = {2, 3, 4};
  spec.edges_per_node = 1.5;
  spec.control_prob = 0.2;
  for (int i = 0; i < 50; ++i) {
    DirectedHypergraph h = random_instance(rng, spec);
    CHECK(build_hypergraph(pattern_from_hypergraph(h)) == h);
  }
}

TEST_CASE("with_drivers appends fresh inputs and strip_controls removes them") {
  DirectedHypergraph h = example_pair();
  DirectedHypergraph d = with_drivers(h, {0, 2, 0});
  CHECK(d.num_controls() == 2);
  CHECK(d.edges().size() == 4);
  CHECK(d.edges()[2].is_control);
  CHECK(d.edges()[2].head == std::vector<NodeId>{0});
  CHECK(d.edges()[3].head == std::vector<NodeId>{2});

  DirectedHypergraph d2 = with_drivers(d, {1});
  CHECK(d2.num_controls() == 3);

  CHECK(strip_controls(d2) == h);
  CHECK(strip_controls(h) == h);
}

TEST_CASE("star expansion collapses tail multiplicity and skips control tails") {
  DirectedHypergraph h = DirectedHypergraph::from_edges(
      3, 4, {Hyperedge{{2}, {0, 1, 1}, false}, Hyperedge{{1}, {0, 0, 0}, false}},
      {{0, 0}});
  StarExpansion s = star_expand(h);
  REQUIRE(s.num_nodes == 3);
  REQUIRE(s.num_edges == 3);
  CHECK(s.tail_arcs[0] == std::vector<EdgeId>{0, 1});
  CHECK(s.tail_arcs[1] == std::vector<EdgeId>{1});
  CHECK(s.tail_arcs[2].empty());
  CHECK(s.head_arcs[0] == std::vector<NodeId>{1});
  CHECK(s.head_arcs[1] == std::vector<NodeId>{2});
  CHECK(s.head_arcs[2] == std::vector<NodeId>{0});  // control edge head
  CHECK(s.arc_count() == 6);
}

TEST_CASE("projection digraph keeps self loops and drops control edges") {
  DirectedHypergraph h = DirectedHypergraph::from_edges(
      3, 3, {Hyperedge{{0}, {0, 1}, false}, Hyperedge{{2}, {1, 1}, false}},
      {{1, 0}});
  Digraph g = projection_digraph(h);
  REQUIRE(g.n == 3);
  CHECK(g.out[0] == std::vector<NodeId>{0});
  CHECK(g.out[1] == std::vector<NodeId>{0, 2});
  CHECK(g.out[2].empty());
}
