#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hsc/json_io.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

using namespace hsc;
using namespace hsc::testing;

TEST_CASE("serialized ids are 1-based and keys ordered") {
  DirectedHypergraph h = with_drivers(example_pair(), {0});
  Json j = hypergraph_to_json(h);
  CHECK(j["n"] == 3);
  CHECK(j["k"] == 4);
  REQUIRE(j["edges"].size() == 2);
  CHECK(j["edges"][0]["head"] == Json::array({2}));
  CHECK(j["edges"][0]["tail"] == Json::array({1, 1, 1}));
  CHECK(j["edges"][1]["head"] == Json::array({3}));
  CHECK(j["edges"][1]["tail"] == Json::array({1, 2, 2}));
  REQUIRE(j["controls"].size() == 1);
  CHECK(j["controls"][0]["node"] == 1);
  CHECK(j["controls"][0]["input"] == 1);

  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "k", "edges", "controls"});
}

TEST_CASE("write then read is identity and write is stable") {
  std::mt19937_64 rng(71);
  RandomSpec spec;
  spec.min_n = 2;
  spec.max_n = 9;
  spec.ks = {2, 3, 4, 5};
  spec.edges_per_node = 1.4;
  spec.multi_head_prob = 0.3;
  spec.control_prob = 0.25;
  for (int i = 0; i < 50; ++i) {
    DirectedHypergraph h = random_instance(rng, spec);
    std::string text = write_hypergraph(h);
    DirectedHypergraph back = read_hypergraph(text);
    CHECK(back == h);
    CHECK(write_hypergraph(back) == text);
  }
}

TEST_CASE("metadata block survives the round trip") {
  Json meta;
  meta["generator"] = "test";
  meta["seed"] = 9;
  std::string text = write_hypergraph(example_pair(), &meta);
  Json meta_out;
  DirectedHypergraph h = read_hypergraph(text, &meta_out);
  CHECK(h == example_pair());
  CHECK(meta_out == meta);

  Json none;
  read_hypergraph(write_hypergraph(example_pair()), &none);
  CHECK(none.is_null());
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(read_hypergraph("{}"), ValidationError);
  CHECK_THROWS_AS(read_hypergraph("not json"), ValidationError);
  // missing controls key
  CHECK_THROWS_AS(read_hypergraph(R"({"n":2,"k":3,"edges":[]})"),
                  ValidationError);
  // 0-based or out-of-range ids
  CHECK_THROWS_AS(
      read_hypergraph(
          R"({"n":2,"k":3,"edges":[{"head":[0],"tail":[1,1]}],"controls":[]})"),
      ValidationError);
  CHECK_THROWS_AS(
      read_hypergraph(
          R"({"n":2,"k":3,"edges":[{"head":[3],"tail":[1,1]}],"controls":[]})"),
      ValidationError);
  // wrong tail arity
  CHECK_THROWS_AS(
      read_hypergraph(
          R"({"n":2,"k":3,"edges":[{"head":[1],"tail":[1]}],"controls":[]})"),
      ValidationError);
}

TEST_CASE("file round trip through disk") {
  std::string path = "json_io_roundtrip.json";
  DirectedHypergraph h = with_drivers(multi_head_pair(), {0});
  save_hypergraph_file(h, path);
  CHECK(load_hypergraph_file(path) == h);
  std::remove(path.c_str());
}

TEST_CASE("golden serialization bytes") {
  std::ifstream f(std::string(HSC_TEST_DATA) + "/example_pair.json",
                  std::ios::binary);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(write_hypergraph(example_pair()) == ss.str());
}
