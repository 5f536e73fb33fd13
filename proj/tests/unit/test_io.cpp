#include "fixtures.hpp"
#include "hbtensor/error.hpp"
#include "hbtensor/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace hbtensor;
using hbtensor::testing::worked_example;
using hbtensor::testing::random_hbgraph;

namespace {

std::string data(const std::string& name) { return std::string(HBTENSOR_DATA_DIR) + "/" + name; }

std::string parse_message(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) return e.what();
    return std::string("wrong kind: ") + e.what();
  }
  return "no error";
}

}  // namespace

TEST(Io, FixtureMatchesBuiltExample) {
  EXPECT_EQ(io::hbgraph_from_json(io::read_file(data("worked_example.json"))), worked_example());
}

TEST(Io, HbGraphRoundTrip) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    auto h = random_hbgraph(rng, 6, 5, 4);
    if (i % 2) {
      std::vector<Rational> w;
      for (std::size_t j = 0; j < h.size(); ++j) w.emplace_back(static_cast<int>(j) + 1, 3);
      h = h.with_weights(w);
    }
    const auto text = io::hbgraph_to_json(h);
    const auto back = io::hbgraph_from_json(text);
    EXPECT_EQ(back, h);
    EXPECT_EQ(io::hbgraph_to_json(back), text);
  }
}

TEST(Io, RationalMultiplicities) {
  auto h = HbGraph::from_lists({"a", "b"}, {{{"a", Rational(1, 2)}, {"b", 2}}});
  auto text = io::hbgraph_to_json(h);
  EXPECT_NE(text.find("\"1/2\""), std::string::npos);
  EXPECT_EQ(io::hbgraph_from_json(text), h);
  auto decimal = io::hbgraph_from_json(R"({"vertices":["a"],"edges":[{"mult":{"a":0.75}}]})");
  EXPECT_EQ(decimal.edge(0).mult("a"), Rational(3, 4));
}

TEST(Io, ParseDiagnostics) {
  EXPECT_NE(parse_message([] { io::hbgraph_from_json(io::read_file(data("malformed.json"))); }).find("line 4"),
            std::string::npos);
  EXPECT_NE(parse_message([] { io::hbgraph_from_json(R"({"vertices":["a"],"edges":[{"mult":{"z":1}}]})"); })
                .find("$.edges[0].mult.z"),
            std::string::npos);
  EXPECT_NE(parse_message([] { io::hbgraph_from_json(R"({"edges":[]})"); }).find("vertices"), std::string::npos);
  EXPECT_NE(parse_message([] { io::hbgraph_from_json(R"({"vertices":["a"],"edges":[{"mult":{"a":-1}}]})"); })
                .find("$.edges[0].mult.a"),
            std::string::npos);
  EXPECT_NE(parse_message([] { io::hbgraph_from_json(R"({"vertices":["a","a"],"edges":[]})"); }).find("$.vertices"),
            std::string::npos);
  EXPECT_NE(parse_message([] { io::read_file(data("missing.json")); }), "no error");
}

TEST(Io, MsetJson) {
  auto u = make_universe({"x", "y"});
  auto a = Multiset::from_ids(u, {{"y", 3}});
  auto text = io::mset_to_json(a);
  EXPECT_EQ(io::mset_from_json(text), a);
}

TEST(Io, TraceRoundTrip) {
  for (auto approach : {Approach::straightforward, Approach::silo, Approach::layered}) {
    auto trace = uniformize(worked_example(), approach).trace;
    auto text = io::trace_to_json(trace);
    EXPECT_EQ(io::trace_from_json(text), trace);
  }
  auto minimal = io::trace_from_json(R"({"approach":"silo","r_h":2,"vertices":["a","b"],"null_vertices":{"__N1":3}})");
  EXPECT_EQ(minimal.n_a(), 1u);
  EXPECT_EQ(minimal.dim(), 3u);
}

TEST(Io, CooRoundTripAndFormat) {
  auto t = e_adjacency_tensor(worked_example(), Approach::silo).tensor;
  std::ostringstream os;
  io::write_coo(os, t);
  EXPECT_EQ(os.str(),
            "# order=5 dim=11 entries=4\n"
            "1 1 4 4 5  1/6\n"
            "2 2 2 3 11  1/4\n"
            "3 5 5 10 10  1/6\n"
            "6 8 8 8 8  1\n");
  std::istringstream is(os.str());
  EXPECT_EQ(io::read_coo(is), t);

  std::ostringstream full;
  io::write_coo(full, t, CooMode::full);
  std::istringstream fis(full.str());
  EXPECT_EQ(io::read_coo(fis), t);
}

TEST(Io, CooRejectsInconsistentInput) {
  auto read = [](const std::string& text) {
    std::istringstream is(text);
    return io::read_coo(is);
  };
  EXPECT_NE(parse_message([&] { read("1 2  1\n"); }), "no error");
  EXPECT_NE(parse_message([&] { read("# order=2 dim=2 entries=2\n1 2  1\n"); }), "no error");
  EXPECT_NE(parse_message([&] { read("# order=2 dim=2 entries=1\n1 5  1\n"); }), "no error");
  EXPECT_NE(parse_message([&] { read("# order=2 dim=2 entries=2\n1 2  1\n2 1  3\n"); }), "no error");
  EXPECT_NE(parse_message([&] { read("# order=2 dim=2 entries=1\n1 2  x\n"); }), "no error");
  EXPECT_EQ(read("# order=2 dim=2 entries=2\n1 2  1/3\n2 1  1/3\n").at({0, 1}), Rational(1, 3));
}

TEST(Io, TensorJsonRoundTrip) {
  auto t = e_adjacency_tensor(worked_example(), Approach::layered).tensor;
  auto text = io::tensor_to_json(t);
  EXPECT_NE(text.find("\"1/12\""), std::string::npos);
  EXPECT_EQ(io::tensor_from_json(text), t);
}

TEST(Io, IncidenceCsv) {
  EXPECT_EQ(io::incidence_to_csv(worked_example()),
            "vertex,e1,e2,e3,e4\n"
            "v1,2,0,0,0\n"
            "v2,0,3,0,0\n"
            "v3,0,1,1,0\n"
            "v4,2,0,0,0\n"
            "v5,1,0,2,0\n"
            "v6,0,0,0,1\n"
            "v7,0,0,0,0\n");
}
