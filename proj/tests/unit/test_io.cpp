#include <string>

#include "doctest.h"
#include "mmtw/errors.hpp"
#include "mmtw/io.hpp"
#include "oracles.hpp"

using namespace mmtw;

namespace {

std::string error_of(const std::string& text, bool td = false) {
  try {
    if (td) {
      parse_td(text);
    } else {
      parse_hypergraph(text);
    }
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a path") {
  const Hypergraph h = parse_hypergraph("p hg 3 2\ne 1 2\ne 2 3\n");
  CHECK(h == Hypergraph(3, {{0, 1}, {1, 2}}));
  CHECK(serialize_hypergraph(h) == "p hg 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("comments, blank lines, unsorted ids and duplicates canonicalize") {
  const std::string raw = "c hello\np hg 4 3\n\ne 3 1\ne 1 3\nc mid\ne 4\nw 2 1.5\nw 4 -2/4\n";
  const Hypergraph h = parse_hypergraph(raw);
  CHECK(h.num_edges() == 2);
  CHECK(h.weight(1) == Rational(3, 2));
  CHECK(h.weight(3) == Rational(-1, 2));
  const std::string canon = serialize_hypergraph(h);
  CHECK(canon == "p hg 4 2\ne 1 3\ne 4\nw 2 3/2\nw 4 -1/2\n");
  CHECK(serialize_hypergraph(parse_hypergraph(canon)) == canon);
}

TEST_CASE("degenerate hypergraphs") {
  const Hypergraph empty_edge = parse_hypergraph("p hg 2 1\ne\n");
  CHECK(empty_edge.has_empty_edge());
  CHECK(serialize_hypergraph(empty_edge) == "p hg 2 1\ne\n");
  CHECK(parse_hypergraph("p hg 0 0\n").num_vertices() == 0);
  CHECK(serialize_hypergraph(parse_hypergraph("p hg 0 0\n")) == "p hg 0 0\n");
  CHECK(parse_hypergraph("p hg 1 0").num_vertices() == 1);
}

TEST_CASE("hypergraph errors carry the line number") {
  CHECK(error_of("p hg 3 1\ne 1 4\n").find("line 2") == 0);
  CHECK(error_of("e 1 2\n").find("line 1") == 0);
  CHECK(error_of("p hg 3 1\nx 1\n").find("line 2") == 0);
  CHECK(error_of("p hg 3 1\ne 1 a\n").find("line 2") == 0);
  CHECK(error_of("p hg 3 1\nw 1 1/0\n").find("line 2") == 0);
  CHECK(error_of("p hg 3 2\ne 1 2\n").find("announces") != std::string::npos);
  CHECK(error_of("p hg 3 1\np hg 3 1\n").find("line 2") == 0);
  CHECK(error_of("").find("header") != std::string::npos);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(format_rational(Rational(3, 2)) == "3/2");
  CHECK(format_rational(Rational(-4)) == "-4");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.x"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("decomposition files") {
  const TreeDecomposition one = parse_td("s td 1 3 3\nb 1 1 2 3\n");
  CHECK(one.num_nodes() == 1);
  CHECK(one.edges.empty());
  CHECK(one.bags[0] == VertexSet{0, 1, 2});
  const TreeDecomposition path = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  CHECK(path.edges == std::vector<std::pair<int, int>>{{0, 1}});
  const TreeDecomposition dup = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n2 1\n");
  CHECK(dup.edges.size() == 1);
  CHECK(serialize_td(dup) == "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
  const TreeDecomposition empty_bag = parse_td("s td 2 1 1\nb 1\nb 2 1\n2 1\n");
  CHECK(empty_bag.bags[0].empty());
  CHECK(serialize_td(empty_bag) == "s td 2 1 1\nb 1\nb 2 1\n1 2\n");
}

TEST_CASE("decomposition errors") {
  CHECK(error_of("s td 3 1 3\nb 1 1\nb 2 2\nb 3 3\n1 2\n2 3\n3 1\n", true).find("cycle") != std::string::npos);
  CHECK(error_of("s td 2 1 2\nb 1 1\nb 2 2\n1 3\n", true).find("line 4") == 0);
  CHECK(error_of("s td 2 1 2\nb 1 1\n", true).find("never defined") != std::string::npos);
  CHECK(error_of("s td 1 2 2\nb 1 1\n", true).find("max bag size") != std::string::npos);
  CHECK(error_of("s td 1 1 2\nb 1 3\n", true).find("line 2") == 0);
  CHECK(error_of("s td 1 1 2\nb 1 1\nb 1 2\n", true).find("twice") != std::string::npos);
  CHECK(error_of("s td 2 1 2\nb 1 1\nb 2 2\n", true).find("disconnected") != std::string::npos);
}

TEST_CASE("property: random hypergraph and decomposition round trips") {
  test::Rng rng(167);
  for (int round = 0; round < 200; ++round) {
    Hypergraph h = test::random_hypergraph(rng, rng.uniform(0, 12), rng.uniform(0, 9), 4);
    if (rng.coin(0.3)) test::random_weights(rng, h, -3, 3);
    const std::string text = serialize_hypergraph(h);
    const Hypergraph back = parse_hypergraph(text);
    CHECK(back == h);
    CHECK(back.weights() == h.weights());
    CHECK(serialize_hypergraph(back) == text);
    const TreeDecomposition t = test::random_decomposition(rng, h);
    if (t.num_nodes() == 0) continue;
    const std::string td = serialize_td(t);
    CHECK(serialize_td(parse_td(td)) == td);
    CHECK(parse_td(td).bags == t.bags);
  }
}

TEST_CASE("id maps") {
  CHECK(serialize_id_map({"1-2", "2-3"}) == "map 1 1-2\nmap 2 2-3\n");
  CHECK(serialize_id_map({}).empty());
}
