#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "clusternl/graph.hpp"

using namespace clusternl;

TEST_CASE("1d lattice is the path graph") {
  Graph g = build_lattice({4});
  CHECK(g.site_count() == 4);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("degenerate and multi-dimensional lattices") {
  Graph single = build_lattice({1});
  CHECK(single.site_count() == 1);
  CHECK(single.edges().empty());

  Graph grid = build_lattice({3, 3});
  CHECK(grid.site_count() == 9);
  CHECK(grid.edges().size() == 12);

  Graph cube = build_lattice({2, 2, 2});
  CHECK(cube.site_count() == 8);
  CHECK(cube.edges().size() == 12);

  CHECK_THROWS_AS(build_lattice({0, 3}), ParseError);
}

TEST_CASE("row-major indexing, last coordinate fastest") {
  Graph grid = build_lattice({2, 3});
  // site (r, c) = 3r + c; (0,2) and (1,2) must be adjacent
  CHECK(grid.adjacent(2, 5));
  CHECK(grid.adjacent(0, 1));
  CHECK_FALSE(grid.adjacent(2, 3));
}

TEST_CASE("star graph") {
  Graph star = star_graph(3);
  CHECK(star.site_count() == 4);
  CHECK(star.edges().size() == 3);
  for (auto [a, b] : star.edges()) CHECK(a == 0);

  StabilizerElement hub = generator(star, 0);
  CHECK(hub.word.str() == "+XZZZ");

  // the hub letter is fixed by the generator mask: the hub generator puts
  // X or Y there, and an odd number of leaf generators leaves a Z behind
  StabilizerGroup group = full_group(star);
  for (const auto& e : group.elements()) {
    bool uses_hub = e.generator_mask & 1ull;
    bool odd_leaves = std::popcount(e.generator_mask >> 1) % 2 == 1;
    PauliLetter at_hub = e.word.letter(0);
    if (uses_hub) {
      CHECK((at_hub == PauliLetter::X || at_hub == PauliLetter::Y));
    } else {
      CHECK(at_hub == (odd_leaves ? PauliLetter::Z : PauliLetter::I));
    }
  }
}

TEST_CASE("generators") {
  Graph chain = build_lattice({4});
  CHECK(generator(chain, 0).word.str() == "+XZII");
  CHECK(generator(chain, 1).word.str() == "+ZXZI");
  CHECK_THROWS_AS(generator(chain, 4), DimensionError);

  Graph grid = build_lattice({3, 3});
  CHECK(generator(grid, 4).word.str() == "+IZIZXZIZI");  // center of the 3x3
}

TEST_CASE("interior chain generators have the IZXZI pattern") {
  Graph chain = build_lattice({7});
  for (int a = 1; a < 6; ++a) {
    std::string expected(7, 'I');
    expected[a - 1] = 'Z';
    expected[a] = 'X';
    expected[a + 1] = 'Z';
    CHECK(generator(chain, a).word.str() == "+" + expected);
  }
}

TEST_CASE("element_from_mask") {
  Graph chain = build_lattice({4});
  auto e = element_from_mask(chain, 0b101);  // E1 * E3
  CHECK(e.word.str() == "+XIXZ");
  CHECK(e.sign == +1);

  auto id = element_from_mask(chain, 0);
  CHECK(id.word.is_identity_word());
  CHECK(id.sign == +1);

  auto m = element_from_mask(chain, 0b111);  // E1 E2 E3
  CHECK(m.word.str() == "+YXYZ");
  CHECK(m.sign == -1);
}

TEST_CASE("full group census for the 4-chain") {
  StabilizerGroup group = full_group(build_lattice({4}));
  REQUIRE(group.size() == 16);
  int minus = 0;
  std::set<std::string> negatives;
  for (const auto& e : group.elements()) {
    if (e.sign < 0) {
      ++minus;
      negatives.insert(e.word.str());
    }
  }
  CHECK(minus == 2);
  CHECK(negatives == std::set<std::string>{"+ZYXY", "+YXYZ"});
}

TEST_CASE("single site group") {
  StabilizerGroup group = full_group(build_lattice({1}));
  REQUIRE(group.size() == 2);
  CHECK(group[0].word.str() == "+I");
  CHECK(group[1].word.str() == "+X");
  CHECK(group[1].sign == +1);
}

TEST_CASE("group size limit") {
  CHECK_THROWS_AS(full_group(build_lattice({21})), GroupTooLarge);
  CHECK(full_group(build_lattice({3, 3})).size() == 512);
}

TEST_CASE("all generator pairs commute") {
  std::vector<Graph> graphs = {build_lattice({10}), build_lattice({3, 3}), star_graph(6),
                               build_lattice({2, 2, 2})};
  for (const auto& g : graphs) {
    for (int a = 0; a < g.site_count(); ++a) {
      for (int b = a + 1; b < g.site_count(); ++b) {
        CHECK(commutes(generator(g, a).word, generator(g, b).word));
      }
    }
  }
}

TEST_CASE("group closure with mask XOR composition") {
  Graph grid = build_lattice({3, 3});
  StabilizerGroup group = full_group(grid);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = group[rng() % group.size()];
    const auto& b = group[rng() % group.size()];
    auto prod = multiply(a.word, b.word);
    const auto& c = group[a.generator_mask ^ b.generator_mask];
    CHECK(prod.unsigned_word() == c.word);
    CHECK(a.sign * b.sign * prod.sign() == c.sign);
  }
}

TEST_CASE("element_from_mask round-trips its mask") {
  Graph chain = build_lattice({5});
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    CHECK(element_from_mask(chain, mask).generator_mask == mask);
  }
}

TEST_CASE("graph file format round trip") {
  Graph g = build_lattice({3, 3});
  Graph back = Graph::from_text(g.to_text());
  CHECK(back.site_count() == g.site_count());
  CHECK(back.edges() == g.edges());
  CHECK_THROWS_AS(Graph::from_text("edge 0 1"), ParseError);
  CHECK_THROWS_AS(Graph::from_text("sites 2\nedge 0 0"), ParseError);
}

TEST_CASE("graph spec parsing") {
  CHECK(parse_graph_spec("1d:6").site_count() == 6);
  CHECK(parse_graph_spec("3x3").site_count() == 9);
  CHECK(parse_graph_spec("2x2x2").edges().size() == 12);
  CHECK(parse_graph_spec("star:4").site_count() == 5);
  CHECK(parse_graph_spec("sites 2\nedge 0 1").edges().size() == 1);
  CHECK_THROWS(parse_graph_spec("pentagon"));
}
