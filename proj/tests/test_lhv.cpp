#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "clusternl/lhv.hpp"
#include "clusternl/quantum.hpp"

using namespace clusternl;

namespace {

Constraint from_text(const std::string& text) {
  PauliString w = PauliString::parse(text);
  return Constraint{w.unsigned_word(), w.sign(), 0};
}

std::vector<Constraint> all_nontrivial(const StabilizerGroup& group) {
  std::vector<Constraint> cs;
  for (const auto& e : group.elements()) {
    if (!e.word.is_identity_word()) cs.push_back(e);
  }
  return cs;
}

// Independent oracle: plain scan over every subset of the given size.
std::vector<std::set<std::string>> brute_force_keys(const std::vector<StabilizerElement>& els,
                                                    int max_size) {
  std::vector<std::set<std::string>> keys;
  int n = static_cast<int>(els.size());
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = std::popcount(subset);
    if (size < 3 || size > max_size) continue;
    LetterParity parity;
    int sign = 1;
    bool has_identity = false;
    std::set<std::string> key;
    for (int i = 0; i < n; ++i) {
      if (!(subset >> i & 1)) continue;
      parity ^= letter_parity_vector(els[i].word);
      sign *= els[i].sign;
      has_identity |= els[i].word.is_identity_word();
      PauliString signed_word = els[i].word;
      key.insert((els[i].sign < 0 ? "-" : "+") + signed_word.unsigned_word().str().substr(1));
    }
    if (!has_identity && parity.is_zero() && sign == -1) keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::set<std::string> argument_key(const GhzArgument& arg) {
  std::set<std::string> key;
  for (const auto& e : arg.elements) {
    key.insert((e.sign < 0 ? "-" : "+") + e.word.str().substr(1));
  }
  return key;
}

}  // namespace

TEST_CASE("constraint_satisfied") {
  Constraint c = from_text("+XIXZ");
  LhvAssignment lam = {{{0, PauliLetter::X}, +1}, {{2, PauliLetter::X}, -1},
                       {{3, PauliLetter::Z}, -1}};
  CHECK(constraint_satisfied(lam, c));
  lam[{3, PauliLetter::Z}] = +1;
  CHECK(!constraint_satisfied(lam, c));

  // identity sites are ignored; the empty word demands sign +1
  CHECK(constraint_satisfied({}, from_text("+IIII")));
  CHECK(!constraint_satisfied({}, from_text("-IIII")));
}

TEST_CASE("max_satisfied on the phi4 group") {
  StabilizerGroup group = full_group(build_lattice({4}));
  std::vector<Constraint> cs = all_nontrivial(group);
  REQUIRE(cs.size() == 15);
  SatResult r = max_satisfied(cs);
  CHECK(r.count == 13);
  // the lexicographically smallest witness is all +1
  for (const auto& [var, value] : r.witness) CHECK(value == +1);
  CHECK(r.witness.size() == 12);
}

TEST_CASE("max_satisfied basics") {
  CHECK(max_satisfied({from_text("+XYZX")}).count == 1);
  CHECK(max_satisfied({}).count == 0);

  // the four-element GHZ contradiction: at most three hold at once
  std::vector<Constraint> ghz = {from_text("+IZXZI"), from_text("+ZYYZI"),
                                 from_text("+IZYYZ"), from_text("-ZYXYZ")};
  CHECK(max_satisfied(ghz).count == 3);
}

TEST_CASE("max_weighted_sum") {
  StabilizerGroup group = full_group(build_lattice({4}));
  std::vector<std::pair<Constraint, double>> terms;
  for (const auto& e : group.elements()) terms.emplace_back(e, 1.0);
  REQUIRE(terms.size() == 16);
  CHECK(max_weighted_sum(terms).value == doctest::Approx(12.0));

  CHECK(max_weighted_sum({{from_text("+XY"), 2.5}}).value == doctest::Approx(2.5));

  // the four correlators of the cluster inequality reach 2 classically
  std::vector<std::pair<Constraint, double>> bell = {{from_text("+XIXZ"), 1.0},
                                                     {from_text("+XIYY"), 1.0},
                                                     {from_text("+ZYYZ"), 1.0},
                                                     {from_text("-ZYXY"), 1.0}};
  CHECK(max_weighted_sum(bell).value == doctest::Approx(2.0));

  // ceiling on the variable count
  std::vector<std::pair<Constraint, double>> big;
  for (int s = 0; s < 9; ++s) {
    std::vector<PauliLetter> l(9, PauliLetter::I);
    l[s] = PauliLetter::X;
    big.emplace_back(Constraint{PauliString::from_letters(l), +1, 0}, 1.0);
    l[s] = PauliLetter::Y;
    big.emplace_back(Constraint{PauliString::from_letters(l), +1, 0}, 1.0);
    l[s] = PauliLetter::Z;
    big.emplace_back(Constraint{PauliString::from_letters(l), +1, 0}, 1.0);
  }
  CHECK_THROWS_AS(max_weighted_sum(big), SearchCeilingExceeded);
}

TEST_CASE("make_ghz_argument and validity") {
  GhzArgument arg = make_ghz_argument({from_text("+XIXZ"), from_text("+XIYY"),
                                       from_text("+ZYYZ"), from_text("-ZYXY")});
  CHECK(arg.valid());
  CHECK(arg.window == std::vector<int>{0, 1, 2, 3});
  CHECK(arg.cooperating_sites.empty());
  CHECK(ghz_argument_sound(arg));

  // flipping one sign breaks parity of minus signs
  GhzArgument bad = make_ghz_argument({from_text("+XIXZ"), from_text("+XIYY"),
                                       from_text("+ZYYZ"), from_text("+ZYXY")});
  CHECK(!bad.valid());
}

TEST_CASE("find_ghz_arguments on phi4") {
  StabilizerGroup group = full_group(build_lattice({4}));
  std::vector<GhzArgument> args = find_ghz_arguments(group, 4);
  REQUIRE(!args.empty());
  bool found_canonical = false;
  for (const auto& arg : args) {
    CHECK(arg.valid());
    CHECK(ghz_argument_sound(arg));
    if (argument_key(arg) == std::set<std::string>{"+XIXZ", "+XIYY", "+ZYYZ", "-ZYXY"}) {
      found_canonical = true;
    }
  }
  CHECK(found_canonical);

  // independent oracle: plain subset scan yields the same family
  std::vector<std::set<std::string>> expected = brute_force_keys(group.elements(), 4);
  std::vector<std::set<std::string>> got;
  for (const auto& arg : args) got.push_back(argument_key(arg));
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("find_ghz_arguments matches brute force on other graphs") {
  // graphs are kept at four sites so the oracle's 2^16 subset scan stays fast
  for (const Graph& g : {star_graph(3), build_lattice({2, 2})}) {
    StabilizerGroup group = full_group(g);
    std::vector<GhzArgument> args = find_ghz_arguments(group, 4);
    std::vector<std::set<std::string>> got;
    for (const auto& arg : args) {
      CHECK(arg.valid());
      got.push_back(argument_key(arg));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_keys(group.elements(), 4));
  }
}

TEST_CASE("window_argument_1d") {
  GhzArgument arg = window_argument_1d(5, 2);
  REQUIRE(arg.elements.size() == 4);
  CHECK(arg.elements[0].word.str() == "+IZXZI");
  CHECK(arg.elements[1].word.str() == "+ZYYZI");
  CHECK(arg.elements[2].word.str() == "+IZYYZ");
  CHECK(arg.elements[3].word.str() == "+ZYXYZ");
  CHECK(arg.elements[3].sign == -1);
  CHECK(arg.valid());
  CHECK(ghz_argument_sound(arg));
  CHECK(arg.window == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(arg.cooperating_sites == std::vector<int>{0, 4});

  // every interior position of longer chains works and spans <= 5 sites
  for (int n : {5, 6, 8}) {
    for (int k = 1; k <= n - 2; ++k) {
      GhzArgument a = window_argument_1d(n, k);
      CHECK(a.valid());
      CHECK(ghz_argument_sound(a));
      CHECK(a.window.size() <= 5);
      CHECK(a.window.front() >= k - 2);
      CHECK(a.window.back() <= k + 2);
    }
  }

  CHECK_THROWS_AS(window_argument_1d(5, 0), DimensionError);
  CHECK_THROWS_AS(window_argument_1d(5, 4), DimensionError);
}

TEST_CASE("window arguments are translation covariant") {
  GhzArgument a = window_argument_1d(8, 3);
  GhzArgument b = window_argument_1d(8, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    // shifting the chain by one site shifts every word by one site
    auto la = a.elements[i].word.letters();
    auto lb = b.elements[i].word.letters();
    std::rotate(la.rbegin(), la.rbegin() + 1, la.rend());
    CHECK(la == lb);
    CHECK(a.elements[i].sign == b.elements[i].sign);
  }
}

TEST_CASE("path_triple_argument") {
  Graph chain = build_lattice({5});
  GhzArgument arg = path_triple_argument(chain, 1, 2, 3);
  CHECK(argument_key(arg) == argument_key(window_argument_1d(5, 2)));

  // works on the 3x3 lattice through the center
  Graph grid = build_lattice({3, 3});
  GhzArgument cross = path_triple_argument(grid, 3, 4, 5);
  CHECK(cross.valid());
  CHECK(ghz_argument_sound(cross));

  CHECK_THROWS_AS(path_triple_argument(chain, 0, 2, 4), NoPathError);
  CHECK_THROWS_AS(path_triple_argument(chain, 1, 1, 2), NoPathError);
  CHECK_THROWS_AS(path_triple_argument(chain, 1, 2, 1), NoPathError);

  // through the hub of a star the same construction still contradicts
  GhzArgument hub = path_triple_argument(star_graph(4), 1, 0, 2);
  CHECK(hub.valid());
  CHECK(ghz_argument_sound(hub));
}

TEST_CASE("GHZ arguments are consistent with quantum mechanics") {
  // the full state assigns +1 to every constraint in every phi4 argument
  StateVector phi4 = make_cluster_state(build_lattice({4}));
  for (const auto& arg : find_ghz_arguments(full_group(build_lattice({4})), 4)) {
    for (const auto& e : arg.elements) {
      CHECK(expectation_pauli(phi4, e) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  // and the reduced window state does the same for the chain argument
  StateVector phi8 = make_cluster_state(build_lattice({8}));
  GhzArgument arg = window_argument_1d(8, 3);
  DensityMatrix window = partial_trace(phi8, arg.window);
  for (const auto& e : arg.elements) {
    std::vector<PauliLetter> restricted;
    for (int s : arg.window) restricted.push_back(e.word.letter(s));
    StabilizerElement local{PauliString::from_letters(restricted), e.sign, 0};
    CHECK(expectation_pauli(window, local) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("letter_rank and involved_variables ordering") {
  CHECK(letter_rank(PauliLetter::X) < letter_rank(PauliLetter::Y));
  CHECK(letter_rank(PauliLetter::Y) < letter_rank(PauliLetter::Z));
  auto vars = involved_variables({from_text("+ZY"), from_text("+XI")});
  REQUIRE(vars.size() == 3);
  CHECK(vars[0] == std::pair{0, PauliLetter::X});
  CHECK(vars[1] == std::pair{0, PauliLetter::Z});
  CHECK(vars[2] == std::pair{1, PauliLetter::Y});
}
