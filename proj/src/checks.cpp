#include "clusternl/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "clusternl/bell.hpp"
#include "clusternl/graph.hpp"
#include "clusternl/lhv.hpp"
#include "clusternl/pauli.hpp"
#include "clusternl/quantum.hpp"

namespace clusternl {

namespace {

StateVector cluster_state(const Graph& g, bool perturb) {
  StateVector psi = make_cluster_state(g);
  if (!perturb) return psi;
  // Negative control: bias one amplitude and renormalize.
  std::vector<Complex> amps = psi.amplitudes();
  amps[0] += 0.05;
  double norm = 0;
  for (const auto& a : amps) norm += std::norm(a);
  norm = std::sqrt(norm);
  for (auto& a : amps) a /= norm;
  return StateVector(psi.n_sites(), std::move(amps));
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

// Canonical form of an argument for set comparison.
std::vector<std::string> argument_key(const GhzArgument& arg) {
  std::vector<std::string> words;
  for (const auto& e : arg.elements) {
    words.push_back((e.sign < 0 ? "-" : "+") + e.word.unsigned_word().str().substr(1));
  }
  std::sort(words.begin(), words.end());
  return words;
}

// Plain subset scan over non-identity elements: the independent oracle for
// the mask-completion search.
std::set<std::vector<std::string>> brute_force_arguments(const StabilizerGroup& group, int cap) {
  std::vector<const StabilizerElement*> elems;
  for (const auto& e : group.elements()) {
    if (!e.word.is_identity_word()) elems.push_back(&e);
  }
  std::set<std::vector<std::string>> keys;
  const int n = static_cast<int>(elems.size());
  std::vector<int> idx;
  auto scan = [&](auto&& self, int start) -> void {
    if (static_cast<int>(idx.size()) >= 3) {
      LetterParity parity;
      int sign = 1;
      for (int i : idx) {
        parity ^= letter_parity_vector(elems[i]->word);
        sign *= elems[i]->sign;
      }
      if (parity.is_zero() && sign == -1) {
        GhzArgument arg;
        for (int i : idx) arg.elements.push_back(*elems[i]);
        keys.insert(argument_key(arg));
      }
    }
    if (static_cast<int>(idx.size()) == cap) return;
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  scan(scan, 0);
  return keys;
}

std::vector<StabilizerElement> elements_supported_on(const StabilizerGroup& group,
                                                     std::uint64_t site_mask) {
  std::vector<StabilizerElement> out;
  for (const auto& e : group.elements()) {
    std::uint64_t occ = e.word.x_bits() | e.word.z_bits();
    if ((occ & ~site_mask) == 0) out.push_back(e);
  }
  return out;
}

PauliString restrict_word(const PauliString& word, const std::vector<int>& sites) {
  std::vector<PauliLetter> letters;
  letters.reserve(sites.size());
  for (int s : sites) letters.push_back(word.letter(s));
  return PauliString::from_letters(letters, word.phase_exp());
}

struct Checker {
  std::vector<CheckResult> results;
  bool perturb;

  void record(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, detail, pass});
  }

  void check1_eigenvalue_family() {
    double worst = 0;
    std::vector<Graph> graphs;
    for (int n = 2; n <= 10; ++n) graphs.push_back(build_lattice({n}));
    graphs.push_back(build_lattice({3, 3}));
    graphs.push_back(build_lattice({2, 2, 2}));
    for (const auto& g : graphs) {
      StateVector psi = cluster_state(g, perturb);
      for (int a = 0; a < g.site_count(); ++a) {
        worst = std::max(worst, std::abs(expectation_pauli(psi, generator(g, a)) - 1.0));
      }
    }
    record("1 eigenvalue family (chains 2..10, 3x3, 2x2x2)", worst <= 1e-10,
           "max |<S_a> - 1| = " + fmt(worst));
  }

  void check2_group_census() {
    StabilizerGroup group = full_group(build_lattice({4}));
    std::set<std::string> plus, minus;
    for (const auto& e : group.elements()) {
      if (e.word.is_identity_word()) continue;
      std::string w = e.word.str().substr(1);
      (e.sign > 0 ? plus : minus).insert(w);
    }
    const std::set<std::string> expected_plus = {
        "XZII", "ZXZI", "IZXZ", "IIZX",                    // generators
        "XIXZ", "ZYYZ", "XIYY",                            // Eqs. (5)-(7)
        "YYZI", "XZZX", "ZXIX", "IZYY", "YYIX", "YXXY",    // the seven others
    };
    const std::set<std::string> expected_minus = {"ZYXY", "YXYZ"};
    bool pass = group.size() == 16 && plus == expected_plus && minus == expected_minus;
    record("2 phi4 group census (16 elements, signs)", pass,
           "16 elements, " + std::to_string(plus.size()) + " at +1, -" +
               (minus.count("ZYXY") ? std::string("ZYXY") : std::string("?")) + ", -" +
               (minus.count("YXYZ") ? std::string("YXYZ") : std::string("?")));
  }

  void check3_ghz_argument_4q() {
    StabilizerGroup group = full_group(build_lattice({4}));
    auto args = find_ghz_arguments(group, 4);
    const std::vector<std::string> canonical = {"+XIXZ", "+XIYY", "+ZYYZ", "-ZYXY"};
    bool found = false;
    for (const auto& arg : args) {
      if (argument_key(arg) == canonical) {
        found = ghz_argument_sound(arg) && max_satisfied(arg.elements).count == 3;
      }
    }
    record("3 GHZ argument {XIXZ, ZYYZ, XIYY, -ZYXY}, max 3 of 4", found,
           std::to_string(args.size()) + " arguments found at cap 4");
  }

  void check4_lhv_satisfiability() {
    StabilizerGroup group = full_group(build_lattice({4}));
    std::vector<Constraint> cs;
    for (const auto& e : group.elements()) {
      if (!e.word.is_identity_word()) cs.push_back(e);
    }
    SatResult r = max_satisfied(cs);
    bool all_plus = std::all_of(r.witness.begin(), r.witness.end(),
                                [](const auto& kv) { return kv.second == +1; });
    record("4 LHV satisfiability of the 15 properties", r.count == 13 && all_plus,
           "max = " + std::to_string(r.count) + ", all-+1 witness = " +
               (all_plus ? "yes" : "no"));
  }

  void check5_inequality9() {
    BellPolynomial p = cluster4_polynomial();
    SettingsChoice s = cluster4_reference_settings();
    StateVector phi4 = cluster_state(build_lattice({4}), perturb);
    double cb = classical_bound(p).value;
    double qv = quantum_value(p, s, phi4);
    double var = bell_variance(p, s, phi4);
    bool pass = std::abs(cb - 2.0) < 1e-12 && std::abs(qv - 4.0) <= 1e-10 && var < 1e-10;
    record("5 four-qubit inequality: classical 2, quantum 4, eigenstate", pass,
           "classical = " + fmt(cb) + ", quantum = " + fmt(qv) + ", variance = " + fmt(var));
  }

  void check6_ghz4_no_violation() {
    BellPolynomial p = cluster4_polynomial();
    StateVector ghz = make_ghz(4);
    BoundReport r = optimize_settings(p, ghz, {.restarts = 64});
    // The two weight-3 terms must vanish for arbitrary directions.
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> gauss;
    auto random_setting = [&] {
      std::array<double, 3> v;
      double n2 = 0;
      do {
        v = {gauss(rng), gauss(rng), gauss(rng)};
        n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
      } while (n2 < 1e-12);
      for (auto& c : v) c /= std::sqrt(n2);
      return MeasurementSetting{v};
    };
    double worst_null = 0;
    for (int trial = 0; trial < 100; ++trial) {
      SettingsVector sv(4);
      for (int site : {0, 2, 3}) sv[site] = random_setting();
      worst_null = std::max(worst_null, std::abs(expectation_settings(ghz, sv)));
    }
    bool pass = std::abs(r.quantum_value - 2.0) <= 1e-3 && worst_null <= 1e-10;
    record("6 GHZ4 non-violation (optimum 2, null weight-3 terms)", pass,
           "optimum = " + fmt(r.quantum_value) + ", max |weight-3 term| = " + fmt(worst_null));
  }

  void check7_w4_violation() {
    BoundReport r = optimize_settings(cluster4_polynomial(), make_w4(), {.restarts = 64});
    record("7 W4 violation 2.618", std::abs(r.quantum_value - 2.618) <= 5e-3,
           "optimum = " + fmt(r.quantum_value));
  }

  void check8_mabk() {
    BellPolynomial m4 = mabk4_polynomial();
    double cb = classical_bound(m4).value;
    StateVector phi4 = cluster_state(build_lattice({4}), perturb);
    BoundReport on_cluster = optimize_settings(m4, phi4, {.restarts = 64});
    BoundReport on_ghz = optimize_settings(m4, make_ghz(4), {.restarts = 64});
    const double r2 = std::sqrt(2.0);
    bool pass = std::abs(cb - 2.0) < 1e-9 &&
                std::abs(on_cluster.quantum_value - 2 * r2) <= 1e-3 &&
                std::abs(on_ghz.quantum_value - 4 * r2) <= 1e-3;
    record("8 MABK: bound 2, phi4 -> 2sqrt2, GHZ4 -> 4sqrt2", pass,
           "classical = " + fmt(cb) + ", phi4 = " + fmt(on_cluster.quantum_value) +
               ", GHZ4 = " + fmt(on_ghz.quantum_value));
  }

  void check9_mixed_window() {
    const int n = 8;
    StateVector psi = cluster_state(build_lattice({n}), perturb);
    BellPolynomial w5 = window5_polynomial();
    double cb = classical_bound(w5).value;
    bool pass = std::abs(cb - 2.0) < 1e-12;
    std::string detail = "classical = " + fmt(cb);
    for (int k = 2; k <= 4; ++k) {
      GhzArgument arg = window_argument_1d(n, k);
      DensityMatrix rho = partial_trace(psi, arg.window);
      double pur = purity(rho);
      pass = pass && pur < 1.0 - 1e-6;
      for (const auto& e : arg.elements) {
        StabilizerElement restricted{restrict_word(e.word, arg.window), e.sign, 0};
        pass = pass && std::abs(expectation_pauli(rho, restricted) - 1.0) <= 1e-10;
      }
      double qv = quantum_value(w5, window5_reference_settings(), rho);
      pass = pass && std::abs(qv - 4.0) <= 1e-10;
      detail += ", k=" + std::to_string(k) + ": purity " + fmt(pur) + " value " + fmt(qv);
    }
    record("9 mixed 5-qubit windows of phi8 (purity<1, value 4)", pass, detail);
  }

  void check10_consecutiveness() {
    const int n = 6;
    StabilizerGroup group = full_group(build_lattice({n}));
    bool pass = true;
    std::string counterexample;
    int tested = 0;
    for (int skip = 1; skip < n - 1; ++skip) {
      // dropping an interior site leaves a non-consecutive 5-site subset;
      // skip 0 / skip 5 give the consecutive windows {1..5} / {0..4}
      std::uint64_t mask = ((1ull << n) - 1) & ~(1ull << skip);
      auto args = find_ghz_arguments(elements_supported_on(group, mask), 4);
      if (!args.empty() && counterexample.empty()) {
        for (const auto& e : args.front().elements) {
          counterexample += (e.sign < 0 ? " -" : " +") + e.word.str().substr(1);
        }
      }
      pass = pass && args.empty();
      ++tested;
    }
    // This reproduces the published claim only for triple-recipe arguments;
    // the exhaustive subset search finds sound sign contradictions whose
    // support is non-consecutive (a minus-sign triple product times a further
    // generator, with a partner element cancelling the extra letters), so
    // this check reports the literal criterion and its counterexample.
    record("10 no argument on non-consecutive 5-site subsets (N=6)", pass,
           pass ? std::to_string(tested) + " non-consecutive subsets, all empty"
                : "counterexample" + counterexample);
  }

  void check11_2d_criterion() {
    Graph lat = build_lattice({3, 3});
    auto site = [](int r, int c) { return (r - 1) * 3 + (c - 1); };
    bool ok_paths = false, ok_nopath = false;
    try {
      GhzArgument a1 = path_triple_argument(lat, site(1, 1), site(1, 2), site(2, 2));
      GhzArgument a2 = path_triple_argument(lat, site(1, 1), site(1, 2), site(1, 3));
      ok_paths = a1.valid() && a2.valid() && ghz_argument_sound(a1) && ghz_argument_sound(a2);
    } catch (const NoPathError&) {
      ok_paths = false;
    }
    int fired = 0;
    for (auto [a, b, c] : {std::array{site(1, 1), site(2, 2), site(3, 3)},
                           std::array{site(1, 1), site(1, 2), site(2, 3)}}) {
      try {
        path_triple_argument(lat, a, b, c);
      } catch (const NoPathError&) {
        ++fired;
      }
    }
    ok_nopath = fired == 2;
    record("11 3x3 path-triple criterion", ok_paths && ok_nopath,
           std::string("paths valid = ") + (ok_paths ? "yes" : "no") +
               ", NoPath fired = " + std::to_string(fired) + "/2");
  }

  void check12_stabilizer_sum() {
    Graph chain = build_lattice({4});
    StabilizerGroup group = full_group(chain);
    BellPolynomial p = stabilizer_sum_polynomial(group);
    double cb = classical_bound(p).value;
    StateVector phi4 = cluster_state(chain, perturb);
    double qv = quantum_value(p, letter_settings(p), phi4);
    BoundReport on_ghz = optimize_settings(p, make_ghz(4), {.restarts = 64});
    bool pass = std::abs(cb - 12.0) < 1e-12 && std::abs(qv - 16.0) <= 1e-10 &&
                std::abs(on_ghz.quantum_value - 8.0) <= 1e-2;
    record("12 stabilizer sum: classical 12, quantum 16, GHZ4 -> 8", pass,
           "classical = " + fmt(cb) + ", quantum = " + fmt(qv) +
               ", GHZ4 optimum = " + fmt(on_ghz.quantum_value));
  }

  void check13_star_graph() {
    bool pass = true;
    std::string detail;
    for (int leaves : {3, 4}) {
      Graph star = star_graph(leaves);
      StabilizerGroup group = full_group(star);
      auto args = find_ghz_arguments(group, 4);
      for (const auto& arg : args) {
        std::uint64_t gens = 0;
        for (const auto& e : arg.elements) gens |= e.generator_mask;
        pass = pass && (gens & 1);  // central generator is S_0
      }
      // Elements acting trivially on the hub admit no argument.
      std::uint64_t leaves_only = ((1ull << (leaves + 1)) - 1) & ~1ull;
      auto restricted = find_ghz_arguments(elements_supported_on(group, leaves_only), 4);
      pass = pass && restricted.empty();
      detail += "star:" + std::to_string(leaves) + " args " + std::to_string(args.size()) +
                " (all via hub), hubless 0; ";
    }
    record("13 star graph needs the central generator", pass, detail);
  }

  void check14_oracle_equivalence() {
    std::vector<Graph> graphs;
    for (int n = 2; n <= 5; ++n) graphs.push_back(build_lattice({n}));
    graphs.push_back(star_graph(3));
    graphs.push_back(star_graph(4));
    graphs.push_back(build_lattice({2, 2}));
    // seeded random graphs on 4 and 5 sites
    std::mt19937_64 rng(271828);
    for (int n : {4, 5}) {
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (rng() & 1) edges.emplace_back(i, j);
          }
        }
        graphs.emplace_back(n, std::move(edges));
      }
    }
    bool pass = true;
    int compared = 0;
    for (const auto& g : graphs) {
      StabilizerGroup group = full_group(g);
      auto args = find_ghz_arguments(group, 4);
      std::set<std::vector<std::string>> keys;
      for (const auto& arg : args) keys.insert(argument_key(arg));
      pass = pass && keys.size() == args.size() && keys == brute_force_arguments(group, 4);
      ++compared;
    }
    record("14 search agrees with brute-force oracle (N <= 5)", pass,
           std::to_string(compared) + " graphs compared");
  }
};

}  // namespace

std::vector<CheckResult> run_acceptance_checks(bool perturb) {
  Checker c;
  c.perturb = perturb;
  c.check1_eigenvalue_family();
  c.check2_group_census();
  c.check3_ghz_argument_4q();
  c.check4_lhv_satisfiability();
  c.check5_inequality9();
  c.check6_ghz4_no_violation();
  c.check7_w4_violation();
  c.check8_mabk();
  c.check9_mixed_window();
  c.check10_consecutiveness();
  c.check11_2d_criterion();
  c.check12_stabilizer_sum();
  c.check13_star_graph();
  c.check14_oracle_equivalence();
  return c.results;
}

}  // namespace clusternl
