#include "clusternl/bell.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "clusternl/errors.hpp"

namespace clusternl {

namespace {

const std::vector<std::string> kLetterNames = {"X", "Y", "Z"};

PauliLetter letter_for_rank(int rank) {
  switch (rank) {
    case 0: return PauliLetter::X;
    case 1: return PauliLetter::Y;
    default: return PauliLetter::Z;
  }
}

// Per-term site settings under a concrete choice.
SettingsVector term_settings(const BellPolynomial& p, const SettingsChoice& s,
                             const BellPolynomial::Term& t) {
  SettingsVector sv(p.parties);
  for (int party = 0; party < p.parties; ++party) {
    int label = t.setting[party];
    if (label == BellPolynomial::kIdentity) continue;
    if (party >= static_cast<int>(s.bloch.size()) ||
        label >= static_cast<int>(s.bloch[party].size())) {
      throw DimensionError("unbound setting label");
    }
    sv[party] = s.bloch[party][label];
  }
  return sv;
}

void check_polynomial(const BellPolynomial& p) {
  if (p.terms.empty()) throw DimensionError("Bell polynomial needs at least one term");
  for (const auto& t : p.terms) {
    if (static_cast<int>(t.setting.size()) != p.parties) {
      throw DimensionError("term arity does not match party count");
    }
    for (int party = 0; party < p.parties; ++party) {
      int label = t.setting[party];
      if (label == BellPolynomial::kIdentity) continue;
      if (label < 0 || label >= static_cast<int>(p.labels[party].size())) {
        throw DimensionError("term references an undeclared label");
      }
    }
  }
}

double quantum_value_impl(const BellPolynomial& p, const SettingsChoice& s,
                          const std::function<double(const SettingsVector&)>& expect) {
  check_polynomial(p);
  double total = 0;
  for (const auto& t : p.terms) total += t.coeff * expect(term_settings(p, s, t));
  return total;
}

std::array<double, 3> random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::array<double, 3> v;
  double n2;
  do {
    v = {gauss(rng), gauss(rng), gauss(rng)};
    n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  } while (n2 < 1e-12);
  double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

// Deterministic starting point: the axis matching a letter-named label,
// X axis otherwise.
SettingsChoice initial_settings(const BellPolynomial& p) {
  SettingsChoice s;
  s.bloch.resize(p.parties);
  for (int party = 0; party < p.parties; ++party) {
    for (const auto& name : p.labels[party]) {
      if (name == "X") s.bloch[party].push_back(axis_setting(PauliLetter::X));
      else if (name == "Y") s.bloch[party].push_back(axis_setting(PauliLetter::Y));
      else if (name == "Z") s.bloch[party].push_back(axis_setting(PauliLetter::Z));
      else s.bloch[party].push_back(axis_setting(PauliLetter::X));
    }
  }
  return s;
}

BoundReport optimize_impl(const BellPolynomial& p,
                          const std::function<double(const SettingsVector&)>& expect,
                          const OptimizeConfig& config) {
  check_polynomial(p);
  ClassicalBound cb = classical_bound(p);

  struct Slot {
    int party, label;
  };
  std::vector<Slot> slots;
  for (int party = 0; party < p.parties; ++party) {
    for (int label = 0; label < static_cast<int>(p.labels[party].size()); ++label) {
      for (const auto& t : p.terms) {
        if (t.setting[party] == label) {
          slots.push_back({party, label});
          break;
        }
      }
    }
  }

  auto objective = [&](const SettingsChoice& s) {
    double total = 0;
    for (const auto& t : p.terms) total += t.coeff * expect(term_settings(p, s, t));
    return total;
  };

  std::mt19937_64 rng(config.seed);
  double best_value = 0;
  SettingsChoice best_settings;
  bool have_best = false;

  for (int restart = 0; restart <= config.restarts; ++restart) {
    SettingsChoice s = initial_settings(p);
    if (restart > 0) {
      for (auto& party : s.bloch) {
        for (auto& b : party) b = MeasurementSetting{random_unit_vector(rng)};
      }
    }
    double value = objective(s);
    for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
      for (const auto& slot : slots) {
        // The objective is linear in this slot's Bloch vector; the
        // conditional optimum is the normalized coefficient vector.
        std::array<double, 3> grad = {0, 0, 0};
        for (const auto& t : p.terms) {
          if (t.setting[slot.party] != slot.label) continue;
          SettingsChoice probe = s;
          for (int k = 0; k < 3; ++k) {
            std::array<double, 3> axis = {0, 0, 0};
            axis[k] = 1;
            probe.bloch[slot.party][slot.label] = MeasurementSetting{axis};
            grad[k] += t.coeff * expect(term_settings(p, probe, t));
          }
        }
        double norm = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]);
        if (norm > 1e-14) {
          for (auto& c : grad) c /= norm;
          s.bloch[slot.party][slot.label] = MeasurementSetting{grad};
        }  // zero gradient: any direction is optimal, keep the previous one
      }
      double next = objective(s);
      if (next < value - 1e-9) {
        throw std::logic_error("best-response sweep decreased the objective");
      }
      bool converged = next - value < config.tolerance;
      value = next;
      if (converged) break;
    }
    if (!have_best || value > best_value) {
      have_best = true;
      best_value = value;
      best_settings = s;
    }
  }

  BoundReport report;
  report.classical_bound = cb.value;
  report.quantum_value = best_value;
  report.algebraic_bound = algebraic_bound(p);
  report.settings = best_settings;
  report.lhv_witness = cb.witness;
  report.certified = true;
  return report;
}

}  // namespace

BellPolynomial cluster4_polynomial() {
  BellPolynomial p;
  p.parties = 4;
  p.labels = {{"A", "A'"}, {"B"}, {"C", "C'"}, {"D", "D'"}};
  constexpr int kI = BellPolynomial::kIdentity;
  p.terms = {
      {+1.0, {0, kI, 1, 0}},  //  A I C' D
      {+1.0, {0, kI, 0, 1}},  //  A I C  D'
      {+1.0, {1, 0, 0, 0}},   //  A' B C  D
      {-1.0, {1, 0, 1, 1}},   // -A' B C' D'
  };
  return p;
}

SettingsChoice cluster4_reference_settings() {
  SettingsChoice s;
  s.bloch = {
      {axis_setting(PauliLetter::X), axis_setting(PauliLetter::Z)},  // A, A'
      {axis_setting(PauliLetter::Y)},                                // B
      {axis_setting(PauliLetter::Y), axis_setting(PauliLetter::X)},  // C, C'
      {axis_setting(PauliLetter::Z), axis_setting(PauliLetter::Y)},  // D, D'
  };
  return s;
}

BellPolynomial window5_polynomial() {
  BellPolynomial p;
  p.parties = 5;
  p.labels = {{"A", "A'"}, {"B", "B'"}, {"C", "C'"}, {"D", "D'"}, {"E", "E'"}};
  p.terms = {
      {+1.0, {0, 0, 1, 0, 0}},  //  (A B) C' (D E)
      {+1.0, {1, 1, 0, 0, 0}},  //  (A'B') C  (D E)
      {+1.0, {0, 0, 0, 1, 1}},  //  (A B) C  (D'E')
      {-1.0, {1, 1, 1, 1, 1}},  // -(A'B') C' (D'E')
  };
  return p;
}

SettingsChoice window5_reference_settings() {
  SettingsChoice s;
  s.bloch = {
      {std::nullopt, axis_setting(PauliLetter::Z)},                  // A=I, A'=Z
      {axis_setting(PauliLetter::Z), axis_setting(PauliLetter::Y)},  // B=Z, B'=Y
      {axis_setting(PauliLetter::Y), axis_setting(PauliLetter::X)},  // C=Y, C'=X
      {axis_setting(PauliLetter::Z), axis_setting(PauliLetter::Y)},  // D=Z, D'=Y
      {std::nullopt, axis_setting(PauliLetter::Z)},                  // E=I, E'=Z
  };
  return s;
}

BellPolynomial stabilizer_sum_polynomial(const StabilizerGroup& group) {
  if (group.size() > (1u << 10)) throw GroupTooLarge("stabilizer sum limited to 2^10 elements");
  const int n = group[0].word.n_sites();
  BellPolynomial p;
  p.parties = n;
  p.labels.assign(n, kLetterNames);
  for (const auto& e : group.elements()) {
    BellPolynomial::Term t;
    t.coeff = e.sign;
    t.setting.assign(n, BellPolynomial::kIdentity);
    for (int s = 0; s < n; ++s) {
      PauliLetter l = e.word.letter(s);
      if (l != PauliLetter::I) t.setting[s] = letter_rank(l);
    }
    p.terms.push_back(std::move(t));
  }
  return p;
}

SettingsChoice letter_settings(const BellPolynomial& p) {
  SettingsChoice s;
  s.bloch.resize(p.parties);
  for (int party = 0; party < p.parties; ++party) {
    for (const auto& name : p.labels[party]) {
      if (name == "X") s.bloch[party].push_back(axis_setting(PauliLetter::X));
      else if (name == "Y") s.bloch[party].push_back(axis_setting(PauliLetter::Y));
      else if (name == "Z") s.bloch[party].push_back(axis_setting(PauliLetter::Z));
      else throw DimensionError("letter_settings needs X/Y/Z label names");
    }
  }
  return s;
}

BellPolynomial mabk4_polynomial() {
  // Terms as monomials: label index per party (0 unprimed, 1 primed).
  using Monomial = std::vector<int>;
  std::map<Monomial, double> m = {{{0}, 1.0}};  // M_1 = a_1

  auto swap_primes = [](const std::map<Monomial, double>& in) {
    std::map<Monomial, double> out;
    for (const auto& [key, c] : in) {
      Monomial k = key;
      for (auto& l : k) l ^= 1;
      out[k] = c;
    }
    return out;
  };

  for (int n = 2; n <= 4; ++n) {
    auto prev = m;
    auto prev_primed = swap_primes(prev);
    std::map<Monomial, double> next;
    auto extend = [&](const std::map<Monomial, double>& src, int label, double factor) {
      for (const auto& [key, c] : src) {
        Monomial k = key;
        k.push_back(label);
        next[k] += factor * c;
      }
    };
    extend(prev, 0, 0.5);
    extend(prev, 1, 0.5);
    extend(prev_primed, 0, 0.5);
    extend(prev_primed, 1, -0.5);
    m = std::move(next);
  }

  BellPolynomial p;
  p.parties = 4;
  p.labels.assign(4, {"a", "a'"});
  for (const auto& [key, c] : m) {
    if (std::abs(c) < 1e-15) continue;
    p.terms.push_back({c, key});
  }
  // Rescale so the LHV bound is exactly 2.
  double bound = classical_bound(p).value;
  for (auto& t : p.terms) t.coeff *= 2.0 / bound;
  return p;
}

BellPolynomial from_ghz_argument(const GhzArgument& arg) {
  if (arg.elements.empty()) throw DimensionError("empty GHZ argument");
  const int n = arg.elements[0].word.n_sites();
  // Distinct letters per window site, ordered X < Y < Z.
  std::vector<std::vector<PauliLetter>> site_letters(arg.window.size());
  for (std::size_t w = 0; w < arg.window.size(); ++w) {
    bool seen[3] = {false, false, false};
    for (const auto& e : arg.elements) {
      PauliLetter l = e.word.letter(arg.window[w]);
      if (l != PauliLetter::I) seen[letter_rank(l)] = true;
    }
    for (int r = 0; r < 3; ++r) {
      if (seen[r]) site_letters[w].push_back(letter_for_rank(r));
    }
    if (site_letters[w].size() > 2) {
      throw UnsupportedArity("argument site carries all three letters");
    }
  }

  BellPolynomial p;
  p.parties = static_cast<int>(arg.window.size());
  p.labels.resize(p.parties);
  for (int w = 0; w < p.parties; ++w) {
    for (PauliLetter l : site_letters[w]) p.labels[w].emplace_back(1, letter_char(l));
  }
  for (const auto& e : arg.elements) {
    if (e.word.n_sites() != n) throw DimensionError("mixed word lengths in argument");
    BellPolynomial::Term t;
    t.coeff = e.sign;
    t.setting.assign(p.parties, BellPolynomial::kIdentity);
    for (int w = 0; w < p.parties; ++w) {
      PauliLetter l = e.word.letter(arg.window[w]);
      if (l == PauliLetter::I) continue;
      auto& ls = site_letters[w];
      t.setting[w] = static_cast<int>(std::find(ls.begin(), ls.end(), l) - ls.begin());
    }
    p.terms.push_back(std::move(t));
  }
  return p;
}

SettingsChoice from_ghz_argument_letter_settings(const GhzArgument& arg) {
  return letter_settings(from_ghz_argument(arg));
}

double algebraic_bound(const BellPolynomial& p) {
  double total = 0;
  for (const auto& t : p.terms) total += std::abs(t.coeff);
  return total;
}

ClassicalBound classical_bound(const BellPolynomial& p) {
  check_polynomial(p);
  // Lift (party, label) variables onto (site, letter) slots so the exact LHV
  // enumeration in max_weighted_sum applies; needs at most 3 labels per party.
  std::vector<std::pair<Constraint, double>> lifted;
  for (int party = 0; party < p.parties; ++party) {
    if (p.labels[party].size() > 3) {
      throw SearchCeilingExceeded("classical bound supports at most 3 labels per party");
    }
  }
  for (const auto& t : p.terms) {
    std::vector<PauliLetter> letters(p.parties, PauliLetter::I);
    for (int party = 0; party < p.parties; ++party) {
      if (t.setting[party] != BellPolynomial::kIdentity) {
        letters[party] = letter_for_rank(t.setting[party]);
      }
    }
    Constraint c{PauliString::from_letters(letters), t.coeff >= 0 ? +1 : -1, 0};
    lifted.emplace_back(c, std::abs(t.coeff));
  }
  WeightedSumResult r = max_weighted_sum(lifted);
  ClassicalBound out;
  out.value = r.value;
  for (const auto& [var, v] : r.witness) out.witness[{var.first, letter_rank(var.second)}] = v;
  return out;
}

double quantum_value(const BellPolynomial& p, const SettingsChoice& s, const StateVector& state) {
  return quantum_value_impl(p, s, [&](const SettingsVector& sv) {
    return expectation_settings(state, sv);
  });
}

double quantum_value(const BellPolynomial& p, const SettingsChoice& s, const DensityMatrix& rho) {
  return quantum_value_impl(p, s, [&](const SettingsVector& sv) {
    return expectation_settings(rho, sv);
  });
}

StateVector bell_apply(const BellPolynomial& p, const SettingsChoice& s, const StateVector& state) {
  check_polynomial(p);
  std::vector<Complex> total(state.dim(), Complex{0, 0});
  for (const auto& t : p.terms) {
    StateVector applied = apply_settings(term_settings(p, s, t), state);
    for (std::size_t b = 0; b < state.dim(); ++b) total[b] += t.coeff * applied.amplitude(b);
  }
  return StateVector(state.n_sites(), std::move(total));
}

double bell_variance(const BellPolynomial& p, const SettingsChoice& s, const StateVector& state) {
  StateVector applied = bell_apply(p, s, state);
  Complex mean = 0;
  double second = 0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    mean += std::conj(state.amplitude(b)) * applied.amplitude(b);
    second += std::norm(applied.amplitude(b));
  }
  return second - std::norm(mean);
}

BoundReport optimize_settings(const BellPolynomial& p, const StateVector& state,
                              const OptimizeConfig& config) {
  return optimize_impl(p, [&](const SettingsVector& sv) {
    return expectation_settings(state, sv);
  }, config);
}

BoundReport optimize_settings(const BellPolynomial& p, const DensityMatrix& rho,
                              const OptimizeConfig& config) {
  return optimize_impl(p, [&](const SettingsVector& sv) {
    return expectation_settings(rho, sv);
  }, config);
}

}  // namespace clusternl
