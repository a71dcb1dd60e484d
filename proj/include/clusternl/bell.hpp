#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusternl/graph.hpp"
#include "clusternl/lhv.hpp"
#include "clusternl/quantum.hpp"

namespace clusternl {

// Signed sum of multi-party correlation terms. Each term assigns one declared
// setting label (or the identity) to every party.
struct BellPolynomial {
  static constexpr int kIdentity = -1;

  struct Term {
    double coeff;
    std::vector<int> setting;  // label index per party, kIdentity for identity
  };

  int parties;
  std::vector<std::vector<std::string>> labels;  // label names per party
  std::vector<Term> terms;
};

// Bloch vector bound to each (party, label); nullopt means that label is
// evaluated as the identity factor (the A=E=I choice for the window sum).
struct SettingsChoice {
  std::vector<std::vector<std::optional<MeasurementSetting>>> bloch;  // [party][label]
};

struct BoundReport {
  double classical_bound;
  double quantum_value;
  double algebraic_bound;
  SettingsChoice settings;
  std::map<std::pair<int, int>, int> lhv_witness;  // (party, label) -> +-1
  bool certified;                                  // classical bound is exact
};

// B = AIC'D + AICD' + A'BCD - A'BC'D'; party 2 carries a single setting.
BellPolynomial cluster4_polynomial();
SettingsChoice cluster4_reference_settings();

// Five-party window operator ABC'DE + A'B'CDE + ABCD'E' - A'B'C'D'E'.
BellPolynomial window5_polynomial();
SettingsChoice window5_reference_settings();  // A=E=I, A'=E'=Z, B=D=Z, B'=D'=Y, C=Y, C'=X

// One term per stabilizer element (identity included), coefficient = element
// sign, labels bound per letter; three settings per party.
BellPolynomial stabilizer_sum_polynomial(const StabilizerGroup& group);
SettingsChoice letter_settings(const BellPolynomial& p);  // X/Y/Z labels to axes

// Mermin-Klyshko recursion M_n = (M_{n-1}(a_n + a_n') + M'_{n-1}(a_n - a_n'))/2
// at n=4, rescaled so the LHV bound is exactly 2.
BellPolynomial mabk4_polynomial();

// Polynomial with one term per argument element, coefficient = element sign;
// party labels are the distinct letters the site carries across the elements.
// A site carrying all three letters throws UnsupportedArity.
BellPolynomial from_ghz_argument(const GhzArgument& arg);
SettingsChoice from_ghz_argument_letter_settings(const GhzArgument& arg);

double algebraic_bound(const BellPolynomial& p);

struct ClassicalBound {
  double value;
  std::map<std::pair<int, int>, int> witness;  // (party, label) -> +-1
};

// Exact LHV bound by enumeration over deterministic +-1 outcome tables.
ClassicalBound classical_bound(const BellPolynomial& p);

double quantum_value(const BellPolynomial& p, const SettingsChoice& s, const StateVector& state);
double quantum_value(const BellPolynomial& p, const SettingsChoice& s, const DensityMatrix& rho);

// B|psi>, for eigenstate / variance checks.
StateVector bell_apply(const BellPolynomial& p, const SettingsChoice& s, const StateVector& state);
double bell_variance(const BellPolynomial& p, const SettingsChoice& s, const StateVector& state);

struct OptimizeConfig {
  int restarts = 64;
  double tolerance = 1e-10;
  int max_sweeps = 1000;
  std::uint64_t seed = 0;
};

// Seeded multi-restart best-response ascent over the Bloch spheres: each
// (party, label) update is the closed-form maximizer of the linear functional
// obtained by freezing every other setting, so sweeps are monotone.
BoundReport optimize_settings(const BellPolynomial& p, const StateVector& state,
                              const OptimizeConfig& config = {});
BoundReport optimize_settings(const BellPolynomial& p, const DensityMatrix& rho,
                              const OptimizeConfig& config = {});

}  // namespace clusternl
