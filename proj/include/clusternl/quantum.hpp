#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "clusternl/graph.hpp"
#include "clusternl/pauli.hpp"

namespace clusternl {

using Complex = std::complex<double>;

// Measurement direction on the Bloch sphere; the observable is bloch . (X,Y,Z).
struct MeasurementSetting {
  std::array<double, 3> bloch;
};

MeasurementSetting axis_setting(PauliLetter l);  // X, Y or Z axis

// One entry per site: a direction, or nullopt for the identity factor.
using SettingsVector = std::vector<std::optional<MeasurementSetting>>;

// Dense pure state on n sites, site-0-major bit ordering: basis index
// b_0 b_1 ... b_{n-1} read as a binary number with site 0 most significant.
class StateVector {
 public:
  StateVector(int n_sites, std::vector<Complex> amplitudes);

  int n_sites() const { return n_sites_; }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t basis) const { return amps_[basis]; }

  double norm() const;

  // One line per basis state: "bitstring real imag", 17 significant digits.
  std::string amplitude_dump() const;

 private:
  int n_sites_;
  std::vector<Complex> amps_;
};

class DensityMatrix {
 public:
  DensityMatrix(int n_sites, std::vector<Complex> entries);  // row-major 2^n x 2^n

  int n_sites() const { return n_sites_; }
  std::size_t dim() const { return dim_; }
  Complex entry(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

  Complex trace() const;

 private:
  int n_sites_;
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// |+>^N followed by a CZ on every edge; satisfies every S_a |Phi> = |Phi>.
StateVector make_cluster_state(const Graph& g, int max_sites = 16);

StateVector make_ghz(int n);
StateVector make_w4();

// Applies the word (including its i^phase_exp) to the state.
StateVector apply_pauli(const PauliString& word, const StateVector& state);

// Applies the tensor product of bloch.(X,Y,Z) observables (identity where
// nullopt) to the state.
StateVector apply_settings(const SettingsVector& settings, const StateVector& state);

// <word> with the element's sign folded in; asserts the value is real.
double expectation_pauli(const StateVector& state, const StabilizerElement& e);
double expectation_pauli(const DensityMatrix& rho, const StabilizerElement& e);

double expectation_settings(const StateVector& state, const SettingsVector& settings);
double expectation_settings(const DensityMatrix& rho, const SettingsVector& settings);

// Reduced density matrix on the kept sites, order preserved.
DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep,
                            int max_kept = 12);

double purity(const DensityMatrix& rho);

}  // namespace clusternl
