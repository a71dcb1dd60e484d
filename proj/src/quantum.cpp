#include "clusternl/quantum.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "clusternl/errors.hpp"

namespace clusternl {

namespace {

Complex phase_factor(int exp4) {
  switch (((exp4 % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// 2x2 matrix of bloch . (X,Y,Z).
std::array<Complex, 4> setting_matrix(const MeasurementSetting& s) {
  auto [bx, by, bz] = s.bloch;
  return {Complex{bz, 0}, Complex{bx, -by}, Complex{bx, by}, Complex{-bz, 0}};
}

// Bit position of a site within a basis index (site 0 most significant).
inline std::size_t site_bit(int n, int site) { return std::size_t{1} << (n - 1 - site); }

std::vector<Complex> apply_single_qubit(const std::array<Complex, 4>& m, int n, int site,
                                        const std::vector<Complex>& in) {
  std::vector<Complex> out(in.size());
  const std::size_t bit = site_bit(n, site);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i & bit) continue;
    Complex a0 = in[i], a1 = in[i | bit];
    out[i] = m[0] * a0 + m[1] * a1;
    out[i | bit] = m[2] * a0 + m[3] * a1;
  }
  return out;
}

double real_checked(Complex v, const char* what) {
  if (std::abs(v.imag()) > 1e-10) {
    throw NonHermitianError(std::string(what) + ": expectation has imaginary part");
  }
  return v.real();
}

}  // namespace

MeasurementSetting axis_setting(PauliLetter l) {
  switch (l) {
    case PauliLetter::X: return {{1, 0, 0}};
    case PauliLetter::Y: return {{0, 1, 0}};
    case PauliLetter::Z: return {{0, 0, 1}};
    default: throw DimensionError("identity has no measurement axis");
  }
}

StateVector::StateVector(int n_sites, std::vector<Complex> amplitudes)
    : n_sites_(n_sites), amps_(std::move(amplitudes)) {
  if (n_sites < 1 || n_sites > 24) throw DimensionError("state vector site count out of range");
  if (amps_.size() != (std::size_t{1} << n_sites)) {
    throw DimensionError("amplitude count is not 2^N");
  }
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::string StateVector::amplitude_dump() const {
  std::string out;
  char buf[80];
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    std::string bits(n_sites_, '0');
    for (int s = 0; s < n_sites_; ++s) {
      if (b & site_bit(n_sites_, s)) bits[s] = '1';
    }
    std::snprintf(buf, sizeof(buf), "%s %.17g %.17g\n", bits.c_str(), amps_[b].real(),
                  amps_[b].imag());
    out += buf;
  }
  return out;
}

DensityMatrix::DensityMatrix(int n_sites, std::vector<Complex> entries)
    : n_sites_(n_sites), dim_(std::size_t{1} << n_sites), entries_(std::move(entries)) {
  if (n_sites < 1 || n_sites > 12) throw DimensionError("density matrix site count out of range");
  if (entries_.size() != dim_ * dim_) throw DimensionError("entry count is not 4^K");
}

Complex DensityMatrix::trace() const {
  Complex t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += entry(i, i);
  return t;
}

StateVector make_cluster_state(const Graph& g, int max_sites) {
  const int n = g.site_count();
  if (n > max_sites) throw DimensionError("too many sites for dense cluster state");
  const std::size_t dim = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Complex> amps(dim, Complex{amp, 0});
  for (auto [i, j] : g.edges()) {
    const std::size_t bi = site_bit(n, i), bj = site_bit(n, j);
    for (std::size_t b = 0; b < dim; ++b) {
      if ((b & bi) && (b & bj)) amps[b] = -amps[b];
    }
  }
  return StateVector(n, std::move(amps));
}

StateVector make_ghz(int n) {
  if (n < 2 || n > 16) throw DimensionError("GHZ size out of range");
  std::vector<Complex> amps(std::size_t{1} << n, Complex{0, 0});
  const double r = 1.0 / std::sqrt(2.0);
  amps.front() = {r, 0};
  amps.back() = {r, 0};
  return StateVector(n, std::move(amps));
}

StateVector make_w4() {
  std::vector<Complex> amps(16, Complex{0, 0});
  for (std::size_t b : {1u, 2u, 4u, 8u}) amps[b] = {0.5, 0};
  return StateVector(4, std::move(amps));
}

StateVector apply_pauli(const PauliString& word, const StateVector& state) {
  const int n = state.n_sites();
  if (word.n_sites() != n) throw DimensionError("Pauli word / state size mismatch");
  // Map site masks to basis-index masks (site 0 most significant).
  std::size_t x_idx = 0, zy_idx = 0;
  int y_count = 0;
  for (int s = 0; s < n; ++s) {
    PauliLetter l = word.letter(s);
    if (l == PauliLetter::X || l == PauliLetter::Y) x_idx |= site_bit(n, s);
    if (l == PauliLetter::Z || l == PauliLetter::Y) zy_idx |= site_bit(n, s);
    if (l == PauliLetter::Y) ++y_count;
  }
  const Complex global = phase_factor(word.phase_exp() + y_count);
  std::vector<Complex> out(state.dim());
  for (std::size_t b = 0; b < state.dim(); ++b) {
    Complex f = global;
    if (std::popcount(b & zy_idx) & 1) f = -f;
    out[b ^ x_idx] = f * state.amplitude(b);
  }
  return StateVector(n, std::move(out));
}

StateVector apply_settings(const SettingsVector& settings, const StateVector& state) {
  const int n = state.n_sites();
  if (static_cast<int>(settings.size()) != n) {
    throw DimensionError("settings / state size mismatch");
  }
  std::vector<Complex> amps = state.amplitudes();
  for (int s = 0; s < n; ++s) {
    if (!settings[s]) continue;
    amps = apply_single_qubit(setting_matrix(*settings[s]), n, s, amps);
  }
  return StateVector(n, std::move(amps));
}

double expectation_pauli(const StateVector& state, const StabilizerElement& e) {
  StateVector applied = apply_pauli(e.word, state);
  Complex v = 0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    v += std::conj(state.amplitude(b)) * applied.amplitude(b);
  }
  return e.sign * real_checked(v, "expectation_pauli");
}

double expectation_pauli(const DensityMatrix& rho, const StabilizerElement& e) {
  const int n = rho.n_sites();
  if (e.word.n_sites() != n) throw DimensionError("Pauli word / density matrix size mismatch");
  std::size_t x_idx = 0, zy_idx = 0;
  int y_count = 0;
  for (int s = 0; s < n; ++s) {
    PauliLetter l = e.word.letter(s);
    if (l == PauliLetter::X || l == PauliLetter::Y) x_idx |= site_bit(n, s);
    if (l == PauliLetter::Z || l == PauliLetter::Y) zy_idx |= site_bit(n, s);
    if (l == PauliLetter::Y) ++y_count;
  }
  const Complex global = phase_factor(e.word.phase_exp() + y_count);
  // Tr(rho P) = sum_j P_{j^x, j} rho_{j, j^x} with P|j> = f(j) |j^x>.
  Complex v = 0;
  for (std::size_t j = 0; j < rho.dim(); ++j) {
    Complex f = global;
    if (std::popcount(j & zy_idx) & 1) f = -f;
    v += f * rho.entry(j, j ^ x_idx);
  }
  return e.sign * real_checked(v, "expectation_pauli");
}

double expectation_settings(const StateVector& state, const SettingsVector& settings) {
  StateVector applied = apply_settings(settings, state);
  Complex v = 0;
  for (std::size_t b = 0; b < state.dim(); ++b) {
    v += std::conj(state.amplitude(b)) * applied.amplitude(b);
  }
  return real_checked(v, "expectation_settings");
}

double expectation_settings(const DensityMatrix& rho, const SettingsVector& settings) {
  const int n = rho.n_sites();
  if (static_cast<int>(settings.size()) != n) {
    throw DimensionError("settings / density matrix size mismatch");
  }
  // Left-multiply O onto rho column by column, then take the trace.
  const std::size_t dim = rho.dim();
  std::vector<Complex> work = rho.entries();
  for (int s = 0; s < n; ++s) {
    if (!settings[s]) continue;
    const auto m = setting_matrix(*settings[s]);
    const std::size_t bit = site_bit(n, s);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r & bit) continue;
      for (std::size_t c = 0; c < dim; ++c) {
        Complex a0 = work[r * dim + c], a1 = work[(r | bit) * dim + c];
        work[r * dim + c] = m[0] * a0 + m[1] * a1;
        work[(r | bit) * dim + c] = m[2] * a0 + m[3] * a1;
      }
    }
  }
  Complex t = 0;
  for (std::size_t i = 0; i < dim; ++i) t += work[i * dim + i];
  return real_checked(t, "expectation_settings");
}

DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep, int max_kept) {
  const int n = state.n_sites();
  if (keep.empty()) throw DimensionError("partial_trace needs a nonempty keep set");
  if (static_cast<int>(keep.size()) > max_kept) {
    throw DimensionError("too many kept sites for dense density matrix");
  }
  std::vector<bool> kept(n, false);
  for (int s : keep) {
    if (s < 0 || s >= n) throw DimensionError("kept site out of range");
    if (kept[s]) throw DimensionError("duplicate kept site");
    kept[s] = true;
  }
  std::vector<int> env;
  for (int s = 0; s < n; ++s) {
    if (!kept[s]) env.push_back(s);
  }
  const int k = static_cast<int>(keep.size());
  const std::size_t kd = std::size_t{1} << k;
  const std::size_t ed = std::size_t{1} << env.size();
  std::vector<Complex> entries(kd * kd, Complex{0, 0});
  std::vector<Complex> col(kd);
  for (std::size_t e = 0; e < ed; ++e) {
    std::size_t base = 0;
    for (std::size_t t = 0; t < env.size(); ++t) {
      if (e & (std::size_t{1} << (env.size() - 1 - t))) base |= site_bit(n, env[t]);
    }
    for (std::size_t a = 0; a < kd; ++a) {
      std::size_t idx = base;
      for (int t = 0; t < k; ++t) {
        if (a & (std::size_t{1} << (k - 1 - t))) idx |= site_bit(n, keep[t]);
      }
      col[a] = state.amplitude(idx);
    }
    for (std::size_t a = 0; a < kd; ++a) {
      for (std::size_t b = 0; b < kd; ++b) {
        entries[a * kd + b] += col[a] * std::conj(col[b]);
      }
    }
  }
  return DensityMatrix(k, std::move(entries));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double p = 0;
  for (const auto& v : rho.entries()) p += std::norm(v);
  return p;
}

}  // namespace clusternl
