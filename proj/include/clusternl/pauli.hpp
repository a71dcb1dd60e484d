#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clusternl/errors.hpp"

namespace clusternl {

// Single-site Pauli letter, encoded as (x-bit, z-bit): I=00, X=01, Z=10, Y=11.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(PauliLetter l);
PauliLetter letter_from_char(char c);

// i-exponent contributed by the single-site product a*b, i.e. a*b = i^t (a xor b).
int letter_product_phase(PauliLetter a, PauliLetter b);

// N-site Pauli word with a tracked global phase i^phase_exp.
// Letters live in two bit masks (bit s = site s), so a word multiply is a
// handful of bitwise ops plus a per-site phase scan.
class PauliString {
 public:
  static constexpr int kMaxSites = 64;

  PauliString(int n_sites, std::uint64_t x_bits, std::uint64_t z_bits, int phase_exp = 0);
  static PauliString identity(int n_sites);
  static PauliString from_letters(const std::vector<PauliLetter>& letters, int phase_exp = 0);

  // Parses the canonical rendering: optional "+", "-", "+i", "-i" (ASCII or
  // U+2212 minus) followed by one letter per site.
  static PauliString parse(std::string_view text);

  int n_sites() const { return n_sites_; }
  int phase_exp() const { return phase_exp_; }
  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t z_bits() const { return z_bits_; }

  PauliLetter letter(int site) const;
  std::vector<PauliLetter> letters() const;
  bool is_identity_word() const { return x_bits_ == 0 && z_bits_ == 0; }
  bool is_hermitian() const { return phase_exp_ % 2 == 0; }

  // +1 for phase_exp 0, -1 for 2; throws NonHermitianError on odd exponent.
  int sign() const;

  // Returns a copy with phase_exp forced to 0.
  PauliString unsigned_word() const;

  std::string str() const;

  bool operator==(const PauliString& other) const = default;

 private:
  int n_sites_;
  std::uint64_t x_bits_;
  std::uint64_t z_bits_;
  int phase_exp_;  // mod 4
};

PauliString multiply(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

// Per-site occupancy of the three non-identity letters, one bit mask each.
// X, Y and Z are treated as three independent classical variables per site;
// Y is deliberately not identified with X*Z.
struct LetterParity {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  LetterParity operator^(const LetterParity& o) const { return {x ^ o.x, y ^ o.y, z ^ o.z}; }
  LetterParity& operator^=(const LetterParity& o) {
    x ^= o.x;
    y ^= o.y;
    z ^= o.z;
    return *this;
  }
  bool operator==(const LetterParity&) const = default;
};

LetterParity letter_parity_vector(const PauliString& a);

}  // namespace clusternl
