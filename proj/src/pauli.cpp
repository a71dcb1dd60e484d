#include "clusternl/pauli.hpp"

#include <bit>

namespace clusternl {

namespace {

// phase_table[a*4+b] = t with a*b = i^t (a xor b), letters in (x,z) encoding.
// Derived from XY=iZ, YZ=iX, ZX=iY and their reverses.
constexpr std::array<int, 16> kPhaseTable = {
    // b:  I  X  Z  Y         a:
    0, 0, 0, 0,  // I
    0, 0, 3, 1,  // X
    0, 1, 0, 3,  // Z
    0, 3, 1, 0,  // Y
};

}  // namespace

char letter_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Z: return 'Z';
    case PauliLetter::Y: return 'Y';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': case 'i': return PauliLetter::I;
    case 'X': case 'x': return PauliLetter::X;
    case 'Y': case 'y': return PauliLetter::Y;
    case 'Z': case 'z': return PauliLetter::Z;
  }
  throw ParseError(std::string("not a Pauli letter: '") + c + "'");
}

int letter_product_phase(PauliLetter a, PauliLetter b) {
  return kPhaseTable[static_cast<int>(a) * 4 + static_cast<int>(b)];
}

PauliString::PauliString(int n_sites, std::uint64_t x_bits, std::uint64_t z_bits, int phase_exp)
    : n_sites_(n_sites), x_bits_(x_bits), z_bits_(z_bits), phase_exp_(((phase_exp % 4) + 4) % 4) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw DimensionError("PauliString site count out of range");
  }
  const std::uint64_t valid = (n_sites == 64) ? ~0ull : ((1ull << n_sites) - 1);
  if ((x_bits & ~valid) || (z_bits & ~valid)) {
    throw DimensionError("PauliString letter bits beyond site count");
  }
}

PauliString PauliString::identity(int n_sites) { return PauliString(n_sites, 0, 0, 0); }

PauliString PauliString::from_letters(const std::vector<PauliLetter>& letters, int phase_exp) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t s = 0; s < letters.size(); ++s) {
    auto v = static_cast<std::uint8_t>(letters[s]);
    if (v & 1) x |= 1ull << s;
    if (v & 2) z |= 1ull << s;
  }
  return PauliString(static_cast<int>(letters.size()), x, z, phase_exp);
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  if (text.starts_with("−")) {  // U+2212 minus sign
    phase = 2;
    text.remove_prefix(3);
  } else if (text.starts_with('-')) {
    phase = 2;
    text.remove_prefix(1);
  } else if (text.starts_with('+')) {
    text.remove_prefix(1);
  }
  if (text.starts_with('i')) {
    phase += 1;
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("empty Pauli word");
  std::vector<PauliLetter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c));
  return from_letters(letters, phase);
}

PauliLetter PauliString::letter(int site) const {
  if (site < 0 || site >= n_sites_) throw DimensionError("site out of range");
  int v = static_cast<int>((x_bits_ >> site) & 1) | (static_cast<int>((z_bits_ >> site) & 1) << 1);
  return static_cast<PauliLetter>(v);
}

std::vector<PauliLetter> PauliString::letters() const {
  std::vector<PauliLetter> out(n_sites_);
  for (int s = 0; s < n_sites_; ++s) out[s] = letter(s);
  return out;
}

int PauliString::sign() const {
  if (phase_exp_ == 0) return +1;
  if (phase_exp_ == 2) return -1;
  throw NonHermitianError("PauliString with odd i-exponent has no real sign");
}

PauliString PauliString::unsigned_word() const {
  return PauliString(n_sites_, x_bits_, z_bits_, 0);
}

std::string PauliString::str() const {
  std::string out;
  switch (phase_exp_) {
    case 0: out = "+"; break;
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    case 3: out = "-i"; break;
  }
  for (int s = 0; s < n_sites_; ++s) out += letter_char(letter(s));
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_sites() != b.n_sites()) throw DimensionError("PauliString length mismatch");
  int phase = a.phase_exp() + b.phase_exp();
  // Sites where both words are non-identity and differ contribute a phase.
  std::uint64_t both = (a.x_bits() | a.z_bits()) & (b.x_bits() | b.z_bits());
  std::uint64_t differ = (a.x_bits() ^ b.x_bits()) | (a.z_bits() ^ b.z_bits());
  for (std::uint64_t m = both & differ; m != 0; m &= m - 1) {
    int s = std::countr_zero(m);
    phase += letter_product_phase(a.letter(s), b.letter(s));
  }
  return PauliString(a.n_sites(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(), phase);
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_sites() != b.n_sites()) throw DimensionError("PauliString length mismatch");
  int anti = std::popcount(a.x_bits() & b.z_bits()) + std::popcount(a.z_bits() & b.x_bits());
  return anti % 2 == 0;
}

LetterParity letter_parity_vector(const PauliString& a) {
  std::uint64_t both = a.x_bits() & a.z_bits();
  return {a.x_bits() & ~both, both, a.z_bits() & ~both};
}

}  // namespace clusternl
