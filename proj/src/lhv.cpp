#include "clusternl/lhv.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "clusternl/errors.hpp"

namespace clusternl {

namespace {

constexpr int kVariableCeiling = 24;

// Maps each constraint to a bit mask over the shared variable list.
struct VariableIndex {
  std::vector<std::pair<int, PauliLetter>> vars;
  std::map<std::pair<int, PauliLetter>, int> index;

  explicit VariableIndex(const std::vector<Constraint>& cs) {
    vars = involved_variables(cs);
    if (static_cast<int>(vars.size()) > kVariableCeiling) {
      throw SearchCeilingExceeded("LHV search over more than 2^24 assignments");
    }
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<int>(i);
  }

  std::uint32_t mask_of(const Constraint& c) const {
    std::uint32_t m = 0;
    for (int s = 0; s < c.word.n_sites(); ++s) {
      PauliLetter l = c.word.letter(s);
      if (l != PauliLetter::I) m |= 1u << index.at({s, l});
    }
    return m;
  }

  // Assignment bits: bit v set means variable v takes -1.
  LhvAssignment assignment_of(std::uint32_t bits) const {
    LhvAssignment lam;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      lam[vars[v]] = (bits >> v) & 1 ? -1 : +1;
    }
    return lam;
  }

  // Lexicographic key (variable 0 most significant, +1 before -1).
  std::uint32_t lex_key(std::uint32_t bits) const {
    std::uint32_t key = 0;
    const int v_count = static_cast<int>(vars.size());
    for (int v = 0; v < v_count; ++v) {
      if ((bits >> v) & 1) key |= 1u << (v_count - 1 - v);
    }
    return key;
  }
};

std::vector<int> sites_from_mask(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace

int letter_rank(PauliLetter l) {
  switch (l) {
    case PauliLetter::X: return 0;
    case PauliLetter::Y: return 1;
    case PauliLetter::Z: return 2;
    default: throw DimensionError("identity is not an LHV variable");
  }
}

std::vector<std::pair<int, PauliLetter>> involved_variables(const std::vector<Constraint>& cs) {
  std::vector<std::pair<int, PauliLetter>> vars;
  for (const auto& c : cs) {
    for (int s = 0; s < c.word.n_sites(); ++s) {
      PauliLetter l = c.word.letter(s);
      if (l != PauliLetter::I) vars.emplace_back(s, l);
    }
  }
  auto order = [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : letter_rank(a.second) < letter_rank(b.second);
  };
  std::sort(vars.begin(), vars.end(), order);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool constraint_satisfied(const LhvAssignment& lam, const Constraint& c) {
  int product = 1;
  for (int s = 0; s < c.word.n_sites(); ++s) {
    PauliLetter l = c.word.letter(s);
    if (l == PauliLetter::I) continue;
    auto it = lam.find({s, l});
    if (it == lam.end()) throw SearchCeilingExceeded("assignment missing a required variable");
    product *= it->second;
  }
  return product == c.sign;
}

SatResult max_satisfied(const std::vector<Constraint>& constraints) {
  VariableIndex vi(constraints);
  std::vector<std::uint32_t> masks;
  std::vector<bool> want_neg;
  masks.reserve(constraints.size());
  for (const auto& c : constraints) {
    masks.push_back(vi.mask_of(c));
    want_neg.push_back(c.sign < 0);
  }
  const std::uint64_t total = std::uint64_t{1} << vi.vars.size();
  int best = -1;
  std::uint32_t best_key = 0, best_bits = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    int count = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      bool neg = std::popcount(static_cast<std::uint32_t>(bits) & masks[i]) & 1;
      if (neg == want_neg[i]) ++count;
    }
    std::uint32_t key = vi.lex_key(static_cast<std::uint32_t>(bits));
    if (count > best || (count == best && key < best_key)) {
      best = count;
      best_key = key;
      best_bits = static_cast<std::uint32_t>(bits);
    }
  }
  return {best, vi.assignment_of(best_bits)};
}

WeightedSumResult max_weighted_sum(const std::vector<std::pair<Constraint, double>>& terms) {
  std::vector<Constraint> cs;
  cs.reserve(terms.size());
  for (const auto& [c, w] : terms) cs.push_back(c);
  VariableIndex vi(cs);
  std::vector<std::uint32_t> masks;
  std::vector<double> signed_w;
  for (const auto& [c, w] : terms) {
    masks.push_back(vi.mask_of(c));
    signed_w.push_back(c.sign * w);
  }
  const std::uint64_t total = std::uint64_t{1} << vi.vars.size();
  double best = 0;
  bool first = true;
  std::uint32_t best_key = 0, best_bits = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    double value = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      bool neg = std::popcount(static_cast<std::uint32_t>(bits) & masks[i]) & 1;
      value += neg ? -signed_w[i] : signed_w[i];
    }
    std::uint32_t key = vi.lex_key(static_cast<std::uint32_t>(bits));
    if (first || value > best || (value == best && key < best_key)) {
      first = false;
      best = value;
      best_key = key;
      best_bits = static_cast<std::uint32_t>(bits);
    }
  }
  return {best, vi.assignment_of(best_bits)};
}

bool GhzArgument::valid() const {
  if (elements.size() < 3) return false;
  LetterParity parity;
  int sign_product = 1;
  for (const auto& e : elements) {
    parity ^= letter_parity_vector(e.word);
    sign_product *= e.sign;
  }
  return parity.is_zero() && sign_product == -1;
}

GhzArgument make_ghz_argument(std::vector<StabilizerElement> elements) {
  GhzArgument arg;
  arg.elements = std::move(elements);
  std::uint64_t support = 0, non_z = 0, any_z = 0;
  for (const auto& e : arg.elements) {
    LetterParity p = letter_parity_vector(e.word);
    std::uint64_t occ = e.word.x_bits() | e.word.z_bits();
    support |= occ;
    non_z |= p.x | p.y;
    any_z |= p.z;
  }
  arg.window = sites_from_mask(support);
  arg.cooperating_sites = sites_from_mask(any_z & ~non_z);
  return arg;
}

bool ghz_argument_sound(const GhzArgument& arg) {
  SatResult r = max_satisfied(arg.elements);
  return r.count == static_cast<int>(arg.elements.size()) - 1;
}

std::vector<GhzArgument> find_ghz_arguments(const std::vector<StabilizerElement>& elements,
                                            int max_subset_size) {
  // Candidate subsets must multiply to the identity word, i.e. their
  // generator masks XOR to zero; the last member is therefore determined by
  // the others, which keeps the scan at C(G, s-1) instead of C(G, s).
  std::unordered_map<std::uint64_t, int> by_mask;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].word.is_identity_word()) continue;
    by_mask.emplace(elements[i].generator_mask, static_cast<int>(i));
  }

  std::vector<GhzArgument> found;
  std::vector<int> pick;
  const int n = static_cast<int>(elements.size());

  auto consider = [&](const std::vector<int>& idx) {
    LetterParity parity;
    int sign_product = 1;
    for (int i : idx) {
      parity ^= letter_parity_vector(elements[i].word);
      sign_product *= elements[i].sign;
    }
    if (!parity.is_zero() || sign_product != -1) return;
    std::vector<StabilizerElement> subset;
    subset.reserve(idx.size());
    for (int i : idx) subset.push_back(elements[i]);
    found.push_back(make_ghz_argument(std::move(subset)));
  };

  for (int size = 3; size <= max_subset_size; ++size) {
    // Choose size-1 members in lexicographic index order; complete by XOR.
    std::vector<int> idx(size);
    auto recurse = [&](auto&& self, int depth, int start, std::uint64_t xor_mask) -> void {
      if (depth == size - 1) {
        auto it = by_mask.find(xor_mask);
        if (it == by_mask.end()) return;
        int last = it->second;
        if (last <= idx[depth - 1]) return;
        idx[depth] = last;
        consider(idx);
        return;
      }
      for (int i = start; i < n; ++i) {
        if (elements[i].word.is_identity_word()) continue;
        idx[depth] = i;
        self(self, depth + 1, i + 1, xor_mask ^ elements[i].generator_mask);
      }
    };
    recurse(recurse, 0, 0, 0);
  }
  return found;
}

std::vector<GhzArgument> find_ghz_arguments(const StabilizerGroup& group, int max_subset_size) {
  return find_ghz_arguments(group.elements(), max_subset_size);
}

GhzArgument window_argument_1d(int chain_length, int k) {
  if (chain_length < 4) throw DimensionError("chain too short for a triple argument");
  if (k < 1 || k > chain_length - 2) throw DimensionError("window start k out of range");
  Graph chain = build_lattice({chain_length});
  // 1-based E_k maps to generator(k-1).
  const int a = k - 1, b = k, c = k + 1;
  return path_triple_argument(chain, a, b, c);
}

GhzArgument path_triple_argument(const Graph& g, int a, int b, int c) {
  if (a == c) throw NoPathError("path endpoints coincide");
  if (!g.adjacent(a, b) || !g.adjacent(b, c)) {
    throw NoPathError("sites do not form a neighbor-to-neighbor path");
  }
  auto combine = [&](std::uint64_t mask) { return element_from_mask(g, mask); };
  const std::uint64_t ma = 1ull << a, mb = 1ull << b, mc = 1ull << c;
  std::vector<StabilizerElement> elements = {
      combine(mb),            // the middle equation itself
      combine(ma | mb),       // C1
      combine(mb | mc),       // C2
      combine(ma | mb | mc),  // C3, carrying the minus sign
  };
  GhzArgument arg = make_ghz_argument(std::move(elements));
  if (!arg.valid()) {
    throw NoPathError("triple does not yield a sign contradiction on this graph");
  }
  return arg;
}

}  // namespace clusternl
