#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "clusternl/graph.hpp"
#include "clusternl/pauli.hpp"

namespace clusternl {

// Pre-established +-1 value for each (site, observable) pair that appears in
// the constraint set under analysis.
using LhvAssignment = std::map<std::pair<int, PauliLetter>, int>;

// A perfect-correlation constraint: the commutative product of the assigned
// values over the word's non-identity sites must equal the element's sign.
using Constraint = StabilizerElement;

// Tie-break order for LHV variables: site ascending, then X < Y < Z.
int letter_rank(PauliLetter l);
std::vector<std::pair<int, PauliLetter>> involved_variables(const std::vector<Constraint>& cs);

bool constraint_satisfied(const LhvAssignment& lam, const Constraint& c);

struct SatResult {
  int count;
  LhvAssignment witness;
};

// Exact maximum number of simultaneously satisfied constraints over all
// deterministic assignments, with the lexicographically smallest witness
// (variable-index order, +1 before -1). Exhaustive over 2^V, V <= 24.
SatResult max_satisfied(const std::vector<Constraint>& constraints);

struct WeightedSumResult {
  double value;
  LhvAssignment witness;
};

// Exact maximum of sum_i w_i * sign_i * (product of assigned values over the
// i-th word). Each term is +w_i when the constraint holds, -w_i otherwise.
WeightedSumResult max_weighted_sum(const std::vector<std::pair<Constraint, double>>& terms);

// A set of stabilizer constraints that no deterministic local assignment can
// jointly satisfy: even letter parity site-wise, odd number of minus signs.
struct GhzArgument {
  std::vector<StabilizerElement> elements;
  std::vector<int> window;             // sites with non-identity support
  std::vector<int> cooperating_sites;  // sites measured only in Z

  bool valid() const;
};

GhzArgument make_ghz_argument(std::vector<StabilizerElement> elements);

// Exhaustive LHV confirmation that at most size-1 constraints hold at once.
bool ghz_argument_sound(const GhzArgument& arg);

// All GHZ arguments among the given elements up to the size cap, ordered by
// subset size then lexicographically by element position in the input list.
// The identity element never participates.
std::vector<GhzArgument> find_ghz_arguments(const std::vector<StabilizerElement>& elements,
                                            int max_subset_size);
std::vector<GhzArgument> find_ghz_arguments(const StabilizerGroup& group, int max_subset_size = 6);

// The consecutive-triple argument {E_{k+1}, E_k E_{k+1}, E_{k+1} E_{k+2},
// E_k E_{k+1} E_{k+2}} on a 1D chain; k is 1-based, 1 <= k <= N-2. The
// triple product carries the minus sign; the window spans at most five
// consecutive sites.
GhzArgument window_argument_1d(int chain_length, int k);

// The same construction from three generators on a neighbor-to-neighbor path
// a-b-c of an arbitrary graph; throws NoPathError when the sites do not form
// such a path.
GhzArgument path_triple_argument(const Graph& g, int a, int b, int c);

}  // namespace clusternl
