#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clusternl/pauli.hpp"

namespace clusternl {

// Simple undirected graph on sites 0..N-1.
class Graph {
 public:
  Graph(int site_count, std::vector<std::pair<int, int>> edges);

  int site_count() const { return site_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::uint64_t neighbor_mask(int site) const;
  bool adjacent(int a, int b) const;

  // Plain-text format: "sites N" then one "edge i j" line per edge.
  std::string to_text() const;
  static Graph from_text(std::string_view text);

 private:
  int site_count_;
  std::vector<std::pair<int, int>> edges_;          // normalized i<j, sorted
  std::vector<std::uint64_t> neighbor_masks_;
};

// d-dimensional open-boundary square lattice, one extent per dimension.
// Site indexing is row-major with the last coordinate fastest.
Graph build_lattice(const std::vector<int>& extents);

// Site 0 is the hub, sites 1..n_leaves the leaves. The graph state on a star
// is locally equivalent to a GHZ state.
Graph star_graph(int n_leaves);

// Parses a graph spec: "1d:N", "AxB", "AxBxC", "star:n", or inline/graph-file
// text in the "sites N / edge i j" format.
Graph parse_graph_spec(std::string_view spec);

// Signed stabilizer group element together with the generator subset that
// produced it. The word's i-exponent is normalized to 0; the +-1 is in sign.
struct StabilizerElement {
  PauliString word;
  int sign;
  std::uint64_t generator_mask;

  bool operator==(const StabilizerElement&) const = default;
};

// S_a = X at a, Z on every neighbor of a.
StabilizerElement generator(const Graph& g, int a);

// Product of the generators selected by mask; empty mask gives +identity.
StabilizerElement element_from_mask(const Graph& g, std::uint64_t mask);

class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::vector<StabilizerElement> elements)
      : elements_(std::move(elements)) {}

  const std::vector<StabilizerElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const StabilizerElement& operator[](std::size_t i) const { return elements_[i]; }

 private:
  std::vector<StabilizerElement> elements_;  // indexed by generator mask
};

// All 2^N elements, indexed by generator mask. Throws GroupTooLarge past the
// site limit (default 20, about one million elements).
StabilizerGroup full_group(const Graph& g, int limit = 20);

}  // namespace clusternl
