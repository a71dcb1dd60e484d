#include "clusternl/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "clusternl/errors.hpp"

namespace clusternl {

Graph::Graph(int site_count, std::vector<std::pair<int, int>> edges)
    : site_count_(site_count), edges_(std::move(edges)) {
  if (site_count < 1 || site_count > PauliString::kMaxSites) {
    throw DimensionError("graph site count out of range");
  }
  for (auto& [i, j] : edges_) {
    if (i < 0 || j < 0 || i >= site_count || j >= site_count) {
      throw DimensionError("edge endpoint out of range");
    }
    if (i == j) throw ParseError("self-loop edge");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  neighbor_masks_.assign(site_count, 0);
  for (auto [i, j] : edges_) {
    neighbor_masks_[i] |= 1ull << j;
    neighbor_masks_[j] |= 1ull << i;
  }
}

std::uint64_t Graph::neighbor_mask(int site) const {
  if (site < 0 || site >= site_count_) throw DimensionError("site out of range");
  return neighbor_masks_[site];
}

bool Graph::adjacent(int a, int b) const { return (neighbor_mask(a) >> b) & 1; }

std::string Graph::to_text() const {
  std::ostringstream out;
  out << "sites " << site_count_ << "\n";
  for (auto [i, j] : edges_) out << "edge " << i << " " << j << "\n";
  return out.str();
}

Graph Graph::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string keyword;
  int sites = -1;
  std::vector<std::pair<int, int>> edges;
  while (in >> keyword) {
    if (keyword == "sites") {
      if (!(in >> sites)) throw ParseError("malformed 'sites' line");
    } else if (keyword == "edge") {
      int i, j;
      if (!(in >> i >> j)) throw ParseError("malformed 'edge' line");
      edges.emplace_back(i, j);
    } else if (keyword.starts_with("#")) {
      std::string rest;
      std::getline(in, rest);
    } else {
      throw ParseError("unknown graph-file keyword: " + keyword);
    }
  }
  if (sites < 1) throw ParseError("graph file missing 'sites' line");
  return Graph(sites, std::move(edges));
}

Graph build_lattice(const std::vector<int>& extents) {
  if (extents.empty()) throw ParseError("lattice needs at least one extent");
  long long total = 1;
  for (int e : extents) {
    if (e < 1) throw ParseError("lattice extent must be positive");
    total *= e;
  }
  if (total > PauliString::kMaxSites) throw DimensionError("lattice too large");
  const int n = static_cast<int>(total);
  const int d = static_cast<int>(extents.size());

  auto index_of = [&](const std::vector<int>& coord) {
    int idx = 0;
    for (int k = 0; k < d; ++k) idx = idx * extents[k] + coord[k];
    return idx;
  };

  std::vector<std::pair<int, int>> edges;
  std::vector<int> coord(d, 0);
  for (int idx = 0; idx < n; ++idx) {
    for (int k = 0; k < d; ++k) {
      if (coord[k] + 1 < extents[k]) {
        auto next = coord;
        ++next[k];
        edges.emplace_back(idx, index_of(next));
      }
    }
    // advance row-major, last coordinate fastest
    for (int k = d - 1; k >= 0; --k) {
      if (++coord[k] < extents[k]) break;
      coord[k] = 0;
    }
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(int n_leaves) {
  if (n_leaves < 1) throw ParseError("star graph needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int l = 1; l <= n_leaves; ++l) edges.emplace_back(0, l);
  return Graph(n_leaves + 1, std::move(edges));
}

Graph parse_graph_spec(std::string_view spec) {
  if (spec.find("sites") != std::string_view::npos) return Graph::from_text(spec);
  std::string s(spec);
  if (s.starts_with("1d:")) {
    int n = std::stoi(s.substr(3));
    return build_lattice({n});
  }
  if (s.starts_with("star:")) {
    int n = std::stoi(s.substr(5));
    return star_graph(n);
  }
  if (s.find('x') != std::string::npos) {
    std::vector<int> extents;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t next = s.find('x', pos);
      std::string part = s.substr(pos, next == std::string::npos ? next : next - pos);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("bad lattice spec: " + s);
      }
      extents.push_back(std::stoi(part));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return build_lattice(extents);
  }
  throw ParseError("unrecognized graph spec: " + s);
}

StabilizerElement generator(const Graph& g, int a) {
  if (a < 0 || a >= g.site_count()) throw DimensionError("generator site out of range");
  std::uint64_t x = 1ull << a;
  std::uint64_t z = g.neighbor_mask(a);
  return {PauliString(g.site_count(), x, z, 0), +1, 1ull << a};
}

StabilizerElement element_from_mask(const Graph& g, std::uint64_t mask) {
  PauliString word = PauliString::identity(g.site_count());
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    int a = std::countr_zero(m);
    word = multiply(word, generator(g, a).word);
  }
  int sign = word.sign();
  return {word.unsigned_word(), sign, mask};
}

StabilizerGroup full_group(const Graph& g, int limit) {
  const int n = g.site_count();
  if (n > limit) {
    throw GroupTooLarge("stabilizer group enumeration limited to " + std::to_string(limit) +
                        " sites");
  }
  std::vector<StabilizerElement> elements;
  elements.reserve(1ull << n);
  elements.push_back({PauliString::identity(n), +1, 0});
  std::vector<PauliString> gens;
  gens.reserve(n);
  for (int a = 0; a < n; ++a) gens.push_back(generator(g, a).word);
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::uint64_t low = mask & (~mask + 1);
    const PauliString& rest = elements[mask ^ low].word;
    PauliString prod = multiply(gens[std::countr_zero(low)],
                                PauliString(n, rest.x_bits(), rest.z_bits(),
                                            elements[mask ^ low].sign == 1 ? 0 : 2));
    elements.push_back({prod.unsigned_word(), prod.sign(), mask});
  }
  return StabilizerGroup(std::move(elements));
}

}  // namespace clusternl
