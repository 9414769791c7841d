#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minorsieve/graph.hpp"

namespace minorsieve {

/// Isomorphism-invariant key of a graph.
///
/// The key is the word sequence (order, size, packed upper triangle of the
/// canonically relabelled adjacency matrix). Keys compare lexicographically,
/// so sorting by key groups graphs by order, then by size.
class CanonicalForm {
 public:
  CanonicalForm() = default;

  std::size_t order() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::size_t size() const noexcept { return words_.size() < 2 ? 0 : words_[1]; }

  /// The canonical representative of the isomorphism class.
  Graph graph() const;

  /// Big-endian bytes of the key words; ordering matches operator<=>.
  std::string bytes() const;
  std::size_t hash() const noexcept;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  friend CanonicalForm make_canonical_form(std::size_t order, const std::uint64_t* rows);
  std::vector<std::uint64_t> words_;
};

struct CanonicalLabeling {
  /// position[v] is the index vertex v takes in the canonical graph.
  std::vector<Vertex> position;
  CanonicalForm form;
};

/// Builds the key from adjacency rows that are already in canonical order.
CanonicalForm make_canonical_form(std::size_t order, const std::uint64_t* rows);

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical(const Graph& g);
/// relabel(g, canonical_labeling(g).position), which equals canonical(g).graph().
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Orbits of the automorphism group, as the least vertex of each vertex's orbit.
std::vector<Vertex> automorphism_orbits(const Graph& g);

}  // namespace minorsieve

template <>
struct std::hash<minorsieve::CanonicalForm> {
  std::size_t operator()(const minorsieve::CanonicalForm& f) const noexcept { return f.hash(); }
};
