#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "minorsieve/graph.hpp"
#include "minorsieve/properties.hpp"

namespace minorsieve {

/// Raised when a computation would exceed a configured bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SieveOptions {
  /// Maximum number of distinct graphs the sieve may hold; exceeding it
  /// throws ResourceLimitError rather than returning a guess.
  std::size_t max_visited = 4'000'000;
};

/// Every single edge deletion, edge contraction and vertex deletion of g,
/// one canonical graph per isomorphism class, sorted by canonical form.
std::vector<Graph> one_step_minors(const Graph& g);

/// Minimality for properties whose complement is minor-closed (NA, IA, IE,
/// IC): g has p and no one-step minor does. Throws std::invalid_argument
/// for other properties.
bool is_minor_minimal_upclosed(const Graph& g, PropertyId p);

/// Minor-minimal NE, decided by the deletion-seeded contraction sieve.
bool is_mmne(const Graph& g, const SieveOptions& options = {});
/// Minor-minimal NC, decided by the contraction-seeded deletion sieve.
bool is_mmnc(const Graph& g, const SieveOptions& options = {});

/// Reference decider: walks the full closure of g under edge deletion, edge
/// contraction and vertex deletion. Graphs above max_order are refused with
/// ResourceLimitError.
bool is_minor_minimal_exhaustive(const Graph& g, PropertyId p, std::size_t max_order = 10);

/// Dispatches to the decider appropriate for p.
bool is_minor_minimal(const Graph& g, PropertyId p, const SieveOptions& options = {});

}  // namespace minorsieve
