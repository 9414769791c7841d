#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minorsieve/graph.hpp"
#include "minorsieve/minimality.hpp"
#include "minorsieve/properties.hpp"

namespace minorsieve {

enum class PlanarityFilter { KeepAll, KeepPlanar, KeepNonplanar };

struct EnumFilter {
  std::size_t order = 0;
  std::optional<std::size_t> min_size;
  std::optional<std::size_t> max_size;
  std::optional<std::size_t> min_degree;
  bool connected = false;
  PlanarityFilter planarity = PlanarityFilter::KeepAll;

  bool accepts(const Graph& g) const;
};

struct EnumOptions {
  /// Orders above this are refused with ResourceLimitError.
  std::size_t max_order = 10;
  /// Worker threads; output is identical for every value.
  std::size_t jobs = 1;
  /// Only parents whose index is congruent to shard_index modulo
  /// shard_count are expanded at the final level.
  std::size_t shard_index = 0;
  std::size_t shard_count = 1;
  /// When set, augmentation subsets are visited in a shuffled order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// One graph per isomorphism class of order filter.order passing the filter,
/// in canonical labelling. The callback runs on worker threads when
/// options.jobs > 1 and must then be thread-safe; call order is unspecified.
void enumerate(const EnumFilter& filter, const std::function<void(const Graph&)>& sink,
               const EnumOptions& options = {});

/// All graphs passing the filter, sorted by canonical form.
std::vector<Graph> enumerate_all(const EnumFilter& filter, const EnumOptions& options = {});

std::size_t count_graphs(const EnumFilter& filter, const EnumOptions& options = {});

/// Human-readable filter summary, e.g. "order=9 min_degree=2 connected nonplanar".
std::string describe(const EnumFilter& filter);

struct SearchReport {
  PropertyId property = PropertyId::NE;
  std::size_t min_order = 0;
  std::size_t max_order = 0;
  /// Filter template; its order field is ignored.
  EnumFilter filter;
  std::size_t scanned = 0;
  /// Minor-minimal graphs found, canonical labelling, sorted by canonical form.
  std::vector<Graph> found;
  double seconds = 0.0;
};

/// The filter a search uses when none is given: nonplanar graphs for the
/// properties implying nonplanarity, planar graphs for AN and CAN.
EnumFilter default_search_filter(PropertyId p);

/// Enumerates every order in [min_order, max_order] under `filter` and keeps
/// the graphs that are minor-minimal for p.
SearchReport search_minor_minimal(PropertyId p, std::size_t min_order, std::size_t max_order,
                                  const EnumFilter& filter, const EnumOptions& options = {},
                                  const SieveOptions& sieve = {});

}  // namespace minorsieve
