#pragma once

// Partition-refinement canonical labelling for graphs of at most 64 vertices.
//
// Equitable refinement followed by a depth-first individualisation search.
// The canonical leaf is the one whose relabelled adjacency rows are
// lexicographically greatest. Automorphisms discovered at leaves prune the
// tree twice: by jumping back to the node where the equivalent path split
// off, and by orbit pruning at nodes of the first path.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace minorsieve::detail {

class CanonEngine {
 public:
  static constexpr int kMax = 64;

  /// Runs the search on `n` adjacency rows. Afterwards labels()[i] is the
  /// vertex placed at canonical position i and rows() holds the canonical
  /// adjacency rows.
  void run(const std::uint64_t* adj, int n);

  const std::uint8_t* labels() const noexcept { return best_lab_.data(); }
  const std::uint64_t* rows() const noexcept { return best_code_.data(); }

  /// Least vertex of each vertex's orbit under the automorphisms found.
  /// Exact after run(): the first path's generators generate the full group.
  void orbits(std::uint8_t* out) const;

 private:
  struct Partition {
    int cells = 0;
    std::array<std::uint64_t, kMax> cell{};
  };

  void refine(Partition& p, std::uint64_t splitter) const;
  void refine_from(Partition& p, int from_cell) const;
  int search(const Partition& p, int depth, bool on_first);
  int leaf(const Partition& p, int depth);
  void add_generator(const std::uint8_t* from_lab, const std::uint8_t* to_lab);
  void orbits_fixing(int depth, std::uint8_t* root) const;

  int n_ = 0;
  std::array<std::uint64_t, kMax> adj_{};

  std::array<std::uint8_t, kMax> path_{};
  std::array<std::uint8_t, kMax> first_path_{};
  std::array<std::uint8_t, kMax> best_path_{};
  int first_len_ = -1;
  int best_len_ = -1;

  std::array<std::uint8_t, kMax> first_lab_{};
  std::array<std::uint64_t, kMax> first_code_{};
  std::array<std::uint8_t, kMax> best_lab_{};
  std::array<std::uint64_t, kMax> best_code_{};

  std::vector<std::array<std::uint8_t, kMax>> generators_;
};

}  // namespace minorsieve::detail
