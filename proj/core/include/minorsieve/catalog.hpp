#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minorsieve/graph.hpp"
#include "minorsieve/properties.hpp"

namespace minorsieve {

/// Raised when a structural recipe does not reproduce the expected family.
class CatalogConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Claim {
  enum class Kind { Has, MinorMinimal };
  Kind kind = Kind::MinorMinimal;
  PropertyId property = PropertyId::NA;
  /// False records a negative expectation (e.g. K5 is not MMNE).
  bool expected = true;

  friend bool operator==(const Claim&, const Claim&) = default;
};

std::string to_string(const Claim& c);

struct CatalogEntry {
  std::string id;
  /// Canonical labelling.
  Graph graph;
  std::vector<Claim> claims;
  std::string provenance;
};

/// Named graphs such as "K5", "K33-e", "K33+2e", "barK5", "K2⊔K5", "K2∪̇K33",
/// "K1⊔K5", "K6-e", "K43". ASCII spellings are accepted for the union symbols:
/// "+" for ⊔ as in "K2+K5" and "." for ∪̇ as in "K2.K5". Returned in canonical
/// labelling; unknown ids throw std::invalid_argument.
Graph build_named(std::string_view id);

/// Ids accepted by build_named, in their primary spelling.
std::vector<std::string> named_ids();

/// The minor-minimal graphs recorded for p. AN, CAN, IA, IE and IC are
/// complete; NA, NE and NC are the explicit lists (36, 27 and 34 graphs).
const std::vector<CatalogEntry>& mm_catalog(PropertyId p);

enum class MmnaFamily { AbEdge9, Bowtie3, T220, T221, T222 };
inline constexpr MmnaFamily kAllMmnaFamilies[] = {MmnaFamily::AbEdge9, MmnaFamily::Bowtie3,
                                                 MmnaFamily::T220, MmnaFamily::T221,
                                                 MmnaFamily::T222};
std::string_view to_string(MmnaFamily f);
MmnaFamily parse_mmna_family(std::string_view s);
std::size_t expected_family_size(MmnaFamily f);

/// Builds every placement the family's recipe allows, removes isomorphic
/// copies and keeps the MMNA graphs. Throws CatalogConsistencyError unless
/// exactly expected_family_size(f) graphs remain. Sorted by canonical form.
std::vector<Graph> build_mmna_family(MmnaFamily f);

/// The six 2-connected MMNE graphs of connectivity two built from K5-e,
/// K33 and K33-e blocks glued on a nonadjacent pair.
std::vector<Graph> build_two_cut_mmne();

enum class AppendixList { A1_MMNE_15, A2_MMNC_22 };
/// Decoded appendix lists in their printed order and labelling (label k is vertex k-1).
std::vector<Graph> appendix_graphs(AppendixList which);
/// The printed text of one appendix entry.
std::string_view appendix_text(AppendixList which, std::size_t index);

enum class Counterexample { NE_not_closed, NC_not_closed };
/// A graph with property p whose minor across the distinguished edge loses it.
std::pair<Graph, Edge> counterexample(Counterexample which);

struct ClaimResult {
  std::string subject;
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct CatalogReport {
  std::vector<ClaimResult> results;
  double seconds = 0.0;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

struct VerifyOptions {
  std::size_t jobs = 1;
};

/// Re-derives every claim of every catalog entry plus the structural facts
/// tying the catalogs together (counts, non-isomorphism, coincidences,
/// counterexample behaviour, size distributions).
CatalogReport verify_catalog(const VerifyOptions& options = {});

/// Checks only the per-entry claims of the given entries.
CatalogReport verify_entries(const std::vector<CatalogEntry>& entries,
                             const VerifyOptions& options = {});

}  // namespace minorsieve
