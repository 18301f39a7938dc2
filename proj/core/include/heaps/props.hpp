#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heaps/boundary.hpp"
#include "heaps/heap.hpp"

namespace heaps {

/// One step of a dismantling sequence, applied to the current heap: remove
/// `removed` (a minimal element for kMinus, maximal for kPlus); `witness` is
/// an element that is extremal on the same side after the removal but was
/// not before, with a different label.  Indices refer to the heap the step
/// applies to; the next step refers to the canonical heap after removal.
struct DismantlingStep {
  enum class Direction { kMinus, kPlus };
  int removed = -1;
  Direction direction = Direction::kMinus;
  int witness = -1;
};

std::string to_string(DismantlingStep::Direction direction);
std::string to_string(const std::vector<DismantlingStep>& steps);

/// No balanced convex chain of length 2 or 3.
bool has_p2(const Heap& heap);

/// Whether the heap can be reduced to a trivial heap by extremal removals.
/// The search is exhaustive with global memoization on canonical forms, so a
/// negative answer is a proof at this size.
bool is_dismantlable(const Heap& heap);

/// Witness sequence for is_dismantlable; trivial heaps yield an empty
/// sequence, non-dismantlable heaps nullopt.  Steps try minimal-side
/// removals before maximal-side ones, candidates in canonical element order.
std::optional<std::vector<DismantlingStep>> dismantle(const Heap& heap);

/// Checks one recorded step against `heap`; returns the heap after removal.
/// Throws InputError when the step's certificates do not hold.
Heap apply_dismantling_step(const Heap& heap, const DismantlingStep& step);

/// Every heap over the graph with at most max_size elements, exactly once
/// (canonical forms), ordered by size then lexicographic canonical word.
/// With p2_only, only heaps with property P2 are produced; the generation
/// prunes on P2, which new-top extensions preserve downward.  max_size of
/// nullopt enumerates until a size layer is empty, which terminates exactly
/// when the (P2-filtered) class is finite.
std::vector<Heap> enumerate_heaps(GraphPtr graph, std::optional<std::size_t> max_size,
                                  bool p2_only);

struct RegularityReport {
  bool regular = false;
  std::optional<std::string> counterexample;  // canonical word of a P2, non-P1 heap
  /// Set when every P2 heap is P1 but some P2 heap is not strongly acyclic
  /// (which would contradict regularity); canonical word.
  std::optional<std::string> strong_acyclicity_violation;
  std::uint64_t heaps_checked = 0;
};

/// Scans every P2 heap of at most max_size elements for one that is not
/// dismantlable, cross-checking strong acyclicity on the way.  Verdicts are
/// always "up to max_size"; regularity proper quantifies over all heaps.
RegularityReport check_regular(GraphPtr graph, std::size_t max_size, Field field);

}  // namespace heaps
