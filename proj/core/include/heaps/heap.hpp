#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heaps/concurrency_graph.hpp"

namespace heaps {

/// A heap of pieces, stored as its canonical labelled representative.
///
/// Elements are indexed 0..size()-1 in Cartier-Foata order: the antichain of
/// minimal elements comes first (sorted by piece order), then the minimal
/// elements of what remains, and so on.  Two heaps over the same graph are
/// isomorphic as labelled posets exactly when their canonical words agree,
/// so equality is a plain structural comparison.
///
/// Instances are immutable values; every operation returns a fresh canonical
/// heap.  Element indices always refer to the canonical numbering of one
/// specific heap and do not survive across operations.
class Heap {
public:
  static Heap empty(GraphPtr graph);
  static Heap single(GraphPtr graph, PieceId piece);

  /// Heap of a word: letters are dropped one by one, each new element landing
  /// on top of everything with a concurrent label.
  static Heap from_word(GraphPtr graph, std::span<const std::string> letters);
  static Heap from_word_ids(GraphPtr graph, const std::vector<PieceId>& letters);
  /// Convenience: splits on whitespace, then from_word.
  static Heap from_word_text(GraphPtr graph, std::string_view text);

  /// Builds a heap from explicit labelled-poset data: `below_pairs` entries
  /// (a, b) assert a < b; the order is their transitive closure.  Validates
  /// the heap axioms (concurrent labels comparable; order generated by
  /// concurrent covers) and throws InputError on violations.  When
  /// `old_to_new` is given it receives the renumbering into canonical form.
  static Heap from_labelled_poset(GraphPtr graph, std::vector<PieceId> labels,
                                  const std::vector<std::pair<int, int>>& below_pairs,
                                  std::vector<int>* old_to_new = nullptr);

  std::size_t size() const { return labels_.size(); }
  bool is_empty() const { return labels_.empty(); }
  const GraphPtr& graph() const { return graph_; }

  PieceId label(int element) const { return labels_[static_cast<std::size_t>(element)]; }
  const std::vector<PieceId>& word() const { return labels_; }
  std::vector<std::string> word_names() const;

  /// Strict order; less(a, b) means a is strictly below b.
  bool less(int a, int b) const {
    return less_[static_cast<std::size_t>(a) * labels_.size() + static_cast<std::size_t>(b)] != 0;
  }
  /// Hasse cover relations (a, b) with a covered by b, lexicographic.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool is_minimal(int element) const;
  bool is_maximal(int element) const;
  /// No element lies above another.
  bool trivial() const;
  /// Elements strictly between a and b, ascending.
  std::vector<int> between(int a, int b) const;
  std::size_t between_count(int a, int b) const;

  /// Number of distinct labels used.
  std::size_t label_count() const;
  /// Canonical word with piece names, e.g. "[1 3 2]"; "[]" when empty.
  std::string to_string() const;
  /// Key for hash maps: graph fingerprint plus canonical word.
  std::string cache_key() const;

  friend bool operator==(const Heap& a, const Heap& b) {
    return a.labels_ == b.labels_ &&
           (a.graph_ == b.graph_ || a.graph_->fingerprint() == b.graph_->fingerprint());
  }
  friend bool operator!=(const Heap& a, const Heap& b) { return !(a == b); }

private:
  Heap(GraphPtr graph, std::vector<PieceId> labels, std::vector<std::uint8_t> less);

  /// Canonicalizes any valid labelled-heap data (less must be a transitively
  /// closed strict order satisfying the axioms).
  static Heap canonicalize(GraphPtr graph, const std::vector<PieceId>& labels,
                           const std::vector<std::uint8_t>& less,
                           std::vector<int>* old_to_new);

  GraphPtr graph_;
  std::vector<PieceId> labels_;      // canonical word
  std::vector<std::uint8_t> less_;   // strict order matrix, row-major
  std::vector<std::pair<int, int>> covers_;
};

/// Ordering for map keys: by size, then canonical word, then graph.
struct HeapLess {
  bool operator()(const Heap& a, const Heap& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.word() != b.word()) return a.word() < b.word();
    return a.graph()->fingerprint() < b.graph()->fingerprint();
  }
};

/// Monoid product: disjoint union with first's elements placed below
/// second's wherever labels are concurrent.  Concatenating linear extensions
/// of the operands (first, then second) yields a linear extension of the
/// result.
Heap superpose(const Heap& first, const Heap& second);
/// As above, also reporting where each operand's elements land in the result.
Heap superpose(const Heap& first, const Heap& second,
               std::vector<int>& first_to_result, std::vector<int>& second_to_result);

/// Subheap on `keep`: the order is the transitive closure of the
/// concurrent-label relations among kept elements (not the induced order).
Heap subheap(const Heap& heap, std::span<const int> keep);
Heap delete_vertex(const Heap& heap, int element);

/// The canonical linear extension (the Cartier-Foata word), as piece names.
std::vector<std::string> linear_extension(const Heap& heap);

/// A chain of elements of one specific heap, with certificates.
struct Chain {
  std::vector<int> elements;
  bool convex = false;
  bool balanced = false;
};

/// All convex chains of length 2..max_len, lexicographic on element indices.
/// With balanced_only, only chains whose end labels agree are returned.
std::vector<Chain> convex_chains(const Heap& heap, std::size_t max_len, bool balanced_only);

/// Consecutive same-label pairs (x, y), ordered by label fiber in piece
/// order, then position along the fiber chain.
std::vector<std::pair<int, int>> label_edges(const Heap& heap);

}  // namespace heaps
