#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "heaps/heap.hpp"
#include "heaps/laurent.hpp"

namespace heaps {

/// Result of reducing a heap in the Temperley-Lieb quotient: the heap equals
/// delta^m times the basis heap, and the basis heap has property P2.
struct NormalForm {
  std::size_t m = 0;
  Heap basis_heap;
};

/// Applicable reduction move: a balanced convex chain of length 2 (which
/// contributes a delta factor) or of length 3 with a distinct middle label
/// (which does not).  Both kinds contract to the chain's first element.
std::vector<Chain> reduction_moves(const Heap& heap);

/// Deterministic reduction to the P2 normal form: always contracts the
/// applicable chain that is minimal under (length-2 before length-3, then
/// lexicographic elements).  Memoized globally on canonical forms.
NormalForm reduce(const Heap& heap);

/// Reduction with moves chosen by `rng`; by confluence the result matches
/// reduce() — the test suites verify exactly that.  Not memoized.
NormalForm reduce_random(const Heap& heap, std::mt19937_64& rng);

/// Element of the generalized Temperley-Lieb algebra over the graph: a
/// finite sum of P2 basis heaps with Laurent-polynomial coefficients.
class TLElement {
public:
  static TLElement zero(GraphPtr graph);
  static TLElement identity(GraphPtr graph);
  /// Image of an arbitrary heap: reduces to basis form.
  static TLElement from_heap(const Heap& heap);
  static TLElement from_word(GraphPtr graph, std::span<const std::string> letters);

  const GraphPtr& graph() const { return graph_; }
  const std::map<Heap, LaurentPoly, HeapLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TLElement& operator+=(const TLElement& other);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  TLElement& operator*=(const LaurentPoly& scalar);

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TLElement& a, const TLElement& b) { return !(a == b); }

  /// Terms joined by " + ": coefficient, then the basis word in brackets.
  /// Multi-term coefficients are parenthesized; unit coefficients omitted.
  std::string to_string() const;

private:
  explicit TLElement(GraphPtr graph) : graph_(std::move(graph)) {}
  void add_term(const Heap& basis_heap, const LaurentPoly& coefficient);

  GraphPtr graph_;
  std::map<Heap, LaurentPoly, HeapLess> terms_;
};

/// Bilinear product: superpose basis heaps, reduce, scale by delta^m.
TLElement multiply(const TLElement& x, const TLElement& y);

/// All P2 heaps of at most max_size elements (nullopt: all sizes, for graphs
/// whose P2 class is finite), each a monomial basis element.
std::vector<Heap> monomial_basis(GraphPtr graph, std::optional<std::size_t> max_size);

/// Normal form of a word: m and the canonical word of the basis heap.
std::pair<std::size_t, std::vector<std::string>> word_normal_form(
    GraphPtr graph, std::span<const std::string> letters);

}  // namespace heaps
