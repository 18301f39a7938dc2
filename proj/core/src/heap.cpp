#include "heaps/heap.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "heaps/errors.hpp"

namespace heaps {

namespace {

using Bits = std::vector<std::uint8_t>;

std::size_t at(std::size_t n, int a, int b) {
  return static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
}

void transitive_close(Bits& rel, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel[k * n + j]) rel[i * n + j] = 1;
    }
}

// Closure of the concurrent-label restriction of `less`.  By axiom 2 this
// must reproduce `less` itself.
Bits concurrent_closure(const ConcurrencyGraph& g, const std::vector<PieceId>& labels,
                        const Bits& less) {
  std::size_t n = labels.size();
  Bits out(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (less[a * n + b] && g.concurrent(labels[a], labels[b])) out[a * n + b] = 1;
  transitive_close(out, n);
  return out;
}

}  // namespace

Heap::Heap(GraphPtr graph, std::vector<PieceId> labels, std::vector<std::uint8_t> less)
    : graph_(std::move(graph)), labels_(std::move(labels)), less_(std::move(less)) {
  std::size_t n = labels_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less_[a * n + b]) continue;
      bool is_cover = true;
      for (std::size_t c = 0; c < n && is_cover; ++c)
        if (less_[a * n + c] && less_[c * n + b]) is_cover = false;
      if (is_cover) covers_.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
#ifndef NDEBUG
  // Heap axioms hold for every internally constructed representative.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (graph_->concurrent(labels_[a], labels_[b]))
        assert(less_[a * n + b] || less_[b * n + a]);
  assert(concurrent_closure(*graph_, labels_, less_) == less_);
#endif
}

Heap Heap::canonicalize(GraphPtr graph, const std::vector<PieceId>& labels,
                        const std::vector<std::uint8_t>& less,
                        std::vector<int>* old_to_new) {
  std::size_t n = labels.size();
  std::vector<int> order;
  order.reserve(n);
  std::vector<std::uint8_t> removed(n, 0);
  while (order.size() < n) {
    std::vector<int> layer;
    for (std::size_t x = 0; x < n; ++x) {
      if (removed[x]) continue;
      bool minimal = true;
      for (std::size_t y = 0; y < n && minimal; ++y)
        if (!removed[y] && less[y * n + x]) minimal = false;
      if (minimal) layer.push_back(static_cast<int>(x));
    }
    assert(!layer.empty());
    std::sort(layer.begin(), layer.end(), [&](int a, int b) {
      return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
    });
    for (int x : layer) {
      removed[static_cast<std::size_t>(x)] = 1;
      order.push_back(x);
    }
  }

  std::vector<int> position(n);
  for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  if (old_to_new) *old_to_new = position;

  std::vector<PieceId> new_labels(n);
  Bits new_less(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) new_labels[i] = labels[static_cast<std::size_t>(order[i])];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (less[a * n + b])
        new_less[static_cast<std::size_t>(position[a]) * n + static_cast<std::size_t>(position[b])] = 1;
  return Heap(std::move(graph), std::move(new_labels), std::move(new_less));
}

Heap Heap::empty(GraphPtr graph) { return Heap(std::move(graph), {}, {}); }

Heap Heap::single(GraphPtr graph, PieceId piece) {
  return Heap(std::move(graph), {piece}, {0});
}

Heap Heap::from_word_ids(GraphPtr graph, const std::vector<PieceId>& letters) {
  std::size_t n = letters.size();
  Bits less(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (graph->concurrent(letters[i], letters[j])) less[i * n + j] = 1;
  transitive_close(less, n);
  return canonicalize(std::move(graph), letters, less, nullptr);
}

Heap Heap::from_word(GraphPtr graph, std::span<const std::string> letters) {
  std::vector<PieceId> ids;
  ids.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto p = graph->find_piece(letters[i]);
    if (!p)
      throw InputError("unknown piece '" + letters[i] + "' at word position " +
                       std::to_string(i + 1));
    ids.push_back(*p);
  }
  return from_word_ids(std::move(graph), ids);
}

Heap Heap::from_word_text(GraphPtr graph, std::string_view text) {
  std::vector<std::string> letters = split_word(text);
  return from_word(std::move(graph), letters);
}

Heap Heap::from_labelled_poset(GraphPtr graph, std::vector<PieceId> labels,
                               const std::vector<std::pair<int, int>>& below_pairs,
                               std::vector<int>* old_to_new) {
  std::size_t n = labels.size();
  for (PieceId p : labels)
    if (p < 0 || static_cast<std::size_t>(p) >= graph->piece_count())
      throw InputError("label out of range");
  Bits less(n * n, 0);
  for (auto [a, b] : below_pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw InputError("poset pair out of range");
    if (a == b) throw InputError("poset pair relates an element to itself");
    less[at(n, a, b)] = 1;
  }
  transitive_close(less, n);
  for (std::size_t x = 0; x < n; ++x)
    if (less[x * n + x]) throw InputError("poset relations contain a cycle");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (graph->concurrent(labels[a], labels[b]) && !less[a * n + b] && !less[b * n + a])
        throw InputError("not a heap: concurrent labels '" + graph->piece_name(labels[a]) +
                         "', '" + graph->piece_name(labels[b]) + "' on incomparable elements");
  if (concurrent_closure(*graph, labels, less) != less)
    throw InputError("not a heap: order is not generated by concurrent-label relations");
  return canonicalize(std::move(graph), labels, less, old_to_new);
}

std::vector<std::string> Heap::word_names() const {
  std::vector<std::string> out;
  out.reserve(labels_.size());
  for (PieceId p : labels_) out.push_back(graph_->piece_name(p));
  return out;
}

bool Heap::is_minimal(int element) const {
  for (std::size_t y = 0; y < labels_.size(); ++y)
    if (less_[y * labels_.size() + static_cast<std::size_t>(element)]) return false;
  return true;
}

bool Heap::is_maximal(int element) const {
  for (std::size_t y = 0; y < labels_.size(); ++y)
    if (less_[static_cast<std::size_t>(element) * labels_.size() + y]) return false;
  return true;
}

bool Heap::trivial() const { return covers_.empty(); }

std::vector<int> Heap::between(int a, int b) const {
  std::vector<int> out;
  std::size_t n = labels_.size();
  for (std::size_t w = 0; w < n; ++w)
    if (less_[static_cast<std::size_t>(a) * n + w] && less_[w * n + static_cast<std::size_t>(b)])
      out.push_back(static_cast<int>(w));
  return out;
}

std::size_t Heap::between_count(int a, int b) const {
  std::size_t count = 0;
  std::size_t n = labels_.size();
  for (std::size_t w = 0; w < n; ++w)
    if (less_[static_cast<std::size_t>(a) * n + w] && less_[w * n + static_cast<std::size_t>(b)])
      ++count;
  return count;
}

std::size_t Heap::label_count() const {
  std::vector<PieceId> seen(labels_);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return seen.size();
}

std::string Heap::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out << ' ';
    out << graph_->piece_name(labels_[i]);
  }
  out << ']';
  return out.str();
}

std::string Heap::cache_key() const {
  std::ostringstream out;
  out << graph_->fingerprint() << '!';
  for (PieceId p : labels_) out << p << ',';
  return out.str();
}

Heap superpose(const Heap& first, const Heap& second,
               std::vector<int>& first_to_result, std::vector<int>& second_to_result) {
  if (first.graph() != second.graph() &&
      first.graph()->fingerprint() != second.graph()->fingerprint())
    throw InputError("superpose: operands use different concurrency graphs");
  std::size_t n1 = first.size(), n2 = second.size(), n = n1 + n2;
  std::vector<PieceId> labels;
  labels.reserve(n);
  labels.insert(labels.end(), first.word().begin(), first.word().end());
  labels.insert(labels.end(), second.word().begin(), second.word().end());

  // Generators: both block orders, plus first-below-second across the blocks
  // wherever labels are concurrent.  The closure happens in the builder.
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b)
      if (first.less(static_cast<int>(a), static_cast<int>(b)))
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      if (second.less(static_cast<int>(a), static_cast<int>(b)))
        pairs.emplace_back(static_cast<int>(n1 + a), static_cast<int>(n1 + b));
  const ConcurrencyGraph& g = *first.graph();
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b)
      if (g.concurrent(labels[a], labels[n1 + b]))
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(n1 + b));

  std::vector<int> old_to_new;
  Heap result = Heap::from_labelled_poset(first.graph(), labels, pairs, &old_to_new);
  first_to_result.assign(old_to_new.begin(), old_to_new.begin() + static_cast<std::ptrdiff_t>(n1));
  second_to_result.assign(old_to_new.begin() + static_cast<std::ptrdiff_t>(n1), old_to_new.end());
  return result;
}

Heap superpose(const Heap& first, const Heap& second) {
  std::vector<int> m1, m2;
  return superpose(first, second, m1, m2);
}

Heap subheap(const Heap& heap, std::span<const int> keep) {
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (int e : kept)
    if (e < 0 || static_cast<std::size_t>(e) >= heap.size())
      throw InputError("subheap: element " + std::to_string(e) + " out of range");
  std::vector<PieceId> labels;
  labels.reserve(kept.size());
  for (int e : kept) labels.push_back(heap.label(e));
  // Only concurrent-label relations survive restriction; their closure is the
  // subheap order.
  std::vector<std::pair<int, int>> pairs;
  const ConcurrencyGraph& g = *heap.graph();
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (heap.less(kept[i], kept[j]) && g.concurrent(labels[i], labels[j]))
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Heap::from_labelled_poset(heap.graph(), std::move(labels), pairs, nullptr);
}

Heap delete_vertex(const Heap& heap, int element) {
  if (element < 0 || static_cast<std::size_t>(element) >= heap.size())
    throw InputError("delete_vertex: element " + std::to_string(element) + " out of range");
  std::vector<int> keep;
  keep.reserve(heap.size() - 1);
  for (int e = 0; e < static_cast<int>(heap.size()); ++e)
    if (e != element) keep.push_back(e);
  return subheap(heap, keep);
}

std::vector<std::string> linear_extension(const Heap& heap) { return heap.word_names(); }

namespace {

void extend_chains(const Heap& heap, std::size_t max_len, bool balanced_only,
                   std::vector<int>& chain, std::vector<std::uint8_t>& in_chain,
                   std::vector<Chain>& out) {
  if (chain.size() >= 2 &&
      (!balanced_only || heap.label(chain.front()) == heap.label(chain.back()))) {
    Chain c;
    c.elements = chain;
    c.convex = true;
    c.balanced = heap.label(chain.front()) == heap.label(chain.back());
    out.push_back(std::move(c));
  }
  if (chain.size() == max_len) return;
  int n = static_cast<int>(heap.size());
  for (int next = chain.back() + 1; next < n; ++next) {
    if (!heap.less(chain.back(), next)) continue;
    bool convex = true;
    for (int member : chain) {
      for (int w : heap.between(member, next))
        if (!in_chain[static_cast<std::size_t>(w)]) {
          convex = false;
          break;
        }
      if (!convex) break;
    }
    if (!convex) continue;
    chain.push_back(next);
    in_chain[static_cast<std::size_t>(next)] = 1;
    extend_chains(heap, max_len, balanced_only, chain, in_chain, out);
    in_chain[static_cast<std::size_t>(next)] = 0;
    chain.pop_back();
  }
}

}  // namespace

std::vector<std::pair<int, int>> label_edges(const Heap& heap) {
  std::vector<std::pair<int, int>> edges;
  const std::size_t pieces = heap.graph()->piece_count();
  for (std::size_t p = 0; p < pieces; ++p) {
    std::vector<int> fiber;
    for (std::size_t e = 0; e < heap.size(); ++e)
      if (heap.label(static_cast<int>(e)) == static_cast<PieceId>(p))
        fiber.push_back(static_cast<int>(e));
    for (std::size_t i = 0; i + 1 < fiber.size(); ++i)
      edges.emplace_back(fiber[i], fiber[i + 1]);
  }
  return edges;
}

std::vector<Chain> convex_chains(const Heap& heap, std::size_t max_len, bool balanced_only) {
  if (max_len < 2) throw InputError("convex_chains: max_len must be at least 2");
  std::vector<Chain> out;
  std::vector<int> chain;
  std::vector<std::uint8_t> in_chain(heap.size(), 0);
  for (int start = 0; start < static_cast<int>(heap.size()); ++start) {
    chain.assign(1, start);
    in_chain.assign(heap.size(), 0);
    in_chain[static_cast<std::size_t>(start)] = 1;
    extend_chains(heap, max_len, balanced_only, chain, in_chain, out);
  }
  return out;
}

}  // namespace heaps
