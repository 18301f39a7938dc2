#include "heaps/tl.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "heaps/boundary.hpp"
#include "heaps/errors.hpp"
#include "heaps/props.hpp"

namespace heaps {

std::vector<Chain> reduction_moves(const Heap& heap) {
  // Balanced convex chains of length 2 or 3 are exactly the consecutive
  // same-label pairs with at most one element between (a lone middle element
  // never shares the end label, by the consecutive-pair condition).
  std::vector<Chain> moves;
  for (auto [x, y] : label_edges(heap)) {
    std::vector<int> between = heap.between(x, y);
    if (between.size() > 1) continue;
    Chain chain;
    chain.convex = true;
    chain.balanced = true;
    if (between.empty())
      chain.elements = {x, y};
    else
      chain.elements = {x, between.front(), y};
    moves.push_back(std::move(chain));
  }
  std::sort(moves.begin(), moves.end(), [](const Chain& a, const Chain& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return moves;
}

namespace {

std::mutex g_reduce_mutex;
// canonical heap -> (m, canonical word of the basis heap)
std::unordered_map<std::string, std::pair<std::size_t, std::vector<PieceId>>> g_reduce_memo;

NormalForm reduce_with(const Heap& heap,
                       const std::function<std::size_t(const std::vector<Chain>&)>& pick) {
  Heap current = heap;
  std::size_t m = 0;
  while (true) {
    std::vector<Chain> moves = reduction_moves(current);
    if (moves.empty()) break;
    const Chain& chosen = moves[pick(moves)];
    if (chosen.elements.size() == 2) ++m;
    current = contract(current, chosen);
  }
  assert(has_p2(current));
  return NormalForm{m, std::move(current)};
}

}  // namespace

NormalForm reduce(const Heap& heap) {
  const std::string key = heap.cache_key();
  {
    std::lock_guard<std::mutex> lock(g_reduce_mutex);
    auto it = g_reduce_memo.find(key);
    if (it != g_reduce_memo.end())
      return NormalForm{it->second.first, Heap::from_word_ids(heap.graph(), it->second.second)};
  }
  NormalForm result = reduce_with(heap, [](const std::vector<Chain>&) { return std::size_t{0}; });
  {
    std::lock_guard<std::mutex> lock(g_reduce_mutex);
    g_reduce_memo.emplace(key, std::make_pair(result.m, result.basis_heap.word()));
  }
  return result;
}

NormalForm reduce_random(const Heap& heap, std::mt19937_64& rng) {
  return reduce_with(heap, [&rng](const std::vector<Chain>& moves) {
    return static_cast<std::size_t>(rng() % moves.size());
  });
}

TLElement TLElement::zero(GraphPtr graph) { return TLElement(std::move(graph)); }

TLElement TLElement::identity(GraphPtr graph) {
  TLElement e(graph);
  e.add_term(Heap::empty(std::move(graph)), LaurentPoly::from_int(1));
  return e;
}

TLElement TLElement::from_heap(const Heap& heap) {
  TLElement e(heap.graph());
  NormalForm nf = reduce(heap);
  e.add_term(nf.basis_heap, LaurentPoly::delta_power(static_cast<unsigned>(nf.m)));
  return e;
}

TLElement TLElement::from_word(GraphPtr graph, std::span<const std::string> letters) {
  return from_heap(Heap::from_word(std::move(graph), letters));
}

void TLElement::add_term(const Heap& basis_heap, const LaurentPoly& coefficient) {
  assert(has_p2(basis_heap));
  if (coefficient.is_zero()) return;
  auto it = terms_.find(basis_heap);
  if (it == terms_.end()) {
    terms_.emplace(basis_heap, coefficient);
  } else {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& other) {
  if (graph_->fingerprint() != other.graph_->fingerprint())
    throw InputError("TL addition: operands use different concurrency graphs");
  for (const auto& [heap, coeff] : other.terms_) add_term(heap, coeff);
  return *this;
}

TLElement& TLElement::operator*=(const LaurentPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [heap, coeff] : terms_) coeff *= scalar;
  return *this;
}

TLElement multiply(const TLElement& x, const TLElement& y) {
  if (x.graph()->fingerprint() != y.graph()->fingerprint())
    throw InputError("TL multiplication: operands use different concurrency graphs");
  TLElement product = TLElement::zero(x.graph());
  for (const auto& [ex, cx] : x.terms())
    for (const auto& [ey, cy] : y.terms()) {
      TLElement term = TLElement::from_heap(superpose(ex, ey));
      term *= cx * cy;
      product += term;
    }
  return product;
}

std::string TLElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [heap, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (coeff.is_one()) {
      out << heap.to_string();
    } else if (coeff.term_count() == 1) {
      out << coeff.to_string() << " * " << heap.to_string();
    } else {
      out << '(' << coeff.to_string() << ") * " << heap.to_string();
    }
  }
  return out.str();
}

std::vector<Heap> monomial_basis(GraphPtr graph, std::optional<std::size_t> max_size) {
  return enumerate_heaps(std::move(graph), max_size, true);
}

std::pair<std::size_t, std::vector<std::string>> word_normal_form(
    GraphPtr graph, std::span<const std::string> letters) {
  Heap heap = Heap::from_word(std::move(graph), letters);
  NormalForm nf = reduce(heap);
#ifndef NDEBUG
  // Kernel identity: dim ker of the word's heap splits as m plus dim ker of
  // the basis heap.
  Field q = Field::rationals();
  assert(ker_dim(build_complex(heap, q)) == nf.m + ker_dim(build_complex(nf.basis_heap, q)));
#endif
  return {nf.m, nf.basis_heap.word_names()};
}

}  // namespace heaps
