#include "heaps/boundary.hpp"

#include <algorithm>
#include <cassert>

#include "heaps/errors.hpp"

namespace heaps {

BoundaryComplex build_complex(const Heap& heap, Field field) {
  std::vector<std::pair<int, int>> edges = label_edges(heap);
  const std::size_t n = heap.size();
  Matrix matrix(field, n, edges.size());
  const FieldScalar one = FieldScalar::one(field);
  for (std::size_t c = 0; c < edges.size(); ++c) {
    auto [x, y] = edges[c];
    for (int w : heap.between(x, y))
      if (heap.graph()->concurrent(heap.label(w), heap.label(x)))
        matrix.at(static_cast<std::size_t>(w), c) = one;
  }
  return BoundaryComplex{heap, field, std::move(edges), std::move(matrix)};
}

std::size_t ker_dim(const BoundaryComplex& complex) {
  return complex.matrix.nullity();
}

std::size_t coker_dim(const BoundaryComplex& complex) {
  std::size_t dim = complex.matrix.rows() - complex.matrix.rank();
  assert(dim - ker_dim(complex) == complex.heap.label_count());
  return dim;
}

bool is_acyclic(const Heap& heap, Field field) {
  return ker_dim(build_complex(heap, field)) == 0;
}

bool is_strongly_acyclic(const Heap& heap, Field field) {
  if (!is_acyclic(heap, field)) return false;
  for (int v = 0; v < static_cast<int>(heap.size()); ++v)
    if (!is_acyclic(delete_vertex(heap, v), field)) return false;
  return true;
}

std::vector<int> image_vertices(const BoundaryComplex& complex) {
  std::vector<int> out;
  const std::size_t n = complex.matrix.rows();
  const std::size_t base_rank = complex.matrix.rank();
  std::vector<FieldScalar> unit(n, FieldScalar::zero(complex.field));
  for (std::size_t v = 0; v < n; ++v) {
    unit[v] = FieldScalar::one(complex.field);
    if (complex.matrix.with_column(unit).rank() == base_rank)
      out.push_back(static_cast<int>(v));
    unit[v] = FieldScalar::zero(complex.field);
  }
  return out;
}

namespace {

void validate_chain(const Heap& heap, std::span<const int> elements) {
  if (elements.size() < 2) throw InputError("contract: chain needs at least 2 elements");
  for (int e : elements)
    if (e < 0 || static_cast<std::size_t>(e) >= heap.size())
      throw InputError("contract: element " + std::to_string(e) + " out of range");
  for (std::size_t i = 0; i + 1 < elements.size(); ++i)
    if (!heap.less(elements[i], elements[i + 1]))
      throw InputError("contract: not a chain: element " + std::to_string(elements[i]) +
                       " is not below " + std::to_string(elements[i + 1]));
  if (heap.label(elements.front()) != heap.label(elements.back()))
    throw InputError("contract: chain is not balanced: end labels differ");
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      for (int w : heap.between(elements[i], elements[j]))
        if (std::find(elements.begin(), elements.end(), w) == elements.end())
          throw InputError("contract: chain is not convex: element " + std::to_string(w) +
                           " lies strictly between " + std::to_string(elements[i]) + " and " +
                           std::to_string(elements[j]));
}

}  // namespace

Heap contract(const Heap& heap, std::span<const int> chain_elements) {
  validate_chain(heap, chain_elements);
  std::vector<int> keep;
  keep.reserve(heap.size());
  for (int e = 0; e < static_cast<int>(heap.size()); ++e) {
    bool dropped = std::find(chain_elements.begin() + 1, chain_elements.end(), e) !=
                   chain_elements.end();
    if (!dropped) keep.push_back(e);
  }
  Heap result = subheap(heap, keep);
#ifndef NDEBUG
  // Omitting the other end of a balanced chain gives the same heap.
  std::vector<int> keep_last;
  for (int e = 0; e < static_cast<int>(heap.size()); ++e) {
    bool dropped = std::find(chain_elements.begin(), chain_elements.end() - 1, e) !=
                   chain_elements.end() - 1;
    if (!dropped) keep_last.push_back(e);
  }
  assert(subheap(heap, keep_last) == result);
#endif
  return result;
}

Heap contract(const Heap& heap, const Chain& chain) {
  return contract(heap, std::span<const int>(chain.elements));
}

}  // namespace heaps
