#pragma once

#include <utility>
#include <vector>

#include "heaps/heap.hpp"
#include "heaps/matrix.hpp"

namespace heaps {

/// The two-term complex of a heap over a chosen field: vertices span C0,
/// edges (consecutive same-label pairs) span C1, and `matrix` is the
/// boundary map sending each edge (x, y) to the sum of the elements strictly
/// between x and y whose label is concurrent with the edge label.
///
/// Edges are ordered by label fiber (piece order), then position along the
/// fiber chain, so the matrix is deterministic.
struct BoundaryComplex {
  Heap heap;
  Field field;
  std::vector<std::pair<int, int>> edges;  // V1; columns of `matrix`
  Matrix matrix;                           // rows indexed by heap elements
};

BoundaryComplex build_complex(const Heap& heap, Field field);

/// Exact nullity of the boundary map.
std::size_t ker_dim(const BoundaryComplex& complex);
/// |V0| - rank; always exceeds ker_dim by the number of distinct labels.
std::size_t coker_dim(const BoundaryComplex& complex);

bool is_acyclic(const Heap& heap, Field field);
/// Acyclic, and every single-vertex deletion is acyclic.
bool is_strongly_acyclic(const Heap& heap, Field field);

/// Elements whose basis vector lies in the image of the boundary map.
std::vector<int> image_vertices(const BoundaryComplex& complex);

/// Contraction along a balanced convex chain: drops every chain element but
/// the first.  Throws InputError naming the failed certificate when the
/// elements do not form a balanced convex chain of the heap.
Heap contract(const Heap& heap, const Chain& chain);
Heap contract(const Heap& heap, std::span<const int> chain_elements);

}  // namespace heaps
