#pragma once

#include <string>

#include "heaps/heap.hpp"

namespace heaps {

/// Hasse diagram of a heap as a DOT digraph: one node per element labelled
/// "index:piece", one arc per cover relation, bottom element first.
std::string hasse_dot(const Heap& heap);

/// Concurrency graph as an undirected DOT graph over piece names.
std::string concurrency_dot(const ConcurrencyGraph& graph);

}  // namespace heaps
