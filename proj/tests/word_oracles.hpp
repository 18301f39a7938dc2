// Test-only oracles that work on raw words, independent of the heap and
// reduction machinery they are used to check.
#pragma once

#include <set>
#include <vector>

#include "heaps/concurrency_graph.hpp"

namespace heaps::testing {

// The commutation class of a word: closure under swapping adjacent letters
// whose labels are not concurrent.
inline std::set<std::vector<PieceId>> commutation_class(const GraphPtr& g,
                                                        const std::vector<PieceId>& word) {
  std::set<std::vector<PieceId>> cls{word};
  std::vector<std::vector<PieceId>> queue{word};
  while (!queue.empty()) {
    std::vector<PieceId> current = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (g->concurrent(current[i], current[i + 1])) continue;
      std::vector<PieceId> swapped = current;
      std::swap(swapped[i], swapped[i + 1]);
      if (cls.insert(swapped).second) queue.push_back(swapped);
    }
  }
  return cls;
}

// Whether some member of the commutation class contains "x x" or "x y x"
// with x, y adjacent in the graph.
inline bool class_has_forbidden_factor(const GraphPtr& g,
                                       const std::set<std::vector<PieceId>>& cls) {
  for (const auto& member : cls)
    for (std::size_t i = 0; i + 1 < member.size(); ++i) {
      if (member[i] == member[i + 1]) return true;
      if (i + 2 < member.size() && member[i] == member[i + 2] &&
          g->adjacent(member[i], member[i + 1]))
        return true;
    }
  return false;
}

// Counts the commutation classes, over all word lengths, in which no member
// contains a forbidden factor.  Enumerates lengths until one contributes
// nothing, which happens exactly when such classes run out.
inline std::size_t count_factor_free_classes(const GraphPtr& g) {
  std::size_t total = 0;
  for (std::size_t length = 0;; ++length) {
    std::vector<std::vector<PieceId>> words{{}};
    for (std::size_t l = 0; l < length; ++l) {
      std::vector<std::vector<PieceId>> next;
      for (const auto& w : words)
        for (std::size_t p = 0; p < g->piece_count(); ++p) {
          auto e = w;
          e.push_back(static_cast<PieceId>(p));
          next.push_back(std::move(e));
        }
      words = std::move(next);
    }
    std::set<std::vector<PieceId>> seen;
    std::size_t found = 0;
    for (const auto& word : words) {
      if (seen.count(word)) continue;
      auto cls = commutation_class(g, word);
      if (!class_has_forbidden_factor(g, cls)) ++found;
      seen.insert(cls.begin(), cls.end());
    }
    total += found;
    if (length > 0 && found == 0) break;
  }
  return total;
}

}  // namespace heaps::testing
