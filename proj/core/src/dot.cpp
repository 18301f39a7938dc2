#include "heaps/dot.hpp"

#include <sstream>

namespace heaps {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string hasse_dot(const Heap& heap) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  for (int e = 0; e < static_cast<int>(heap.size()); ++e)
    out << "  n" << e << " [label=" << quoted(std::to_string(e) + ":" +
                                              heap.graph()->piece_name(heap.label(e)))
        << "];\n";
  for (auto [a, b] : heap.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string concurrency_dot(const ConcurrencyGraph& graph) {
  std::ostringstream out;
  out << "graph concurrency {\n";
  const int n = static_cast<int>(graph.piece_count());
  for (int p = 0; p < n; ++p)
    out << "  " << quoted(graph.piece_name(p)) << ";\n";
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (graph.adjacent(a, b))
        out << "  " << quoted(graph.piece_name(a)) << " -- " << quoted(graph.piece_name(b))
            << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace heaps
