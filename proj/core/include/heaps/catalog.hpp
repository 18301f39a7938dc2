#pragma once

#include <string>
#include <vector>

#include "heaps/concurrency_graph.hpp"

namespace heaps {

/// Graph selector: a named family with a parameter, or a custom file.
///
/// CLI forms: "a:4" (path on 4), "d:5" (fork), "e:7" (chain 1..6 plus vertex
/// 0 attached to 3), "aff-a:4" (5-gon), "file:PATH" (adjacency list).
struct GraphSpec {
  enum class Kind { kA, kD, kE, kAffineA, kFile };
  Kind kind = Kind::kA;
  std::size_t parameter = 0;  // family rank; unused for files
  std::string path;           // file path; unused for families

  static GraphSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Builds the concurrency graph for a spec.  Family vertices are named by
/// their integer index; the concurrency relation is adjacency plus
/// reflexivity.  File warnings (asymmetric input) go to `warnings`.
GraphPtr build_graph(const GraphSpec& spec, std::vector<std::string>* warnings = nullptr);

GraphPtr build_graph(std::string_view spec_text, std::vector<std::string>* warnings = nullptr);

}  // namespace heaps
