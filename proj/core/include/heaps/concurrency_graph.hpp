#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heaps {

using PieceId = int;

/// Finite piece set with a symmetric, reflexive concurrency relation.
///
/// The pieces carry a fixed total order (their construction order); every
/// canonical form and tie-break in the library refers to it.  Instances are
/// immutable and shared by the heaps built over them.
class ConcurrencyGraph {
public:
  /// Builds a graph from piece names and distinct-concurrent pairs.
  /// Reflexive pairs are implicit; edge symmetry is enforced.
  ConcurrencyGraph(std::vector<std::string> pieces,
                   const std::vector<std::pair<std::string, std::string>>& edges);

  /// Parses the adjacency-list text format, one entry per line:
  ///   vertex: neighbor1 neighbor2 ...
  /// Blank lines and lines starting with '#' are skipped.  Piece order is
  /// first appearance.  Asymmetric input is symmetrized; a note per repaired
  /// pair is appended to `warnings` when given.
  static std::shared_ptr<const ConcurrencyGraph> parse(
      std::string_view text, std::vector<std::string>* warnings = nullptr);
  static std::shared_ptr<const ConcurrencyGraph> load_file(
      const std::string& path, std::vector<std::string>* warnings = nullptr);

  std::size_t piece_count() const { return names_.size(); }
  const std::string& piece_name(PieceId p) const { return names_[static_cast<std::size_t>(p)]; }
  const std::vector<std::string>& piece_names() const { return names_; }

  std::optional<PieceId> find_piece(std::string_view name) const;
  /// Like find_piece but throws InputError naming the unknown piece.
  PieceId require_piece(std::string_view name) const;

  /// Reflexive: concurrent(p, p) is always true.
  bool concurrent(PieceId a, PieceId b) const { return a == b || adj_[idx(a, b)] != 0; }
  /// Edges of the concurrency graph: distinct concurrent pairs.
  bool adjacent(PieceId a, PieceId b) const { return a != b && adj_[idx(a, b)] != 0; }

  /// Structural identity; equal fingerprints mean interchangeable graphs.
  const std::string& fingerprint() const { return fingerprint_; }

private:
  std::size_t idx(PieceId a, PieceId b) const {
    return static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b);
  }

  std::vector<std::string> names_;
  std::vector<std::uint8_t> adj_;  // distinct-concurrent adjacency, symmetric
  std::map<std::string, PieceId, std::less<>> index_;
  std::string fingerprint_;
};

using GraphPtr = std::shared_ptr<const ConcurrencyGraph>;

/// Splits a whitespace-separated word into letters.
std::vector<std::string> split_word(std::string_view text);

}  // namespace heaps
