#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heaps/field.hpp"
#include "heaps/heap.hpp"

namespace heaps {

/// Outcome of one verification sweep.  A counterexample always carries the
/// canonical word of the offending heap, replayable through the CLI.
struct VerificationReport {
  enum class Verdict { kPass, kCounterexample, kSkipped };

  std::string property;
  std::string graph_label;
  std::size_t bound = 0;
  Field field = Field::rationals();
  Verdict verdict = Verdict::kSkipped;
  std::optional<std::string> counterexample;  // canonical word
  std::optional<std::string> detail;          // extra context for the failure
  std::uint64_t checked = 0;                  // objects examined (heaps, words, pairs)
  double elapsed_seconds = 0.0;

  bool passed() const { return verdict == Verdict::kPass; }
  /// "PROPERTY <id> <graph> size<=N field=<f>: OK | COUNTEREXAMPLE <word>".
  std::string to_line() const;
};

/// Known property ids, in documentation order.
const std::vector<std::string>& verification_ids();

/// Runs the sweep for a property id over all heaps (or words) of at most
/// `bound` elements over the graph.  Deterministic given `seed`; throws
/// InputError for unknown ids, listing the valid ones.
VerificationReport run_verification(const std::string& property_id, const GraphPtr& graph,
                                    const std::string& graph_label, std::size_t bound,
                                    Field field, std::uint64_t seed = 0);

}  // namespace heaps
