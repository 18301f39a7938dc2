#include "heaps/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "heaps/boundary.hpp"
#include "heaps/errors.hpp"
#include "heaps/props.hpp"
#include "heaps/tl.hpp"

namespace heaps {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct Sweep {
  VerificationReport report;

  bool failed() const { return report.verdict == VerificationReport::Verdict::kCounterexample; }

  void fail(const Heap& heap, std::string detail) {
    if (failed()) return;
    report.verdict = VerificationReport::Verdict::kCounterexample;
    report.counterexample = heap.to_string();
    report.detail = std::move(detail);
  }
};

std::size_t kernel_of(const Heap& heap, Field field) {
  return ker_dim(build_complex(heap, field));
}

void sweep_lemma_1_2_4(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    BoundaryComplex cx = build_complex(heap, field);
    const std::size_t rank = cx.matrix.rank();
    const std::size_t ker = cx.matrix.cols() - rank;
    const std::size_t coker = cx.matrix.rows() - rank;
    if (coker - ker != heap.label_count()) {
      s.fail(heap, "coker - ker != label count");
      return;
    }
    if (cx.edges.size() != heap.size() - heap.label_count()) {
      s.fail(heap, "|V1| != |E| - |labels|");
      return;
    }
    const FieldScalar zero = FieldScalar::zero(field);
    const FieldScalar one = FieldScalar::one(field);
    for (std::size_t r = 0; r < cx.matrix.rows(); ++r)
      for (std::size_t c = 0; c < cx.matrix.cols(); ++c)
        if (cx.matrix.at(r, c) != zero && cx.matrix.at(r, c) != one) {
          s.fail(heap, "boundary entry outside {0, 1}");
          return;
        }
  }
}

void sweep_deletion_2_1_1(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    if (heap.is_empty()) continue;
    ++s.report.checked;
    BoundaryComplex cx = build_complex(heap, field);
    const long ker = static_cast<long>(ker_dim(cx));
    std::vector<int> image = image_vertices(cx);
    for (int v = 0; v < static_cast<int>(heap.size()); ++v) {
      const long ker_deleted = static_cast<long>(kernel_of(delete_vertex(heap, v), field));
      const long diff = ker_deleted - ker;
      if (diff < -1 || diff > 1) {
        s.fail(heap, "|dim ker change| > 1 at vertex " + std::to_string(v));
        return;
      }
      const bool is_image = std::binary_search(image.begin(), image.end(), v);
      if (is_image ? (diff != 0 && diff != 1) : (diff != 0 && diff != -1)) {
        s.fail(heap, std::string("image-vertex refinement fails at vertex ") +
                         std::to_string(v) + (is_image ? " (image)" : " (not image)"));
        return;
      }
    }
  }
}

void sweep_prop_2_2_3(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    if (is_dismantlable(heap) && kernel_of(heap, field) != 0) {
      s.fail(heap, "dismantlable but not acyclic");
      return;
    }
  }
}

void sweep_prop_2_2_7(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    if (is_strongly_acyclic(heap, field) && !has_p2(heap)) {
      s.fail(heap, "strongly acyclic but fails P2");
      return;
    }
  }
}

void sweep_lemma_2_2_9(Sweep& s, const GraphPtr& g, std::size_t bound, Field) {
  for (const Heap& heap : enumerate_heaps(g, bound, true)) {
    ++s.report.checked;
    for (std::size_t p = 0; p < g->piece_count(); ++p) {
      const PieceId piece = static_cast<PieceId>(p);
      std::vector<int> to_result, heap_to_result;
      Heap extended =
          superpose(Heap::single(g, piece), heap, to_result, heap_to_result);
      if (has_p2(extended)) continue;
      const int new_element = to_result.front();
      bool minimal_match = false;
      for (int e = 0; e < static_cast<int>(heap.size()) && !minimal_match; ++e)
        if (heap.label(e) == piece && heap.is_minimal(e)) minimal_match = true;
      if (minimal_match) continue;
      bool chain_found = false;
      for (const Chain& chain : convex_chains(extended, 3, true)) {
        if (chain.elements.size() != 3 || chain.elements.front() != new_element) continue;
        if (extended.label(chain.elements[1]) != piece) {
          chain_found = true;
          break;
        }
      }
      if (!chain_found) {
        s.fail(heap, "piece '" + g->piece_name(piece) +
                         "': neither a minimal element with its label nor a convex chain");
        return;
      }
    }
  }
}

void sweep_contract_2_3_4(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    std::optional<std::size_t> ker;
    for (const Chain& chain : convex_chains(heap, 2, true)) {
      if (!ker) ker = kernel_of(heap, field);
      if (kernel_of(contract(heap, chain), field) + 1 != *ker) {
        s.fail(heap, "length-2 contraction does not drop dim ker by 1");
        return;
      }
    }
  }
}

void sweep_contract_2_3_5(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    std::optional<std::size_t> ker;
    for (const Chain& chain : convex_chains(heap, 3, true)) {
      if (chain.elements.size() != 3) continue;
      if (heap.label(chain.elements[1]) == heap.label(chain.elements[0])) continue;
      if (!ker) ker = kernel_of(heap, field);
      if (kernel_of(contract(heap, chain), field) != *ker) {
        s.fail(heap, "length-3 contraction changes dim ker");
        return;
      }
    }
  }
}

void sweep_thm_2_4_2(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    if (has_p2(heap) != is_strongly_acyclic(heap, field)) {
      s.fail(heap, "P2 and strong acyclicity disagree");
      return;
    }
  }
  // Part (ii): a kernel appearing under a one-piece extension forces an
  // extremal element with that label.
  for (const Heap& heap : enumerate_heaps(g, bound, true)) {
    for (std::size_t p = 0; p < g->piece_count(); ++p) {
      const PieceId piece = static_cast<PieceId>(p);
      Heap below = superpose(Heap::single(g, piece), heap);
      if (kernel_of(below, field) != 0) {
        bool found = false;
        for (int e = 0; e < static_cast<int>(heap.size()) && !found; ++e)
          if (heap.label(e) == piece && heap.is_minimal(e)) found = true;
        if (!found) {
          s.fail(heap, "ker(a o E) != 0 without a minimal element labelled '" +
                           g->piece_name(piece) + "'");
          return;
        }
      }
      Heap above = superpose(heap, Heap::single(g, piece));
      if (kernel_of(above, field) != 0) {
        bool found = false;
        for (int e = 0; e < static_cast<int>(heap.size()) && !found; ++e)
          if (heap.label(e) == piece && heap.is_maximal(e)) found = true;
        if (!found) {
          s.fail(heap, "ker(E o a) != 0 without a maximal element labelled '" +
                           g->piece_name(piece) + "'");
          return;
        }
      }
    }
  }
}

void sweep_thm_2_4_4(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    if ((kernel_of(heap, field) == 0) != is_dismantlable(heap)) {
      s.fail(heap, "acyclicity and dismantlability disagree");
      return;
    }
  }
}

void sweep_regularity_2_4_1(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  RegularityReport report = check_regular(g, bound, field);
  s.report.checked = report.heaps_checked;
  if (!report.regular) {
    s.report.verdict = VerificationReport::Verdict::kCounterexample;
    s.report.counterexample = report.counterexample;
    s.report.detail = "P2 heap without property P1";
    return;
  }
  if (report.strong_acyclicity_violation) {
    s.report.verdict = VerificationReport::Verdict::kCounterexample;
    s.report.counterexample = report.strong_acyclicity_violation;
    s.report.detail = "P2 heap that is P1 but not strongly acyclic";
    return;
  }
  s.report.detail = "regular up to size<=" + std::to_string(bound);
}

void sweep_thm_3_2_3(Sweep& s, const GraphPtr& g, std::size_t bound, Field field) {
  const bool regular = check_regular(g, bound, field).regular;
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    NormalForm nf = reduce(heap);
    const std::size_t ker = kernel_of(heap, field);
    const std::size_t basis_ker = kernel_of(nf.basis_heap, field);
    if (ker != nf.m + basis_ker) {
      s.fail(heap, "dim ker != m + dim ker of the basis heap");
      return;
    }
    if (regular && nf.m != ker) {
      s.fail(heap, "m != dim ker on a regular class");
      return;
    }
  }
  if (!regular) return;
  std::vector<Heap> basis = enumerate_heaps(g, bound, true);
  for (const Heap& left : basis) {
    if (left.size() > bound) continue;
    for (const Heap& right : basis) {
      if (left.size() + right.size() > bound) continue;
      ++s.report.checked;
      Heap stacked = superpose(left, right);
      TLElement product = multiply(TLElement::from_heap(left), TLElement::from_heap(right));
      if (product.terms().size() != 1) {
        s.fail(stacked, "basis product is not a single term");
        return;
      }
      const auto& [basis_heap, coefficient] = *product.terms().begin();
      const std::size_t ker = kernel_of(stacked, field);
      if (coefficient != LaurentPoly::delta_power(static_cast<unsigned>(ker))) {
        s.fail(stacked, "basis product coefficient is not delta^(dim ker)");
        return;
      }
      if (basis_heap != reduce(stacked).basis_heap) {
        s.fail(stacked, "basis product heap differs from the reduction normal form");
        return;
      }
    }
  }
}

void sweep_confluence_3_2_2(Sweep& s, const GraphPtr& g, std::size_t bound, Field,
                            std::uint64_t seed) {
  constexpr int kTrials = 200;
  std::uint64_t index = 0;
  for (const Heap& heap : enumerate_heaps(g, bound, false)) {
    ++s.report.checked;
    NormalForm expected = reduce(heap);
    std::mt19937_64 rng(mix_seed(seed, index++));
    for (int trial = 0; trial < kTrials; ++trial) {
      NormalForm got = reduce_random(heap, rng);
      if (got.m != expected.m || got.basis_heap != expected.basis_heap) {
        s.fail(heap, "randomized reduction disagrees with the deterministic normal form");
        return;
      }
    }
  }
}

void sweep_prop_3_4_2(Sweep& s, const GraphPtr& g, std::size_t bound, Field) {
  const std::size_t pieces = g->piece_count();
  std::vector<PieceId> word;
  // Every word of length <= bound, in odometer order.
  for (std::size_t length = 0; length <= bound; ++length) {
    word.assign(length, 0);
    while (true) {
      ++s.report.checked;
      Heap heap = Heap::from_word_ids(g, word);
      const std::size_t m = reduce(heap).m;
      const bool p2 = has_p2(heap);
      for (std::size_t drop = 0; drop < length; ++drop) {
        std::vector<PieceId> shorter;
        shorter.reserve(length - 1);
        for (std::size_t i = 0; i < length; ++i)
          if (i != drop) shorter.push_back(word[i]);
        const std::size_t m_deleted = reduce(Heap::from_word_ids(g, shorter)).m;
        const long diff = static_cast<long>(m_deleted) - static_cast<long>(m);
        if (diff < -1 || diff > 1) {
          s.fail(heap, "m changes by more than 1 under a letter deletion");
          return;
        }
        if (p2 && m_deleted != 0) {
          s.fail(heap, "deletion from a P2 word has m' != 0");
          return;
        }
      }
      std::size_t pos = length;
      while (pos > 0 && word[pos - 1] == static_cast<PieceId>(pieces - 1)) {
        word[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
      ++word[pos - 1];
    }
  }
}

}  // namespace

const std::vector<std::string>& verification_ids() {
  static const std::vector<std::string> ids = {
      "lemma-1.2.4",   "deletion-2.1.1", "prop-2.2.3",      "prop-2.2.7",
      "lemma-2.2.9",   "contract-2.3.4", "contract-2.3.5",  "thm-2.4.2",
      "thm-2.4.4",     "regularity-2.4.1", "thm-3.2.3",     "confluence-3.2.2",
      "prop-3.4.2"};
  return ids;
}

VerificationReport run_verification(const std::string& property_id, const GraphPtr& graph,
                                    const std::string& graph_label, std::size_t bound,
                                    Field field, std::uint64_t seed) {
  Sweep sweep;
  sweep.report.property = property_id;
  sweep.report.graph_label = graph_label;
  sweep.report.bound = bound;
  sweep.report.field = field;
  sweep.report.verdict = VerificationReport::Verdict::kPass;

  const auto start = std::chrono::steady_clock::now();
  if (property_id == "lemma-1.2.4")
    sweep_lemma_1_2_4(sweep, graph, bound, field);
  else if (property_id == "deletion-2.1.1")
    sweep_deletion_2_1_1(sweep, graph, bound, field);
  else if (property_id == "prop-2.2.3")
    sweep_prop_2_2_3(sweep, graph, bound, field);
  else if (property_id == "prop-2.2.7")
    sweep_prop_2_2_7(sweep, graph, bound, field);
  else if (property_id == "lemma-2.2.9")
    sweep_lemma_2_2_9(sweep, graph, bound, field);
  else if (property_id == "contract-2.3.4")
    sweep_contract_2_3_4(sweep, graph, bound, field);
  else if (property_id == "contract-2.3.5")
    sweep_contract_2_3_5(sweep, graph, bound, field);
  else if (property_id == "thm-2.4.2")
    sweep_thm_2_4_2(sweep, graph, bound, field);
  else if (property_id == "thm-2.4.4")
    sweep_thm_2_4_4(sweep, graph, bound, field);
  else if (property_id == "regularity-2.4.1")
    sweep_regularity_2_4_1(sweep, graph, bound, field);
  else if (property_id == "thm-3.2.3")
    sweep_thm_3_2_3(sweep, graph, bound, field);
  else if (property_id == "confluence-3.2.2")
    sweep_confluence_3_2_2(sweep, graph, bound, field, seed);
  else if (property_id == "prop-3.4.2")
    sweep_prop_3_4_2(sweep, graph, bound, field);
  else {
    std::ostringstream msg;
    msg << "unknown property '" << property_id << "'; valid ids:";
    for (const std::string& id : verification_ids()) msg << ' ' << id;
    throw InputError(msg.str());
  }
  const auto stop = std::chrono::steady_clock::now();
  sweep.report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
  return sweep.report;
}

std::string VerificationReport::to_line() const {
  std::ostringstream out;
  out << "PROPERTY " << property << ' ' << graph_label << " size<=" << bound
      << " field=" << field.to_string() << ": ";
  switch (verdict) {
    case Verdict::kPass:
      out << "OK";
      break;
    case Verdict::kCounterexample:
      out << "COUNTEREXAMPLE " << (counterexample ? *counterexample : "?");
      break;
    case Verdict::kSkipped:
      out << "SKIPPED";
      break;
  }
  return out.str();
}

}  // namespace heaps
