#include "heaps/props.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "heaps/errors.hpp"

namespace heaps {

std::string to_string(DismantlingStep::Direction direction) {
  return direction == DismantlingStep::Direction::kMinus ? "minus" : "plus";
}

std::string to_string(const std::vector<DismantlingStep>& steps) {
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out << "; ";
    out << "remove " << steps[i].removed << " (" << to_string(steps[i].direction)
        << ", witness " << steps[i].witness << ")";
  }
  return out.str();
}

bool has_p2(const Heap& heap) {
  // A violating chain x < z or x < y < z with equal end labels exists exactly
  // when some consecutive same-label pair has at most one element between.
  for (auto [x, y] : label_edges(heap))
    if (heap.between_count(x, y) <= 1) return false;
  return true;
}

namespace {

using Direction = DismantlingStep::Direction;

bool extremal(const Heap& heap, int element, Direction dir) {
  return dir == Direction::kMinus ? heap.is_minimal(element) : heap.is_maximal(element);
}

// Witness for removing extremal element a: some b with a different label that
// is not extremal (on the same side) in the heap but becomes extremal once a
// is gone, i.e. a is its only strict neighbour on that side.
std::optional<int> find_witness(const Heap& heap, int a, Direction dir) {
  const int n = static_cast<int>(heap.size());
  for (int b = 0; b < n; ++b) {
    if (b == a || heap.label(b) == heap.label(a)) continue;
    bool linked = dir == Direction::kMinus ? heap.less(a, b) : heap.less(b, a);
    if (!linked) continue;
    bool only_neighbour = true;
    for (int x = 0; x < n && only_neighbour; ++x) {
      if (x == a) continue;
      if (dir == Direction::kMinus ? heap.less(x, b) : heap.less(b, x)) only_neighbour = false;
    }
    if (only_neighbour) return b;
  }
  return std::nullopt;
}

std::mutex g_dismantle_mutex;
std::unordered_map<std::string, bool> g_dismantle_memo;

std::optional<bool> memo_lookup(const std::string& key) {
  std::lock_guard<std::mutex> lock(g_dismantle_mutex);
  auto it = g_dismantle_memo.find(key);
  if (it == g_dismantle_memo.end()) return std::nullopt;
  return it->second;
}

void memo_store(const std::string& key, bool value) {
  std::lock_guard<std::mutex> lock(g_dismantle_mutex);
  g_dismantle_memo.emplace(key, value);
}

}  // namespace

bool is_dismantlable(const Heap& heap) {
  if (heap.trivial()) return true;
  const std::string key = heap.cache_key();
  if (auto cached = memo_lookup(key)) return *cached;
  bool result = false;
  for (Direction dir : {Direction::kMinus, Direction::kPlus}) {
    for (int a = 0; a < static_cast<int>(heap.size()) && !result; ++a) {
      if (!extremal(heap, a, dir)) continue;
      if (!find_witness(heap, a, dir)) continue;
      if (is_dismantlable(delete_vertex(heap, a))) result = true;
    }
    if (result) break;
  }
  memo_store(key, result);
  return result;
}

std::optional<std::vector<DismantlingStep>> dismantle(const Heap& heap) {
  if (!is_dismantlable(heap)) return std::nullopt;
  std::vector<DismantlingStep> steps;
  Heap current = heap;
  while (!current.trivial()) {
    bool advanced = false;
    for (Direction dir : {Direction::kMinus, Direction::kPlus}) {
      for (int a = 0; a < static_cast<int>(current.size()) && !advanced; ++a) {
        if (!extremal(current, a, dir)) continue;
        auto witness = find_witness(current, a, dir);
        if (!witness) continue;
        Heap next = delete_vertex(current, a);
        if (!is_dismantlable(next)) continue;
        steps.push_back(DismantlingStep{a, dir, *witness});
        current = std::move(next);
        advanced = true;
      }
      if (advanced) break;
    }
    if (!advanced)
      throw std::logic_error("dismantle: no step found for a dismantlable heap");
  }
  return steps;
}

Heap apply_dismantling_step(const Heap& heap, const DismantlingStep& step) {
  const int a = step.removed;
  if (a < 0 || static_cast<std::size_t>(a) >= heap.size())
    throw InputError("dismantling step: removed element out of range");
  if (!extremal(heap, a, step.direction))
    throw InputError("dismantling step: element " + std::to_string(a) + " is not " +
                     (step.direction == Direction::kMinus ? "minimal" : "maximal"));
  const int b = step.witness;
  if (b < 0 || static_cast<std::size_t>(b) >= heap.size() || b == a)
    throw InputError("dismantling step: witness out of range");
  if (heap.label(b) == heap.label(a))
    throw InputError("dismantling step: witness shares the removed label");
  bool linked = step.direction == Direction::kMinus ? heap.less(a, b) : heap.less(b, a);
  if (!linked)
    throw InputError("dismantling step: witness is already extremal in the heap");
  for (int x = 0; x < static_cast<int>(heap.size()); ++x) {
    if (x == a) continue;
    bool blocks = step.direction == Direction::kMinus ? heap.less(x, b) : heap.less(b, x);
    if (blocks)
      throw InputError("dismantling step: witness does not become extremal after removal");
  }
  return delete_vertex(heap, a);
}

std::vector<Heap> enumerate_heaps(GraphPtr graph, std::optional<std::size_t> max_size,
                                  bool p2_only) {
  if (!max_size && !p2_only)
    throw InputError("enumerate_heaps: unbounded enumeration requires the P2 filter");
  std::vector<Heap> out;
  std::unordered_set<std::string> seen;
  std::vector<Heap> layer;
  Heap root = Heap::empty(graph);
  seen.insert(root.cache_key());
  out.push_back(root);
  layer.push_back(std::move(root));

  std::vector<Heap> singles;
  for (std::size_t p = 0; p < graph->piece_count(); ++p)
    singles.push_back(Heap::single(graph, static_cast<PieceId>(p)));

  std::size_t size = 0;
  while (!layer.empty() && (!max_size || size < *max_size)) {
    std::vector<Heap> next;
    for (const Heap& heap : layer) {
      for (const Heap& piece : singles) {
        Heap extended = superpose(heap, piece);
        if (p2_only && !has_p2(extended)) continue;
        if (seen.insert(extended.cache_key()).second) next.push_back(std::move(extended));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const Heap& a, const Heap& b) { return a.word() < b.word(); });
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    ++size;
  }
  return out;
}

RegularityReport check_regular(GraphPtr graph, std::size_t max_size, Field field) {
  RegularityReport report;
  std::vector<Heap> p2_heaps = enumerate_heaps(std::move(graph), max_size, true);
  report.heaps_checked = p2_heaps.size();
  for (const Heap& heap : p2_heaps) {
    if (!is_dismantlable(heap)) {
      report.regular = false;
      report.counterexample = heap.to_string();
      return report;
    }
  }
  report.regular = true;
  for (const Heap& heap : p2_heaps) {
    if (!is_strongly_acyclic(heap, field)) {
      report.strong_acyclicity_violation = heap.to_string();
      break;
    }
  }
  return report;
}

}  // namespace heaps
