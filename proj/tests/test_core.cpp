#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "heaps/catalog.hpp"
#include "heaps/errors.hpp"
#include "heaps/heap.hpp"

using namespace heaps;

namespace {

GraphPtr path3() { return build_graph("a:3"); }
GraphPtr path2() { return build_graph("a:2"); }

Heap word_heap(const GraphPtr& g, const std::string& text) {
  return Heap::from_word_text(g, text);
}

// Independent oracle: the commutation class of a word under adjacent swaps
// of non-concurrent letters, explored breadth-first.
std::set<std::vector<PieceId>> commutation_class(const GraphPtr& g,
                                                 const std::vector<PieceId>& word) {
  std::set<std::vector<PieceId>> seen{word};
  std::queue<std::vector<PieceId>> queue;
  queue.push(word);
  while (!queue.empty()) {
    std::vector<PieceId> current = queue.front();
    queue.pop();
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (g->concurrent(current[i], current[i + 1])) continue;
      std::vector<PieceId> swapped = current;
      std::swap(swapped[i], swapped[i + 1]);
      if (seen.insert(swapped).second) queue.push(swapped);
    }
  }
  return seen;
}

std::vector<std::vector<PieceId>> all_words(const GraphPtr& g, std::size_t max_len) {
  std::vector<std::vector<PieceId>> out{{}};
  std::vector<std::vector<PieceId>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<PieceId>> next;
    for (const auto& w : layer)
      for (std::size_t p = 0; p < g->piece_count(); ++p) {
        std::vector<PieceId> extended = w;
        extended.push_back(static_cast<PieceId>(p));
        next.push_back(std::move(extended));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction validates names and symmetry") {
  ConcurrencyGraph g({"x", "y", "z"}, {{"x", "y"}});
  CHECK(g.concurrent(0, 0));
  CHECK(g.concurrent(0, 1));
  CHECK(g.concurrent(1, 0));
  CHECK(!g.concurrent(0, 2));
  CHECK(g.adjacent(0, 1));
  CHECK(!g.adjacent(0, 0));
  CHECK_THROWS_AS(ConcurrencyGraph({"x", "x"}, {}), InputError);
  CHECK_THROWS_AS(ConcurrencyGraph({"a b"}, {}), InputError);
  CHECK_THROWS_AS(ConcurrencyGraph({"x"}, {{"x", "nope"}}), InputError);
}

TEST_CASE("graph text parsing") {
  std::vector<std::string> warnings;
  auto g = ConcurrencyGraph::parse("# comment\n1: 2\n2: 1 3\n3: 2\n", &warnings);
  CHECK(g->piece_count() == 3);
  CHECK(g->adjacent(g->require_piece("1"), g->require_piece("2")));
  CHECK(!g->adjacent(g->require_piece("1"), g->require_piece("3")));
  CHECK(warnings.empty());

  warnings.clear();
  auto h = ConcurrencyGraph::parse("1: 2\n2:\n", &warnings);
  CHECK(h->adjacent(0, 1));  // symmetrized
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("asymmetric") != std::string::npos);

  CHECK_THROWS_AS(ConcurrencyGraph::parse("no colon here\n", nullptr), InputError);
  CHECK_THROWS_AS(ConcurrencyGraph::parse("", nullptr), InputError);
  CHECK_THROWS_AS(ConcurrencyGraph::parse("1: 2\n1: 3\n", nullptr), InputError);
}

TEST_CASE("heap of the five-element example word") {
  auto g = path3();
  Heap heap = word_heap(g, "1 3 2 1 3");
  REQUIRE(heap.size() == 5);
  // Canonical order: minimal layer (1, 3), then 2, then the top layer (1, 3).
  CHECK(heap.word_names() == std::vector<std::string>{"1", "3", "2", "1", "3"});
  CHECK(heap.is_minimal(0));
  CHECK(heap.is_minimal(1));
  CHECK(heap.is_maximal(3));
  CHECK(heap.is_maximal(4));
  // Covers: both minimal elements under 2, which sits under both maximals.
  std::vector<std::pair<int, int>> expected{{0, 2}, {1, 2}, {2, 3}, {2, 4}};
  CHECK(heap.covers() == expected);
  CHECK(!heap.less(0, 1));
  CHECK(heap.less(0, 3));  // via the middle element
  CHECK(heap.less(1, 4));
}

TEST_CASE("empty word gives the empty heap") {
  auto g = path3();
  Heap heap = word_heap(g, "");
  CHECK(heap.size() == 0);
  CHECK(heap.trivial());
  CHECK(heap.to_string() == "[]");
  CHECK(linear_extension(heap).empty());
}

TEST_CASE("two-letter words collapse exactly when letters are not concurrent") {
  auto g = path2();
  CHECK(word_heap(g, "1 2") != word_heap(g, "2 1"));

  auto square = build_graph("aff-a:3");
  CHECK(word_heap(square, "1 3") == word_heap(square, "3 1"));
  CHECK(word_heap(square, "1 2") != word_heap(square, "2 1"));

  // Exhaustive over both graphs: collapse iff non-concurrent labels.
  for (const auto& graph : {path2(), build_graph("aff-a:3")}) {
    const std::size_t n = graph->piece_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<PieceId> ab{static_cast<PieceId>(a), static_cast<PieceId>(b)};
        std::vector<PieceId> ba{static_cast<PieceId>(b), static_cast<PieceId>(a)};
        bool same = Heap::from_word_ids(graph, ab) == Heap::from_word_ids(graph, ba);
        CHECK(same == (a == b || !graph->concurrent(static_cast<PieceId>(a),
                                                    static_cast<PieceId>(b))));
      }
  }
}

TEST_CASE("unknown piece names are reported with their position") {
  auto g = path2();
  CHECK_THROWS_WITH_AS(word_heap(g, "1 2 9"), doctest::Contains("position 3"), InputError);
  CHECK_THROWS_WITH_AS(word_heap(g, "1 2 9"), doctest::Contains("'9'"), InputError);
}

TEST_CASE("canonicalization matches the commutation-class oracle") {
  auto g = path3();
  std::map<std::vector<PieceId>, std::size_t> class_of;
  std::size_t next_class = 0;
  for (const auto& w : all_words(g, 5)) {
    if (class_of.count(w)) continue;
    for (const auto& member : commutation_class(g, w)) class_of[member] = next_class;
    ++next_class;
  }
  // Same heap iff same commutation class.
  std::map<std::size_t, std::string> key_of_class;
  for (const auto& [w, cls] : class_of) {
    std::string key = Heap::from_word_ids(g, w).cache_key();
    auto [it, inserted] = key_of_class.emplace(cls, key);
    CHECK(it->second == key);
  }
  std::set<std::string> distinct;
  for (const auto& [cls, key] : key_of_class) CHECK(distinct.insert(key).second);

  // The canonical linear extension stays inside the word's class.
  for (const auto& [w, cls] : class_of) {
    Heap heap = Heap::from_word_ids(g, w);
    CHECK(class_of.at(heap.word()) == cls);
  }
}

TEST_CASE("superpose matches the paper's stacking conventions") {
  auto g = path3();
  SUBCASE("identity laws") {
    Heap e = Heap::empty(g);
    Heap h = word_heap(g, "1 2 3");
    CHECK(superpose(h, e) == h);
    CHECK(superpose(e, h) == h);
  }
  SUBCASE("same-label pieces stack") {
    auto g2 = path2();
    Heap one = word_heap(g2, "1");
    CHECK(superpose(one, one) == word_heap(g2, "1 1"));
  }
  SUBCASE("order relations of a 3-element superposition") {
    Heap below = word_heap(g, "1 3");
    Heap above = word_heap(g, "2");
    Heap stacked = superpose(below, above);
    REQUIRE(stacked.size() == 3);
    // Elements 0 and 1 are the minimal layer labelled 1, 3; element 2 on top.
    CHECK(stacked.word_names() == std::vector<std::string>{"1", "3", "2"});
    CHECK(stacked.less(0, 2));
    CHECK(stacked.less(1, 2));
    CHECK(!stacked.less(0, 1));
    CHECK(!stacked.less(1, 0));
    CHECK(!stacked.less(2, 0));
  }
  SUBCASE("word concatenation is a linear extension of the product") {
    for (const auto& w1 : {"", "1", "2 1", "1 3 2"})
      for (const auto& w2 : {"", "3", "1 2", "3 3 1"}) {
        Heap a = word_heap(g, w1);
        Heap b = word_heap(g, w2);
        std::string joined = std::string(w1) + " " + w2;
        CHECK(superpose(a, b) == word_heap(g, joined));
      }
  }
  SUBCASE("graph mismatch is an input error") {
    CHECK_THROWS_AS(superpose(word_heap(g, "1"), word_heap(path2(), "1")), InputError);
  }
}

TEST_CASE("superpose is associative with the empty heap as identity") {
  auto g = path3();
  std::vector<Heap> heaps;
  for (const auto& w : all_words(g, 3)) heaps.push_back(Heap::from_word_ids(g, w));
  std::sort(heaps.begin(), heaps.end(), HeapLess{});
  heaps.erase(std::unique(heaps.begin(), heaps.end()), heaps.end());
  for (const Heap& a : heaps)
    for (const Heap& b : heaps)
      for (const Heap& c : heaps)
        CHECK(superpose(superpose(a, b), c) == superpose(a, superpose(b, c)));
}

TEST_CASE("left multiplication only depends on the piece label") {
  auto g = path3();
  // a o E = b o E when the labels agree: single-piece heaps are equal, and
  // the product is determined by the canonical forms.
  for (std::size_t p = 0; p < g->piece_count(); ++p) {
    Heap a = Heap::single(g, static_cast<PieceId>(p));
    Heap b = Heap::from_word_ids(g, {static_cast<PieceId>(p)});
    CHECK(a == b);
    Heap e = word_heap(g, "2 1 3");
    CHECK(superpose(a, e) == superpose(b, e));
  }
}

TEST_CASE("operands are subheaps of their superposition") {
  auto g = path3();
  std::vector<std::string> words{"", "1", "2 1", "1 3 2", "2 2"};
  for (const auto& w1 : words)
    for (const auto& w2 : words) {
      Heap a = word_heap(g, w1);
      Heap b = word_heap(g, w2);
      std::vector<int> a_block, b_block;
      Heap stacked = superpose(a, b, a_block, b_block);
      CHECK(subheap(stacked, a_block) == a);
      CHECK(subheap(stacked, b_block) == b);
    }
}

TEST_CASE("subheap restricts concurrent relations, not the induced order") {
  auto g = path3();
  Heap heap = word_heap(g, "1 3 2 1 3");
  SUBCASE("keeping everything is the identity") {
    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(subheap(heap, all) == heap);
  }
  SUBCASE("dropping the middle disconnects non-concurrent pairs") {
    // Keep {a, b, d} = elements 0, 1, 3: only a < d survives (labels 1, 1);
    // b is incomparable to both despite b < d in the original order.
    std::vector<int> keep{0, 1, 3};
    Heap sub = subheap(heap, keep);
    REQUIRE(sub.size() == 3);
    CHECK(sub.word_names() == std::vector<std::string>{"1", "3", "1"});
    int first_one = 0, three = 1, second_one = 2;
    CHECK(sub.less(first_one, second_one));
    CHECK(!sub.less(three, second_one));
    CHECK(!sub.less(three, first_one));
    CHECK(!sub.less(first_one, three));
  }
  SUBCASE("empty keep yields the empty heap") {
    CHECK(subheap(heap, std::vector<int>{}) == Heap::empty(g));
  }
  SUBCASE("out of range is an input error") {
    CHECK_THROWS_AS(subheap(heap, std::vector<int>{9}), InputError);
  }
}

TEST_CASE("deleting a vertex") {
  auto g = path3();
  Heap heap = word_heap(g, "1 3 2 1 3");
  SUBCASE("single-element heap becomes empty") {
    CHECK(delete_vertex(word_heap(g, "2"), 0) == Heap::empty(g));
  }
  SUBCASE("deleting element a keeps a dismantlable 4-element heap") {
    Heap rest = delete_vertex(heap, 0);
    CHECK(rest.size() == 4);
    CHECK(rest.word_names() == std::vector<std::string>{"3", "2", "1", "3"});
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(delete_vertex(heap, 5), InputError);
    CHECK_THROWS_AS(delete_vertex(heap, -1), InputError);
  }
}

TEST_CASE("deleting a maximal element preserves the order among the rest") {
  auto g = path3();
  for (const auto& w : all_words(g, 5)) {
    Heap heap = Heap::from_word_ids(g, w);
    for (int v = 0; v < static_cast<int>(heap.size()); ++v) {
      if (!heap.is_maximal(v)) continue;
      // Rebuild the subheap with an explicit renumbering to compare orders.
      std::vector<PieceId> labels;
      std::vector<int> kept;
      for (int e = 0; e < static_cast<int>(heap.size()); ++e)
        if (e != v) {
          kept.push_back(e);
          labels.push_back(heap.label(e));
        }
      std::vector<std::pair<int, int>> pairs;
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
          if (heap.less(kept[i], kept[j]) &&
              g->concurrent(heap.label(kept[i]), heap.label(kept[j])))
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      std::vector<int> to_canonical;
      Heap rebuilt = Heap::from_labelled_poset(g, labels, pairs, &to_canonical);
      CHECK(rebuilt == delete_vertex(heap, v));
      for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
          CHECK(rebuilt.less(to_canonical[i], to_canonical[j]) ==
                heap.less(kept[i], kept[j]));
    }
  }
}

TEST_CASE("from_labelled_poset validates the heap axioms") {
  auto g = path3();
  PieceId one = g->require_piece("1");
  PieceId two = g->require_piece("2");
  PieceId three = g->require_piece("3");
  // Concurrent labels must be comparable.
  CHECK_THROWS_AS(Heap::from_labelled_poset(g, {one, two}, {}), InputError);
  // Relations between non-concurrent labels cannot generate the order.
  CHECK_THROWS_AS(Heap::from_labelled_poset(g, {one, three}, {{0, 1}}), InputError);
  // Cycles are rejected.
  CHECK_THROWS_AS(Heap::from_labelled_poset(g, {one, two}, {{0, 1}, {1, 0}}), InputError);
  // A valid two-element chain round-trips.
  Heap chain = Heap::from_labelled_poset(g, {two, one}, {{0, 1}});
  CHECK(chain == Heap::from_word_text(g, "2 1"));
}

TEST_CASE("round trip through the canonical linear extension") {
  for (const auto& spec : {"a:3", "aff-a:3"}) {
    auto g = build_graph(spec);
    for (const auto& w : all_words(g, 4)) {
      Heap heap = Heap::from_word_ids(g, w);
      CHECK(Heap::from_word(g, linear_extension(heap)) == heap);
    }
  }
}

TEST_CASE("convex chains of the five-element example") {
  auto g = path3();
  Heap heap = word_heap(g, "1 3 2 1 3");
  SUBCASE("balanced chains of length up to 3") {
    auto chains = convex_chains(heap, 3, true);
    // Exactly a < c < d and b < c < e; no balanced pairs.
    REQUIRE(chains.size() == 2);
    CHECK(chains[0].elements == std::vector<int>{0, 2, 3});
    CHECK(chains[1].elements == std::vector<int>{1, 2, 4});
    for (const auto& c : chains) {
      CHECK(c.convex);
      CHECK(c.balanced);
    }
  }
  SUBCASE("all convex chains include the unbalanced ones") {
    auto chains = convex_chains(heap, 2, false);
    // Pairs with nothing between: exactly the four covers.
    REQUIRE(chains.size() == 4);
    for (const auto& c : chains) CHECK(!c.balanced);
  }
  SUBCASE("trivial heaps have no chains") {
    CHECK(convex_chains(word_heap(g, "1 3"), 4, false).empty());
  }
  SUBCASE("the double letter is one balanced convex pair") {
    auto g2 = path2();
    auto chains = convex_chains(word_heap(g2, "1 1"), 2, false);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].balanced);
    CHECK(chains[0].elements == std::vector<int>{0, 1});
  }
  SUBCASE("max_len below 2 is rejected") {
    CHECK_THROWS_AS(convex_chains(heap, 1, false), InputError);
  }
}

TEST_CASE("label fibers are chains") {
  auto g = build_graph("aff-a:3");
  for (const auto& w : all_words(g, 4)) {
    Heap heap = Heap::from_word_ids(g, w);
    for (int a = 0; a < static_cast<int>(heap.size()); ++a)
      for (int b = a + 1; b < static_cast<int>(heap.size()); ++b)
        if (heap.label(a) == heap.label(b)) CHECK((heap.less(a, b) || heap.less(b, a)));
  }
}
