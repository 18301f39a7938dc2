// Acceptance suite: runs every shipping criterion end to end and prints one
// PASS/FAIL line per criterion.  Criteria 1 and 2 drive the real CLI binary,
// whose path must be passed as argv[1]; the rest exercise the library
// directly.  Exit status is the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heaps/boundary.hpp"
#include "heaps/catalog.hpp"
#include "heaps/props.hpp"
#include "heaps/tl.hpp"
#include "heaps/verify.hpp"
#include "word_oracles.hpp"

namespace {

std::string g_cli_path;

struct Check {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& message) {
    if (!ok) failures.push_back(message);
  }
};

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string command = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    result.status = -1;
    return result;
  }
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), n);
  int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

std::string report_field(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  const std::string prefix = key + ":";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) {
      std::string value = line.substr(prefix.size());
      if (!value.empty() && value.front() == ' ') value.erase(0, 1);
      return value;
    }
  return "<missing>";
}

void run_verify_expect_pass(Check& check, const std::string& property,
                            const std::string& graph, std::size_t bound,
                            heaps::Field field, std::uint64_t seed = 0) {
  auto g = heaps::build_graph(graph);
  heaps::VerificationReport report =
      heaps::run_verification(property, g, graph, bound, field, seed);
  std::ostringstream line;
  line << report.to_line();
  if (report.detail && !report.passed()) line << " (" << *report.detail << ")";
  check.require(report.passed(), line.str());
}

const std::vector<std::string>& sweep_graphs() {
  static const std::vector<std::string> graphs{"a:3", "a:4", "d:4", "aff-a:3", "aff-a:4"};
  return graphs;
}

// --- criteria -------------------------------------------------------------

void criterion_golden_example(Check& check) {
  using clock = std::chrono::steady_clock;
  for (const std::string field : {"q", "gf:2"}) {
    auto start = clock::now();
    CliResult r = run_cli("analyze --graph a:3 --word \"1 3 2 1 3\" --field " + field);
    double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    check.require(r.status == 0, "analyze exited with status " + std::to_string(r.status));
    check.require(report_field(r.out, "ker") == "1",
                  "field " + field + ": ker = " + report_field(r.out, "ker") + ", want 1");
    check.require(report_field(r.out, "coker") == "4",
                  "field " + field + ": coker = " + report_field(r.out, "coker") + ", want 4");
    check.require(elapsed < 1.0, "analyze took " + std::to_string(elapsed) + "s, want < 1s");
  }
}

void criterion_counterexample_pair(Check& check) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  CliResult four = run_cli("analyze --graph aff-a:3 --word \"1 3 2 4\"");
  check.require(four.status == 0, "analyze (4-element heap) failed");
  check.require(report_field(four.out, "acyclic") == "true", "4-element heap: not acyclic");
  check.require(report_field(four.out, "p1") == "false", "4-element heap: unexpectedly P1");

  CliResult six = run_cli("analyze --graph aff-a:3 --word \"1 3 2 4 1 3\"");
  check.require(six.status == 0, "analyze (6-element heap) failed");
  check.require(report_field(six.out, "p2") == "true", "6-element heap: not P2");
  check.require(report_field(six.out, "ker") == "1",
                "6-element heap: ker = " + report_field(six.out, "ker") + ", want 1");
  double elapsed = std::chrono::duration<double>(clock::now() - start).count();
  check.require(elapsed < 1.0, "pair took " + std::to_string(elapsed) + "s, want < 1s");
}

void criterion_dimension_identity(Check& check) {
  for (const std::string& graph : sweep_graphs())
    for (heaps::Field field : {heaps::Field::rationals(), heaps::Field::gf(2)})
      run_verify_expect_pass(check, "lemma-1.2.4", graph, 7, field);
}

void criterion_deletion_bound(Check& check) {
  for (const std::string& graph : sweep_graphs())
    for (heaps::Field field : {heaps::Field::rationals(), heaps::Field::gf(2)})
      run_verify_expect_pass(check, "deletion-2.1.1", graph, 7, field);
}

void criterion_contractions(Check& check) {
  for (const std::string& graph : sweep_graphs())
    for (heaps::Field field : {heaps::Field::rationals(), heaps::Field::gf(2)}) {
      run_verify_expect_pass(check, "contract-2.3.4", graph, 7, field);
      run_verify_expect_pass(check, "contract-2.3.5", graph, 7, field);
    }
}

void criterion_implications(Check& check) {
  for (const std::string& graph : sweep_graphs()) {
    for (heaps::Field field : {heaps::Field::rationals(), heaps::Field::gf(2)}) {
      run_verify_expect_pass(check, "prop-2.2.3", graph, 7, field);
      run_verify_expect_pass(check, "prop-2.2.7", graph, 7, field);
    }
    run_verify_expect_pass(check, "lemma-2.2.9", graph, 7, heaps::Field::rationals());
  }
}

void criterion_regularity(Check& check) {
  const std::vector<std::string> regular{"a:2", "a:3", "a:4", "d:4", "e:6", "aff-a:4"};
  for (const std::string& graph : regular) {
    auto g = heaps::build_graph(graph);
    heaps::RegularityReport report = heaps::check_regular(g, 8, heaps::Field::rationals());
    check.require(report.regular && !report.strong_acyclicity_violation,
                  graph + ": expected a regular-up-to-bound report");
  }
  auto square = heaps::build_graph("aff-a:3");
  heaps::RegularityReport report = heaps::check_regular(square, 6, heaps::Field::rationals());
  check.require(!report.regular, "aff-a:3: expected a counterexample");
  if (report.counterexample) {
    heaps::Heap heap = heaps::Heap::from_word_text(square, report.counterexample->substr(
                                                               1, report.counterexample->size() - 2));
    check.require(heap.size() <= 6, "aff-a:3 counterexample larger than 6 elements");
    check.require(heaps::has_p2(heap) && !heaps::is_dismantlable(heap),
                  "aff-a:3 counterexample is not P2-without-P1");
  }
  for (const std::string& graph : regular) {
    run_verify_expect_pass(check, "thm-2.4.2", graph, 8, heaps::Field::rationals());
    run_verify_expect_pass(check, "thm-2.4.4", graph, 8, heaps::Field::rationals());
  }
}

void criterion_tl_structure(Check& check) {
  for (const std::string& graph : {std::string("a:3"), std::string("aff-a:4")})
    run_verify_expect_pass(check, "thm-3.2.3", graph, 8, heaps::Field::rationals());
}

void criterion_confluence(Check& check) {
  for (const std::string& graph : {std::string("a:3"), std::string("aff-a:3")})
    run_verify_expect_pass(check, "confluence-3.2.2", graph, 7, heaps::Field::rationals(), 0);
}

void criterion_deletion_in_words(Check& check) {
  run_verify_expect_pass(check, "prop-3.4.2", "a:3", 7, heaps::Field::rationals());
}

void criterion_basis_counts(Check& check) {
  auto a2 = heaps::build_graph("a:2");
  auto a3 = heaps::build_graph("a:3");
  const std::size_t oracle_a2 = heaps::testing::count_factor_free_classes(a2);
  const std::size_t oracle_a3 = heaps::testing::count_factor_free_classes(a3);
  check.require(oracle_a2 == 5, "word oracle on a:2 gives " + std::to_string(oracle_a2));
  check.require(oracle_a3 == 14, "word oracle on a:3 gives " + std::to_string(oracle_a3));
  const std::size_t basis_a2 = heaps::monomial_basis(a2, std::nullopt).size();
  const std::size_t basis_a3 = heaps::monomial_basis(a3, std::nullopt).size();
  check.require(basis_a2 == 5, "monomial basis on a:2 has " + std::to_string(basis_a2));
  check.require(basis_a3 == 14, "monomial basis on a:3 has " + std::to_string(basis_a3));
}

void criterion_round_trip(Check& check) {
  for (const std::string& graph : sweep_graphs()) {
    auto g = heaps::build_graph(graph);
    const std::size_t pieces = g->piece_count();
    std::vector<heaps::PieceId> word;
    for (std::size_t length = 0; length <= 7; ++length) {
      word.assign(length, 0);
      while (true) {
        heaps::Heap heap = heaps::Heap::from_word_ids(g, word);
        if (heaps::Heap::from_word_ids(g, heap.word()) != heap) {
          std::ostringstream msg;
          msg << graph << ": round trip failed for " << heap.to_string();
          check.require(false, msg.str());
          return;
        }
        std::size_t pos = length;
        while (pos > 0 && word[pos - 1] == static_cast<heaps::PieceId>(pieces - 1)) {
          word[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
        ++word[pos - 1];
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli-binary>\n";
    return 64;
  }
  g_cli_path = argv[1];

  struct Criterion {
    std::string name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"golden-example", criterion_golden_example},
      {"counterexample-pair", criterion_counterexample_pair},
      {"dimension-identity", criterion_dimension_identity},
      {"deletion-bound", criterion_deletion_bound},
      {"contractions", criterion_contractions},
      {"implications", criterion_implications},
      {"regularity-desk-scale", criterion_regularity},
      {"tl-structure-constants", criterion_tl_structure},
      {"confluence", criterion_confluence},
      {"deletion-in-words", criterion_deletion_in_words},
      {"basis-counts", criterion_basis_counts},
      {"round-trip", criterion_round_trip},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    criteria[i].run(check);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char prefix[64];
    std::snprintf(prefix, sizeof(prefix), "%s %2zu ", check.failures.empty() ? "PASS" : "FAIL",
                  i + 1);
    std::cout << prefix << criteria[i].name << " (" << std::fixed;
    std::cout.precision(1);
    std::cout << elapsed << "s)\n";
    std::cout.unsetf(std::ios::fixed);
    for (const std::string& message : check.failures) std::cout << "      " << message << '\n';
    if (!check.failures.empty()) ++failed;
  }
  std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed;
}
