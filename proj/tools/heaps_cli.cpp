// Command-line surface for the heaps library: single-heap analysis,
// Temperley-Lieb normal forms and products, heap enumeration, property
// verification sweeps, and DOT export.
//
// All reports are plain text on stdout and byte-stable across identical
// invocations; warnings and timing go to stderr.  Exit status: 0 on success
// (and a passing verdict for `verify`), 1 for a verification counterexample,
// 2 for input errors.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "heaps/boundary.hpp"
#include "heaps/catalog.hpp"
#include "heaps/dot.hpp"
#include "heaps/errors.hpp"
#include "heaps/props.hpp"
#include "heaps/tl.hpp"
#include "heaps/verify.hpp"

namespace {

constexpr std::size_t kDefaultBound = 7;

heaps::GraphPtr load_graph(const std::string& spec_text) {
  std::vector<std::string> warnings;
  heaps::GraphPtr graph = heaps::build_graph(spec_text, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
  return graph;
}

std::string yesno(bool value) { return value ? "true" : "false"; }

void run_analyze(const std::string& graph_spec, const std::string& word_text,
                 const std::string& field_text) {
  heaps::GraphPtr graph = load_graph(graph_spec);
  heaps::Field field = heaps::Field::parse(field_text);
  heaps::Heap heap = heaps::Heap::from_word_text(graph, word_text);

  heaps::BoundaryComplex complex = heaps::build_complex(heap, field);
  const std::size_t ker = heaps::ker_dim(complex);
  const std::size_t coker = heaps::coker_dim(complex);
  const std::size_t labels = heap.label_count();

  std::cout << "heap: " << heap.to_string() << '\n';
  std::cout << "size: " << heap.size() << '\n';
  std::cout << "labels: " << labels << '\n';
  std::cout << "edges: " << complex.edges.size() << '\n';
  std::cout << "field: " << field.to_string() << '\n';
  std::cout << "ker: " << ker << '\n';
  std::cout << "coker: " << coker << '\n';
  std::cout << "identity: coker - ker = " << coker - ker << " = labels\n";
  std::cout << "acyclic: " << yesno(ker == 0) << '\n';
  std::cout << "strongly_acyclic: " << yesno(heaps::is_strongly_acyclic(heap, field)) << '\n';
  auto witness = heaps::dismantle(heap);
  std::cout << "p1: " << yesno(witness.has_value()) << '\n';
  if (witness)
    std::cout << "p1_witness: " << (witness->empty() ? "trivial" : heaps::to_string(*witness))
              << '\n';
  std::cout << "p2: " << yesno(heaps::has_p2(heap)) << '\n';
  std::cout << "image_vertices:";
  std::vector<int> image = heaps::image_vertices(complex);
  if (image.empty()) {
    std::cout << " none";
  } else {
    for (int v : image) std::cout << ' ' << v;
  }
  std::cout << '\n';
}

void run_normal_form(const std::string& graph_spec, const std::string& word_text) {
  heaps::GraphPtr graph = load_graph(graph_spec);
  std::vector<std::string> letters = heaps::split_word(word_text);
  auto [m, basis_word] = heaps::word_normal_form(graph, letters);
  std::cout << "delta^" << m << " [";
  for (std::size_t i = 0; i < basis_word.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << basis_word[i];
  }
  std::cout << "]\n";
}

void run_multiply(const std::string& graph_spec, const std::vector<std::string>& words) {
  heaps::GraphPtr graph = load_graph(graph_spec);
  heaps::TLElement product = heaps::TLElement::identity(graph);
  for (const std::string& word_text : words) {
    std::vector<std::string> letters = heaps::split_word(word_text);
    product = heaps::multiply(product, heaps::TLElement::from_word(graph, letters));
  }
  std::cout << product.to_string() << '\n';
}

void run_enumerate(const std::string& graph_spec, long max_size, bool p2_only) {
  heaps::GraphPtr graph = load_graph(graph_spec);
  std::optional<std::size_t> bound;
  if (max_size >= 0)
    bound = static_cast<std::size_t>(max_size);
  else if (!p2_only)
    bound = kDefaultBound;  // unbounded enumeration only terminates with the P2 filter
  for (const heaps::Heap& heap : heaps::enumerate_heaps(graph, bound, p2_only))
    std::cout << heap.to_string() << '\n';
}

int run_verify(const std::string& property, const std::string& graph_spec, long max_size,
               const std::string& field_text, std::uint64_t seed) {
  heaps::GraphPtr graph = load_graph(graph_spec);
  heaps::Field field = heaps::Field::parse(field_text);
  const std::size_t bound = max_size >= 0 ? static_cast<std::size_t>(max_size) : kDefaultBound;
  heaps::VerificationReport report =
      heaps::run_verification(property, graph, heaps::GraphSpec::parse(graph_spec).to_string(),
                              bound, field, seed);
  std::cout << report.to_line() << '\n';
  if (report.detail) std::cout << "detail: " << *report.detail << '\n';
  std::cout << "checked: " << report.checked << '\n';
  std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
  return report.passed() ? 0 : 1;
}

void run_export_dot(const std::string& graph_spec, const std::string& word_text,
                    const std::string& what) {
  heaps::GraphPtr graph = load_graph(graph_spec);
  if (what == "concurrency") {
    std::cout << heaps::concurrency_dot(*graph);
    return;
  }
  std::cout << heaps::hasse_dot(heaps::Heap::from_word_text(graph, word_text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heaps of pieces: boundary maps, dismantlability, and generalized "
               "Temperley-Lieb normal forms"};
  app.require_subcommand(1);

  std::string graph_spec;
  std::string word_text;
  std::string field_text = "q";
  std::string property;
  std::string what = "hasse";
  std::vector<std::string> words;
  long max_size = -1;
  std::uint64_t seed = 0;
  bool p2_only = false;

  auto* analyze = app.add_subcommand("analyze", "report dimensions and properties of one heap");
  analyze->add_option("--graph", graph_spec, "graph spec (a:N, d:N, e:N, aff-a:N, file:PATH)")
      ->required();
  analyze->add_option("--word", word_text, "whitespace-separated piece names");
  analyze->add_option("--field", field_text, "coefficient field: q or gf:p");

  auto* normal_form = app.add_subcommand("normal-form", "delta^m [basis word] of a word");
  normal_form->add_option("--graph", graph_spec, "graph spec")->required();
  normal_form->add_option("--word", word_text, "whitespace-separated piece names");

  auto* mult = app.add_subcommand("multiply", "product of words in the Temperley-Lieb algebra");
  mult->add_option("--graph", graph_spec, "graph spec")->required();
  mult->add_option("words", words, "factor words, each in quotes")->required()->expected(-1);

  auto* enumerate = app.add_subcommand("enumerate", "list heaps over the graph by canonical word");
  enumerate->add_option("--graph", graph_spec, "graph spec")->required();
  enumerate->add_option("--max-size", max_size,
                        "largest heap size (default 7; unbounded with --p2-only)");
  enumerate->add_flag("--p2-only", p2_only, "only heaps with property P2 (the monomial basis)");

  auto* verify = app.add_subcommand("verify", "run a property verification sweep");
  verify->add_option("property", property, "property id (see --help-properties)")->required();
  verify->add_option("--graph", graph_spec, "graph spec")->required();
  verify->add_option("--max-size", max_size, "sweep bound on heap size / word length (default 7)");
  verify->add_option("--field", field_text, "coefficient field: q or gf:p");
  verify->add_option("--seed", seed, "seed for randomized strategies");

  auto* export_dot = app.add_subcommand("export-dot", "DOT export of a Hasse diagram or graph");
  export_dot->add_option("--graph", graph_spec, "graph spec")->required();
  export_dot->add_option("--word", word_text, "heap word (for --what hasse)");
  export_dot->add_option("--what", what, "hasse or concurrency")
      ->check(CLI::IsMember({"hasse", "concurrency"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      run_analyze(graph_spec, word_text, field_text);
    } else if (normal_form->parsed()) {
      run_normal_form(graph_spec, word_text);
    } else if (mult->parsed()) {
      run_multiply(graph_spec, words);
    } else if (enumerate->parsed()) {
      run_enumerate(graph_spec, max_size, p2_only);
    } else if (verify->parsed()) {
      return run_verify(property, graph_spec, max_size, field_text, seed);
    } else if (export_dot->parsed()) {
      run_export_dot(graph_spec, word_text, what);
    }
  } catch (const heaps::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
