#include "heaps/catalog.hpp"

#include <cctype>

#include "heaps/errors.hpp"

namespace heaps {

namespace {

std::string lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::size_t parse_parameter(std::string_view digits, std::string_view spec) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw InputError("bad graph spec '" + std::string(spec) + "': expected a number after ':'");
  return static_cast<std::size_t>(std::stoull(std::string(digits)));
}

GraphPtr make_family(const std::vector<std::size_t>& vertex_numbers,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> names;
  names.reserve(vertex_numbers.size());
  for (std::size_t v : vertex_numbers) names.push_back(std::to_string(v));
  std::vector<std::pair<std::string, std::string>> named_edges;
  named_edges.reserve(edges.size());
  for (auto [a, b] : edges)
    named_edges.emplace_back(std::to_string(a), std::to_string(b));
  return std::make_shared<ConcurrencyGraph>(std::move(names), named_edges);
}

}  // namespace

GraphSpec GraphSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InputError("bad graph spec '" + std::string(text) +
                     "': expected a:N, d:N, e:N, aff-a:N or file:PATH");
  const std::string head = lower(text.substr(0, colon));
  std::string_view tail = text.substr(colon + 1);
  GraphSpec spec;
  if (head == "file") {
    if (tail.empty()) throw InputError("bad graph spec: empty file path");
    spec.kind = Kind::kFile;
    spec.path = std::string(tail);
    return spec;
  }
  if (head == "a")
    spec.kind = Kind::kA;
  else if (head == "d")
    spec.kind = Kind::kD;
  else if (head == "e")
    spec.kind = Kind::kE;
  else if (head == "aff-a")
    spec.kind = Kind::kAffineA;
  else
    throw InputError("bad graph spec '" + std::string(text) + "': unknown family '" + head + "'");
  spec.parameter = parse_parameter(tail, text);
  return spec;
}

std::string GraphSpec::to_string() const {
  switch (kind) {
    case Kind::kA: return "a:" + std::to_string(parameter);
    case Kind::kD: return "d:" + std::to_string(parameter);
    case Kind::kE: return "e:" + std::to_string(parameter);
    case Kind::kAffineA: return "aff-a:" + std::to_string(parameter);
    case Kind::kFile: return "file:" + path;
  }
  return "?";
}

GraphPtr build_graph(const GraphSpec& spec, std::vector<std::string>* warnings) {
  const std::size_t n = spec.parameter;
  switch (spec.kind) {
    case GraphSpec::Kind::kA: {
      if (n < 1) throw InputError("a:N requires N >= 1");
      std::vector<std::size_t> vertices;
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 1; i <= n; ++i) vertices.push_back(i);
      for (std::size_t i = 1; i + 1 <= n; ++i) edges.emplace_back(i, i + 1);
      return make_family(vertices, edges);
    }
    case GraphSpec::Kind::kD: {
      // The chain 2..n with vertex 0 attached to 3; equals e:(n+1) minus 1.
      if (n < 3) throw InputError("d:N requires N >= 3");
      std::vector<std::size_t> vertices{0};
      std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 3}};
      for (std::size_t i = 2; i <= n; ++i) vertices.push_back(i);
      for (std::size_t i = 2; i + 1 <= n; ++i) edges.emplace_back(i, i + 1);
      return make_family(vertices, edges);
    }
    case GraphSpec::Kind::kE: {
      // Vertices 0..n-1: the chain 1..n-1 plus vertex 0 attached to 3,
      // placed so that omitting 0 gives a:(n-1) and omitting 1 gives d:(n-1).
      if (n < 4) throw InputError("e:N requires N >= 4");
      std::vector<std::size_t> vertices;
      std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 3}};
      for (std::size_t i = 0; i < n; ++i) vertices.push_back(i);
      for (std::size_t i = 1; i + 1 <= n - 1; ++i) edges.emplace_back(i, i + 1);
      return make_family(vertices, edges);
    }
    case GraphSpec::Kind::kAffineA: {
      // aff-a:m is the (m+1)-gon with vertices 1..m+1.
      if (n < 2) throw InputError("aff-a:N requires N >= 2 (a polygon needs 3 vertices)");
      const std::size_t cycle = n + 1;
      std::vector<std::size_t> vertices;
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 1; i <= cycle; ++i) vertices.push_back(i);
      for (std::size_t i = 1; i < cycle; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(cycle, 1);
      return make_family(vertices, edges);
    }
    case GraphSpec::Kind::kFile:
      return ConcurrencyGraph::load_file(spec.path, warnings);
  }
  throw InputError("bad graph spec");
}

GraphPtr build_graph(std::string_view spec_text, std::vector<std::string>* warnings) {
  return build_graph(GraphSpec::parse(spec_text), warnings);
}

}  // namespace heaps
