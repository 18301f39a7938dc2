#include "heaps/concurrency_graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "heaps/errors.hpp"

namespace heaps {

namespace {

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

ConcurrencyGraph::ConcurrencyGraph(
    std::vector<std::string> pieces,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(pieces)) {
  if (names_.empty()) throw InputError("graph has no pieces");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& name = names_[i];
    if (name.empty() || has_whitespace(name))
      throw InputError("invalid piece name '" + name + "'");
    if (!index_.emplace(name, static_cast<PieceId>(i)).second)
      throw InputError("duplicate piece name '" + name + "'");
  }
  adj_.assign(names_.size() * names_.size(), 0);
  for (const auto& [a, b] : edges) {
    PieceId pa = require_piece(a);
    PieceId pb = require_piece(b);
    if (pa == pb) continue;  // reflexive pairs are implicit
    adj_[idx(pa, pb)] = 1;
    adj_[idx(pb, pa)] = 1;
  }

  std::ostringstream fp;
  for (const std::string& name : names_) fp << name << ';';
  fp << '|';
  for (std::uint8_t bit : adj_) fp << (bit ? '1' : '0');
  fingerprint_ = fp.str();
}

std::optional<PieceId> ConcurrencyGraph::find_piece(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PieceId ConcurrencyGraph::require_piece(std::string_view name) const {
  auto p = find_piece(name);
  if (!p) throw InputError("unknown piece '" + std::string(name) + "'");
  return *p;
}

std::shared_ptr<const ConcurrencyGraph> ConcurrencyGraph::parse(
    std::string_view text, std::vector<std::string>* warnings) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::string>, std::less<>> listed;
  auto note_piece = [&](const std::string& name) {
    if (listed.find(name) == listed.end()) {
      listed.emplace(name, std::vector<std::string>{});
      order.push_back(name);
    }
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::vector<std::pair<std::string, std::string>> mentions;
  std::map<std::string, std::vector<std::string>, std::less<>> declared;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;
    auto colon = sv.find(':');
    if (colon == std::string_view::npos)
      throw InputError("graph line " + std::to_string(lineno) + ": expected 'vertex: neighbors'");
    std::vector<std::string> lhs = split_word(sv.substr(0, colon));
    if (lhs.size() != 1)
      throw InputError("graph line " + std::to_string(lineno) + ": expected a single vertex before ':'");
    const std::string vertex = lhs[0];
    if (declared.count(vertex))
      throw InputError("graph line " + std::to_string(lineno) + ": duplicate entry for '" + vertex + "'");
    note_piece(vertex);
    std::vector<std::string> neighbors = split_word(sv.substr(colon + 1));
    for (const std::string& nb : neighbors) {
      note_piece(nb);
      if (nb != vertex) mentions.emplace_back(vertex, nb);
    }
    declared.emplace(vertex, std::move(neighbors));
  }
  if (order.empty()) throw InputError("graph text declares no vertices");

  // Symmetrize, warning when a declared entry is missing the back edge.
  for (const auto& [a, b] : mentions) {
    auto it = declared.find(b);
    if (it != declared.end() &&
        std::find(it->second.begin(), it->second.end(), a) == it->second.end()) {
      if (warnings)
        warnings->push_back("asymmetric input: '" + a + ": " + b + "' lacks '" +
                            b + ": " + a + "'; symmetrized");
    }
  }
  return std::make_shared<ConcurrencyGraph>(order, mentions);
}

std::shared_ptr<const ConcurrencyGraph> ConcurrencyGraph::load_file(
    const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), warnings);
}

std::vector<std::string> split_word(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace heaps
