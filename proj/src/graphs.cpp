#include "mbqc/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mbqc {

EntanglementGraph entanglement_graph(const Pattern& p) {
  EntanglementGraph g{p.space(), {}};
  std::set<std::pair<QubitId, QubitId>> seen;
  for (const auto& c : p.sequence()) {
    if (const auto* e = std::get_if<Entangle>(&c)) {
      std::pair edge(e->first(), e->second());
      if (seen.insert(edge).second) {
        g.edges.push_back(std::move(edge));
      }
    }
  }
  return g;
}

DependencyGraph dependency_graph(const Pattern& p) {
  require_valid(p);
  if (!is_emc(p)) {
    throw std::invalid_argument("dependency graph needs a standard (EMC) pattern");
  }
  DependencyGraph g;
  std::map<QubitId, std::size_t> node_of;
  // Measurements whose outcomes feed the recorded value of each qubit.
  std::map<QubitId, std::set<QubitId>> sources;
  auto sources_of = [&](const Signal& s) {
    std::set<QubitId> out;
    for (const auto& q : s.support()) {
      const auto& src = sources.at(q);
      out.insert(src.begin(), src.end());
    }
    return out;
  };
  for (const auto& c : p.sequence()) {
    if (const auto* sh = std::get_if<Shift>(&c)) {
      for (const auto& q : sources_of(sh->signal)) {
        sources[sh->qubit].insert(q);
      }
      continue;
    }
    if (is_entangle(c)) {
      continue;
    }
    std::set<QubitId> deps;
    for (const auto& s : signals_of(c)) {
      for (const auto& q : sources_of(s)) {
        deps.insert(q);
      }
    }
    const std::size_t k = g.nodes.size();
    std::size_t layer = 1;
    for (const auto& q : deps) {
      const std::size_t from = node_of.at(q);
      g.edges.emplace_back(from, k);
      layer = std::max(layer, g.layer[from] + 1);
    }
    g.nodes.push_back(c);
    g.layer.push_back(layer);
    if (const auto* m = std::get_if<Measure>(&c)) {
      node_of[m->qubit()] = k;
      sources[m->qubit()] = {m->qubit()};
    }
  }
  return g;
}

std::size_t depth(const Pattern& p) {
  const DependencyGraph g = dependency_graph(p);
  return g.layer.empty() ? 0 : *std::max_element(g.layer.begin(), g.layer.end());
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
    }
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const EntanglementGraph& g) {
  std::ostringstream out;
  out << "graph entanglement {\n";
  for (const auto& v : g.vertices) {
    out << "  " << quoted(v.label()) << ";\n";
  }
  for (const auto& [a, b] : g.edges) {
    out << "  " << quoted(a.label()) << " -- " << quoted(b.label()) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DependencyGraph& g) {
  std::ostringstream out;
  out << "digraph dependency {\n  rankdir=LR;\n";
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    out << "  n" << k << " [label=" << quoted(to_string(g.nodes[k])) << ", layer=" << g.layer[k]
        << "];\n";
  }
  for (const auto& [a, b] : g.edges) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mbqc
