#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbqc/pattern.hpp"

namespace mbqc {

/// Vertices V, one undirected edge per distinct E_ij of the sequence.
struct EntanglementGraph {
  std::vector<QubitId> vertices;
  std::vector<std::pair<QubitId, QubitId>> edges;
};

EntanglementGraph entanglement_graph(const Pattern& p);

/// Measurement and correction commands of a standard pattern, with an edge
/// from the measurement of `i` to each command whose signals read `s_i`
/// (directly, or through a shift of `s_i`). `layer[k]` is the round in which
/// node `k` can run, starting at 1.
struct DependencyGraph {
  std::vector<Command> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> layer;
};

/// Throws std::invalid_argument unless `p` is runnable and in EMC form.
DependencyGraph dependency_graph(const Pattern& p);

/// Number of measurement/correction rounds, 0 for a pattern with neither.
std::size_t depth(const Pattern& p);

std::string to_dot(const EntanglementGraph& g);
std::string to_dot(const DependencyGraph& g);

}  // namespace mbqc
