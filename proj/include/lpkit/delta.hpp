#ifndef LPKIT_DELTA_HPP
#define LPKIT_DELTA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lpkit/system.hpp"

namespace lpkit {

/// Simple undirected graph on vertices 0..n-1 (no loops).
class DeltaGraph {
 public:
  explicit DeltaGraph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  bool adjacent(int i, int j) const { return adj_[index(i, j)] != 0; }
  void connect(int i, int j);

  int degree(int i) const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int i) const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const DeltaGraph&, const DeltaGraph&) = default;

 private:
  int n_;
  std::vector<char> adj_;

  std::size_t index(int i, int j) const;
};

/// i ~ j iff i != j and E_i A* E_j != 0. Also checks that the relation is
/// symmetric (E_i A* E_j = 0 exactly when E_j A* E_i = 0).
template <class S>
DeltaGraph build_delta(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec);

bool is_connected(const DeltaGraph& g);

/// Vertex order along the path when g is a path, starting from the endpoint
/// with the smaller label; std::nullopt otherwise. A single vertex is a path.
std::optional<std::vector<int>> path_order(const DeltaGraph& g);

/// Vertices of degree at most one (isolated vertices included).
std::vector<int> leaves(const DeltaGraph& g);

/// Whether U = sum_{h in subset} E_h V satisfies A* U ⊆ U, decided by a rank
/// test on [U | A* U].
template <class S>
bool astar_invariance(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, const std::vector<int>& subset);

}  // namespace lpkit

#endif  // LPKIT_DELTA_HPP
