#include "lpkit/delta.hpp"

#include <algorithm>

namespace lpkit {

std::size_t DeltaGraph::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

void DeltaGraph::connect(int i, int j) {
  if (i == j) throw Error(ErrorKind::EqualIndices, "loops are not allowed", i);
  adj_[index(i, j)] = 1;
  adj_[index(j, i)] = 1;
}

int DeltaGraph::degree(int i) const {
  int deg = 0;
  for (int j = 0; j < n_; ++j) deg += adjacent(i, j);
  return deg;
}

std::vector<int> DeltaGraph::degrees() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) out.push_back(degree(i));
  return out;
}

std::vector<int> DeltaGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

std::vector<std::pair<int, int>> DeltaGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

template <class S>
DeltaGraph build_delta(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec) {
  auto [A, Astar] = realize_matrices(sys);
  const int n = spec.size();
  if (n != sys.d() + 1) throw Error(ErrorKind::ShapeMismatch, "spectrum size does not match the system");
  std::vector<Matrix<S>> left;
  for (const auto& E : spec.E) left.push_back(E * Astar);
  std::vector<char> nonzero(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) nonzero[i * n + j] = !is_zero(left[i] * spec.E[j]);

  DeltaGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ensure(nonzero[i * n + j] == nonzero[j * n + i], "E_i A* E_j and E_j A* E_i disagree on vanishing");
      if (nonzero[i * n + j]) g.connect(i, j);
    }
  return g;
}

bool is_connected(const DeltaGraph& g) {
  if (g.size() <= 1) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.size();
}

std::optional<std::vector<int>> path_order(const DeltaGraph& g) {
  const int n = g.size();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<int>{0};
  if (static_cast<int>(g.edges().size()) != n - 1 || !is_connected(g)) return std::nullopt;
  auto deg = g.degrees();
  if (std::any_of(deg.begin(), deg.end(), [](int k) { return k > 2; })) return std::nullopt;
  int start = static_cast<int>(std::find(deg.begin(), deg.end(), 1) - deg.begin());
  std::vector<int> order{start};
  int prev = -1;
  while (static_cast<int>(order.size()) < n) {
    int cur = order.back();
    for (int w : g.neighbors(cur))
      if (w != prev) {
        prev = cur;
        order.push_back(w);
        break;
      }
  }
  return order;
}

std::vector<int> leaves(const DeltaGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i)
    if (g.degree(i) <= 1) out.push_back(i);
  return out;
}

template <class S>
bool astar_invariance(const TridiagonalSystem<S>& sys, const Spectrum<S>& spec, const std::vector<int>& subset) {
  auto [A, Astar] = realize_matrices(sys);
  const Index n = sys.d() + 1;
  if (subset.empty()) return true;
  Matrix<S> basis(n, n * static_cast<Index>(subset.size()));
  for (std::size_t k = 0; k < subset.size(); ++k) {
    int h = subset[k];
    if (h < 0 || h >= spec.size()) throw Error(ErrorKind::IndexOutOfRange, "subset vertex out of range", h);
    basis.middleCols(static_cast<Index>(k) * n, n) = spec.E[h];
  }
  Matrix<S> joined(n, 2 * basis.cols());
  joined.leftCols(basis.cols()) = basis;
  joined.rightCols(basis.cols()) = Astar * basis;
  return rank(joined) == rank(basis);
}

template DeltaGraph build_delta(const TridiagonalSystem<Rational>&, const Spectrum<Rational>&);
template DeltaGraph build_delta(const TridiagonalSystem<ModP>&, const Spectrum<ModP>&);
template bool astar_invariance(const TridiagonalSystem<Rational>&, const Spectrum<Rational>&, const std::vector<int>&);
template bool astar_invariance(const TridiagonalSystem<ModP>&, const Spectrum<ModP>&, const std::vector<int>&);

}  // namespace lpkit
