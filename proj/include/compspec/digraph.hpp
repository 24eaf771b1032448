#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "compspec/errors.hpp"

namespace compspec {

using Arc = std::pair<int, int>;

/// Finite simple digraph on vertices 0..n-1. Immutable after construction:
/// no self-loops, no duplicate arcs, every endpoint in range.
class Digraph {
 public:
  Digraph() = default;  // the empty digraph (n = 0)

  /// Validating constructor. Duplicate arcs collapse; self-loops and
  /// out-of-range endpoints are rejected.
  static Digraph from_arc_list(int n, std::vector<Arc> arcs) {
    if (n < 0) throw BadParamsError("vertex count must be nonnegative");
    for (const auto& [u, v] : arcs) {
      if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
      if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
      if (u == v) throw SelfLoopError(u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    Digraph d;
    d.n_ = n;
    d.arcs_ = std::move(arcs);
    d.out_.assign(n, {});
    d.in_.assign(n, {});
    for (const auto& [u, v] : d.arcs_) {
      d.out_[u].push_back(v);
      d.in_[v].push_back(u);
    }
    for (auto& nb : d.in_) std::sort(nb.begin(), nb.end());
    return d;
  }

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  /// Sorted, duplicate-free arc list.
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Out-neighbors of v, ascending.
  const std::vector<int>& out(int v) const {
    check_vertex(v);
    return out_[v];
  }

  /// In-neighbors of v, ascending.
  const std::vector<int>& in(int v) const {
    check_vertex(v);
    return in_[v];
  }

  int out_degree(int v) const { return static_cast<int>(out(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in(v).size()); }

  bool has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
  }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

inline Digraph from_arc_list(int n, std::vector<Arc> arcs) {
  return Digraph::from_arc_list(n, std::move(arcs));
}

/// Induced subdigraph together with the relabeling it used:
/// vertex_map[new_label] = old_label.
struct InducedSubdigraph {
  Digraph digraph;
  std::vector<int> vertex_map;
};

/// Subdigraph induced by `vertices` (kept in the given order, relabeled
/// 0..|S|-1), with exactly the arcs of `d` inside the set.
inline InducedSubdigraph induced_subdigraph(const Digraph& d,
                                            const std::vector<int>& vertices) {
  const int n = d.vertex_count();
  std::vector<int> new_label(n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
    if (new_label[v] != -1)
      throw BadParamsError("vertex set contains vertex " + std::to_string(v) +
                           " twice");
    new_label[v] = static_cast<int>(i);
  }
  std::vector<Arc> arcs;
  for (const auto& [u, v] : d.arcs())
    if (new_label[u] != -1 && new_label[v] != -1)
      arcs.emplace_back(new_label[u], new_label[v]);
  return {Digraph::from_arc_list(static_cast<int>(vertices.size()),
                                 std::move(arcs)),
          vertices};
}

/// Strongly connected components in a topological order of the condensation:
/// arcs only run from earlier components to later ones. Vertices inside each
/// component are ascending. Output is deterministic for a fixed input.
struct SccDecomposition {
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;  // vertex -> index into components
};

inline SccDecomposition scc_decompose(const Digraph& d) {
  const int n = d.vertex_count();
  SccDecomposition result;
  result.component_of.assign(n, -1);
  if (n == 0) return result;

  // Iterative Tarjan; discovery emits components in reverse topological
  // order, so the list is reversed at the end.
  std::vector<int> index(n, -1), lowlink(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<int, std::size_t>> work;  // (vertex, next child idx)
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    work.emplace_back(root, 0);
    while (!work.empty()) {
      auto& [v, child] = work.back();
      if (child == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      const auto& nb = d.out(v);
      while (child < nb.size()) {
        const int w = nb[child];
        ++child;
        if (index[w] == -1) {
          work.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[v] = std::min(lowlink[v], index[w]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        std::vector<int> comp;
        for (;;) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
          if (w == v) break;
        }
        std::sort(comp.begin(), comp.end());
        result.components.push_back(std::move(comp));
      }
      const int finished = v;
      work.pop_back();
      if (!work.empty()) {
        const int parent = work.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
      }
    }
  }

  std::reverse(result.components.begin(), result.components.end());
  for (std::size_t i = 0; i < result.components.size(); ++i)
    for (int v : result.components[i])
      result.component_of[v] = static_cast<int>(i);
  return result;
}

inline bool is_strongly_connected(const Digraph& d) {
  if (d.vertex_count() == 0) throw EmptyGraphError();
  return scc_decompose(d).components.size() == 1;
}

/// True iff every strongly connected component is a singleton.
inline bool is_acyclic(const Digraph& d) {
  for (const auto& comp : scc_decompose(d).components)
    if (comp.size() >= 2) return false;
  return true;
}

/// True iff d is a directed cycle: strongly connected, n >= 2, and every
/// vertex has in- and out-degree exactly 1. A single vertex is not a cycle.
inline bool is_cycle(const Digraph& d) {
  const int n = d.vertex_count();
  if (n == 0) throw EmptyGraphError();
  if (n < 2 || d.arc_count() != n) return false;
  for (int v = 0; v < n; ++v)
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
  return is_strongly_connected(d);
}

/// Digraph on the remaining n-1 vertices, relabeled by order.
inline Digraph delete_vertex(const Digraph& d, int v) {
  const int n = d.vertex_count();
  if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
  std::vector<int> keep;
  keep.reserve(n - 1);
  for (int u = 0; u < n; ++u)
    if (u != v) keep.push_back(u);
  return induced_subdigraph(d, keep).digraph;
}

}  // namespace compspec
