#include "frl/stallings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace frl {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b); // keep smaller id as root
  }
};

} // namespace

std::size_t SubgroupAutomaton::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : succ_)
    for (int t : row)
      if (t >= 0) ++n;
  return n;
}

SubgroupAutomaton SubgroupAutomaton::build(const std::vector<ReducedWord>& gens, int rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range");

  // Bouquet of loops at vertex 0.
  int next_vertex = 1;
  std::set<std::tuple<int, int, int>> edges; // (source, gen, target)
  for (const ReducedWord& g : gens) {
    if (g.is_identity()) continue;
    const auto& ls = g.letters();
    int cur = 0;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int to = (i + 1 == ls.size()) ? 0 : next_vertex++;
      Letter l = ls[i];
      if (l > 0)
        edges.insert({cur, l, to});
      else
        edges.insert({to, -l, cur});
      cur = to;
    }
  }

  // Fold to a fixpoint: merge the two targets (sources) of equal-labeled
  // edges leaving (entering) the same vertex, smallest conflict first.
  UnionFind uf(next_vertex);
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::tuple<int, int, int>> canon;
    for (const auto& [u, g, v] : edges) canon.insert({uf.find(u), g, uf.find(v)});
    edges = std::move(canon);

    std::map<std::pair<int, int>, int> out_seen, in_seen;
    std::pair<int, int> merge{-1, -1};
    for (const auto& [u, g, v] : edges) { // set order = (vertex, label, target) order
      if (auto [it, fresh] = out_seen.try_emplace({u, g}, v); !fresh) {
        merge = {it->second, v};
        break;
      }
    }
    if (merge.first < 0) {
      for (const auto& [u, g, v] : edges) {
        if (auto [it, fresh] = in_seen.try_emplace({v, g}, u); !fresh) {
          merge = {it->second, u};
          break;
        }
      }
    }
    if (merge.first >= 0) {
      uf.unite(merge.first, merge.second);
      changed = true;
    }
  }

  std::vector<std::tuple<int, int, int>> edge_list(edges.begin(), edges.end());
  return canonicalize(rank, uf.find(0), std::move(edge_list), next_vertex);
}

SubgroupAutomaton SubgroupAutomaton::canonicalize(int rank, int base,
                                                  std::vector<std::tuple<int, int, int>> edge_list,
                                                  int vertex_count) {
  // Trim to core: drop non-base vertices of degree <= 1 until stable.
  std::vector<int> degree(vertex_count, 0);
  std::vector<bool> dead(vertex_count, false);
  for (const auto& [u, g, v] : edge_list) {
    ++degree[u];
    ++degree[v];
  }
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v = 0; v < vertex_count; ++v) {
      if (v == base || dead[v] || degree[v] > 1) continue;
      dead[v] = true;
      shrunk = true;
      for (auto& [a, g, b] : edge_list) {
        if (g == 0) continue;
        if (a == v || b == v) {
          --degree[a];
          --degree[b];
          g = 0; // tombstone
        }
      }
    }
  }
  std::erase_if(edge_list, [](const auto& e) { return std::get<1>(e) == 0; });

  // BFS renumbering from the base: for each vertex, labels ascending,
  // out-edge before in-edge.
  std::map<std::pair<int, int>, int> out, in;
  for (const auto& [u, g, v] : edge_list) {
    out[{u, g}] = v;
    in[{v, g}] = u;
  }
  std::vector<int> number(vertex_count, -1);
  std::vector<int> order;
  number[base] = 0;
  order.push_back(base);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int g = 1; g <= rank; ++g) {
      if (auto it = out.find({v, g}); it != out.end() && number[it->second] < 0) {
        number[it->second] = static_cast<int>(order.size());
        order.push_back(it->second);
      }
      if (auto it = in.find({v, g}); it != in.end() && number[it->second] < 0) {
        number[it->second] = static_cast<int>(order.size());
        order.push_back(it->second);
      }
    }
  }

  SubgroupAutomaton a;
  a.rank_ = rank;
  a.succ_.assign(order.size(), std::vector<int>(rank, -1));
  a.pred_.assign(order.size(), std::vector<int>(rank, -1));
  for (const auto& [u, g, v] : edge_list) {
    a.succ_[number[u]][g - 1] = number[v];
    a.pred_[number[v]][g - 1] = number[u];
  }
  return a;
}

bool SubgroupAutomaton::member(const ReducedWord& w) const {
  int cur = 0;
  for (Letter l : w.letters()) {
    cur = l > 0 ? succ_[cur][l - 1] : pred_[cur][-l - 1];
    if (cur < 0) return false;
  }
  return cur == 0;
}

SubgroupAutomaton SubgroupAutomaton::intersect(const SubgroupAutomaton& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("rank mismatch");

  std::map<std::pair<int, int>, int> id; // vertex pair -> product vertex
  std::vector<std::pair<int, int>> pairs{{0, 0}};
  id[{0, 0}] = 0;
  std::vector<std::tuple<int, int, int>> edge_list;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u1, u2] = pairs[i];
    for (int g = 1; g <= rank_; ++g) {
      int v1 = succ_[u1][g - 1], v2 = other.succ_[u2][g - 1];
      if (v1 >= 0 && v2 >= 0) {
        auto [it, fresh] = id.try_emplace({v1, v2}, static_cast<int>(pairs.size()));
        if (fresh) pairs.push_back({v1, v2});
        edge_list.push_back({static_cast<int>(i), g, it->second});
      }
      int w1 = pred_[u1][g - 1], w2 = other.pred_[u2][g - 1];
      if (w1 >= 0 && w2 >= 0) {
        auto [it, fresh] = id.try_emplace({w1, w2}, static_cast<int>(pairs.size()));
        if (fresh) pairs.push_back({w1, w2});
        edge_list.push_back({it->second, g, static_cast<int>(i)});
      }
    }
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  return canonicalize(rank_, 0, std::move(edge_list), static_cast<int>(pairs.size()));
}

std::vector<ReducedWord> SubgroupAutomaton::basis() const {
  // BFS spanning tree in canonical order; vertices are already in BFS
  // order, so path words are geodesic in the graph.
  std::vector<ReducedWord> path(vertex_count());
  std::vector<bool> visited(vertex_count(), false);
  std::set<std::tuple<int, int, int>> tree;
  std::vector<int> order{0};
  visited[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int g = 1; g <= rank_; ++g) {
      int s = succ_[v][g - 1];
      if (s >= 0 && !visited[s]) {
        visited[s] = true;
        tree.insert({v, g, s});
        path[s] = path[v] * ReducedWord::generator(g);
        order.push_back(s);
      }
      int p = pred_[v][g - 1];
      if (p >= 0 && !visited[p]) {
        visited[p] = true;
        tree.insert({p, g, v});
        path[p] = path[v] * ReducedWord::generator(g, true);
        order.push_back(p);
      }
    }
  }

  std::vector<ReducedWord> out;
  for (int u = 0; u < static_cast<int>(vertex_count()); ++u) {
    for (int g = 1; g <= rank_; ++g) {
      int v = succ_[u][g - 1];
      if (v < 0 || tree.count({u, g, v})) continue;
      out.push_back(path[u] * ReducedWord::generator(g) * path[v].inverse());
    }
  }
  return out;
}

std::vector<std::tuple<int, int, int>> SubgroupAutomaton::edges() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int u = 0; u < static_cast<int>(vertex_count()); ++u)
    for (int g = 1; g <= rank_; ++g)
      if (succ_[u][g - 1] >= 0) out.push_back({u, g, succ_[u][g - 1]});
  return out;
}

} // namespace frl
