#pragma once

// Exact vertex connectivity of small simple graphs via unit-vertex-capacity
// max-flow (vertex splitting + BFS augmenting paths).

#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace fliplab {

class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  explicit SimpleGraph(int n_ = 0) : n(n_), adj(n_) {}
  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  bool connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++cnt;
      for (int w : adj[v])
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    return cnt == n;
  }
};

namespace detail {

// max-flow from s to t in the vertex-split network; equals the minimum
// number of vertices (other than s,t) whose removal separates s from t,
// for non-adjacent s,t (Menger).
inline int vertex_capacity_flow(const SimpleGraph& g, int s, int t) {
  // node 2i = "in" side of vertex i, 2i+1 = "out" side
  const int N = 2 * g.n;
  struct Arc {
    int to, cap;
    size_t rev;
  };
  std::vector<std::vector<Arc>> net(N);
  auto add_arc = [&](int u, int v, int cap) {
    net[u].push_back({v, cap, net[v].size()});
    net[v].push_back({u, 0, net[u].size() - 1});
  };
  for (int i = 0; i < g.n; ++i)
    add_arc(2 * i, 2 * i + 1, (i == s || i == t) ? g.n : 1);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) {
        add_arc(2 * u + 1, 2 * v, 1);
        add_arc(2 * v + 1, 2 * u, 1);
      }
  const int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<std::pair<int, int>> parent(N, {-1, -1});  // node, arc index
    std::queue<int> q;
    q.push(src);
    parent[src] = {src, -1};
    while (!q.empty() && parent[dst].first < 0) {
      int u = q.front();
      q.pop();
      for (size_t a = 0; a < net[u].size(); ++a) {
        const Arc& arc = net[u][a];
        if (arc.cap > 0 && parent[arc.to].first < 0) {
          parent[arc.to] = {u, static_cast<int>(a)};
          q.push(arc.to);
        }
      }
    }
    if (parent[dst].first < 0) break;
    for (int v = dst; v != src;) {
      auto [u, ai] = parent[v];
      net[u][ai].cap -= 1;
      net[net[u][ai].to][net[u][ai].rev].cap += 1;
      v = u;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

// Exact vertex connectivity. A minimum cut either avoids some minimum-degree
// vertex v (found by a flow from v to a non-neighbor) or contains v, in which
// case v has neighbors in two components of the separated graph (found by a
// flow between two non-adjacent neighbors of v).
inline int vertex_connectivity(const SimpleGraph& g) {
  if (g.n < 2) throw DisconnectedError("connectivity needs >= 2 vertices");
  if (!g.connected()) throw DisconnectedError("graph is disconnected");
  std::vector<std::vector<char>> adj_m(g.n, std::vector<char>(g.n, 0));
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) adj_m[u][v] = 1;
  int v0 = 0;
  for (int u = 1; u < g.n; ++u)
    if (g.adj[u].size() < g.adj[v0].size()) v0 = u;
  int best = static_cast<int>(g.adj[v0].size());
  bool complete = best == g.n - 1;
  if (complete) return g.n - 1;
  for (int u = 0; u < g.n; ++u)
    if (u != v0 && !adj_m[v0][u])
      best = std::min(best, detail::vertex_capacity_flow(g, v0, u));
  for (size_t i = 0; i < g.adj[v0].size(); ++i)
    for (size_t j = i + 1; j < g.adj[v0].size(); ++j) {
      int a = g.adj[v0][i], b = g.adj[v0][j];
      if (!adj_m[a][b])
        best = std::min(best, detail::vertex_capacity_flow(g, a, b));
    }
  return best;
}

// Maximum number of internally vertex-disjoint paths between two distinct
// vertices (adjacent pairs count the direct edge plus disjoint detours).
inline int disjoint_paths(const SimpleGraph& g, int s, int t) {
  bool adjacent = false;
  for (int w : g.adj[s]) adjacent |= (w == t);
  if (!adjacent) return detail::vertex_capacity_flow(g, s, t);
  SimpleGraph h(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v && !(u == std::min(s, t) && v == std::max(s, t))) h.add_edge(u, v);
  return 1 + detail::vertex_capacity_flow(h, s, t);
}

}  // namespace fliplab
