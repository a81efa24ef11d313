#include "swb/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace swb {

namespace {

// Small union-find over arbitrary int ids.
struct dsu {
  std::map<int, int> parent;
  void add(int v) { parent.emplace(v, v); }
  int find(int v) {
    int r = v;
    while (parent[r] != r) r = parent[r];
    while (parent[v] != r) {
      int n = parent[v];
      parent[v] = r;
      v = n;
    }
    return r;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ordered_graph::ordered_graph(vertex_set v, edge_set e)
    : vertices(std::move(v)), edges(std::move(e)) {
  require(std::is_sorted(vertices.begin(), vertices.end()) &&
              std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end(),
          "BadGraph", "vertex set must be strictly increasing");
  for (const auto& [a, b] : edges) {
    require(a < b, "BadGraph", "edge endpoints must be ordered and distinct");
    require(has_vertex(a) && has_vertex(b), "BadGraph", "edge endpoint outside vertex set");
  }
}

bool ordered_graph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::size_t ordered_graph::degree(int v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges)
    if (a == v || b == v) d++;
  return d;
}

ordered_graph reverse_order(const ordered_graph& g) {
  // rank i from the bottom becomes rank i from the top
  std::map<int, int> m;
  std::size_t n = g.vertices.size();
  for (std::size_t i = 0; i < n; i++) m[g.vertices[i]] = g.vertices[n - 1 - i];
  ordered_graph r;
  r.vertices = g.vertices;
  for (const auto& [a, b] : g.edges) r.edges.insert(mk_edge(m[a], m[b]));
  return r;
}

std::vector<vertex_set> component_vertex_sets(const ordered_graph& g) {
  dsu d;
  for (int v : g.vertices) d.add(v);
  for (const auto& [a, b] : g.edges) d.unite(a, b);
  std::map<int, vertex_set> by_root;
  for (int v : g.vertices) by_root[d.find(v)].push_back(v);
  std::vector<vertex_set> out;
  std::map<int, vertex_set> by_min;
  for (auto& [root, vs] : by_root) by_min[vs.front()] = vs;
  for (auto& [mn, vs] : by_min) out.push_back(vs);
  return out;
}

std::vector<ordered_graph> components(const ordered_graph& g) {
  std::vector<ordered_graph> out;
  for (auto& vs : component_vertex_sets(g)) {
    ordered_graph c;
    c.vertices = vs;
    for (const auto& e : g.edges)
      if (std::binary_search(vs.begin(), vs.end(), e.first)) {
        if (std::binary_search(vs.begin(), vs.end(), e.second)) c.edges.insert(e);
      }
    out.push_back(std::move(c));
  }
  return out;
}

int component_count(const ordered_graph& g) {
  return static_cast<int>(component_vertex_sets(g).size());
}

ordered_graph contract(const ordered_graph& g, const vertex_set& u) {
  for (int v : u)
    require(g.has_vertex(v), "BadContraction", "contraction set outside vertex set");
  auto in_u = [&](int v) { return std::binary_search(u.begin(), u.end(), v); };

  ordered_graph out;
  for (int v : g.vertices)
    if (!in_u(v)) out.vertices.push_back(v);

  // union-find inside u; adjacency vertices attach to u-pieces
  dsu d;
  for (int v : u) d.add(v);
  std::map<int, vertex_set> piece_adj;  // u-root -> adjacent outside vertices
  for (const auto& [a, b] : g.edges) {
    bool ia = in_u(a), ib = in_u(b);
    if (ia && ib)
      d.unite(a, b);
    else if (!ia && !ib)
      out.edges.insert({a, b});
  }
  for (const auto& [a, b] : g.edges) {
    bool ia = in_u(a), ib = in_u(b);
    if (ia != ib) piece_adj[d.find(ia ? a : b)].push_back(ia ? b : a);
  }
  for (auto& [root, adj] : piece_adj) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    for (std::size_t i = 0; i < adj.size(); i++)
      for (std::size_t j = i + 1; j < adj.size(); j++) out.edges.insert({adj[i], adj[j]});
  }
  return out;
}

int index_of(const ordered_graph& g, const vertex_set& u) {
  return component_count(g) - component_count(contract(g, u));
}

pair_partition::pair_partition(vertex_set g, std::vector<edge> p)
    : ground(std::move(g)), parts(std::move(p)) {
  require(ground.size() % 2 == 0, "BadPartition", "ground set must have even size");
  std::vector<int> seen;
  for (auto& [a, b] : parts) {
    require(a < b, "BadPartition", "part endpoints must be ordered and distinct");
    seen.push_back(a);
    seen.push_back(b);
  }
  std::sort(seen.begin(), seen.end());
  require(seen == ground, "BadPartition", "parts must cover the ground set exactly once");
  std::sort(parts.begin(), parts.end());
}

bool parts_cross(const edge& p, const edge& q) {
  return (p.first < q.first && q.first < p.second && p.second < q.second) ||
         (q.first < p.first && p.first < q.second && q.second < p.second);
}

bool is_crossingless(const pair_partition& p) {
  for (std::size_t i = 0; i < p.parts.size(); i++)
    for (std::size_t j = i + 1; j < p.parts.size(); j++)
      if (parts_cross(p.parts[i], p.parts[j])) return false;
  return true;
}

degree2_classification classify_degree_le2(const ordered_graph& g) {
  for (int v : g.vertices)
    require(g.degree(v) <= 2, "DegreeTooHigh",
            "vertex " + std::to_string(v) + " has degree >= 3");
  degree2_classification out;
  for (auto& comp : components(g)) {
    degree2_piece piece;
    piece.vertices = comp.vertices;
    vertex_set deg1;
    for (int v : comp.vertices)
      if (comp.degree(v) == 1) deg1.push_back(v);
    if (comp.vertices.size() == 1 && comp.edges.empty()) {
      // length-0 path; its vertex has degree 0, so it joins no endpoint pair
      piece.kind = piece_kind::path;
      piece.endpoints = {comp.vertices[0], comp.vertices[0]};
    } else if (deg1.empty()) {
      piece.kind = piece_kind::cycle;
    } else {
      // a degree<=2 connected graph with degree-1 vertices has exactly two
      piece.kind = piece_kind::path;
      piece.endpoints = {deg1[0], deg1[1]};
      out.endpoint_pairing.push_back({deg1[0], deg1[1]});
    }
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

ordered_graph relabel(const ordered_graph& g, const std::vector<std::pair<int, int>>& map) {
  std::map<int, int> m(map.begin(), map.end());
  auto img = [&](int v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  vertex_set vs;
  for (int v : g.vertices) vs.push_back(img(v));
  std::sort(vs.begin(), vs.end());
  require(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), "BadRelabel",
          "relabeling must be injective");
  edge_set es;
  for (const auto& [a, b] : g.edges) es.insert(mk_edge(img(a), img(b)));
  return ordered_graph(std::move(vs), std::move(es));
}

}  // namespace swb
