#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ftpres {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable directed graph. Vertex ids are exactly 0..n-1. Edge ids are the
// positions in the canonical edge order (sorted by (tail, head)), so any two
// graphs built from the same edge set agree on ids. Self-loops and parallel
// edges are rejected. Instances never mutate after construction and are safe
// to share across threads.
class DiGraph {
 public:
  DiGraph() = default;

  DiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("DiGraph: negative vertex count");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
        throw std::invalid_argument("DiGraph: vertex id out of range");
      if (e.tail == e.head) throw std::invalid_argument("DiGraph: self-loop");
      if (i > 0 && edges_[i - 1] == e)
        throw std::invalid_argument("DiGraph: duplicate edge");
    }
    build_adjacency();
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids leaving v, ascending (hence ascending head).
  std::span<const EdgeId> out_edges(Vertex v) const {
    return {out_ids_.data() + out_off_[static_cast<std::size_t>(v)],
            out_ids_.data() + out_off_[static_cast<std::size_t>(v) + 1]};
  }

  // Edge ids entering v, ascending (hence ascending tail).
  std::span<const EdgeId> in_edges(Vertex v) const {
    return {in_ids_.data() + in_off_[static_cast<std::size_t>(v)],
            in_ids_.data() + in_off_[static_cast<std::size_t>(v) + 1]};
  }

  std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const {
    Edge probe{tail, head};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it == edges_.end() || !(*it == probe)) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

 private:
  void build_adjacency() {
    const std::size_t n = static_cast<std::size_t>(n_);
    const std::size_t m = edges_.size();
    out_off_.assign(n + 1, 0);
    in_off_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
      ++out_off_[static_cast<std::size_t>(e.tail) + 1];
      ++in_off_[static_cast<std::size_t>(e.head) + 1];
    }
    for (std::size_t v = 0; v < n; ++v) {
      out_off_[v + 1] += out_off_[v];
      in_off_[v + 1] += in_off_[v];
    }
    out_ids_.resize(m);
    in_ids_.resize(m);
    std::vector<int> cursor(in_off_.begin(), in_off_.end() - 1);
    for (std::size_t e = 0; e < m; ++e) {
      out_ids_[e] = static_cast<EdgeId>(e);  // edges are tail-sorted already
      in_ids_[static_cast<std::size_t>(
          cursor[static_cast<std::size_t>(edges_[e].head)]++)] =
          static_cast<EdgeId>(e);
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_off_, in_off_;
  std::vector<EdgeId> out_ids_, in_ids_;
};

// Non-owning filtered view of a DiGraph: an optional edge mask, an optional
// vertex mask, and a small list of explicitly removed edges (the H - F view
// used throughout the verifiers). Copyable by value; the masks must outlive
// the view.
class GraphView {
 public:
  static constexpr int kMaxRemoved = 8;

  explicit GraphView(const DiGraph& g) : g_(&g) {}
  GraphView(const DiGraph& g, const std::vector<char>* edge_mask,
            const std::vector<char>* vertex_mask = nullptr)
      : g_(&g), edge_mask_(edge_mask), vertex_mask_(vertex_mask) {}

  const DiGraph& graph() const { return *g_; }
  int vertex_count() const { return g_->vertex_count(); }
  int edge_count() const { return g_->edge_count(); }

  bool vertex_alive(Vertex v) const {
    return vertex_mask_ == nullptr || (*vertex_mask_)[static_cast<std::size_t>(v)];
  }

  bool edge_alive(EdgeId e) const {
    if (edge_mask_ != nullptr && !(*edge_mask_)[static_cast<std::size_t>(e)])
      return false;
    for (int i = 0; i < removed_count_; ++i)
      if (removed_[static_cast<std::size_t>(i)] == e) return false;
    if (vertex_mask_ != nullptr) {
      const Edge& ed = g_->edge(e);
      if (!vertex_alive(ed.tail) || !vertex_alive(ed.head)) return false;
    }
    return true;
  }

  GraphView minus(EdgeId e) const {
    GraphView v = *this;
    v.push_removed(e);
    return v;
  }

  GraphView minus(std::span<const EdgeId> es) const {
    GraphView v = *this;
    for (EdgeId e : es) v.push_removed(e);
    return v;
  }

  std::vector<EdgeId> alive_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g_->edge_count(); ++e)
      if (edge_alive(e)) out.push_back(e);
    return out;
  }

 private:
  void push_removed(EdgeId e) {
    if (removed_count_ >= kMaxRemoved)
      throw std::length_error("GraphView: removed-edge list overflow");
    removed_[static_cast<std::size_t>(removed_count_++)] = e;
  }

  const DiGraph* g_;
  const std::vector<char>* edge_mask_ = nullptr;
  const std::vector<char>* vertex_mask_ = nullptr;
  std::array<EdgeId, kMaxRemoved> removed_{};
  int removed_count_ = 0;
};

// Edge-mask subgraph over a shared parent. The vertex set is the parent's;
// edge ids always refer to parent ids.
class Subgraph {
 public:
  Subgraph() = default;
  Subgraph(const DiGraph& parent, std::vector<char> mask)
      : parent_(&parent), mask_(std::move(mask)) {
    if (mask_.size() != static_cast<std::size_t>(parent.edge_count()))
      throw std::invalid_argument("Subgraph: mask size mismatch");
    count_ = static_cast<int>(std::count(mask_.begin(), mask_.end(), char{1}));
  }

  static Subgraph full(const DiGraph& parent) {
    return Subgraph(parent,
                    std::vector<char>(static_cast<std::size_t>(parent.edge_count()), 1));
  }

  static Subgraph from_edges(const DiGraph& parent, std::span<const EdgeId> ids) {
    std::vector<char> mask(static_cast<std::size_t>(parent.edge_count()), 0);
    for (EdgeId e : ids) {
      if (e < 0 || e >= parent.edge_count())
        throw std::invalid_argument("Subgraph: edge id out of range");
      mask[static_cast<std::size_t>(e)] = 1;
    }
    return Subgraph(parent, std::move(mask));
  }

  const DiGraph& parent() const { return *parent_; }
  bool has_parent(const DiGraph& g) const { return parent_ == &g; }
  int edge_count() const { return count_; }
  bool contains(EdgeId e) const { return mask_[static_cast<std::size_t>(e)] != 0; }
  const std::vector<char>& mask() const { return mask_; }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(static_cast<std::size_t>(count_));
    for (EdgeId e = 0; e < parent_->edge_count(); ++e)
      if (mask_[static_cast<std::size_t>(e)]) ids.push_back(e);
    return ids;
  }

  GraphView view() const { return GraphView(*parent_, &mask_); }

  Subgraph without(EdgeId e) const {
    std::vector<char> m = mask_;
    m[static_cast<std::size_t>(e)] = 0;
    return Subgraph(*parent_, std::move(m));
  }

 private:
  const DiGraph* parent_ = nullptr;
  std::vector<char> mask_;
  int count_ = 0;
};

// Partition of the vertex set into strongly connected components. Component
// ids are canonical: components are numbered in increasing order of their
// smallest vertex, so two partitions over the same vertex set are equal iff
// component_of matches.
struct SccPartition {
  std::vector<int> component_of;
  std::vector<std::vector<Vertex>> components;

  bool same_component(Vertex u, Vertex v) const {
    return component_of[static_cast<std::size_t>(u)] ==
           component_of[static_cast<std::size_t>(v)];
  }

  friend bool operator==(const SccPartition& a, const SccPartition& b) {
    return a.component_of == b.component_of;
  }
};

namespace detail {

// Iterative Tarjan; vertices visited in ascending id, out-edges in ascending
// edge id. Vertices hidden by a vertex mask simply have no alive edges and
// come out as singletons.
inline SccPartition tarjan(const GraphView& g) {
  const int n = g.vertex_count();
  constexpr int kUnvisited = -1;
  std::vector<int> index(static_cast<std::size_t>(n), kUnvisited);
  std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> raw;
  int next_index = 0;

  struct Frame {
    Vertex v;
    std::size_t edge_pos;
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != kUnvisited) continue;
    call.push_back({root, 0});
    index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] =
        next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto out = g.graph().out_edges(f.v);
      bool descended = false;
      while (f.edge_pos < out.size()) {
        EdgeId e = out[f.edge_pos++];
        if (!g.edge_alive(e)) continue;
        Vertex w = g.graph().edge(e).head;
        if (index[static_cast<std::size_t>(w)] == kUnvisited) {
          index[static_cast<std::size_t>(w)] =
              lowlink[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = 1;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<std::size_t>(w)]) {
          lowlink[static_cast<std::size_t>(f.v)] =
              std::min(lowlink[static_cast<std::size_t>(f.v)],
                       index[static_cast<std::size_t>(w)]);
        }
      }
      if (descended) continue;
      // f.v is finished.
      if (lowlink[static_cast<std::size_t>(f.v)] ==
          index[static_cast<std::size_t>(f.v)]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != f.v);
        raw.push_back(std::move(comp));
      }
      Vertex done = f.v;
      call.pop_back();
      if (!call.empty()) {
        Vertex parent = call.back().v;
        lowlink[static_cast<std::size_t>(parent)] =
            std::min(lowlink[static_cast<std::size_t>(parent)],
                     lowlink[static_cast<std::size_t>(done)]);
      }
    }
  }

  for (auto& comp : raw) std::sort(comp.begin(), comp.end());
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccPartition part;
  part.components = std::move(raw);
  part.component_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t c = 0; c < part.components.size(); ++c)
    for (Vertex v : part.components[c])
      part.component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  return part;
}

}  // namespace detail

inline SccPartition scc_decompose(const GraphView& g) { return detail::tarjan(g); }
inline SccPartition scc_decompose(const DiGraph& g) {
  return detail::tarjan(GraphView(g));
}
inline SccPartition scc_decompose(const Subgraph& g) {
  return detail::tarjan(g.view());
}

// Forward reachability set from s, including s itself.
inline std::vector<char> reachable_from(const GraphView& g, Vertex s) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  if (!g.vertex_alive(s)) return seen;
  std::vector<Vertex> queue{s};
  seen[static_cast<std::size_t>(s)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex u = queue[qi];
    for (EdgeId e : g.graph().out_edges(u)) {
      if (!g.edge_alive(e)) continue;
      Vertex w = g.graph().edge(e).head;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

// Reverse variant: the set of vertices that can reach t (runs on the G^R view).
inline std::vector<char> reachable_to(const GraphView& g, Vertex t) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  if (!g.vertex_alive(t)) return seen;
  std::vector<Vertex> queue{t};
  seen[static_cast<std::size_t>(t)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex u = queue[qi];
    for (EdgeId e : g.graph().in_edges(u)) {
      if (!g.edge_alive(e)) continue;
      Vertex w = g.graph().edge(e).tail;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

inline bool reaches(const GraphView& g, Vertex s, Vertex t) {
  if (s == t) return g.vertex_alive(s);
  if (!g.vertex_alive(s)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> queue{s};
  seen[static_cast<std::size_t>(s)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex u = queue[qi];
    for (EdgeId e : g.graph().out_edges(u)) {
      if (!g.edge_alive(e)) continue;
      Vertex w = g.graph().edge(e).head;
      if (w == t) return true;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

// A walk as a vertex sequence plus the edge ids between consecutive vertices.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  bool valid() const { return !vertices.empty() && edges.size() + 1 == vertices.size(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
};

inline Path concat_paths(const Path& p, const Path& q) {
  if (!p.valid() || !q.valid())
    throw std::invalid_argument("concat_paths: malformed path");
  if (p.back() != q.front())
    throw std::invalid_argument("concat_paths: endpoint mismatch");
  Path r = p;
  r.vertices.insert(r.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  return r;
}

// Deterministic BFS path from s to t (queue order, out-edges ascending).
inline std::optional<Path> bfs_path(const GraphView& g, Vertex s, Vertex t) {
  if (!g.vertex_alive(s) || !g.vertex_alive(t)) return std::nullopt;
  if (s == t) return Path{{s}, {}};
  const int n = g.vertex_count();
  std::vector<EdgeId> via(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue{s};
  seen[static_cast<std::size_t>(s)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex u = queue[qi];
    for (EdgeId e : g.graph().out_edges(u)) {
      if (!g.edge_alive(e)) continue;
      Vertex w = g.graph().edge(e).head;
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      via[static_cast<std::size_t>(w)] = e;
      if (w == t) {
        Path p;
        Vertex cur = t;
        while (cur != s) {
          EdgeId pe = via[static_cast<std::size_t>(cur)];
          p.edges.push_back(pe);
          p.vertices.push_back(cur);
          cur = g.graph().edge(pe).tail;
        }
        p.vertices.push_back(s);
        std::reverse(p.vertices.begin(), p.vertices.end());
        std::reverse(p.edges.begin(), p.edges.end());
        return p;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

// Edges whose single removal destroys all s->t paths. Every such edge lies on
// every s->t path, so it suffices to test the edges of one path. Result is
// ascending by edge id; empty when t is unreachable.
inline std::vector<EdgeId> cut_edges(const GraphView& g, Vertex s, Vertex t) {
  std::vector<EdgeId> cut;
  auto p = bfs_path(g, s, t);
  if (!p.has_value()) return cut;
  for (EdgeId e : p->edges)
    if (!reaches(g.minus(e), s, t)) cut.push_back(e);
  std::sort(cut.begin(), cut.end());
  return cut;
}

// Vertices (other than s and t) whose removal destroys all s->t paths. Such
// vertices lie on every s->t path, so testing one path's vertices suffices.
inline std::vector<Vertex> cut_vertices(const GraphView& g, Vertex s, Vertex t) {
  std::vector<Vertex> cut;
  auto p = bfs_path(g, s, t);
  if (!p.has_value()) return cut;
  for (Vertex v : p->vertices) {
    if (v == s || v == t) continue;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    bool found = false;
    for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
      Vertex u = queue[qi];
      for (EdgeId e : g.graph().out_edges(u)) {
        if (!g.edge_alive(e)) continue;
        Vertex w = g.graph().edge(e).head;
        if (w == v) continue;
        if (w == t) {
          found = true;
          break;
        }
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    if (!found) cut.push_back(v);
  }
  std::sort(cut.begin(), cut.end());
  return cut;
}

// Strong-connectivity certificate of a component: union of a BFS out-tree and
// a BFS in-tree rooted at the smallest vertex of c, inside the subgraph
// induced by c. At most 2(|c|-1) edges. Rejects c that is not strongly
// connected within the view.
inline std::vector<EdgeId> certificate(std::span<const Vertex> component,
                                       const GraphView& g) {
  if (component.empty())
    throw std::invalid_argument("certificate: empty component");
  const int n = g.vertex_count();
  std::vector<char> in_comp(static_cast<std::size_t>(n), 0);
  Vertex root = component[0];
  for (Vertex v : component) {
    if (v < 0 || v >= n) throw std::invalid_argument("certificate: bad vertex id");
    if (!g.vertex_alive(v))
      throw std::invalid_argument("certificate: vertex not in view");
    in_comp[static_cast<std::size_t>(v)] = 1;
    root = std::min(root, v);
  }

  std::vector<EdgeId> cert;
  std::size_t covered = 0;
  auto tree = [&](bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    std::size_t reached = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex u = queue[qi];
      auto adj = forward ? g.graph().out_edges(u) : g.graph().in_edges(u);
      for (EdgeId e : adj) {
        if (!g.edge_alive(e)) continue;
        Vertex w = forward ? g.graph().edge(e).head : g.graph().edge(e).tail;
        if (!in_comp[static_cast<std::size_t>(w)] ||
            seen[static_cast<std::size_t>(w)])
          continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        cert.push_back(e);
        queue.push_back(w);
      }
    }
    return reached;
  };
  covered = tree(true);
  if (covered != component.size())
    throw std::invalid_argument("certificate: component is not strongly connected");
  covered = tree(false);
  if (covered != component.size())
    throw std::invalid_argument("certificate: component is not strongly connected");

  std::sort(cert.begin(), cert.end());
  cert.erase(std::unique(cert.begin(), cert.end()), cert.end());
  return cert;
}

// Vertex splitting: every non-protected vertex v becomes (v_in, v_out) joined
// by a gadget edge, in-edges redirected into v_in and out-edges leaving
// v_out. Vertex-failure questions on the original graph reduce to edge
// failures on the gadget edges.
struct SplitResult {
  DiGraph graph;
  std::vector<Vertex> in_id;    // per original vertex
  std::vector<Vertex> out_id;   // per original vertex (== in_id if protected)
  std::vector<Vertex> orig_of;  // per split vertex
  std::vector<EdgeId> gadget_edge;  // per original vertex, -1 if protected
  std::vector<EdgeId> edge_image;   // per original edge id
};

inline SplitResult split_vertices(const DiGraph& g,
                                  std::span<const Vertex> protected_vertices = {}) {
  const int n = g.vertex_count();
  std::vector<char> prot(static_cast<std::size_t>(n), 0);
  for (Vertex v : protected_vertices) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("split_vertices: bad protected vertex");
    prot[static_cast<std::size_t>(v)] = 1;
  }

  SplitResult r;
  r.in_id.resize(static_cast<std::size_t>(n));
  r.out_id.resize(static_cast<std::size_t>(n));
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (prot[static_cast<std::size_t>(v)]) {
      r.in_id[static_cast<std::size_t>(v)] = r.out_id[static_cast<std::size_t>(v)] =
          next++;
    } else {
      r.in_id[static_cast<std::size_t>(v)] = next++;
      r.out_id[static_cast<std::size_t>(v)] = next++;
    }
  }
  r.orig_of.resize(static_cast<std::size_t>(next));
  for (Vertex v = 0; v < n; ++v) {
    r.orig_of[static_cast<std::size_t>(r.in_id[static_cast<std::size_t>(v)])] = v;
    r.orig_of[static_cast<std::size_t>(r.out_id[static_cast<std::size_t>(v)])] = v;
  }

  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    if (!prot[static_cast<std::size_t>(v)])
      edges.push_back({r.in_id[static_cast<std::size_t>(v)],
                       r.out_id[static_cast<std::size_t>(v)]});
  for (const Edge& e : g.edges())
    edges.push_back({r.out_id[static_cast<std::size_t>(e.tail)],
                     r.in_id[static_cast<std::size_t>(e.head)]});

  r.graph = DiGraph(next, std::move(edges));

  r.gadget_edge.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (prot[static_cast<std::size_t>(v)]) continue;
    auto id = r.graph.find_edge(r.in_id[static_cast<std::size_t>(v)],
                                r.out_id[static_cast<std::size_t>(v)]);
    r.gadget_edge[static_cast<std::size_t>(v)] = *id;
  }
  r.edge_image.resize(g.edges().size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    auto id = r.graph.find_edge(r.out_id[static_cast<std::size_t>(ed.tail)],
                                r.in_id[static_cast<std::size_t>(ed.head)]);
    r.edge_image[static_cast<std::size_t>(e)] = *id;
  }
  return r;
}

}  // namespace ftpres
