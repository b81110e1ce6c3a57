#include "dfrp/digraph.hpp"

#include <cstdlib>
#include <string>
#include <unordered_set>

namespace dfrp {

namespace {
uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
         static_cast<uint64_t>(static_cast<uint32_t>(v));
}
}  // namespace

Digraph Digraph::build(VertexId n, const std::vector<Edge>& edges, bool weighted,
                       WCost weight_bound) {
  Digraph g;
  g.n_ = n;
  g.weighted_ = weighted;
  g.out_.resize(static_cast<size_t>(n));
  g.in_.resize(static_cast<size_t>(n));
  std::unordered_set<uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
      throw IdOutOfRange("edge endpoint outside [0, n): " + std::to_string(e.from) + "->" +
                         std::to_string(e.to));
    if (e.from == e.to) throw SelfLoop("self loop at vertex " + std::to_string(e.from));
    if (!seen.insert(pair_key(e.from, e.to)).second)
      throw DuplicateEdge("duplicate arc " + std::to_string(e.from) + "->" + std::to_string(e.to));
    if (!weighted && e.weight != 1)
      throw GraphError("unweighted graph requires unit base weights");
    EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(e);
    g.out_[static_cast<size_t>(e.from)].emplace_back(e.to, id);
    g.in_[static_cast<size_t>(e.to)].emplace_back(e.from, id);
  }
  if (weighted) {
    WCost max_abs = 0;
    for (const Edge& e : g.edges_) max_abs = std::max(max_abs, std::llabs(e.weight));
    g.weight_bound_ = std::max(weight_bound, max_abs);
  }
  return g;
}

Digraph Digraph::build(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (auto [u, v] : arcs) edges.push_back({u, v, 1});
  return build(n, edges, false, 0);
}

Digraph Digraph::reversed() const {
  Digraph g;
  g.n_ = n_;
  g.weighted_ = weighted_;
  g.weight_bound_ = weight_bound_;
  g.edges_.reserve(edges_.size());
  g.out_.resize(static_cast<size_t>(n_));
  g.in_.resize(static_cast<size_t>(n_));
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[static_cast<size_t>(id)];
    g.edges_.push_back({e.to, e.from, e.weight});
    g.out_[static_cast<size_t>(e.to)].emplace_back(e.from, id);
    g.in_[static_cast<size_t>(e.from)].emplace_back(e.to, id);
  }
  return g;
}

Digraph::Subgraph Digraph::induced(const std::vector<uint8_t>& keep_vertex) const {
  Subgraph sub;
  sub.to_sub_vertex.assign(static_cast<size_t>(n_), -1);
  for (VertexId v = 0; v < n_; ++v) {
    if (keep_vertex[static_cast<size_t>(v)]) {
      sub.to_sub_vertex[static_cast<size_t>(v)] = static_cast<VertexId>(sub.to_orig_vertex.size());
      sub.to_orig_vertex.push_back(v);
    }
  }
  Digraph& g = sub.graph;
  g.n_ = static_cast<VertexId>(sub.to_orig_vertex.size());
  g.weighted_ = weighted_;
  g.weight_bound_ = weight_bound_;
  g.out_.resize(static_cast<size_t>(g.n_));
  g.in_.resize(static_cast<size_t>(g.n_));
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[static_cast<size_t>(id)];
    VertexId su = sub.to_sub_vertex[static_cast<size_t>(e.from)];
    VertexId sv = sub.to_sub_vertex[static_cast<size_t>(e.to)];
    if (su < 0 || sv < 0) continue;
    EdgeId sid = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({su, sv, e.weight});
    g.out_[static_cast<size_t>(su)].emplace_back(sv, sid);
    g.in_[static_cast<size_t>(sv)].emplace_back(su, sid);
    sub.to_orig_edge.push_back(id);
  }
  return sub;
}

}  // namespace dfrp
