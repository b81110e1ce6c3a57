#ifndef DFRP_DIGRAPH_HPP
#define DFRP_DIGRAPH_HPP

#include <utility>
#include <vector>

#include "dfrp/types.hpp"

namespace dfrp {

struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  WCost weight = 1;
};

// Immutable simple digraph. Edge ids follow insertion order and are the
// identity used for failures everywhere in this library.
class Digraph {
 public:
  Digraph() = default;

  static Digraph build(VertexId n, const std::vector<Edge>& edges, bool weighted = false,
                       WCost weight_bound = 0);

  // Unweighted convenience: all base weights 1.
  static Digraph build(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& arcs);

  VertexId num_vertices() const { return n_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  bool weighted() const { return weighted_; }
  WCost weight_bound() const { return weight_bound_; }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // (neighbor, edge id) pairs.
  const std::vector<std::pair<VertexId, EdgeId>>& out(VertexId u) const {
    return out_[static_cast<size_t>(u)];
  }
  const std::vector<std::pair<VertexId, EdgeId>>& in(VertexId u) const {
    return in_[static_cast<size_t>(u)];
  }

  // Same vertices and edge ids, all arcs flipped.
  Digraph reversed() const;

  // Vertex-induced subgraph with compacted vertex ids. Kept edges retain a
  // mapping back to their original ids.
  struct Subgraph {
    Digraph graph;
    std::vector<VertexId> to_orig_vertex;
    std::vector<VertexId> to_sub_vertex;  // -1 where dropped
    std::vector<EdgeId> to_orig_edge;
  };
  Subgraph induced(const std::vector<uint8_t>& keep_vertex) const;

 private:
  VertexId n_ = 0;
  bool weighted_ = false;
  WCost weight_bound_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> out_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> in_;
};

}  // namespace dfrp

#endif
