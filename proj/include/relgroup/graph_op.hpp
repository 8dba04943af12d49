#ifndef RELGROUP_GRAPH_OP_HPP
#define RELGROUP_GRAPH_OP_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "relgroup/relation.hpp"

namespace relgroup {

// A finite digraph with a source and a sink vertex and edges labelled by
// argument slots. It defines an operation of arity `arity`: a pair (i, j)
// is in the result iff the vertices can be valued with source -> i and
// sink -> j so that every edge (u, v, slot) lands in its argument.
class GraphOpSpec {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    std::size_t slot;
    bool operator==(Edge const&) const = default;
  };

  GraphOpSpec(std::size_t vertices, std::size_t source, std::size_t sink,
              std::vector<Edge> edges, std::size_t arity);

  std::size_t vertices() const { return vertices_; }
  std::size_t source() const { return source_; }
  std::size_t sink() const { return sink_; }
  std::size_t arity() const { return arity_; }
  std::vector<Edge> const& edges() const { return edges_; }

  bool operator==(GraphOpSpec const&) const = default;

 private:
  std::size_t vertices_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<Edge> edges_;
  std::size_t arity_;
};

namespace graphs {

// Q(r1, s1, r2, s2, t): two paths source->k->sink and source->l->sink,
// labelled r1,s1 and r2,s2, joined by a k->l edge labelled t.
GraphOpSpec quintary_q();
GraphOpSpec intersection();
GraphOpSpec composition();
GraphOpSpec converse();
GraphOpSpec diagonal();
GraphOpSpec total();

// One of "Q", "intersect", "compose", "converse", "diagonal", "total".
GraphOpSpec by_name(std::string_view name);

}  // namespace graphs

// Backtracking search for a valuation of the graph's vertices over a domain
// of `domain` values with the source and sink pinned. `edge_ok(a, b, slot)`
// decides whether an edge between values a and b satisfies its argument.
template <typename EdgeOk>
bool valuation_exists(GraphOpSpec const& spec, std::size_t domain,
                      std::size_t source_value, std::size_t sink_value,
                      EdgeOk&& edge_ok) {
  if (spec.source() == spec.sink() && source_value != sink_value) return false;

  std::size_t const k = spec.vertices();
  std::vector<std::size_t> value(k, 0);
  std::vector<bool> fixed(k, false);
  value[spec.source()] = source_value;
  value[spec.sink()] = sink_value;
  fixed[spec.source()] = fixed[spec.sink()] = true;

  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < k; ++v)
    if (!fixed[v]) free.push_back(v);

  // position[v]: index in `free` after which v is known (0 for pinned).
  std::vector<std::size_t> position(k, 0);
  for (std::size_t p = 0; p < free.size(); ++p) position[free[p]] = p + 1;

  // Edges grouped by the step at which both endpoints become known.
  std::vector<std::vector<GraphOpSpec::Edge>> due(free.size() + 1);
  for (auto const& e : spec.edges())
    due[std::max(position[e.from], position[e.to])].push_back(e);

  auto check = [&](std::size_t step) {
    for (auto const& e : due[step])
      if (!edge_ok(value[e.from], value[e.to], e.slot)) return false;
    return true;
  };
  if (!check(0)) return false;
  if (free.empty()) return true;

  // Iterative depth-first odometer over the free vertices.
  std::vector<std::size_t> next(free.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (next[depth] == domain) {
      if (depth == 0) return false;
      next[depth] = 0;
      --depth;
      continue;
    }
    value[free[depth]] = next[depth]++;
    if (!check(depth + 1)) continue;
    if (depth + 1 == free.size()) return true;
    ++depth;
  }
}

Relation graph_op_eval(GraphOpSpec const& spec, std::span<Relation const> args,
                       std::size_t n);
// Takes n from the arguments; nullary graphs must use the overload above.
Relation graph_op_eval(GraphOpSpec const& spec, std::span<Relation const> args);

}  // namespace relgroup

#endif  // RELGROUP_GRAPH_OP_HPP
