#include "relgroup/graph_op.hpp"

#include <sstream>
#include <string>

#include "relgroup/error.hpp"

namespace relgroup {

GraphOpSpec::GraphOpSpec(std::size_t vertices, std::size_t source,
                         std::size_t sink, std::vector<Edge> edges,
                         std::size_t arity)
    : vertices_(vertices),
      source_(source),
      sink_(sink),
      edges_(std::move(edges)),
      arity_(arity) {
  if (source_ >= vertices_ || sink_ >= vertices_)
    throw InvariantError("graph spec: source/sink outside the vertex list");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto const& e = edges_[k];
    if (e.from >= vertices_ || e.to >= vertices_ || e.slot >= arity_) {
      std::ostringstream os;
      os << "graph spec: edge " << k << " (" << e.from << "," << e.to << ","
         << e.slot << ") out of range";
      throw InvariantError(os.str());
    }
  }
}

namespace graphs {

GraphOpSpec quintary_q() {
  // 0 = source, 1 = k, 2 = l, 3 = sink
  return {4, 0, 3, {{0, 1, 0}, {1, 3, 1}, {0, 2, 2}, {2, 3, 3}, {1, 2, 4}}, 5};
}

GraphOpSpec intersection() { return {2, 0, 1, {{0, 1, 0}, {0, 1, 1}}, 2}; }

GraphOpSpec composition() { return {3, 0, 2, {{0, 1, 0}, {1, 2, 1}}, 2}; }

GraphOpSpec converse() { return {2, 0, 1, {{1, 0, 0}}, 1}; }

GraphOpSpec diagonal() { return {1, 0, 0, {}, 0}; }

GraphOpSpec total() { return {2, 0, 1, {}, 0}; }

GraphOpSpec by_name(std::string_view name) {
  if (name == "Q") return quintary_q();
  if (name == "intersect") return intersection();
  if (name == "compose") return composition();
  if (name == "converse") return converse();
  if (name == "diagonal") return diagonal();
  if (name == "total") return total();
  throw PreconditionError("unknown graph '" + std::string(name) + "'");
}

}  // namespace graphs

Relation graph_op_eval(GraphOpSpec const& spec, std::span<Relation const> args,
                       std::size_t n) {
  if (args.size() != spec.arity()) {
    std::ostringstream os;
    os << "graph_op_eval: expected " << spec.arity() << " arguments, got "
       << args.size();
    throw DimensionError(os.str());
  }
  for (auto const& a : args)
    if (a.size() != n) throw DimensionError("graph_op_eval: argument sizes differ");

  auto edge_ok = [&](std::size_t a, std::size_t b, std::size_t slot) {
    return args[slot].contains(a, b);
  };
  return Relation::from_predicate(n, [&](std::size_t i, std::size_t j) {
    return valuation_exists(spec, n, i, j, edge_ok);
  });
}

Relation graph_op_eval(GraphOpSpec const& spec, std::span<Relation const> args) {
  if (args.empty())
    throw PreconditionError("graph_op_eval: nullary graph needs an explicit size");
  return graph_op_eval(spec, args, args.front().size());
}

}  // namespace relgroup
