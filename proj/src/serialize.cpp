#include "relgroup/serialize.hpp"

namespace relgroup {

using nlohmann::json;

namespace {

json const& field(json const& j, char const* name, std::string const& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(where + ": missing field '" + name + "'");
  return *it;
}

std::int64_t integer(json const& j, std::string const& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count(json const& j, std::string const& where) {
  std::int64_t const v = integer(j, where);
  if (v < 0) throw FormatError(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

json const& array(json const& j, std::string const& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  return j;
}

std::string at(std::string const& where, std::size_t k) {
  return where + "[" + std::to_string(k) + "]";
}

// Runs `build`, reporting library validation failures as format errors.
template <typename F>
auto guarded(std::string const& what, F&& build) {
  try {
    return build();
  } catch (FormatError const&) {
    throw;
  } catch (std::invalid_argument const& e) {
    throw FormatError(what + ": " + e.what());
  }
}

}  // namespace

json parse_json(std::string const& text, std::string const& origin) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw FormatError(origin + ": " + e.what());
  }
}

json to_json(Relation const& rho) {
  bool const reflexive = rho.is_reflexive();
  json pairs = json::array();
  for (auto [i, j] : rho.pairs())
    if (!reflexive || i != j) pairs.push_back({i, j});
  return {{"n", rho.size()}, {"reflexive", reflexive}, {"pairs", std::move(pairs)}};
}

Relation relation_from_json(json const& j) {
  std::size_t const n = count(field(j, "n", "relation"), "relation.n");
  if (n == 0) throw FormatError("relation.n: must be positive");
  bool reflexive = true;
  if (j.contains("reflexive")) {
    if (!j["reflexive"].is_boolean()) throw FormatError("relation.reflexive: expected a boolean");
    reflexive = j["reflexive"].get<bool>();
  }
  std::vector<Relation::Pair> pairs;
  if (reflexive)
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i);
  auto const& list = array(field(j, "pairs", "relation"), "relation.pairs");
  for (std::size_t k = 0; k < list.size(); ++k) {
    std::string const where = at("relation.pairs", k);
    auto const& p = array(list[k], where);
    if (p.size() != 2) throw FormatError(where + ": expected [i, j]");
    std::size_t const a = count(p[0], where), b = count(p[1], where);
    if (a >= n || b >= n) throw FormatError(where + ": index out of range");
    pairs.emplace_back(a, b);
  }
  return Relation(n, pairs);
}

json point_to_json(Point p) { return {p.block, p.offset}; }

Point point_from_json(json const& j, std::string const& where) {
  auto const& p = array(j, where);
  if (p.size() != 2) throw FormatError(where + ": expected [block, offset]");
  return {count(p[0], where), integer(p[1], where)};
}

json to_json(EventualPermutation const& f) {
  json exceptions = json::array();
  for (auto const& [src, img] : f.exceptions())
    exceptions.push_back({point_to_json(src), point_to_json(img)});
  return {{"n", f.size()},
          {"top", f.top_shifts()},
          {"bottom", f.bottom_shifts()},
          {"exceptions", std::move(exceptions)}};
}

EventualPermutation permutation_from_json(json const& j) {
  std::size_t const n = count(field(j, "n", "permutation"), "permutation.n");
  auto shifts = [&](char const* name) {
    std::string const where = std::string("permutation.") + name;
    auto const& list = array(field(j, name, "permutation"), where);
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < list.size(); ++k) out.push_back(integer(list[k], at(where, k)));
    return out;
  };
  std::vector<std::int64_t> top = shifts("top"), bottom = shifts("bottom");
  std::vector<EventualPermutation::Move> moves;
  auto const& list = array(field(j, "exceptions", "permutation"), "permutation.exceptions");
  for (std::size_t k = 0; k < list.size(); ++k) {
    std::string const where = at("permutation.exceptions", k);
    auto const& m = array(list[k], where);
    if (m.size() != 2) throw FormatError(where + ": expected [source, image]");
    moves.emplace_back(point_from_json(m[0], where + "[0]"), point_from_json(m[1], where + "[1]"));
  }
  return guarded("permutation", [&] {
    return EventualPermutation(n, std::move(top), std::move(bottom), std::move(moves));
  });
}

json to_json(FiniteGroup const& g) { return {{"order", g.order()}, {"table", g.table()}}; }

GroupPtr group_from_json(json const& j) {
  std::size_t const order = count(field(j, "order", "group"), "group.order");
  auto const& rows = array(field(j, "table", "group"), "group.table");
  if (rows.size() != order) throw FormatError("group.table: expected `order` rows");
  FiniteGroup::Table table;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto const& row = array(rows[r], at("group.table", r));
    std::vector<FiniteGroup::Element> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::size_t const v = count(row[c], at(at("group.table", r), c));
      if (v >= order) throw FormatError(at(at("group.table", r), c) + ": id out of range");
      out.push_back(static_cast<FiniteGroup::Element>(v));
    }
    table.push_back(std::move(out));
  }
  return guarded("group", [&] { return group_make(std::move(table)); });
}

json to_json(GroupSubset const& s) { return s.members(); }

GroupSubset subset_from_json(GroupPtr const& group, json const& j) {
  auto const& list = array(j, "subset");
  std::vector<FiniteGroup::Element> members;
  for (std::size_t k = 0; k < list.size(); ++k) {
    std::size_t const v = count(list[k], at("subset", k));
    if (v >= group->order()) throw FormatError(at("subset", k) + ": id out of range");
    members.push_back(static_cast<FiniteGroup::Element>(v));
  }
  return guarded("subset", [&] { return GroupSubset(group, members); });
}

json to_json(GraphOpSpec const& spec) {
  json edges = json::array();
  for (auto const& e : spec.edges()) edges.push_back({e.from, e.to, e.slot});
  return {{"vertices", spec.vertices()}, {"source", spec.source()}, {"sink", spec.sink()},
          {"edges", std::move(edges)},   {"arity", spec.arity()}};
}

GraphOpSpec graph_spec_from_json(json const& j) {
  std::size_t const vertices = count(field(j, "vertices", "graph"), "graph.vertices");
  std::size_t const source = count(field(j, "source", "graph"), "graph.source");
  std::size_t const sink = count(field(j, "sink", "graph"), "graph.sink");
  std::size_t const arity = count(field(j, "arity", "graph"), "graph.arity");
  std::vector<GraphOpSpec::Edge> edges;
  auto const& list = array(field(j, "edges", "graph"), "graph.edges");
  for (std::size_t k = 0; k < list.size(); ++k) {
    std::string const where = at("graph.edges", k);
    auto const& e = array(list[k], where);
    if (e.size() != 3) throw FormatError(where + ": expected [from, to, slot]");
    edges.push_back({count(e[0], where), count(e[1], where), count(e[2], where)});
  }
  return guarded("graph", [&] { return GraphOpSpec(vertices, source, sink, edges, arity); });
}

}  // namespace relgroup
