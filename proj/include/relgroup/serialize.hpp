#ifndef RELGROUP_SERIALIZE_HPP
#define RELGROUP_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "relgroup/etperm.hpp"
#include "relgroup/fingroup.hpp"
#include "relgroup/graph_op.hpp"
#include "relgroup/relation.hpp"

namespace relgroup {

// Malformed input. The message names the offending field, or the line and
// column for syntax errors.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses JSON text, turning syntax errors into FormatError.
nlohmann::json parse_json(std::string const& text, std::string const& origin);

// {"n", "reflexive", "pairs"}. For reflexive relations only off-diagonal
// pairs are listed; "reflexive" defaults to true when absent.
nlohmann::json to_json(Relation const& rho);
Relation relation_from_json(nlohmann::json const& j);

// {"n", "top", "bottom", "exceptions": [[[i,k],[j,l]], ...]}, sorted by
// source. Redundant exceptions are rejected.
nlohmann::json to_json(EventualPermutation const& f);
EventualPermutation permutation_from_json(nlohmann::json const& j);

nlohmann::json point_to_json(Point p);
Point point_from_json(nlohmann::json const& j, std::string const& field);

// {"order", "table"}.
nlohmann::json to_json(FiniteGroup const& g);
GroupPtr group_from_json(nlohmann::json const& j);

// A sorted list of element ids.
nlohmann::json to_json(GroupSubset const& s);
GroupSubset subset_from_json(GroupPtr const& group, nlohmann::json const& j);

// {"vertices", "source", "sink", "edges": [[u,v,slot], ...], "arity"}.
nlohmann::json to_json(GraphOpSpec const& spec);
GraphOpSpec graph_spec_from_json(nlohmann::json const& j);

}  // namespace relgroup

#endif  // RELGROUP_SERIALIZE_HPP
