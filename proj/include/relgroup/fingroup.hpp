#ifndef RELGROUP_FINGROUP_HPP
#define RELGROUP_FINGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "relgroup/graph_op.hpp"
#include "relgroup/relation.hpp"

namespace relgroup {

// A finite group given by its multiplication table over the element ids
// 0..order-1. Id 0 is the identity.
class FiniteGroup {
 public:
  using Element = std::uint32_t;
  using Table = std::vector<std::vector<Element>>;

  // Validates the table: square, Latin, id 0 neutral, associative.
  explicit FiniteGroup(Table table);

  std::size_t order() const { return table_.size(); }
  static constexpr Element identity() { return 0; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Table const& table() const { return table_; }

  bool operator==(FiniteGroup const& other) const { return table_ == other.table_; }

 private:
  Table table_;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<FiniteGroup const>;

enum class GroupKind { cyclic, symmetric };

// Z/nZ with addition, or the symmetric group on n <= 5 letters. Elements of
// the symmetric group are permutations in lexicographic order (id 0 is the
// identity) acting on the right: x(ab) = (xa)b.
GroupPtr group_make(GroupKind kind, std::size_t n);
GroupPtr group_make(FiniteGroup::Table table);

// A subset of a group containing the identity.
class GroupSubset {
 public:
  using Element = FiniteGroup::Element;

  // Throws InvariantError if the identity is missing or an id is out of range.
  GroupSubset(GroupPtr group, std::vector<Element> members);

  // mask[g] says whether g is a member; mask.size() must equal the order.
  static GroupSubset from_mask(GroupPtr group, std::vector<bool> mask);
  static GroupSubset whole(GroupPtr group);
  static GroupSubset trivial(GroupPtr group);

  GroupPtr const& group() const { return group_; }
  bool contains(Element g) const { return member_[g]; }
  std::size_t size() const;
  std::vector<Element> members() const;

  bool operator==(GroupSubset const& other) const;

 private:
  struct Mask {};
  GroupSubset(Mask, GroupPtr group, std::vector<bool> member);

  GroupPtr group_;
  std::vector<bool> member_;
};

// A subset closed under products and inverses; checked on construction.
class Subgroup {
 public:
  explicit Subgroup(GroupSubset subset);

  GroupSubset const& subset() const { return subset_; }
  GroupPtr const& group() const { return subset_.group(); }
  bool contains(FiniteGroup::Element g) const { return subset_.contains(g); }
  std::size_t size() const { return subset_.size(); }

 private:
  GroupSubset subset_;
};

enum class SubsetOp { product, inverse, intersect, total };

GroupSubset product(GroupSubset const& s, GroupSubset const& t);
GroupSubset inverse(GroupSubset const& s);
GroupSubset intersect(GroupSubset const& s, GroupSubset const& t);
GroupSubset subset_op(SubsetOp kind, GroupSubset const& s,
                      std::optional<GroupSubset> const& t = std::nullopt);

// (g, h) related iff g^-1 h lies in s.
Relation cayley_embed(GroupSubset const& s);

// Left cosets of h, each named by its least element id, in increasing order.
std::vector<std::vector<FiniteGroup::Element>> left_cosets(Subgroup const& h);

bool is_bi_invariant(GroupSubset const& s, Subgroup const& h);

// (gH, gsH) over g in G and s in S, on the coset list of left_cosets(h).
// Throws PreconditionError naming an element of HSH missing from s when s is
// not H-bi-invariant.
Relation coset_embed(GroupSubset const& s, Subgroup const& h);

// f is in the result iff the graph's vertices can be valued in the group with
// source -> e and sink -> f so that val(u)^-1 val(v) is in args[slot] along
// every edge.
GroupSubset graph_op_group(GraphOpSpec const& spec, std::span<GroupSubset const> args,
                           GroupPtr const& group);
GroupSubset graph_op_group(GraphOpSpec const& spec, std::span<GroupSubset const> args);

// Least product-closed superset; in a finite group this is a subgroup.
Subgroup submonoid_closure(GroupSubset const& s);

// Every subgroup, found by closing {e} under one added generator at a time.
std::vector<Subgroup> all_subgroups(GroupPtr const& group);

// All identity-containing subsets, in increasing bitmask order. Intended
// for small groups; throws PreconditionError above order 20.
std::vector<GroupSubset> all_identity_subsets(GroupPtr const& group);

// All H-bi-invariant identity-containing subsets (unions of double cosets
// HgH that include H itself).
std::vector<GroupSubset> all_bi_invariant_subsets(Subgroup const& h);

// A necessary condition for a finite family of relations to embed in the
// subset algebra of a finite group: every composition-idempotent member is
// converse-invariant. Returns the index of the first member violating it.
std::optional<std::size_t> find_asymmetric_idempotent(std::span<Relation const> family);

}  // namespace relgroup

#endif  // RELGROUP_FINGROUP_HPP
