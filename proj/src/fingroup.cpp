#include "relgroup/fingroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "relgroup/error.hpp"

namespace relgroup {

namespace {

using Element = FiniteGroup::Element;

void require_same_group(GroupSubset const& s, GroupSubset const& t, char const* op) {
  if (s.group() != t.group() && !(*s.group() == *t.group()))
    throw DimensionError(std::string(op) + ": subsets of different groups");
}

}  // namespace

FiniteGroup::FiniteGroup(Table table) : table_(std::move(table)) {
  std::size_t const n = table_.size();
  if (n == 0) throw InvariantError("group table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw InvariantError("group table is not square");
    for (Element x : table_[a])
      if (x >= n) throw InvariantError("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a)
      throw InvariantError("group table: element 0 is not the identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row[table_[a][b]] || col[table_[b][a]]) {
        std::ostringstream os;
        os << "group table is not a Latin square (line " << a << ")";
        throw InvariantError(os.str());
      }
      row[table_[a][b]] = col[table_[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          std::ostringstream os;
          os << "group table is not associative at (" << a << "," << b << "," << c << ")";
          throw InvariantError(os.str());
        }
  inverse_.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
}

GroupPtr group_make(GroupKind kind, std::size_t n) {
  if (n == 0) throw PreconditionError("group_make: n must be positive");
  FiniteGroup::Table table;
  if (kind == GroupKind::cyclic) {
    table.assign(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a][b] = static_cast<Element>((a + b) % n);
    return std::make_shared<FiniteGroup const>(std::move(table));
  }
  if (n > 5) throw PreconditionError("group_make: symmetric groups are capped at 5 letters");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t const order = perms.size();
  table.assign(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> ab(n);
      for (std::size_t x = 0; x < n; ++x) ab[x] = perms[b][perms[a][x]];
      auto it = std::lower_bound(perms.begin(), perms.end(), ab);
      table[a][b] = static_cast<Element>(it - perms.begin());
    }
  }
  return std::make_shared<FiniteGroup const>(std::move(table));
}

GroupPtr group_make(FiniteGroup::Table table) {
  return std::make_shared<FiniteGroup const>(std::move(table));
}

GroupSubset::GroupSubset(GroupPtr group, std::vector<Element> members)
    : group_(std::move(group)), member_(group_->order(), false) {
  for (Element g : members) {
    if (g >= group_->order()) {
      std::ostringstream os;
      os << "subset element " << g << " out of range for order " << group_->order();
      throw InvariantError(os.str());
    }
    member_[g] = true;
  }
  if (!member_[FiniteGroup::identity()])
    throw InvariantError("subset must contain the identity");
}

GroupSubset::GroupSubset(Mask, GroupPtr group, std::vector<bool> member)
    : group_(std::move(group)), member_(std::move(member)) {
  if (member_.size() != group_->order()) throw InvariantError("subset mask has the wrong size");
  if (!member_[FiniteGroup::identity()])
    throw InvariantError("subset must contain the identity");
}

GroupSubset GroupSubset::from_mask(GroupPtr group, std::vector<bool> mask) {
  return GroupSubset(Mask{}, std::move(group), std::move(mask));
}

GroupSubset GroupSubset::whole(GroupPtr group) {
  std::size_t const n = group->order();
  return from_mask(std::move(group), std::vector<bool>(n, true));
}

GroupSubset GroupSubset::trivial(GroupPtr group) {
  return GroupSubset(std::move(group), std::vector<Element>{FiniteGroup::identity()});
}

std::size_t GroupSubset::size() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

std::vector<Element> GroupSubset::members() const {
  std::vector<Element> out;
  for (Element g = 0; g < member_.size(); ++g)
    if (member_[g]) out.push_back(g);
  return out;
}

bool GroupSubset::operator==(GroupSubset const& other) const {
  if (group_ != other.group_ && !(*group_ == *other.group_)) return false;
  return member_ == other.member_;
}

Subgroup::Subgroup(GroupSubset subset) : subset_(std::move(subset)) {
  auto const& g = *subset_.group();
  auto const members = subset_.members();
  for (Element a : members) {
    if (!subset_.contains(g.inverse(a)))
      throw InvariantError("subgroup is not closed under inverses");
    for (Element b : members)
      if (!subset_.contains(g.multiply(a, b)))
        throw InvariantError("subgroup is not closed under products");
  }
}

GroupSubset product(GroupSubset const& s, GroupSubset const& t) {
  require_same_group(s, t, "product");
  auto const& g = *s.group();
  std::vector<bool> mask(g.order(), false);
  for (Element a : s.members())
    for (Element b : t.members()) mask[g.multiply(a, b)] = true;
  return GroupSubset::from_mask(s.group(), std::move(mask));
}

GroupSubset inverse(GroupSubset const& s) {
  auto const& g = *s.group();
  std::vector<bool> mask(g.order(), false);
  for (Element a : s.members()) mask[g.inverse(a)] = true;
  return GroupSubset::from_mask(s.group(), std::move(mask));
}

GroupSubset intersect(GroupSubset const& s, GroupSubset const& t) {
  require_same_group(s, t, "intersect");
  std::vector<bool> mask(s.group()->order(), false);
  for (Element a : s.members()) mask[a] = t.contains(a);
  return GroupSubset::from_mask(s.group(), std::move(mask));
}

GroupSubset subset_op(SubsetOp kind, GroupSubset const& s, std::optional<GroupSubset> const& t) {
  switch (kind) {
    case SubsetOp::inverse: return inverse(s);
    case SubsetOp::total: return GroupSubset::whole(s.group());
    case SubsetOp::product:
    case SubsetOp::intersect: break;
  }
  if (!t) throw PreconditionError("subset_op: binary kind needs two subsets");
  return kind == SubsetOp::product ? product(s, *t) : intersect(s, *t);
}

Relation cayley_embed(GroupSubset const& s) {
  auto const& g = *s.group();
  return Relation::from_predicate(g.order(), [&](std::size_t a, std::size_t b) {
    return s.contains(g.multiply(g.inverse(static_cast<Element>(a)), static_cast<Element>(b)));
  });
}

std::vector<std::vector<Element>> left_cosets(Subgroup const& h) {
  auto const& g = *h.group();
  std::vector<std::vector<Element>> cosets;
  std::vector<bool> seen(g.order(), false);
  auto const members = h.subset().members();
  for (Element a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::vector<Element> coset;
    for (Element x : members) coset.push_back(g.multiply(a, x));
    std::sort(coset.begin(), coset.end());
    for (Element x : coset) seen[x] = true;
    cosets.push_back(std::move(coset));
  }
  // Scanning ids upward already yields cosets ordered by least member.
  return cosets;
}

namespace {

// Elements of HSH not in S; empty iff S is H-bi-invariant.
std::optional<Element> bi_invariance_violation(GroupSubset const& s, Subgroup const& h) {
  require_same_group(s, h.subset(), "is_bi_invariant");
  GroupSubset const hsh = product(product(h.subset(), s), h.subset());
  for (Element x : hsh.members())
    if (!s.contains(x)) return x;
  return std::nullopt;
}

}  // namespace

bool is_bi_invariant(GroupSubset const& s, Subgroup const& h) {
  return !bi_invariance_violation(s, h).has_value();
}

Relation coset_embed(GroupSubset const& s, Subgroup const& h) {
  if (auto bad = bi_invariance_violation(s, h)) {
    std::ostringstream os;
    os << "coset_embed: subset is not H-bi-invariant; element " << *bad
       << " lies in HSH but not in S";
    throw PreconditionError(os.str());
  }
  auto const& g = *s.group();
  auto const cosets = left_cosets(h);
  std::vector<std::size_t> index_of(g.order());
  for (std::size_t c = 0; c < cosets.size(); ++c)
    for (Element x : cosets[c]) index_of[x] = c;

  std::vector<Relation::Pair> pairs;
  auto const members = s.members();
  for (Element a = 0; a < g.order(); ++a)
    for (Element x : members) pairs.emplace_back(index_of[a], index_of[g.multiply(a, x)]);
  return Relation(cosets.size(), pairs);
}

GroupSubset graph_op_group(GraphOpSpec const& spec, std::span<GroupSubset const> args,
                           GroupPtr const& group) {
  if (args.size() != spec.arity()) {
    std::ostringstream os;
    os << "graph_op_group: expected " << spec.arity() << " arguments, got " << args.size();
    throw DimensionError(os.str());
  }
  for (auto const& a : args)
    if (a.group() != group && !(*a.group() == *group))
      throw DimensionError("graph_op_group: arguments from different groups");
  auto const& g = *group;
  auto edge_ok = [&](std::size_t a, std::size_t b, std::size_t slot) {
    return args[slot].contains(
        g.multiply(g.inverse(static_cast<Element>(a)), static_cast<Element>(b)));
  };
  std::vector<bool> mask(g.order(), false);
  for (std::size_t f = 0; f < g.order(); ++f)
    mask[f] = valuation_exists(spec, g.order(), FiniteGroup::identity(), f, edge_ok);
  return GroupSubset::from_mask(group, std::move(mask));
}

GroupSubset graph_op_group(GraphOpSpec const& spec, std::span<GroupSubset const> args) {
  if (args.empty())
    throw PreconditionError("graph_op_group: nullary graph needs an explicit group");
  return graph_op_group(spec, args, args.front().group());
}

Subgroup submonoid_closure(GroupSubset const& s) {
  GroupSubset acc = s;
  while (true) {
    GroupSubset next = product(acc, acc);
    if (next == acc) break;
    acc = std::move(next);
  }
  // Product-closed and finite, so inverse-closed; Subgroup re-checks it.
  return Subgroup(std::move(acc));
}

std::vector<Subgroup> all_subgroups(GroupPtr const& group) {
  std::vector<Subgroup> found{Subgroup(GroupSubset::trivial(group))};
  std::set<std::vector<Element>> seen{found.front().subset().members()};
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (Element x = 0; x < group->order(); ++x) {
      if (found[k].contains(x)) continue;
      auto members = found[k].subset().members();
      members.push_back(x);
      Subgroup next = submonoid_closure(GroupSubset(group, members));
      if (seen.insert(next.subset().members()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](Subgroup const& a, Subgroup const& b) {
    auto ma = a.subset().members(), mb = b.subset().members();
    return std::pair(ma.size(), ma) < std::pair(mb.size(), mb);
  });
  return found;
}

std::vector<GroupSubset> all_identity_subsets(GroupPtr const& group) {
  std::size_t const n = group->order();
  if (n > 20) throw PreconditionError("all_identity_subsets: order too large to enumerate");
  std::vector<GroupSubset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    std::vector<bool> mask(n, false);
    mask[0] = true;
    for (std::size_t k = 1; k < n; ++k) mask[k] = (bits >> (k - 1)) & 1U;
    out.push_back(GroupSubset::from_mask(group, std::move(mask)));
  }
  return out;
}

std::vector<GroupSubset> all_bi_invariant_subsets(Subgroup const& h) {
  auto const& group = h.group();
  auto const& g = *group;
  // Double cosets HxH other than H itself.
  std::vector<std::vector<Element>> doubles;
  std::vector<bool> seen(g.order(), false);
  for (Element x : h.subset().members()) seen[x] = true;
  auto const members = h.subset().members();
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> dc;
    for (Element a : members)
      for (Element b : members) {
        Element const y = g.multiply(g.multiply(a, x), b);
        if (!seen[y]) {
          seen[y] = true;
          dc.push_back(y);
        }
      }
    doubles.push_back(std::move(dc));
  }
  if (doubles.size() > 20)
    throw PreconditionError("all_bi_invariant_subsets: too many double cosets to enumerate");

  std::vector<GroupSubset> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << doubles.size()); ++bits) {
    std::vector<bool> mask(g.order(), false);
    for (Element x : members) mask[x] = true;
    for (std::size_t d = 0; d < doubles.size(); ++d)
      if ((bits >> d) & 1U)
        for (Element y : doubles[d]) mask[y] = true;
    out.push_back(GroupSubset::from_mask(group, std::move(mask)));
  }
  return out;
}

std::optional<std::size_t> find_asymmetric_idempotent(std::span<Relation const> family) {
  for (std::size_t k = 0; k < family.size(); ++k) {
    auto const& r = family[k];
    if (compose(r, r) == r && converse(r) != r) return k;
  }
  return std::nullopt;
}

}  // namespace relgroup
