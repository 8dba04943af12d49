#ifndef RELGROUP_ETPERM_HPP
#define RELGROUP_ETPERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relgroup/relation.hpp"

namespace relgroup {

// A point x_{block, offset} of the disjoint union of n copies of Z.
struct Point {
  std::size_t block = 0;
  std::int64_t offset = 0;

  auto operator<=>(Point const&) const = default;
};

std::ostream& operator<<(std::ostream& os, Point const& p);

// A bijection of {0..n-1} x Z that, on every block, translates the upper
// tail by `top[i]` and the lower tail by `bottom[i]`, with finitely many
// exceptions.
//
// Points with offset >= 0 default to (i, k + top[i]), points with offset < 0
// default to (i, k + bottom[i]). An exception is stored exactly when the
// image differs from that default, which makes the representation canonical:
// two values are equal iff they act identically.
//
// The constructor enforces the structural invariants (sizes, block ranges,
// distinct sources, no redundant exceptions). Bijectivity is a separate
// question answered by validate(); every operation in this module returns
// valid values when given valid inputs.
class EventualPermutation {
 public:
  using Move = std::pair<Point, Point>;

  EventualPermutation(std::size_t n, std::vector<std::int64_t> top,
                      std::vector<std::int64_t> bottom, std::vector<Move> exceptions);

  static EventualPermutation identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t top(std::size_t block) const { return top_.at(block); }
  std::int64_t bottom(std::size_t block) const { return bottom_.at(block); }
  std::vector<std::int64_t> const& top_shifts() const { return top_; }
  std::vector<std::int64_t> const& bottom_shifts() const { return bottom_; }

  // Sorted by source point.
  std::vector<Move> const& exceptions() const { return exceptions_; }

  Point default_image(Point p) const;
  Point operator()(Point p) const;

  bool operator==(EventualPermutation const&) const = default;

 private:
  struct Trusted {};
  EventualPermutation(Trusted, std::size_t n, std::vector<std::int64_t> top,
                      std::vector<std::int64_t> bottom, std::vector<Move> exceptions);

  friend class CanonicalBuilder;

  std::size_t n_;
  std::vector<std::int64_t> top_;
  std::vector<std::int64_t> bottom_;
  std::vector<Move> exceptions_;
};

std::ostream& operator<<(std::ostream& os, EventualPermutation const& f);

// Throws PreconditionError when p.block is out of range.
Point apply(EventualPermutation const& f, Point p);

// Right action: apply(compose(f, g), x) == apply(g, apply(f, x)).
EventualPermutation compose(EventualPermutation const& f, EventualPermutation const& g);
EventualPermutation invert(EventualPermutation const& f);

struct Validation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Decides whether the total map is a bijection of {0..n-1} x Z. Failing
// results name a collision point, an uncovered point, or the block whose
// flow law fails.
Validation validate(EventualPermutation const& f);

// Delta plus every (i, j) such that some point of block i lands in block j.
Relation block_relation(EventualPermutation const& f);

// Membership of f in the subset determined by a reflexive relation: every
// point moves only along pairs of rho.
bool respects(EventualPermutation const& f, Relation const& rho);

enum class Generator {
  shift,           // x_{i,k} -> x_{i,k+1}
  unshift,         // x_{i,k} -> x_{i,k-1}
  swap,            // interchanges x_{i,0} and x_{i,1}
  transfer_origin  // x_{i,0} -> x_{j,0}, closing the gap in i, opening one in j
};

EventualPermutation generator(Generator kind, std::size_t n, std::size_t i,
                              std::size_t j = 0);

// A permutation realizing every prescribed move and keeping every other
// point in its home block. On each block the remaining points are matched
// in order, fixing the lower tail, so any flow imbalance is absorbed by the
// top shift.
EventualPermutation transfer(std::size_t n, std::span<EventualPermutation::Move const> moves);

struct Factorization {
  EventualPermutation left;   // respects rho
  EventualPermutation right;  // respects sigma
};

// Writes f (which must respect rho.sigma) as left * right with left
// respecting rho and right respecting sigma. Throws MembershipError naming a
// violating block pair when f does not respect rho.sigma.
Factorization factorize(EventualPermutation const& f, Relation const& rho,
                        Relation const& sigma);

// Least m such that f lies in the m-factor alternating product of the
// subsets for rho and its converse.
std::optional<std::size_t> min_product_length(EventualPermutation const& f,
                                              Relation const& rho, ChainStart start);

// A pseudorandom element respecting rho: random in-block mixing on both sides
// of one transfer with at most `budget` moves along pairs of rho.
EventualPermutation sample(Relation const& rho, std::uint64_t seed, std::size_t budget);

// A single-point transfer that respects exactly one of rho and sigma; the
// one in rho when rho is not contained in sigma.
EventualPermutation distinguishing_witness(Relation const& rho, Relation const& sigma);

}  // namespace relgroup

#endif  // RELGROUP_ETPERM_HPP
