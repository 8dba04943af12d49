#ifndef RELGROUP_RELATION_HPP
#define RELGROUP_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace relgroup {

// A binary relation on the index set {0, ..., n-1}, stored as a dense
// boolean matrix with one packed bit row per element.
//
// The same type serves the full relation algebra (union, complement,
// residuals) and the restricted algebra of reflexive relations; operations
// that only make sense on reflexive relations check that on entry.
class Relation {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;
  using Word = std::uint64_t;

  // The empty relation on n elements. Throws PreconditionError when n == 0.
  explicit Relation(std::size_t n);

  // The relation containing exactly `pairs`.
  Relation(std::size_t n, std::span<Pair const> pairs);
  Relation(std::size_t n, std::initializer_list<Pair> pairs);

  template <typename Pred>
  static Relation from_predicate(std::size_t n, Pred&& pred) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (pred(i, j)) r.insert(i, j);
    return r;
  }

  std::size_t size() const { return n_; }
  bool contains(std::size_t i, std::size_t j) const;
  bool operator()(std::size_t i, std::size_t j) const { return contains(i, j); }

  bool is_reflexive() const;
  bool is_total() const;
  bool subset_of(Relation const& other) const;
  std::size_t count() const;
  std::vector<Pair> pairs() const;

  // Packed row i; bit j of the row is entry (i, j).
  std::span<Word const> row(std::size_t i) const;

  bool operator==(Relation const& other) const = default;

 private:
  void insert(std::size_t i, std::size_t j);
  std::span<Word> mutable_row(std::size_t i);

  friend Relation compose(Relation const&, Relation const&);
  friend Relation converse(Relation const&);
  friend Relation intersect(Relation const&, Relation const&);
  friend Relation unite(Relation const&, Relation const&);
  friend Relation complement(Relation const&);

  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

enum class SetOp { intersect, unite, complement };
enum class Constant { diagonal, total, empty };
enum class RelationClass { not_reflexive, reflexive_only, preorder, equivalence };
enum class ChainStart { forward, converse };

// (i,k) in the result iff (i,j) in rho and (j,k) in sigma for some j.
Relation compose(Relation const& rho, Relation const& sigma);
Relation converse(Relation const& rho);
Relation intersect(Relation const& rho, Relation const& sigma);
Relation unite(Relation const& rho, Relation const& sigma);
Relation complement(Relation const& rho);

// Dispatches to intersect/unite/complement. Binary kinds need `sigma`.
Relation boolean_op(SetOp kind, Relation const& rho,
                    std::optional<Relation> const& sigma = std::nullopt);

Relation constant(Constant kind, std::size_t n);
inline Relation diagonal(std::size_t n) { return constant(Constant::diagonal, n); }
inline Relation total(std::size_t n) { return constant(Constant::total, n); }
inline Relation empty(std::size_t n) { return constant(Constant::empty, n); }

RelationClass classify(Relation const& rho);
std::string_view to_string(RelationClass c);
std::string_view to_string(ChainStart s);

// The m-factor alternating composite rho . rho^-1 . rho ... (or starting with
// rho^-1 for ChainStart::converse). Requires rho reflexive and m >= 1.
Relation alternating_chain(Relation const& rho, std::size_t m, ChainStart start);

// Least m such that `target` is contained in alternating_chain(rho, m, start),
// or nullopt once the chain has stabilized without containing it.
std::optional<std::size_t> min_chain_length_containing(Relation const& rho,
                                                       ChainStart start,
                                                       Relation const& target);

std::optional<std::size_t> min_length_to_total(Relation const& rho,
                                               ChainStart start);

// Left residual rho/sigma (largest t with t.sigma <= rho) and right residual
// sigma\rho (largest t with sigma.t <= rho), in the full algebra.
struct Residuals {
  Relation over;   // rho / sigma
  Relation under;  // sigma \ rho
};
Residuals residuals(Relation const& rho, Relation const& sigma);

// Named posets. Elements are 0-based: fence element k is the k+1-th element
// of the zigzag, so odd indices sit below their neighbours.
Relation fence(std::size_t n);
// Zigzag on Z/2(n-1)Z, each even residue below both cyclic neighbours.
Relation crown(std::size_t n);
// The three chain orders on six elements; `which` is 1, 3 or 5.
Relation three_order(int which);
// "fence", "crown" take n; "k135" takes which in {1,3,5} via n.
Relation named_relation(std::string_view name, std::size_t n);

}  // namespace relgroup

#endif  // RELGROUP_RELATION_HPP
