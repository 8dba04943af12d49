#include "relgroup/relation.hpp"

#include <bit>
#include <sstream>
#include <string>

#include "relgroup/error.hpp"

namespace relgroup {

namespace {

constexpr std::size_t kWordBits = 64;

void require_same_size(Relation const& a, Relation const& b, char const* op) {
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << op << ": relations on " << a.size() << " and " << b.size()
       << " elements";
    throw DimensionError(os.str());
  }
}

void require_reflexive(Relation const& rho, char const* op) {
  if (!rho.is_reflexive())
    throw PreconditionError(std::string(op) + ": relation must be reflexive");
}

}  // namespace

Relation::Relation(std::size_t n)
    : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n * words_, 0) {
  if (n == 0) throw PreconditionError("relation on an empty index set");
}

Relation::Relation(std::size_t n, std::span<Pair const> pairs) : Relation(n) {
  for (auto [i, j] : pairs) {
    if (i >= n || j >= n) {
      std::ostringstream os;
      os << "pair (" << i << "," << j << ") out of range for n=" << n;
      throw InvariantError(os.str());
    }
    insert(i, j);
  }
}

Relation::Relation(std::size_t n, std::initializer_list<Pair> pairs)
    : Relation(n, std::span<Pair const>(pairs.begin(), pairs.size())) {}

bool Relation::contains(std::size_t i, std::size_t j) const {
  return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1U;
}

void Relation::insert(std::size_t i, std::size_t j) {
  bits_[i * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
}

std::span<Relation::Word const> Relation::row(std::size_t i) const {
  return {bits_.data() + i * words_, words_};
}

std::span<Relation::Word> Relation::mutable_row(std::size_t i) {
  return {bits_.data() + i * words_, words_};
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!contains(i, i)) return false;
  return true;
}

bool Relation::is_total() const { return count() == n_ * n_; }

bool Relation::subset_of(Relation const& other) const {
  require_same_size(*this, other, "subset_of");
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (Word w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Relation::Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

Relation compose(Relation const& rho, Relation const& sigma) {
  require_same_size(rho, sigma, "compose");
  std::size_t const n = rho.size();
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto dst = out.mutable_row(i);
    auto src = rho.row(i);
    for (std::size_t w = 0; w < src.size(); ++w) {
      for (Relation::Word bits = src[w]; bits != 0; bits &= bits - 1) {
        std::size_t const j = w * kWordBits + std::countr_zero(bits);
        auto mid = sigma.row(j);
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] |= mid[k];
      }
    }
  }
  return out;
}

Relation converse(Relation const& rho) {
  std::size_t const n = rho.size();
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rho.contains(j, i)) out.insert(i, j);
  return out;
}

Relation intersect(Relation const& rho, Relation const& sigma) {
  require_same_size(rho, sigma, "intersect");
  Relation out = rho;
  for (std::size_t k = 0; k < out.bits_.size(); ++k) out.bits_[k] &= sigma.bits_[k];
  return out;
}

Relation unite(Relation const& rho, Relation const& sigma) {
  require_same_size(rho, sigma, "unite");
  Relation out = rho;
  for (std::size_t k = 0; k < out.bits_.size(); ++k) out.bits_[k] |= sigma.bits_[k];
  return out;
}

Relation complement(Relation const& rho) {
  std::size_t const n = rho.size();
  Relation out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!rho.contains(i, j)) out.insert(i, j);
  return out;
}

Relation boolean_op(SetOp kind, Relation const& rho,
                    std::optional<Relation> const& sigma) {
  if (kind == SetOp::complement) return complement(rho);
  if (!sigma) throw PreconditionError("boolean_op: binary kind needs two relations");
  return kind == SetOp::intersect ? intersect(rho, *sigma) : unite(rho, *sigma);
}

Relation constant(Constant kind, std::size_t n) {
  switch (kind) {
    case Constant::diagonal:
      return Relation::from_predicate(n, [](auto i, auto j) { return i == j; });
    case Constant::total:
      return Relation::from_predicate(n, [](auto, auto) { return true; });
    case Constant::empty:
      break;
  }
  return Relation(n);
}

RelationClass classify(Relation const& rho) {
  if (!rho.is_reflexive()) return RelationClass::not_reflexive;
  if (!compose(rho, rho).subset_of(rho)) return RelationClass::reflexive_only;
  if (converse(rho) == rho) return RelationClass::equivalence;
  return RelationClass::preorder;
}

std::string_view to_string(RelationClass c) {
  switch (c) {
    case RelationClass::not_reflexive: return "not_reflexive";
    case RelationClass::reflexive_only: return "reflexive_only";
    case RelationClass::preorder: return "preorder";
    case RelationClass::equivalence: return "equivalence";
  }
  return "unknown";
}

std::string_view to_string(ChainStart s) {
  return s == ChainStart::forward ? "forward" : "converse";
}

Relation alternating_chain(Relation const& rho, std::size_t m, ChainStart start) {
  require_reflexive(rho, "alternating_chain");
  if (m == 0) throw PreconditionError("alternating_chain: m must be positive");
  Relation const inv = converse(rho);
  Relation const& first = start == ChainStart::forward ? rho : inv;
  Relation const& second = start == ChainStart::forward ? inv : rho;
  Relation acc = first;
  for (std::size_t step = 2; step <= m; ++step)
    acc = compose(acc, step % 2 == 0 ? second : first);
  return acc;
}

std::optional<std::size_t> min_chain_length_containing(Relation const& rho,
                                                       ChainStart start,
                                                       Relation const& target) {
  require_reflexive(rho, "min_chain_length_containing");
  require_same_size(rho, target, "min_chain_length_containing");
  Relation const inv = converse(rho);
  Relation const& first = start == ChainStart::forward ? rho : inv;
  Relation const& second = start == ChainStart::forward ? inv : rho;

  // A single repeat can still be followed by growth when rho is not
  // transitive; two repeats in a row mean both factors fix the value.
  Relation acc = first;
  std::size_t repeats = 0;
  for (std::size_t m = 1;; ++m) {
    if (target.subset_of(acc)) return m;
    Relation next = compose(acc, m % 2 == 1 ? second : first);
    repeats = next == acc ? repeats + 1 : 0;
    if (repeats == 2) return std::nullopt;
    acc = std::move(next);
  }
}

std::optional<std::size_t> min_length_to_total(Relation const& rho,
                                               ChainStart start) {
  return min_chain_length_containing(rho, start, total(rho.size()));
}

Residuals residuals(Relation const& rho, Relation const& sigma) {
  require_same_size(rho, sigma, "residuals");
  std::size_t const n = rho.size();
  auto row_subset = [](std::span<Relation::Word const> a,
                       std::span<Relation::Word const> b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] & ~b[k]) return false;
    return true;
  };
  // rho/sigma: row j of sigma inside row i of rho.
  Relation over = Relation::from_predicate(
      n, [&](auto i, auto j) { return row_subset(sigma.row(j), rho.row(i)); });
  // sigma\rho: column i of sigma inside column j of rho.
  Relation const rho_t = converse(rho);
  Relation const sigma_t = converse(sigma);
  Relation under = Relation::from_predicate(
      n, [&](auto i, auto j) { return row_subset(sigma_t.row(i), rho_t.row(j)); });
  return {std::move(over), std::move(under)};
}

Relation fence(std::size_t n) {
  if (n < 2) throw PreconditionError("fence: n must be at least 2");
  return Relation::from_predicate(n, [](std::size_t i, std::size_t j) {
    return i == j || (i % 2 == 1 && (j + 1 == i || j == i + 1));
  });
}

Relation crown(std::size_t n) {
  if (n < 3) throw PreconditionError("crown: n must be at least 3");
  std::size_t const m = 2 * (n - 1);
  return Relation::from_predicate(m, [m](std::size_t i, std::size_t j) {
    return i == j || (i % 2 == 0 && (j == (i + 1) % m || j == (i + m - 1) % m));
  });
}

Relation three_order(int which) {
  if (which != 1 && which != 3 && which != 5)
    throw PreconditionError("three_order: which must be 1, 3 or 5");
  // Chain of five elements starting at which-1, wrapping mod 6.
  std::size_t const base = static_cast<std::size_t>(which - 1);
  auto rank = [base](std::size_t i) -> std::optional<std::size_t> {
    std::size_t const r = (i + 6 - base) % 6;
    if (r == 5) return std::nullopt;
    return r;
  };
  return Relation::from_predicate(6, [&](std::size_t i, std::size_t j) {
    if (i == j) return true;
    auto ri = rank(i);
    auto rj = rank(j);
    return ri && rj && *ri < *rj;
  });
}

Relation named_relation(std::string_view name, std::size_t n) {
  if (name == "fence") return fence(n);
  if (name == "crown") return crown(n);
  if (name == "k135") return three_order(static_cast<int>(n));
  throw PreconditionError("unknown named relation '" + std::string(name) + "'");
}

}  // namespace relgroup
