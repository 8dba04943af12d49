#include "relgroup/etperm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "relgroup/error.hpp"
#include "relgroup/rng.hpp"

namespace relgroup {

namespace {

// Upper bound on the number of points examined when building a canonical
// form. Canonical forms grow with the shifts and offsets involved; anything
// beyond this is far outside the intended scale.
constexpr std::size_t kMaxCandidates = std::size_t{1} << 22;

std::int64_t default_offset(std::int64_t k, std::int64_t top, std::int64_t bottom) {
  return k + (k >= 0 ? top : bottom);
}

void require_block(std::size_t n, Point p, char const* op) {
  if (p.block >= n) {
    std::ostringstream os;
    os << op << ": block " << p.block << " out of range for n=" << n;
    throw PreconditionError(os.str());
  }
}

void require_same_size(EventualPermutation const& f, EventualPermutation const& g,
                       char const* op) {
  if (f.size() != g.size()) {
    std::ostringstream os;
    os << op << ": permutations on " << f.size() << " and " << g.size() << " blocks";
    throw DimensionError(os.str());
  }
}

void require_reflexive(Relation const& rho, std::size_t n, char const* op) {
  if (rho.size() != n) {
    std::ostringstream os;
    os << op << ": relation on " << rho.size() << " elements, permutation on " << n
       << " blocks";
    throw DimensionError(os.str());
  }
  if (!rho.is_reflexive())
    throw PreconditionError(std::string(op) + ": relation must be reflexive");
}

// Per-block sets of offsets at which a derived map may leave its default.
class Candidates {
 public:
  explicit Candidates(std::size_t n) : offsets_(n) {}

  void add(std::size_t block, std::int64_t k) {
    offsets_[block].insert(k);
    guard();
  }

  // Half-open [lo, hi).
  void add_range(std::size_t block, std::int64_t lo, std::int64_t hi) {
    if (hi > lo && static_cast<std::uint64_t>(hi - lo) > kMaxCandidates)
      throw std::length_error("canonical form exceeds the supported size");
    for (std::int64_t k = lo; k < hi; ++k) offsets_[block].insert(k);
    guard();
  }

  std::vector<std::set<std::int64_t>> const& offsets() const { return offsets_; }

 private:
  void guard() {
    if (++inserted_ > kMaxCandidates && total() > kMaxCandidates)
      throw std::length_error("canonical form exceeds the supported size");
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto const& s : offsets_) t += s.size();
    return t;
  }

  std::vector<std::set<std::int64_t>> offsets_;
  std::size_t inserted_ = 0;
};

}  // namespace

// Evaluates a map on its candidate points and keeps only the entries that
// differ from the default regime. The caller guarantees the map agrees with
// the default everywhere else.
class CanonicalBuilder {
 public:
  template <typename Eval>
  static EventualPermutation build(std::size_t n, std::vector<std::int64_t> top,
                                   std::vector<std::int64_t> bottom,
                                   Candidates const& candidates, Eval&& eval) {
    std::vector<EventualPermutation::Move> exceptions;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::int64_t k : candidates.offsets()[b]) {
        Point const src{b, k};
        Point const img = eval(src);
        Point const def{b, default_offset(k, top[b], bottom[b])};
        if (img != def) exceptions.emplace_back(src, img);
      }
    }
    // Candidate sets are iterated in (block, offset) order already.
    return EventualPermutation(EventualPermutation::Trusted{}, n, std::move(top),
                               std::move(bottom), std::move(exceptions));
  }
};

std::ostream& operator<<(std::ostream& os, Point const& p) {
  return os << '(' << p.block << ',' << p.offset << ')';
}

EventualPermutation::EventualPermutation(std::size_t n, std::vector<std::int64_t> top,
                                         std::vector<std::int64_t> bottom,
                                         std::vector<Move> exceptions)
    : n_(n), top_(std::move(top)), bottom_(std::move(bottom)), exceptions_(std::move(exceptions)) {
  if (n_ == 0) throw PreconditionError("permutation on zero blocks");
  if (top_.size() != n_ || bottom_.size() != n_)
    throw InvariantError("permutation: shift vectors must have one entry per block");
  std::sort(exceptions_.begin(), exceptions_.end());
  for (std::size_t k = 0; k < exceptions_.size(); ++k) {
    auto const& [src, img] = exceptions_[k];
    if (src.block >= n_ || img.block >= n_) {
      std::ostringstream os;
      os << "permutation: exception " << src << "->" << img << " names a block >= " << n_;
      throw InvariantError(os.str());
    }
    if (k > 0 && exceptions_[k - 1].first == src) {
      std::ostringstream os;
      os << "permutation: duplicate exception source " << src;
      throw InvariantError(os.str());
    }
    if (img == default_image(src)) {
      std::ostringstream os;
      os << "permutation: redundant exception " << src << "->" << img
         << " (equals the default image)";
      throw InvariantError(os.str());
    }
  }
}

EventualPermutation::EventualPermutation(Trusted, std::size_t n, std::vector<std::int64_t> top,
                                         std::vector<std::int64_t> bottom,
                                         std::vector<Move> exceptions)
    : n_(n), top_(std::move(top)), bottom_(std::move(bottom)), exceptions_(std::move(exceptions)) {}

EventualPermutation EventualPermutation::identity(std::size_t n) {
  return EventualPermutation(n, std::vector<std::int64_t>(n, 0),
                             std::vector<std::int64_t>(n, 0), {});
}

Point EventualPermutation::default_image(Point p) const {
  return {p.block, default_offset(p.offset, top_[p.block], bottom_[p.block])};
}

Point EventualPermutation::operator()(Point p) const {
  auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(), p,
                             [](Move const& m, Point const& q) { return m.first < q; });
  if (it != exceptions_.end() && it->first == p) return it->second;
  return default_image(p);
}

std::ostream& operator<<(std::ostream& os, EventualPermutation const& f) {
  os << "{n=" << f.size() << " top=[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f.top(i);
  os << "] bottom=[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f.bottom(i);
  os << "] exceptions=[";
  bool first = true;
  for (auto const& [src, img] : f.exceptions()) {
    os << (first ? "" : " ") << src << "->" << img;
    first = false;
  }
  return os << "]}";
}

Point apply(EventualPermutation const& f, Point p) {
  require_block(f.size(), p, "apply");
  return f(p);
}

EventualPermutation compose(EventualPermutation const& f, EventualPermutation const& g) {
  require_same_size(f, g, "compose");
  std::size_t const n = f.size();
  Candidates cand(n);
  for (auto const& [src, img] : f.exceptions()) cand.add(src.block, src.offset);
  for (auto const& [src, img] : g.exceptions()) {
    // Points whose default f-image is a g exception source.
    cand.add(src.block, src.offset - f.top(src.block));
    cand.add(src.block, src.offset - f.bottom(src.block));
  }
  std::vector<std::int64_t> top(n), bottom(n);
  for (std::size_t b = 0; b < n; ++b) {
    top[b] = f.top(b) + g.top(b);
    bottom[b] = f.bottom(b) + g.bottom(b);
    // Points whose f-image crosses the cut at offset 0.
    if (f.top(b) < 0) cand.add_range(b, 0, -f.top(b));
    if (f.bottom(b) > 0) cand.add_range(b, -f.bottom(b), 0);
  }
  return CanonicalBuilder::build(n, std::move(top), std::move(bottom), cand,
                                 [&](Point p) { return g(f(p)); });
}

EventualPermutation invert(EventualPermutation const& f) {
  std::size_t const n = f.size();
  std::map<Point, Point> preimage;
  std::vector<std::set<std::int64_t>> sources(n);
  Candidates cand(n);
  for (auto const& [src, img] : f.exceptions()) {
    preimage.emplace(img, src);
    sources[src.block].insert(src.offset);
    cand.add(img.block, img.offset);
    Point const vacated = f.default_image(src);
    cand.add(vacated.block, vacated.offset);
  }
  std::vector<std::int64_t> top(n), bottom(n);
  for (std::size_t b = 0; b < n; ++b) {
    top[b] = -f.top(b);
    bottom[b] = -f.bottom(b);
    std::int64_t const lo = std::min({std::int64_t{0}, f.top(b), f.bottom(b)});
    std::int64_t const hi = std::max({std::int64_t{0}, f.top(b), f.bottom(b)});
    cand.add_range(b, lo, hi);
  }
  auto eval = [&](Point y) -> Point {
    if (auto it = preimage.find(y); it != preimage.end()) return it->second;
    auto const& src = sources[y.block];
    std::int64_t const up = y.offset - f.top(y.block);
    if (up >= 0 && !src.contains(up)) return {y.block, up};
    std::int64_t const down = y.offset - f.bottom(y.block);
    if (down < 0 && !src.contains(down)) return {y.block, down};
    std::ostringstream os;
    os << "invert: point " << y << " has no preimage; permutation is not valid";
    throw PreconditionError(os.str());
  };
  return CanonicalBuilder::build(n, std::move(top), std::move(bottom), cand, eval);
}

Validation validate(EventualPermutation const& f) {
  std::size_t const n = f.size();
  // Coverage count of each point = base tail coverage + corrections.
  std::vector<std::map<std::int64_t, int>> delta(n);
  std::vector<std::int64_t> inflow(n, 0);
  for (auto const& [src, img] : f.exceptions()) {
    delta[src.block][f.default_image(src).offset] -= 1;
    delta[img.block][img.offset] += 1;
    inflow[img.block] += 1;
    inflow[src.block] -= 1;
  }

  for (std::size_t b = 0; b < n; ++b) {
    std::int64_t const s = f.top(b);
    std::int64_t const t = f.bottom(b);
    auto base = [&](std::int64_t y) { return int(y >= s) + int(y <= t - 1); };

    std::vector<std::int64_t> probe;
    for (auto const& [y, d] : delta[b]) probe.push_back(y);
    // Between the two tails' images the base count is 0 or 2; the first
    // point there that no exception corrects is a witness.
    if (s != t) {
      std::int64_t const lo = std::min(s, t);
      std::int64_t const hi = std::max(s, t) - 1;
      for (std::int64_t y = lo; y <= hi; ++y) {
        if (!delta[b].contains(y)) {
          probe.push_back(y);
          break;
        }
      }
    }
    std::sort(probe.begin(), probe.end());
    for (std::int64_t y : probe) {
      auto it = delta[b].find(y);
      int const cover = base(y) + (it == delta[b].end() ? 0 : it->second);
      if (cover != 1) {
        std::ostringstream os;
        os << (cover > 1 ? "collision at point " : "uncovered point ") << Point{b, y};
        return {false, os.str()};
      }
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (f.top(b) - f.bottom(b) != inflow[b]) {
      std::ostringstream os;
      os << "flow law fails in block " << b << ": top-bottom=" << f.top(b) - f.bottom(b)
         << ", net exceptional inflow=" << inflow[b];
      return {false, os.str()};
    }
  }
  return {};
}

Relation block_relation(EventualPermutation const& f) {
  std::vector<Relation::Pair> pairs;
  for (std::size_t i = 0; i < f.size(); ++i) pairs.emplace_back(i, i);
  for (auto const& [src, img] : f.exceptions()) pairs.emplace_back(src.block, img.block);
  return Relation(f.size(), pairs);
}

bool respects(EventualPermutation const& f, Relation const& rho) {
  require_reflexive(rho, f.size(), "respects");
  for (auto const& [src, img] : f.exceptions())
    if (!rho.contains(src.block, img.block)) return false;
  return true;
}

EventualPermutation generator(Generator kind, std::size_t n, std::size_t i, std::size_t j) {
  if (n == 0) throw PreconditionError("generator: n must be positive");
  if (i >= n || (kind == Generator::transfer_origin && j >= n))
    throw PreconditionError("generator: block index out of range");
  std::vector<std::int64_t> top(n, 0), bottom(n, 0);
  switch (kind) {
    case Generator::shift:
      top[i] = bottom[i] = 1;
      return EventualPermutation(n, top, bottom, {});
    case Generator::unshift:
      top[i] = bottom[i] = -1;
      return EventualPermutation(n, top, bottom, {});
    case Generator::swap:
      return EventualPermutation(n, top, bottom,
                                 {{Point{i, 0}, Point{i, 1}}, {Point{i, 1}, Point{i, 0}}});
    case Generator::transfer_origin:
      break;
  }
  if (i == j) throw PreconditionError("generator: transfer_origin needs distinct blocks");
  top[i] = -1;
  top[j] = 1;
  Candidates cand(n);
  cand.add_range(i, -2, 3);
  cand.add_range(j, -2, 3);
  auto eval = [&](Point p) -> Point {
    if (p.block == i && p.offset == 0) return {j, 0};
    if (p.block == i && p.offset > 0) return {i, p.offset - 1};
    if (p.block == j && p.offset >= 0) return {j, p.offset + 1};
    return p;
  };
  return CanonicalBuilder::build(n, std::move(top), std::move(bottom), cand, eval);
}

EventualPermutation transfer(std::size_t n, std::span<EventualPermutation::Move const> moves) {
  if (n == 0) throw PreconditionError("transfer: n must be positive");
  std::map<Point, Point> target;
  std::set<Point> images;
  for (auto const& [src, img] : moves) {
    require_block(n, src, "transfer");
    require_block(n, img, "transfer");
    if (!target.emplace(src, img).second) {
      std::ostringstream os;
      os << "transfer: point " << src << " is moved twice";
      throw PreconditionError(os.str());
    }
    if (!images.insert(img).second) {
      std::ostringstream os;
      os << "transfer: point " << img << " is the target of two moves";
      throw PreconditionError(os.str());
    }
  }

  std::vector<std::vector<std::int64_t>> out(n), in(n);
  for (auto const& [src, img] : target) {
    out[src.block].push_back(src.offset);
    in[img.block].push_back(img.offset);
  }
  std::vector<std::int64_t> top(n, 0), bottom(n, 0);
  Candidates cand(n);
  for (std::size_t b = 0; b < n; ++b) {
    std::sort(in[b].begin(), in[b].end());
    top[b] = static_cast<std::int64_t>(in[b].size()) - static_cast<std::int64_t>(out[b].size());
    if (out[b].empty() && in[b].empty()) continue;
    std::int64_t lo = -1, hi = 0;
    for (auto k : out[b]) lo = std::min(lo, k), hi = std::max(hi, k);
    for (auto k : in[b]) lo = std::min(lo, k), hi = std::max(hi, k);
    cand.add_range(b, lo, hi + static_cast<std::int64_t>(out[b].size()) + 1);
  }

  // Order-preserving match of the unmoved points onto the unfilled ones:
  // rank among unmoved points, then the point of that rank among unfilled.
  auto eval = [&](Point p) -> Point {
    if (auto it = target.find(p); it != target.end()) return it->second;
    auto const& vacated = out[p.block];
    std::int64_t rank = p.offset;
    for (auto k : vacated)
      if (k < p.offset) --rank;
    std::int64_t y = rank;
    for (auto k : in[p.block])
      if (k <= y) ++y;
    return {p.block, y};
  };
  return CanonicalBuilder::build(n, std::move(top), std::move(bottom), cand, eval);
}

Factorization factorize(EventualPermutation const& f, Relation const& rho,
                        Relation const& sigma) {
  std::size_t const n = f.size();
  require_reflexive(rho, n, "factorize");
  require_reflexive(sigma, n, "factorize");
  Relation const product = compose(rho, sigma);

  // Fresh targets start above everything f touches in each block.
  std::vector<std::int64_t> fresh(n, 0);
  for (auto const& [src, img] : f.exceptions()) {
    fresh[src.block] = std::max(fresh[src.block], src.offset + 1);
    fresh[img.block] = std::max(fresh[img.block], img.offset + 1);
  }

  std::vector<EventualPermutation::Move> moves;
  for (auto const& [src, img] : f.exceptions()) {
    std::size_t const from = src.block;
    std::size_t const to = img.block;
    if (from == to) continue;
    if (!product.contains(from, to)) {
      std::ostringstream os;
      os << "factorize: permutation moves " << src << " to " << img
         << " but (" << from << "," << to << ") is not in the composite relation";
      throw MembershipError(os.str(), from, to);
    }
    std::size_t via = 0;
    while (!(rho.contains(from, via) && sigma.contains(via, to))) ++via;
    moves.emplace_back(src, Point{via, fresh[via]++});
  }

  EventualPermutation left = transfer(n, moves);
  EventualPermutation right = compose(invert(left), f);
  if (!respects(left, rho) || !respects(right, sigma) || compose(left, right) != f)
    throw std::logic_error("factorize: construction failed to recompose");
  return {std::move(left), std::move(right)};
}

std::optional<std::size_t> min_product_length(EventualPermutation const& f,
                                              Relation const& rho, ChainStart start) {
  require_reflexive(rho, f.size(), "min_product_length");
  return min_chain_length_containing(rho, start, block_relation(f));
}

namespace {

constexpr std::int64_t kSampleReach = 3;

EventualPermutation in_block_element(std::size_t n, SeededRng& rng) {
  std::size_t const b = rng.below(n);
  switch (rng.below(4)) {
    case 0: return generator(Generator::shift, n, b);
    case 1: return generator(Generator::unshift, n, b);
    case 2: return generator(Generator::swap, n, b);
    default: break;
  }
  std::int64_t const k = rng.between(-kSampleReach, kSampleReach);
  std::int64_t const l = rng.between(-kSampleReach, kSampleReach);
  if (k == l) return EventualPermutation::identity(n);
  std::vector<EventualPermutation::Move> swap{{Point{b, k}, Point{b, l}},
                                              {Point{b, l}, Point{b, k}}};
  return transfer(n, swap);
}

}  // namespace

EventualPermutation sample(Relation const& rho, std::uint64_t seed, std::size_t budget) {
  std::size_t const n = rho.size();
  require_reflexive(rho, n, "sample");
  SeededRng rng(seed);

  auto mixing = [&] {
    EventualPermutation acc = EventualPermutation::identity(n);
    std::size_t const steps = rng.below(budget + 1);
    for (std::size_t s = 0; s < steps; ++s) acc = compose(acc, in_block_element(n, rng));
    return acc;
  };

  std::vector<EventualPermutation::Move> moves;
  std::set<Point> used_src, used_img;
  std::size_t const count = rng.below(budget + 1);
  for (std::size_t m = 0; m < count; ++m) {
    std::size_t const from = rng.below(n);
    std::vector<std::size_t> allowed;
    for (std::size_t j = 0; j < n; ++j)
      if (rho.contains(from, j)) allowed.push_back(j);
    std::size_t const to = allowed[rng.below(allowed.size())];
    Point const src{from, rng.between(-kSampleReach, kSampleReach)};
    Point const img{to, rng.between(-kSampleReach, kSampleReach)};
    if (used_src.contains(src) || used_img.contains(img)) continue;
    used_src.insert(src);
    used_img.insert(img);
    moves.emplace_back(src, img);
  }

  EventualPermutation const before = mixing();
  EventualPermutation const middle = transfer(n, moves);
  EventualPermutation const after = mixing();
  return compose(compose(before, middle), after);
}

EventualPermutation distinguishing_witness(Relation const& rho, Relation const& sigma) {
  if (rho.size() != sigma.size())
    throw DimensionError("distinguishing_witness: relations of different sizes");
  if (!rho.is_reflexive() || !sigma.is_reflexive())
    throw PreconditionError("distinguishing_witness: relations must be reflexive");
  std::size_t const n = rho.size();
  // Prefer a pair of rho missing from sigma, so the witness lies in S(rho).
  for (auto const& [in, out] : {std::pair{&rho, &sigma}, std::pair{&sigma, &rho}}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (in->contains(i, j) && !out->contains(i, j)) {
          std::vector<EventualPermutation::Move> move{{Point{i, 0}, Point{j, 0}}};
          return transfer(n, move);
        }
      }
    }
  }
  throw PreconditionError("distinguishing_witness: relations are equal");
}

}  // namespace relgroup
