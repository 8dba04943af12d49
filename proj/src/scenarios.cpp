#include "relgroup/scenarios.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "relgroup/error.hpp"
#include "relgroup/etperm.hpp"
#include "relgroup/fingroup.hpp"
#include "relgroup/rng.hpp"

namespace relgroup {

namespace {

using nlohmann::json;
using Move = EventualPermutation::Move;

constexpr std::size_t kSampleBudget = 4;

json length_json(std::optional<std::size_t> m) { return m ? json(*m) : json(nullptr); }

json pairs_json(std::vector<Relation::Pair> const& pairs, std::size_t base = 0) {
  json out = json::array();
  for (auto [i, j] : pairs) out.push_back({i + base, j + base});
  return out;
}

std::string describe(EventualPermutation const& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

// Tallies one batch of checks, keeping the first failure for the report.
struct Batch {
  std::size_t checked = 0;
  std::size_t failures = 0;
  json first_failure = nullptr;

  void add(bool ok, json const& detail) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = detail;
  }
  void record_into(ScenarioReport& report, std::string desc, std::string ref) const {
    json computed = {{"checked", checked}, {"failures", failures}};
    if (failures) computed["first_failure"] = first_failure;
    report.record(std::move(desc), std::move(ref), {{"failures", 0}}, std::move(computed),
                  failures == 0 && checked > 0);
  }
};

Relation random_reflexive(std::size_t n, SeededRng& rng) {
  return Relation::from_predicate(n, [&](std::size_t i, std::size_t j) {
    return i == j || rng.below(2) == 1;
  });
}

// Every reflexive relation on n elements, in off-diagonal bitmask order.
std::vector<Relation> all_reflexive(std::size_t n) {
  std::size_t const bits = n * (n - 1);
  std::vector<Relation> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    std::size_t bit = 0;
    std::vector<Relation::Pair> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i == j || ((mask >> bit++) & 1)) pairs.emplace_back(i, j);
    out.emplace_back(n, pairs);
  }
  return out;
}

bool is_preorder(Relation const& rho) {
  auto const c = classify(rho);
  return c == RelationClass::preorder || c == RelationClass::equivalence;
}

// The relation with (pi(i), pi(j)) for every (i, j) in rho.
Relation relabel(Relation const& rho, std::vector<std::size_t> const& pi) {
  std::vector<Relation::Pair> pairs;
  for (auto [i, j] : rho.pairs()) pairs.emplace_back(pi[i], pi[j]);
  return Relation(rho.size(), pairs);
}

}  // namespace

ScenarioReport fence_report(std::size_t lo, std::size_t hi) {
  if (lo < 2 || lo > hi) throw PreconditionError("fence_report: need 2 <= lo <= hi");
  ScenarioReport report;
  report.scenario = "fence";
  report.params = {{"lo", lo}, {"hi", hi}};

  for (std::size_t n = lo; n <= hi; ++n) {
    Relation const rho = fence(n);
    report.check("fence(" + std::to_string(n) + ") forward length to total", "fence.length",
                 n, length_json(min_length_to_total(rho, ChainStart::forward)));

    // Step at which (0, m-1) first enters the forward chain, for m = 1..n.
    json expected = json::array(), computed = json::array();
    for (std::size_t m = 1; m <= n; ++m) {
      expected.push_back(m);
      Relation const target(n, {{0, m - 1}});
      computed.push_back(
          length_json(min_chain_length_containing(rho, ChainStart::forward, target)));
    }
    report.check("fence(" + std::to_string(n) + ") first step containing (0, m-1), m = 1..n",
                 "fence.first-appearance", expected, computed);

    std::vector<Move> const move{{Point{0, 0}, Point{n - 1, 0}}};
    EventualPermutation const f = transfer(n, move);
    report.check("fence(" + std::to_string(n) + ") transfer block 0 -> block n-1 needs n factors",
                 "fence.length", n,
                 length_json(min_product_length(f, rho, ChainStart::forward)));
  }
  return report;
}

ScenarioReport asymmetry_report(std::size_t lo, std::size_t hi) {
  if (lo < 2 || lo > hi) throw PreconditionError("asymmetry_report: need 2 <= lo <= hi");
  ScenarioReport report;
  report.scenario = "asymmetry";
  report.params = {{"lo", lo}, {"hi", hi}};

  Batch odd_agreement;
  auto agreement = [&](std::string const& name, std::optional<std::size_t> fwd,
                       std::optional<std::size_t> conv) {
    // An odd-length composite is total iff its converse, the other start, is.
    bool ok = true;
    if (fwd && *fwd % 2 == 1) ok = ok && conv && *conv <= *fwd;
    if (conv && *conv % 2 == 1) ok = ok && fwd && *fwd <= *conv;
    odd_agreement.add(ok, {{"relation", name}, {"forward", length_json(fwd)},
                           {"converse", length_json(conv)}});
  };

  for (std::size_t n = lo; n <= hi; ++n) {
    std::string const name = "fence(" + std::to_string(n) + ")";
    Relation const rho = fence(n);
    auto const fwd = min_length_to_total(rho, ChainStart::forward);
    auto const conv = min_length_to_total(rho, ChainStart::converse);
    report.check(name + " forward/converse lengths", "asymmetry.fence",
                 {{"forward", n}, {"converse", n % 2 ? n - 1 : n}},
                 {{"forward", length_json(fwd)}, {"converse", length_json(conv)}});
    agreement(name, fwd, conv);
  }
  for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) {
    std::string const name = "crown(" + std::to_string(n) + ")";
    Relation const rho = crown(n);
    auto const fwd = min_length_to_total(rho, ChainStart::forward);
    auto const conv = min_length_to_total(rho, ChainStart::converse);
    report.check(name + " forward/converse lengths on " + std::to_string(2 * (n - 1)) +
                     " elements",
                 "asymmetry.crown", {{"forward", n}, {"converse", n}},
                 {{"forward", length_json(fwd)}, {"converse", length_json(conv)}});
    agreement(name, fwd, conv);
  }
  odd_agreement.record_into(report, "odd-length totals agree between the two starts",
                            "asymmetry.odd-agreement");
  return report;
}

ScenarioReport abc_report() {
  ScenarioReport report;
  report.scenario = "abc";
  report.params = {{"n", 6}, {"indexing", "pairs are 1-based"}};

  std::map<int, Relation> const order{
      {1, three_order(1)}, {3, three_order(3)}, {5, three_order(5)}};
  auto triple = [&](int a, int b, int c) {
    return compose(compose(order.at(a), order.at(b)), order.at(c));
  };
  auto missing = [](Relation const& r) {
    std::vector<Relation::Pair> out;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j)
        if (!r(i, j)) out.emplace_back(i, j);
    return out;
  };

  // Cyclic orders give the total relation. Each of the others misses exactly
  // one chain's top three elements, rotated along with the orders.
  struct Row {
    int a, b, c;
    std::vector<Relation::Pair> gaps;  // 1-based
  };
  std::vector<Row> const rows{
      {5, 3, 1, {}},
      {3, 1, 5, {}},
      {1, 5, 3, {}},
      {1, 3, 5, {{5, 4}, {6, 4}, {6, 5}}},
      {3, 5, 1, {{1, 6}, {2, 1}, {2, 6}}},
      {5, 1, 3, {{3, 2}, {4, 2}, {4, 3}}},
  };
  for (auto const& row : rows) {
    Relation const r = triple(row.a, row.b, row.c);
    std::string const name = "k" + std::to_string(row.a) + " . k" + std::to_string(row.b) +
                             " . k" + std::to_string(row.c);
    json expected_gaps = json::array();
    for (auto [i, j] : row.gaps) expected_gaps.push_back({i, j});
    report.check(name + (row.gaps.empty() ? " is total" : " misses exactly these pairs"),
                 row.gaps.empty() ? "three-orders.cyclic" : "three-orders.other",
                 {{"total", row.gaps.empty()}, {"missing", expected_gaps}},
                 {{"total", r.is_total()}, {"missing", pairs_json(missing(r), 1)}});
  }

  std::vector<std::size_t> shift2(6);
  for (std::size_t i = 0; i < 6; ++i) shift2[i] = (i + 2) % 6;
  bool const rotates = relabel(order.at(1), shift2) == order.at(3) &&
                       relabel(order.at(3), shift2) == order.at(5) &&
                       relabel(order.at(5), shift2) == order.at(1);
  report.check("i -> i+2 (mod 6) maps k1 -> k3 -> k5 -> k1", "three-orders.rotation", true,
               rotates);

  // Permutation side: every element splits as a product over k5, k3, k1.
  Relation const k3k1 = compose(order.at(3), order.at(1));
  Batch split;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    EventualPermutation const f = sample(total(6), seed, kSampleBudget);
    bool ok = false;
    try {
      auto const outer = factorize(f, order.at(5), k3k1);
      auto const inner = factorize(outer.right, order.at(3), order.at(1));
      ok = respects(outer.left, order.at(5)) && respects(inner.left, order.at(3)) &&
           respects(inner.right, order.at(1)) &&
           compose(outer.left, compose(inner.left, inner.right)) == f;
    } catch (std::exception const&) {
      ok = false;
    }
    split.add(ok, {{"seed", seed}, {"f", describe(f)}});
  }
  split.record_into(report, "sampled elements factor through k5, k3, k1 (seeds 0..31)",
                    "three-orders.factorization");

  for (auto const& row : rows) {
    if (row.gaps.empty()) continue;
    auto [i, j] = row.gaps.front();
    std::vector<Move> const move{{Point{i - 1, 0}, Point{j - 1, 0}}};
    EventualPermutation const w = transfer(6, move);
    bool refused = false;
    try {
      (void)factorize(w, order.at(row.a), compose(order.at(row.b), order.at(row.c)));
    } catch (MembershipError const&) {
      refused = true;
    }
    std::string const name = "k" + std::to_string(row.a) + " . k" + std::to_string(row.b) +
                             " . k" + std::to_string(row.c);
    report.check("transfer " + std::to_string(i) + " -> " + std::to_string(j) +
                     " lies outside the product for " + name,
                 "three-orders.witness", {{"respects", false}, {"factorization", "refused"}},
                 {{"respects", respects(w, triple(row.a, row.b, row.c))},
                  {"factorization", refused ? "refused" : "accepted"}});
  }
  return report;
}

ScenarioReport layer_report(Relation const& rho, std::uint64_t seed, std::size_t trials) {
  if (!is_preorder(rho)) throw PreconditionError("layer_report: relation is not a preorder");
  std::size_t const n = rho.size();
  ScenarioReport report;
  report.scenario = "layers";
  report.params = {{"n", n}, {"seed", seed}, {"trials", trials},
                   {"pairs", pairs_json(rho.pairs())}};

  // Chain values until three in a row agree; chain[m-1] is the m-factor one.
  std::vector<Relation> chain{alternating_chain(rho, 1, ChainStart::forward)};
  while (chain.size() < 3 || !(chain[chain.size() - 1] == chain[chain.size() - 2] &&
                               chain[chain.size() - 2] == chain[chain.size() - 3])) {
    chain.push_back(alternating_chain(rho, chain.size() + 1, ChainStart::forward));
  }

  SeededRng rng(seed);
  Batch built, odd, even;
  json counts = json::object();
  Relation const delta = diagonal(n);
  for (std::size_t layer = 1; layer <= chain.size(); ++layer) {
    std::vector<Relation::Pair> fresh;
    if (layer > 1) {
      for (auto const& p : chain[layer - 1].pairs())
        if (!chain[layer - 2](p.first, p.second)) fresh.push_back(p);
      if (fresh.empty()) continue;
    }
    Relation const& within = chain[layer - 1];
    std::map<std::size_t, std::size_t> landed;
    for (std::size_t t = 0; t < trials; ++t) {
      EventualPermutation f = sample(rho, rng.next(), kSampleBudget);
      if (layer > 1) {
        // One forced move along a pair new at this layer, a few along older
        // pairs, and in-block mixing on both sides.
        auto [a, b] = fresh[rng.below(fresh.size())];
        std::vector<Move> moves{{Point{a, rng.between(-3, 3)}, Point{b, rng.between(-3, 3)}}};
        std::size_t const extra = rng.below(kSampleBudget);
        for (std::size_t e = 0; e < extra; ++e) {
          auto const [i, j] = within.pairs()[rng.below(within.count())];
          Point const src{i, rng.between(-3, 3)}, img{j, rng.between(-3, 3)};
          bool clash = false;
          for (auto const& m : moves) clash = clash || m.first == src || m.second == img;
          if (!clash) moves.emplace_back(src, img);
        }
        f = compose(compose(sample(delta, rng.next(), kSampleBudget), transfer(n, moves)),
                    sample(delta, rng.next(), kSampleBudget));
      }
      auto const fl = min_product_length(f, rho, ChainStart::forward);
      built.add(fl == layer, {{"layer", layer}, {"f", describe(f)}});
      EventualPermutation const h = sample(rho, rng.next(), kSampleBudget);
      auto const l = min_product_length(compose(f, h), rho, ChainStart::forward);
      json const detail = {{"layer", layer}, {"f", describe(f)}, {"h", describe(h)},
                           {"product_layer", length_json(l)}};
      if (layer % 2 == 1) {
        odd.add(l == layer, detail);
      } else {
        even.add(l && *l + 1 >= layer && *l <= layer + 1, detail);
      }
      if (l) ++landed[*l];
    }
    json row = json::object();
    for (auto [l, c] : landed) row[std::to_string(l)] = c;
    counts[std::to_string(layer)] = row;
  }

  built.record_into(report, "constructed f lies in its intended layer", kDerivedOracle);
  odd.record_into(report, "odd layer i: f h stays in layer i", "layers.odd");
  if (even.checked == 0) {
    // Chains that settle after one step (equivalences) have no even layers.
    report.record("even layer i: f h lands in layers i-1, i, i+1", "layers.even",
                  {{"failures", 0}}, {{"checked", 0}, {"even_layers", 0}}, true);
  } else {
    even.record_into(report, "even layer i: f h lands in layers i-1, i, i+1", "layers.even");
  }
  report.record("layer of f h by layer of f (attainment counted, not asserted)", "layers.even",
                nullptr, counts, true);
  return report;
}

ScenarioReport theorem_suite(std::size_t n_max, std::uint64_t seed, std::size_t trials,
                             std::size_t pairs) {
  if (n_max < 2) throw PreconditionError("theorem_suite: n_max must be at least 2");
  ScenarioReport report;
  report.scenario = "theorem-suite";
  report.params = {{"n_max", n_max}, {"seed", seed}, {"trials", trials}, {"pairs", pairs}};
  SeededRng rng(seed);

  // Relation pairs: all of them at n = 2, random ones above.
  std::vector<std::pair<Relation, Relation>> work;
  for (auto const& r : all_reflexive(2))
    for (auto const& s : all_reflexive(2)) work.emplace_back(r, s);
  for (std::size_t n = 3; n <= n_max; ++n)
    for (std::size_t p = 0; p < pairs; ++p) {
      Relation r = random_reflexive(n, rng);
      work.emplace_back(std::move(r), random_reflexive(n, rng));
    }

  Batch forward, reverse;
  for (auto const& [rho, sigma] : work) {
    Relation const both = compose(rho, sigma);
    for (std::size_t t = 0; t < trials; ++t) {
      std::uint64_t const sg = rng.next(), sh = rng.next(), sf = rng.next();
      EventualPermutation const g = sample(rho, sg, kSampleBudget);
      EventualPermutation const h = sample(sigma, sh, kSampleBudget);
      forward.add(respects(compose(g, h), both),
                  {{"rho", pairs_json(rho.pairs())}, {"sigma", pairs_json(sigma.pairs())},
                   {"seeds", {sg, sh}}});

      EventualPermutation const f = sample(both, sf, kSampleBudget);
      bool ok = false;
      try {
        auto const [left, right] = factorize(f, rho, sigma);
        ok = respects(left, rho) && respects(right, sigma) && compose(left, right) == f;
      } catch (std::exception const&) {
        ok = false;
      }
      reverse.add(ok, {{"rho", pairs_json(rho.pairs())}, {"sigma", pairs_json(sigma.pairs())},
                       {"seed", sf}});
    }
  }
  forward.record_into(report, "g in S(rho), h in S(sigma) => g h in S(rho . sigma)",
                      "embedding.forward");
  reverse.record_into(report, "members of S(rho . sigma) factor and recompose exactly",
                      "embedding.factorize");

  Batch separated;
  for (std::size_t n = 2; n <= std::min<std::size_t>(n_max, 3); ++n) {
    auto const all = all_reflexive(n);
    for (auto const& r : all)
      for (auto const& s : all) {
        if (r == s) continue;
        EventualPermutation const w = distinguishing_witness(r, s);
        separated.add(respects(w, r) != respects(w, s),
                      {{"rho", pairs_json(r.pairs())}, {"sigma", pairs_json(s.pairs())}});
      }
  }
  separated.record_into(report, "distinct reflexive relations on n <= 3 give distinct subsets",
                        "embedding.injective");

  Batch monoid;
  for (std::size_t n = 2; n <= std::min<std::size_t>(n_max, 3); ++n) {
    for (auto const& r : all_reflexive(n)) {
      json const who = {{"rho", pairs_json(r.pairs())}};
      if (is_preorder(r)) {
        bool closed = true;
        bool const group = classify(r) == RelationClass::equivalence;
        for (std::size_t t = 0; t < trials && closed; ++t) {
          EventualPermutation const f = sample(r, rng.next(), kSampleBudget);
          EventualPermutation const g = sample(r, rng.next(), kSampleBudget);
          closed = respects(compose(f, g), r) && (!group || respects(invert(f), r));
        }
        monoid.add(closed, who);
        continue;
      }
      // A composable pair (i, j), (j, k) whose composite (i, k) is missing.
      bool found = false;
      for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = 0; j < n && !found; ++j)
          for (std::size_t k = 0; k < n && !found; ++k) {
            if (!r(i, j) || !r(j, k) || r(i, k)) continue;
            std::vector<Move> const first{{Point{i, 0}, Point{j, 0}}};
            std::vector<Move> const second{{Point{j, 0}, Point{k, 0}}};
            EventualPermutation const f = transfer(n, first), g = transfer(n, second);
            found = respects(f, r) && respects(g, r) && !respects(compose(f, g), r);
          }
      monoid.add(found, who);
    }
  }
  monoid.record_into(report,
                     "S(rho) closed under products exactly when rho is a preorder (n <= 3)",
                     "monoid.preorder");

  // Cayley embedding over small groups.
  std::vector<GroupPtr> groups;
  for (std::size_t n = 1; n <= 6; ++n) groups.push_back(group_make(GroupKind::cyclic, n));
  for (std::size_t n = 1; n <= 3; ++n) groups.push_back(group_make(GroupKind::symmetric, n));
  groups.push_back(group_make({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));

  Batch c_prod, c_inv, c_meet, c_top, c_inj;
  for (auto const& g : groups) {
    auto const subsets = all_identity_subsets(g);
    std::vector<Relation> image;
    for (auto const& s : subsets) image.push_back(cayley_embed(s));
    json const who = {{"order", g->order()}, {"table", g->table()}};
    std::set<std::vector<Relation::Pair>> distinct;
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      c_inv.add(cayley_embed(inverse(subsets[a])) == converse(image[a]), who);
      distinct.insert(image[a].pairs());
      for (std::size_t b = 0; b < subsets.size(); ++b) {
        c_prod.add(cayley_embed(product(subsets[a], subsets[b])) ==
                       compose(image[a], image[b]),
                   who);
        c_meet.add(cayley_embed(intersect(subsets[a], subsets[b])) ==
                       intersect(image[a], image[b]),
                   who);
      }
    }
    c_top.add(cayley_embed(GroupSubset::whole(g)) == total(g->order()), who);
    c_inj.add(distinct.size() == subsets.size(), who);
  }
  c_prod.record_into(report, "Cayley: product -> composition", "embedding.cayley");
  c_inv.record_into(report, "Cayley: inverse -> converse", "embedding.cayley");
  c_meet.record_into(report, "Cayley: intersection -> intersection", "embedding.cayley");
  c_top.record_into(report, "Cayley: whole group -> total relation", "embedding.cayley");
  c_inj.record_into(report, "Cayley: injective", "embedding.cayley");

  // Coset embedding for every subgroup of S3.
  GroupPtr const s3 = group_make(GroupKind::symmetric, 3);
  Batch k_prod, k_inv, k_meet, k_top, k_inj, k_sub;
  for (auto const& h : all_subgroups(s3)) {
    auto const subsets = all_bi_invariant_subsets(h);
    std::size_t const cosets = left_cosets(h).size();
    json const who = {{"subgroup", h.subset().members()}};
    std::vector<Relation> image;
    std::set<std::vector<Relation::Pair>> distinct;
    for (auto const& s : subsets) {
      image.push_back(coset_embed(s, h));
      distinct.insert(image.back().pairs());
    }
    for (std::size_t a = 0; a < subsets.size(); ++a) {
      k_inv.add(coset_embed(inverse(subsets[a]), h) == converse(image[a]), who);
      for (std::size_t b = 0; b < subsets.size(); ++b) {
        k_prod.add(coset_embed(product(subsets[a], subsets[b]), h) ==
                       compose(image[a], image[b]),
                   who);
        k_meet.add(coset_embed(intersect(subsets[a], subsets[b]), h) ==
                       intersect(image[a], image[b]),
                   who);
      }
    }
    k_top.add(coset_embed(GroupSubset::whole(s3), h) == total(cosets), who);
    k_inj.add(distinct.size() == subsets.size(), who);
    k_sub.add(coset_embed(h.subset(), h) == diagonal(cosets), who);
  }
  k_prod.record_into(report, "cosets of S3: product -> composition", "embedding.coset");
  k_inv.record_into(report, "cosets of S3: inverse -> converse", "embedding.coset");
  k_meet.record_into(report, "cosets of S3: intersection -> intersection", "embedding.coset");
  k_top.record_into(report, "cosets of S3: whole group -> total relation", "embedding.coset");
  k_inj.record_into(report, "cosets of S3: injective on bi-invariant subsets",
                    "embedding.coset");
  k_sub.record_into(report, "cosets of S3: H -> diagonal", "embedding.coset");
  return report;
}

}  // namespace relgroup
