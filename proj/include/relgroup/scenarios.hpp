#ifndef RELGROUP_SCENARIOS_HPP
#define RELGROUP_SCENARIOS_HPP

#include <cstddef>
#include <cstdint>

#include "relgroup/relation.hpp"
#include "relgroup/report.hpp"

namespace relgroup {

// Fence product lengths for n in [lo, hi], n >= 2: the forward chain first
// becomes total at step n, the pair (0, m-1) first shows up at step m, and a
// single transfer from block 0 to block n-1 needs n factors.
ScenarioReport fence_report(std::size_t lo, std::size_t hi);

// Forward/converse lengths for fences (n >= 2) and crowns (n >= 3) in
// [lo, hi], plus the odd-length agreement between the two starts.
ScenarioReport asymmetry_report(std::size_t lo, std::size_t hi);

// The six triple composites of the three chain orders, the index rotation
// permuting them, and the matching permutation-side checks.
ScenarioReport abc_report();

// Right multiplication by the monoid of a preorder keeps odd layers fixed
// and moves even layers by at most one. `trials` pairs (f, h) per layer.
// Throws PreconditionError when rho is not a preorder.
ScenarioReport layer_report(Relation const& rho, std::uint64_t seed, std::size_t trials);

// Batches for both directions of the embedding theorem, injectivity, the
// monoid/preorder correspondence, and the Cayley and coset embeddings.
// `trials` is the number of sampled elements per relation pair; `pairs` the
// number of random relation pairs for each n in [3, n_max].
ScenarioReport theorem_suite(std::size_t n_max, std::uint64_t seed, std::size_t trials,
                             std::size_t pairs = 200);

}  // namespace relgroup

#endif  // RELGROUP_SCENARIOS_HPP
