#ifndef RELGROUP_RNG_HPP
#define RELGROUP_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace relgroup {

// Seeded generator for test instances. Bounded draws use a plain modulo so
// that sequences are identical on every platform, which
// std::uniform_int_distribution does not promise.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace relgroup

#endif  // RELGROUP_RNG_HPP
