#ifndef RELGROUP_FREEGROUP_HPP
#define RELGROUP_FREEGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "relgroup/report.hpp"

namespace relgroup {

// Generator names of a free group. Words over different alphabets do not mix.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  std::string const& name(std::size_t g) const { return names_.at(g); }
  // Throws PreconditionError for an unknown name.
  std::size_t index(std::string_view name) const;

  bool operator==(Alphabet const&) const = default;

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

struct Letter {
  std::uint32_t generator = 0;
  bool inverted = false;

  Letter inverse() const { return {generator, !inverted}; }
  bool operator==(Letter const&) const = default;
  auto operator<=>(Letter const&) const = default;
};

// A freely reduced word: no letter is adjacent to its inverse.
class ReducedWord {
 public:
  explicit ReducedWord(AlphabetPtr alphabet);
  // Freely reduces `letters`.
  ReducedWord(AlphabetPtr alphabet, std::vector<Letter> const& letters);

  // Syntax: whitespace-separated generator names with optional exponents,
  // e.g. "z^-1 x z y" or "x^3 y". The result is freely reduced.
  static ReducedWord parse(AlphabetPtr alphabet, std::string_view text);

  AlphabetPtr const& alphabet() const { return alphabet_; }
  std::vector<Letter> const& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  ReducedWord inverse() const;
  std::string to_string() const;

  bool operator==(ReducedWord const& other) const;
  bool operator<(ReducedWord const& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

ReducedWord word_multiply(ReducedWord const& u, ReducedWord const& v);

// Strips every leading and trailing power of generator h, naming the double
// coset <h> w <h>. Pure powers of h normalize to the empty word.
ReducedWord double_coset_normal(ReducedWord const& w, std::size_t h);

// A finite union of <h>-double cosets, held as their normal forms. The
// empty normal form stands for <h> itself.
class DoubleCosetUnion {
 public:
  DoubleCosetUnion(AlphabetPtr alphabet, std::size_t h);

  DoubleCosetUnion& add(ReducedWord const& representative);
  bool contains(ReducedWord const& w) const;
  bool contains_subgroup() const;
  std::set<ReducedWord> const& normal_forms() const { return forms_; }
  std::size_t generator() const { return h_; }

  friend DoubleCosetUnion intersect(DoubleCosetUnion const& a, DoubleCosetUnion const& b);

 private:
  AlphabetPtr alphabet_;
  std::size_t h_;
  std::set<ReducedWord> forms_;
};

// Checks, over the free group on {x, y, z} with H = <x>, that the map
// S -> {(HgH, HgsH)} sends S = H u HyH and T = H u H z^-1xzy H to relations
// both containing (HzH, HzyH), while the image of S n T = H does not.
ScenarioReport verify_counterexample();

}  // namespace relgroup

#endif  // RELGROUP_FREEGROUP_HPP
