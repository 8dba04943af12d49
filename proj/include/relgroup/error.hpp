#ifndef RELGROUP_ERROR_HPP
#define RELGROUP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace relgroup {

// Operands of incompatible sizes (index sets, groups, alphabets).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value failed a structural invariant on construction.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a permutation moves material along a block pair that the
// requested relation does not allow.
class MembershipError : public PreconditionError {
 public:
  MembershipError(std::string const& what, std::size_t from, std::size_t to)
      : PreconditionError(what), pair_(from, to) {}

  std::pair<std::size_t, std::size_t> violating_pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

}  // namespace relgroup

#endif  // RELGROUP_ERROR_HPP
