#pragma once

// Permutations of {0..degree-1}, composed left to right: x^(pq) = (x^p)^q.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pcat {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation transposition(std::size_t degree, std::size_t a, std::size_t b);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t x) const noexcept { return images_[x]; }
  std::vector<std::uint8_t> const& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::size_t order() const;
  // "(1,3,2)(4,5)"; "()" for the identity
  std::string cycle_string() const;

  friend Permutation operator*(Permutation const& p, Permutation const& q);
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

// All permutations of {0..n-1} in lexicographic order of image tuples.
std::vector<Permutation> symmetric_group(std::size_t n);
// Closure of the generators under multiplication; sorted.
std::vector<Permutation> generated_group(std::vector<Permutation> const& gens,
                                         std::size_t limit = 1'000'000);

}  // namespace pcat
