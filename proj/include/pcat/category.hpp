#pragma once

// Bounded saturation of categories of partitions.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcat/common.hpp"
#include "pcat/partition.hpp"

namespace pcat {

enum class PartitionOp : std::uint8_t {
  seed,
  generator,
  tensor,
  compose,
  involute,
  rotate_down,
  rotate_up
};

char const* to_string(PartitionOp op);

struct PartitionDerivation {
  PartitionOp op = PartitionOp::seed;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend auto operator<=>(PartitionDerivation const&, PartitionDerivation const&) = default;
};

class Category {
 public:
  Category() = default;

  std::vector<Partition> const& generators() const noexcept { return generators_; }
  std::size_t max_points() const noexcept { return max_points_; }
  std::size_t max_count() const noexcept { return max_count_; }
  bool complete() const noexcept { return complete_; }
  // max_points when a fixpoint was reached, nothing if max_count cut it short.
  std::optional<std::size_t> complete_up_to() const;
  std::size_t rounds() const noexcept { return rounds_; }

  std::size_t size() const noexcept { return parts_.size(); }
  Partition const& partition(std::size_t id) const { return parts_.at(id); }
  PartitionDerivation const& derivation_step(std::size_t id) const {
    return derivs_.at(id);
  }
  std::optional<std::size_t> find(Partition const& p) const;
  bool cached(Partition const& p) const { return find(p).has_value(); }

  // Cached members of P(k,l), sorted.
  std::vector<Partition> members(std::size_t k, std::size_t l) const;
  std::vector<Partition> sorted() const;

  // Post-order trace: "#id partition = op(#a, #b)".
  std::vector<std::string> derivation(std::size_t id) const;

  friend Category saturate(std::span<const Partition>, std::size_t, std::size_t, Exec);

 private:
  std::vector<Partition> generators_;
  std::size_t max_points_ = 0;
  std::size_t max_count_ = 0;
  bool complete_ = false;
  std::size_t rounds_ = 0;
  std::vector<Partition> parts_;
  std::vector<PartitionDerivation> derivs_;
  std::unordered_map<PartitionKey, std::uint32_t, PartitionKeyHash> index_;
};

// Fixpoint of tensor, compose, involute and basic rotations over results with
// at most max_points points, starting from generators plus the pair and |.
Category saturate(std::span<const Partition> generators, std::size_t max_points,
                  std::size_t max_count, Exec exec = Exec::parallel);

// Serial reference: apply every operation to every pair until nothing new
// appears. Sorted.
std::vector<Partition> saturate_reference(std::span<const Partition> generators,
                                          std::size_t max_points);

struct ContainsResult {
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> derivation;
  std::string certificate;
};

// Sound "no" answers from invariants of the generating set:
//  - all blocks even;
//  - all blocks of size <= 2;
//  - a finite quotient killing the words of the generators but not the word
//    of p's one-line form under an injective labelling.
ContainsResult contains(Category const& cat, Partition const& p);
Verdict is_hyperoctahedral(Category const& cat);
Verdict is_group_theoretical(Category const& cat);

}  // namespace pcat
