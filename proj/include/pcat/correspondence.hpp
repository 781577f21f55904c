#pragma once

// Categories of partitions versus sS_n-invariant normal subgroups of Z_2^{*n}.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcat/category.hpp"
#include "pcat/common.hpp"
#include "pcat/subgroup.hpp"
#include "pcat/word.hpp"

namespace pcat {

struct FGroupEntry {
  ReducedWord word;  // canonical representative
  Partition partition;
  std::vector<Letter> labelling;
};

// The words w(p, i) of a category, stored up to renaming of letters.
class FGroupCache {
 public:
  std::size_t letters() const noexcept { return n_; }
  std::size_t length_bound() const noexcept { return length_bound_; }
  std::size_t category_size() const noexcept { return category_size_; }
  std::size_t labellings_checked() const noexcept { return labellings_; }
  std::vector<FGroupEntry> const& entries() const noexcept { return entries_; }
  std::vector<ReducedWord> representatives() const;
  bool contains(ReducedWord const& w) const;
  FGroupEntry const* provenance(ReducedWord const& w) const;
  // All words over 1..n, shortlex.
  std::vector<ReducedWord> elements() const;

  friend FGroupCache f_group_generators(Category const&, std::size_t, std::size_t, Exec);

 private:
  std::size_t n_ = 0;
  std::size_t length_bound_ = 0;
  std::size_t category_size_ = 0;
  std::size_t labellings_ = 0;
  std::vector<FGroupEntry> entries_;
  std::unordered_map<ReducedWord, std::size_t, WordHash> index_;
};

FGroupCache f_group_generators(Category const& cat, std::size_t n,
                               std::size_t length_bound, Exec exec = Exec::parallel);

// Serial reference: every labelling in {1..n}^k of every cached one-line
// partition, no orbit reduction. Shortlex.
std::vector<ReducedWord> f_group_reference(Category const& cat, std::size_t n,
                                           std::size_t length_bound);

struct SubgroupCategory {
  Category category;
  // Closure of the subgroup's generators over arbitrarily many letters.
  SubgroupCache extended;
  std::vector<Partition> kernels;  // one-line seeds
  std::size_t seeds = 0;           // kernels and all their rotations
  std::vector<Partition> added;    // produced by saturation, not a seed
};

SubgroupCategory category_from_subgroup(SubgroupCache const& N, std::size_t max_points,
                                        std::size_t max_count = 10'000'000,
                                        Exec exec = Exec::parallel);

struct InclusionResult {
  bool holds = true;
  std::size_t checked = 0;
  std::vector<ReducedWord> counterexamples;  // at most kMaxCounterexamples
};

inline constexpr std::size_t kMaxCounterexamples = 20;

struct RoundtripReport {
  std::size_t n = 0;
  std::size_t word_bound = 0;
  std::size_t point_bound = 0;
  std::size_t subgroup_representatives = 0;
  std::size_t category_size = 0;
  std::size_t kernel_count = 0;
  std::size_t saturation_additions = 0;
  bool category_complete = false;
  bool subgroup_complete = false;
  InclusionResult forward;   // F_n(C) within N
  InclusionResult backward;  // N within F_n(C)
  double ms_category = 0;
  double ms_fgroup = 0;
  double ms_compare = 0;
};

RoundtripReport roundtrip_check(SubgroupCache const& N, std::size_t n,
                                std::size_t word_bound, std::size_t point_bound,
                                Exec exec = Exec::parallel);

struct ReflectionGroupSpec;

ReflectionGroupSpec diagonal_subgroup(Category const& cat, std::size_t n,
                                      std::size_t length_bound);

}  // namespace pcat
