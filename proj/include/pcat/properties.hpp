#pragma once

// Seeded property suites over every module; `pcat selftest` runs them all.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pcat/common.hpp"
#include "pcat/partition.hpp"
#include "pcat/word.hpp"

namespace pcat {

struct PropertyResult {
  std::string module;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return cases > 0 && failures == 0; }
};

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, Exec exec = Exec::parallel);

// Random restricted growth string on k points, uniform over label choices
// rather than over partitions.
Partition random_partition(std::mt19937_64& rng, std::size_t k, std::size_t l);

struct LabelledPartition {
  Partition p;
  std::vector<Letter> labels;
};

// One-line partition on at most max_points points with a compatible
// labelling by letters 1..n.
LabelledPartition random_labelled_partition(std::mt19937_64& rng, std::size_t max_points,
                                            std::size_t n);

struct FGroupLawResult {
  std::size_t samples = 0;
  std::size_t product_failures = 0;
  std::size_t inverse_failures = 0;
  std::size_t conjugation_failures = 0;
  bool passed() const {
    return product_failures == 0 && inverse_failures == 0 && conjugation_failures == 0;
  }
};

// The product, inverse and conjugation identities for words of labelled
// partitions, on seeded random samples.
FGroupLawResult f_group_law_check(std::size_t samples, std::uint64_t seed,
                                  std::size_t max_points = 6, std::size_t max_n = 4);

}  // namespace pcat
