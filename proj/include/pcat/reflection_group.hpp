#pragma once

// Quotients of Z_2^{*n} by relators, coset enumeration, and the series
// presentations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcat/common.hpp"
#include "pcat/permutation.hpp"
#include "pcat/word.hpp"

namespace pcat {

enum class SeriesVariant { none, hyperoctahedral, higher };

struct SeriesTag {
  SeriesVariant variant = SeriesVariant::none;
  std::size_t s = 0;  // 0 = infinity
};

// Every generator is an involution; relators are reduced and nonempty
// unless the set is {e}.
struct ReflectionGroupSpec {
  std::size_t n = 0;
  std::vector<ReducedWord> relators;
  std::string note;
  SeriesTag series;
};

class FiniteGroupModel {
 public:
  using Element = std::uint32_t;

  FiniteGroupModel(std::size_t n, std::vector<Element> table,
                   std::vector<ReducedWord> representatives);

  std::size_t order() const noexcept { return reps_.size(); }
  std::size_t generators() const noexcept { return n_; }
  static constexpr Element identity() noexcept { return 0; }

  // Right multiplication by the generator a_x.
  Element act(Element g, Letter x) const { return table_[g * n_ + (x - 1)]; }
  Element evaluate(std::span<const Letter> word) const;
  Element evaluate(ReducedWord const& w) const { return evaluate(w.letters()); }
  Element multiply(Element g, Element h) const;
  Element inverse(Element g) const;
  std::size_t element_order(Element g) const;
  // Shortlex-least word for g.
  ReducedWord const& representative(Element g) const { return reps_.at(g); }
  bool is_even(Element g) const { return reps_.at(g).size() % 2 == 0; }

 private:
  std::size_t n_;
  std::vector<Element> table_;
  std::vector<ReducedWord> reps_;
};

struct EnumerationOutcome {
  std::optional<FiniteGroupModel> model;
  std::size_t max_order = 0;
  std::size_t cosets_defined = 0;
  bool exceeded() const noexcept { return !model.has_value(); }
};

// Todd-Coxeter coset enumeration over the trivial subgroup.
EnumerationOutcome enumerate_group(ReflectionGroupSpec const& spec, std::size_t max_order);

ReflectionGroupSpec hyperoctahedral_series_spec(std::size_t n, std::size_t s);
ReflectionGroupSpec higher_series_spec(std::size_t n, std::size_t s);
ReflectionGroupSpec trivial_group_spec(std::size_t n);

// Sufficient test for invariance of the normal closure under letter maps:
// every image of a relator is e or a cyclic conjugate of a relator or of
// its inverse.
bool relators_letter_map_closed(ReflectionGroupSpec const& spec);

// Image of sigma(w) where sigma permutes letters; sigma[i-1] is the image of i.
ReducedWord permute_letters(std::vector<Letter> const& sigma, ReducedWord const& w);

// Affine maps x -> v + sign * x on (Z_s)^n (s = 0 means Z^n); a_i acts as
// x -> e_i - x. A model of the hyperoctahedral series.
struct AffineElement {
  int sign = 1;
  std::vector<long> v;
  friend auto operator<=>(AffineElement const&, AffineElement const&) = default;
};
AffineElement affine_series_image(std::span<const Letter> word, std::size_t n, std::size_t s);
bool affine_is_identity(AffineElement const& g);

struct EvenSubgroupReport {
  std::size_t n = 0;
  std::optional<std::size_t> group_order;
  std::optional<std::size_t> even_order;
  std::optional<std::size_t> index;
  std::vector<std::optional<std::size_t>> b_orders;
  Verdict b_commute = Verdict::unknown;
  std::string commute_evidence;
  // For hyperoctahedral series specs: even_order == s^{n-1}.
  std::optional<bool> series_order_matches;
  bool relators_even = true;
};

EvenSubgroupReport even_subgroup_analysis(ReflectionGroupSpec const& spec,
                                          std::size_t max_order,
                                          std::size_t word_bound = 10);

// sigma(b_i) expressed in b_1..b_{n-1}; b_n = e. Pairs (index, exponent).
std::vector<std::pair<std::size_t, int>> sn_action_on_even_generators(
    std::vector<Letter> const& sigma, std::size_t i);
// Expands a word in the b's into letters.
ReducedWord expand_even_word(std::vector<std::pair<std::size_t, int>> const& bword,
                             std::size_t n);

struct SemidirectReport {
  std::size_t n = 0;
  std::size_t gamma_order = 0;
  std::size_t dimension = 0;
  bool relators_invariant = false;
  bool unitary = false;
  bool comultiplication_formula = false;
  bool coassociative = false;
  bool multiplicative = false;
  bool commutative = false;
  bool all() const {
    return relators_invariant && unitary && comultiplication_formula && coassociative
           && multiplicative;
  }
};

SemidirectReport semidirect_matrix_check(ReflectionGroupSpec const& spec,
                                         FiniteGroupModel const& gamma, std::size_t n);

struct NonEasyReport {
  std::size_t n = 0;
  std::size_t generated_order = 0;
  std::size_t expected_order = 0;
  bool surjective = false;
  bool invariance_exact = false;  // generator images conjugate by the permutation
  std::size_t invariance_samples = 0;
  std::size_t invariance_failures = 0;
  std::size_t kernel_words = 0;
  bool witness_found = false;
  ReducedWord witness;
  std::vector<Letter> phi;  // phi[i-1] is the image of letter i
  ReducedWord witness_image;
  std::string pi_witness;
  std::string pi_image;
  bool passed() const {
    return surjective && invariance_exact && invariance_failures == 0 && witness_found;
  }
};

NonEasyReport non_easy_example_check(std::size_t n, std::size_t samples = 1000,
                                     std::uint64_t seed = 1,
                                     std::size_t max_word_length = 10);

}  // namespace pcat
