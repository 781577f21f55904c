#pragma once

// Bounded closures of sS_n-invariant normal subgroups of Z_2^{*n} and the
// three-valued membership test.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcat/common.hpp"
#include "pcat/permutation.hpp"
#include "pcat/word.hpp"

namespace pcat {

inline constexpr std::size_t kUnboundedLetters = 0;

struct ClosureBounds {
  std::size_t max_length = 8;
  std::size_t max_count = 1'000'000;
  // Intermediate words may be up to max_length + slack long.
  std::size_t slack = 0;
};

enum class WordOp : std::uint8_t {
  identity,
  generator,
  inverse,
  conjugate,
  identify,
  product
};

struct WordDerivation {
  WordOp op = WordOp::identity;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  // conjugate: {letter}; identify: {from, to}; product: images of b's letters
  std::vector<Letter> data;

  friend auto operator<=>(WordDerivation const&, WordDerivation const&) = default;
};

// Elements are stored as canonical orbit representatives: letters renamed
// in order of first occurrence. Membership of any word is decided on its
// canonical form, which is sound because the subgroup is S_n-invariant.
class SubgroupCache {
 public:
  SubgroupCache() = default;

  std::size_t letters() const noexcept { return n_; }
  bool unbounded_letters() const noexcept { return n_ == kUnboundedLetters; }
  ClosureBounds const& bounds() const noexcept { return bounds_; }
  bool complete() const noexcept { return complete_; }
  std::size_t rounds() const noexcept { return rounds_; }
  std::vector<ReducedWord> const& generators() const noexcept { return generators_; }

  // Representatives of length <= max_length, shortlex order.
  std::vector<ReducedWord> representatives() const;
  std::size_t internal_size() const noexcept { return words_.size(); }
  ReducedWord const& internal_word(std::size_t id) const { return words_.at(id); }

  std::optional<std::size_t> find(ReducedWord const& w) const;
  bool contains(ReducedWord const& w) const { return find(w).has_value(); }

  // Every element over the letters 1..n; requires bounded letters.
  std::vector<ReducedWord> elements() const;

  // One line per step, leaves first.
  std::vector<std::string> derivation(std::size_t id) const;

  friend SubgroupCache closure_generate(std::span<const ReducedWord>, std::size_t,
                                        ClosureBounds, Exec);

 private:
  std::size_t n_ = kUnboundedLetters;
  ClosureBounds bounds_;
  bool complete_ = false;
  std::size_t rounds_ = 0;
  std::vector<ReducedWord> generators_;
  std::vector<ReducedWord> words_;
  std::vector<WordDerivation> derivations_;
  std::unordered_map<ReducedWord, std::uint32_t, WordHash> index_;
};

// n = kUnboundedLetters closes over arbitrarily many letters.
SubgroupCache closure_generate(std::span<const ReducedWord> generators,
                               std::size_t n, ClosureBounds bounds,
                               Exec exec = Exec::parallel);

// Serial reference: naive fixpoint over explicit words on letters 1..n
// (bounded n only), applying every letter map and conjugation by every
// letter, with products of all pairs. Returns all words, shortlex.
std::vector<ReducedWord> closure_reference(std::span<const ReducedWord> generators,
                                           std::size_t n, std::size_t max_length);

// Homomorphism from Z_2^{*m} to a finite group.
class FiniteQuotient {
 public:
  virtual ~FiniteQuotient() = default;
  virtual std::string name() const = 0;
  // Largest letter the map is defined on; 0 if every letter.
  virtual std::size_t letters() const = 0;
  virtual bool kills(ReducedWord const& w) const = 0;
  virtual std::string image(ReducedWord const& w) const = 0;
};

class AbelianizationQuotient final : public FiniteQuotient {
 public:
  explicit AbelianizationQuotient(std::size_t n) : n_(n) {}
  std::string name() const override;
  std::size_t letters() const override { return n_; }
  bool kills(ReducedWord const& w) const override;
  std::string image(ReducedWord const& w) const override;

 private:
  std::size_t n_;
};

class LengthParityQuotient final : public FiniteQuotient {
 public:
  std::string name() const override { return "length parity Z_2"; }
  std::size_t letters() const override { return 0; }
  bool kills(ReducedWord const& w) const override { return w.size() % 2 == 0; }
  std::string image(ReducedWord const& w) const override {
    return std::to_string(w.size() % 2);
  }
};

// Generator images in a permutation group; letter i goes to images[i-1].
class PermutationQuotient : public FiniteQuotient {
 public:
  PermutationQuotient(std::string name, std::vector<Permutation> images);
  std::string name() const override { return name_; }
  std::size_t letters() const override { return images_.size(); }
  bool kills(ReducedWord const& w) const override { return evaluate(w).is_identity(); }
  std::string image(ReducedWord const& w) const override {
    return evaluate(w).cycle_string();
  }
  Permutation evaluate(ReducedWord const& w) const;

 private:
  std::string name_;
  std::vector<Permutation> images_;
};

// a_i goes to the transposition (0 i) in S_{n+1}.
PermutationQuotient transposition_quotient(std::size_t n);

enum class Certificate { abelianization, length_parity, transposition };

struct MembershipResult {
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> derivation;
  std::string certificate;
};

// True iff q kills every image of every generator under letter maps into
// 1..m; for an S_n-invariant normal closure this means q kills the subgroup.
bool quotient_kills_closure(FiniteQuotient const& q,
                            std::span<const ReducedWord> generators, std::size_t m);

MembershipResult membership(SubgroupCache const& cache, ReducedWord const& w,
                            std::span<const Certificate> certificates,
                            std::span<const FiniteQuotient* const> extra = {});

}  // namespace pcat
