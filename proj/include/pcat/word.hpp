#pragma once

// Words in the free product of order-2 groups and in the free monoid.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcat/partition.hpp"

namespace pcat {

using Letter = unsigned;  // letters are positive

class MonoidWord {
 public:
  MonoidWord() = default;
  explicit MonoidWord(std::vector<Letter> letters);
  static MonoidWord parse(std::string_view text);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter max_letter() const noexcept;
  std::string to_string() const;

  friend auto operator<=>(MonoidWord const&, MonoidWord const&) = default;

 private:
  std::vector<Letter> letters_;
};

// Element of Z_2^{*n}: no two adjacent letters equal.
class ReducedWord {
 public:
  ReducedWord() = default;
  static ReducedWord reduce(std::span<const Letter> seq);
  static ReducedWord parse(std::string_view text);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter max_letter() const noexcept;
  std::size_t distinct_letters() const;
  std::string to_string() const;

  // Shortlex: length first.
  friend std::strong_ordering operator<=>(ReducedWord const& a,
                                          ReducedWord const& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(ReducedWord const&, ReducedWord const&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(ReducedWord const& w) const noexcept;
  std::size_t operator()(MonoidWord const& w) const noexcept;
};

class LetterMap {
 public:
  LetterMap() = default;
  explicit LetterMap(std::map<Letter, Letter> images) : images_(std::move(images)) {}
  // images[i] is the image of letter i + 1
  static LetterMap from_images(std::span<const Letter> images);

  Letter operator()(Letter x) const;
  bool defined_on(Letter x) const { return images_.count(x) != 0; }
  void set(Letter x, Letter y) { images_[x] = y; }
  std::map<Letter, Letter> const& images() const noexcept { return images_; }
  // (this ∘ other)(x) = this(other(x))
  LetterMap after(LetterMap const& other) const;

 private:
  std::map<Letter, Letter> images_;
};

ReducedWord reduce(std::span<const Letter> seq);
ReducedWord multiply(ReducedWord const& v, ReducedWord const& w);
ReducedWord invert(ReducedWord const& w);
ReducedWord conjugate(Letter a, ReducedWord const& w);  // a w a
ReducedWord endo_apply(LetterMap const& phi, ReducedWord const& w);
MonoidWord endo_apply(LetterMap const& phi, MonoidWord const& w);

// Relabels letters in order of first occurrence to 1, 2, ...
ReducedWord canonical_relabel(ReducedWord const& w);
// canonical_relabel(reduce(seq))
ReducedWord canonical_form(std::span<const Letter> seq);
bool is_canonical(ReducedWord const& w);

ReducedWord word_of_labelled_partition(Partition const& p,
                                       std::span<const Letter> i);
bool conjugate_rotation_identity_check(Partition const& p,
                                       std::span<const Letter> i, Letter i0);

std::vector<std::size_t> exponent_vector(MonoidWord const& w, std::size_t n);
std::vector<std::size_t> exponent_vector(ReducedWord const& w, std::size_t n);

// Images of random even-length words under random endomorphisms of the
// infinite free product; true iff every image has even length.
bool is_fully_characteristic_even_check(std::size_t sample_size,
                                        std::uint64_t seed = 1,
                                        std::size_t max_word_length = 12);

// All reduced words of length <= max_length over letters 1..n, shortlex order.
std::vector<ReducedWord> all_reduced_words(std::size_t n, std::size_t max_length);
// Reduced words whose letters appear in first-occurrence order and use at
// most max_letters distinct letters (0 = any).
std::vector<ReducedWord> canonical_reduced_words(std::size_t max_letters,
                                                 std::size_t max_length);
// Calls f for every injective relabelling of w's letters into 1..n; each
// image is produced once. w must be canonical.
void for_each_relabelling(ReducedWord const& w, std::size_t n,
                          std::function<void(ReducedWord const&)> const& f);

}  // namespace pcat
