#include <doctest.h>

#include "oracles.hpp"
#include "pcat/properties.hpp"
#include "pcat/word.hpp"

using namespace pcat;

namespace {
ReducedWord w(char const* text) {
  return ReducedWord::parse(text);
}
}  // namespace

TEST_CASE("reduction") {
  CHECK(w("1 1 2").to_string() == "2");
  CHECK(w("1 2 2 1").empty());
  CHECK(w("e").empty());
  CHECK(w("1 2 2 1").to_string() == "e");
  CHECK(w("3 1 1 3 2").to_string() == "2");
  CHECK_THROWS_AS(w("1 x"), std::invalid_argument);
  CHECK_THROWS_AS(w("0 1"), std::invalid_argument);
}

TEST_CASE("group operations") {
  CHECK(multiply(w("1 2"), w("2 3")) == w("1 3"));
  CHECK(invert(w("1 2 3")) == w("3 2 1"));
  CHECK(conjugate(1, w("2")) == w("1 2 1"));
  CHECK(conjugate(1, w("1 2")) == w("2 1"));
  CHECK(multiply(w("1 2 3"), invert(w("1 2 3"))).empty());
}

TEST_CASE("letter maps") {
  auto phi = LetterMap::from_images(std::vector<Letter>{1, 1, 3});
  CHECK(endo_apply(phi, w("1 2 1 2")).empty());
  CHECK(endo_apply(phi, w("1 3 2 3")) == w("1 3 1 3"));
  CHECK(endo_apply(phi, MonoidWord::parse("2 2 3")).to_string() == "1 1 3");
  auto psi = LetterMap::from_images(std::vector<Letter>{2, 3, 1});
  CHECK(phi.after(psi)(1) == 1);
  CHECK(phi.after(psi)(3) == 1);
  CHECK(psi.after(phi)(2) == 2);
}

TEST_CASE("canonical forms") {
  CHECK(canonical_relabel(w("3 1 3")) == w("1 2 1"));
  CHECK(is_canonical(w("1 2 3 1")));
  CHECK_FALSE(is_canonical(w("2 1")));
  std::size_t images = 0;
  for_each_relabelling(w("1 2 1"), 3, [&](ReducedWord const&) { ++images; });
  CHECK(images == 6);
}

TEST_CASE("words of labelled partitions") {
  auto p = Partition::parse("abba|");
  CHECK(word_of_labelled_partition(p, std::vector<Letter>{1, 2, 2, 1}).empty());
  auto q = Partition::parse("abab|");
  CHECK(word_of_labelled_partition(q, std::vector<Letter>{1, 2, 1, 2}) == w("1 2 1 2"));
  auto h = named::primarypart();
  CHECK(word_of_labelled_partition(h, std::vector<Letter>{1, 1, 2, 1, 1, 2}).empty());
  CHECK(conjugate_rotation_identity_check(q, std::vector<Letter>{1, 2, 1, 2}, 3));
}

TEST_CASE("exponents") {
  auto e = exponent_vector(MonoidWord::parse("1 2 2 3 1 1"), 3);
  CHECK(e == std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("enumeration sizes") {
  // 1 + 3 (2^8 - 1)
  CHECK(all_reduced_words(3, 8).size() == 766);
  CHECK(all_reduced_words(2, 5).size() == 11);
  auto c = canonical_reduced_words(0, 4);
  CHECK(std::all_of(c.begin(), c.end(), [](ReducedWord const& x) { return is_canonical(x); }));
}

TEST_CASE("even length under endomorphisms") {
  CHECK(is_fully_characteristic_even_check(10'000, 5, 12));
  // Sending a_1 to e is also an endomorphism of the free product; it takes
  // the even word a_1 a_2 to a_2.
  auto kill1 = [](ReducedWord const& x) {
    std::vector<Letter> seq;
    for (auto y : x.letters()) {
      if (y != 1) {
        seq.push_back(y);
      }
    }
    return reduce(seq);
  };
  CHECK(oracle::even_length(w("1 2").letters()));
  CHECK_FALSE(oracle::even_length(kill1(w("1 2")).letters()));
}

TEST_CASE("property suites") {
  for (auto const& r : run_property_suites(12, Exec::serial)) {
    if (r.module == "word") {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.passed());
    }
  }
}
