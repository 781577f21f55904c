#include <doctest.h>

#include "oracles.hpp"
#include "pcat/correspondence.hpp"
#include "pcat/properties.hpp"
#include "pcat/reflection_group.hpp"

using namespace pcat;

namespace {

ReducedWord w(char const* text) {
  return ReducedWord::parse(text);
}

}  // namespace

TEST_CASE("the primary part has trivial F-group") {
  std::vector<Partition> gens{named::primarypart()};
  auto cat = saturate(gens, 8, 1'000'000);
  auto f = f_group_generators(cat, 3, 8);
  CHECK(f.elements() == std::vector<ReducedWord>{ReducedWord{}});
}

TEST_CASE("F-group of H_n is the even-exponent subgroup") {
  std::vector<Partition> gens{named::crossing(), named::vierpart()};
  auto cat = saturate(gens, 8, 1'000'000);
  auto f = f_group_generators(cat, 3, 8);
  std::vector<ReducedWord> expect;
  for (auto const& x : all_reduced_words(3, 8)) {
    if (oracle::even_exponents(x.letters())) {
      expect.push_back(x);
    }
  }
  CHECK(f.elements() == expect);
  CHECK(f.elements() == f_group_reference(cat, 3, 8));
  auto const* e = f.provenance(w("1 2 1 2"));
  REQUIRE(e != nullptr);
  CHECK(word_of_labelled_partition(e->partition, e->labelling) == e->word);
}

TEST_CASE("orbit enumeration agrees with all labellings") {
  for (auto const* g : {"aabaab|", "abcabc|", "aaaa|"}) {
    std::vector<Partition> gens{Partition::parse(g), named::crossing()};
    auto cat = saturate(gens, 6, 1'000'000);
    CHECK(f_group_generators(cat, 3, 6, Exec::serial).elements() == f_group_reference(cat, 3, 6));
    CHECK(f_group_generators(cat, 3, 6, Exec::parallel).elements()
          == f_group_generators(cat, 3, 6, Exec::serial).elements());
  }
}

TEST_CASE("category of a subgroup round-trips") {
  std::vector<ReducedWord> gens{w("1 2 1 2")};
  auto N = closure_generate(gens, 3, {8, 1'000'000, 0});
  auto rep = roundtrip_check(N, 3, 8, 8);
  CHECK(rep.forward.holds);
  CHECK(rep.backward.holds);
  CHECK(rep.category_complete);
  auto sc = category_from_subgroup(N, 6);
  CHECK(sc.category.cached(named::primarypart()));
  CHECK(sc.category.cached(Partition::parse("abab|")));
  CHECK(sc.category.cached(Partition::parse("abcabc|")));
  CHECK_FALSE(sc.category.cached(Partition::parse("ab|")));
}

TEST_CASE("trivial subgroup gives the smallest group-theoretical category") {
  std::vector<ReducedWord> gens{ReducedWord{}};
  auto N = closure_generate(gens, 3, {6, 1000, 0});
  auto sc = category_from_subgroup(N, 6);
  // Some 6-point members of <primarypart> are only reached through 8-point
  // intermediates.
  std::vector<Partition> prim{named::primarypart()};
  std::vector<Partition> small;
  for (auto const& p : saturate(prim, 8, 1'000'000).sorted()) {
    if (p.points() <= 6) {
      small.push_back(p);
    }
  }
  CHECK(sc.category.sorted() == small);
  CHECK(small.size() == 124);
}

TEST_CASE("diagonal subgroup") {
  std::vector<Partition> gens{named::crossing(), named::vierpart()};
  auto cat = saturate(gens, 6, 1'000'000);
  auto spec = diagonal_subgroup(cat, 3, 4);
  CHECK(spec.n == 3);
  auto has = [&](char const* t) {
    return std::find(spec.relators.begin(), spec.relators.end(), w(t)) != spec.relators.end();
  };
  CHECK(has("1 2 1 2"));
  CHECK(has("2 3 2 3"));
  CHECK_FALSE(has("1 2"));
  auto en = enumerate_group(spec, 1000);
  REQUIRE(en.model);
  CHECK(en.model->order() == 8);
}

TEST_CASE("F-group laws") {
  auto r = f_group_law_check(3000, 21);
  CHECK(r.samples == 3000);
  CHECK(r.passed());
}

TEST_CASE("property suites") {
  for (auto const& r : run_property_suites(15, Exec::serial)) {
    if (r.module == "correspondence") {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.passed());
    }
  }
}
