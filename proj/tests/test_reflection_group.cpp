#include <doctest.h>

#include "oracles.hpp"
#include "pcat/permutation.hpp"
#include "pcat/properties.hpp"
#include "pcat/reflection_group.hpp"
#include "pcat/subgroup.hpp"

using namespace pcat;

namespace {

ReducedWord w(char const* text) {
  return ReducedWord::parse(text);
}

std::size_t order(ReflectionGroupSpec const& spec, std::size_t bound = 100'000) {
  auto en = enumerate_group(spec, bound);
  REQUIRE(en.model);
  return en.model->order();
}

}  // namespace

TEST_CASE("permutations compose left to right") {
  auto a = Permutation::transposition(3, 0, 1);
  auto b = Permutation::transposition(3, 0, 2);
  CHECK((a * b)(0) == 1);
  CHECK((a * b).cycle_string() == "(0,1,2)");
  CHECK((a * b).order() == 3);
  CHECK(symmetric_group(4).size() == 24);
  CHECK(generated_group({a, b}).size() == 6);
}

TEST_CASE("coset enumeration of small Coxeter groups") {
  // dihedral of order 2m
  for (std::size_t m = 1; m <= 6; ++m) {
    ReflectionGroupSpec spec;
    spec.n = 2;
    std::vector<Letter> r;
    for (std::size_t t = 0; t < m; ++t) {
      r.push_back(1);
      r.push_back(2);
    }
    spec.relators = {reduce(r)};
    CHECK(order(spec) == 2 * m);
  }
  // A_3 = S_4
  ReflectionGroupSpec a3;
  a3.n = 3;
  a3.relators = {w("1 2 1 2 1 2"), w("2 3 2 3 2 3"), w("1 3 1 3")};
  CHECK(order(a3) == 24);
  CHECK(order(trivial_group_spec(3)) == 1);
}

TEST_CASE("series orders against the affine group") {
  for (auto [n, s] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {2, 5}, {3, 4}}) {
    auto got = order(hyperoctahedral_series_spec(n, s));
    CHECK(got == oracle::affine_group_order(n, static_cast<long>(s)));
    std::size_t formula = 2;
    for (std::size_t t = 1; t < n; ++t) {
      formula *= s;
    }
    CHECK(got == formula);
  }
  CHECK(order(higher_series_spec(3, 2)) == 8);
  CHECK(enumerate_group(higher_series_spec(3, 3), 5000).exceeded());
}

TEST_CASE("coset enumeration agrees with the affine model word by word") {
  auto spec = hyperoctahedral_series_spec(3, 3);
  auto model = *enumerate_group(spec, 1000).model;
  for (auto const& x : all_reduced_words(3, 8)) {
    bool tc = model.evaluate(x) == FiniteGroupModel::identity();
    CHECK(tc == affine_is_identity(affine_series_image(x.letters(), 3, 3)));
  }
}

TEST_CASE("finite group model operations") {
  auto model = *enumerate_group(hyperoctahedral_series_spec(3, 3), 1000).model;
  for (FiniteGroupModel::Element g = 0; g < model.order(); ++g) {
    CHECK(model.multiply(g, model.inverse(g)) == FiniteGroupModel::identity());
    CHECK(model.evaluate(model.representative(g)) == g);
  }
  CHECK(model.element_order(model.evaluate(w("1 2"))) == 3);
  CHECK(model.is_even(model.evaluate(w("1 2"))));
}

TEST_CASE("letter-map closure of relators") {
  CHECK(relators_letter_map_closed(hyperoctahedral_series_spec(3, 2)));
  CHECK(relators_letter_map_closed(higher_series_spec(4, 3)));
  ReflectionGroupSpec odd;
  odd.n = 3;
  odd.relators = {w("1 2 1 2")};
  CHECK_FALSE(relators_letter_map_closed(odd));
  CHECK(permute_letters({2, 3, 1}, w("1 2 1 3")) == w("2 3 2 1"));
}

TEST_CASE("even subgroup dichotomy") {
  for (auto [n, s] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    auto e = even_subgroup_analysis(hyperoctahedral_series_spec(n, s), 100'000);
    CHECK(e.b_commute == Verdict::yes);
    REQUIRE(e.series_order_matches);
    CHECK(*e.series_order_matches);
    REQUIRE(e.index);
    CHECK(*e.index == 2);
    for (auto const& o : e.b_orders) {
      REQUIRE(o);
      CHECK(*o == s);
    }
  }
  auto h3 = even_subgroup_analysis(higher_series_spec(3, 3), 10'000);
  CHECK(h3.b_commute == Verdict::no);
  CHECK_FALSE(h3.commute_evidence.empty());
}

TEST_CASE("S_n acts on the even generators") {
  std::size_t n = 4;
  for (auto const& p : symmetric_group(n)) {
    std::vector<Letter> sigma;
    for (auto x : p.images()) {
      sigma.push_back(x + 1);
    }
    for (std::size_t i = 1; i < n; ++i) {
      auto bi = reduce(std::vector<Letter>{static_cast<Letter>(n), static_cast<Letter>(i)});
      auto image = expand_even_word(sn_action_on_even_generators(sigma, i), n);
      CHECK(image == permute_letters(sigma, bi));
    }
  }
}

TEST_CASE("non-easy quotient") {
  auto r = non_easy_example_check(4, 1000, 1);
  CHECK(r.generated_order == 120);
  CHECK(r.surjective);
  CHECK(r.invariance_exact);
  CHECK(r.invariance_samples == 1000);
  CHECK(r.invariance_failures == 0);
  REQUIRE(r.witness_found);
  CHECK(r.pi_witness == "()");
  CHECK(r.pi_image == "(1,3,2)");
  // independent evaluation of the witness and its image
  auto pi = transposition_quotient(4);
  CHECK(pi.evaluate(r.witness).is_identity());
  std::vector<Letter> img;
  for (auto x : r.witness.letters()) {
    img.push_back(r.phi.at(x - 1));
  }
  CHECK(reduce(img) == r.witness_image);
  CHECK(pi.image(r.witness_image) == "(1,3,2)");
  CHECK(non_easy_example_check(3, 200, 2).passed());
}

TEST_CASE("semi-direct product identities") {
  for (std::size_t n : {1, 2, 3}) {
    auto spec = trivial_group_spec(n);
    CHECK(semidirect_matrix_check(spec, *enumerate_group(spec, 10).model, n).all());
  }
  auto z2 = hyperoctahedral_series_spec(3, 2);
  auto r = semidirect_matrix_check(z2, *enumerate_group(z2, 100).model, 3);
  CHECK(r.gamma_order == 8);
  CHECK(r.all());
  CHECK(r.commutative);
  auto h3 = hyperoctahedral_series_spec(2, 3);
  auto r3 = semidirect_matrix_check(h3, *enumerate_group(h3, 100).model, 2);
  CHECK(r3.gamma_order == 6);
  CHECK(r3.all());
  CHECK_FALSE(r3.commutative);

  ReflectionGroupSpec lopsided;
  lopsided.n = 3;
  lopsided.relators = {w("3"), w("1 2 1 2")};
  auto m = *enumerate_group(lopsided, 100).model;
  CHECK_THROWS(semidirect_matrix_check(lopsided, m, 3));
}

TEST_CASE("property suites") {
  for (auto const& r : run_property_suites(17, Exec::serial)) {
    if (r.module == "reflection_group") {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.passed());
    }
  }
}
