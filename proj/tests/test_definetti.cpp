#include <doctest.h>

#include "oracles.hpp"
#include "pcat/definetti.hpp"
#include "pcat/properties.hpp"

using namespace pcat;

namespace {

MonoidWord m(char const* text) {
  return MonoidWord::parse(text);
}

}  // namespace

TEST_CASE("kernel examples") {
  auto star = hyperoctahedral_series_spec(3, 0);
  CHECK(is_in_kernel(m("1 2 1 2"), star).verdict == Verdict::no);
  CHECK(is_in_kernel(m("1 2 3 3 2 1"), star).verdict == Verdict::yes);
  CHECK(is_in_kernel(m("1 2 3 1 2 3"), star).verdict == Verdict::yes);
  auto h2 = hyperoctahedral_series_spec(3, 2);
  CHECK(is_in_kernel(m("1 2 1 2"), h2).verdict == Verdict::yes);
  CHECK(is_in_kernel(m("1 1"), h2).verdict == Verdict::yes);
  CHECK(is_in_kernel(m("1"), h2).verdict == Verdict::no);
  CHECK_THROWS_AS(is_in_kernel(m("4"), h2), std::invalid_argument);
}

TEST_CASE("oracle methods") {
  CHECK(KernelOracle(hyperoctahedral_series_spec(3, 3)).method() == "affine");
  CHECK(KernelOracle(higher_series_spec(3, 2)).method() == "finite");
  ReflectionGroupSpec free3;
  free3.n = 3;
  free3.relators = {ReducedWord{}};
  CHECK(KernelOracle(free3).method() == "free");
  CHECK(KernelOracle(higher_series_spec(3, 3), 2000).method() == "closure");
}

TEST_CASE("balanced words") {
  CHECK(is_balanced(m("1 2 2 1"), 2));
  CHECK_FALSE(is_balanced(m("1 2 1 2"), 2));
  CHECK(is_balanced(m("1 2 3 3 2 1"), 3));
  CHECK(is_balanced(MonoidWord{}, 3));
  for (auto const& x : all_monoid_words(3, 7)) {
    CHECK(is_balanced(x, 3) == oracle::balanced_positions(x.letters()));
  }
}

TEST_CASE("kernel agrees with the quotients on all short words") {
  auto h2 = KernelOracle(hyperoctahedral_series_spec(3, 2));
  auto hh2 = KernelOracle(higher_series_spec(3, 2));
  auto star = KernelOracle(hyperoctahedral_series_spec(3, 0));
  auto h3 = KernelOracle(hyperoctahedral_series_spec(3, 3));
  auto model = *enumerate_group(hyperoctahedral_series_spec(3, 3), 1000).model;
  for (auto const& x : all_monoid_words(3, 6)) {
    bool ev = oracle::even_exponents(x.letters());
    CHECK((h2.decide(x).verdict == Verdict::yes) == ev);
    CHECK((hh2.decide(x).verdict == Verdict::yes) == ev);
    CHECK((star.decide(x).verdict == Verdict::yes) == oracle::balanced_positions(x.letters()));
    bool tc = model.evaluate(x.letters()) == FiniteGroupModel::identity();
    CHECK((h3.decide(x).verdict == Verdict::yes) == tc);
  }
}

TEST_CASE("moment tables") {
  auto t = MomentTable::independent_signs(2, 4);
  CHECK(t.problems().empty());
  CHECK(*t.value(m("1 1 2 2")) == 1);
  CHECK(*t.value(m("1 2")) == 0);
  auto back = MomentTable::from_json(nlohmann::json::parse(t.to_json().dump()));
  CHECK(back.entries() == t.entries());

  auto j = nlohmann::json::parse(R"({"n": 1, "degree": 2, "entries": {"e": "1", "1": "0", "1 1": "3/4"}})");
  auto small = MomentTable::from_json(j);
  CHECK(*small.value(m("1 1")) == mpq_class(3, 4));
  CHECK(small.problems().empty());

  MomentTable partial(2, 2);
  partial.set(MonoidWord{}, 1);
  CHECK_FALSE(partial.problems().empty());
  CHECK_THROWS(invariance_check(partial, hyperoctahedral_series_spec(2, 2)));
}

TEST_CASE("invariance conditions") {
  auto spec = hyperoctahedral_series_spec(3, 2);
  auto ok = invariance_check(MomentTable::independent_signs(3, 6), spec);
  CHECK(ok.passed());
  CHECK(ok.words_checked == all_monoid_words(3, 6).size());

  auto odd = MomentTable::independent_signs(3, 4);
  odd.set(m("1"), mpq_class(1, 2));
  auto bad = invariance_check(odd, spec);
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.violations.front().condition == 'a');
  CHECK(bad.violations.front().word == m("1"));

  auto asym = MomentTable::independent_signs(2, 2);
  asym.set(m("1 1"), 2);
  auto b = invariance_check(asym, hyperoctahedral_series_spec(2, 2));
  CHECK_FALSE(b.passed());
  bool saw_b = false;
  for (auto const& v : b.violations) {
    saw_b = saw_b || v.condition == 'b';
  }
  CHECK(saw_b);
}

TEST_CASE("property suites") {
  for (auto const& r : run_property_suites(18, Exec::serial)) {
    if (r.module == "definetti") {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.passed());
    }
  }
}
