#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "pcat/subgroup.hpp"

using namespace pcat;

namespace {

ReducedWord w(char const* text) {
  return ReducedWord::parse(text);
}

std::vector<ReducedWord> filter(std::size_t n, std::size_t len,
                                std::function<bool(std::span<const Letter>)> const& keep) {
  std::vector<ReducedWord> out;
  for (auto const& x : all_reduced_words(n, len)) {
    if (keep(x.letters())) {
      out.push_back(x);
    }
  }
  return out;
}

std::vector<ReducedWord> closure(char const* gen, std::size_t n, std::size_t len) {
  std::vector<ReducedWord> gens{w(gen)};
  auto c = closure_generate(gens, n, {len, 1'000'000, 0});
  REQUIRE(c.complete());
  return c.elements();
}

}  // namespace

TEST_CASE("trivial generator") {
  std::vector<ReducedWord> gens{ReducedWord{}};
  auto c = closure_generate(gens, 3, {6, 1000, 0});
  CHECK(c.elements() == std::vector<ReducedWord>{ReducedWord{}});
}

TEST_CASE("closures match exact quotients on words up to length 8") {
  using oracle::even_exponents;
  using oracle::even_length;
  CHECK(closure("1 2", 3, 8) == filter(3, 8, even_length));
  CHECK(closure("1 2 1 2", 3, 8) == filter(3, 8, even_exponents));
  CHECK(closure("1 2 1 2 1 2", 3, 8)
        == filter(3, 8, [](auto x) { return oracle::coxeter_m3_identity(x, 3); }));
  CHECK(closure("1 2 3 1 2 3", 3, 8) == filter(3, 8, oracle::balanced_positions));
}

TEST_CASE("closure of (1,2,1,2) has every (i,j,i,j)") {
  std::vector<ReducedWord> gens{w("1 2 1 2")};
  auto c = closure_generate(gens, 3, {4, 1000, 0});
  for (Letter i = 1; i <= 3; ++i) {
    for (Letter j = 1; j <= 3; ++j) {
      if (i != j) {
        CHECK(c.contains(reduce(std::vector<Letter>{i, j, i, j})));
      }
    }
  }
  auto id = c.find(w("2 3 2 3"));
  REQUIRE(id);
  CHECK_FALSE(c.derivation(*id).empty());
}

TEST_CASE("closure over unbounded letters") {
  std::vector<ReducedWord> gens{w("1 2 3 1 2 3")};
  auto c = closure_generate(gens, kUnboundedLetters, {6, 100000, 0});
  CHECK(c.contains(w("4 7 5 4 7 5")));
  CHECK_FALSE(c.contains(w("1 2 1 2")));
  CHECK_THROWS(c.elements());
}

TEST_CASE("max_count cuts the closure short") {
  std::vector<ReducedWord> gens{w("1 2")};
  auto c = closure_generate(gens, 3, {8, 5, 0});
  CHECK_FALSE(c.complete());
}

TEST_CASE("membership is three-valued") {
  std::vector<ReducedWord> gens{w("1 2 1 2")};
  auto c = closure_generate(gens, 3, {4, 1000, 0});
  std::vector<Certificate> none;
  std::vector<Certificate> ab{Certificate::abelianization};
  CHECK(membership(c, ReducedWord{}, none).verdict == Verdict::yes);
  CHECK(membership(c, w("1 3 1 3"), none).verdict == Verdict::yes);
  // (a_1 a_2)^3 has odd exponents, so the abelianization separates it.
  CHECK(membership(c, w("1 2 1 2 1 2"), none).verdict == Verdict::unknown);
  auto r = membership(c, w("1 2 1 2 1 2"), ab);
  CHECK(r.verdict == Verdict::no);
  CHECK_FALSE(r.certificate.empty());
  // (a_1 a_2 a_3)^2 has even exponents: abelianization cannot decide it.
  CHECK(membership(c, w("1 2 3 1 2 3"), ab).verdict == Verdict::unknown);
}

TEST_CASE("transposition quotient") {
  auto pi = transposition_quotient(4);
  CHECK(pi.evaluate(w("1 2 1 3 4 3 1 2 1 3 4 3")).is_identity());
  CHECK(pi.image(w("1 2")) == "(0,1,2)");
  std::vector<ReducedWord> gens{w("1 2 1 2")};
  CHECK_FALSE(quotient_kills_closure(pi, gens, 4));
  CHECK(quotient_kills_closure(LengthParityQuotient{}, gens, 4));
  CHECK(quotient_kills_closure(AbelianizationQuotient{4}, gens, 4));
  std::vector<ReducedWord> six{w("1 2 1 2 1 2")};
  CHECK(quotient_kills_closure(transposition_quotient(3), six, 3));
}
