#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pcat/partition.hpp"
#include "pcat/properties.hpp"

using namespace pcat;

TEST_CASE("counts match brute-force set partitions") {
  std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t k = 0; k < bell.size(); ++k) {
    CHECK(enumerate_partitions(k).size() == bell[k]);
    CHECK(oracle::set_partition_count(k) == bell[k]);
  }
  CHECK(enumerate_partitions(1, 1).size() == 2);
  CHECK(enumerate_partitions(2, 3).size() == 52);
}

TEST_CASE("text form") {
  CHECK(Partition::parse("ab|ab").to_string() == "ab|ab");
  CHECK(Partition::parse("aa|").upper() == 2);
  CHECK(Partition::parse("|aa").lower() == 2);
  CHECK(Partition::parse("ba|ab") == Partition::parse("ab|ba"));
  CHECK(Partition::parse("|ba").to_string() == "|ab");
  CHECK(Partition::parse("a|ab").label(Row::lower, 1) == 0);
  CHECK(Partition::parse("aabaab|").block_count() == 2);
  CHECK_THROWS_AS(Partition::parse("a|b|c"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("aB|"), std::invalid_argument);
  CHECK(named::crossing().to_string() == "ab|ab");
  CHECK(named::vierpart().to_string() == "aaaa|");
}

TEST_CASE("tensor, involution, rotation") {
  auto id = named::identity();
  CHECK(tensor(id, id).to_string() == "ab|ba");
  CHECK(tensor(named::pair(), named::singleton()).to_string() == "aab|");
  CHECK(involute(Partition::parse("aab|c")).to_string() == "a|bcc");
  auto x = named::crossing();
  CHECK(rotate(x, Rotation::upper_to_lower).to_string() == "a|bab");
  CHECK(rotate(rotate(x, Rotation::upper_to_lower), Rotation::lower_to_upper) == x);
  CHECK(to_one_line(x).to_string() == "abab|");
  CHECK(move_last_leg_to_front(Partition::parse("aab|")).to_string() == "abb|");
}

TEST_CASE("composition counts removed loops") {
  auto cup = involute(named::pair());
  auto c = compose(named::pair(), cup);
  CHECK(c.partition.points() == 0);
  CHECK(c.loops == 1);
  auto v = compose(named::identity(), named::identity());
  CHECK(v.partition == named::identity());
  CHECK(v.loops == 0);
  // the pair partition bent through a crossing stays the pair
  auto pc = compose(named::pair(), named::crossing());
  CHECK(pc.partition == named::pair());
  CHECK(pc.loops == 0);
  auto four = Partition::parse("aa|aa");
  auto vv = compose(four, four);
  CHECK(vv.loops == 0);
  CHECK(vv.partition.to_string() == "aa|aa");
}

TEST_CASE("delta is constancy on blocks") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    auto p = random_partition(rng, rng() % 4, rng() % 4);
    std::vector<unsigned> i(p.upper()), j(p.lower());
    for (auto& x : i) {
      x = rng() % 3;
    }
    for (auto& x : j) {
      x = rng() % 3;
    }
    bool expect = true;
    for (std::size_t a = 0; a < p.points(); ++a) {
      for (std::size_t b = 0; b < p.points(); ++b) {
        auto va = a < p.upper() ? i[a] : j[a - p.upper()];
        auto vb = b < p.upper() ? i[b] : j[b - p.upper()];
        if (p.label(a) == p.label(b) && va != vb) {
          expect = false;
        }
      }
    }
    CHECK(delta(p, i, j) == expect);
  }
}

TEST_CASE("refinement and kernels") {
  std::vector<unsigned> idx{2, 2, 5, 2};
  CHECK(ker(idx).to_string() == "aaba|");
  CHECK(refines(Partition::parse("abca|"), Partition::parse("abba|")));
  CHECK_FALSE(refines(Partition::parse("abba|"), Partition::parse("abca|")));
  CHECK(is_compatible_labelling(Partition::parse("abab|"), std::vector<unsigned>{1, 2, 1, 2}));
  CHECK_FALSE(is_compatible_labelling(Partition::parse("abab|"), std::vector<unsigned>{1, 2, 2, 2}));
}

TEST_CASE("property suites") {
  for (auto const& r : run_property_suites(11, Exec::serial)) {
    if (r.module == "partition") {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.passed());
    }
  }
}
