#include <doctest.h>

#include <random>

#include "pcat/exact_rank.hpp"
#include "pcat/linear_rep.hpp"
#include "pcat/properties.hpp"

using namespace pcat;

namespace {

Partition P(char const* t) {
  return Partition::parse(t);
}

}  // namespace

TEST_CASE("tuple indexing is big-endian") {
  std::vector<unsigned> t{1, 0, 2};
  CHECK(encode_tuple(t, 3) == 1 * 9 + 0 * 3 + 2);
  CHECK(decode_tuple(11, 3, 3) == t);
}

TEST_CASE("small matrices by hand") {
  auto pair = t_matrix(named::pair(), 2);
  CHECK(pair.rows() == 1);
  CHECK(pair.cols() == 4);
  CHECK(pair.entries == std::vector<std::pair<TupleIndex, TupleIndex>>{{0, 0}, {0, 3}});
  auto id = t_matrix(named::identity(), 3);
  CHECK(id.entries.size() == 3);
  auto single = t_matrix(named::singleton(), 3);
  CHECK(single.entries.size() == 3);
  auto x = t_matrix(named::crossing(), 2);
  // swap: |ij> -> |ji>
  CHECK(x.at(encode_tuple(std::vector<unsigned>{1, 0}, 2), encode_tuple(std::vector<unsigned>{0, 1}, 2)));
  CHECK_FALSE(x.at(1, 1));
}

TEST_CASE("T_p matches delta on every entry") {
  for (std::size_t n : {1, 2, 3}) {
    for (std::size_t k = 0; k <= 2; ++k) {
      for (std::size_t l = 0; l <= 2; ++l) {
        for (auto const& p : enumerate_partitions(k, l)) {
          CHECK(t_matrix(p, n, Exec::serial) == t_matrix_reference(p, n));
          CHECK(t_matrix(p, n, Exec::parallel) == t_matrix_reference(p, n));
        }
      }
    }
  }
}

TEST_CASE("functoriality") {
  CHECK(check_tensor(named::vierpart(), named::crossing(), 3));
  CHECK(check_involution(P("aab|c"), 3));
  CHECK(check_composition(named::pair(), involute(named::pair()), 4));
  CHECK(check_composition(P("ab|ba"), P("aa|bc"), 3));
  CHECK_THROWS(check_composition(named::pair(), named::identity(), 2));
  CHECK(verify_functoriality(P("ab|ab"), P("ab|ba"), 3));
  CHECK(check_rotation_reshape(P("abc|cab"), 2));
}

TEST_CASE("loop factor is n per removed loop") {
  auto cup = t_matrix(involute(named::pair()), 3);
  auto cap = t_matrix(named::pair(), 3);
  auto m = multiply(cap, cup);
  CHECK(m.rows == 1);
  CHECK(m.cols == 1);
  CHECK(m.entries.at({0, 0}) == 3);
}

TEST_CASE("dump format") {
  auto text = dump(t_matrix(P("a|a"), 2));
  CHECK(text == "tpmatrix 2 1 1 2 2 2\n1 | 1\n2 | 2\n");
}

TEST_CASE("exact rank") {
  IntegerMatrix a{{1, 2}, {2, 4}};
  CHECK(exact_rank(a) == 1);
  IntegerMatrix b{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  CHECK(exact_rank(b) == 3);
  CHECK(exact_rank({}) == 0);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntegerMatrix m(r, std::vector<mpz_class>(c));
    for (auto& row : m) {
      for (auto& x : row) {
        x = static_cast<long>(rng() % 5) - 2;
      }
    }
    // a dependent row
    if (r > 2) {
      for (std::size_t j = 0; j < c; ++j) {
        m[r - 1][j] = 3 * m[0][j] - 2 * m[1][j];
      }
    }
    CHECK(exact_rank(m) == rational_rank(m));
  }
}

TEST_CASE("hom-space dimensions count partitions with at most n blocks") {
  CHECK(hom_space_dimension_all(2, 0, 2).rank == 2);
  for (std::size_t n : {1, 2, 3}) {
    for (std::size_t k = 0; k <= 2; ++k) {
      for (std::size_t l = 0; l <= 2; ++l) {
        auto parts = enumerate_partitions(k, l);
        std::size_t expect = std::count_if(parts.begin(), parts.end(), [&](Partition const& p) {
          return p.block_count() <= n;
        });
        auto h = hom_space_dimension_all(k, l, n);
        CHECK(h.rank == expect);
        CHECK(h.exact);
        CHECK(hom_space_dimension_dense(parts, n) == expect);
      }
    }
  }
}

TEST_CASE("hom-space dimension of a category") {
  auto cat = saturate({}, 4, 1'000'000);
  // Temperley-Lieb: the two noncrossing pairings of 4 points are independent for n >= 2
  CHECK(hom_space_dimension(cat, 2, 2, 2).rank == 2);
  CHECK(hom_space_dimension(cat, 2, 2, 1).rank == 1);
  CHECK(hom_space_dimension(cat, 3, 3, 2).exact == false);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(t_matrix(named::identity_tensor(8), 9), BoundExceeded);
}

TEST_CASE("property suites") {
  for (auto const& r : run_property_suites(16, Exec::serial)) {
    if (r.module == "linear_rep") {
      INFO(r.name << ": " << r.first_failure);
      CHECK(r.passed());
    }
  }
}
