#include "pcat/exact_rank.hpp"

#include <stdexcept>

namespace pcat {

namespace {

  IntegerMatrix transposed(IntegerMatrix const& m) {
    if (m.empty()) {
      return m;
    }
    IntegerMatrix t(m[0].size(), std::vector<mpz_class>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        t[j][i] = m[i][j];
      }
    }
    return t;
  }

  void check_rectangular(IntegerMatrix const& m) {
    for (auto const& row : m) {
      if (row.size() != m[0].size()) {
        throw std::invalid_argument("matrix rows have different lengths");
      }
    }
  }

}  // namespace

std::size_t exact_rank(IntegerMatrix m) {
  if (m.empty()) {
    return 0;
  }
  check_rectangular(m);
  if (m[0].size() < m.size()) {
    m = transposed(m);
  }
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  mpz_class prev = 1, t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::size_t rational_rank(IntegerMatrix const& m) {
  if (m.empty()) {
    return 0;
  }
  check_rectangular(m);
  std::vector<std::vector<mpq_class>> a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (auto const& x : m[i]) {
      a[i].emplace_back(x);
    }
  }
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) {
      ++p;
    }
    if (p == rows) {
      continue;
    }
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) {
        continue;
      }
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] -= f * a[r][j];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace pcat
