#pragma once

// Brute-force models used to check the library from outside.

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "pcat/partition.hpp"
#include "pcat/word.hpp"

namespace oracle {

using pcat::Letter;

// Restricted growth strings of length k, by trying every map into 0..k-1 and
// keeping the distinct kernels.
inline std::size_t set_partition_count(std::size_t k) {
  std::set<std::vector<unsigned>> kernels;
  std::vector<unsigned> f(k, 0);
  while (true) {
    std::vector<unsigned> rgs(k);
    std::map<unsigned, unsigned> seen;
    for (std::size_t i = 0; i < k; ++i) {
      auto [it, fresh] = seen.emplace(f[i], static_cast<unsigned>(seen.size()));
      rgs[i] = it->second;
    }
    kernels.insert(rgs);
    std::size_t pos = 0;
    while (pos < k && ++f[pos] == k) {
      f[pos++] = 0;
    }
    if (pos == k) {
      break;
    }
  }
  return kernels.size();
}

// Blocks of a one-line partition are noncrossing: no a < b < c < d with
// a, c in one block and b, d in another.
inline bool noncrossing(pcat::Partition const& p) {
  auto n = p.points();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          if (p.label(a) == p.label(c) && p.label(b) == p.label(d)
              && p.label(a) != p.label(b)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool even_length(std::span<const Letter> w) {
  return w.size() % 2 == 0;
}

inline bool even_exponents(std::span<const Letter> w) {
  std::map<Letter, std::size_t> c;
  for (auto x : w) {
    ++c[x];
  }
  return std::all_of(c.begin(), c.end(), [](auto const& kv) { return kv.second % 2 == 0; });
}

// Every letter sits as often on odd as on even positions.
inline bool balanced_positions(std::span<const Letter> w) {
  std::map<Letter, long> c;
  for (std::size_t t = 0; t < w.size(); ++t) {
    c[w[t]] += t % 2 == 0 ? 1 : -1;
  }
  return std::all_of(c.begin(), c.end(), [](auto const& kv) { return kv.second == 0; });
}

// Geometric representation of the Coxeter group with m_ij = 3 for all i != j,
// which is faithful: s_i e_i = -e_i, s_i e_j = e_j + e_i.
inline bool coxeter_m3_identity(std::span<const Letter> w, std::size_t n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
  }
  for (auto x : w) {
    std::size_t i = x - 1;
    // left-multiply by s_i: row i becomes -row_i + sum_{j != i} row_j
    std::vector<long> row(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      row[c] = -m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          row[c] += m[j][c];
        }
      }
    }
    m[i] = row;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != (i == j ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

// Order of the group of maps x -> v + sign x on (Z_s)^n generated by
// x -> e_i - x, by breadth-first search.
inline std::size_t affine_group_order(std::size_t n, long s) {
  using El = std::pair<int, std::vector<long>>;
  std::set<El> seen{{1, std::vector<long>(n, 0)}};
  std::vector<El> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<El> next;
    for (auto const& [sign, v] : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        // (e_i - x) after (v + sign x) = e_i - v - sign x
        El g{-sign, v};
        for (auto& c : g.second) {
          c = ((-c) % s + s) % s;
        }
        g.second[i] = (g.second[i] + 1) % s;
        if (seen.insert(g).second) {
          next.push_back(g);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace oracle
