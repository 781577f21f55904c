#include "pcat/linear_rep.hpp"

#include <algorithm>
#include <sstream>

#include <omp.h>

#include "pcat/exact_rank.hpp"

namespace pcat {

namespace {

  TupleIndex power(std::size_t n, std::size_t e) {
    TupleIndex r = 1;
    for (std::size_t t = 0; t < e; ++t) {
      r *= n;
      if (r > kMaxMatrixSide * kMaxMatrixSide) {
        break;
      }
    }
    return r;
  }

  void check_size(Partition const& p, std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("n must be at least 1");
    }
    if (power(n, std::max(p.upper(), p.lower())) > kMaxMatrixSide
        || power(n, p.block_count()) > kMaxMatrixNonzeros) {
      throw BoundExceeded("T_p for " + p.to_string() + " at n = " + std::to_string(n)
                          + " exceeds the matrix size limit");
    }
  }

}  // namespace

TupleIndex encode_tuple(std::span<const unsigned> tuple, std::size_t n) {
  TupleIndex x = 0;
  for (auto v : tuple) {
    x = x * n + v;
  }
  return x;
}

std::vector<unsigned> decode_tuple(TupleIndex index, std::size_t legs, std::size_t n) {
  std::vector<unsigned> t(legs);
  for (std::size_t s = legs; s-- > 0;) {
    t[s] = static_cast<unsigned>(index % n);
    index /= n;
  }
  return t;
}

TupleIndex TpMatrix::rows() const {
  return power(n, l);
}

TupleIndex TpMatrix::cols() const {
  return power(n, k);
}

bool TpMatrix::at(TupleIndex row, TupleIndex col) const {
  return std::binary_search(entries.begin(), entries.end(), std::pair{row, col});
}

namespace {

  // One (row, col) per assignment of values to blocks; unsorted, distinct.
  std::vector<std::pair<TupleIndex, TupleIndex>> block_entries(Partition const& p,
                                                               std::size_t n, Exec exec) {
    check_size(p, n);
    std::size_t b = p.block_count();
    TupleIndex total = power(n, b);
    std::vector<TupleIndex> upper_weight(p.upper()), lower_weight(p.lower());
    for (std::size_t t = 0; t < p.upper(); ++t) {
      upper_weight[t] = power(n, p.upper() - 1 - t);
    }
    for (std::size_t t = 0; t < p.lower(); ++t) {
      lower_weight[t] = power(n, p.lower() - 1 - t);
    }
    std::vector<std::pair<TupleIndex, TupleIndex>> out(total);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && total > 4096)
    for (TupleIndex a = 0; a < total; ++a) {
      std::array<TupleIndex, kMaxPoints> value{};
      TupleIndex x = a;
      for (std::size_t s = b; s-- > 0;) {
        value[s] = x % n;
        x /= n;
      }
      TupleIndex row = 0, col = 0;
      for (std::size_t t = 0; t < p.upper(); ++t) {
        col += value[p.label(Row::upper, t)] * upper_weight[t];
      }
      for (std::size_t t = 0; t < p.lower(); ++t) {
        row += value[p.label(Row::lower, t)] * lower_weight[t];
      }
      out[a] = {row, col};
    }
    return out;
  }

}  // namespace

TpMatrix t_matrix(Partition const& p, std::size_t n, Exec exec) {
  TpMatrix m{n, p.upper(), p.lower(), block_entries(p, n, exec)};
  std::sort(m.entries.begin(), m.entries.end());
  return m;
}

TpMatrix t_matrix_reference(Partition const& p, std::size_t n) {
  check_size(p, n);
  TpMatrix m{n, p.upper(), p.lower(), {}};
  for (TupleIndex row = 0; row < m.rows(); ++row) {
    auto j = decode_tuple(row, p.lower(), n);
    for (TupleIndex col = 0; col < m.cols(); ++col) {
      if (delta(p, decode_tuple(col, p.upper(), n), j)) {
        m.entries.emplace_back(row, col);
      }
    }
  }
  return m;
}

IntMatrix to_int(TpMatrix const& m, long scale) {
  IntMatrix r{m.rows(), m.cols(), {}};
  if (scale != 0) {
    for (auto const& e : m.entries) {
      r.entries.emplace(e, scale);
    }
  }
  return r;
}

TpMatrix kronecker(TpMatrix const& a, TpMatrix const& b) {
  if (a.n != b.n) {
    throw std::invalid_argument("kronecker: different n");
  }
  TpMatrix r{a.n, a.k + b.k, a.l + b.l, {}};
  TupleIndex br = b.rows(), bc = b.cols();
  for (auto const& [ra, ca] : a.entries) {
    for (auto const& [rb, cb] : b.entries) {
      r.entries.emplace_back(ra * br + rb, ca * bc + cb);
    }
  }
  std::sort(r.entries.begin(), r.entries.end());
  return r;
}

TpMatrix transpose(TpMatrix const& m) {
  TpMatrix r{m.n, m.l, m.k, {}};
  for (auto const& [row, col] : m.entries) {
    r.entries.emplace_back(col, row);
  }
  std::sort(r.entries.begin(), r.entries.end());
  return r;
}

IntMatrix multiply(TpMatrix const& a, TpMatrix const& b) {
  if (a.n != b.n || a.k != b.l) {
    throw std::invalid_argument("multiply: shapes do not match");
  }
  IntMatrix r{a.rows(), b.cols(), {}};
  // b sorted by row; a's column index selects the rows of b
  for (auto const& [ra, ca] : a.entries) {
    auto it = std::lower_bound(b.entries.begin(), b.entries.end(),
                               std::pair<TupleIndex, TupleIndex>{ca, 0});
    for (; it != b.entries.end() && it->first == ca; ++it) {
      r.entries[{ra, it->second}] += 1;
    }
  }
  return r;
}

bool check_tensor(Partition const& p, Partition const& q, std::size_t n) {
  auto a = t_matrix(p, n), b = t_matrix(q, n);
  auto pq = tensor(p, q);
  auto raw = block_entries(pq, n, Exec::serial);
  if (raw.size() != a.entries.size() * b.entries.size()) {
    return false;
  }
  TupleIndex rows = a.rows() * b.rows(), cols = a.cols() * b.cols();
  if (rows * cols > (TupleIndex{1} << 27)) {
    return t_matrix(pq, n) == kronecker(a, b);
  }
  // Both sides are sets of distinct entries of equal size, so inclusion
  // decides equality. The bitset is all zero between calls.
  thread_local std::vector<std::uint64_t> bits;
  if (bits.size() < (rows * cols + 63) / 64) {
    bits.resize((rows * cols + 63) / 64, 0);
  }
  TupleIndex br = b.rows(), bc = b.cols();
  auto flip = [&] {
    for (auto const& [ra, ca] : a.entries) {
      for (auto const& [rb, cb] : b.entries) {
        TupleIndex x = (ra * br + rb) * cols + (ca * bc + cb);
        bits[x / 64] ^= std::uint64_t{1} << (x % 64);
      }
    }
  };
  flip();
  bool ok = std::all_of(raw.begin(), raw.end(), [&](auto const& e) {
    TupleIndex x = e.first * cols + e.second;
    return (bits[x / 64] >> (x % 64)) & 1;
  });
  flip();
  return ok;
}

bool check_involution(Partition const& p, std::size_t n) {
  return t_matrix(involute(p), n) == transpose(t_matrix(p, n));
}

bool check_composition(Partition const& q, Partition const& p, std::size_t n) {
  if (q.upper() != p.lower()) {
    throw std::invalid_argument("compose: " + q.to_string() + " after " + p.to_string()
                                + " has mismatched shapes");
  }
  auto c = compose(q, p);
  long scale = 1;
  for (std::size_t t = 0; t < c.loops; ++t) {
    scale *= static_cast<long>(n);
  }
  return multiply(t_matrix(q, n), t_matrix(p, n)) == to_int(t_matrix(c.partition, n), scale);
}

bool verify_functoriality(Partition const& p, Partition const& q, std::size_t n) {
  return check_tensor(p, q, n) && check_involution(p, n) && check_involution(q, n)
         && check_composition(q, p, n);
}

bool check_rotation_reshape(Partition const& p, std::size_t n) {
  auto tp = t_matrix(p, n);
  auto reindex = [&](Rotation which) {
    std::vector<std::pair<TupleIndex, TupleIndex>> out;
    for (auto const& [row, col] : tp.entries) {
      auto i = decode_tuple(col, p.upper(), n);
      auto j = decode_tuple(row, p.lower(), n);
      if (which == Rotation::upper_to_lower) {
        j.insert(j.begin(), i.front());
        i.erase(i.begin());
      } else {
        i.insert(i.begin(), j.front());
        j.erase(j.begin());
      }
      out.emplace_back(encode_tuple(j, n), encode_tuple(i, n));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  bool ok = true;
  if (p.upper() > 0) {
    ok = ok && t_matrix(rotate(p, Rotation::upper_to_lower), n).entries
                   == reindex(Rotation::upper_to_lower);
  }
  if (p.lower() > 0) {
    ok = ok && t_matrix(rotate(p, Rotation::lower_to_upper), n).entries
                   == reindex(Rotation::lower_to_upper);
  }
  return ok;
}

std::string dump(TpMatrix const& m) {
  std::ostringstream os;
  os << "tpmatrix " << m.n << ' ' << m.k << ' ' << m.l << ' ' << m.rows() << ' ' << m.cols()
     << ' ' << m.entries.size() << '\n';
  for (auto const& [row, col] : m.entries) {
    for (auto v : decode_tuple(row, m.l, m.n)) {
      os << v + 1 << ' ';
    }
    os << '|';
    for (auto v : decode_tuple(col, m.k, m.n)) {
      os << ' ' << v + 1;
    }
    os << '\n';
  }
  return os.str();
}

HomDimension hom_space_dimension(std::span<const Partition> parts, std::size_t k,
                                 std::size_t l, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("n must be at least 1");
  }
  HomDimension h;
  // Columns of the flattened T_p with equal kernel are equal, so one column
  // per partition q of the k + l indices with at most n blocks suffices:
  // the entry is 1 iff p refines q.
  std::vector<Partition> kernels;
  for_each_partition(k, l, [&](Partition const& q) {
    if (q.block_count() <= n) {
      kernels.push_back(q);
    }
  });
  IntegerMatrix m;
  for (auto const& p : parts) {
    if (p.upper() != k || p.lower() != l) {
      throw std::invalid_argument(p.to_string() + " is not in P(" + std::to_string(k) + ","
                                  + std::to_string(l) + ")");
    }
    std::vector<mpz_class> row;
    row.reserve(kernels.size());
    for (auto const& q : kernels) {
      row.emplace_back(refines(p, q) ? 1 : 0);
    }
    m.push_back(std::move(row));
  }
  h.spanning = parts.size();
  h.rank = exact_rank(std::move(m));
  return h;
}

HomDimension hom_space_dimension(Category const& cat, std::size_t k, std::size_t l,
                                 std::size_t n) {
  auto parts = cat.members(k, l);
  auto h = hom_space_dimension(parts, k, l, n);
  auto upto = cat.complete_up_to();
  h.exact = upto.has_value() && *upto >= k + l;
  return h;
}

HomDimension hom_space_dimension_all(std::size_t k, std::size_t l, std::size_t n) {
  auto parts = enumerate_partitions(k, l);
  return hom_space_dimension(parts, k, l, n);
}

std::size_t hom_space_dimension_dense(std::span<const Partition> parts, std::size_t n) {
  IntegerMatrix m;
  for (auto const& p : parts) {
    auto t = t_matrix_reference(p, n);
    std::vector<mpz_class> row(t.rows() * t.cols(), 0);
    for (auto const& [r, c] : t.entries) {
      row[r * t.cols() + c] = 1;
    }
    m.push_back(std::move(row));
  }
  return exact_rank(std::move(m));
}

}  // namespace pcat
