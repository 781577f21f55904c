#pragma once

// The maps T_p : (C^n)^{⊗k} -> (C^n)^{⊗l}. Basis tuples are indexed
// big-endian: the leftmost leg is the most significant digit.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcat/category.hpp"
#include "pcat/common.hpp"
#include "pcat/partition.hpp"

namespace pcat {

using TupleIndex = std::uint64_t;

// Largest admitted n^max(k,l), and largest number of nonzero entries.
inline constexpr TupleIndex kMaxMatrixSide = TupleIndex{1} << 24;
inline constexpr TupleIndex kMaxMatrixNonzeros = TupleIndex{1} << 24;

TupleIndex encode_tuple(std::span<const unsigned> tuple, std::size_t n);
std::vector<unsigned> decode_tuple(TupleIndex index, std::size_t legs, std::size_t n);

// 0/1 matrix of shape n^l x n^k; entry (j, i) = delta_p(i, j).
struct TpMatrix {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::pair<TupleIndex, TupleIndex>> entries;  // (row, col), sorted

  TupleIndex rows() const;
  TupleIndex cols() const;
  bool at(TupleIndex row, TupleIndex col) const;
  friend bool operator==(TpMatrix const&, TpMatrix const&) = default;
};

TpMatrix t_matrix(Partition const& p, std::size_t n, Exec exec = Exec::parallel);
// Serial reference: evaluates delta_p on every (i, j).
TpMatrix t_matrix_reference(Partition const& p, std::size_t n);

// Sparse integer matrix; absent entries are zero.
struct IntMatrix {
  TupleIndex rows = 0;
  TupleIndex cols = 0;
  std::map<std::pair<TupleIndex, TupleIndex>, long> entries;
  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;
};

IntMatrix to_int(TpMatrix const& m, long scale = 1);
TpMatrix kronecker(TpMatrix const& a, TpMatrix const& b);
TpMatrix transpose(TpMatrix const& m);
// a·b; needs a.k == b.l.
IntMatrix multiply(TpMatrix const& a, TpMatrix const& b);

bool check_tensor(Partition const& p, Partition const& q, std::size_t n);
bool check_involution(Partition const& p, std::size_t n);
// T_q T_p = n^loops T_{qp}; throws when q.upper() != p.lower().
bool check_composition(Partition const& q, Partition const& p, std::size_t n);
bool verify_functoriality(Partition const& p, Partition const& q, std::size_t n);

// T_{rotate(p)} is T_p with the first upper leg moved to the front of the
// lower row (or back); compares entry sets after that re-indexing.
bool check_rotation_reshape(Partition const& p, std::size_t n);

// Header line "tpmatrix n k l rows cols nnz", then one line per nonzero entry:
// "j_1 .. j_l | i_1 .. i_k" with values in 1..n.
std::string dump(TpMatrix const& m);

struct HomDimension {
  std::size_t rank = 0;
  std::size_t spanning = 0;  // number of partitions used
  bool exact = true;         // false: cache incomplete, rank is a lower bound
};

HomDimension hom_space_dimension(std::span<const Partition> parts, std::size_t k,
                                 std::size_t l, std::size_t n);
HomDimension hom_space_dimension(Category const& cat, std::size_t k, std::size_t l,
                                 std::size_t n);
HomDimension hom_space_dimension_all(std::size_t k, std::size_t l, std::size_t n);
// Oracle: exact rank of the flattened matrices themselves.
std::size_t hom_space_dimension_dense(std::span<const Partition> parts, std::size_t n);

}  // namespace pcat
