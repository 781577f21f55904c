#pragma once

// Set partitions of k upper and l lower points.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcat {

inline constexpr std::size_t kMaxPoints = 20;

enum class Row : std::uint8_t { upper, lower };

// Packed canonical form; the numeric order sorts by point count, then upper
// count, then labels.
struct PartitionKey {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend auto operator<=>(PartitionKey const&, PartitionKey const&) = default;
};

struct PartitionKeyHash {
  std::size_t operator()(PartitionKey const& k) const noexcept {
    std::uint64_t h = k.hi * 0x9e3779b97f4a7c15ULL ^ (k.lo + 0x632be59bd9b4e019ULL);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

// Points are numbered 0..k-1 on the upper row and k..k+l-1 on the lower row,
// both left to right. Labels are a restricted growth string over that order.
// The text form "upper|lower" reads clockwise, so the lower row is written
// right to left: "ab|ab" is the crossing, "ab|ba" is | ⊗ |.
class Partition {
 public:
  Partition() = default;

  // Any labelling is accepted; equal labels mean same block.
  static Partition from_labels(std::size_t upper, std::size_t lower,
                               std::span<const unsigned> labels);
  static Partition from_key(PartitionKey key);
  static Partition parse(std::string_view text);

  std::string to_string() const;

  std::size_t upper() const noexcept { return upper_; }
  std::size_t lower() const noexcept { return lower_; }
  std::size_t points() const noexcept { return std::size_t(upper_) + lower_; }
  std::size_t block_count() const noexcept { return blocks_; }
  bool is_one_line() const noexcept { return lower_ == 0; }

  unsigned label(std::size_t point) const noexcept { return labels_[point]; }
  unsigned label(Row row, std::size_t pos) const noexcept {
    return labels_[row == Row::upper ? pos : upper_ + pos];
  }
  std::span<const std::uint8_t> labels() const noexcept {
    return {labels_.data(), points()};
  }

  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> block_sizes() const;
  bool all_blocks_even() const;
  std::size_t max_block_size() const;

  PartitionKey key() const noexcept;

  friend bool operator==(Partition const& a, Partition const& b) noexcept {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(Partition const& a,
                                          Partition const& b) noexcept {
    return a.key() <=> b.key();
  }

 private:
  std::uint8_t upper_ = 0;
  std::uint8_t lower_ = 0;
  std::uint8_t blocks_ = 0;
  std::array<std::uint8_t, kMaxPoints> labels_{};
};

struct PartitionHash {
  std::size_t operator()(Partition const& p) const noexcept {
    return PartitionKeyHash{}(p.key());
  }
};

struct Composition {
  Partition partition;
  std::size_t loops = 0;
};

enum class Rotation : std::uint8_t { upper_to_lower, lower_to_upper };

Partition tensor(Partition const& p, Partition const& q);
// The product qp: p is drawn above q and glued along p's lower row.
Composition compose(Partition const& q, Partition const& p);
Partition involute(Partition const& p);
// Basic rotation on the left side.
Partition rotate(Partition const& p, Rotation which);
// Moves all lower legs into the upper row: upper row becomes l_l..l_1 u_1..u_k.
Partition to_one_line(Partition const& p);
// One-line only: u_1..u_k becomes u_k u_1..u_{k-1}.
Partition move_last_leg_to_front(Partition const& p);

Partition ker(std::span<const unsigned> index);
bool delta(Partition const& p, std::span<const unsigned> i,
           std::span<const unsigned> j);
bool is_compatible_labelling(Partition const& p, std::span<const unsigned> i);

// True if every block of fine is contained in a block of coarse.
bool refines(Partition const& fine, Partition const& coarse);

inline constexpr std::size_t kEnumerationLimit = 12;
std::vector<Partition> enumerate_partitions(std::size_t k);
std::vector<Partition> enumerate_partitions(std::size_t k, std::size_t l);
void for_each_partition(std::size_t k, std::size_t l,
                        std::function<void(Partition const&)> const& f);

namespace named {
  Partition identity();  // | in P(1,1)
  Partition pair();      // ker(1,1) in P(2,0)
  Partition singleton();
  Partition double_singleton();
  Partition vierpart();
  Partition primarypart();
  Partition halflibpart();
  Partition crossing();  // ab|ab
  Partition h(std::size_t s);
  Partition identity_tensor(std::size_t k);
}  // namespace named

}  // namespace pcat
