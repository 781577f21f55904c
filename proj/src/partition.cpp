#include "pcat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcat {

namespace {

  void check_size(std::size_t k, std::size_t l) {
    if (k + l > kMaxPoints) {
      throw std::length_error("partition exceeds " + std::to_string(kMaxPoints)
                              + " points");
    }
  }

  template <typename Src>
  std::uint8_t canonicalize(std::size_t n, Src src, std::uint8_t* out) {
    // labels from src are < 2 * kMaxPoints
    std::array<std::uint8_t, 2 * kMaxPoints + 1> remap;
    remap.fill(0xff);
    std::uint8_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto s = src(i);
      if (remap[s] == 0xff) {
        remap[s] = next++;
      }
      out[i] = remap[s];
    }
    return next;
  }

  struct UnionFind {
    std::array<std::uint8_t, 2 * kMaxPoints> parent;
    explicit UnionFind(std::size_t n) {
      std::iota(parent.begin(), parent.begin() + n, std::uint8_t(0));
    }
    std::uint8_t find(std::uint8_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    }
    void unite(std::uint8_t a, std::uint8_t b) {
      a = find(a);
      b = find(b);
      if (a < b) {
        parent[b] = a;
      } else if (b < a) {
        parent[a] = b;
      }
    }
  };

}  // namespace

Partition Partition::from_labels(std::size_t upper, std::size_t lower,
                                 std::span<const unsigned> labels) {
  check_size(upper, lower);
  if (labels.size() != upper + lower) {
    throw std::invalid_argument("label count does not match point count");
  }
  Partition p;
  p.upper_ = static_cast<std::uint8_t>(upper);
  p.lower_ = static_cast<std::uint8_t>(lower);
  bool small = std::all_of(labels.begin(), labels.end(),
                           [](unsigned x) { return x < 2 * kMaxPoints; });
  if (small) {
    p.blocks_ = canonicalize(labels.size(), [&](std::size_t i) { return labels[i]; },
                             p.labels_.data());
    return p;
  }
  std::vector<unsigned> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find(seen.begin(), seen.end(), labels[i]);
    p.labels_[i] = static_cast<std::uint8_t>(it - seen.begin());
    if (it == seen.end()) {
      seen.push_back(labels[i]);
    }
  }
  p.blocks_ = static_cast<std::uint8_t>(seen.size());
  return p;
}

Partition Partition::from_key(PartitionKey key) {
  unsigned __int128 v = (static_cast<unsigned __int128>(key.hi) << 64) | key.lo;
  std::array<std::uint8_t, kMaxPoints> lab{};
  for (std::size_t i = kMaxPoints - 1; i >= 1; --i) {
    lab[i] = static_cast<std::uint8_t>(v & 31);
    v >>= 5;
  }
  Partition p;
  p.upper_ = static_cast<std::uint8_t>(v & 31);
  v >>= 5;
  auto total = static_cast<std::uint8_t>(v & 31);
  p.lower_ = static_cast<std::uint8_t>(total - p.upper_);
  p.labels_ = lab;
  std::uint8_t mx = 0;
  for (std::size_t i = 0; i < total; ++i) {
    mx = std::max<std::uint8_t>(mx, static_cast<std::uint8_t>(lab[i] + 1));
  }
  p.blocks_ = mx;
  return p;
}

PartitionKey Partition::key() const noexcept {
  unsigned __int128 v = points();
  v = (v << 5) | upper_;
  for (std::size_t i = 1; i < kMaxPoints; ++i) {
    v = (v << 5) | labels_[i];
  }
  return {static_cast<std::uint64_t>(v >> 64), static_cast<std::uint64_t>(v)};
}

Partition Partition::parse(std::string_view text) {
  auto bar = text.find('|');
  std::string_view up = text.substr(0, bar);
  std::string_view lo = bar == std::string_view::npos ? std::string_view{}
                                                       : text.substr(bar + 1);
  if (lo.find('|') != std::string_view::npos) {
    throw std::invalid_argument("partition text has more than one '|'");
  }
  // The text runs clockwise: the lower row is written from right to left.
  std::string text_order(up);
  text_order.append(lo.rbegin(), lo.rend());
  std::vector<unsigned> labels;
  for (char c : text_order) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(std::string("bad partition letter '") + c + "'");
    }
    labels.push_back(static_cast<unsigned>(c - 'a'));
  }
  return from_labels(up.size(), lo.size(), labels);
}

std::string Partition::to_string() const {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < upper_; ++i) {
    order.push_back(i);
  }
  for (std::size_t i = points(); i-- > upper_;) {
    order.push_back(i);
  }
  std::array<char, kMaxPoints> letter{};
  char next = 'a';
  std::string s;
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (t == upper_) {
      s += '|';
    }
    auto& c = letter[labels_[order[t]]];
    if (c == 0) {
      c = next++;
    }
    s += c;
  }
  if (lower_ == 0) {
    s += '|';
  }
  return s;
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(blocks_);
  for (std::size_t i = 0; i < points(); ++i) {
    out[labels_[i]].push_back(i);
  }
  return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> out(blocks_, 0);
  for (std::size_t i = 0; i < points(); ++i) {
    ++out[labels_[i]];
  }
  return out;
}

bool Partition::all_blocks_even() const {
  auto s = block_sizes();
  return std::all_of(s.begin(), s.end(), [](auto x) { return x % 2 == 0; });
}

std::size_t Partition::max_block_size() const {
  auto s = block_sizes();
  return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

Partition tensor(Partition const& p, Partition const& q) {
  std::size_t k = p.upper() + q.upper(), l = p.lower() + q.lower();
  check_size(k, l);
  std::array<unsigned, kMaxPoints> lab{};
  std::size_t bp = p.block_count(), at = 0;
  for (std::size_t i = 0; i < p.upper(); ++i) lab[at++] = p.label(Row::upper, i);
  for (std::size_t i = 0; i < q.upper(); ++i) lab[at++] = bp + q.label(Row::upper, i);
  for (std::size_t i = 0; i < p.lower(); ++i) lab[at++] = p.label(Row::lower, i);
  for (std::size_t i = 0; i < q.lower(); ++i) lab[at++] = bp + q.label(Row::lower, i);
  return Partition::from_labels(k, l, {lab.data(), k + l});
}

Composition compose(Partition const& q, Partition const& p) {
  if (q.upper() != p.lower()) {
    throw std::invalid_argument("compose: upper count of q ("
                                + std::to_string(q.upper())
                                + ") differs from lower count of p ("
                                + std::to_string(p.lower()) + ")");
  }
  std::size_t k = p.upper(), m = p.lower(), l = q.lower();
  check_size(k, l);
  auto bp = static_cast<std::uint8_t>(p.block_count());
  std::size_t nodes = bp + q.block_count();
  UnionFind uf(nodes);
  for (std::size_t t = 0; t < m; ++t) {
    uf.unite(static_cast<std::uint8_t>(p.label(k + t)),
             static_cast<std::uint8_t>(bp + q.label(t)));
  }
  std::array<unsigned, kMaxPoints> out{};
  std::array<bool, 2 * kMaxPoints> outer{};
  for (std::size_t i = 0; i < k; ++i) {
    out[i] = uf.find(static_cast<std::uint8_t>(p.label(i)));
    outer[out[i]] = true;
  }
  for (std::size_t j = 0; j < l; ++j) {
    out[k + j] = uf.find(static_cast<std::uint8_t>(bp + q.label(m + j)));
    outer[out[k + j]] = true;
  }
  std::size_t loops = 0;
  for (std::size_t x = 0; x < nodes; ++x) {
    auto r = static_cast<std::uint8_t>(x);
    if (uf.find(r) == r && !outer[r]) {
      ++loops;
    }
  }
  return {Partition::from_labels(k, l, {out.data(), k + l}), loops};
}

Partition involute(Partition const& p) {
  std::array<unsigned, kMaxPoints> lab{};
  std::size_t at = 0;
  for (std::size_t i = 0; i < p.lower(); ++i) lab[at++] = p.label(Row::lower, i);
  for (std::size_t i = 0; i < p.upper(); ++i) lab[at++] = p.label(Row::upper, i);
  return Partition::from_labels(p.lower(), p.upper(), {lab.data(), at});
}

Partition rotate(Partition const& p, Rotation which) {
  std::array<unsigned, kMaxPoints> lab{};
  std::size_t k = p.upper(), l = p.lower(), at = 0;
  if (which == Rotation::upper_to_lower) {
    if (k == 0) {
      throw std::invalid_argument("rotate: upper row is empty");
    }
    for (std::size_t i = 1; i < k; ++i) lab[at++] = p.label(Row::upper, i);
    lab[at++] = p.label(Row::upper, 0);
    for (std::size_t i = 0; i < l; ++i) lab[at++] = p.label(Row::lower, i);
    return Partition::from_labels(k - 1, l + 1, {lab.data(), at});
  }
  if (l == 0) {
    throw std::invalid_argument("rotate: lower row is empty");
  }
  lab[at++] = p.label(Row::lower, 0);
  for (std::size_t i = 0; i < k; ++i) lab[at++] = p.label(Row::upper, i);
  for (std::size_t i = 1; i < l; ++i) lab[at++] = p.label(Row::lower, i);
  return Partition::from_labels(k + 1, l - 1, {lab.data(), at});
}

Partition to_one_line(Partition const& p) {
  Partition r = p;
  while (r.lower() > 0) {
    r = rotate(r, Rotation::lower_to_upper);
  }
  return r;
}

Partition move_last_leg_to_front(Partition const& p) {
  if (!p.is_one_line()) {
    throw std::invalid_argument("move_last_leg_to_front: lower row not empty");
  }
  std::size_t k = p.upper();
  if (k == 0) {
    return p;
  }
  std::array<unsigned, kMaxPoints> lab{};
  lab[0] = p.label(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) lab[i + 1] = p.label(i);
  return Partition::from_labels(k, 0, {lab.data(), k});
}

Partition ker(std::span<const unsigned> index) {
  return Partition::from_labels(index.size(), 0, index);
}

bool delta(Partition const& p, std::span<const unsigned> i,
           std::span<const unsigned> j) {
  if (i.size() != p.upper() || j.size() != p.lower()) {
    throw std::invalid_argument("delta: tuple lengths do not match partition");
  }
  std::array<unsigned, kMaxPoints> value{};
  std::array<bool, kMaxPoints> set{};
  for (std::size_t t = 0; t < p.points(); ++t) {
    unsigned v = t < i.size() ? i[t] : j[t - i.size()];
    unsigned b = p.label(t);
    if (!set[b]) {
      set[b] = true;
      value[b] = v;
    } else if (value[b] != v) {
      return false;
    }
  }
  return true;
}

bool is_compatible_labelling(Partition const& p, std::span<const unsigned> i) {
  if (!p.is_one_line()) {
    throw std::invalid_argument("labelling of a partition with lower points");
  }
  return delta(p, i, {});
}

bool refines(Partition const& fine, Partition const& coarse) {
  if (fine.upper() != coarse.upper() || fine.lower() != coarse.lower()) {
    return false;
  }
  std::array<int, kMaxPoints> image;
  image.fill(-1);
  for (std::size_t t = 0; t < fine.points(); ++t) {
    auto b = fine.label(t);
    auto c = static_cast<int>(coarse.label(t));
    if (image[b] == -1) {
      image[b] = c;
    } else if (image[b] != c) {
      return false;
    }
  }
  return true;
}

void for_each_partition(std::size_t k, std::size_t l,
                        std::function<void(Partition const&)> const& f) {
  std::size_t n = k + l;
  if (n > kEnumerationLimit) {
    throw std::length_error("enumerate_partitions: more than "
                            + std::to_string(kEnumerationLimit) + " points");
  }
  // restricted growth strings in lexicographic order; m[t] = max(a[0..t-1])
  std::vector<unsigned> a(n, 0), m(n, 0);
  while (true) {
    f(Partition::from_labels(k, l, a));
    std::size_t i = n;
    bool found = false;
    while (i-- > 1) {
      if (a[i] <= m[i]) {
        found = true;
        break;
      }
    }
    if (!found) {
      return;
    }
    ++a[i];
    for (std::size_t t = i + 1; t < n; ++t) {
      a[t] = 0;
      m[t] = std::max(m[t - 1], a[t - 1]);
    }
  }
}

std::vector<Partition> enumerate_partitions(std::size_t k, std::size_t l) {
  std::vector<Partition> out;
  for_each_partition(k, l, [&](Partition const& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> enumerate_partitions(std::size_t k) {
  return enumerate_partitions(k, 0);
}

namespace named {
  Partition identity() {
    return Partition::parse("a|a");
  }
  Partition pair() {
    return Partition::parse("aa|");
  }
  Partition singleton() {
    return Partition::parse("a|");
  }
  Partition double_singleton() {
    return Partition::parse("ab|");
  }
  Partition vierpart() {
    return Partition::parse("aaaa|");
  }
  Partition primarypart() {
    return Partition::parse("aabaab|");
  }
  Partition halflibpart() {
    return Partition::parse("abcabc|");
  }
  Partition crossing() {
    return Partition::parse("ab|ab");
  }
  Partition h(std::size_t s) {
    std::vector<unsigned> idx;
    for (std::size_t t = 0; t < s; ++t) {
      idx.push_back(0);
      idx.push_back(1);
    }
    return ker(idx);
  }
  Partition identity_tensor(std::size_t k) {
    Partition r;
    for (std::size_t i = 0; i < k; ++i) {
      r = tensor(r, identity());
    }
    return r;
  }
}  // namespace named

}  // namespace pcat
