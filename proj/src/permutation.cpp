#include "pcat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pcat {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), std::uint8_t(0));
}

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[x] = true;
  }
}

Permutation Permutation::transposition(std::size_t degree, std::size_t a, std::size_t b) {
  Permutation p(degree);
  std::swap(p.images_.at(a), p.images_.at(b));
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return r;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    if (len > 0) {
      ord = std::lcm(ord, len);
    }
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      continue;
    }
    s += '(';
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      if (x != i) {
        s += ',';
      }
      seen[x] = true;
      s += std::to_string(x);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("permutation degrees differ");
  }
  Permutation r(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) {
    r.images_[i] = q.images_[p.images_[i]];
  }
  return r;
}

std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), std::uint8_t(0));
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> generated_group(std::vector<Permutation> const& gens,
                                         std::size_t limit) {
  if (gens.empty()) {
    return {};
  }
  std::set<Permutation> seen{Permutation(gens.front().degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto const& g : gens) {
      auto h = queue[head] * g;
      if (seen.insert(h).second) {
        if (seen.size() > limit) {
          throw std::length_error("permutation group exceeds limit");
        }
        queue.push_back(h);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace pcat
