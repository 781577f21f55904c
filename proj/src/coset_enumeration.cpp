// HLT coset enumeration over the trivial subgroup for groups generated by
// involutions. Each generator is its own inverse, so filling table[c][x] = d
// always fills table[d][x] = c as well.

#include <algorithm>
#include <deque>

#include "pcat/reflection_group.hpp"

namespace pcat {

namespace {

  constexpr std::int32_t kUndefined = -1;

  class CosetTable {
   public:
    CosetTable(std::size_t gens, std::size_t limit) : n_(gens), limit_(limit) {
      add_row();
    }

    bool overflowed() const noexcept { return overflow_; }
    std::size_t defined() const noexcept { return parent_.size(); }
    bool live(std::int32_t c) const { return parent_[c] == c; }

    std::int32_t& at(std::int32_t c, std::size_t x) { return table_[c * n_ + x]; }

    std::int32_t rep(std::int32_t c) {
      std::int32_t r = c;
      while (parent_[r] != r) {
        r = parent_[r];
      }
      while (parent_[c] != r) {
        auto next = parent_[c];
        parent_[c] = r;
        c = next;
      }
      return r;
    }

    bool define(std::int32_t c, std::size_t x) {
      if (parent_.size() >= limit_) {
        overflow_ = true;
        return false;
      }
      auto d = add_row();
      at(c, x) = d;
      at(d, x) = c;
      return true;
    }

    void scan_and_fill(std::int32_t c, std::vector<std::size_t> const& w) {
      if (w.empty()) {
        return;
      }
      std::int32_t f = c, b = c;
      std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
      while (true) {
        while (i <= j && at(f, w[i]) != kUndefined) {
          f = at(f, w[i]);
          ++i;
        }
        if (i > j) {
          if (f != b) {
            coincidence(f, b);
          }
          return;
        }
        while (j >= i && at(b, w[j]) != kUndefined) {
          b = at(b, w[j]);
          --j;
        }
        if (j < i) {
          coincidence(f, b);
          return;
        }
        if (i == j) {
          at(f, w[i]) = b;
          at(b, w[i]) = f;
          return;
        }
        if (!define(f, w[i])) {
          return;
        }
      }
    }

    void coincidence(std::int32_t a, std::int32_t b) {
      std::deque<std::int32_t> queue;
      merge(a, b, queue);
      while (!queue.empty()) {
        auto e = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < n_; ++x) {
          auto f = at(e, x);
          if (f == kUndefined) {
            continue;
          }
          if (at(f, x) == e) {
            at(f, x) = kUndefined;
          }
          auto e1 = rep(e), f1 = rep(f);
          if (at(e1, x) != kUndefined) {
            merge(f1, at(e1, x), queue);
          } else if (at(f1, x) != kUndefined) {
            merge(e1, at(f1, x), queue);
          } else {
            at(e1, x) = f1;
            at(f1, x) = e1;
          }
        }
      }
    }

   private:
    std::int32_t add_row() {
      auto d = static_cast<std::int32_t>(parent_.size());
      parent_.push_back(d);
      table_.resize(table_.size() + n_, kUndefined);
      return d;
    }

    void merge(std::int32_t k, std::int32_t l, std::deque<std::int32_t>& queue) {
      k = rep(k);
      l = rep(l);
      if (k == l) {
        return;
      }
      if (k > l) {
        std::swap(k, l);
      }
      parent_[l] = k;
      queue.push_back(l);
    }

    std::size_t n_;
    std::size_t limit_;
    bool overflow_ = false;
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> table_;
  };

}  // namespace

EnumerationOutcome enumerate_group(ReflectionGroupSpec const& spec, std::size_t max_order) {
  if (max_order == 0) {
    throw std::invalid_argument("max_order must be positive");
  }
  EnumerationOutcome out;
  out.max_order = max_order;
  std::size_t n = spec.n;
  if (n == 0) {
    out.model.emplace(0, std::vector<FiniteGroupModel::Element>{},
                      std::vector<ReducedWord>{ReducedWord{}});
    return out;
  }
  std::vector<std::vector<std::size_t>> rels;
  for (auto const& r : spec.relators) {
    if (r.max_letter() > n) {
      throw std::invalid_argument("relator " + r.to_string() + " uses letters beyond n");
    }
    if (!r.empty()) {
      std::vector<std::size_t> w;
      for (auto x : r.letters()) {
        w.push_back(x - 1);
      }
      rels.push_back(std::move(w));
    }
  }
  std::size_t limit = std::max<std::size_t>(1 << 14, 64 * max_order);
  CosetTable t(n, limit);
  for (std::int32_t c = 0; static_cast<std::size_t>(c) < t.defined(); ++c) {
    for (auto const& r : rels) {
      if (!t.live(c)) {
        break;
      }
      t.scan_and_fill(c, r);
      if (t.overflowed()) {
        out.cosets_defined = t.defined();
        return out;
      }
    }
    for (std::size_t x = 0; x < n && t.live(c); ++x) {
      if (t.at(c, x) == kUndefined && !t.define(c, x)) {
        out.cosets_defined = t.defined();
        return out;
      }
    }
  }
  out.cosets_defined = t.defined();
  // renumber live cosets breadth first; representatives come out shortlex
  std::vector<std::int32_t> number(t.defined(), -1);
  std::vector<std::int32_t> order{t.rep(0)};
  number[order[0]] = 0;
  std::vector<ReducedWord> reps{ReducedWord{}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t x = 0; x < n; ++x) {
      auto d = t.rep(t.at(order[head], x));
      if (number[d] == -1) {
        if (order.size() >= max_order) {
          return out;
        }
        number[d] = static_cast<std::int32_t>(order.size());
        order.push_back(d);
        std::vector<Letter> w(reps[head].letters().begin(), reps[head].letters().end());
        w.push_back(static_cast<Letter>(x + 1));
        reps.push_back(reduce(w));
      }
    }
  }
  std::vector<FiniteGroupModel::Element> table(order.size() * n);
  for (std::size_t c = 0; c < order.size(); ++c) {
    for (std::size_t x = 0; x < n; ++x) {
      table[c * n + x] = static_cast<FiniteGroupModel::Element>(number[t.rep(t.at(order[c], x))]);
    }
  }
  out.model.emplace(n, std::move(table), std::move(reps));
  return out;
}

}  // namespace pcat
