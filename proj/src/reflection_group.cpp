#include "pcat/reflection_group.hpp"

#include <algorithm>
#include <set>

namespace pcat {

FiniteGroupModel::FiniteGroupModel(std::size_t n, std::vector<Element> table,
                                   std::vector<ReducedWord> representatives)
    : n_(n), table_(std::move(table)), reps_(std::move(representatives)) {
  if (table_.size() != n_ * reps_.size()) {
    throw std::invalid_argument("group table has the wrong size");
  }
}

FiniteGroupModel::Element FiniteGroupModel::evaluate(std::span<const Letter> word) const {
  Element g = identity();
  for (auto x : word) {
    if (x == 0 || x > n_) {
      throw std::out_of_range("letter " + std::to_string(x) + " outside 1.."
                              + std::to_string(n_));
    }
    g = act(g, x);
  }
  return g;
}

FiniteGroupModel::Element FiniteGroupModel::multiply(Element g, Element h) const {
  for (auto x : reps_.at(h).letters()) {
    g = act(g, x);
  }
  return g;
}

FiniteGroupModel::Element FiniteGroupModel::inverse(Element g) const {
  auto const& w = reps_.at(g);
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  return evaluate(rev);
}

std::size_t FiniteGroupModel::element_order(Element g) const {
  std::size_t k = 1;
  for (Element h = g; h != identity(); h = multiply(h, g)) {
    ++k;
  }
  return k;
}

namespace {

  ReflectionGroupSpec series_spec(std::size_t n, std::size_t s, bool half_liberated) {
    ReflectionGroupSpec spec;
    spec.n = n;
    std::set<ReducedWord> rels;
    for (Letter i = 1; i <= n; ++i) {
      for (Letter j = 1; j <= n; ++j) {
        if (i == j) {
          continue;
        }
        if (s != 0) {
          std::vector<Letter> w;
          for (std::size_t t = 0; t < s; ++t) {
            w.push_back(i);
            w.push_back(j);
          }
          rels.insert(reduce(w));
        }
        if (!half_liberated) {
          continue;
        }
        for (Letter k = 1; k <= n; ++k) {
          if (k != i && k != j) {
            std::vector<Letter> w{i, j, k, i, j, k};
            rels.insert(reduce(w));
          }
        }
      }
    }
    spec.relators.assign(rels.begin(), rels.end());
    return spec;
  }

  std::string s_text(std::size_t s) {
    return s == 0 ? "inf" : std::to_string(s);
  }

}  // namespace

ReflectionGroupSpec hyperoctahedral_series_spec(std::size_t n, std::size_t s) {
  auto spec = series_spec(n, s, true);
  spec.note = "H^(" + s_text(s) + "), n = " + std::to_string(n);
  spec.series = {SeriesVariant::hyperoctahedral, s};
  return spec;
}

ReflectionGroupSpec higher_series_spec(std::size_t n, std::size_t s) {
  auto spec = series_spec(n, s, false);
  spec.note = "H^[" + s_text(s) + "], n = " + std::to_string(n);
  spec.series = {SeriesVariant::higher, s};
  return spec;
}

ReflectionGroupSpec trivial_group_spec(std::size_t n) {
  ReflectionGroupSpec spec;
  spec.n = n;
  for (Letter i = 1; i <= n; ++i) {
    spec.relators.push_back(reduce(std::vector<Letter>{i}));
  }
  spec.note = "trivial group, n = " + std::to_string(n);
  return spec;
}

ReducedWord permute_letters(std::vector<Letter> const& sigma, ReducedWord const& w) {
  std::vector<Letter> seq;
  for (auto x : w.letters()) {
    seq.push_back(sigma.at(x - 1));
  }
  return reduce(seq);
}

AffineElement affine_series_image(std::span<const Letter> word, std::size_t n, std::size_t s) {
  AffineElement g;
  g.v.assign(n, 0);
  for (auto x : word) {
    if (x == 0 || x > n) {
      throw std::out_of_range("letter outside 1..n");
    }
    // g o a_x : y -> v + sign (e_x - y)
    g.v[x - 1] += g.sign;
    g.sign = -g.sign;
  }
  if (s != 0) {
    for (auto& c : g.v) {
      c = ((c % static_cast<long>(s)) + static_cast<long>(s)) % static_cast<long>(s);
    }
  }
  return g;
}

bool affine_is_identity(AffineElement const& g) {
  return g.sign == 1 && std::all_of(g.v.begin(), g.v.end(), [](long c) { return c == 0; });
}

}  // namespace pcat
