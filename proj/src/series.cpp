#include <algorithm>
#include <random>
#include <set>

#include "pcat/reflection_group.hpp"
#include "pcat/subgroup.hpp"

namespace pcat {

namespace {

  ReducedWord letters_word(std::initializer_list<Letter> xs) {
    return reduce(std::vector<Letter>(xs));
  }

  bool kills_all(FiniteQuotient const& q, std::vector<ReducedWord> const& rels) {
    return std::all_of(rels.begin(), rels.end(),
                       [&](ReducedWord const& r) { return q.kills(r); });
  }

}  // namespace

bool relators_letter_map_closed(ReflectionGroupSpec const& spec) {
  std::set<std::vector<Letter>> cyclic;
  auto add_rotations = [&](ReducedWord const& w) {
    std::vector<Letter> v(w.letters().begin(), w.letters().end());
    for (std::size_t t = 0; t < v.size(); ++t) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      cyclic.insert(v);
    }
  };
  for (auto const& r : spec.relators) {
    add_rotations(r);
    add_rotations(invert(r));
  }
  auto cyclically_reduce = [](ReducedWord w) {
    std::vector<Letter> v(w.letters().begin(), w.letters().end());
    while (v.size() >= 2 && v.front() == v.back()) {
      v.erase(v.begin());
      v.pop_back();
    }
    return v;
  };
  // Only the images of a relator's own letters matter.
  for (auto const& r : spec.relators) {
    std::vector<Letter> own(r.letters().begin(), r.letters().end());
    std::sort(own.begin(), own.end());
    own.erase(std::unique(own.begin(), own.end()), own.end());
    std::vector<Letter> img(own.size(), 1);
    while (true) {
      LetterMap phi;
      for (std::size_t t = 0; t < own.size(); ++t) {
        phi.set(own[t], img[t]);
      }
      auto v = cyclically_reduce(endo_apply(phi, r));
      if (!v.empty() && !cyclic.count(v)) {
        return false;
      }
      std::size_t i = 0;
      while (i < img.size() && img[i] == spec.n) {
        img[i++] = 1;
      }
      if (i == img.size()) {
        break;
      }
      ++img[i];
    }
  }
  return true;
}

EvenSubgroupReport even_subgroup_analysis(ReflectionGroupSpec const& spec,
                                          std::size_t max_order, std::size_t word_bound) {
  EvenSubgroupReport r;
  r.n = spec.n;
  std::size_t n = spec.n;
  r.relators_even = std::all_of(spec.relators.begin(), spec.relators.end(),
                                [](ReducedWord const& w) { return w.size() % 2 == 0; });
  std::vector<ReducedWord> b;
  for (Letter i = 1; i < n; ++i) {
    b.push_back(letters_word({static_cast<Letter>(n), i}));
  }
  auto en = enumerate_group(spec, max_order);
  if (en.model) {
    auto const& m = *en.model;
    r.group_order = m.order();
    // E is generated by the b_i
    std::set<FiniteGroupModel::Element> e{FiniteGroupModel::identity()};
    std::vector<FiniteGroupModel::Element> queue{FiniteGroupModel::identity()};
    std::vector<FiniteGroupModel::Element> bs;
    for (auto const& w : b) {
      bs.push_back(m.evaluate(w));
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (auto g : bs) {
        auto x = m.multiply(queue[h], g);
        if (e.insert(x).second) {
          queue.push_back(x);
        }
      }
    }
    r.even_order = e.size();
    r.index = m.order() / e.size();
    bool commute = true;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      r.b_orders.push_back(m.element_order(bs[i]));
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        if (m.multiply(bs[i], bs[j]) != m.multiply(bs[j], bs[i])) {
          if (commute) {
            r.commute_evidence = "b_" + std::to_string(i + 1) + " b_" + std::to_string(j + 1)
                                 + " != b_" + std::to_string(j + 1) + " b_"
                                 + std::to_string(i + 1) + " in the group of order "
                                 + std::to_string(m.order());
          }
          commute = false;
        }
      }
    }
    r.b_commute = commute ? Verdict::yes : Verdict::no;
    if (commute) {
      r.commute_evidence = "checked in the group of order " + std::to_string(m.order());
    }
    if (spec.series.variant == SeriesVariant::hyperoctahedral && spec.series.s != 0) {
      std::size_t expect = 1;
      for (std::size_t t = 0; t + 1 < n; ++t) {
        expect *= spec.series.s;
      }
      r.series_order_matches = r.even_order == expect;
    }
    return r;
  }
  r.b_orders.assign(b.size(), std::nullopt);
  // Exceeds the bound: decide each commutator separately.
  bool free = std::all_of(spec.relators.begin(), spec.relators.end(),
                          [](ReducedWord const& w) { return w.empty(); });
  auto perm = transposition_quotient(n);
  AbelianizationQuotient ab(n);
  LengthParityQuotient parity;
  std::vector<FiniteQuotient const*> quotients;
  for (FiniteQuotient const* q : {static_cast<FiniteQuotient const*>(&perm),
                                  static_cast<FiniteQuotient const*>(&ab),
                                  static_cast<FiniteQuotient const*>(&parity)}) {
    if (kills_all(*q, spec.relators)) {
      quotients.push_back(q);
    }
  }
  std::optional<SubgroupCache> closure;
  if (!free && relators_letter_map_closed(spec)) {
    closure = closure_generate(spec.relators, n, {word_bound, 200'000, 0});
  }
  Verdict all = Verdict::yes;
  for (std::size_t i = 0; i < b.size() && all != Verdict::no; ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      auto c = multiply(multiply(b[i], b[j]), invert(multiply(b[j], b[i])));
      std::string pair = "b_" + std::to_string(i + 1) + ", b_" + std::to_string(j + 1);
      if (c.empty()) {
        continue;
      }
      if (free) {
        all = Verdict::no;
        r.commute_evidence = pair + ": commutator " + c.to_string()
                             + " is a nonempty reduced word and there are no relators";
        break;
      }
      bool decided = false;
      for (auto const* q : quotients) {
        if (!q->kills(c)) {
          all = Verdict::no;
          r.commute_evidence = pair + ": " + q->name()
                               + " kills every relator and maps the commutator "
                               + c.to_string() + " to " + q->image(c);
          decided = true;
          break;
        }
      }
      if (all == Verdict::no) {
        break;
      }
      if (!decided && closure && closure->contains(c)) {
        decided = true;
      }
      if (!decided) {
        all = Verdict::unknown;
        r.commute_evidence = pair + ": undecided within word bound "
                             + std::to_string(word_bound);
      }
    }
  }
  if (all == Verdict::yes) {
    r.commute_evidence = "every commutator lies in the closure of the relators";
  }
  r.b_commute = all;
  return r;
}

std::vector<std::pair<std::size_t, int>> sn_action_on_even_generators(
    std::vector<Letter> const& sigma, std::size_t i) {
  std::size_t n = sigma.size();
  if (i == 0 || i >= n) {
    throw std::out_of_range("b_i needs 1 <= i <= n - 1");
  }
  std::size_t si = sigma[i - 1], sn = sigma[n - 1];
  if (sn == n) {
    return {{si, 1}};
  }
  if (si == n) {
    return {{sn, -1}};
  }
  return {{sn, -1}, {si, 1}};
}

ReducedWord expand_even_word(std::vector<std::pair<std::size_t, int>> const& bword,
                             std::size_t n) {
  std::vector<Letter> seq;
  for (auto [j, e] : bword) {
    auto a = static_cast<Letter>(n), x = static_cast<Letter>(j);
    if (e > 0) {
      seq.push_back(a);
      seq.push_back(x);
    } else {
      seq.push_back(x);
      seq.push_back(a);
    }
  }
  return reduce(seq);
}

NonEasyReport non_easy_example_check(std::size_t n, std::size_t samples, std::uint64_t seed,
                                     std::size_t max_word_length) {
  if (n < 3) {
    throw std::invalid_argument("non-easy example needs n >= 3");
  }
  NonEasyReport r;
  r.n = n;
  auto pi = transposition_quotient(n);
  std::vector<Permutation> images;
  for (Letter i = 1; i <= n; ++i) {
    images.push_back(pi.evaluate(letters_word({i})));
  }
  r.generated_order = generated_group(images).size();
  r.expected_order = 1;
  for (std::size_t t = 2; t <= n + 1; ++t) {
    r.expected_order *= t;
  }
  r.surjective = r.generated_order == r.expected_order;

  // pi(sigma(a_i)) = s^-1 pi(a_i) s where s fixes 0 and moves i to sigma(i)
  auto perms = symmetric_group(n);
  r.invariance_exact = true;
  for (auto const& sp : perms) {
    std::vector<std::uint8_t> img(n + 1, 0);
    for (std::size_t x = 1; x <= n; ++x) {
      img[x] = static_cast<std::uint8_t>(sp(x - 1) + 1);
    }
    Permutation s(img);
    for (Letter i = 1; i <= n; ++i) {
      auto lhs = pi.evaluate(letters_word({static_cast<Letter>(sp(i - 1) + 1)}));
      if (lhs != s.inverse() * images[i - 1] * s) {
        r.invariance_exact = false;
      }
    }
  }

  std::vector<ReducedWord> kernel;
  for (auto const& w : all_reduced_words(n, max_word_length)) {
    if (pi.kills(w)) {
      kernel.push_back(w);
    }
  }
  r.kernel_words = kernel.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_w(0, kernel.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_s(0, perms.size() - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    auto const& w = kernel[pick_w(rng)];
    auto const& sp = perms[pick_s(rng)];
    std::vector<Letter> sigma;
    for (std::size_t x = 0; x < n; ++x) {
      sigma.push_back(static_cast<Letter>(sp(x) + 1));
    }
    ++r.invariance_samples;
    if (!pi.kills(permute_letters(sigma, w))) {
      ++r.invariance_failures;
    }
  }

  auto try_witness = [&](ReducedWord const& w, std::vector<Letter> const& phi) {
    auto image = endo_apply(LetterMap::from_images(phi), w);
    if (pi.kills(w) && !pi.kills(image)) {
      r.witness_found = true;
      r.witness = w;
      r.phi = phi;
      r.witness_image = image;
      r.pi_witness = pi.image(w);
      r.pi_image = pi.image(image);
      return true;
    }
    return false;
  };
  if (n >= 4) {
    // (12)(34)(12)(34) = id, and identifying 4 with 1 gives (12)(31)(12)(31)
    auto w = letters_word({1, 2, 1, 3, 4, 3, 1, 2, 1, 3, 4, 3});
    std::vector<Letter> phi;
    for (Letter x = 1; x <= n; ++x) {
      phi.push_back(x == 4 ? 1 : x);
    }
    try_witness(w, phi);
  } else {
    // shortest kernel word and first letter map (lexicographic) that leave ker pi
    std::vector<Letter> phi(n, 1);
    for (auto const& w : kernel) {
      std::fill(phi.begin(), phi.end(), 1);
      bool found = false;
      while (!found) {
        found = try_witness(w, phi);
        std::size_t i = n;
        while (i > 0 && phi[i - 1] == n) {
          phi[--i] = 1;
        }
        if (i == 0) {
          break;
        }
        ++phi[i - 1];
      }
      if (found) {
        break;
      }
    }
  }
  return r;
}

}  // namespace pcat
