#include "pcat/properties.hpp"

#include <algorithm>
#include <functional>

#include "pcat/category.hpp"
#include "pcat/correspondence.hpp"
#include "pcat/definetti.hpp"
#include "pcat/linear_rep.hpp"
#include "pcat/reflection_group.hpp"
#include "pcat/subgroup.hpp"

namespace pcat {

Partition random_partition(std::mt19937_64& rng, std::size_t k, std::size_t l) {
  std::vector<unsigned> labels(k + l);
  std::uniform_int_distribution<unsigned> pick(0, static_cast<unsigned>(k + l));
  for (auto& x : labels) {
    x = pick(rng);
  }
  return Partition::from_labels(k, l, labels);
}

LabelledPartition random_labelled_partition(std::mt19937_64& rng, std::size_t max_points,
                                            std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick_k(0, max_points);
  auto p = random_partition(rng, pick_k(rng), 0);
  std::uniform_int_distribution<Letter> pick_letter(1, static_cast<Letter>(n));
  std::vector<Letter> block_letter(p.block_count());
  for (auto& x : block_letter) {
    x = pick_letter(rng);
  }
  std::vector<Letter> labels;
  for (auto b : p.labels()) {
    labels.push_back(block_letter[b]);
  }
  return {p, labels};
}

FGroupLawResult f_group_law_check(std::size_t samples, std::uint64_t seed,
                                  std::size_t max_points, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  FGroupLawResult r;
  for (std::size_t t = 0; t < samples; ++t) {
    std::size_t n = pick_n(rng);
    auto [p, i] = random_labelled_partition(rng, max_points, n);
    auto [q, j] = random_labelled_partition(rng, max_points, n);
    ++r.samples;
    auto w = word_of_labelled_partition(p, i);

    auto ij = i;
    ij.insert(ij.end(), j.begin(), j.end());
    if (multiply(w, word_of_labelled_partition(q, j))
        != word_of_labelled_partition(tensor(p, q), ij)) {
      ++r.product_failures;
    }

    std::vector<Letter> rev(i.rbegin(), i.rend());
    if (invert(w) != word_of_labelled_partition(to_one_line(involute(p)), rev)) {
      ++r.inverse_failures;
    }

    std::uniform_int_distribution<Letter> pick_letter(1, static_cast<Letter>(n));
    if (!conjugate_rotation_identity_check(p, i, pick_letter(rng))) {
      ++r.conjugation_failures;
    }
  }
  return r;
}

namespace {

  class Suite {
   public:
    Suite(std::string module, std::string name) {
      r_.module = std::move(module);
      r_.name = std::move(name);
    }
    void check(bool ok, std::function<std::string()> const& what) {
      ++r_.cases;
      if (!ok && r_.failures++ == 0) {
        r_.first_failure = what();
      }
    }
    PropertyResult result() const { return r_; }

   private:
    PropertyResult r_;
  };

  std::vector<std::size_t> bell_numbers(std::size_t upto) {
    // Bell triangle
    std::vector<std::size_t> bell{1};
    std::vector<std::size_t> row{1};
    for (std::size_t k = 1; k <= upto; ++k) {
      std::vector<std::size_t> next{row.back()};
      for (auto x : row) {
        next.push_back(next.back() + x);
      }
      row = std::move(next);
      bell.push_back(row.front());
    }
    return bell;
  }

  std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  std::vector<Partition> partitions_up_to(std::size_t points) {
    std::vector<Partition> out;
    for (std::size_t m = 0; m <= points; ++m) {
      for (std::size_t k = 0; k <= m; ++k) {
        auto ps = enumerate_partitions(k, m - k);
        out.insert(out.end(), ps.begin(), ps.end());
      }
    }
    return out;
  }

  ReducedWord random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(n));
    std::vector<Letter> seq(len(rng));
    for (auto& x : seq) {
      x = letter(rng);
    }
    return reduce(seq);
  }

  void partition_suites(std::vector<PropertyResult>& out, std::mt19937_64& rng) {
    {
      Suite s("partition", "counts match Bell numbers");
      auto bell = bell_numbers(8);
      for (std::size_t k = 0; k <= 8; ++k) {
        auto got = enumerate_partitions(k).size();
        s.check(got == bell[k], [&] {
          return "k = " + std::to_string(k) + ": " + std::to_string(got);
        });
      }
      out.push_back(s.result());
    }
    auto small = partitions_up_to(5);
    {
      Suite s("partition", "involution is an involution and rotations are inverse");
      for (auto const& p : small) {
        s.check(involute(involute(p)) == p, [&] { return p.to_string(); });
        if (p.upper() > 0) {
          auto r = rotate(p, Rotation::upper_to_lower);
          s.check(rotate(r, Rotation::lower_to_upper) == p, [&] { return p.to_string(); });
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("partition", "parse inverts to_string");
      for (auto const& p : small) {
        s.check(Partition::parse(p.to_string()) == p, [&] { return p.to_string(); });
      }
      out.push_back(s.result());
    }
    {
      Suite s("partition", "tensor and composition are associative");
      std::uniform_int_distribution<std::size_t> legs(0, 3);
      for (int t = 0; t < 2000; ++t) {
        std::size_t a = legs(rng), b = legs(rng), c = legs(rng), d = legs(rng);
        auto p = random_partition(rng, a, b);
        auto q = random_partition(rng, b, c);
        auto r = random_partition(rng, c, d);
        auto qp = compose(q, p), rq = compose(r, q);
        auto left = compose(r, qp.partition), right = compose(rq.partition, p);
        s.check(left.partition == right.partition
                    && left.loops + qp.loops == right.loops + rq.loops,
                [&] { return r.to_string() + " " + q.to_string() + " " + p.to_string(); });
        s.check(tensor(tensor(p, q), r) == tensor(p, tensor(q, r)),
                [&] { return p.to_string() + " " + q.to_string() + " " + r.to_string(); });
        s.check(involute(compose(q, p).partition) == compose(involute(p), involute(q)).partition,
                [&] { return q.to_string() + " " + p.to_string(); });
      }
      out.push_back(s.result());
    }
  }

  void word_suites(std::vector<PropertyResult>& out, std::mt19937_64& rng, Exec exec) {
    {
      Suite s("word", "group laws and endomorphisms");
      std::uniform_int_distribution<Letter> img(1, 4);
      for (int t = 0; t < 5000; ++t) {
        auto u = random_word(rng, 4, 8), v = random_word(rng, 4, 8), w = random_word(rng, 4, 8);
        s.check(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)),
                [&] { return u.to_string() + " / " + v.to_string() + " / " + w.to_string(); });
        s.check(multiply(u, invert(u)).empty(), [&] { return u.to_string(); });
        std::vector<Letter> images{img(rng), img(rng), img(rng), img(rng)};
        auto phi = LetterMap::from_images(images);
        s.check(endo_apply(phi, multiply(u, v)) == multiply(endo_apply(phi, u), endo_apply(phi, v)),
                [&] { return u.to_string() + " / " + v.to_string(); });
      }
      out.push_back(s.result());
    }
    {
      Suite s("word", "closure agrees with the naive fixpoint");
      for (auto const* g : {"1 2", "1 2 1 2", "1 2 3 1 2 3", "1 2 1 2 1 2"}) {
        std::vector<ReducedWord> gens{ReducedWord::parse(g)};
        auto cache = closure_generate(gens, 3, {6, 1'000'000, 0}, exec);
        auto ref = closure_reference(gens, 3, 6);
        auto got = cache.elements();
        s.check(got == ref, [&] {
          return std::string(g) + ": " + std::to_string(got.size()) + " vs "
                 + std::to_string(ref.size());
        });
      }
      out.push_back(s.result());
    }
    {
      Suite s("word", "even length survives involution substitutions");
      s.check(is_fully_characteristic_even_check(2000, rng()),
              [] { return "odd image of an even word"; });
      // a_1 -> e is an endomorphism too, and it sends a_1 a_2 to a_2.
      std::vector<Letter> seq;
      auto w12 = ReducedWord::parse("1 2");
      for (auto x : w12.letters()) {
        if (x != 1) {
          seq.push_back(x);
        }
      }
      s.check(reduce(seq).size() % 2 == 1, [] { return "a_1 -> e kept a_1 a_2 even"; });
      out.push_back(s.result());
    }
  }

  void category_suites(std::vector<PropertyResult>& out, std::mt19937_64& rng, Exec exec) {
    {
      Suite s("category", "saturation agrees with the naive fixpoint");
      std::vector<std::vector<Partition>> gens{
          {},
          {named::vierpart()},
          {named::crossing()},
          {named::singleton()},
          {named::primarypart()},
          {named::halflibpart()},
          {named::vierpart(), named::double_singleton()}};
      for (auto const& g : gens) {
        auto cat = saturate(g, 6, 1'000'000, exec);
        auto ref = saturate_reference(g, 6);
        s.check(cat.sorted() == ref, [&] {
          return (g.empty() ? std::string("<>") : g.front().to_string()) + ": "
                 + std::to_string(cat.size()) + " vs " + std::to_string(ref.size());
        });
      }
      out.push_back(s.result());
    }
    {
      Suite s("category", "saturated categories are closed within the bound");
      auto cat = saturate(std::vector<Partition>{named::h(3)}, 6, 1'000'000, exec);
      auto members = cat.sorted();
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      for (int t = 0; t < 3000; ++t) {
        auto const& p = members[pick(rng)];
        auto const& q = members[pick(rng)];
        if (p.points() + q.points() <= 6) {
          s.check(cat.cached(tensor(p, q)), [&] { return p.to_string() + " x " + q.to_string(); });
        }
        if (q.upper() == p.lower() && p.upper() + q.lower() <= 6) {
          s.check(cat.cached(compose(q, p).partition),
                  [&] { return q.to_string() + " o " + p.to_string(); });
        }
        s.check(cat.cached(involute(p)), [&] { return p.to_string(); });
      }
      out.push_back(s.result());
    }
  }

  void correspondence_suites(std::vector<PropertyResult>& out, std::uint64_t seed, Exec exec) {
    {
      Suite s("correspondence", "F-group laws");
      auto r = f_group_law_check(10'000, seed);
      s.check(r.passed(), [&] {
        return std::to_string(r.product_failures) + " product, "
               + std::to_string(r.inverse_failures) + " inverse, "
               + std::to_string(r.conjugation_failures) + " conjugation failures";
      });
      out.push_back(s.result());
    }
    {
      Suite s("correspondence", "orbit enumeration agrees with all labellings");
      for (auto const& g : {named::vierpart(), named::primarypart(), named::h(3)}) {
        auto cat = saturate(std::vector<Partition>{g}, 6, 1'000'000, exec);
        auto fc = f_group_generators(cat, 3, 6, exec);
        s.check(fc.elements() == f_group_reference(cat, 3, 6),
                [&] { return g.to_string(); });
      }
      out.push_back(s.result());
    }
    {
      Suite s("correspondence", "F-group is closed under the subgroup operations");
      auto cat = saturate(std::vector<Partition>{named::h(2)}, 8, 1'000'000, exec);
      auto fc = f_group_generators(cat, 3, 8, exec);
      auto words = fc.elements();
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      std::uniform_int_distribution<Letter> letter(1, 3);
      for (int t = 0; t < 2000; ++t) {
        auto const& u = words[pick(rng)];
        auto const& v = words[pick(rng)];
        auto uv = multiply(u, v);
        if (uv.size() <= 8) {
          s.check(fc.contains(uv), [&] { return u.to_string() + " * " + v.to_string(); });
        }
        s.check(fc.contains(invert(u)), [&] { return u.to_string(); });
        auto c = conjugate(letter(rng), u);
        if (c.size() <= 8) {
          s.check(fc.contains(c), [&] { return c.to_string(); });
        }
        std::vector<Letter> images{letter(rng), letter(rng), letter(rng)};
        s.check(fc.contains(endo_apply(LetterMap::from_images(images), u)),
                [&] { return u.to_string(); });
      }
      out.push_back(s.result());
    }
  }

  void linear_suites(std::vector<PropertyResult>& out, std::mt19937_64& rng) {
    auto small = partitions_up_to(4);
    {
      Suite s("linear_rep", "T_p agrees with delta pointwise");
      for (std::size_t n : {2u, 3u}) {
        for (auto const& p : small) {
          s.check(t_matrix(p, n) == t_matrix_reference(p, n),
                  [&] { return p.to_string() + " n = " + std::to_string(n); });
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("linear_rep", "rotation reshapes T_p");
      for (std::size_t n : {2u, 3u}) {
        for (auto const& p : small) {
          s.check(check_rotation_reshape(p, n),
                  [&] { return p.to_string() + " n = " + std::to_string(n); });
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("linear_rep", "functoriality on random pairs");
      std::uniform_int_distribution<std::size_t> legs(0, 3);
      for (int t = 0; t < 500; ++t) {
        std::size_t a = legs(rng), b = legs(rng), c = legs(rng);
        auto p = random_partition(rng, a, b), q = random_partition(rng, b, c);
        for (std::size_t n : {2u, 3u}) {
          s.check(verify_functoriality(p, q, n),
                  [&] { return p.to_string() + " , " + q.to_string(); });
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("linear_rep", "rank is monotone and matches the dense rank");
      auto nc = saturate(std::vector<Partition>{}, 6, 1'000'000);
      auto all = saturate(std::vector<Partition>{named::crossing(), named::singleton()}, 6,
                          1'000'000);
      for (std::size_t n : {1u, 2u, 3u}) {
        for (auto [k, l] : {std::pair{2u, 0u}, {2u, 2u}, {3u, 1u}, {4u, 0u}, {3u, 3u}}) {
          auto a = hom_space_dimension(nc, k, l, n), b = hom_space_dimension(all, k, l, n);
          s.check(a.rank <= b.rank, [&] { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; });
          if (k + l <= 4) {
            auto parts = all.members(k, l);
            s.check(b.rank == hom_space_dimension_dense(parts, n),
                    [&] { return "dense rank at n = " + std::to_string(n); });
          }
        }
      }
      out.push_back(s.result());
    }
  }

  void group_suites(std::vector<PropertyResult>& out, std::mt19937_64& rng) {
    {
      Suite s("reflection_group", "series relators are invariant under permutations");
      for (std::size_t n = 2; n <= 5; ++n) {
        for (std::size_t sv : {0u, 2u, 3u}) {
          for (auto const& spec : {hyperoctahedral_series_spec(n, sv), higher_series_spec(n, sv)}) {
            std::vector<ReducedWord> rel(spec.relators);
            std::sort(rel.begin(), rel.end());
            for (auto const& sp : symmetric_group(n)) {
              std::vector<Letter> sigma;
              for (std::size_t x = 0; x < n; ++x) {
                sigma.push_back(static_cast<Letter>(sp(x) + 1));
              }
              std::vector<ReducedWord> img;
              for (auto const& r : rel) {
                img.push_back(permute_letters(sigma, r));
              }
              std::sort(img.begin(), img.end());
              s.check(img == rel, [&] { return spec.note; });
            }
            s.check(relators_letter_map_closed(spec), [&] { return spec.note; });
          }
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("reflection_group", "affine model matches coset enumeration");
      for (auto [n, sv] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}, {4u, 2u}}) {
        auto spec = hyperoctahedral_series_spec(n, sv);
        auto m = enumerate_group(spec, 10'000);
        s.check(m.model && m.model->order() == 2 * ipow(sv, n - 1),
                [&] { return spec.note; });
        if (!m.model) {
          continue;
        }
        for (int t = 0; t < 300; ++t) {
          auto w = random_word(rng, n, 12);
          bool tc = m.model->evaluate(w) == FiniteGroupModel::identity();
          s.check(tc == affine_is_identity(affine_series_image(w.letters(), n, sv)),
                  [&] { return spec.note + ": " + w.to_string(); });
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("reflection_group", "S_n action on the even generators");
      for (std::size_t n = 2; n <= 5; ++n) {
        for (auto const& sp : symmetric_group(n)) {
          std::vector<Letter> sigma;
          for (std::size_t x = 0; x < n; ++x) {
            sigma.push_back(static_cast<Letter>(sp(x) + 1));
          }
          for (std::size_t i = 1; i < n; ++i) {
            auto lhs = reduce(std::vector<Letter>{sigma[n - 1], sigma[i - 1]});
            s.check(expand_even_word(sn_action_on_even_generators(sigma, i), n) == lhs,
                    [&] { return "n = " + std::to_string(n) + " i = " + std::to_string(i); });
          }
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("reflection_group", "non-easy witness");
      auto r = non_easy_example_check(4, 1000, rng());
      s.check(r.passed() && r.pi_image == "(1,3,2)", [&] { return r.pi_image; });
      out.push_back(s.result());
    }
  }

  void definetti_suites(std::vector<PropertyResult>& out, std::mt19937_64& rng) {
    {
      Suite s("definetti", "balanced words are closed under the word operations");
      std::uniform_int_distribution<std::size_t> len(0, 8);
      std::uniform_int_distribution<Letter> letter(1, 3);
      std::vector<MonoidWord> balanced;
      for (int t = 0; t < 20000 && balanced.size() < 200; ++t) {
        std::vector<Letter> v(len(rng));
        for (auto& x : v) {
          x = letter(rng);
        }
        MonoidWord w(v);
        if (is_balanced(w, 3)) {
          balanced.emplace_back(w);
        }
      }
      auto perms = symmetric_group(3);
      for (std::size_t a = 0; a < balanced.size(); ++a) {
        auto const& w = balanced[a];
        auto const& v = balanced[(a * 7 + 3) % balanced.size()];
        std::vector<Letter> cat(w.letters().begin(), w.letters().end());
        cat.insert(cat.end(), v.letters().begin(), v.letters().end());
        s.check(is_balanced(MonoidWord(cat), 3), [&] { return w.to_string(); });
        std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
        s.check(is_balanced(MonoidWord(rev), 3), [&] { return w.to_string(); });
        auto const& sp = perms[a % perms.size()];
        std::vector<Letter> img;
        for (auto x : w.letters()) {
          img.push_back(static_cast<Letter>(sp(x - 1) + 1));
        }
        s.check(is_balanced(MonoidWord(img), 3), [&] { return w.to_string(); });
      }
      out.push_back(s.result());
    }
    {
      Suite s("definetti", "kernel words have even length, even exponents when s is even");
      for (auto const& spec : {hyperoctahedral_series_spec(3, 2), hyperoctahedral_series_spec(3, 3),
                               higher_series_spec(3, 2)}) {
        KernelOracle oracle(spec);
        for (auto const& w : all_monoid_words(3, 6)) {
          if (oracle.decide(w).verdict == Verdict::yes) {
            auto e = exponent_vector(w, 3);
            bool even = spec.series.s % 2 == 0
                            ? std::all_of(e.begin(), e.end(), [](std::size_t c) { return c % 2 == 0; })
                            : w.size() % 2 == 0;
            s.check(even, [&] { return spec.note + ": " + w.to_string(); });
          }
        }
      }
      out.push_back(s.result());
    }
    {
      Suite s("definetti", "independent signs are invariant for H^(2)");
      auto rep = invariance_check(MomentTable::independent_signs(3, 6),
                                  hyperoctahedral_series_spec(3, 2));
      s.check(rep.passed(), [&] { return rep.violations.front().word.to_string(); });
      out.push_back(s.result());
    }
  }

}  // namespace

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, Exec exec) {
  std::mt19937_64 rng(seed);
  std::vector<PropertyResult> out;
  partition_suites(out, rng);
  word_suites(out, rng, exec);
  category_suites(out, rng, exec);
  correspondence_suites(out, seed, exec);
  linear_suites(out, rng);
  group_suites(out, rng);
  definetti_suites(out, rng);
  return out;
}

}  // namespace pcat
