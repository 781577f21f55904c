#include "pcat/correspondence.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include <omp.h>

#include "pcat/reflection_group.hpp"

namespace pcat {

namespace {

  double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }

  // Calls f(labels) for every restricted growth string on b blocks with at
  // most n distinct values.
  template <typename F>
  void for_each_block_labelling(std::size_t b, std::size_t n, F&& f) {
    if (b == 0) {
      std::vector<unsigned> empty;
      f(empty);
      return;
    }
    std::vector<unsigned> a(b, 0), m(b, 0);
    while (true) {
      f(a);
      std::size_t i = b;
      bool found = false;
      while (i-- > 1) {
        if (a[i] <= m[i] && a[i] + 1 < n) {
          found = true;
          break;
        }
      }
      if (!found) {
        return;
      }
      ++a[i];
      for (std::size_t t = i + 1; t < b; ++t) {
        a[t] = 0;
        m[t] = std::max(m[t - 1], a[t - 1]);
      }
    }
  }

}  // namespace

std::vector<ReducedWord> FGroupCache::representatives() const {
  std::vector<ReducedWord> out;
  for (auto const& e : entries_) {
    out.push_back(e.word);
  }
  return out;
}

bool FGroupCache::contains(ReducedWord const& w) const {
  return provenance(w) != nullptr;
}

FGroupEntry const* FGroupCache::provenance(ReducedWord const& w) const {
  if (w.max_letter() > n_) {
    return nullptr;
  }
  auto it = index_.find(canonical_relabel(w));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<ReducedWord> FGroupCache::elements() const {
  std::vector<ReducedWord> out;
  for (auto const& e : entries_) {
    for_each_relabelling(e.word, n_, [&](ReducedWord const& v) { out.push_back(v); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FGroupCache f_group_generators(Category const& cat, std::size_t n,
                               std::size_t length_bound, Exec exec) {
  if (n == 0) {
    throw std::invalid_argument("f_group_generators needs n >= 1");
  }
  FGroupCache fc;
  fc.n_ = n;
  fc.length_bound_ = length_bound;
  fc.category_size_ = cat.size();
  std::vector<Partition> one_line;
  for (auto const& p : cat.sorted()) {
    if (p.is_one_line()) {
      one_line.push_back(p);
    }
  }
  int threads = exec == Exec::parallel ? omp_get_max_threads() : 1;
  std::vector<std::map<ReducedWord, FGroupEntry>> local(static_cast<std::size_t>(threads));
  std::vector<std::size_t> counts(static_cast<std::size_t>(threads), 0);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads) if (exec == Exec::parallel)
  for (std::size_t t = 0; t < one_line.size(); ++t) {
    auto me = static_cast<std::size_t>(omp_get_thread_num());
    auto const& p = one_line[t];
    std::vector<Letter> seq(p.points());
    for_each_block_labelling(p.block_count(), n, [&](std::vector<unsigned> const& lab) {
      ++counts[me];
      for (std::size_t x = 0; x < p.points(); ++x) {
        seq[x] = lab[p.label(x)] + 1;
      }
      auto w = canonical_form(seq);
      if (w.size() > length_bound) {
        return;
      }
      FGroupEntry e{w, p, seq};
      auto [it, fresh] = local[me].try_emplace(w, e);
      if (!fresh && std::tie(p, seq) < std::tie(it->second.partition, it->second.labelling)) {
        it->second = std::move(e);
      }
    });
  }
  std::map<ReducedWord, FGroupEntry> merged;
  for (auto& m : local) {
    for (auto& [w, e] : m) {
      auto [it, fresh] = merged.try_emplace(w, e);
      if (!fresh && std::tie(e.partition, e.labelling)
                        < std::tie(it->second.partition, it->second.labelling)) {
        it->second = e;
      }
    }
  }
  for (auto c : counts) {
    fc.labellings_ += c;
  }
  for (auto& [w, e] : merged) {
    fc.index_.emplace(w, fc.entries_.size());
    fc.entries_.push_back(std::move(e));
  }
  return fc;
}

std::vector<ReducedWord> f_group_reference(Category const& cat, std::size_t n,
                                           std::size_t length_bound) {
  std::set<ReducedWord> out;
  for (auto const& p : cat.sorted()) {
    if (!p.is_one_line()) {
      continue;
    }
    std::size_t k = p.points();
    std::vector<Letter> idx(k, 1);
    while (true) {
      if (is_compatible_labelling(p, idx)) {
        auto w = word_of_labelled_partition(p, idx);
        if (w.size() <= length_bound) {
          out.insert(w);
        }
      }
      std::size_t i = 0;
      while (i < k && idx[i] == n) {
        idx[i++] = 1;
      }
      if (i == k) {
        break;
      }
      ++idx[i];
    }
  }
  return {out.begin(), out.end()};
}

SubgroupCategory category_from_subgroup(SubgroupCache const& N, std::size_t max_points,
                                        std::size_t max_count, Exec exec) {
  SubgroupCategory sc;
  // Kernels may have up to max_points blocks, more than the n letters of N;
  // membership over more letters is the closure of the same generators.
  ClosureBounds b = N.bounds();
  b.max_length = std::max(b.max_length, max_points);
  sc.extended = closure_generate(N.generators(), kUnboundedLetters, b, exec);
  std::vector<Partition> seeds;
  for (std::size_t k = 0; k <= max_points; ++k) {
    for_each_partition(k, 0, [&](Partition const& p) {
      std::vector<Letter> seq;
      for (auto x : p.labels()) {
        seq.push_back(x + 1u);
      }
      if (sc.extended.contains(reduce(seq))) {
        sc.kernels.push_back(p);
        Partition r = p;
        seeds.push_back(r);
        for (std::size_t j = 0; j < k; ++j) {
          r = rotate(r, Rotation::upper_to_lower);
          seeds.push_back(r);
        }
      }
    });
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  sc.seeds = seeds.size();
  sc.category = saturate(seeds, max_points, max_count, exec);
  for (auto const& p : sc.category.sorted()) {
    if (!std::binary_search(seeds.begin(), seeds.end(), p)) {
      sc.added.push_back(p);
    }
  }
  return sc;
}

RoundtripReport roundtrip_check(SubgroupCache const& N, std::size_t n,
                                std::size_t word_bound, std::size_t point_bound,
                                Exec exec) {
  if (N.bounds().max_length < word_bound) {
    throw std::invalid_argument("subgroup cache is bounded below the word bound");
  }
  RoundtripReport r;
  r.n = n;
  r.word_bound = word_bound;
  r.point_bound = point_bound;
  r.subgroup_complete = N.complete();
  auto t0 = std::chrono::steady_clock::now();
  auto sc = category_from_subgroup(N, point_bound, 10'000'000, exec);
  r.ms_category = ms_since(t0);
  r.category_size = sc.category.size();
  r.category_complete = sc.category.complete();
  r.kernel_count = sc.kernels.size();
  r.saturation_additions = sc.added.size();

  t0 = std::chrono::steady_clock::now();
  auto fc = f_group_generators(sc.category, n, word_bound, exec);
  r.ms_fgroup = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  for (auto const& w : fc.representatives()) {
    ++r.forward.checked;
    if (!N.contains(w)) {
      r.forward.holds = false;
      if (r.forward.counterexamples.size() < kMaxCounterexamples) {
        r.forward.counterexamples.push_back(w);
      }
    }
  }
  for (auto const& w : N.representatives()) {
    if (w.size() > word_bound || w.max_letter() > n) {
      continue;
    }
    ++r.backward.checked;
    if (!fc.contains(w)) {
      r.backward.holds = false;
      if (r.backward.counterexamples.size() < kMaxCounterexamples) {
        r.backward.counterexamples.push_back(w);
      }
    }
  }
  r.subgroup_representatives = r.backward.checked;
  r.ms_compare = ms_since(t0);
  return r;
}

ReflectionGroupSpec diagonal_subgroup(Category const& cat, std::size_t n,
                                      std::size_t length_bound) {
  auto fc = f_group_generators(cat, n, length_bound);
  ReflectionGroupSpec spec;
  spec.n = n;
  spec.relators = fc.elements();
  spec.note = "words of one-line members of a category saturated to "
              + std::to_string(cat.max_points()) + " points, length <= "
              + std::to_string(length_bound);
  return spec;
}

}  // namespace pcat
