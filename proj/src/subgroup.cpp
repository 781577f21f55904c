#include "pcat/subgroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <omp.h>

namespace pcat {

namespace {

  struct Candidate {
    ReducedWord word;
    WordDerivation derivation;
  };

  using CandidateMap = std::unordered_map<ReducedWord, WordDerivation, WordHash>;

  void offer(CandidateMap& out, ReducedWord w, WordDerivation d) {
    auto [it, fresh] = out.try_emplace(std::move(w), d);
    if (!fresh && d < it->second) {
      it->second = std::move(d);
    }
  }

  // All canonical forms of w1 * tau(w2) of length <= limit, tau injective on
  // the letters of w2 into the letters of w1 and fresh letters.
  template <typename Emit>
  void for_each_product(ReducedWord const& w1, ReducedWord const& w2,
                        std::size_t n, std::size_t limit, Emit&& emit) {
    std::size_t len1 = w1.size(), len2 = w2.size();
    Letter b1 = w1.max_letter(), b2 = w2.max_letter();
    std::size_t need = len1 + len2 > limit ? (len1 + len2 - limit + 1) / 2 : 0;
    if (need > std::min(len1, len2)) {
      return;
    }
    std::vector<Letter> tau(b2 + 1, 0);
    std::vector<bool> used(b1 + 1, false), forced(b2 + 1, false);
    for (std::size_t t = 0; t < need; ++t) {
      Letter x = w2[t], y = w1[len1 - 1 - t];
      if (tau[x] == 0) {
        if (used[y]) {
          return;
        }
        tau[x] = y;
        used[y] = true;
        forced[x] = true;
      } else if (tau[x] != y) {
        return;
      }
    }
    std::vector<Letter> seq(len1 + len2);
    std::copy(w1.letters().begin(), w1.letters().end(), seq.begin());
    std::function<void(Letter, Letter)> rec = [&](Letter j, Letter fresh) {
      if (j > b2) {
        for (std::size_t t = 0; t < len2; ++t) {
          seq[len1 + t] = tau[w2[t]];
        }
        auto w = canonical_form(seq);
        if (w.size() <= limit) {
          emit(std::move(w), std::vector<Letter>(tau.begin() + 1, tau.end()));
        }
        return;
      }
      if (forced[j]) {
        rec(j + 1, fresh);
        return;
      }
      for (Letter y = 1; y <= b1; ++y) {
        if (!used[y]) {
          used[y] = true;
          tau[j] = y;
          rec(j + 1, fresh);
          used[y] = false;
          tau[j] = 0;
        }
      }
      Letter f = b1 + fresh + 1;
      if (n == kUnboundedLetters || f <= n) {
        tau[j] = f;
        rec(j + 1, fresh + 1);
        tau[j] = 0;
      }
    };
    rec(1, 0);
  }

  void expand_unary(ReducedWord const& w, std::uint32_t id, std::size_t n,
                    std::size_t limit, CandidateMap& out) {
    Letter b = w.max_letter();
    {
      std::vector<Letter> seq(w.letters().rbegin(), w.letters().rend());
      offer(out, canonical_form(seq), {WordOp::inverse, id, 0, {}});
    }
    Letter top = b + 1;
    if (n != kUnboundedLetters && top > n) {
      top = static_cast<Letter>(n);
    }
    for (Letter x = 1; x <= top; ++x) {
      auto c = canonical_relabel(conjugate(x, w));
      if (c.size() <= limit) {
        offer(out, std::move(c), {WordOp::conjugate, id, 0, {x}});
      }
    }
    std::vector<Letter> seq(w.size());
    for (Letter to = 1; to <= b; ++to) {
      for (Letter from = to + 1; from <= b; ++from) {
        for (std::size_t t = 0; t < w.size(); ++t) {
          seq[t] = w[t] == from ? to : w[t];
        }
        offer(out, canonical_form(seq), {WordOp::identify, id, 0, {from, to}});
      }
    }
  }

}  // namespace

std::vector<ReducedWord> SubgroupCache::representatives() const {
  std::vector<ReducedWord> out;
  for (auto const& w : words_) {
    if (w.size() <= bounds_.max_length) {
      out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> SubgroupCache::find(ReducedWord const& w) const {
  if (n_ != kUnboundedLetters && w.max_letter() > n_) {
    throw std::invalid_argument("word " + w.to_string() + " uses letters beyond n = "
                                + std::to_string(n_));
  }
  auto it = index_.find(canonical_relabel(w));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<ReducedWord> SubgroupCache::elements() const {
  if (unbounded_letters()) {
    throw std::logic_error("elements() needs a bounded letter range");
  }
  std::vector<ReducedWord> out;
  for (auto const& w : representatives()) {
    for_each_relabelling(w, n_, [&](ReducedWord const& v) { out.push_back(v); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> SubgroupCache::derivation(std::size_t id) const {
  std::vector<std::string> lines;
  std::set<std::size_t> done;
  std::function<void(std::size_t)> visit = [&](std::size_t x) {
    if (!done.insert(x).second) {
      return;
    }
    auto const& d = derivations_.at(x);
    std::string rhs;
    auto ref = [](std::size_t y) { return "#" + std::to_string(y); };
    switch (d.op) {
      case WordOp::identity:
        rhs = "identity";
        break;
      case WordOp::generator:
        rhs = "generator " + generators_.at(d.a).to_string();
        break;
      case WordOp::inverse:
        visit(d.a);
        rhs = "inverse " + ref(d.a);
        break;
      case WordOp::conjugate:
        visit(d.a);
        rhs = "conjugate " + ref(d.a) + " by " + std::to_string(d.data.at(0));
        break;
      case WordOp::identify:
        visit(d.a);
        rhs = "identify " + std::to_string(d.data.at(0)) + "->"
              + std::to_string(d.data.at(1)) + " in " + ref(d.a);
        break;
      case WordOp::product: {
        visit(d.a);
        visit(d.b);
        rhs = "product " + ref(d.a) + " * " + ref(d.b) + "[";
        for (std::size_t i = 0; i < d.data.size(); ++i) {
          rhs += (i ? "," : "") + std::to_string(i + 1) + "->"
                 + std::to_string(d.data[i]);
        }
        rhs += "]";
        break;
      }
    }
    lines.push_back(ref(x) + " = " + words_.at(x).to_string() + " : " + rhs);
  };
  visit(id);
  return lines;
}

SubgroupCache closure_generate(std::span<const ReducedWord> generators,
                               std::size_t n, ClosureBounds bounds, Exec exec) {
  if (bounds.max_length == 0 || bounds.max_count == 0) {
    throw std::invalid_argument("closure bounds must be positive");
  }
  SubgroupCache c;
  c.n_ = n;
  c.bounds_ = bounds;
  std::size_t limit = bounds.max_length + bounds.slack;
  auto insert = [&](ReducedWord w, WordDerivation d) {
    auto id = static_cast<std::uint32_t>(c.words_.size());
    c.index_.emplace(w, id);
    c.words_.push_back(std::move(w));
    c.derivations_.push_back(std::move(d));
  };
  insert(ReducedWord{}, {WordOp::identity, 0, 0, {}});
  std::map<ReducedWord, WordDerivation> seeds;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    auto const& w = generators[g];
    if (n != kUnboundedLetters && w.max_letter() > n) {
      throw std::invalid_argument("generator " + w.to_string()
                                  + " uses letters beyond n");
    }
    c.generators_.push_back(reduce(w.letters()));
    auto cw = canonical_relabel(c.generators_.back());
    if (cw.size() <= limit && !c.index_.count(cw)) {
      WordDerivation d{WordOp::generator, static_cast<std::uint32_t>(g), 0, {}};
      auto [it, fresh] = seeds.try_emplace(cw, d);
      if (!fresh && d < it->second) {
        it->second = d;
      }
    }
  }
  std::size_t frontier_begin = 0;
  for (auto& [w, d] : seeds) {
    insert(w, d);
  }
  c.complete_ = true;
  while (frontier_begin < c.words_.size()) {
    std::size_t frontier_end = c.words_.size();
    ++c.rounds_;
    int threads = exec == Exec::parallel ? omp_get_max_threads() : 1;
    std::vector<CandidateMap> local(static_cast<std::size_t>(threads));
    auto const& words = c.words_;
    auto const& index = c.index_;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (exec == Exec::parallel)
    for (std::size_t f = frontier_begin; f < frontier_end; ++f) {
      auto& out = local[static_cast<std::size_t>(omp_get_thread_num())];
      CandidateMap mine;
      auto fid = static_cast<std::uint32_t>(f);
      expand_unary(words[f], fid, n, limit, mine);
      for (std::size_t g = 0; g < frontier_end; ++g) {
        auto gid = static_cast<std::uint32_t>(g);
        for_each_product(words[f], words[g], n, limit,
                         [&](ReducedWord w, std::vector<Letter> tau) {
                           offer(mine, std::move(w),
                                 {WordOp::product, fid, gid, std::move(tau)});
                         });
        if (g < frontier_begin) {
          for_each_product(words[g], words[f], n, limit,
                           [&](ReducedWord w, std::vector<Letter> tau) {
                             offer(mine, std::move(w),
                                   {WordOp::product, gid, fid, std::move(tau)});
                           });
        }
      }
      for (auto& [w, d] : mine) {
        if (!index.count(w)) {
          offer(out, w, std::move(d));
        }
      }
    }
    std::map<ReducedWord, WordDerivation> merged;
    for (auto& m : local) {
      for (auto& [w, d] : m) {
        auto [it, fresh] = merged.try_emplace(w, d);
        if (!fresh && d < it->second) {
          it->second = d;
        }
      }
    }
    frontier_begin = frontier_end;
    for (auto& [w, d] : merged) {
      if (c.words_.size() >= bounds.max_count) {
        c.complete_ = false;
        return c;
      }
      insert(w, d);
    }
  }
  return c;
}

std::vector<ReducedWord> closure_reference(std::span<const ReducedWord> generators,
                                           std::size_t n, std::size_t max_length) {
  if (n == kUnboundedLetters) {
    throw std::invalid_argument("closure_reference needs bounded letters");
  }
  std::set<ReducedWord> s{ReducedWord{}};
  for (auto const& g : generators) {
    if (g.size() <= max_length) {
      s.insert(g);
    }
  }
  std::vector<std::vector<Letter>> maps;
  std::vector<Letter> img(n, 1);
  while (true) {
    maps.push_back(img);
    std::size_t i = 0;
    while (i < n && img[i] == n) {
      img[i++] = 1;
    }
    if (i == n) {
      break;
    }
    ++img[i];
  }
  while (true) {
    std::set<ReducedWord> next = s;
    auto add = [&](ReducedWord w) {
      if (w.size() <= max_length) {
        next.insert(std::move(w));
      }
    };
    for (auto const& w : s) {
      add(invert(w));
      for (Letter x = 1; x <= n; ++x) {
        add(conjugate(x, w));
      }
      for (auto const& m : maps) {
        add(endo_apply(LetterMap::from_images(m), w));
      }
      for (auto const& v : s) {
        add(multiply(w, v));
      }
    }
    if (next.size() == s.size()) {
      return {s.begin(), s.end()};
    }
    s = std::move(next);
  }
}

std::string AbelianizationQuotient::name() const {
  return "abelianization Z_2^" + std::to_string(n_);
}

bool AbelianizationQuotient::kills(ReducedWord const& w) const {
  std::vector<bool> odd(w.max_letter() + 1, false);
  for (auto x : w.letters()) {
    odd[x] = !odd[x];
  }
  return std::none_of(odd.begin(), odd.end(), [](bool b) { return b; });
}

std::string AbelianizationQuotient::image(ReducedWord const& w) const {
  std::string s;
  for (std::size_t i = 1; i <= n_; ++i) {
    std::size_t c = std::count(w.letters().begin(), w.letters().end(), Letter(i));
    s += static_cast<char>('0' + c % 2);
  }
  return s;
}

PermutationQuotient::PermutationQuotient(std::string name, std::vector<Permutation> images)
    : name_(std::move(name)), images_(std::move(images)) {
  for (auto const& p : images_) {
    if (!(p * p).is_identity()) {
      throw std::invalid_argument("generator image is not an involution");
    }
  }
}

Permutation PermutationQuotient::evaluate(ReducedWord const& w) const {
  if (images_.empty()) {
    return Permutation(1);
  }
  Permutation r(images_.front().degree());
  for (auto x : w.letters()) {
    if (x > images_.size()) {
      throw std::out_of_range("letter beyond quotient generators");
    }
    r = r * images_[x - 1];
  }
  return r;
}

PermutationQuotient transposition_quotient(std::size_t n) {
  std::vector<Permutation> images;
  for (std::size_t i = 1; i <= n; ++i) {
    images.push_back(Permutation::transposition(n + 1, 0, i));
  }
  return PermutationQuotient("S_" + std::to_string(n + 1) + " via a_i -> (0,i)",
                             std::move(images));
}

bool quotient_kills_closure(FiniteQuotient const& q,
                            std::span<const ReducedWord> generators, std::size_t m) {
  if (q.letters() != 0 && q.letters() < m) {
    throw std::invalid_argument("quotient defined on too few letters");
  }
  for (auto const& g : generators) {
    auto cg = canonical_relabel(g);
    std::size_t b = cg.max_letter();
    std::vector<Letter> img(b, 1), seq(cg.size());
    while (true) {
      for (std::size_t t = 0; t < cg.size(); ++t) {
        seq[t] = img[cg[t] - 1];
      }
      if (!q.kills(reduce(seq))) {
        return false;
      }
      std::size_t i = 0;
      while (i < b && img[i] == m) {
        img[i++] = 1;
      }
      if (i == b) {
        break;
      }
      ++img[i];
    }
  }
  return true;
}

MembershipResult membership(SubgroupCache const& cache, ReducedWord const& w,
                            std::span<const Certificate> certificates,
                            std::span<const FiniteQuotient* const> extra) {
  MembershipResult r;
  auto cw = canonical_relabel(w);
  if (auto id = cache.find(cw)) {
    r.verdict = Verdict::yes;
    r.derivation = cache.derivation(*id);
    return r;
  }
  // w lies in the closure over n letters iff it lies in the closure over
  // the letters it uses (retract the others onto letter 1).
  std::size_t m = std::max<std::size_t>(cw.max_letter(), 1);
  auto try_quotient = [&](FiniteQuotient const& q, ReducedWord const& word) {
    if (q.letters() != 0 && q.letters() < m) {
      return false;
    }
    if (!q.kills(word) && quotient_kills_closure(q, cache.generators(), m)) {
      r.verdict = Verdict::no;
      r.certificate = q.name() + ": kills every letter-map image of every generator; image of "
                      + word.to_string() + " is " + q.image(word);
      return true;
    }
    return false;
  };
  for (auto c : certificates) {
    bool found = false;
    switch (c) {
      case Certificate::abelianization:
        found = try_quotient(AbelianizationQuotient(m), cw);
        break;
      case Certificate::length_parity:
        found = try_quotient(LengthParityQuotient{}, cw);
        break;
      case Certificate::transposition:
        found = try_quotient(transposition_quotient(m), cw);
        break;
    }
    if (found) {
      return r;
    }
  }
  for (auto const* q : extra) {
    if (try_quotient(*q, cw)) {
      return r;
    }
  }
  return r;
}

}  // namespace pcat
