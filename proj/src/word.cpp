#include "pcat/word.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pcat {

namespace {

  std::vector<Letter> parse_letters(std::string_view text) {
    std::vector<Letter> out;
    std::string s(text);
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      if (tok == "e") {
        continue;
      }
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != tok.size() || v == 0 || tok[0] == '-') {
        throw std::invalid_argument("bad letter '" + tok + "' in word");
      }
      out.push_back(static_cast<Letter>(v));
    }
    return out;
  }

  std::string letters_to_string(std::span<const Letter> w) {
    if (w.empty()) {
      return "e";
    }
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        s += ' ';
      }
      s += std::to_string(w[i]);
    }
    return s;
  }

  std::size_t hash_letters(std::span<const Letter> w) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ w.size();
    for (auto x : w) {
      h = (h ^ x) * 0x100000001b3ULL;
    }
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

}  // namespace

MonoidWord::MonoidWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (std::find(letters_.begin(), letters_.end(), 0u) != letters_.end()) {
    throw std::invalid_argument("letter 0 in word");
  }
}

MonoidWord MonoidWord::parse(std::string_view text) {
  return MonoidWord(parse_letters(text));
}

Letter MonoidWord::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::string MonoidWord::to_string() const {
  return letters_to_string(letters_);
}

ReducedWord ReducedWord::reduce(std::span<const Letter> seq) {
  ReducedWord w;
  w.letters_.reserve(seq.size());
  for (auto x : seq) {
    if (x == 0) {
      throw std::invalid_argument("letter 0 in word");
    }
    if (!w.letters_.empty() && w.letters_.back() == x) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(x);
    }
  }
  return w;
}

ReducedWord ReducedWord::parse(std::string_view text) {
  auto seq = parse_letters(text);
  return reduce(seq);
}

Letter ReducedWord::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

std::size_t ReducedWord::distinct_letters() const {
  auto v = letters_;
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

std::string ReducedWord::to_string() const {
  return letters_to_string(letters_);
}

std::size_t WordHash::operator()(ReducedWord const& w) const noexcept {
  return hash_letters(w.letters());
}

std::size_t WordHash::operator()(MonoidWord const& w) const noexcept {
  return hash_letters(w.letters());
}

LetterMap LetterMap::from_images(std::span<const Letter> images) {
  LetterMap m;
  for (std::size_t i = 0; i < images.size(); ++i) {
    m.images_[static_cast<Letter>(i + 1)] = images[i];
  }
  return m;
}

Letter LetterMap::operator()(Letter x) const {
  auto it = images_.find(x);
  if (it == images_.end()) {
    throw std::out_of_range("letter map undefined on " + std::to_string(x));
  }
  return it->second;
}

LetterMap LetterMap::after(LetterMap const& other) const {
  LetterMap r;
  for (auto [x, y] : other.images_) {
    r.images_[x] = (*this)(y);
  }
  return r;
}

ReducedWord reduce(std::span<const Letter> seq) {
  return ReducedWord::reduce(seq);
}

ReducedWord multiply(ReducedWord const& v, ReducedWord const& w) {
  std::vector<Letter> seq(v.letters().begin(), v.letters().end());
  seq.insert(seq.end(), w.letters().begin(), w.letters().end());
  return reduce(seq);
}

ReducedWord invert(ReducedWord const& w) {
  std::vector<Letter> seq(w.letters().rbegin(), w.letters().rend());
  return reduce(seq);
}

ReducedWord conjugate(Letter a, ReducedWord const& w) {
  std::vector<Letter> seq;
  seq.reserve(w.size() + 2);
  seq.push_back(a);
  seq.insert(seq.end(), w.letters().begin(), w.letters().end());
  seq.push_back(a);
  return reduce(seq);
}

ReducedWord endo_apply(LetterMap const& phi, ReducedWord const& w) {
  std::vector<Letter> seq;
  seq.reserve(w.size());
  for (auto x : w.letters()) {
    seq.push_back(phi(x));
  }
  return reduce(seq);
}

MonoidWord endo_apply(LetterMap const& phi, MonoidWord const& w) {
  std::vector<Letter> seq;
  seq.reserve(w.size());
  for (auto x : w.letters()) {
    seq.push_back(phi(x));
  }
  return MonoidWord(std::move(seq));
}

ReducedWord canonical_form(std::span<const Letter> seq) {
  auto w = reduce(seq);
  return canonical_relabel(w);
}

ReducedWord canonical_relabel(ReducedWord const& w) {
  std::vector<Letter> remap(w.max_letter() + 1, 0);
  std::vector<Letter> seq(w.letters().begin(), w.letters().end());
  Letter next = 0;
  for (auto& x : seq) {
    if (remap[x] == 0) {
      remap[x] = ++next;
    }
    x = remap[x];
  }
  return reduce(seq);
}

bool is_canonical(ReducedWord const& w) {
  Letter next = 1;
  for (auto x : w.letters()) {
    if (x > next) {
      return false;
    }
    if (x == next) {
      ++next;
    }
  }
  return true;
}

ReducedWord word_of_labelled_partition(Partition const& p,
                                       std::span<const Letter> i) {
  if (!is_compatible_labelling(p, i)) {
    throw std::invalid_argument("labelling is not compatible with "
                                + p.to_string());
  }
  return reduce(i);
}

bool conjugate_rotation_identity_check(Partition const& p,
                                       std::span<const Letter> i, Letter i0) {
  auto lhs = conjugate(i0, word_of_labelled_partition(p, i));
  auto rotated = move_last_leg_to_front(tensor(p, named::pair()));
  std::vector<Letter> labels;
  labels.push_back(i0);
  labels.insert(labels.end(), i.begin(), i.end());
  labels.push_back(i0);
  return lhs == word_of_labelled_partition(rotated, labels);
}

std::vector<std::size_t> exponent_vector(MonoidWord const& w, std::size_t n) {
  std::vector<std::size_t> e(n, 0);
  for (auto x : w.letters()) {
    if (x > n) {
      throw std::out_of_range("letter " + std::to_string(x) + " exceeds n = "
                              + std::to_string(n));
    }
    ++e[x - 1];
  }
  return e;
}

std::vector<std::size_t> exponent_vector(ReducedWord const& w, std::size_t n) {
  return exponent_vector(MonoidWord({w.letters().begin(), w.letters().end()}), n);
}

bool is_fully_characteristic_even_check(std::size_t sample_size,
                                        std::uint64_t seed,
                                        std::size_t max_word_length) {
  std::mt19937_64 rng(seed);
  constexpr Letter kLetters = 6;
  auto random_reduced = [&](std::size_t len) {
    std::vector<Letter> seq;
    std::uniform_int_distribution<Letter> pick(1, kLetters);
    while (seq.size() < len) {
      Letter x = pick(rng);
      if (seq.empty() || seq.back() != x) {
        seq.push_back(x);
      }
    }
    return ReducedWord::reduce(seq);
  };
  for (std::size_t s = 0; s < sample_size; ++s) {
    std::uniform_int_distribution<std::size_t> half(0, max_word_length / 2);
    auto w = random_reduced(2 * half(rng));
    // Generators go to involutions u a_j u^{-1}, after a random letter map.
    std::uniform_int_distribution<Letter> pick(1, kLetters);
    std::uniform_int_distribution<std::size_t> conj_len(0, 3);
    std::vector<ReducedWord> image(kLetters + 1);
    for (Letter x = 1; x <= kLetters; ++x) {
      auto u = random_reduced(conj_len(rng));
      std::vector<Letter> seq(u.letters().begin(), u.letters().end());
      seq.push_back(pick(rng));
      seq.insert(seq.end(), u.letters().rbegin(), u.letters().rend());
      image[x] = reduce(seq);
    }
    std::vector<Letter> seq;
    for (auto x : w.letters()) {
      seq.insert(seq.end(), image[x].letters().begin(), image[x].letters().end());
    }
    if (reduce(seq).size() % 2 != 0) {
      return false;
    }
  }
  return true;
}

std::vector<ReducedWord> all_reduced_words(std::size_t n, std::size_t max_length) {
  std::vector<ReducedWord> out{ReducedWord{}};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_length && n > 0; ++len) {
    std::vector<std::vector<Letter>> next;
    for (auto const& w : layer) {
      for (Letter x = 1; x <= n; ++x) {
        if (w.empty() || w.back() != x) {
          auto v = w;
          v.push_back(x);
          next.push_back(std::move(v));
        }
      }
    }
    for (auto const& v : next) {
      out.push_back(reduce(v));
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<ReducedWord> canonical_reduced_words(std::size_t max_letters,
                                                 std::size_t max_length) {
  std::vector<ReducedWord> out{ReducedWord{}};
  struct Item {
    std::vector<Letter> w;
    Letter used;
  };
  std::vector<Item> layer{{{}, 0}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Item> next;
    for (auto const& it : layer) {
      Letter top = it.used + 1;
      if (max_letters != 0 && top > max_letters) {
        top = it.used;
      }
      for (Letter x = 1; x <= top; ++x) {
        if (!it.w.empty() && it.w.back() == x) {
          continue;
        }
        auto v = it.w;
        v.push_back(x);
        next.push_back({std::move(v), std::max(it.used, x)});
      }
    }
    for (auto const& it : next) {
      out.push_back(reduce(it.w));
    }
    layer = std::move(next);
  }
  return out;
}

void for_each_relabelling(ReducedWord const& w, std::size_t n,
                          std::function<void(ReducedWord const&)> const& f) {
  std::size_t b = w.distinct_letters();
  if (b > n) {
    return;
  }
  std::vector<Letter> image(b + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::vector<Letter> seq(w.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j > b) {
      for (std::size_t t = 0; t < w.size(); ++t) {
        seq[t] = image[w[t]];
      }
      f(ReducedWord::reduce(seq));
      return;
    }
    for (Letter y = 1; y <= n; ++y) {
      if (!used[y]) {
        used[y] = true;
        image[j] = y;
        rec(j + 1);
        used[y] = false;
      }
    }
  };
  rec(1);
}

}  // namespace pcat
