#include "pcat/category.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <omp.h>

#include "pcat/subgroup.hpp"
#include "pcat/word.hpp"

namespace pcat {

char const* to_string(PartitionOp op) {
  switch (op) {
    case PartitionOp::seed:
      return "seed";
    case PartitionOp::generator:
      return "generator";
    case PartitionOp::tensor:
      return "tensor";
    case PartitionOp::compose:
      return "compose";
    case PartitionOp::involute:
      return "involute";
    case PartitionOp::rotate_down:
      return "rotate_down";
    default:
      return "rotate_up";
  }
}

std::optional<std::size_t> Category::complete_up_to() const {
  if (!complete_) {
    return std::nullopt;
  }
  return max_points_;
}

std::optional<std::size_t> Category::find(Partition const& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<Partition> Category::members(std::size_t k, std::size_t l) const {
  std::vector<Partition> out;
  for (auto const& p : parts_) {
    if (p.upper() == k && p.lower() == l) {
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> Category::sorted() const {
  auto out = parts_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Category::derivation(std::size_t id) const {
  std::vector<std::string> lines;
  std::set<std::size_t> done;
  std::function<void(std::size_t)> visit = [&](std::size_t x) {
    if (!done.insert(x).second) {
      return;
    }
    auto const& d = derivs_.at(x);
    auto ref = [](std::size_t y) { return "#" + std::to_string(y); };
    std::string rhs = to_string(d.op);
    switch (d.op) {
      case PartitionOp::seed:
        break;
      case PartitionOp::generator:
        rhs += " " + std::to_string(d.a);
        break;
      case PartitionOp::tensor:
      case PartitionOp::compose:
        visit(d.a);
        visit(d.b);
        rhs += "(" + ref(d.a) + ", " + ref(d.b) + ")";
        break;
      default:
        visit(d.a);
        rhs += "(" + ref(d.a) + ")";
        break;
    }
    lines.push_back(ref(x) + " " + parts_.at(x).to_string() + " = " + rhs);
  };
  visit(id);
  return lines;
}

namespace {

  struct Found {
    Partition partition;
    PartitionDerivation derivation;
  };
  using FoundMap = std::unordered_map<PartitionKey, Found, PartitionKeyHash>;

  void offer(FoundMap& out, Partition const& p, PartitionDerivation d) {
    auto [it, fresh] = out.try_emplace(p.key(), Found{p, d});
    if (!fresh && d < it->second.derivation) {
      it->second.derivation = d;
    }
  }

}  // namespace

Category saturate(std::span<const Partition> generators, std::size_t max_points,
                  std::size_t max_count, Exec exec) {
  if (max_points == 0 || max_count == 0) {
    throw std::invalid_argument("saturation bounds must be positive");
  }
  if (max_points > kMaxPoints) {
    throw std::invalid_argument("max_points exceeds " + std::to_string(kMaxPoints));
  }
  Category c;
  c.generators_.assign(generators.begin(), generators.end());
  c.max_points_ = max_points;
  c.max_count_ = max_count;

  // shape buckets: ids by upper count and by lower count
  std::vector<std::vector<std::uint32_t>> by_upper(max_points + 1), by_lower(max_points + 1);
  auto insert = [&](Partition const& p, PartitionDerivation d) {
    auto id = static_cast<std::uint32_t>(c.parts_.size());
    c.index_.emplace(p.key(), id);
    c.parts_.push_back(p);
    c.derivs_.push_back(d);
    by_upper[p.upper()].push_back(id);
    by_lower[p.lower()].push_back(id);
  };

  std::map<PartitionKey, Found> seeds;
  auto seed = [&](Partition const& p, PartitionDerivation d) {
    if (p.points() > max_points) {
      return;
    }
    auto [it, fresh] = seeds.try_emplace(p.key(), Found{p, d});
    if (!fresh && d < it->second.derivation) {
      it->second.derivation = d;
    }
  };
  seed(named::pair(), {PartitionOp::seed, 0, 0});
  seed(named::identity(), {PartitionOp::seed, 1, 0});
  for (std::size_t g = 0; g < generators.size(); ++g) {
    seed(generators[g], {PartitionOp::generator, static_cast<std::uint32_t>(g), 0});
  }
  for (auto& [key, f] : seeds) {
    insert(f.partition, f.derivation);
  }

  c.complete_ = true;
  std::size_t begin = 0;
  while (begin < c.parts_.size()) {
    std::size_t end = c.parts_.size();
    ++c.rounds_;
    int threads = exec == Exec::parallel ? omp_get_max_threads() : 1;
    std::vector<FoundMap> local(static_cast<std::size_t>(threads));
    auto const& parts = c.parts_;
    auto const& index = c.index_;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) if (exec == Exec::parallel)
    for (std::size_t fi = begin; fi < end; ++fi) {
      auto& out = local[static_cast<std::size_t>(omp_get_thread_num())];
      auto const& f = parts[fi];
      auto id = static_cast<std::uint32_t>(fi);
      auto consider = [&](Partition const& p, PartitionDerivation d) {
        if (!index.count(p.key())) {
          offer(out, p, d);
        }
      };
      consider(involute(f), {PartitionOp::involute, id, 0});
      if (f.upper() > 0) {
        consider(rotate(f, Rotation::upper_to_lower), {PartitionOp::rotate_down, id, 0});
      }
      if (f.lower() > 0) {
        consider(rotate(f, Rotation::lower_to_upper), {PartitionOp::rotate_up, id, 0});
      }
      for (std::size_t gi = 0; gi < end; ++gi) {
        auto const& g = parts[gi];
        if (f.points() + g.points() > max_points) {
          continue;
        }
        auto gid = static_cast<std::uint32_t>(gi);
        consider(tensor(f, g), {PartitionOp::tensor, id, gid});
        if (gi < begin) {
          consider(tensor(g, f), {PartitionOp::tensor, gid, id});
        }
      }
      // compose(q = f, p = g): g.lower == f.upper
      for (auto gid : by_lower[f.upper()]) {
        if (gid >= end) {
          break;
        }
        auto const& g = parts[gid];
        if (g.upper() + f.lower() <= max_points) {
          consider(compose(f, g).partition, {PartitionOp::compose, id, gid});
        }
      }
      // compose(q = g, p = f): g.upper == f.lower
      for (auto gid : by_upper[f.lower()]) {
        if (gid >= begin) {
          break;
        }
        auto const& g = parts[gid];
        if (f.upper() + g.lower() <= max_points) {
          consider(compose(g, f).partition, {PartitionOp::compose, gid, id});
        }
      }
    }
    std::map<PartitionKey, Found> merged;
    for (auto& m : local) {
      for (auto& [key, f] : m) {
        auto [it, fresh] = merged.try_emplace(key, f);
        if (!fresh && f.derivation < it->second.derivation) {
          it->second.derivation = f.derivation;
        }
      }
    }
    begin = end;
    for (auto& [key, f] : merged) {
      if (c.parts_.size() >= max_count) {
        c.complete_ = false;
        return c;
      }
      insert(f.partition, f.derivation);
    }
  }
  return c;
}

std::vector<Partition> saturate_reference(std::span<const Partition> generators,
                                          std::size_t max_points) {
  std::set<Partition> s{named::pair(), named::identity()};
  for (auto const& g : generators) {
    if (g.points() <= max_points) {
      s.insert(g);
    }
  }
  while (true) {
    auto next = s;
    for (auto const& p : s) {
      next.insert(involute(p));
      if (p.upper() > 0) {
        next.insert(rotate(p, Rotation::upper_to_lower));
      }
      if (p.lower() > 0) {
        next.insert(rotate(p, Rotation::lower_to_upper));
      }
      for (auto const& q : s) {
        if (p.points() + q.points() <= max_points) {
          next.insert(tensor(p, q));
        }
        if (q.upper() == p.lower() && p.upper() + q.lower() <= max_points) {
          next.insert(compose(q, p).partition);
        }
      }
    }
    if (next.size() == s.size()) {
      return {s.begin(), s.end()};
    }
    s = std::move(next);
  }
}

namespace {

  ReducedWord injective_word(Partition const& one_line) {
    std::vector<Letter> seq;
    for (auto x : one_line.labels()) {
      seq.push_back(x + 1u);
    }
    return reduce(seq);
  }

}  // namespace

ContainsResult contains(Category const& cat, Partition const& p) {
  ContainsResult r;
  if (auto id = cat.find(p)) {
    r.verdict = Verdict::yes;
    r.derivation = cat.derivation(*id);
    return r;
  }
  auto const& gens = cat.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g] == p) {
      r.verdict = Verdict::yes;
      r.derivation = {"generator " + std::to_string(g) + " " + p.to_string()};
      return r;
    }
  }
  // the seeds (pair and |) have all blocks of size 2
  bool gens_even = std::all_of(gens.begin(), gens.end(),
                               [](auto const& q) { return q.all_blocks_even(); });
  if (gens_even && !p.all_blocks_even()) {
    r.verdict = Verdict::no;
    r.certificate = "block parity: every generator has only even blocks, "
                    + p.to_string() + " has an odd block";
    return r;
  }
  bool gens_small = std::all_of(gens.begin(), gens.end(),
                                [](auto const& q) { return q.max_block_size() <= 2; });
  if (gens_small && p.max_block_size() > 2) {
    r.verdict = Verdict::no;
    r.certificate = "block size: every generator has blocks of size <= 2, "
                    + p.to_string() + " has a block of size "
                    + std::to_string(p.max_block_size());
    return r;
  }
  std::vector<ReducedWord> words;
  for (auto const& g : gens) {
    words.push_back(injective_word(to_one_line(g)));
  }
  auto w = injective_word(to_one_line(p));
  std::size_t m = std::max<std::size_t>(p.block_count(), 1);
  AbelianizationQuotient ab(m);
  LengthParityQuotient parity;
  auto tq = transposition_quotient(m);
  for (FiniteQuotient const* q : {static_cast<FiniteQuotient const*>(&parity),
                                  static_cast<FiniteQuotient const*>(&ab),
                                  static_cast<FiniteQuotient const*>(&tq)}) {
    if (!q->kills(w) && quotient_kills_closure(*q, words, m)) {
      r.verdict = Verdict::no;
      r.certificate = "word image: " + q->name()
                      + " kills the words of all generators but maps "
                      + w.to_string() + " to " + q->image(w);
      return r;
    }
  }
  return r;
}

Verdict is_hyperoctahedral(Category const& cat) {
  auto four = contains(cat, named::vierpart()).verdict;
  auto singles = contains(cat, named::double_singleton()).verdict;
  if (four == Verdict::no || singles == Verdict::yes) {
    return Verdict::no;
  }
  if (four == Verdict::yes && singles == Verdict::no) {
    return Verdict::yes;
  }
  return Verdict::unknown;
}

Verdict is_group_theoretical(Category const& cat) {
  return contains(cat, named::primarypart()).verdict;
}

}  // namespace pcat
