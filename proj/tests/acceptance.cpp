// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "pcat/category.hpp"
#include "pcat/correspondence.hpp"
#include "pcat/definetti.hpp"
#include "pcat/linear_rep.hpp"
#include "pcat/properties.hpp"
#include "pcat/reflection_group.hpp"

using namespace pcat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, std::string const& what) {
    if (!ok) {
      if (pass) {
        detail << "first failure: " << what << "; ";
      }
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, char const* name, double limit_s, std::function<void(Outcome&)> const& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(s <= limit_s, "took longer than " + std::to_string(limit_s) + " s");
  failures += o.pass ? 0 : 1;
  std::printf("%s criterion %2d: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", id, name, s,
              o.detail.str().c_str());
  std::fflush(stdout);
}

std::vector<Partition> partitions_up_to(std::size_t k_max, std::size_t l_max) {
  std::vector<Partition> out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t l = 0; l <= l_max; ++l) {
      auto ps = enumerate_partitions(k, l);
      out.insert(out.end(), ps.begin(), ps.end());
    }
  }
  return out;
}

std::vector<ReducedWord> words_where(std::size_t n, std::size_t len,
                                     std::function<bool(std::span<const Letter>)> const& keep) {
  std::vector<ReducedWord> out;
  for (auto const& w : all_reduced_words(n, len)) {
    if (keep(w.letters())) {
      out.push_back(w);
    }
  }
  return out;
}

std::string run_cli(std::vector<std::string> const& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

}  // namespace

int main() {
  criterion(1, "partition counts 1, 1, 2, 5, 15, 52 and |P(2)| = 2", 1.0, [](Outcome& o) {
    std::vector<std::size_t> expect{1, 1, 2, 5, 15, 52};
    for (std::size_t k = 0; k < expect.size(); ++k) {
      auto got = enumerate_partitions(k).size();
      o.require(got == expect[k] && oracle::set_partition_count(k) == expect[k],
                "k = " + std::to_string(k));
    }
    o.require(enumerate_partitions(2).size() == 2, "|P(2)|");
  });

  criterion(2, "T_p functoriality on all pairs with at most 3+3 points, n = 2, 3", 60.0,
            [](Outcome& o) {
              auto parts = partitions_up_to(3, 3);
              std::size_t tensors = 0, compositions = 0;
              for (std::size_t n : {2, 3}) {
                for (auto const& p : parts) {
                  o.require(check_involution(p, n), "involution " + p.to_string());
                  for (auto const& q : parts) {
                    ++tensors;
                    if (!check_tensor(p, q, n)) {
                      o.require(false, "tensor " + p.to_string() + " " + q.to_string());
                    }
                    if (q.upper() == p.lower()) {
                      ++compositions;
                      if (!check_composition(q, p, n)) {
                        o.require(false, "composition " + q.to_string() + " " + p.to_string());
                      }
                    }
                  }
                }
              }
              o.detail << parts.size() << " partitions, " << tensors << " tensor and "
                       << compositions << " composition checks";
            });

  criterion(3, "F-group laws on 10^4 random labelled partitions", 60.0, [](Outcome& o) {
    auto r = f_group_law_check(10'000, 1, 6, 4);
    o.require(r.samples == 10'000, "sample count");
    o.require(r.product_failures == 0, "product");
    o.require(r.inverse_failures == 0, "inverse");
    o.require(r.conjugation_failures == 0, "conjugation");
  });

  struct RoundCase {
    char const* gen;
    char const* oracle_name;
    std::function<bool(std::span<const Letter>)> in_n;
  };
  std::vector<RoundCase> rounds{
      {"1 2", "even length", oracle::even_length},
      {"1 2 1 2", "even exponents", oracle::even_exponents},
      {"1 2 1 2 1 2", "Coxeter m = 3 reflection representation",
       [](std::span<const Letter> w) { return oracle::coxeter_m3_identity(w, 3); }},
      {"1 2 3 1 2 3", "balanced positions", oracle::balanced_positions},
  };
  for (auto const& rc : rounds) {
    std::string name = std::string("round trip F_3(C(N)) = N for N = <") + rc.gen + ">, words <= 8";
    criterion(4, name.c_str(), 300.0, [&](Outcome& o) {
      std::vector<ReducedWord> gens{ReducedWord::parse(rc.gen)};
      auto N = closure_generate(gens, 3, {8, 10'000'000, 0});
      auto expect = words_where(3, 8, rc.in_n);
      o.require(N.complete(), "closure incomplete");
      o.require(N.elements() == expect, std::string("closure differs from ") + rc.oracle_name);
      auto sc = category_from_subgroup(N, 8);
      o.require(sc.category.complete(), "category incomplete");
      auto F = f_group_generators(sc.category, 3, 8).elements();
      o.require(F == expect, std::string("F-group differs from ") + rc.oracle_name);
      auto rep = roundtrip_check(N, 3, 8, 8);
      o.require(rep.forward.holds && rep.backward.holds, "roundtrip_check");
      o.detail << expect.size() << " words in N, category of " << sc.category.size();
    });
  }

  criterion(5, "words of <primarypart> reduce to e, n <= 4, length <= 10", 120.0, [](Outcome& o) {
    std::vector<Partition> gens{named::primarypart()};
    auto cat = saturate(gens, 10, 10'000'000);
    o.require(cat.complete(), "category incomplete");
    std::size_t labellings = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto f = f_group_generators(cat, n, 10);
      labellings += f.labellings_checked();
      for (auto const& e : f.entries()) {
        o.require(e.word.empty(), e.partition.to_string() + " gives " + e.word.to_string());
      }
      o.require(f.elements() == std::vector<ReducedWord>{ReducedWord{}}, "elements");
    }
    o.detail << cat.size() << " partitions, " << labellings << " labellings";
  });

  criterion(6, "series orders 4, 6, 8, 18, 16", 60.0, [](Outcome& o) {
    struct C {
      std::size_t n, s, order;
    };
    for (auto c : std::vector<C>{{2, 2, 4}, {2, 3, 6}, {3, 2, 8}, {3, 3, 18}, {4, 2, 16}}) {
      auto oracle_order = oracle::affine_group_order(c.n, static_cast<long>(c.s));
      o.require(oracle_order == c.order, "oracle disagrees with fixture");
      auto en = enumerate_group(hyperoctahedral_series_spec(c.n, c.s), 100'000);
      o.require(en.model && en.model->order() == c.order,
                "order for n = " + std::to_string(c.n) + ", s = " + std::to_string(c.s));
    }
  });

  criterion(7, "b_i commute for H^(s), not for H^[3] at n = 3", 60.0, [](Outcome& o) {
    for (auto [n, s] : std::vector<std::pair<std::size_t, std::size_t>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
      auto e = even_subgroup_analysis(hyperoctahedral_series_spec(n, s), 100'000);
      o.require(e.b_commute == Verdict::yes, "H^(" + std::to_string(s) + "), n = " + std::to_string(n));
    }
    auto h = even_subgroup_analysis(higher_series_spec(3, 3), 100'000);
    o.require(h.b_commute == Verdict::no, "H^[3]");
    o.detail << "H^[3]: " << h.commute_evidence;
  });

  criterion(8, "non-easy quotient at n = 4", 10.0, [](Outcome& o) {
    auto r = non_easy_example_check(4, 1000, 1);
    o.require(r.generated_order == 120 && r.surjective, "surjectivity onto S_5");
    o.require(r.invariance_exact, "exact invariance");
    o.require(r.invariance_samples == 1000 && r.invariance_failures == 0, "sampled invariance");
    o.require(r.witness_found && r.pi_witness == "()" && r.pi_image == "(1,3,2)", "witness");
    o.detail << "witness " << r.witness.to_string() << " -> " << r.witness_image.to_string()
             << ", image " << r.pi_image;
  });

  criterion(9, "semi-direct product identities", 60.0, [](Outcome& o) {
    std::vector<std::pair<ReflectionGroupSpec, std::size_t>> cases{
        {trivial_group_spec(1), 1},
        {trivial_group_spec(2), 1},
        {trivial_group_spec(3), 1},
        {hyperoctahedral_series_spec(3, 2), 8},
        {hyperoctahedral_series_spec(2, 3), 6}};
    for (auto const& [spec, order] : cases) {
      auto en = enumerate_group(spec, 1000);
      o.require(en.model && en.model->order() == order, spec.note + ": group order");
      if (en.model) {
        auto r = semidirect_matrix_check(spec, *en.model, spec.n);
        o.require(r.unitary && r.coassociative, spec.note + ": unitarity/coassociativity");
        o.require(r.all(), spec.note + ": other identities");
      }
    }
  });

  criterion(10, "kernel words against quotient oracles and moment invariance", 120.0,
            [](Outcome& o) {
              std::size_t words = 0;
              for (std::size_t n = 1; n <= 3; ++n) {
                auto h3_model = *enumerate_group(hyperoctahedral_series_spec(n, 3), 1000).model;
                auto h2_model = *enumerate_group(hyperoctahedral_series_spec(n, 2), 1000).model;
                KernelOracle h2(hyperoctahedral_series_spec(n, 2));
                KernelOracle h3(hyperoctahedral_series_spec(n, 3));
                KernelOracle star(hyperoctahedral_series_spec(n, 0));
                KernelOracle hh2(higher_series_spec(n, 2));
                auto yes = [](KernelOracle const& k, MonoidWord const& w) {
                  auto v = k.decide(w).verdict;
                  if (v == Verdict::unknown) {
                    throw std::runtime_error("undecided " + w.to_string());
                  }
                  return v == Verdict::yes;
                };
                for (auto const& w : all_monoid_words(n, 8)) {
                  ++words;
                  auto id = FiniteGroupModel::identity();
                  bool ev = oracle::even_exponents(w.letters());
                  o.require(yes(h2, w) == (h2_model.evaluate(w.letters()) == id) && yes(h2, w) == ev,
                            "H^(2) " + w.to_string());
                  o.require(yes(h3, w) == (h3_model.evaluate(w.letters()) == id),
                            "H^(3) " + w.to_string());
                  o.require(yes(star, w) == oracle::balanced_positions(w.letters()),
                            "H^* " + w.to_string());
                  o.require(yes(hh2, w) == ev, "H^[2] " + w.to_string());
                }
              }
              // the public entry point on a sample
              auto spec = hyperoctahedral_series_spec(3, 3);
              KernelOracle k(spec);
              for (auto const& w : all_monoid_words(3, 4)) {
                o.require(is_in_kernel(w, spec).verdict == k.decide(w).verdict, "is_in_kernel");
              }
              auto h2 = hyperoctahedral_series_spec(3, 2);
              o.require(invariance_check(MomentTable::independent_signs(3, 6), h2).passed(),
                        "independent signs");
              auto odd = MomentTable::independent_signs(3, 6);
              odd.set(MonoidWord::parse("1 2 2"), mpq_class(1, 3));
              o.require(!invariance_check(odd, h2).passed(), "odd moment accepted");
              o.detail << words << " words per spec";
            });

  criterion(11, "reruns with the same seed give identical reports", 300.0, [](Outcome& o) {
    std::vector<std::vector<std::string>> cmds{
        {"saturate", "--gen", "aaaa|", "--max-points", "6", "--list"},
        {"contains", "--gen", "ab|ab", "--partition", "aaaa|"},
        {"fgroup", "--gen", "abab|", "--n", "3", "--length", "6"},
        {"cat-from-subgroup", "--n", "3", "--relator", "1 2 1 2", "--point-bound", "6", "--list"},
        {"roundtrip", "--n", "3", "--relator", "1 2 3 1 2 3", "--word-bound", "8", "--point-bound", "8"},
        {"diag", "--gen", "ab|ab", "--gen", "aaaa|", "--n", "3", "--length", "6"},
        {"tpmat", "--partition", "ab|ba", "--n", "3"},
        {"homdim", "--gen", "aaaa|", "--k", "2", "--l", "2", "--n", "3"},
        {"series", "--variant", "hyperoctahedral", "--n", "3", "--s", "3"},
        {"even-analysis", "--variant", "higher", "--n", "3", "--s", "3", "--max-group-order", "2000"},
        {"semidirect-check", "--variant", "hyperoctahedral", "--s", "2", "--n", "3"},
        {"non-easy", "--n", "4", "--seed", "7"},
        {"kernel", "--variant", "higher", "--s", "3", "--n", "3", "--word", "1 2 3 1 2 3"},
        {"balanced", "--word", "1 2 3 3 2 1"},
        {"moment-check", "--independent-signs", "--n", "3", "--degree", "4"},
        {"selftest", "--seed", "3"},
    };
    for (auto c : cmds) {
      c.push_back("--deterministic");
      int a = 0, b = 0;
      auto first = run_cli(c, a);
      auto second = run_cli(c, b);
      o.require(a == b && first == second && !first.empty(), c.front());
    }
    o.detail << cmds.size() << " commands";
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
