#pragma once

// Words of the free monoid N^{*n} against quotients of Z_2^{*n}, and the
// word-level invariance conditions on tables of mixed moments.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "pcat/common.hpp"
#include "pcat/reflection_group.hpp"
#include "pcat/subgroup.hpp"
#include "pcat/word.hpp"

namespace pcat {

struct KernelDecision {
  Verdict verdict = Verdict::unknown;
  std::string method;  // "affine", "free", "finite", "closure"
  std::string evidence;
};

// Decides whether a monoid word maps to e in the quotient. Built once per
// spec: H^(s) and H^* go through the affine normal form, finite groups
// through coset enumeration, and the rest through a bounded closure of the
// relators with quotient certificates.
class KernelOracle {
 public:
  explicit KernelOracle(ReflectionGroupSpec spec, std::size_t max_order = 100'000,
                        std::size_t word_bound = 10);

  KernelDecision decide(MonoidWord const& w) const;
  ReflectionGroupSpec const& spec() const noexcept { return spec_; }
  std::string const& method() const noexcept { return method_; }

 private:
  ReflectionGroupSpec spec_;
  std::string method_;
  std::optional<FiniteGroupModel> model_;
  std::optional<SubgroupCache> closure_;
  std::size_t word_bound_;
};

KernelDecision is_in_kernel(MonoidWord const& w, ReflectionGroupSpec const& spec);

bool is_balanced(MonoidWord const& w, std::size_t n);

// Rational moments psi(w) for all words over 1..n of length <= degree.
class MomentTable {
 public:
  MomentTable(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {}

  std::size_t letters() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  std::map<MonoidWord, mpq_class> const& entries() const noexcept { return entries_; }

  void set(MonoidWord const& w, mpq_class v);
  std::optional<mpq_class> value(MonoidWord const& w) const;
  // Every word of length <= degree present and psi(e) = 1.
  std::vector<std::string> problems() const;

  // {"n": 2, "degree": 4, "entries": {"e": "1", "1 2 1 2": "3/4", ...}}
  static MomentTable from_json(nlohmann::json const& j);
  nlohmann::ordered_json to_json() const;

  // psi(w) = 1 when every letter occurs an even number of times, else 0:
  // moments of independent symmetric signs.
  static MomentTable independent_signs(std::size_t n, std::size_t degree);

 private:
  std::size_t n_;
  std::size_t degree_;
  std::map<MonoidWord, mpq_class> entries_;
};

struct InvarianceViolation {
  char condition = 'a';
  MonoidWord word;
  std::string detail;
};

inline constexpr char const* kFactorizationNote =
    "condition (c) compares psi(w) with psi(1^e_1 2^e_2 ... n^e_n); this is the scalar form "
    "of the factorization through the conditional expectation";

struct InvarianceReport {
  std::size_t n = 0;
  std::size_t degree = 0;
  std::size_t words_checked = 0;
  std::size_t kernel_words = 0;
  std::vector<MonoidWord> undecided;
  std::vector<InvarianceViolation> violations;
  bool passed() const { return violations.empty() && undecided.empty(); }
};

// (a) psi vanishes off the kernel, (b) psi is invariant under permuting
// letters, (c) on the kernel psi only depends on the exponent vector.
// Throws if the table has problems.
InvarianceReport invariance_check(MomentTable const& psi, ReflectionGroupSpec const& spec);

// All words over 1..n of length <= degree, shortlex.
std::vector<MonoidWord> all_monoid_words(std::size_t n, std::size_t degree);

}  // namespace pcat
