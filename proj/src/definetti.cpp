#include "pcat/definetti.hpp"

#include <algorithm>

namespace pcat {

namespace {

  std::string affine_string(AffineElement const& g) {
    std::string s = g.sign > 0 ? "x -> x + (" : "x -> -x + (";
    for (std::size_t i = 0; i < g.v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(g.v[i]);
    }
    return s + ")";
  }

  bool relators_trivial(ReflectionGroupSpec const& spec) {
    return std::all_of(spec.relators.begin(), spec.relators.end(),
                       [](ReducedWord const& r) { return r.empty(); });
  }

}  // namespace

KernelOracle::KernelOracle(ReflectionGroupSpec spec, std::size_t max_order,
                           std::size_t word_bound)
    : spec_(std::move(spec)), word_bound_(word_bound) {
  if (spec_.series.variant == SeriesVariant::hyperoctahedral) {
    method_ = "affine";
    return;
  }
  if (relators_trivial(spec_)) {
    method_ = "free";
    return;
  }
  auto en = enumerate_group(spec_, max_order);
  if (en.model) {
    model_ = std::move(en.model);
    method_ = "finite";
    return;
  }
  method_ = "closure";
  if (relators_letter_map_closed(spec_)) {
    closure_ = closure_generate(spec_.relators, spec_.n, {word_bound, 1'000'000, 0});
  }
}

KernelDecision KernelOracle::decide(MonoidWord const& w) const {
  if (w.max_letter() > spec_.n) {
    throw std::invalid_argument("word " + w.to_string() + " uses letters beyond n = "
                                + std::to_string(spec_.n));
  }
  KernelDecision d;
  d.method = method_;
  auto r = reduce(w.letters());
  if (r.empty()) {
    d.verdict = Verdict::yes;
    d.evidence = "reduces to e";
    return d;
  }
  if (method_ == "affine") {
    auto g = affine_series_image(w.letters(), spec_.n, spec_.series.s);
    d.verdict = affine_is_identity(g) ? Verdict::yes : Verdict::no;
    d.evidence = affine_string(g);
    return d;
  }
  if (method_ == "free") {
    d.verdict = Verdict::no;
    d.evidence = "reduced word " + r.to_string();
    return d;
  }
  if (model_) {
    auto g = model_->evaluate(r);
    d.verdict = g == FiniteGroupModel::identity() ? Verdict::yes : Verdict::no;
    d.evidence = "element " + model_->representative(g).to_string() + " of a group of order "
                 + std::to_string(model_->order());
    return d;
  }
  if (closure_ && closure_->contains(r)) {
    d.verdict = Verdict::yes;
    d.evidence = "in the closure of the relators";
    return d;
  }
  auto perm = transposition_quotient(spec_.n);
  AbelianizationQuotient ab(spec_.n);
  LengthParityQuotient parity;
  for (FiniteQuotient const* q : {static_cast<FiniteQuotient const*>(&perm),
                                  static_cast<FiniteQuotient const*>(&ab),
                                  static_cast<FiniteQuotient const*>(&parity)}) {
    bool kills_relators = std::all_of(spec_.relators.begin(), spec_.relators.end(),
                                      [&](ReducedWord const& x) { return q->kills(x); });
    if (kills_relators && !q->kills(r)) {
      d.verdict = Verdict::no;
      d.evidence = q->name() + " image " + q->image(r);
      return d;
    }
  }
  d.evidence = "undecided within word bound " + std::to_string(word_bound_);
  return d;
}

KernelDecision is_in_kernel(MonoidWord const& w, ReflectionGroupSpec const& spec) {
  return KernelOracle(spec).decide(w);
}

bool is_balanced(MonoidWord const& w, std::size_t n) {
  n = std::max<std::size_t>({n, w.max_letter(), 1});
  return affine_is_identity(affine_series_image(w.letters(), n, 0));
}

void MomentTable::set(MonoidWord const& w, mpq_class v) {
  if (w.size() > degree_ || w.max_letter() > n_) {
    throw std::invalid_argument("word " + w.to_string() + " outside the table");
  }
  v.canonicalize();
  entries_[w] = std::move(v);
}

std::optional<mpq_class> MomentTable::value(MonoidWord const& w) const {
  auto it = entries_.find(w);
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<std::string> MomentTable::problems() const {
  std::vector<std::string> out;
  auto e = value(MonoidWord{});
  if (!e || *e != 1) {
    out.push_back("psi(e) must be 1");
  }
  std::size_t missing = 0;
  for (auto const& w : all_monoid_words(n_, degree_)) {
    if (!entries_.count(w)) {
      if (missing++ < 5) {
        out.push_back("missing entry for " + w.to_string());
      }
    }
  }
  if (missing > 5) {
    out.push_back(std::to_string(missing - 5) + " more missing entries");
  }
  return out;
}

MomentTable MomentTable::from_json(nlohmann::json const& j) {
  MomentTable t(j.at("n").get<std::size_t>(), j.at("degree").get<std::size_t>());
  for (auto const& [key, val] : j.at("entries").items()) {
    mpq_class q;
    if (q.set_str(val.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad rational \"" + val.get<std::string>() + "\"");
    }
    t.set(MonoidWord::parse(key), q);
  }
  return t;
}

nlohmann::ordered_json MomentTable::to_json() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::object();
  for (auto const& [w, v] : entries_) {
    entries[w.to_string()] = v.get_str();
  }
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["degree"] = degree_;
  j["entries"] = entries;
  return j;
}

MomentTable MomentTable::independent_signs(std::size_t n, std::size_t degree) {
  MomentTable t(n, degree);
  for (auto const& w : all_monoid_words(n, degree)) {
    auto e = exponent_vector(w, n);
    bool even = std::all_of(e.begin(), e.end(), [](std::size_t c) { return c % 2 == 0; });
    t.set(w, even ? 1 : 0);
  }
  return t;
}

std::vector<MonoidWord> all_monoid_words(std::size_t n, std::size_t degree) {
  std::vector<MonoidWord> out{MonoidWord{}};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t d = 1; d <= degree && n > 0; ++d) {
    std::vector<std::vector<Letter>> next;
    for (auto const& w : layer) {
      for (Letter x = 1; x <= n; ++x) {
        auto v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    }
    for (auto const& v : next) {
      out.emplace_back(v);
    }
    layer = std::move(next);
  }
  return out;
}

InvarianceReport invariance_check(MomentTable const& psi, ReflectionGroupSpec const& spec) {
  if (auto p = psi.problems(); !p.empty()) {
    throw std::invalid_argument("moment table: " + p.front());
  }
  if (spec.n < psi.letters()) {
    throw std::invalid_argument("spec has fewer letters than the table");
  }
  InvarianceReport rep;
  rep.n = psi.letters();
  rep.degree = psi.degree();
  KernelOracle oracle(spec);
  auto perms = symmetric_group(psi.letters());
  for (auto const& [w, v] : psi.entries()) {
    ++rep.words_checked;
    auto d = oracle.decide(w);
    if (d.verdict == Verdict::no && v != 0) {
      rep.violations.push_back({'a', w, "psi = " + v.get_str() + " off the kernel (" + d.evidence
                                            + ")"});
    } else if (d.verdict == Verdict::unknown && v != 0) {
      rep.undecided.push_back(w);
    }
    for (auto const& sp : perms) {
      std::vector<Letter> img;
      for (auto x : w.letters()) {
        img.push_back(static_cast<Letter>(sp(x - 1) + 1));
      }
      MonoidWord sw(img);
      auto sv = psi.value(sw);
      if (*sv != v) {
        rep.violations.push_back({'b', w, "psi(" + sw.to_string() + ") = " + sv->get_str()
                                              + " differs from " + v.get_str()});
        break;
      }
    }
    if (d.verdict == Verdict::yes) {
      ++rep.kernel_words;
      std::vector<Letter> sorted(w.letters().begin(), w.letters().end());
      std::sort(sorted.begin(), sorted.end());
      MonoidWord sw(sorted);
      auto sv = psi.value(sw);
      if (*sv != v) {
        rep.violations.push_back({'c', w, "psi(" + sw.to_string() + ") = " + sv->get_str()
                                              + " differs from " + v.get_str()});
      }
    }
  }
  return rep;
}

}  // namespace pcat
