#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcat/category.hpp"
#include "pcat/correspondence.hpp"
#include "pcat/definetti.hpp"
#include "pcat/linear_rep.hpp"
#include "pcat/properties.hpp"
#include "pcat/reflection_group.hpp"
#include "pcat/subgroup.hpp"

namespace pcat::cli {

namespace {

  using Json = nlohmann::ordered_json;

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct Bounds {
    std::size_t max_points = 8;
    std::size_t max_word_length = 8;
    std::size_t max_group_order = 100'000;
    std::size_t max_cache = 10'000'000;
  };

  struct BoundFlags {
    std::optional<std::size_t> max_points, max_word_length, max_group_order, max_cache;
    std::string file;
  };

  struct Options {
    std::string out;
    std::uint64_t seed = 1;
    bool deterministic = false;
    bool serial = false;
    BoundFlags bounds;

    std::vector<std::string> gens;
    std::string gen_file;
    std::string category;
    std::vector<std::string> relators;
    std::string relator_file;
    std::string spec_file;
    std::string variant;
    std::string s;
    std::string gamma;
    std::string partition;
    std::string word;
    std::string table;
    std::string dump;
    std::optional<std::size_t> n, k, l, length, word_bound, point_bound, degree;
    std::size_t samples = 1000;
    std::size_t slack = 0;
    bool list = false;
    bool independent_signs = false;
  };

  std::vector<std::string> read_lines(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
      auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line[b] == '#') {
        continue;
      }
      auto e = line.find_last_not_of(" \t\r");
      out.push_back(line.substr(b, e - b + 1));
    }
    return out;
  }

  Json read_json(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw UsageError("cannot read " + path);
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  Bounds resolve_bounds(BoundFlags const& f) {
    Bounds b;
    std::string file = f.file;
    if (file.empty()) {
      if (char const* dir = std::getenv(kBoundsDirVariable)) {
        auto p = std::filesystem::path(dir) / "bounds.json";
        if (std::filesystem::exists(p)) {
          file = p.string();
        }
      }
    }
    if (!file.empty()) {
      auto j = read_json(file);
      auto take = [&](char const* key, std::size_t& field) {
        if (j.contains(key)) {
          field = j.at(key).get<std::size_t>();
        }
      };
      take("max_points", b.max_points);
      take("max_word_length", b.max_word_length);
      take("max_group_order", b.max_group_order);
      take("max_cache", b.max_cache);
    }
    b.max_points = f.max_points.value_or(b.max_points);
    b.max_word_length = f.max_word_length.value_or(b.max_word_length);
    b.max_group_order = f.max_group_order.value_or(b.max_group_order);
    b.max_cache = f.max_cache.value_or(b.max_cache);
    if (b.max_points == 0 || b.max_word_length == 0 || b.max_group_order == 0
        || b.max_cache == 0) {
      throw UsageError("bounds must be positive");
    }
    return b;
  }

  Json bounds_json(Bounds const& b) {
    return Json{{"max_points", b.max_points},
                {"max_word_length", b.max_word_length},
                {"max_group_order", b.max_group_order},
                {"max_cache", b.max_cache}};
  }

  template <typename T>
  Json strings(std::vector<T> const& xs) {
    Json a = Json::array();
    for (auto const& x : xs) {
      a.push_back(x.to_string());
    }
    return a;
  }

  Json letters_json(std::span<const Letter> xs) {
    Json a = Json::array();
    for (auto x : xs) {
      a.push_back(x);
    }
    return a;
  }

  std::size_t need(std::optional<std::size_t> const& v, char const* flag) {
    if (!v) {
      throw UsageError(std::string("missing ") + flag);
    }
    return *v;
  }

  std::vector<Partition> generators(Options const& o) {
    std::vector<std::string> texts = o.gens;
    if (!o.gen_file.empty()) {
      auto more = read_lines(o.gen_file);
      texts.insert(texts.end(), more.begin(), more.end());
    }
    std::vector<Partition> out;
    for (auto const& t : texts) {
      out.push_back(Partition::parse(t));
    }
    return out;
  }

  std::vector<ReducedWord> relator_words(Options const& o) {
    std::vector<std::string> texts = o.relators;
    if (!o.relator_file.empty()) {
      auto more = read_lines(o.relator_file);
      texts.insert(texts.end(), more.begin(), more.end());
    }
    std::vector<ReducedWord> out;
    for (auto const& t : texts) {
      out.push_back(ReducedWord::parse(t));
    }
    return out;
  }

  std::size_t parse_s(std::string const& s) {
    if (s == "inf" || s == "0") {
      return 0;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      try {
        v = std::stoul(s, &used);
      } catch (std::exception const&) {
        used = 0;
      }
    }
    if (used != s.size() || v == 0 || v > 1000) {
      throw UsageError("--s must be an integer in 1..1000 or inf, got \"" + s + "\"");
    }
    return v;
  }

  ReflectionGroupSpec make_spec(Options const& o) {
    if (!o.spec_file.empty()) {
      auto j = read_json(o.spec_file);
      ReflectionGroupSpec spec;
      spec.n = j.at("n").get<std::size_t>();
      for (auto const& r : j.at("relators")) {
        spec.relators.push_back(ReducedWord::parse(r.get<std::string>()));
      }
      spec.note = j.value("note", std::string("from ") + o.spec_file);
      return spec;
    }
    std::size_t n = need(o.n, "--n");
    if (o.variant == "hyperoctahedral" || o.variant == "higher") {
      if (o.s.empty()) {
        throw UsageError("--variant needs --s");
      }
      auto s = parse_s(o.s);
      return o.variant == "higher" ? higher_series_spec(n, s) : hyperoctahedral_series_spec(n, s);
    }
    if (o.variant == "trivial") {
      return trivial_group_spec(n);
    }
    if (!o.variant.empty()) {
      throw UsageError("unknown variant " + o.variant);
    }
    ReflectionGroupSpec spec;
    spec.n = n;
    spec.relators = relator_words(o);
    for (auto const& r : spec.relators) {
      if (r.max_letter() > n) {
        throw UsageError("relator " + r.to_string() + " uses letters beyond n");
      }
    }
    spec.note = "relators given on the command line";
    return spec;
  }

  Json spec_json(ReflectionGroupSpec const& spec) {
    char const* variant = spec.series.variant == SeriesVariant::hyperoctahedral ? "hyperoctahedral"
                          : spec.series.variant == SeriesVariant::higher        ? "higher"
                                                                                : "none";
    Json j{{"n", spec.n}, {"note", spec.note}, {"variant", variant}};
    if (spec.series.variant != SeriesVariant::none) {
      j["s"] = spec.series.s == 0 ? Json("inf") : Json(spec.series.s);
    }
    j["relators"] = strings(spec.relators);
    return j;
  }

  Exec exec_of(Options const& o) {
    return o.serial ? Exec::serial : Exec::parallel;
  }

  struct Outcome {
    Json inputs = Json::object();
    Json result = Json::object();
    int code = ok;
  };

  Category saturate_gens(Options const& o, Bounds const& b, std::vector<Partition> const& gens) {
    return saturate(gens, b.max_points, b.max_cache, exec_of(o));
  }

  Json category_summary(Category const& cat) {
    Json counts = Json::array();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_shape;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      auto const& p = cat.partition(i);
      ++by_shape[{p.upper(), p.lower()}];
    }
    for (auto const& [shape, c] : by_shape) {
      counts.push_back(Json{{"k", shape.first}, {"l", shape.second}, {"count", c}});
    }
    return Json{{"size", cat.size()},
                {"complete", cat.complete()},
                {"rounds", cat.rounds()},
                {"max_points", cat.max_points()},
                {"counts", counts}};
  }

  Outcome do_saturate(Options const& o, Bounds const& b) {
    Outcome r;
    auto gens = generators(o);
    r.inputs["generators"] = strings(gens);
    auto cat = saturate_gens(o, b, gens);
    r.result = category_summary(cat);
    if (o.list) {
      r.result["members"] = strings(cat.sorted());
    }
    r.code = cat.complete() ? ok : bound_exhausted;
    return r;
  }

  Outcome do_contains(Options const& o, Bounds const& b) {
    Outcome r;
    auto gens = generators(o);
    if (o.partition.empty()) {
      throw UsageError("missing --partition");
    }
    auto p = Partition::parse(o.partition);
    r.inputs["generators"] = strings(gens);
    r.inputs["partition"] = p.to_string();
    auto cat = saturate_gens(o, b, gens);
    auto c = contains(cat, p);
    r.result["verdict"] = to_string(c.verdict);
    r.result["derivation"] = c.derivation;
    r.result["certificate"] = c.certificate;
    r.result["category_size"] = cat.size();
    r.result["category_complete"] = cat.complete();
    r.code = c.verdict == Verdict::unknown ? bound_exhausted : ok;
    return r;
  }

  Outcome do_fgroup(Options const& o, Bounds const& b) {
    Outcome r;
    auto gens = generators(o);
    std::size_t n = need(o.n, "--n");
    std::size_t len = o.length.value_or(b.max_word_length);
    r.inputs["generators"] = strings(gens);
    r.inputs["n"] = n;
    r.inputs["length"] = len;
    auto cat = saturate_gens(o, b, gens);
    auto fc = f_group_generators(cat, n, len, exec_of(o));
    Json entries = Json::array();
    for (auto const& e : fc.entries()) {
      entries.push_back(Json{{"word", e.word.to_string()},
                             {"partition", e.partition.to_string()},
                             {"labelling", letters_json(e.labelling)}});
    }
    r.result["category_size"] = cat.size();
    r.result["category_complete"] = cat.complete();
    r.result["labellings_checked"] = fc.labellings_checked();
    r.result["representatives"] = fc.entries().size();
    r.result["elements"] = fc.elements().size();
    r.result["entries"] = entries;
    r.code = cat.complete() ? ok : bound_exhausted;
    return r;
  }

  SubgroupCache subgroup(Options const& o, Bounds const& b, std::size_t n, std::size_t len) {
    auto rel = relator_words(o);
    if (rel.empty()) {
      throw UsageError("missing --relator");
    }
    return closure_generate(rel, n, {len, b.max_cache, o.slack}, exec_of(o));
  }

  Outcome do_cat_from_subgroup(Options const& o, Bounds const& b) {
    Outcome r;
    std::size_t n = need(o.n, "--n");
    std::size_t points = o.point_bound.value_or(b.max_points);
    auto N = subgroup(o, b, n, b.max_word_length);
    r.inputs["n"] = n;
    r.inputs["relators"] = strings(N.generators());
    r.inputs["point_bound"] = points;
    r.inputs["slack"] = o.slack;
    auto sc = category_from_subgroup(N, points, b.max_cache, exec_of(o));
    r.result["closure_complete"] = sc.extended.complete();
    r.result["kernels"] = strings(sc.kernels);
    r.result["seeds"] = sc.seeds;
    r.result["category"] = category_summary(sc.category);
    r.result["added_by_saturation"] = strings(sc.added);
    if (o.list) {
      r.result["members"] = strings(sc.category.sorted());
    }
    r.code = sc.category.complete() && sc.extended.complete() ? ok : bound_exhausted;
    return r;
  }

  Json inclusion_json(InclusionResult const& x) {
    return Json{{"holds", x.holds}, {"checked", x.checked},
                {"counterexamples", strings(x.counterexamples)}};
  }

  Outcome do_roundtrip(Options const& o, Bounds const& b, Json& timing) {
    Outcome r;
    std::size_t n = need(o.n, "--n");
    std::size_t wb = o.word_bound.value_or(b.max_word_length);
    std::size_t pb = o.point_bound.value_or(b.max_points);
    auto t0 = std::chrono::steady_clock::now();
    auto N = subgroup(o, b, n, wb);
    double ms_closure =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.inputs["n"] = n;
    r.inputs["relators"] = strings(N.generators());
    r.inputs["word_bound"] = wb;
    r.inputs["point_bound"] = pb;
    r.inputs["slack"] = o.slack;
    auto rep = roundtrip_check(N, n, wb, pb, exec_of(o));
    r.result["subgroup_complete"] = rep.subgroup_complete;
    r.result["subgroup_representatives"] = rep.subgroup_representatives;
    r.result["category_size"] = rep.category_size;
    r.result["category_complete"] = rep.category_complete;
    r.result["kernel_count"] = rep.kernel_count;
    r.result["saturation_additions"] = rep.saturation_additions;
    r.result["forward"] = inclusion_json(rep.forward);
    r.result["backward"] = inclusion_json(rep.backward);
    timing["closure_ms"] = ms_closure;
    timing["category_ms"] = rep.ms_category;
    timing["fgroup_ms"] = rep.ms_fgroup;
    timing["compare_ms"] = rep.ms_compare;
    if (!rep.forward.holds || !rep.backward.holds) {
      r.code = check_failed;
    } else if (!rep.subgroup_complete || !rep.category_complete) {
      r.code = bound_exhausted;
    }
    return r;
  }

  Outcome do_diag(Options const& o, Bounds const& b) {
    Outcome r;
    auto gens = generators(o);
    std::size_t n = need(o.n, "--n");
    std::size_t len = o.length.value_or(b.max_word_length);
    r.inputs["generators"] = strings(gens);
    r.inputs["n"] = n;
    r.inputs["length"] = len;
    auto cat = saturate_gens(o, b, gens);
    auto spec = diagonal_subgroup(cat, n, len);
    r.result["category_size"] = cat.size();
    r.result["category_complete"] = cat.complete();
    r.result["relator_count"] = spec.relators.size();
    r.result["spec"] = spec_json(spec);
    r.code = cat.complete() ? ok : bound_exhausted;
    return r;
  }

  Outcome do_tpmat(Options const& o) {
    Outcome r;
    if (o.partition.empty()) {
      throw UsageError("missing --partition");
    }
    auto p = Partition::parse(o.partition);
    std::size_t n = need(o.n, "--n");
    r.inputs["partition"] = p.to_string();
    r.inputs["n"] = n;
    auto m = t_matrix(p, n, exec_of(o));
    Json entries = Json::array();
    for (auto const& [row, col] : m.entries) {
      Json j = Json::array(), i = Json::array();
      for (auto v : decode_tuple(row, m.l, n)) {
        j.push_back(v + 1);
      }
      for (auto v : decode_tuple(col, m.k, n)) {
        i.push_back(v + 1);
      }
      entries.push_back(Json::array({j, i}));
    }
    r.result = Json{{"n", n},           {"k", m.k},
                    {"l", m.l},         {"rows", m.rows()},
                    {"cols", m.cols()}, {"nonzeros", m.entries.size()},
                    {"entries", entries}};
    if (!o.dump.empty()) {
      std::ofstream f(o.dump);
      if (!f) {
        throw UsageError("cannot write " + o.dump);
      }
      f << dump(m);
    }
    return r;
  }

  Outcome do_homdim(Options const& o, Bounds const& b) {
    Outcome r;
    std::size_t k = need(o.k, "--k"), l = need(o.l, "--l"), n = need(o.n, "--n");
    r.inputs["k"] = k;
    r.inputs["l"] = l;
    r.inputs["n"] = n;
    HomDimension h;
    if (o.category == "all") {
      r.inputs["category"] = "all";
      h = hom_space_dimension_all(k, l, n);
    } else {
      if (!o.category.empty()) {
        throw UsageError("--category accepts only \"all\"; give generators with --gen");
      }
      auto gens = generators(o);
      r.inputs["generators"] = strings(gens);
      Bounds bb = b;
      bb.max_points = std::max(b.max_points, k + l);
      auto cat = saturate_gens(o, bb, gens);
      h = hom_space_dimension(cat, k, l, n);
    }
    r.result = Json{{"rank", h.rank}, {"spanning", h.spanning}, {"exact", h.exact}};
    r.code = h.exact ? ok : bound_exhausted;
    return r;
  }

  Json even_json(EvenSubgroupReport const& e) {
    Json orders = Json::array();
    for (auto const& x : e.b_orders) {
      orders.push_back(x ? Json(*x) : Json(nullptr));
    }
    Json j{{"group_order", e.group_order ? Json(*e.group_order) : Json(nullptr)},
           {"even_order", e.even_order ? Json(*e.even_order) : Json(nullptr)},
           {"index", e.index ? Json(*e.index) : Json(nullptr)},
           {"b_orders", orders},
           {"b_commute", to_string(e.b_commute)},
           {"commute_evidence", e.commute_evidence},
           {"relators_even", e.relators_even}};
    if (e.series_order_matches) {
      j["series_order_matches"] = *e.series_order_matches;
    }
    return j;
  }

  Outcome do_series(Options const& o, Bounds const& b) {
    Outcome r;
    if (o.variant.empty()) {
      throw UsageError("series needs --variant and --s");
    }
    auto spec = make_spec(o);
    r.inputs["spec"] = spec_json(spec);
    auto en = enumerate_group(spec, b.max_group_order);
    r.result["n"] = spec.n;
    r.result["s"] = spec.series.s == 0 ? Json("inf") : Json(spec.series.s);
    r.result["variant"] = o.variant;
    r.result["order_or_bound"] =
        en.model ? Json(en.model->order())
                 : Json("exceeds " + std::to_string(b.max_group_order));
    auto even = even_subgroup_analysis(spec, b.max_group_order, b.max_word_length);
    r.result["even_subgroup"] = even_json(even);
    Json checks;
    checks["relators_even"] = even.relators_even;
    checks["letter_map_closed"] = relators_letter_map_closed(spec);
    if (en.model && spec.series.variant == SeriesVariant::hyperoctahedral) {
      std::size_t expect = 2;
      for (std::size_t t = 0; t + 1 < spec.n; ++t) {
        expect *= spec.series.s;
      }
      checks["order_formula"] = Json{{"expected", expect}, {"holds", en.model->order() == expect}};
      bool agree = true;
      for (auto const& w : all_reduced_words(spec.n, std::min<std::size_t>(8, b.max_word_length))) {
        bool tc = en.model->evaluate(w) == FiniteGroupModel::identity();
        agree = agree
                && tc == affine_is_identity(affine_series_image(w.letters(), spec.n, spec.series.s));
      }
      checks["affine_model_agrees"] = agree;
      if (en.model->order() != expect || !agree) {
        r.code = check_failed;
      }
    }
    r.result["checks"] = checks;
    if (r.code == ok && !en.model) {
      r.code = bound_exhausted;
    }
    return r;
  }

  Outcome do_even(Options const& o, Bounds const& b) {
    Outcome r;
    auto spec = make_spec(o);
    r.inputs["spec"] = spec_json(spec);
    auto e = even_subgroup_analysis(spec, b.max_group_order, b.max_word_length);
    r.result = even_json(e);
    if (e.series_order_matches && !*e.series_order_matches) {
      r.code = check_failed;
    } else if (e.b_commute == Verdict::unknown) {
      r.code = bound_exhausted;
    }
    return r;
  }

  Outcome do_semidirect(Options const& o, Bounds const& b) {
    Outcome r;
    Options so = o;
    if (o.gamma == "trivial") {
      so.variant = "trivial";
    } else if (!o.gamma.empty()) {
      throw UsageError("--gamma accepts only \"trivial\"");
    }
    auto spec = make_spec(so);
    r.inputs["spec"] = spec_json(spec);
    auto en = enumerate_group(spec, b.max_group_order);
    if (!en.model) {
      r.result["error"] = "group exceeds " + std::to_string(b.max_group_order) + " elements";
      r.code = bound_exhausted;
      return r;
    }
    auto rep = semidirect_matrix_check(spec, *en.model, spec.n);
    r.result = Json{{"n", rep.n},
                    {"gamma_order", rep.gamma_order},
                    {"dimension", rep.dimension},
                    {"relators_invariant", rep.relators_invariant},
                    {"unitary", rep.unitary},
                    {"comultiplication_formula", rep.comultiplication_formula},
                    {"coassociative", rep.coassociative},
                    {"multiplicative", rep.multiplicative},
                    {"commutative", rep.commutative},
                    {"passed", rep.all()}};
    r.code = rep.all() ? ok : check_failed;
    return r;
  }

  Outcome do_non_easy(Options const& o) {
    Outcome r;
    std::size_t n = need(o.n, "--n");
    if (n < 3) {
      throw UsageError("non-easy needs --n >= 3");
    }
    r.inputs["n"] = n;
    r.inputs["samples"] = o.samples;
    auto rep = non_easy_example_check(n, o.samples, o.seed);
    r.result = Json{{"n", rep.n},
                    {"generated_order", rep.generated_order},
                    {"expected_order", rep.expected_order},
                    {"surjective", rep.surjective},
                    {"invariance_exact", rep.invariance_exact},
                    {"invariance_samples", rep.invariance_samples},
                    {"invariance_failures", rep.invariance_failures},
                    {"kernel_words", rep.kernel_words},
                    {"witness_found", rep.witness_found}};
    if (rep.witness_found) {
      r.result["witness"] = rep.witness.to_string();
      r.result["phi"] = letters_json(rep.phi);
      r.result["witness_image"] = rep.witness_image.to_string();
      r.result["pi_witness"] = rep.pi_witness;
      r.result["pi_image"] = rep.pi_image;
    }
    r.result["passed"] = rep.passed();
    r.code = rep.passed() ? ok : check_failed;
    return r;
  }

  Outcome do_kernel(Options const& o, Bounds const& b) {
    Outcome r;
    if (o.word.empty()) {
      throw UsageError("missing --word");
    }
    auto spec = make_spec(o);
    auto w = MonoidWord::parse(o.word);
    r.inputs["word"] = w.to_string();
    r.inputs["spec"] = spec_json(spec);
    KernelOracle oracle(spec, b.max_group_order, b.max_word_length);
    auto d = oracle.decide(w);
    r.result = Json{{"verdict", to_string(d.verdict)},
                    {"method", d.method},
                    {"evidence", d.evidence}};
    r.code = d.verdict == Verdict::unknown ? bound_exhausted : ok;
    return r;
  }

  Outcome do_balanced(Options const& o) {
    Outcome r;
    if (o.word.empty()) {
      throw UsageError("missing --word");
    }
    auto w = MonoidWord::parse(o.word);
    std::size_t n = o.n.value_or(w.max_letter());
    r.inputs["word"] = w.to_string();
    r.inputs["n"] = n;
    r.result["balanced"] = is_balanced(w, n);
    return r;
  }

  Outcome do_moment_check(Options const& o, Bounds const& b) {
    Outcome r;
    std::optional<MomentTable> table;
    if (o.independent_signs) {
      table = MomentTable::independent_signs(need(o.n, "--n"), need(o.degree, "--degree"));
      r.inputs["table"] = "independent signs";
    } else if (!o.table.empty()) {
      try {
        table = MomentTable::from_json(read_json(o.table));
      } catch (nlohmann::json::exception const& e) {
        throw UsageError(o.table + ": " + e.what());
      }
      r.inputs["table"] = o.table;
    } else {
      throw UsageError("moment-check needs --table or --independent-signs");
    }
    Options so = o;
    if (!so.n) {
      so.n = table->letters();
    }
    if (so.variant.empty() && so.relators.empty() && so.relator_file.empty()
        && so.spec_file.empty()) {
      so.variant = "hyperoctahedral";
      so.s = "2";
    }
    auto spec = make_spec(so);
    r.inputs["spec"] = spec_json(spec);
    r.inputs["n"] = table->letters();
    r.inputs["degree"] = table->degree();
    (void)b;
    auto rep = invariance_check(*table, spec);
    Json violations = Json::array();
    for (auto const& v : rep.violations) {
      violations.push_back(Json{{"condition", std::string(1, v.condition)},
                                {"word", v.word.to_string()},
                                {"detail", v.detail}});
    }
    r.result = Json{{"note", kFactorizationNote},
                    {"words_checked", rep.words_checked},
                    {"kernel_words", rep.kernel_words},
                    {"undecided", strings(rep.undecided)},
                    {"violations", violations},
                    {"passed", rep.passed()}};
    if (!rep.violations.empty()) {
      r.code = check_failed;
    } else if (!rep.undecided.empty()) {
      r.code = bound_exhausted;
    }
    return r;
  }

  Outcome do_selftest(Options const& o) {
    Outcome r;
    auto results = run_property_suites(o.seed, exec_of(o));
    Json suites = Json::array();
    bool all = true;
    for (auto const& x : results) {
      suites.push_back(Json{{"module", x.module},
                            {"name", x.name},
                            {"cases", x.cases},
                            {"failures", x.failures},
                            {"first_failure", x.first_failure}});
      all = all && x.passed();
    }
    r.result["suites"] = suites;
    r.result["passed"] = all;
    r.code = all ? ok : check_failed;
    return r;
  }

  void add_bounds(CLI::App* c, BoundFlags& f) {
    c->add_option("--max-points", f.max_points, "largest partition size kept");
    c->add_option("--max-word-length", f.max_word_length, "longest word kept");
    c->add_option("--max-group-order", f.max_group_order, "coset enumeration bound");
    c->add_option("--max-cache", f.max_cache, "largest cache size");
    c->add_option("--bounds", f.file, "JSON file with default bounds");
  }

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Categories of partitions and strongly symmetric reflection groups", "pcat"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_option("--seed", o.seed, "seed for randomized checks");
  app.add_flag("--deterministic", o.deterministic, "omit the timing field");
  app.add_flag("--serial", o.serial, "run kernels without OpenMP");
  add_bounds(&app, o.bounds);

  auto gens = [&](CLI::App* c) {
    c->add_option("--gen", o.gens, "generating partition, e.g. aabaab| or ab|ab");
    c->add_option("--gen-file", o.gen_file, "file with one partition per line");
  };
  auto rels = [&](CLI::App* c) {
    c->add_option("--relator", o.relators, "relator word, e.g. \"1 2 1 2\"");
    c->add_option("--relator-file", o.relator_file, "file with one word per line");
  };
  auto spec = [&](CLI::App* c) {
    rels(c);
    c->add_option("--n", o.n, "number of generators");
    c->add_option("--variant", o.variant, "hyperoctahedral, higher or trivial");
    c->add_option("--s", o.s, "series parameter, a positive integer or inf");
    c->add_option("--spec-file", o.spec_file, "JSON {n, relators, note}");
  };

  std::map<std::string, CLI::App*> verbs;
  auto verb = [&](char const* name, char const* help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    verbs[name] = c;
    return c;
  };

  auto* c = verb("saturate", "saturate a category from generators");
  gens(c);
  c->add_flag("--list", o.list, "list every member");

  c = verb("contains", "decide membership of a partition");
  gens(c);
  c->add_option("--partition", o.partition, "partition to look for")->required();

  c = verb("fgroup", "words of the one-line partitions of a category");
  gens(c);
  c->add_option("--n", o.n, "number of letters")->required();
  c->add_option("--length", o.length, "longest word");

  c = verb("cat-from-subgroup", "category of a normal subgroup");
  rels(c);
  c->add_option("--n", o.n, "number of letters")->required();
  c->add_option("--point-bound", o.point_bound, "largest partition size");
  c->add_option("--slack", o.slack, "extra length allowed for intermediate words");
  c->add_flag("--list", o.list, "list every member");

  c = verb("roundtrip", "compare a subgroup with the F-group of its category");
  rels(c);
  c->add_option("--n", o.n, "number of letters")->required();
  c->add_option("--word-bound", o.word_bound, "longest word compared");
  c->add_option("--point-bound", o.point_bound, "largest partition size");
  c->add_option("--slack", o.slack, "extra length allowed for intermediate words");

  c = verb("diag", "relators of the diagonal subgroup");
  gens(c);
  c->add_option("--n", o.n, "number of letters")->required();
  c->add_option("--length", o.length, "longest relator");

  c = verb("tpmat", "the matrix T_p");
  c->add_option("--partition", o.partition, "partition")->required();
  c->add_option("--n", o.n, "dimension")->required();
  c->add_option("--dump", o.dump, "also write the text dump to this file");

  c = verb("homdim", "dimension of span{T_p}");
  gens(c);
  c->add_option("--category", o.category, "\"all\" for every partition");
  c->add_option("--k", o.k, "upper points")->required();
  c->add_option("--l", o.l, "lower points")->required();
  c->add_option("--n", o.n, "dimension")->required();

  c = verb("series", "group of a hyperoctahedral or higher series member");
  spec(c);

  c = verb("even-analysis", "the even subgroup generated by b_i = a_n a_i");
  spec(c);

  c = verb("semidirect-check", "identities of the semi-direct product model");
  spec(c);
  c->add_option("--gamma", o.gamma, "\"trivial\" for the trivial group");

  c = verb("non-easy", "the non-easy S_n-invariant quotient");
  c->add_option("--n", o.n, "number of letters")->required();
  c->add_option("--samples", o.samples, "random invariance samples");

  c = verb("kernel", "is a monoid word trivial in the group");
  spec(c);
  c->add_option("--word", o.word, "word, e.g. \"1 2 1 2\"")->required();

  c = verb("balanced", "is a monoid word balanced");
  c->add_option("--word", o.word, "word")->required();
  c->add_option("--n", o.n, "number of letters");

  c = verb("moment-check", "invariance conditions on a moment table");
  spec(c);
  c->add_option("--table", o.table, "JSON moment table");
  c->add_flag("--independent-signs", o.independent_signs, "use independent symmetric signs");
  c->add_option("--degree", o.degree, "degree for --independent-signs");

  verb("selftest", "run every property suite");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return ok;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (CLI::ParseError const& e) {
    err << "pcat: " << e.what() << '\n';
    return usage_error;
  }

  std::string name;
  for (auto const& [k, v] : verbs) {
    if (v->parsed()) {
      name = k;
    }
  }

  Json report;
  report["schema"] = kReportSchema;
  report["command"] = name;
  Json timing = Json::object();
  Outcome outcome;
  try {
    auto bounds = resolve_bounds(o.bounds);
    auto t0 = std::chrono::steady_clock::now();
    try {
      if (name == "saturate") {
        outcome = do_saturate(o, bounds);
      } else if (name == "contains") {
        outcome = do_contains(o, bounds);
      } else if (name == "fgroup") {
        outcome = do_fgroup(o, bounds);
      } else if (name == "cat-from-subgroup") {
        outcome = do_cat_from_subgroup(o, bounds);
      } else if (name == "roundtrip") {
        outcome = do_roundtrip(o, bounds, timing);
      } else if (name == "diag") {
        outcome = do_diag(o, bounds);
      } else if (name == "tpmat") {
        outcome = do_tpmat(o);
      } else if (name == "homdim") {
        outcome = do_homdim(o, bounds);
      } else if (name == "series") {
        outcome = do_series(o, bounds);
      } else if (name == "even-analysis") {
        outcome = do_even(o, bounds);
      } else if (name == "semidirect-check") {
        outcome = do_semidirect(o, bounds);
      } else if (name == "non-easy") {
        outcome = do_non_easy(o);
      } else if (name == "kernel") {
        outcome = do_kernel(o, bounds);
      } else if (name == "balanced") {
        outcome = do_balanced(o);
      } else if (name == "moment-check") {
        outcome = do_moment_check(o, bounds);
      } else {
        outcome = do_selftest(o);
      }
    } catch (BoundExceeded const& e) {
      outcome.result["error"] = e.what();
      outcome.code = bound_exhausted;
    }
    timing["total_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report["inputs"] = outcome.inputs;
    report["bounds"] = bounds_json(bounds);
  } catch (UsageError const& e) {
    err << "pcat: " << e.what() << '\n';
    return usage_error;
  } catch (std::invalid_argument const& e) {
    err << "pcat: " << e.what() << '\n';
    return usage_error;
  } catch (std::out_of_range const& e) {
    err << "pcat: " << e.what() << '\n';
    return usage_error;
  }
  report["seed"] = o.seed;
  report["result"] = outcome.result;
  report["exit_code"] = outcome.code;
  if (!o.deterministic) {
    report["timing"] = timing;
  }

  auto text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "pcat: cannot write " << o.out << '\n';
      return usage_error;
    }
    f << text;
  }
  return outcome.code;
}

}  // namespace pcat::cli
