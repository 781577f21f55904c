// The algebra of functions S_n -> Z[Gamma] with pointwise product. Basis
// element (s, g) is the function that is g at s and 0 elsewhere; tensor
// powers are functions on S_n^k with values in Z[Gamma^k].

#include <array>
#include <map>

#include "pcat/reflection_group.hpp"

namespace pcat {

namespace {

  using El = FiniteGroupModel::Element;

  template <std::size_t K>
  using Key = std::array<std::uint32_t, 2 * K>;  // (s_1..s_K, g_1..g_K)

  template <std::size_t K>
  using Vec = std::map<Key<K>, long>;

  template <std::size_t K>
  void add(Vec<K>& v, Key<K> const& k, long c) {
    if (c == 0) {
      return;
    }
    auto it = v.try_emplace(k, 0).first;
    it->second += c;
    if (it->second == 0) {
      v.erase(it);
    }
  }

  class Model {
   public:
    Model(FiniteGroupModel const& gamma, std::size_t n)
        : gamma_(gamma), n_(n), perms_(symmetric_group(n)) {
      for (std::size_t i = 0; i < perms_.size(); ++i) {
        index_.emplace(perms_[i].images(), static_cast<std::uint32_t>(i));
      }
      alpha_.resize(perms_.size());
      for (std::size_t p = 0; p < perms_.size(); ++p) {
        std::vector<Letter> sigma;
        for (std::size_t x = 0; x < n; ++x) {
          sigma.push_back(static_cast<Letter>(perms_[p](x) + 1));
        }
        for (El g = 0; g < gamma.order(); ++g) {
          alpha_[p].push_back(gamma.evaluate(permute_letters(sigma, gamma.representative(g))));
        }
      }
    }

    std::size_t perm_count() const { return perms_.size(); }
    std::uint32_t compose(std::uint32_t s, std::uint32_t t) const {  // s o t
      std::vector<std::uint8_t> img(n_);
      for (std::size_t x = 0; x < n_; ++x) {
        img[x] = static_cast<std::uint8_t>(perms_[s](perms_[t](x)));
      }
      return index_.at(img);
    }
    std::uint32_t inverse(std::uint32_t s) const {
      return index_.at(perms_[s].inverse().images());
    }
    std::size_t apply(std::uint32_t s, std::size_t x) const { return perms_[s](x); }
    El alpha(std::uint32_t s, El g) const { return alpha_[s][g]; }

    Vec<2> delta(Key<1> const& b) const {
      Vec<2> out;
      auto [rho, g] = b;
      for (std::uint32_t s = 0; s < perm_count(); ++s) {
        std::uint32_t si = inverse(s);
        std::uint32_t t = compose(si, rho);
        add<2>(out, {s, t, g, alpha(si, g)}, 1);
      }
      return out;
    }

    Vec<2> delta(Vec<1> const& v) const {
      Vec<2> out;
      for (auto const& [k, c] : v) {
        for (auto const& [k2, c2] : delta(k)) {
          add<2>(out, k2, c * c2);
        }
      }
      return out;
    }

    template <std::size_t K>
    Vec<K> product(Vec<K> const& x, Vec<K> const& y) const {
      Vec<K> out;
      for (auto const& [a, ca] : x) {
        for (auto const& [b, cb] : y) {
          if (!std::equal(a.begin(), a.begin() + K, b.begin())) {
            continue;
          }
          Key<K> k = a;
          for (std::size_t t = K; t < 2 * K; ++t) {
            k[t] = gamma_.multiply(a[t], b[t]);
          }
          add<K>(out, k, ca * cb);
        }
      }
      return out;
    }

    Vec<1> star(Vec<1> const& x) const {
      Vec<1> out;
      for (auto const& [k, c] : x) {
        add<1>(out, {k[0], gamma_.inverse(k[1])}, c);
      }
      return out;
    }

   private:
    FiniteGroupModel const& gamma_;
    std::size_t n_;
    std::vector<Permutation> perms_;
    std::map<std::vector<std::uint8_t>, std::uint32_t> index_;
    std::vector<std::vector<El>> alpha_;
  };

  Vec<2> tensor(Vec<1> const& x, Vec<1> const& y) {
    Vec<2> out;
    for (auto const& [a, ca] : x) {
      for (auto const& [b, cb] : y) {
        add<2>(out, {a[0], b[0], a[1], b[1]}, ca * cb);
      }
    }
    return out;
  }

}  // namespace

SemidirectReport semidirect_matrix_check(ReflectionGroupSpec const& spec,
                                         FiniteGroupModel const& gamma, std::size_t n) {
  if (gamma.generators() != n || spec.n != n) {
    throw std::invalid_argument("group model and spec must have n generators");
  }
  for (auto const& r : spec.relators) {
    if (gamma.evaluate(r) != FiniteGroupModel::identity()) {
      throw std::invalid_argument("relator " + r.to_string() + " is not trivial in the model");
    }
  }
  SemidirectReport rep;
  rep.n = n;
  rep.gamma_order = gamma.order();
  rep.relators_invariant = true;
  for (auto const& sp : symmetric_group(n)) {
    std::vector<Letter> sigma;
    for (std::size_t x = 0; x < n; ++x) {
      sigma.push_back(static_cast<Letter>(sp(x) + 1));
    }
    for (auto const& r : spec.relators) {
      if (gamma.evaluate(permute_letters(sigma, r)) != FiniteGroupModel::identity()) {
        rep.relators_invariant = false;
      }
    }
  }
  if (!rep.relators_invariant) {
    throw std::invalid_argument("S_" + std::to_string(n)
                                + " does not preserve the relators of " + spec.note);
  }
  Model m(gamma, n);
  auto const np = static_cast<std::uint32_t>(m.perm_count());
  rep.dimension = np * gamma.order();

  std::vector<El> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = gamma.evaluate(std::vector<Letter>{static_cast<Letter>(i + 1)});
  }
  // w_ij(s) = g_i when s(j) = i
  std::vector<std::vector<Vec<1>>> w(n, std::vector<Vec<1>>(n));
  for (std::uint32_t s = 0; s < np; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t i = m.apply(s, j);
      add<1>(w[i][j], {s, g[i]}, 1);
    }
  }
  Vec<1> one;
  for (std::uint32_t s = 0; s < np; ++s) {
    add<1>(one, {s, FiniteGroupModel::identity()}, 1);
  }

  rep.unitary = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec<1> ww, ws;
      for (std::size_t k = 0; k < n; ++k) {
        for (auto const& [key, c] : m.product<1>(w[i][k], m.star(w[j][k]))) {
          add<1>(ww, key, c);
        }
        for (auto const& [key, c] : m.product<1>(m.star(w[k][i]), w[k][j])) {
          add<1>(ws, key, c);
        }
      }
      Vec<1> expect = i == j ? one : Vec<1>{};
      rep.unitary = rep.unitary && ww == expect && ws == expect;
    }
  }

  rep.comultiplication_formula = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec<2> rhs;
      for (std::size_t k = 0; k < n; ++k) {
        for (auto const& [key, c] : tensor(w[i][k], w[k][j])) {
          add<2>(rhs, key, c);
        }
      }
      rep.comultiplication_formula = rep.comultiplication_formula && m.delta(w[i][j]) == rhs;
    }
  }

  std::vector<Key<1>> basis;
  for (std::uint32_t s = 0; s < np; ++s) {
    for (El h = 0; h < gamma.order(); ++h) {
      basis.push_back({s, h});
    }
  }
  rep.coassociative = true;
  for (auto const& b : basis) {
    Vec<3> left, right;
    for (auto const& [k, c] : m.delta(b)) {
      for (auto const& [k1, c1] : m.delta(Key<1>{k[0], k[2]})) {
        add<3>(left, {k1[0], k1[1], k[1], k1[2], k1[3], k[3]}, c * c1);
      }
      for (auto const& [k2, c2] : m.delta(Key<1>{k[1], k[3]})) {
        add<3>(right, {k[0], k2[0], k2[1], k[2], k2[2], k2[3]}, c * c2);
      }
    }
    if (left != right) {
      rep.coassociative = false;
      break;
    }
  }

  rep.multiplicative = true;
  rep.commutative = true;
  for (std::size_t a = 0; a < basis.size() && rep.multiplicative; ++a) {
    Vec<1> x{{basis[a], 1}};
    auto dx = m.delta(basis[a]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Vec<1> y{{basis[b], 1}};
      auto xy = m.product<1>(x, y);
      if (xy != m.product<1>(y, x)) {
        rep.commutative = false;
      }
      if (m.delta(xy) != m.product<2>(dx, m.delta(basis[b]))) {
        rep.multiplicative = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace pcat
