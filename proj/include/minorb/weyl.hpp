// Weyl group elements as permutations of the root set.
//
// An element w carries its permutation of root indices plus a reduced word
// [i_0, i_1, ..., i_k] meaning w = s_{i_0} s_{i_1} ... s_{i_k}; the RIGHTMOST
// letter acts first on roots and weights. Length and the tau-invariants
//   tau_R(w) = {alpha in Pi : w(alpha) > 0},
//   tau_L(w) = {alpha in Pi : w^{-1}(alpha) > 0}
// are read off the permutation directly.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include "minorb/rootsys.hpp"

namespace minorb {

struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoTrivalentNode : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr unsigned long long kDefaultWeylBound = 51840;   // |W(E6)|
inline constexpr unsigned long long kMaxWeylBound = 2903040;     // |W(E7)|, opt-in ceiling

using Perm = std::vector<uint16_t>;

struct WeylElement {
  Perm perm;
  std::vector<int> word;

  bool operator==(const WeylElement& o) const { return perm == o.perm; }
};

inline WeylElement weyl_identity(const RootSystem& rs) {
  WeylElement e;
  e.perm.resize(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r) e.perm[r] = static_cast<uint16_t>(r);
  return e;
}

inline WeylElement simple_reflection(const RootSystem& rs, int node) {
  WeylElement s;
  const auto& p = rs.simple_perm(node);
  s.perm.assign(p.begin(), p.end());
  s.word = {node};
  return s;
}

inline Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (size_t r = 0; r < p.size(); ++r) inv[p[r]] = static_cast<uint16_t>(r);
  return inv;
}

inline int weyl_length(const RootSystem& rs, const WeylElement& w) {
  int l = 0;
  for (int r = 0; r < rs.num_positive(); ++r)
    if (!rs.is_positive_root(w.perm[r])) ++l;
  return l;
}

// Canonical reduced word recovered from the permutation: repeatedly strip the
// smallest generator that shortens the element from the right.
inline std::vector<int> reduced_word_of(const RootSystem& rs, Perm perm) {
  std::vector<int> rev;
  auto is_identity = [&] {
    for (size_t r = 0; r < perm.size(); ++r)
      if (perm[r] != r) return false;
    return true;
  };
  while (!is_identity()) {
    int pick = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!rs.is_positive_root(perm[rs.simple_root_index(i)])) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("reduced_word_of: no descent on non-identity");
    // perm <- perm * s_pick
    const auto& sp = rs.simple_perm(pick);
    Perm next(perm.size());
    for (size_t r = 0; r < perm.size(); ++r) next[r] = perm[sp[r]];
    perm = std::move(next);
    rev.push_back(pick);
  }
  return {rev.rbegin(), rev.rend()};
}

inline WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  c.perm.resize(a.perm.size());
  for (size_t r = 0; r < a.perm.size(); ++r) c.perm[r] = a.perm[b.perm[r]];
  c.word = reduced_word_of(rs, c.perm);
  return c;
}

inline WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  WeylElement v;
  v.perm = inverse_perm(w.perm);
  v.word.assign(w.word.rbegin(), w.word.rend());
  (void)rs;
  return v;
}

// Reflection in an arbitrary root, via its action on the root set.
inline WeylElement reflection(const RootSystem& rs, int root_idx) {
  if (root_idx < 0 || root_idx >= rs.num_roots()) throw NotARoot("root index out of range");
  WeylElement s;
  s.perm.resize(rs.num_roots());
  for (int r = 0; r < rs.num_roots(); ++r)
    s.perm[r] = static_cast<uint16_t>(rs.reflect_root(r, root_idx));
  s.word = reduced_word_of(rs, s.perm);
  return s;
}
inline WeylElement reflection(const RootSystem& rs, const RootCoords& alpha) {
  return reflection(rs, rs.root_index(alpha));
}

inline int apply_root(const WeylElement& w, int root_idx) { return w.perm[root_idx]; }

// Linear action on a weight, by folding the word right to left.
inline Weight apply_weight(const RootSystem& rs, const WeylElement& w, Weight lam) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    lam = rs.reflect_weight(lam, *it);
  return lam;
}

// Dot action w . lambda = w(lambda + rho) - rho.
inline Weight dot(const RootSystem& rs, const WeylElement& w, const Weight& lam) {
  return apply_weight(rs, w, lam + rs.rho()) - rs.rho();
}

inline std::set<int> tau_R(const RootSystem& rs, const WeylElement& w) {
  std::set<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.is_positive_root(w.perm[rs.simple_root_index(i)])) out.insert(i);
  return out;
}

inline std::set<int> tau_L(const RootSystem& rs, const WeylElement& w) {
  std::set<int> out;
  Perm inv = inverse_perm(w.perm);
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.is_positive_root(inv[rs.simple_root_index(i)])) out.insert(i);
  return out;
}

// The unique node with three diagram neighbors (types D and E).
inline int trivalent_node(const RootSystem& rs) {
  int found = -1;
  for (int i = 0; i < rs.rank(); ++i) {
    if (rs.node_neighbors(i).size() == 3) {
      if (found >= 0) throw std::logic_error("multiple trivalent nodes");
      found = i;
    }
  }
  if (found < 0)
    throw NoTrivalentNode("no trivalent node in the Dynkin diagram of " +
                          type_name(rs.type()));
  return found;
}

// w_alpha = s_{alpha_n} ... s_{alpha_1} s_{alpha_0} along the unique shortest
// diagram path from the trivalent node alpha_0 to alpha, with s_{alpha_0}
// applied first.
inline std::map<int, WeylElement> min_cell(const RootSystem& rs) {
  int a0 = trivalent_node(rs);
  int n = rs.rank();
  std::vector<int> parent(n, -1), dist(n, -1);
  std::vector<int> queue{a0};
  dist[a0] = 0;
  for (size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int v : rs.node_neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
  }
  std::map<int, WeylElement> cell;
  for (int a = 0; a < n; ++a) {
    std::vector<int> path;  // [alpha, ..., alpha_0]
    for (int u = a; u >= 0; u = parent[u]) path.push_back(u);
    WeylElement v = weyl_identity(rs);
    for (int node : path) v = compose(rs, v, simple_reflection(rs, node));
    cell.emplace(a, v);
  }
  return cell;
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Full enumeration, BFS by length with lexicographically ordered words.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, unsigned long long bound = kDefaultWeylBound)
      : rs_(&rs) {
    unsigned long long order = weyl_order(rs.type());
    if (bound > kMaxWeylBound) bound = kMaxWeylBound;
    if (order > bound)
      throw GroupTooLarge("|W(" + type_name(rs.type()) + ")| = " + std::to_string(order) +
                          " exceeds the enumeration bound " + std::to_string(bound));
    elems_.push_back(weyl_identity(rs));
    index_.emplace(elems_[0].perm, 0);
    for (size_t head = 0; head < elems_.size(); ++head) {
      // copy: elems_ may reallocate while we append
      WeylElement w = elems_[head];
      for (int i = 0; i < rs.rank(); ++i) {
        if (!rs.is_positive_root(w.perm[rs.simple_root_index(i)])) continue;  // shorter
        WeylElement c;
        c.perm.resize(w.perm.size());
        const auto& sp = rs.simple_perm(i);
        for (size_t r = 0; r < w.perm.size(); ++r) c.perm[r] = w.perm[sp[r]];
        auto [it, fresh] = index_.emplace(c.perm, static_cast<int>(elems_.size()));
        if (fresh) {
          c.word = w.word;
          c.word.push_back(i);
          elems_.push_back(std::move(c));
        }
      }
    }
    if (elems_.size() != order) throw std::logic_error("Weyl enumeration miscounted");
    right_mult_.assign(elems_.size(), std::vector<int>(rs.rank()));
    for (size_t e = 0; e < elems_.size(); ++e)
      for (int i = 0; i < rs.rank(); ++i) {
        Perm p(elems_[e].perm.size());
        const auto& sp = rs.simple_perm(i);
        for (size_t r = 0; r < p.size(); ++r) p[r] = elems_[e].perm[sp[r]];
        right_mult_[e][i] = index_.at(p);
      }
  }

  const RootSystem& root_system() const { return *rs_; }
  size_t size() const { return elems_.size(); }
  const WeylElement& element(int i) const { return elems_[i]; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  int index_of(const Perm& p) const { return index_.at(p); }
  int index_of(const WeylElement& w) const { return index_.at(w.perm); }
  // index of w * s_i
  int right_mult(int idx, int node) const { return right_mult_[idx][node]; }

 private:
  const RootSystem* rs_;
  std::vector<WeylElement> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<std::vector<int>> right_mult_;
};

// Unique dominant representative of the linear W-orbit of v.
inline Weight dominant_representative(const RootSystem& rs, Weight v) {
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    v = rs.reflect_weight(v, neg);
  }
}

// m_lambda = m_mu iff lambda + rho and mu + rho lie in one linear W-orbit.
inline bool same_central_character(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  return dominant_representative(rs, lam + rs.rho()) ==
         dominant_representative(rs, mu + rs.rho());
}

struct CentralCharacter {
  Weight rep;  // canonical representative, as a weight (dot-orbit base point)

  bool operator==(const CentralCharacter& o) const { return rep == o.rep; }
  bool operator<(const CentralCharacter& o) const { return rep < o.rep; }
};

// Canonical representative of the dot orbit W . lambda: the rho-dominant point
// when lambda is integral, otherwise the lexicographically minimal orbit
// point. The latter walks the full orbit and is gated by the group bound.
inline CentralCharacter central_character(const RootSystem& rs, const Weight& lam,
                                          unsigned long long bound = kDefaultWeylBound) {
  Weight shifted = lam + rs.rho();
  if (rs.is_integral(lam))
    return CentralCharacter{dominant_representative(rs, shifted) - rs.rho()};
  if (bound > kMaxWeylBound) bound = kMaxWeylBound;
  if (weyl_order(rs.type()) > bound)
    throw GroupTooLarge("orbit search in W(" + type_name(rs.type()) +
                        ") exceeds the configured bound");
  std::set<Weight> orbit{shifted};
  std::vector<Weight> queue{shifted};
  for (size_t h = 0; h < queue.size(); ++h) {
    Weight w = queue[h];
    for (int i = 0; i < rs.rank(); ++i) {
      Weight r = rs.reflect_weight(w, i);
      if (orbit.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return CentralCharacter{*orbit.begin() - rs.rho()};
}

// W_lambda = {e} iff no root pairing of lambda + rho vanishes (the stabilizer
// of a point is generated by the reflections it contains).
inline bool stabilizer_is_trivial(const RootSystem& rs, const Weight& lam) {
  return rs.singular_set(lam).empty();
}

}  // namespace minorb
