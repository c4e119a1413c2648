// The zigzag algebra A(Gamma) of a finite graph, as an explicit
// structure-constant algebra.
//
// Basis: idempotents pi_v and socle elements pi0_v per vertex, arrows
// phi_{u>v} per ordered adjacent pair (a morphism from the u-projective to
// the v-projective). Products are written right-to-left: in x*y the right
// factor acts first, so phi_{u>v} is left-composable with phi_{v>w}.
// Multiplication table:
//
//   pi_a * pi_b     = [a=b] pi_a
//   pi_a * pi0_b    = pi0_b * pi_a = [a=b] pi0_b
//   pi_a * phi_{b>g}= [a=g] phi_{b>g},   phi_{b>g} * pi_a = [a=b] phi_{b>g}
//   phi_{g>t} * phi_{a>b} = [a=t][b=g] c_{ab} pi0_a      (c = 1 canonically)
//   pi0 * pi0 = pi0 * phi = phi * pi0 = 0
//
// dim A(Gamma) = 2|V| + 2|E|; on a tree with r vertices that is 4r - 2. The
// span of {pi0, phi} is the radical, with square span{pi0} and cube zero.

#pragma once

#include <map>
#include <random>

#include "minorb/graph.hpp"
#include "minorb/rat.hpp"
#include "minorb/ratmat.hpp"

namespace minorb {

struct EmptyGraph : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ZKind { Pi, Pi0, Phi };

struct ZBasisElem {
  ZKind kind;
  int u = 0;  // vertex; for Phi the source
  int v = 0;  // for Phi the target, else == u
};

inline std::string zlabel(const ZBasisElem& b) {
  switch (b.kind) {
    case ZKind::Pi: return "pi:" + std::to_string(b.u);
    case ZKind::Pi0: return "pi0:" + std::to_string(b.u);
    case ZKind::Phi: return "phi:" + std::to_string(b.u) + ">" + std::to_string(b.v);
  }
  return "?";
}

struct ZTerm {
  Rat coeff{0};
  int idx = -1;  // -1 encodes zero

  bool is_zero() const { return idx < 0 || coeff == 0; }
};

// Elements in general position: sparse rational combinations of the basis.
using ZElement = std::map<int, Rat>;

class ZigzagAlgebra {
 public:
  // Scalars c must contain a nonzero rational for every ordered adjacent
  // pair; the canonical algebra uses 1 everywhere.
  static ZigzagAlgebra build(const Graph& g,
                             const std::map<std::pair<int, int>, Rat>* scalars = nullptr) {
    if (g.n < 1) throw EmptyGraph("zigzag algebra needs at least one vertex");
    ZigzagAlgebra a;
    a.graph_ = g;
    for (int v = 0; v < g.n; ++v) a.basis_.push_back({ZKind::Pi, v, v});
    for (int v = 0; v < g.n; ++v) a.basis_.push_back({ZKind::Pi0, v, v});
    for (const auto& [u, v] : g.edges) {
      a.basis_.push_back({ZKind::Phi, u, v});
      a.basis_.push_back({ZKind::Phi, v, u});
    }
    for (int i = 0; i < a.dim(); ++i) a.index_[key(a.basis_[i])] = i;

    auto c_of = [&](int alpha, int beta) -> Rat {
      if (!scalars) return Rat(1);
      auto it = scalars->find({alpha, beta});
      if (it == scalars->end() || it->second == 0)
        throw std::invalid_argument("missing/zero zigzag scalar");
      return it->second;
    };

    int d = a.dim();
    a.table_.assign(d, std::vector<ZTerm>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const ZBasisElem& x = a.basis_[i];  // left factor
        const ZBasisElem& y = a.basis_[j];  // right factor, acts first
        ZTerm t;
        if (x.kind == ZKind::Pi && y.kind == ZKind::Pi) {
          if (x.u == y.u) t = {Rat(1), i};
        } else if (x.kind == ZKind::Pi && y.kind == ZKind::Pi0) {
          if (x.u == y.u) t = {Rat(1), j};
        } else if (x.kind == ZKind::Pi0 && y.kind == ZKind::Pi) {
          if (x.u == y.u) t = {Rat(1), i};
        } else if (x.kind == ZKind::Pi && y.kind == ZKind::Phi) {
          if (x.u == y.v) t = {Rat(1), j};
        } else if (x.kind == ZKind::Phi && y.kind == ZKind::Pi) {
          if (y.u == x.u) t = {Rat(1), i};
        } else if (x.kind == ZKind::Phi && y.kind == ZKind::Phi) {
          // phi_{g>t} * phi_{a>b} = [t=a][g=b] c_{ab} pi0_a
          if (y.u == x.v && y.v == x.u)
            t = {c_of(y.u, y.v), a.pi0_index(y.u)};
        }
        // every product involving pi0 beyond the unit action vanishes
        a.table_[i][j] = t;
      }
    return a;
  }

  const Graph& graph() const { return graph_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int vertices() const { return graph_.n; }
  const ZBasisElem& basis(int i) const { return basis_[i]; }
  const ZTerm& product(int i, int j) const { return table_[i][j]; }

  int pi_index(int v) const { return v; }
  int pi0_index(int v) const { return graph_.n + v; }
  int phi_index(int u, int v) const {
    auto it = index_.find(key({ZKind::Phi, u, v}));
    if (it == index_.end()) throw std::invalid_argument("no such arrow");
    return it->second;
  }

  ZElement multiply(const ZElement& x, const ZElement& y) const {
    ZElement out;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y) {
        const ZTerm& t = table_[i][j];
        if (t.is_zero()) continue;
        Rat c = ci * cj * t.coeff;
        auto [it, fresh] = out.emplace(t.idx, c);
        if (!fresh) it->second += c;
      }
    for (auto it = out.begin(); it != out.end();)
      it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
  }

  ZElement identity_element() const {
    ZElement e;
    for (int v = 0; v < graph_.n; ++v) e[pi_index(v)] = 1;
    return e;
  }

  bool is_associative() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        for (int k = 0; k < dim(); ++k) {
          ZElement xy = multiply({{i, Rat(1)}}, {{j, Rat(1)}});
          ZElement left = multiply(xy, {{k, Rat(1)}});
          ZElement yz = multiply({{j, Rat(1)}}, {{k, Rat(1)}});
          ZElement right = multiply({{i, Rat(1)}}, yz);
          if (left != right) return false;
        }
    return true;
  }

  bool identity_works() const {
    ZElement e = identity_element();
    for (int i = 0; i < dim(); ++i) {
      ZElement b{{i, Rat(1)}};
      if (multiply(e, b) != b || multiply(b, e) != b) return false;
    }
    return true;
  }

 private:
  static long long key(const ZBasisElem& b) {
    return (static_cast<long long>(b.kind) << 40) | (static_cast<long long>(b.u) << 20) | b.v;
  }

  Graph graph_;
  std::vector<ZBasisElem> basis_;
  std::vector<std::vector<ZTerm>> table_;
  std::map<long long, int> index_;
};

inline ZigzagAlgebra build_zigzag(const Graph& g) { return ZigzagAlgebra::build(g); }

// entry (a, b) = dim pi_b A pi_a = 2 I + adjacency.
inline IntMat zigzag_cartan_matrix(const ZigzagAlgebra& a) {
  int n = a.vertices();
  IntMat c(n, std::vector<int>(n, 0));
  for (int i = 0; i < a.dim(); ++i) {
    const ZBasisElem& b = a.basis(i);
    // source = right unit, target = left unit
    int src = b.u, tgt = b.kind == ZKind::Phi ? b.v : b.u;
    c[src][tgt] += 1;
  }
  return c;
}

namespace detail {

inline std::vector<int> span_product(const ZigzagAlgebra& a, const std::vector<int>& xs,
                                     const std::vector<int>& ys) {
  std::vector<char> in(a.dim(), 0);
  for (int x : xs)
    for (int y : ys) {
      const ZTerm& t = a.product(x, y);
      if (!t.is_zero()) in[t.idx] = 1;
    }
  std::vector<int> out;
  for (int i = 0; i < a.dim(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

inline std::vector<int> radical_basis(const ZigzagAlgebra& a) {
  std::vector<int> rad;
  for (int i = 0; i < a.dim(); ++i)
    if (a.basis(i).kind != ZKind::Pi) rad.push_back(i);
  return rad;
}

}  // namespace detail

// [dim A, dim rad, dim rad^2, dim rad^3]; products of basis elements are
// scalar multiples of basis elements, so spans are literal index sets.
inline std::vector<int> radical_series(const ZigzagAlgebra& a) {
  std::vector<int> rad = detail::radical_basis(a);
  std::vector<int> rad2 = detail::span_product(a, rad, rad);
  std::vector<int> rad3 = detail::span_product(a, rad, rad2);
  return {a.dim(), static_cast<int>(rad.size()), static_cast<int>(rad2.size()),
          static_cast<int>(rad3.size())};
}

// A finite-dimensional left module: carrier vectors graded by vertex, one
// action matrix per algebra basis element.
struct ZModule {
  std::vector<int> vertex_of;   // grading of each carrier vector
  std::vector<RatMat> action;   // action[b] : carrier -> carrier

  int dim() const { return static_cast<int>(vertex_of.size()); }
  std::vector<int> dim_vector(int vertices) const {
    std::vector<int> d(vertices, 0);
    for (int v : vertex_of) ++d[v];
    return d;
  }
};

// Left ideal A pi_alpha: basis elements with source alpha.
inline ZModule projective(const ZigzagAlgebra& a, int alpha) {
  ZModule m;
  std::vector<int> carrier;  // all basis elements with source alpha
  for (int i = 0; i < a.dim(); ++i)
    if (a.basis(i).u == alpha) carrier.push_back(i);
  std::map<int, int> pos;
  for (size_t k = 0; k < carrier.size(); ++k) pos[carrier[k]] = static_cast<int>(k);
  for (int c : carrier) {
    const ZBasisElem& b = a.basis(c);
    m.vertex_of.push_back(b.kind == ZKind::Phi ? b.v : b.u);
  }
  int d = static_cast<int>(carrier.size());
  m.action.assign(a.dim(), RatMat(d, RatVec(d, Rat(0))));
  for (int g = 0; g < a.dim(); ++g)
    for (int k = 0; k < d; ++k) {
      const ZTerm& t = a.product(g, carrier[k]);
      if (t.is_zero()) continue;
      m.action[g][pos.at(t.idx)][k] = t.coeff;
    }
  return m;
}

// One-dimensional module concentrated at alpha.
inline ZModule simple(const ZigzagAlgebra& a, int alpha) {
  ZModule m;
  m.vertex_of = {alpha};
  m.action.assign(a.dim(), RatMat(1, RatVec(1, Rat(0))));
  m.action[a.pi_index(alpha)][0][0] = 1;
  return m;
}

inline bool module_respects_mult(const ZigzagAlgebra& a, const ZModule& m) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      RatMat lhs = rat_mul(m.action[i], m.action[j]);
      const ZTerm& t = a.product(i, j);
      RatMat rhs(m.dim(), RatVec(m.dim(), Rat(0)));
      if (!t.is_zero())
        for (int r = 0; r < m.dim(); ++r)
          for (int c = 0; c < m.dim(); ++c) rhs[r][c] = t.coeff * m.action[t.idx][r][c];
      if (lhs != rhs) return false;
    }
  return true;
}

// Per-vertex dimensions of top and socle of a module, from ranks of the
// stacked radical action.
inline std::vector<int> top_dim_vector(const ZigzagAlgebra& a, const ZModule& m) {
  std::vector<int> rad = detail::radical_basis(a);
  std::vector<int> out(a.vertices(), 0);
  for (int v = 0; v < a.vertices(); ++v) {
    std::vector<int> block;  // carrier positions at vertex v
    for (int k = 0; k < m.dim(); ++k)
      if (m.vertex_of[k] == v) block.push_back(k);
    // rows of rad-action landing in the v block, over all carrier columns
    RatMat rows;
    for (int g : rad)
      for (int r : block) rows.push_back(m.action[g][r]);
    int im = rows.empty() ? 0 : static_cast<int>(rat_rank(rows));
    out[v] = static_cast<int>(block.size()) - im;
  }
  return out;
}

inline std::vector<int> socle_dim_vector(const ZigzagAlgebra& a, const ZModule& m) {
  std::vector<int> rad = detail::radical_basis(a);
  std::vector<int> out(a.vertices(), 0);
  for (int v = 0; v < a.vertices(); ++v) {
    std::vector<int> block;
    for (int k = 0; k < m.dim(); ++k)
      if (m.vertex_of[k] == v) block.push_back(k);
    // columns of the stacked radical action restricted to the v block
    RatMat cols;
    for (int c : block) {
      RatVec col;
      for (int g : rad)
        for (int r = 0; r < m.dim(); ++r) col.push_back(m.action[g][r][c]);
      cols.push_back(std::move(col));
    }
    int rk = cols.empty() ? 0 : static_cast<int>(rat_rank(cols));
    out[v] = static_cast<int>(block.size()) - rk;
  }
  return out;
}

// entry (a, b) = multiplicity of the b-simple in rad P_a / rad^2 P_a;
// equals the adjacency matrix with zero diagonal.
inline IntMat ext1_dimensions(const ZigzagAlgebra& a) {
  int n = a.vertices();
  IntMat e(n, std::vector<int>(n, 0));
  std::vector<int> rad = detail::radical_basis(a);
  for (int alpha = 0; alpha < n; ++alpha) {
    std::vector<int> carrier;
    for (int i = 0; i < a.dim(); ++i)
      if (a.basis(i).u == alpha) carrier.push_back(i);
    std::vector<int> radP = detail::span_product(a, rad, carrier);
    std::vector<int> rad2P = detail::span_product(a, rad, radP);
    std::vector<char> in2(a.dim(), 0);
    for (int x : rad2P) in2[x] = 1;
    for (int x : radP) {
      if (in2[x]) continue;
      const ZBasisElem& b = a.basis(x);
      e[alpha][b.kind == ZKind::Phi ? b.v : b.u] += 1;
    }
  }
  return e;
}

// The linear form picking the total pi0 coefficient induces the pairing
// (x, y) -> form(xy); symmetric and nondegenerate makes A(Gamma) a Frobenius
// (indeed symmetric) algebra.
inline RatMat frobenius_pairing(const ZigzagAlgebra& a) {
  RatMat g(a.dim(), RatVec(a.dim(), Rat(0)));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      const ZTerm& t = a.product(i, j);
      if (!t.is_zero() && a.basis(t.idx).kind == ZKind::Pi0) g[i][j] = t.coeff;
    }
  return g;
}

inline bool frobenius_check(const ZigzagAlgebra& a) {
  RatMat g = frobenius_pairing(a);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (g[i][j] != g[j][i]) return false;
  return rat_det(g) != 0;
}

// ---------------------------------------------------------------------------
// Rescaling robustness: an algebra with arbitrary nonzero scalars
// phi_{b>a} phi_{a>b} = c_{ab} pi0_a on a tree is isomorphic to the canonical
// one via a diagonal change of basis along paths from the root.

inline bool verify_rescaling_isomorphism(const Graph& g,
                                         const std::map<std::pair<int, int>, Rat>& c) {
  if (!g.is_tree()) throw std::invalid_argument("rescaling check requires a tree");
  ZigzagAlgebra canon = ZigzagAlgebra::build(g);
  ZigzagAlgebra scaled = ZigzagAlgebra::build(g, &c);

  int root = g.trivalent_vertex();
  if (root < 0) root = 0;
  std::vector<int> parent(g.n, -1), order{root};
  std::vector<char> seen(g.n, 0);
  seen[root] = 1;
  for (size_t h = 0; h < order.size(); ++h)
    for (int v : g.neighbors(order[h]))
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = order[h];
        order.push_back(v);
      }

  std::vector<Rat> kappa(g.n, Rat(1));
  for (int v : order) {
    if (parent[v] < 0) continue;
    int p = parent[v];
    kappa[v] = kappa[p] * c.at({v, p}) / c.at({p, v});
  }

  std::vector<Rat> scale(scaled.dim(), Rat(1));
  for (int v = 0; v < g.n; ++v) scale[scaled.pi0_index(v)] = kappa[v];
  for (int v = 0; v < g.n; ++v) {
    if (parent[v] < 0) continue;
    int p = parent[v];
    scale[scaled.phi_index(p, v)] = 1;
    scale[scaled.phi_index(v, p)] = kappa[v] / c.at({v, p});
  }

  // in the rescaled basis b~_i = scale_i b_i the table must be canonical
  for (int i = 0; i < scaled.dim(); ++i)
    for (int j = 0; j < scaled.dim(); ++j) {
      const ZTerm& ts = scaled.product(i, j);
      const ZTerm& tc = canon.product(i, j);
      if (ts.is_zero() != tc.is_zero()) return false;
      if (ts.is_zero()) continue;
      if (ts.idx != tc.idx) return false;
      if (scale[i] * scale[j] * ts.coeff != tc.coeff * scale[ts.idx]) return false;
    }
  return true;
}

// Deterministic supply of nonzero rational scalars for the robustness check.
inline std::map<std::pair<int, int>, Rat> random_edge_scalars(const Graph& g,
                                                              std::mt19937& rng) {
  static const Rat pool[] = {Rat(1),  Rat(-1), Rat(2),  Rat(-2), Rat(3),     Rat(5),
                             Rat(1, 2), Rat(-1, 2), Rat(2, 3), Rat(-5, 3), Rat(7, 2)};
  std::uniform_int_distribution<size_t> pick(0, std::size(pool) - 1);
  std::map<std::pair<int, int>, Rat> c;
  for (const auto& [u, v] : g.edges) {
    c[{u, v}] = pool[pick(rng)];
    c[{v, u}] = pool[pick(rng)];
  }
  return c;
}

}  // namespace minorb
