// Root subsystems: symmetric reflection-closed subsets of a root system,
// their simple bases, and Cartan-matrix type recognition.
//
// Two closure notions are kept apart on purpose. Subsystems that come from
// actual subalgebras (Levi, Borel-de Siebenthal) are additively closed inside
// Delta. Integral subsystems Delta^Z are only closed under their own
// reflections; their coroot sets are the additively closed objects, living in
// the dual system. classify() requires the reflection notion, which both
// families satisfy.

#pragma once

#include <algorithm>
#include <set>

#include "minorb/rootsys.hpp"

namespace minorb {

struct NotClosed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RootSubsystem {
  const RootSystem* ambient = nullptr;
  std::vector<int> members;       // sorted root indices
  std::vector<int> simple_basis;  // indecomposable positive members
  bool full_rank = false;

  bool operator==(const RootSubsystem& o) const { return members == o.members; }
};

inline bool subsystem_is_symmetric(const RootSystem& rs, const std::vector<int>& members) {
  std::set<int> s(members.begin(), members.end());
  for (int m : members)
    if (!s.count(rs.negate(m))) return false;
  return true;
}

inline bool subsystem_is_reflection_closed(const RootSystem& rs,
                                           const std::vector<int>& members) {
  std::set<int> s(members.begin(), members.end());
  for (int a : members)
    for (int b : members)
      if (!s.count(rs.reflect_root(b, a))) return false;
  return true;
}

inline bool subsystem_is_additively_closed(const RootSystem& rs,
                                           const std::vector<int>& members) {
  std::set<int> s(members.begin(), members.end());
  for (int a : members)
    for (int b : members) {
      RootCoords sum = rs.root(a);
      for (int j = 0; j < rs.rank(); ++j) sum[j] += rs.root(b)[j];
      if (rs.contains_root(sum) && !s.count(rs.root_index(sum))) return false;
    }
  return true;
}

// Reflection closure of a set of generating roots.
inline std::vector<int> closure_of(const RootSystem& rs, const std::vector<int>& generators) {
  std::set<int> s;
  std::vector<int> queue;
  for (int g : generators)
    if (s.insert(g).second) queue.push_back(g);
  for (size_t h = 0; h < queue.size(); ++h) {
    int b = queue[h];
    if (s.insert(rs.negate(b)).second) queue.push_back(rs.negate(b));
    // reflect everything seen so far in b, and b in everything
    std::vector<int> snapshot(s.begin(), s.end());
    for (int a : snapshot) {
      int r1 = rs.reflect_root(a, b);
      if (s.insert(r1).second) queue.push_back(r1);
      int r2 = rs.reflect_root(b, a);
      if (s.insert(r2).second) queue.push_back(r2);
    }
  }
  return {s.begin(), s.end()};
}

inline RootSubsystem make_subsystem(const RootSystem& rs, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  RootSubsystem sub;
  sub.ambient = &rs;
  sub.members = std::move(members);

  // simple basis: positive members that are not sums of two positive members
  std::set<RootCoords> positives;
  for (int m : sub.members)
    if (rs.is_positive_root(m)) positives.insert(rs.root(m));
  for (int m : sub.members) {
    if (!rs.is_positive_root(m)) continue;
    const RootCoords& c = rs.root(m);
    bool decomposable = false;
    for (const auto& p : positives) {
      RootCoords q(c);
      bool nonneg = true;
      for (size_t j = 0; j < q.size(); ++j) {
        q[j] -= p[j];
        if (q[j] < 0) nonneg = false;
      }
      if (!nonneg || q == RootCoords(q.size(), 0)) continue;
      if (positives.count(q)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.simple_basis.push_back(m);
  }

  // simple systems meet at obtuse or right angles; catches misuse early
  for (int a : sub.simple_basis)
    for (int b : sub.simple_basis)
      if (a != b && rs.coroot_pairing(a, b) > 0)
        throw std::logic_error("subsystem simple basis is not obtuse");

  sub.full_rank = static_cast<int>(sub.simple_basis.size()) == rs.rank();
  return sub;
}

inline RootSubsystem subsystem_from_generators(const RootSystem& rs,
                                               const std::vector<int>& generators) {
  return make_subsystem(rs, closure_of(rs, generators));
}

struct SubalgebraClass {
  std::vector<DynkinType> components;  // sorted: rank descending, family ascending
  int torus_rank = 0;
  int dim = 0;
  int codim = 0;

  friend bool operator==(const SubalgebraClass&, const SubalgebraClass&) = default;
  friend auto operator<=>(const SubalgebraClass&, const SubalgebraClass&) = default;
};

inline void sort_components(std::vector<DynkinType>& comps) {
  std::sort(comps.begin(), comps.end(), [](const DynkinType& a, const DynkinType& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.family < b.family;
  });
}

inline std::string class_label(const SubalgebraClass& c) {
  std::string s;
  for (const auto& t : c.components) {
    if (!s.empty()) s += '+';
    s += type_name(t);
  }
  if (c.torus_rank > 0) {
    if (!s.empty()) s += '+';
    s += c.torus_rank == 1 ? "T" : "T^" + std::to_string(c.torus_rank);
  }
  if (s.empty()) s = "0";
  return s;
}

// Degenerate family names folded to canonical ones: B1 = C1 = A1, C2 = B2,
// D2 = A1+A1, D3 = A3, D1 = torus. Used both when recognizing components and
// when normalizing expected table rows.
inline void push_normalized(std::vector<DynkinType>& comps, int& torus, Family f, int rank) {
  if (rank == 0) return;
  if (rank == 1) {
    if (f == Family::D) {
      ++torus;
      return;
    }
    comps.push_back(DynkinType{Family::A, 1});
    return;
  }
  if (rank == 2 && (f == Family::C || f == Family::B)) {
    comps.push_back(DynkinType{Family::B, 2});
    return;
  }
  if (rank == 2 && f == Family::D) {
    comps.push_back(DynkinType{Family::A, 1});
    comps.push_back(DynkinType{Family::A, 1});
    return;
  }
  if (rank == 3 && f == Family::D) {
    comps.push_back(DynkinType{Family::A, 3});
    return;
  }
  comps.push_back(DynkinType{f, rank});
}

namespace detail {

// Recognize one connected component of a simple basis from its Cartan
// pairings and relative root norms.
inline DynkinType recognize_component(const RootSystem& rs, const std::vector<int>& nodes) {
  int r = static_cast<int>(nodes.size());
  if (r == 1) return DynkinType{Family::A, 1};

  std::vector<std::vector<int>> bond(r, std::vector<int>(r, 0));
  std::vector<int> degree(r, 0);
  int max_bond = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      int cij = rs.coroot_pairing(nodes[j], nodes[i]);  // <s_j, s_i^vee>
      int cji = rs.coroot_pairing(nodes[i], nodes[j]);
      bond[i][j] = cij * cji;
      if (bond[i][j] != 0) {
        ++degree[i];
        max_bond = std::max(max_bond, bond[i][j]);
      }
    }
  if (max_bond == 3) {
    if (r != 2) throw std::logic_error("triple bond in component of rank != 2");
    return DynkinType{Family::G, 2};
  }
  if (max_bond == 2) {
    if (r == 2) return DynkinType{Family::B, 2};
    int max_norm = 0, min_norm = 1 << 20;
    for (int n : nodes) {
      max_norm = std::max(max_norm, rs.root_norm(n));
      min_norm = std::min(min_norm, rs.root_norm(n));
    }
    int longs = 0, shorts = 0;
    for (int n : nodes) (rs.root_norm(n) == max_norm ? longs : shorts)++;
    if (r == 4 && longs == 2 && shorts == 2) return DynkinType{Family::F, 4};
    if (longs == 1) return DynkinType{Family::C, r};
    if (shorts == 1) return DynkinType{Family::B, r};
    throw std::logic_error("unrecognized doubly-laced component");
  }

  // simply laced: path, fork, or E shape
  int forks = 0, fork_at = -1;
  for (int i = 0; i < r; ++i) {
    if (degree[i] > 3) throw std::logic_error("node of degree > 3");
    if (degree[i] == 3) {
      ++forks;
      fork_at = i;
    }
  }
  if (forks == 0) return DynkinType{Family::A, r};
  if (forks > 1) throw std::logic_error("multiple forks in one component");
  // leg lengths away from the fork
  std::vector<int> legs;
  for (int start = 0; start < r; ++start) {
    if (bond[fork_at][start] == 0) continue;
    int len = 1, prev = fork_at, cur = start;
    for (;;) {
      int next = -1;
      for (int k = 0; k < r; ++k)
        if (k != prev && bond[cur][k] != 0) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  if (legs.size() != 3 || legs[0] != 1) throw std::logic_error("bad fork legs");
  if (legs[1] == 1) return DynkinType{Family::D, r};
  if (legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) return DynkinType{Family::E, r};
  throw std::logic_error("component is not of finite type");
}

}  // namespace detail

inline SubalgebraClass classify(const RootSubsystem& sub) {
  const RootSystem& rs = *sub.ambient;
  if (!subsystem_is_symmetric(rs, sub.members) ||
      !subsystem_is_reflection_closed(rs, sub.members))
    throw NotClosed("subsystem is not symmetric/closed");

  // connected components of the simple basis
  int n = static_cast<int>(sub.simple_basis.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 &&
            rs.coroot_pairing(sub.simple_basis[u], sub.simple_basis[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  SubalgebraClass cls;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(sub.simple_basis[i]);
    DynkinType t = detail::recognize_component(rs, nodes);
    push_normalized(cls.components, cls.torus_rank, t.family, t.rank);
  }
  sort_components(cls.components);
  int semisimple_rank = 0;
  for (const auto& t : cls.components) semisimple_rank += t.rank;
  cls.torus_rank = rs.rank() - semisimple_rank;
  cls.dim = static_cast<int>(sub.members.size()) + rs.rank();
  cls.codim = rs.dim_g() - cls.dim;
  return cls;
}

}  // namespace minorb
