// Dynkin types A-G with Bourbaki node numbering, their Cartan matrices and
// symmetrizers.
//
// Convention used throughout the library:
//   cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
// so row i of the Cartan matrix pairs arbitrary roots against the i-th simple
// coroot. The symmetrizer d_i = (alpha_i, alpha_i)/2 is normalized so that
// short roots have d = 1; then diag(d) * cartan is symmetric with integer
// entries.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minorb {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct InvalidRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DynkinType {
  Family family;
  int rank;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
  friend auto operator<=>(const DynkinType& a, const DynkinType& b) {
    if (auto c = static_cast<char>(a.family) <=> static_cast<char>(b.family); c != 0) return c;
    return a.rank <=> b.rank;
  }
};

inline bool rank_in_bounds(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

inline DynkinType dynkin(Family f, int rank) {
  if (!rank_in_bounds(f, rank))
    throw InvalidRank(std::string(1, static_cast<char>(f)) + std::to_string(rank) +
                      " is not a valid Dynkin type");
  return DynkinType{f, rank};
}

inline bool simply_laced(const DynkinType& t) {
  return t.family == Family::A || t.family == Family::D || t.family == Family::E;
}

// Langlands duality on types: B_n <-> C_n, everything else fixed.
inline DynkinType dual_type(const DynkinType& t) {
  if (t.family == Family::B) return DynkinType{Family::C, t.rank};
  if (t.family == Family::C) return DynkinType{Family::B, t.rank};
  return t;
}

inline std::string type_name(const DynkinType& t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

inline DynkinType parse_type(const std::string& s) {
  if (s.size() < 2) throw InvalidRank("cannot parse Dynkin type '" + s + "'");
  char f = s[0];
  int rank = 0;
  try {
    rank = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw InvalidRank("cannot parse Dynkin type '" + s + "'");
  }
  switch (f) {
    case 'A': return dynkin(Family::A, rank);
    case 'B': return dynkin(Family::B, rank);
    case 'C': return dynkin(Family::C, rank);
    case 'D': return dynkin(Family::D, rank);
    case 'E': return dynkin(Family::E, rank);
    case 'F': return dynkin(Family::F, rank);
    case 'G': return dynkin(Family::G, rank);
    default: throw InvalidRank("unknown family in '" + s + "'");
  }
}

using IntMat = std::vector<std::vector<int>>;

// Bourbaki numbering. A/B/C/F/G are chains 1..n; D forks at node n-2 into
// nodes n-1, n; E has the chain 1-3-4-5-6(-7-8) with node 2 hanging off 4.
inline IntMat cartan_matrix(const DynkinType& t) {
  int n = t.rank;
  IntMat c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      if (n >= 7) bond(5, 6);
      if (n >= 8) bond(6, 7);
      bond(1, 3);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case Family::G:
      c[0][1] = -3;  // alpha_1 short, alpha_2 long
      c[1][0] = -1;
      break;
  }
  return c;
}

// Minimal positive integers d with d_i c_ij = d_j c_ji, one connected
// component at a time (short roots get d = 1).
inline std::vector<int> symmetrizer_of(const IntMat& cartan) {
  int n = static_cast<int>(cartan.size());
  std::vector<int> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 6;  // provisional scale, divisible by all bond ratios
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan[i][j] == 0 || d[j] != 0) continue;
        // d_j = d_i * c_ij / c_ji
        int num = d[i] * cartan[i][j];
        if (num % cartan[j][i] != 0)
          throw std::invalid_argument("symmetrizer_of: matrix is not symmetrizable");
        d[j] = num / cartan[j][i];
        stack.push_back(j);
      }
    }
  }
  int min = *std::min_element(d.begin(), d.end());
  for (auto& x : d) {
    if (x % min != 0) throw std::invalid_argument("symmetrizer_of: non-integral ratios");
    x /= min;
  }
  return d;
}

// |W| as an exact integer; used to gate enumeration.
inline unsigned long long weyl_order(const DynkinType& t) {
  auto fact = [](int n) {
    unsigned long long r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<unsigned long long>(i);
    return r;
  };
  int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (1ull << n) * fact(n);
    case Family::D: return (1ull << (n - 1)) * fact(n);
    case Family::E:
      if (n == 6) return 51840ull;
      if (n == 7) return 2903040ull;
      return 696729600ull;
    case Family::F: return 1152ull;
    case Family::G: return 12ull;
  }
  return 0;
}

// dim g = |roots| + rank, via the classical closed forms.
inline int classical_dim(const DynkinType& t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * n + 2 * n;
    case Family::B:
    case Family::C: return 2 * n * n + n;
    case Family::D: return 2 * n * n - n;
    case Family::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

}  // namespace minorb
