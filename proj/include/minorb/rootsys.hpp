// Exact root systems of all simple types.
//
// Roots are stored as integer coordinate vectors in the simple-root basis;
// weights as rational vectors in the fundamental-weight basis. For every root
// alpha the integer coordinates of its coroot alpha^vee (in the simple-coroot
// basis) are cached at build time, so the pairing <lambda, alpha^vee> is an
// exact dot product and never touches the ambient bilinear form. The form
// itself only enters through the symmetrizer ratios d_i = (alpha_i,alpha_i)/2,
// which is all any formula in this library depends on.
//
// Root indexing: positive roots sorted by (height, coords) occupy indices
// [0, P); index P + k is the negative of index k.

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>

#include "minorb/dynkin.hpp"
#include "minorb/rat.hpp"
#include "minorb/ratmat.hpp"

namespace minorb {

struct NotARoot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using RootCoords = std::vector<int>;
using Weight = RatVec;  // fundamental-weight coordinates

class RootSystem {
 public:
  static RootSystem build(const DynkinType& t) {
    return build_from_cartan(t, cartan_matrix(t));
  }

  // Builds from an explicit (valid, symmetrizable) Cartan matrix. Used for
  // Langlands duals, where the natural matrix is the transpose of a Bourbaki
  // one and the node numbering must stay aligned with the coroots.
  static RootSystem build_from_cartan(const DynkinType& t, IntMat cartan) {
    RootSystem rs;
    rs.dtype_ = t;
    rs.cartan_ = std::move(cartan);
    rs.symmetrizer_ = symmetrizer_of(rs.cartan_);
    rs.generate_roots();
    rs.finish_tables();
    return rs;
  }

  const DynkinType& type() const { return dtype_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const IntMat& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const RootCoords& root(int idx) const { return roots_[idx]; }
  bool is_positive_root(int idx) const { return idx < num_positive_; }
  int negate(int idx) const {
    return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
  }
  int height(int idx) const {
    int h = 0;
    for (int c : roots_[idx]) h += c;
    return h;
  }

  int root_index(const RootCoords& c) const {
    auto it = index_of_.find(c);
    if (it == index_of_.end()) throw NotARoot("not a root of " + type_name(dtype_));
    return it->second;
  }
  bool contains_root(const RootCoords& c) const { return index_of_.count(c) > 0; }

  int simple_root_index(int node) const { return simple_index_[node]; }
  int theta() const { return theta_; }

  // <root_idx, alpha_node^vee>, an integer.
  int pairing_int(int root_idx, int node) const { return ip_[root_idx][node]; }
  // alpha^vee in the simple-coroot basis (integer coordinates).
  const std::vector<int>& coroot(int idx) const { return coroot_[idx]; }
  // (alpha, alpha)/2 normalized so short roots give 1.
  int root_norm(int idx) const { return norm_[idx]; }

  // <gamma, beta^vee> for two roots given by index.
  int coroot_pairing(int gamma, int beta) const {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += coroot_[beta][j] * ip_[gamma][j];
    return s;
  }

  // <lambda, alpha^vee> for a weight in fundamental-weight coordinates.
  Rat pairing(const Weight& lam, int root_idx) const {
    Rat s(0);
    for (int j = 0; j < rank(); ++j) s += lam[j] * coroot_[root_idx][j];
    return s;
  }
  Rat pairing(const Weight& lam, const RootCoords& alpha) const {
    return pairing(lam, root_index(alpha));
  }

  Weight zero_weight() const { return Weight(rank(), Rat(0)); }
  Weight rho() const { return Weight(rank(), Rat(1)); }
  Weight fundamental_weight(int node) const {
    Weight w = zero_weight();
    w[node] = 1;
    return w;
  }
  // The root as a weight: coordinates <alpha, alpha_i^vee>.
  Weight weight_of_root(int idx) const {
    Weight w(rank());
    for (int i = 0; i < rank(); ++i) w[i] = ip_[idx][i];
    return w;
  }
  // Fundamental weights expressed in the simple-root basis (rows of the
  // inverse transposed Cartan matrix).
  const RatMat& fundamental_weights_alpha() const { return fw_alpha_; }

  // Simple reflection as a permutation of root indices.
  const std::vector<int>& simple_perm(int node) const { return simple_perm_[node]; }

  // s_beta(gamma) as a root index, for arbitrary roots.
  int reflect_root(int gamma, int beta) const {
    int k = coroot_pairing(gamma, beta);
    RootCoords c = roots_[gamma];
    for (int j = 0; j < rank(); ++j) c[j] -= k * roots_[beta][j];
    return root_index(c);
  }

  // s_node acting linearly on a weight.
  Weight reflect_weight(const Weight& lam, int node) const {
    Weight r = lam;
    Rat k = lam[node];
    if (k == 0) return r;
    for (int i = 0; i < rank(); ++i) r[i] -= k * cartan_[i][node];
    return r;
  }

  // Delta_lambda = {alpha : <lambda + rho, alpha^vee> = 0}, as root indices.
  std::vector<int> singular_set(const Weight& lam) const {
    std::vector<int> out;
    Weight shifted = lam + rho();
    for (int r = 0; r < num_roots(); ++r)
      if (pairing(shifted, r) == 0) out.push_back(r);
    return out;
  }

  bool is_integral(const Weight& lam) const { return is_integer_vec(lam); }
  bool is_dominant(const Weight& lam) const {
    for (const auto& x : lam)
      if (!is_integer(x) || x < 0) return false;
    return true;
  }
  bool is_rho_dominant(const Weight& lam) const { return is_dominant(lam + rho()); }

  int dim_g() const { return num_roots() + rank(); }

  // dim of the minimal nonzero nilpotent orbit: #{alpha : <alpha, theta^vee> = 1} + 2.
  int min_orbit_dim() const {
    int count = 0;
    for (int r = 0; r < num_roots(); ++r)
      if (coroot_pairing(r, theta_) == 1) ++count;
    return count + 2;
  }

  // Diagram neighbors of a node (nonzero off-diagonal Cartan entries).
  std::vector<int> node_neighbors(int node) const {
    std::vector<int> nb;
    for (int j = 0; j < rank(); ++j)
      if (j != node && cartan_[node][j] != 0) nb.push_back(j);
    return nb;
  }

  RootSystem dual() const {
    IntMat t(rank(), std::vector<int>(rank()));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) t[i][j] = cartan_[j][i];
    return build_from_cartan(dual_type(dtype_), std::move(t));
  }

 private:
  RootSystem() = default;

  void generate_roots() {
    int n = rank();
    std::map<RootCoords, bool> seen;
    std::vector<RootCoords> queue;
    for (int i = 0; i < n; ++i) {
      RootCoords e(n, 0);
      e[i] = 1;
      seen.emplace(e, true);
      queue.push_back(std::move(e));
    }
    // Closure under simple reflections reaches every root.
    for (size_t head = 0; head < queue.size(); ++head) {
      RootCoords c = queue[head];
      for (int i = 0; i < n; ++i) {
        int k = 0;
        for (int j = 0; j < n; ++j) k += cartan_[i][j] * c[j];
        RootCoords r = c;
        r[i] -= k;
        if (seen.emplace(r, true).second) queue.push_back(std::move(r));
      }
    }

    std::vector<RootCoords> positives;
    for (const auto& [c, _] : seen) {
      bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      if (nonneg) positives.push_back(c);
    }
    auto ht = [](const RootCoords& c) {
      int h = 0;
      for (int x : c) h += x;
      return h;
    };
    std::sort(positives.begin(), positives.end(), [&](const auto& a, const auto& b) {
      if (ht(a) != ht(b)) return ht(a) < ht(b);
      return a < b;
    });
    num_positive_ = static_cast<int>(positives.size());
    if (2 * num_positive_ != static_cast<int>(seen.size()))
      throw std::logic_error("root closure produced a non-symmetric set");

    roots_ = positives;
    for (const auto& c : positives) {
      RootCoords neg(c);
      for (auto& x : neg) x = -x;
      roots_.push_back(std::move(neg));
    }
    for (int i = 0; i < num_roots(); ++i) index_of_.emplace(roots_[i], i);

    theta_ = num_positive_ - 1;  // unique maximal height
    if (num_positive_ >= 2 && ht(roots_[theta_]) == ht(roots_[theta_ - 1]))
      throw std::logic_error("highest root is not unique");
  }

  void finish_tables() {
    int n = rank();
    simple_index_.resize(n);
    for (int i = 0; i < n; ++i) {
      RootCoords e(n, 0);
      e[i] = 1;
      simple_index_[i] = index_of_.at(e);
    }

    ip_.assign(num_roots(), std::vector<int>(n, 0));
    for (int r = 0; r < num_roots(); ++r)
      for (int i = 0; i < n; ++i) {
        int k = 0;
        for (int j = 0; j < n; ++j) k += cartan_[i][j] * roots_[r][j];
        ip_[r][i] = k;
      }

    norm_.resize(num_roots());
    coroot_.assign(num_roots(), std::vector<int>(n, 0));
    for (int r = 0; r < num_roots(); ++r) {
      long long nn = 0;  // (alpha, alpha) in short-root-norm-2 units
      for (int i = 0; i < n; ++i)
        nn += static_cast<long long>(roots_[r][i]) * symmetrizer_[i] * ip_[r][i];
      if (nn <= 0 || nn % 2 != 0) throw std::logic_error("bad root norm");
      norm_[r] = static_cast<int>(nn / 2);
      for (int j = 0; j < n; ++j) {
        int num = roots_[r][j] * symmetrizer_[j];
        if (num % norm_[r] != 0) throw std::logic_error("coroot is not integral");
        coroot_[r][j] = num / norm_[r];
      }
    }

    simple_perm_.assign(n, std::vector<int>(num_roots()));
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < num_roots(); ++r) {
        RootCoords c = roots_[r];
        c[i] -= ip_[r][i];
        simple_perm_[i][r] = index_of_.at(c);
      }

    // theta must pair nonnegatively with every simple coroot
    for (int i = 0; i < n; ++i)
      if (ip_[theta_][i] < 0) throw std::logic_error("highest root check failed");

    RatMat ct(n, RatVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ct[i][j] = cartan_[j][i];
    fw_alpha_ = rat_inverse(ct);
  }

  DynkinType dtype_{Family::A, 1};
  IntMat cartan_;
  std::vector<int> symmetrizer_;
  std::vector<RootCoords> roots_;
  int num_positive_ = 0;
  int theta_ = 0;
  std::vector<int> simple_index_;
  std::vector<std::vector<int>> ip_;       // ip_[r][i] = <root r, alpha_i^vee>
  std::vector<std::vector<int>> coroot_;   // coroot coords per root
  std::vector<int> norm_;                  // (alpha,alpha)/2, short = 1
  std::vector<std::vector<int>> simple_perm_;
  std::map<RootCoords, int> index_of_;
  RatMat fw_alpha_;
};

}  // namespace minorb
