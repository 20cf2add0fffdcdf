#pragma once

/// @file weyl.hpp
/// @brief Finite Weyl group elements, parabolic subgroups and coset representatives.

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qseidel/rootsys.hpp"

namespace qseidel {

/// Default cap on |W| for exhaustive enumeration.
inline constexpr std::size_t kDefaultWeylBound = std::size_t{1} << 21;

/// A Weyl group element stored by its action on the four lattices.
///
/// The canonical form is the table of images of the simple roots (columns of
/// on_roots()); the other three matrices are carried along so that actions on
/// coweights, weights and coroots are a single matrix-vector product.
/// Reduced words are recovered on demand.
class WeylElt {
 public:
  WeylElt() = default;

  static WeylElt identity(RootSystemPtr rs) {
    const int n = rs->rank();
    WeylElt e;
    e.rs_ = std::move(rs);
    e.roots_ = e.coweights_ = e.weights_ = e.coroots_ = IMat::identity(n);
    e.length_ = 0;
    return e;
  }

  /// Reflection s_beta for the positive root with index k in rs->positive_roots().
  static WeylElt reflection(RootSystemPtr rs, std::size_t k) {
    const int n = rs->rank();
    const IMat& C = rs->cartan();
    const IVec& a = rs->positive_roots().at(k);
    const IVec& c = rs->positive_coroots().at(k);
    const IVec a_wt = C.apply(a);
    const IVec c_cw = C.transpose().apply(c);
    WeylElt s;
    s.roots_ = s.coweights_ = s.weights_ = s.coroots_ = IMat::identity(n);
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) {
        std::int64_t beta_check = 0;  // <alpha_j, beta^vee>
        std::int64_t alpha_on_j = 0;  // <beta, alpha_j^vee>
        for (int i = 0; i < n; ++i) {
          beta_check += c[i] * C(i, j);
          alpha_on_j += a[i] * C(j, i);
        }
        s.roots_(r, j) -= a[r] * beta_check;
        s.coweights_(r, j) -= c_cw[r] * a[j];
        s.weights_(r, j) -= a_wt[r] * c[j];
        s.coroots_(r, j) -= c[r] * alpha_on_j;
      }
    s.rs_ = std::move(rs);
    s.length_ = s.count_inversions();
    return s;
  }

  static WeylElt simple_reflection(const RootSystemPtr& rs, int i) {
    return reflection(rs, static_cast<std::size_t>(rs->positive_root_index(rs->simple_root(i))));
  }

  /// Product s_{word[0]} s_{word[1]} ... (left to right composition).
  static WeylElt from_word(const RootSystemPtr& rs, const std::vector<int>& word) {
    WeylElt w = identity(rs);
    for (int i : word) w = w * simple_reflection(rs, i);
    return w;
  }

  const RootSystemPtr& root_system() const { return rs_; }
  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }

  IVec act_on_root(const IVec& r) const { return roots_.apply(r); }
  IVec act_on_coweight(const IVec& l) const { return coweights_.apply(l); }
  IVec act_on_weight(const IVec& m) const { return weights_.apply(m); }
  IVec act_on_coroot(const IVec& c) const { return coroots_.apply(c); }
  /// w^{-1}(r) without forming the inverse.
  IVec inverse_act_on_root(const IVec& r) const { return coweights_.transpose().apply(r); }

  const IMat& on_roots() const { return roots_; }
  const IMat& on_weights() const { return weights_; }

  bool has_right_descent(int i) const { return is_negative(roots_.col(i - 1)); }
  bool has_left_descent(int i) const { return is_negative(coweights_.row(i - 1)); }

  WeylElt inverse() const {
    WeylElt r;
    r.rs_ = rs_;
    r.roots_ = coweights_.transpose();
    r.coweights_ = roots_.transpose();
    r.weights_ = coroots_.transpose();
    r.coroots_ = weights_.transpose();
    r.length_ = length_;
    return r;
  }

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    if (a.rs_ != b.rs_ && (a.rs_ == nullptr || b.rs_ == nullptr || a.rs_->name() != b.rs_->name()))
      throw Error("Weyl group elements from different root systems");
    WeylElt c;
    c.rs_ = a.rs_;
    c.roots_ = a.roots_ * b.roots_;
    c.coweights_ = a.coweights_ * b.coweights_;
    c.weights_ = a.weights_ * b.weights_;
    c.coroots_ = a.coroots_ * b.coroots_;
    c.length_ = c.count_inversions();
    return c;
  }

  /// A reduced word, left-to-right composition, lexicographically smallest
  /// among those obtained by peeling the smallest right descent.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    WeylElt w = *this;
    while (!w.is_identity()) {
      int i = 1;
      while (!w.has_right_descent(i)) ++i;
      word.push_back(i);
      w = w * simple_reflection(rs_, i);
    }
    return {word.rbegin(), word.rend()};
  }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.roots_ == b.roots_; }
  friend bool operator<(const WeylElt& a, const WeylElt& b) {
    return a.length_ != b.length_ ? a.length_ < b.length_ : a.roots_ < b.roots_;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto x : roots_.data()) h = h * 1000003u ^ static_cast<std::size_t>(x + 17);
    return h;
  }

 private:
  int count_inversions() const {
    int len = 0;
    for (const auto& r : rs_->positive_roots())
      if (is_negative(roots_.apply(r))) ++len;
    return len;
  }

  RootSystemPtr rs_;
  IMat roots_, coweights_, weights_, coroots_;
  int length_ = 0;
};

struct WeylHash {
  std::size_t operator()(const WeylElt& w) const { return w.hash(); }
};

/// Human-readable form such as "s2s1" or "e".
inline std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

/// I_P: the nodes indexing the quantum parameters. W_P is generated by s_j, j not in I_P.
class ParabolicSet {
 public:
  ParabolicSet() = default;
  ParabolicSet(const RootSystem& rs, std::vector<int> nodes) : rank_(rs.rank()) {
    std::set<int> uniq;
    for (int i : nodes) {
      rs.check_node(i);
      uniq.insert(i);
    }
    nodes_.assign(uniq.begin(), uniq.end());
  }
  static ParabolicSet borel(const RootSystem& rs) {
    std::vector<int> all;
    for (int i = 1; i <= rs.rank(); ++i) all.push_back(i);
    return ParabolicSet(rs, all);
  }

  const std::vector<int>& nodes() const { return nodes_; }
  bool contains(int i) const { return std::find(nodes_.begin(), nodes_.end(), i) != nodes_.end(); }
  /// Generators of W_P, increasing.
  std::vector<int> levi_nodes() const {
    std::vector<int> out;
    for (int i = 1; i <= rank_; ++i)
      if (!contains(i)) out.push_back(i);
    return out;
  }
  bool is_borel() const { return static_cast<int>(nodes_.size()) == rank_; }
  /// Position of node i among nodes(), i.e. the index of q_i in exponent vectors.
  int q_index(int i) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), i);
    if (it == nodes_.end()) throw Error("node " + std::to_string(i) + " is not in I_P");
    return static_cast<int>(it - nodes_.begin());
  }
  /// True iff the root (simple-root coords) lies in R_P, i.e. is supported off I_P.
  bool in_levi(const IVec& root) const {
    for (int i : nodes_)
      if (root[i - 1] != 0) return false;
    return true;
  }

  friend bool operator==(const ParabolicSet&, const ParabolicSet&) = default;

 private:
  int rank_ = 0;
  std::vector<int> nodes_;
};

/// Longest element of the subgroup generated by {s_j : j in generators}.
inline WeylElt longest_element(const RootSystemPtr& rs, const std::vector<int>& generators) {
  WeylElt w = WeylElt::identity(rs);
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : generators)
      if (!w.has_right_descent(j)) {
        w = w * WeylElt::simple_reflection(rs, j);
        changed = true;
      }
  }
  return w;
}

inline WeylElt longest_element(const RootSystemPtr& rs) {
  std::vector<int> all;
  for (int i = 1; i <= rs->rank(); ++i) all.push_back(i);
  return longest_element(rs, all);
}

inline bool is_minimal_coset_rep(const WeylElt& w, const ParabolicSet& P) {
  for (int j : P.levi_nodes())
    if (w.has_right_descent(j)) return false;
  return true;
}

inline bool in_parabolic_subgroup(const WeylElt& u, const ParabolicSet& P) {
  // u in W_P iff u fixes every varpi_i^vee with i in I_P.
  const auto& rs = u.root_system();
  for (int i : P.nodes())
    if (u.act_on_coweight(rs->fundamental_coweight(i)) != rs->fundamental_coweight(i)) return false;
  return true;
}

struct CosetFactor {
  WeylElt rep;    ///< minimal coset representative, in W^P
  WeylElt levi;   ///< element of W_P with w = rep * levi
};

/// w = rep * levi with rep in W^P and levi in W_P; lengths add.
inline CosetFactor coset_reduce(const WeylElt& w, const ParabolicSet& P) {
  const auto& rs = w.root_system();
  WeylElt rep = w;
  WeylElt levi = WeylElt::identity(rs);
  const auto gens = P.levi_nodes();
  for (bool changed = true; changed;) {
    changed = false;
    for (int j : gens)
      if (rep.has_right_descent(j)) {
        auto s = WeylElt::simple_reflection(rs, j);
        rep = rep * s;
        levi = s * levi;
        changed = true;
      }
  }
  return {rep, levi};
}

/// Breadth-first closure of {e} under s -> s * s_i for i in generators.
/// Output is ordered by length. Throws Error when the group exceeds `bound`.
inline std::vector<WeylElt> enumerate_subgroup(const RootSystemPtr& rs, const std::vector<int>& generators,
                                               std::size_t bound = kDefaultWeylBound) {
  std::vector<WeylElt> out{WeylElt::identity(rs)};
  std::unordered_set<WeylElt, WeylHash> seen{out.front()};
  std::vector<WeylElt> gens;
  for (int i : generators) gens.push_back(WeylElt::simple_reflection(rs, i));
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : gens) {
      WeylElt x = out[k] * s;
      if (x.length() > out[k].length() && seen.insert(x).second) {
        if (out.size() >= bound)
          throw Error("Weyl group enumeration exceeds bound " + std::to_string(bound) + " in " + rs->name());
        out.push_back(std::move(x));
      }
    }
  return out;
}

inline std::vector<WeylElt> enumerate_weyl(const RootSystemPtr& rs, std::size_t bound = kDefaultWeylBound) {
  std::vector<int> all;
  for (int i = 1; i <= rs->rank(); ++i) all.push_back(i);
  return enumerate_subgroup(rs, all, bound);
}

inline std::vector<WeylElt> enumerate_parabolic(const RootSystemPtr& rs, const ParabolicSet& P,
                                                std::size_t bound = kDefaultWeylBound) {
  return enumerate_subgroup(rs, P.levi_nodes(), bound);
}

/// W^P in length order. W^P is closed under taking suffixes of reduced words,
/// so it is generated from e by left multiplication s_i * w.
inline std::vector<WeylElt> enumerate_minreps(const RootSystemPtr& rs, const ParabolicSet& P,
                                              std::size_t bound = kDefaultWeylBound) {
  std::vector<WeylElt> out{WeylElt::identity(rs)};
  std::unordered_set<WeylElt, WeylHash> seen{out.front()};
  std::vector<WeylElt> gens;
  for (int i = 1; i <= rs->rank(); ++i) gens.push_back(WeylElt::simple_reflection(rs, i));
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& s : gens) {
      WeylElt x = s * out[k];
      if (x.length() > out[k].length() && is_minimal_coset_rep(x, P) && seen.insert(x).second) {
        if (out.size() >= bound)
          throw Error("W^P enumeration exceeds bound " + std::to_string(bound) + " in " + rs->name());
        out.push_back(std::move(x));
      }
    }
  std::stable_sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) { return a.length() < b.length(); });
  return out;
}

/// v_i = w0 * w0^{P_i}: the minimal element with v_i(varpi_i^vee) = w0(varpi_i^vee).
inline WeylElt v_element(const RootSystemPtr& rs, int i) {
  rs->check_node(i);
  if (!rs->is_minuscule(i))
    throw Error("node " + std::to_string(i) + " is not minuscule in " + rs->name());
  std::vector<int> others;
  for (int j = 1; j <= rs->rank(); ++j)
    if (j != i) others.push_back(j);
  const WeylElt w0 = longest_element(rs);
  WeylElt v = w0 * longest_element(rs, others);
  const IVec pi = rs->fundamental_coweight(i);
  if (v.act_on_coweight(pi) != w0.act_on_coweight(pi))
    throw ConsistencyError("v_" + std::to_string(i) + " does not send varpi^vee to w0 varpi^vee");
  // Minimality: v is the minimal representative of its W_{P_i} coset, and the
  // stabilizer of varpi_i^vee is exactly W_{P_i}.
  if (!is_minimal_coset_rep(v, ParabolicSet(*rs, {i})))
    throw ConsistencyError("v_" + std::to_string(i) + " is not in W^{P_i}");
  return v;
}

}  // namespace qseidel
