#pragma once

/// @file affine.hpp
/// @brief Extended affine Weyl group W x| P^vee and its combinatorics.
///
/// An element is stored as w * t_lambda with w in W and lambda a coweight.
/// Multiplication: (w t_l)(v t_m) = wv t_{v^{-1}(l) + m}.
/// Action on real affine roots: w t_l (a + n delta) = w(a) + (n - <l, a>) delta.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qseidel/weyl.hpp"

namespace qseidel {

struct AffineRoot {
  IVec finite;            ///< root in simple-root coordinates
  std::int64_t level = 0; ///< coefficient of delta

  bool is_positive() const { return level > 0 || (level == 0 && qseidel::is_positive(finite)); }
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

class ExtAffElt {
 public:
  ExtAffElt() = default;
  ExtAffElt(WeylElt w, IVec lambda) : w_(std::move(w)), lambda_(std::move(lambda)) {
    if (static_cast<int>(lambda_.size()) != w_.root_system()->rank())
      throw Error("translation part has wrong dimension " + std::to_string(lambda_.size()));
  }

  static ExtAffElt identity(const RootSystemPtr& rs) { return {WeylElt::identity(rs), IVec(rs->rank(), 0)}; }
  static ExtAffElt translation(const RootSystemPtr& rs, IVec lambda) {
    return {WeylElt::identity(rs), std::move(lambda)};
  }

  const WeylElt& finite_part() const { return w_; }
  const IVec& translation_part() const { return lambda_; }
  const RootSystemPtr& root_system() const { return w_.root_system(); }

  bool is_identity() const { return w_.is_identity() && qseidel::is_zero(lambda_); }
  /// Membership in the (non-extended) affine Weyl group: lambda in Q^vee.
  bool in_affine_weyl() const { return root_system()->in_coroot_lattice(lambda_); }

  friend ExtAffElt operator*(const ExtAffElt& x, const ExtAffElt& y) {
    WeylElt vinv = y.w_.inverse();
    return {x.w_ * y.w_, vinv.act_on_coweight(x.lambda_) + y.lambda_};
  }

  ExtAffElt inverse() const {
    WeylElt winv = w_.inverse();
    return {winv, -w_.act_on_coweight(lambda_)};
  }

  AffineRoot act(const AffineRoot& b) const {
    return {w_.act_on_root(b.finite), b.level - root_system()->pairing(lambda_, b.finite)};
  }

  friend bool operator==(const ExtAffElt& a, const ExtAffElt& b) { return a.w_ == b.w_ && a.lambda_ == b.lambda_; }
  friend bool operator<(const ExtAffElt& a, const ExtAffElt& b) {
    if (!(a.w_ == b.w_)) return a.w_ < b.w_;
    return a.lambda_ < b.lambda_;
  }

  std::string to_string() const { return word_string(w_.reduced_word()) + " t" + qseidel::to_string(lambda_); }

 private:
  WeylElt w_;
  IVec lambda_;
};

/// l(w t_l) = sum over positive roots a of |chi(w(a) < 0) + <l, a>|.
inline std::int64_t aff_length(const ExtAffElt& x) {
  const auto& rs = x.root_system();
  std::int64_t len = 0;
  for (const auto& a : rs->positive_roots()) {
    std::int64_t t = (is_negative(x.finite_part().act_on_root(a)) ? 1 : 0) + rs->pairing(x.translation_part(), a);
    len += t < 0 ? -t : t;
  }
  return len;
}

/// Number of positive real affine roots a + n delta sent to negative roots,
/// by direct enumeration of levels 0..max|<l,a>|+1.
inline std::int64_t inversion_count_oracle(const ExtAffElt& x) {
  const auto& rs = x.root_system();
  std::int64_t bound = 0;
  for (const auto& a : rs->positive_roots()) bound = std::max(bound, std::abs(rs->pairing(x.translation_part(), a)));
  bound += 1;
  std::int64_t count = 0;
  for (const auto& a : rs->positive_roots())
    for (const IVec& root : {a, IVec(-a)})
      for (std::int64_t n = 0; n <= bound; ++n) {
        AffineRoot b{root, n};
        if (!b.is_positive()) continue;
        if (!x.act(b).is_positive()) ++count;
      }
  return count;
}

/// Minimal length representative of x W: lambda antidominant and
/// <lambda, alpha_i> = 0 implies w(alpha_i) > 0.
inline bool is_waff_minus(const ExtAffElt& x) {
  const auto& rs = x.root_system();
  for (int i = 1; i <= rs->rank(); ++i) {
    auto p = x.translation_part()[i - 1];
    if (p > 0) return false;
    if (p == 0 && !is_positive(x.finite_part().act_on_root(rs->simple_root(i)))) return false;
  }
  return true;
}

/// For every alpha in R_P^+: <lambda, alpha> = 0 if w(alpha) > 0 and -1 if w(alpha) < 0.
/// The same test applies verbatim to extended elements.
inline bool is_wpaff(const ExtAffElt& x, const ParabolicSet& P) {
  const auto& rs = x.root_system();
  for (const auto& a : rs->positive_roots()) {
    if (!P.in_levi(a)) continue;
    auto want = is_negative(x.finite_part().act_on_root(a)) ? -1 : 0;
    if (rs->pairing(x.translation_part(), a) != want) return false;
  }
  return true;
}

/// (W_P)_aff: finite part in W_P and translation in Q^vee_P.
inline bool in_levi_affine(const ExtAffElt& x, const ParabolicSet& P) {
  if (!in_parabolic_subgroup(x.finite_part(), P)) return false;
  IVec c;
  if (!x.root_system()->coweight_to_coroot(x.translation_part(), c)) return false;
  for (int i : P.nodes())
    if (c[i - 1] != 0) return false;
  return true;
}

/// A central element: node 0 is the identity, node i in I_m is tau_i = v_i t_{-varpi_i^vee}.
struct CentralElt {
  int node = 0;
  bool is_identity() const { return node == 0; }
  friend auto operator<=>(const CentralElt&, const CentralElt&) = default;
};

struct HatDecomposition {
  CentralElt tau;
  ExtAffElt hat;  ///< in W_aff, with x = tau * hat
};

struct PetersonDecomposition {
  WeylElt w;  ///< in W^P
  IVec nu;    ///< antidominant, with y = w * pi_P(t_nu)
};

/// Extended affine Weyl group of a fixed root system, with the data that the
/// combinatorics needs precomputed once (v_i, tau_i, s_0, simple affine roots).
/// Immutable after construction.
class AffineWeyl {
 public:
  explicit AffineWeyl(RootSystemPtr rs) : rs_(std::move(rs)) {
    const int n = rs_->rank();
    v_.resize(n + 1);
    tau_.resize(n + 1);
    tau_[0] = ExtAffElt::identity(rs_);
    v_[0] = WeylElt::identity(rs_);
    for (int i : rs_->minuscule_nodes()) {
      v_[i] = v_element(rs_, i);
      tau_[i] = ExtAffElt(v_[i], -rs_->fundamental_coweight(i));
    }
    // s_0 = s_theta t_{-theta^vee}
    const auto theta_idx = static_cast<std::size_t>(rs_->positive_root_index(rs_->highest_root()));
    simple_.push_back(
        ExtAffElt(WeylElt::reflection(rs_, theta_idx), -rs_->coroot_to_coweight(rs_->highest_coroot())));
    for (int i = 1; i <= n; ++i) simple_.push_back(ExtAffElt(WeylElt::simple_reflection(rs_, i), IVec(n, 0)));
  }

  const RootSystemPtr& root_system() const { return rs_; }
  ExtAffElt identity() const { return ExtAffElt::identity(rs_); }
  ExtAffElt translation(IVec lambda) const { return ExtAffElt::translation(rs_, std::move(lambda)); }
  ExtAffElt finite(const WeylElt& w) const { return {w, IVec(rs_->rank(), 0)}; }

  const WeylElt& v(int i) const {
    check_central(i);
    return v_[i];
  }
  const ExtAffElt& tau(CentralElt z) const {
    check_central(z.node);
    return tau_[z.node];
  }

  /// Affine simple reflection s_i, i in {0..n}.
  const ExtAffElt& simple_reflection(int i) const {
    if (i < 0 || i > rs_->rank()) throw Error("affine node " + std::to_string(i) + " out of range");
    return simple_[i];
  }
  /// Affine simple root: alpha_0 = delta - theta, alpha_i for i >= 1.
  AffineRoot simple_root(int i) const {
    if (i == 0) return {-rs_->highest_root(), 1};
    return {rs_->simple_root(i), 0};
  }

  /// The central element whose class in P^vee/Q^vee is that of lambda:
  /// lambda = -varpi_i^vee + (element of Q^vee). Node 0 when lambda is in Q^vee.
  CentralElt minuscule_class(const IVec& lambda) const {
    if (rs_->in_coroot_lattice(lambda)) return {0};
    for (int i : rs_->minuscule_nodes())
      if (rs_->in_coroot_lattice(lambda + rs_->fundamental_coweight(i))) return {i};
    throw ConsistencyError("no minuscule representative for coweight " + to_string(lambda));
  }

  /// x = tau_{i(l)} * v_{f(i(l))} w t_{l - w^{-1}(varpi_{f(i(l))}^vee)}.
  HatDecomposition hat_decompose(const ExtAffElt& x) const {
    CentralElt z = minuscule_class(x.translation_part());
    if (z.is_identity()) return {z, x};
    const int fi = rs_->involution(z.node);
    const WeylElt& w = x.finite_part();
    ExtAffElt hat(v_[fi] * w,
                  x.translation_part() - w.inverse().act_on_coweight(rs_->fundamental_coweight(fi)));
    if (!hat.in_affine_weyl()) throw ConsistencyError("hat part not in W_aff for " + x.to_string());
    if (!(tau_[z.node] * hat == x)) throw ConsistencyError("hat decomposition does not reconstruct " + x.to_string());
    return {z, std::move(hat)};
  }

  CentralElt central_mul(CentralElt a, CentralElt b) const {
    auto d = hat_decompose(tau(a) * tau(b));
    if (!d.hat.is_identity())
      throw ConsistencyError("product of central elements has non-trivial hat part " + d.hat.to_string());
    return d.tau;
  }

  CentralElt central_inverse(CentralElt a) const {
    auto d = hat_decompose(tau(a).inverse());
    if (!d.hat.is_identity()) throw ConsistencyError("inverse of central element has non-trivial hat part");
    return d.tau;
  }

  /// tau(alpha_i) = alpha_{tau(i)} on the affine Dynkin diagram, i in {0..n}.
  int central_dynkin_action(CentralElt z, int i) const {
    AffineRoot img = tau(z).act(simple_root(i));
    for (int j = 0; j <= rs_->rank(); ++j)
      if (img == simple_root(j)) return j;
    throw ConsistencyError("central element does not permute affine simple roots");
  }

  /// Reduced word over {0..n} for x in W_aff, by peeling right descents.
  std::vector<int> reduced_word(const ExtAffElt& x) const {
    if (!x.in_affine_weyl()) throw Error("reduced_word_affine requires an element of W_aff: " + x.to_string());
    std::vector<int> word;
    ExtAffElt y = x;
    while (!y.is_identity()) {
      int i = 0;
      while (i <= rs_->rank() && y.act(simple_root(i)).is_positive()) ++i;
      if (i > rs_->rank()) throw ConsistencyError("no descent for non-identity element " + y.to_string());
      word.push_back(i);
      y = y * simple_[i];
    }
    return {word.rbegin(), word.rend()};
  }

  ExtAffElt from_word(const std::vector<int>& word) const {
    ExtAffElt x = identity();
    for (int i : word) x = x * simple_reflection(i);
    return x;
  }

  /// Coordinates of lambda on alpha_j^vee, j in I_P. Rejects lambda outside Q^vee.
  IVec eta_P(const IVec& lambda, const ParabolicSet& P) const {
    IVec c;
    if (!rs_->coweight_to_coroot(lambda, c)) throw Error("eta_P: coweight " + to_string(lambda) + " is not in Q^vee");
    IVec out;
    for (int j : P.nodes()) out.push_back(c[j - 1]);
    return out;
  }

  /// The (W^P)_aff factor x1 of x = x1 x2 with x2 in (W_P)_aff; extended
  /// elements are handled as tau * pi_P(hat).
  ExtAffElt pi_P(const ExtAffElt& x, const ParabolicSet& P) const {
    auto d = hat_decompose(x);
    return tau(d.tau) * pi_P_solve(d.hat, P);
  }

  /// Direct solver for the factorization, valid for any x in the extended group.
  ///
  /// For each u in W_P the candidate is x1 = (w u^{-1}) t_{u(lambda) - mu} with
  /// mu in Q^vee_P pinned by the simple-root equations of the membership test.
  ExtAffElt pi_P_solve(const ExtAffElt& x, const ParabolicSet& P) const {
    const auto levi = P.levi_nodes();
    if (levi.empty()) return x;
    const int k = static_cast<int>(levi.size());
    IMat m(k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m(a, b) = rs_->cartan()(levi[b] - 1, levi[a] - 1);
    const RationalInverse inv = invert(m);

    std::vector<ExtAffElt> found;
    for (const auto& u : enumerate_parabolic(rs_, P)) {
      WeylElt wp = x.finite_part() * u.inverse();
      IVec lu = u.act_on_coweight(x.translation_part());
      IVec rhs(k);
      for (int a = 0; a < k; ++a)
        rhs[a] = lu[levi[a] - 1] + (wp.has_right_descent(levi[a]) ? 1 : 0);
      IVec c;
      if (!inv.solve_integral(rhs, c)) continue;
      IVec lam = lu;
      for (int b = 0; b < k; ++b) lam = lam - c[b] * rs_->simple_coroot_as_coweight(levi[b]);
      ExtAffElt cand(wp, lam);
      if (is_wpaff(cand, P)) found.push_back(std::move(cand));
    }
    if (found.size() != 1)
      throw ConsistencyError("pi_P: expected a unique factorization of " + x.to_string() + ", found " +
                             std::to_string(found.size()));
    return found.front();
  }

  /// y = w * pi_P(t_nu) with w in W^P and nu antidominant. nu is determined
  /// modulo Q^vee_P; the returned nu is the highest antidominant element of its class.
  PetersonDecomposition peterson_decompose(const ExtAffElt& y, const ParabolicSet& P) const {
    if (!is_waff_minus(y)) throw Error("peterson_decompose: " + y.to_string() + " is not in W_aff^-");
    if (!is_wpaff(y, P)) throw Error("peterson_decompose: " + y.to_string() + " is not in (W^P)_aff");
    auto [w, levi_part] = coset_reduce(y.finite_part(), P);
    IVec nu = levi_part.inverse().act_on_coweight(y.translation_part());
    nu = highest_levi_antidominant(nu, P);
    for (auto p : nu)
      if (p > 0) throw ConsistencyError("peterson_decompose: no antidominant representative for " + y.to_string());
    if (!(finite(w) * pi_P(translation(nu), P) == y))
      throw ConsistencyError("peterson_decompose: recomposition failed for " + y.to_string());
    return {w, nu};
  }

 private:
  void check_central(int i) const {
    if (i != 0 && !rs_->is_minuscule(i))
      throw Error("node " + std::to_string(i) + " is not minuscule in " + rs_->name());
  }

  /// Highest element of nu + Q^vee_P that is antidominant for the Levi roots.
  IVec highest_levi_antidominant(IVec nu, const ParabolicSet& P) const {
    const auto levi = P.levi_nodes();
    // Descend until antidominant on the Levi simple roots.
    for (bool changed = true; changed;) {
      changed = false;
      for (int j : levi)
        if (nu[j - 1] > 0) {
          nu = nu - rs_->simple_coroot_as_coweight(j);
          changed = true;
        }
    }
    // Climb by positive Levi coroots while staying antidominant; a dominant
    // element that is not minimal in its class always admits such a step.
    std::vector<IVec> levi_coroots;
    for (std::size_t k = 0; k < rs_->num_positive_roots(); ++k)
      if (P.in_levi(rs_->positive_roots()[k]))
        levi_coroots.push_back(rs_->coroot_to_coweight(rs_->positive_coroots()[k]));
    auto antidominant = [&](const IVec& v) {
      for (int j : levi)
        if (v[j - 1] > 0) return false;
      return true;
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& b : levi_coroots) {
        IVec up = nu + b;
        if (antidominant(up)) {
          nu = std::move(up);
          changed = true;
          break;
        }
      }
    }
    return nu;
  }

  RootSystemPtr rs_;
  std::vector<WeylElt> v_;
  std::vector<ExtAffElt> tau_;
  std::vector<ExtAffElt> simple_;
};

}  // namespace qseidel
