#pragma once

/// @file qh.hpp
/// @brief Localized (equivariant) quantum cohomology of G/P as a free S[q^{+-1}]-module.
///
/// A class is a finite sum of coeff * q^d * sigma(w), w in W^P, d over I_P
/// in increasing node order. Only divisor (Chevalley) and Seidel
/// multiplication operators are provided.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qseidel/affine.hpp"
#include "qseidel/spoly.hpp"

namespace qseidel {

struct QKey {
  WeylElt w;
  IVec q;
  friend bool operator<(const QKey& a, const QKey& b) {
    if (!(a.w == b.w)) return a.w < b.w;
    return a.q < b.q;
  }
  friend bool operator==(const QKey& a, const QKey& b) { return a.w == b.w && a.q == b.q; }
};

class QHClass {
 public:
  using Terms = std::map<QKey, SPoly>;

  QHClass(RootSystemPtr rs, ParabolicSet P) : rs_(std::move(rs)), P_(std::move(P)) {}

  static QHClass unit(const RootSystemPtr& rs, const ParabolicSet& P) {
    return basis(rs, P, WeylElt::identity(rs), IVec(P.nodes().size(), 0));
  }
  static QHClass basis(const RootSystemPtr& rs, const ParabolicSet& P, const WeylElt& w, IVec q,
                       const SPoly& coeff = SPoly()) {
    QHClass c(rs, P);
    c.add(w, std::move(q), coeff.is_zero() && coeff.nvars() == 0 ? SPoly::constant(rs->rank(), 1) : coeff);
    return c;
  }

  const RootSystemPtr& root_system() const { return rs_; }
  const ParabolicSet& parabolic() const { return P_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const WeylElt& w, IVec q, const SPoly& c) {
    if (!is_minimal_coset_rep(w, P_)) throw Error("sigma index " + word_string(w.reduced_word()) + " is not in W^P");
    if (q.size() != P_.nodes().size()) throw Error("q-exponent has wrong length " + std::to_string(q.size()));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(QKey{w, std::move(q)}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  QHClass& operator+=(const QHClass& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k.w, k.q, c);
    return *this;
  }
  QHClass& operator-=(const QHClass& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add(k.w, k.q, -c);
    return *this;
  }
  friend QHClass operator+(QHClass a, const QHClass& b) { return a += b; }
  friend QHClass operator-(QHClass a, const QHClass& b) { return a -= b; }
  friend bool operator==(const QHClass& a, const QHClass& b) {
    return a.rs_->name() == b.rs_->name() && a.P_ == b.P_ && a.terms_ == b.terms_;
  }

  QHClass scale(const SPoly& s) const {
    QHClass r(rs_, P_);
    for (const auto& [k, c] : terms_) r.add(k.w, k.q, s * c);
    return r;
  }
  QHClass q_shift(const IVec& d) const {
    QHClass r(rs_, P_);
    for (const auto& [k, c] : terms_) r.add(k.w, k.q + d, c);
    return r;
  }
  /// Evaluates every coefficient at varpi = 0.
  QHClass specialize_noneq() const {
    QHClass r(rs_, P_);
    for (const auto& [k, c] : terms_) r.add(k.w, k.q, SPoly::constant(rs_->rank(), c.constant_term()));
    return r;
  }

  void check_compatible(const QHClass& o) const {
    if (rs_->name() != o.rs_->name() || !(P_ == o.P_)) throw Error("QHClass root system or parabolic mismatch");
  }

 private:
  RootSystemPtr rs_;
  ParabolicSet P_;
  Terms terms_;
};

/// Divisor and Seidel operators for a fixed (root system, parabolic).
class QuantumOps {
 public:
  QuantumOps(RootSystemPtr rs, ParabolicSet P) : aff_(rs), P_(std::move(P)) {
    for (std::size_t k = 0; k < rs->num_positive_roots(); ++k) {
      const IVec& a = rs->positive_roots()[k];
      if (P_.in_levi(a)) continue;
      ChevRoot cr;
      cr.refl = WeylElt::reflection(rs, k);
      cr.coroot = rs->positive_coroots()[k];
      for (const auto& b : rs->positive_roots())
        if (!P_.in_levi(b)) cr.n_alpha += rs->root_coroot_pairing(b, cr.coroot);
      for (int j : P_.nodes()) cr.q.push_back(cr.coroot[j - 1]);
      chev_.push_back(std::move(cr));
    }
  }

  const RootSystemPtr& root_system() const { return aff_.root_system(); }
  const ParabolicSet& parabolic() const { return P_; }
  const AffineWeyl& affine() const { return aff_; }

  QHClass unit() const { return QHClass::unit(root_system(), P_); }
  QHClass sigma(const WeylElt& w, IVec q = {}) const {
    if (q.empty()) q.assign(P_.nodes().size(), 0);
    return QHClass::basis(root_system(), P_, coset_reduce(w, P_).rep, std::move(q));
  }

  /// q-exponent eta_P(varpi_i^vee - w^{-1} varpi_i^vee).
  IVec seidel_exponent(int i, const WeylElt& w) const {
    const auto& rs = root_system();
    const IVec pi = rs->fundamental_coweight(i);
    IVec diff = pi - w.inverse().act_on_coweight(pi);
    if (!rs->in_coroot_lattice(diff))
      throw ConsistencyError("varpi^vee - w^{-1} varpi^vee not in Q^vee for node " + std::to_string(i));
    return aff_.eta_P(diff, P_);
  }

  /// sigma(v_i) * c, term by term: q^d sigma(w) -> q^{d + eta_P(...)} sigma(pi(v_i w)).
  QHClass seidel_multiply(int i, const QHClass& c) const {
    const WeylElt& v = aff_.v(i);
    if (i == 0) return c;
    QHClass r(root_system(), P_);
    for (const auto& [k, coeff] : c.terms())
      r.add(coset_reduce(v * k.w, P_).rep, k.q + seidel_exponent(i, k.w), coeff);
    return r;
  }

  /// Image of z under the Seidel representation: tau_i (the class of -varpi_i^vee)
  /// goes to sigma(v_{f(i)}).
  QHClass seidel_element(CentralElt z) const {
    if (z.is_identity()) return unit();
    return sigma(aff_.v(root_system()->involution(z.node)));
  }
  /// The node whose Seidel operator realizes multiplication by seidel_element(z).
  int seidel_node(CentralElt z) const { return z.is_identity() ? 0 : root_system()->involution(z.node); }

  /// Quantum Chevalley rule for sigma(s_j) * c, j in I_P.
  QHClass chevalley_multiply(int j, const QHClass& c, bool equivariant = false) const {
    if (!P_.contains(j)) throw Error("chevalley_multiply: node " + std::to_string(j) + " is not in I_P");
    const auto& rs = root_system();
    const int n = rs->rank();
    QHClass r(rs, P_);
    for (const auto& [k, coeff] : c.terms()) {
      const WeylElt& w = k.w;
      for (const auto& cr : chev_) {
        const std::int64_t m = cr.coroot[j - 1];
        if (m == 0) continue;
        WeylElt ws = w * cr.refl;
        if (ws.length() == w.length() + 1 && is_minimal_coset_rep(ws, P_)) r.add(ws, k.q, m * coeff);
        WeylElt red = coset_reduce(ws, P_).rep;
        if (red.length() == w.length() + 1 - cr.n_alpha) r.add(red, k.q + cr.q, m * coeff);
      }
      if (equivariant) {
        IVec e(n, 0);
        e[j - 1] = 1;
        IVec lin = e - w.act_on_weight(e);
        r.add(w, k.q, SPoly::linear(lin) * coeff);
      }
    }
    return r;
  }

  /// Peterson dictionary: xi_y xi_{pi_P(t_mu)}^{-1} -> q^{eta_P(lambda - mu)} sigma(w),
  /// where y = w pi_P(t_lambda).
  QHClass psi_P(const ExtAffElt& y, const IVec& mu) const {
    const auto& rs = root_system();
    if (!y.in_affine_weyl()) throw Error("psi_P: " + y.to_string() + " is not in W_aff");
    if (!rs->in_coroot_lattice(mu)) throw Error("psi_P: mu " + to_string(mu) + " is not in Q^vee");
    for (auto p : mu)
      if (p > 0) throw Error("psi_P: mu " + to_string(mu) + " is not antidominant");
    auto d = aff_.peterson_decompose(y, P_);
    return sigma(d.w, aff_.eta_P(d.nu - mu, P_));
  }

  struct OrbitStep {
    IVec q;
    WeylElt w;
  };
  /// Repeated Seidel multiplication of the unit class until sigma(e) returns.
  std::vector<OrbitStep> seidel_orbit(int i, std::size_t max_steps = 1024) const {
    std::vector<OrbitStep> out;
    QHClass c = unit();
    for (std::size_t s = 0; s < max_steps; ++s) {
      c = seidel_multiply(i, c);
      if (c.terms().size() != 1) throw ConsistencyError("Seidel orbit left the basis");
      const auto& k = c.terms().begin()->first;
      out.push_back({k.q, k.w});
      if (k.w.is_identity()) return out;
    }
    throw ConsistencyError("Seidel orbit did not close");
  }

 private:
  struct ChevRoot {
    WeylElt refl;
    IVec coroot;
    IVec q;
    std::int64_t n_alpha = 0;
  };

  AffineWeyl aff_;
  ParabolicSet P_;
  std::vector<ChevRoot> chev_;
};

}  // namespace qseidel
