#pragma once

/// @file nilhecke.hpp
/// @brief Extended affine nil Hecke ring Z x| A_Aff and its action on the xi-classes.
///
/// Elements are finite sums of tau (x) c A_x with tau central, x in W_aff and
/// c in S (scalars to the left of A_x). Multiplication uses
///   (tau (x) a)(sigma (x) b) = tau sigma (x) sigma^{-1}(a) b,
///   A_i f = (s_i f) A_i + d_i(f),   A_x A_y = A_{xy} or 0,
/// with the imaginary root sent to zero, so alpha_0 acts on S as -theta.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qseidel/affine.hpp"
#include "qseidel/spoly.hpp"

namespace qseidel {

inline constexpr std::size_t kDefaultExpansionLength = 8;

/// Basis key (tau, x) for tau (x) A_x.
struct NhKey {
  CentralElt tau;
  ExtAffElt x;
  friend bool operator<(const NhKey& a, const NhKey& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.x < b.x;
  }
  friend bool operator==(const NhKey& a, const NhKey& b) { return a.tau == b.tau && a.x == b.x; }
};

class NilHeckeElt {
 public:
  using Terms = std::map<NhKey, SPoly>;

  NilHeckeElt() = default;
  explicit NilHeckeElt(Terms t) : terms_(std::move(t)) { prune(); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const NhKey& k, const SPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NilHeckeElt& operator+=(const NilHeckeElt& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  NilHeckeElt& operator-=(const NilHeckeElt& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend NilHeckeElt operator+(NilHeckeElt a, const NilHeckeElt& b) { return a += b; }
  friend NilHeckeElt operator-(NilHeckeElt a, const NilHeckeElt& b) { return a -= b; }
  friend bool operator==(const NilHeckeElt& a, const NilHeckeElt& b) { return a.terms_ == b.terms_; }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  Terms terms_;
};

/// Formal S-combination of the classes xi~_x, x in the extended W_aff^-.
class XiVector {
 public:
  using Terms = std::map<ExtAffElt, SPoly>;

  void add(const ExtAffElt& x, const SPoly& c) {
    if (!is_waff_minus(x)) throw Error("xi-class index " + x.to_string() + " is not in W_aff^-");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const XiVector& a, const XiVector& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

class NilHecke {
 public:
  explicit NilHecke(RootSystemPtr rs, std::size_t max_expansion_length = kDefaultExpansionLength)
      : aff_(rs), max_len_(max_expansion_length) {
    const int n = rs->rank();
    const IMat& C = rs->cartan();
    beta_.push_back(-C.apply(rs->highest_root()));
    coroot_.push_back(-rs->highest_coroot());
    for (int i = 1; i <= n; ++i) {
      beta_.push_back(rs->simple_root_as_weight(i));
      coroot_.push_back(rs->simple_root(i));
    }
    for (int i = 0; i <= n; ++i) {
      std::vector<IVec> img;
      for (int k = 0; k < n; ++k) {
        IVec e(n, 0);
        e[k] = 1;
        img.push_back(e - coroot_[i][k] * beta_[i]);
      }
      reflect_.push_back(std::move(img));
    }
  }

  const AffineWeyl& affine() const { return aff_; }
  const RootSystemPtr& root_system() const { return aff_.root_system(); }
  int nvars() const { return root_system()->rank(); }

  // -- constructors -------------------------------------------------------

  NilHeckeElt one() const { return scalar(SPoly::constant(nvars(), 1)); }
  NilHeckeElt scalar(const SPoly& c) const {
    NilHeckeElt r;
    r.add({{0}, aff_.identity()}, c);
    return r;
  }
  NilHeckeElt A(int i) const { return A_tilde(aff_.simple_reflection(i)); }
  /// A~_x = tau (x) A_{hat x}.
  NilHeckeElt A_tilde(const ExtAffElt& x) const {
    auto d = aff_.hat_decompose(x);
    NilHeckeElt r;
    r.add({d.tau, d.hat}, SPoly::constant(nvars(), 1));
    return r;
  }
  NilHeckeElt central(CentralElt z) const {
    NilHeckeElt r;
    r.add({z, aff_.identity()}, SPoly::constant(nvars(), 1));
    return r;
  }
  /// The scalar image of the affine simple root alpha_i (alpha_0 -> -theta).
  SPoly simple_root_scalar(int i) const { return SPoly::linear(beta_.at(static_cast<std::size_t>(i))); }

  // -- ring structure -----------------------------------------------------

  NilHeckeElt mul(const NilHeckeElt& a, const NilHeckeElt& b) const {
    NilHeckeElt r;
    for (const auto& [kb, cb] : b.terms()) {
      const CentralElt sigma = kb.tau;
      const CentralElt sigma_inv = aff_.central_inverse(sigma);
      for (const auto& [ka, ca] : a.terms()) {
        const CentralElt prod = aff_.central_mul(ka.tau, sigma);
        const SPoly c = act_central(sigma_inv, ca);
        const ExtAffElt x = conjugate(sigma_inv, ka.x);
        for (const auto& [z, e] : move_scalar_left(x, cb)) {
          auto zy = nil_coxeter_product(z, kb.x);
          if (zy) r.add({prod, *zy}, c * e);
        }
      }
    }
    return r;
  }

  /// Image of x under the multiplicative embedding of the extended affine
  /// Weyl group: tau (x) prod_k (1 - alpha_{i_k} A_{i_k}) along a reduced word of hat x.
  NilHeckeElt embed_group(const ExtAffElt& x) const {
    auto d = aff_.hat_decompose(x);
    auto word = aff_.reduced_word(d.hat);
    if (word.size() > max_len_)
      throw Error("embed_group: length " + std::to_string(word.size()) + " exceeds expansion cap " +
                  std::to_string(max_len_));
    NilHeckeElt r = central(d.tau);
    for (int i : word) {
      NilHeckeElt s = one();
      s.add({{0}, aff_.simple_reflection(i)}, -simple_root_scalar(i));
      r = mul(r, s);
    }
    return r;
  }

  /// Reduction modulo J~: keep the terms whose A-index is in W_aff^-.
  NilHeckeElt mod_Jtilde(const NilHeckeElt& a) const {
    NilHeckeElt r;
    for (const auto& [k, c] : a.terms())
      if (no_finite_right_descent(k.x)) r.add(k, c);
    return r;
  }

  // -- action on xi-classes -------------------------------------------------

  /// Converts tau (x) f A_z (mod J~) to tau(f) xi~_{tau z}.
  XiVector to_xi(const NilHeckeElt& a) const {
    XiVector v;
    const NilHeckeElt reduced = mod_Jtilde(a);
    for (const auto& [k, c] : reduced.terms()) v.add(aff_.tau(k.tau) * k.x, act_central(k.tau, c));
    return v;
  }
  /// Inverse of to_xi: c xi~_y -> (1 (x) c) A~_y.
  NilHeckeElt from_xi(const XiVector& v) const {
    NilHeckeElt r;
    for (const auto& [y, c] : v.terms()) r += mul(scalar(c), A_tilde(y));
    return r;
  }

  /// A~_x . v using the explicit rule
  ///   A~_x xi~_y = xi~_{xy} if l(xy) = l(x) + l(y) and xy in W~_aff^-, else 0,
  /// after moving A~_x across the S-coefficients of v.
  XiVector act_on_xi(const ExtAffElt& x, const XiVector& v) const {
    XiVector out;
    for (const auto& [y, c] : v.terms()) {
      const NilHeckeElt moved = mul(A_tilde(x), scalar(c));
      for (const auto& [k, f] : moved.terms()) {
        ExtAffElt xk = aff_.tau(k.tau) * k.x;
        ExtAffElt xy = xk * y;
        if (aff_length(xy) == aff_length(xk) + aff_length(y) && is_waff_minus(xy))
          out.add(xy, act_central(k.tau, f));
      }
    }
    return out;
  }

  /// Module action through the ring: a . v = (a * from_xi(v)) mod J~.
  XiVector act_via_ring(const NilHeckeElt& a, const XiVector& v) const { return to_xi(mul(a, from_xi(v))); }

  // -- helpers exposed for tests --------------------------------------------

  /// The automorphism of S induced by a central element (its finite part).
  SPoly act_central(CentralElt z, const SPoly& c) const {
    if (z.is_identity()) return c;
    const WeylElt& v = aff_.tau(z).finite_part();
    std::vector<IVec> img;
    for (int k = 0; k < nvars(); ++k) img.push_back(v.on_weights().col(k));
    return c.substitute_linear(img);
  }

  /// z x z^{-1}, the automorphism on A-indices.
  ExtAffElt conjugate(CentralElt z, const ExtAffElt& x) const {
    if (z.is_identity()) return x;
    const ExtAffElt& t = aff_.tau(z);
    return t * x * t.inverse();
  }

  /// s_i acting on S (i in {0..n}).
  SPoly reflect(int i, const SPoly& c) const { return c.substitute_linear(reflect_.at(static_cast<std::size_t>(i))); }

  /// Divided difference d_i(f) = (f - s_i f) / alpha_i, computed by the
  /// twisted Leibniz rule d_i(varpi_k m) = s_i(varpi_k) d_i(m) + <varpi_k, alpha_i^vee> m.
  SPoly divided_difference(int i, const SPoly& f) const {
    SPoly r(nvars());
    for (const auto& [m, c] : f.terms()) r += c * dd_monomial(i, m);
    return r;
  }

 private:
  SPoly dd_monomial(int i, SPoly::Monomial m) const {
    const int n = nvars();
    int k = 0;
    while (k < n && m[k] == 0) ++k;
    if (k == n) return SPoly(n);
    m[k] -= 1;
    SPoly rest(n);
    rest.add_term(m, 1);
    SPoly sk = SPoly::linear(reflect_[static_cast<std::size_t>(i)][k]);
    return sk * dd_monomial(i, m) + coroot_[static_cast<std::size_t>(i)][k] * rest;
  }

  /// A_x f = sum_z e_z A_z, applying A_i f = (s_i f) A_i + d_i f letter by letter.
  std::map<ExtAffElt, SPoly> move_scalar_left(const ExtAffElt& x, const SPoly& f) const {
    std::map<ExtAffElt, SPoly> state{{aff_.identity(), f}};
    auto word = aff_.reduced_word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const int i = *it;
      std::map<ExtAffElt, SPoly> next;
      auto put = [&](const ExtAffElt& z, const SPoly& c) {
        if (c.is_zero()) return;
        auto [pos, ins] = next.emplace(z, c);
        if (!ins) {
          pos->second += c;
          if (pos->second.is_zero()) next.erase(pos);
        }
      };
      for (const auto& [u, e] : state) {
        if (left_multiplication_increases(i, u)) put(aff_.simple_reflection(i) * u, reflect(i, e));
        put(u, divided_difference(i, e));
      }
      state = std::move(next);
    }
    return state;
  }

  /// A_z A_y, built letter by letter from a reduced word of z.
  std::optional<ExtAffElt> nil_coxeter_product(const ExtAffElt& z, const ExtAffElt& y) const {
    auto word = aff_.reduced_word(z);
    ExtAffElt u = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (!left_multiplication_increases(*it, u)) return std::nullopt;
      u = aff_.simple_reflection(*it) * u;
    }
    return u;
  }

  /// l(s_i u) > l(u) iff u^{-1}(alpha_i) > 0.
  bool left_multiplication_increases(int i, const ExtAffElt& u) const {
    return u.inverse().act(aff_.simple_root(i)).is_positive();
  }

  /// x(alpha_j) > 0 for every finite simple root.
  bool no_finite_right_descent(const ExtAffElt& x) const {
    for (int j = 1; j <= nvars(); ++j)
      if (!x.act(aff_.simple_root(j)).is_positive()) return false;
    return true;
  }

  AffineWeyl aff_;
  std::size_t max_len_;
  std::vector<IVec> beta_;                  // scalar images of affine simple roots (weight coords)
  std::vector<IVec> coroot_;                // <varpi_k, alpha_i^vee> as vectors over k
  std::vector<std::vector<IVec>> reflect_;  // s_i(varpi_k) in weight coords
};

}  // namespace qseidel
