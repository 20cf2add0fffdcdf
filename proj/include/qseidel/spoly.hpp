#pragma once

/// @file spoly.hpp
/// @brief Integer polynomials in the fundamental weights varpi_1..varpi_n (the ring S).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qseidel/lattice.hpp"

namespace qseidel {

class SPoly {
 public:
  using Monomial = IVec;  ///< exponent vector

  SPoly() = default;
  explicit SPoly(int nvars) : nvars_(nvars) {}

  static SPoly constant(int nvars, std::int64_t c) {
    SPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
  }
  static SPoly variable(int nvars, int k) {  // varpi_k, 1-based
    SPoly p(nvars);
    Monomial m(nvars, 0);
    m.at(k - 1) = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
  }
  /// sum_k coeffs[k] varpi_{k+1}, i.e. a weight in fundamental-weight coordinates.
  static SPoly linear(const IVec& coeffs) {
    SPoly p(static_cast<int>(coeffs.size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(unit(p.nvars_, static_cast<int>(k)), coeffs[k]);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  void add_term(const Monomial& m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Value at varpi = 0.
  std::int64_t constant_term() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? 0 : it->second;
  }

  SPoly& operator+=(const SPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SPoly& operator-=(const SPoly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator-(SPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend SPoly operator*(std::int64_t k, SPoly a) {
    if (k == 0) return SPoly(a.nvars_);
    for (auto& [m, c] : a.terms_) c = detail::checked_mul(k, c);
    return a;
  }
  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, detail::checked_mul(ca, cb));
    return r;
  }
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.terms_ == b.terms_; }

  /// Substitutes varpi_k -> images[k] (each a linear form given in weight coordinates).
  SPoly substitute_linear(const std::vector<IVec>& images) const {
    std::vector<SPoly> lin;
    for (const auto& v : images) lin.push_back(linear(v));
    SPoly r = SPoly(nvars_);
    for (const auto& [m, c] : terms_) {
      SPoly t = constant(nvars_, c);
      for (int k = 0; k < nvars_; ++k)
        for (std::int64_t e = 0; e < m[k]; ++e) t = t * lin[k];
      r += t;
    }
    return r;
  }

  /// Text form with variables w1..wn, e.g. "2*w1 - w2^2 + 3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest degree first, constants last.
    std::vector<std::pair<Monomial, std::int64_t>> ts(terms_.rbegin(), terms_.rend());
    for (const auto& [m, c] : ts) {
      std::string mono;
      for (int k = 0; k < nvars_; ++k) {
        if (m[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "w" + std::to_string(k + 1);
        if (m[k] > 1) mono += "^" + std::to_string(m[k]);
      }
      std::int64_t a = c < 0 ? -c : c;
      if (first)
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      if (mono.empty())
        out += std::to_string(a);
      else if (a == 1)
        out += mono;
      else
        out += std::to_string(a) + "*" + mono;
      first = false;
    }
    return out;
  }

 private:
  static Monomial unit(int n, int k) {
    Monomial m(n, 0);
    m[k] = 1;
    return m;
  }
  void adopt(const SPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
  }

  int nvars_ = 0;
  std::map<Monomial, std::int64_t> terms_;
};

}  // namespace qseidel
