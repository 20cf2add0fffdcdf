#pragma once

/// @file lattice.hpp
/// @brief Small exact integer/rational linear algebra used by the root system code.
///
/// Everything here works on dense matrices of rank at most 8, so nothing is
/// clever: plain row-major storage and Gauss-Jordan elimination over exact
/// rationals with overflow-checked 64-bit arithmetic.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseidel {

/// Raised on invalid user input (bad type string, node out of range, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant fails. Always a bug, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using IVec = std::vector<std::int64_t>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in multiplication");
  return r;
}

}  // namespace detail

inline bool is_zero(const IVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

/// Nonzero with all coordinates >= 0.
inline bool is_positive(const IVec& v) {
  bool nonzero = false;
  for (auto x : v) {
    if (x < 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

inline bool is_negative(const IVec& v) {
  bool nonzero = false;
  for (auto x : v) {
    if (x > 0) return false;
    if (x != 0) nonzero = true;
  }
  return nonzero;
}

inline std::int64_t dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in pairing");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = detail::checked_add(s, detail::checked_mul(a[i], b[i]));
  return s;
}

inline IVec operator+(IVec a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = detail::checked_add(a[i], b[i]);
  return a;
}

inline IVec operator-(IVec a, const IVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = detail::checked_add(a[i], -b[i]);
  return a;
}

inline IVec operator-(IVec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline IVec operator*(std::int64_t k, IVec a) {
  for (auto& x : a) x = detail::checked_mul(k, x);
  return a;
}

inline std::string to_string(const IVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

/// Square integer matrix, row-major.
class IMat {
 public:
  IMat() = default;
  explicit IMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

  static IMat identity(int n) {
    IMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  IVec row(int i) const { return IVec(a_.begin() + i * n_, a_.begin() + (i + 1) * n_); }
  IVec col(int j) const {
    IVec c(n_);
    for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IMat transpose() const {
    IMat t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IVec apply(const IVec& v) const {
    if (static_cast<int>(v.size()) != n_) throw Error("dimension mismatch in matrix action");
    IVec r(n_, 0);
    for (int i = 0; i < n_; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n_; ++j) {
        auto e = (*this)(i, j);
        if (e != 0 && v[j] != 0) s += e * v[j];
      }
      r[i] = s;
    }
    return r;
  }

  friend IMat operator*(const IMat& a, const IMat& b) {
    IMat c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        auto e = a(i, k);
        if (e == 0) continue;
        for (int j = 0; j < a.n_; ++j) c(i, j) += e * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IMat&, const IMat&) = default;
  friend auto operator<=>(const IMat& a, const IMat& b) { return a.a_ <=> b.a_; }

  const std::vector<std::int64_t>& data() const { return a_; }

 private:
  int n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Exact rational with normalized sign and gcd.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw Error("division by zero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  friend Rational operator+(Rational a, Rational b) {
    using detail::checked_add;
    using detail::checked_mul;
    return {checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den)};
  }
  friend Rational operator-(Rational a, Rational b) { return a + Rational(-b.num, b.den); }
  friend Rational operator*(Rational a, Rational b) {
    return {detail::checked_mul(a.num, b.num), detail::checked_mul(a.den, b.den)};
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw Error("division by zero");
    return {detail::checked_mul(a.num, b.den), detail::checked_mul(a.den, b.num)};
  }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Inverse of an invertible integer matrix, returned as (numerators, common denominator).
struct RationalInverse {
  IMat num;
  std::int64_t den = 1;

  /// Solves m x = b; false when x is not integral.
  bool solve_integral(const IVec& b, IVec& out) const {
    out = num.apply(b);
    for (auto& x : out) {
      if (x % den != 0) return false;
      x /= den;
    }
    return true;
  }
};

inline RationalInverse invert(const IMat& m) {
  const int n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = Rational(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c].num == 0) ++p;
    if (p == n) throw ConsistencyError("singular matrix");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x = x / piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].num == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - f * a[c][k];
    }
  }
  std::int64_t den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den = std::lcm(den, a[i][n + j].den);
  RationalInverse inv{IMat(n), den};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.num(i, j) = a[i][n + j].num * (den / a[i][n + j].den);
  return inv;
}

}  // namespace qseidel
