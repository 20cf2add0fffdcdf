#pragma once

/// @file rootsys.hpp
/// @brief Finite crystallographic root systems of simple type, Bourbaki numbering.
///
/// Coordinate conventions used throughout the library:
///   - roots        : simple-root coordinates      alpha = sum a_i alpha_i
///   - coroots      : simple-coroot coordinates    alpha^vee = sum c_i alpha_i^vee
///   - weights      : fundamental-weight coords    mu = sum m_i varpi_i
///   - coweights    : fundamental-coweight coords  lambda = sum l_i varpi_i^vee
///
/// With these choices <lambda, alpha> = sum_i l_i a_i, the Cartan matrix entry
/// cartan(i, j) = <alpha_j, alpha_i^vee>, the simple root alpha_j in weight
/// coordinates is column j of the Cartan matrix, and alpha_j^vee in coweight
/// coordinates is row j. Node indices exposed to callers are 1-based.

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qseidel/lattice.hpp"

namespace qseidel {

class RootSystem {
 public:
  /// Builds the root system of type (letter, rank). Throws Error for invalid pairs.
  RootSystem(char letter, int rank);

  char type_letter() const { return letter_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, letter_) + std::to_string(rank_); }

  const IMat& cartan() const { return cartan_; }

  /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  /// Coroot of positive_roots()[k], in simple-coroot coordinates.
  const std::vector<IVec>& positive_coroots() const { return pos_coroots_; }
  std::size_t num_positive_roots() const { return pos_roots_.size(); }

  const IVec& highest_root() const { return theta_; }
  const IVec& highest_coroot() const { return theta_coroot_; }

  /// I_m: nodes whose fundamental coweight is minuscule (1-based, increasing).
  const std::vector<int>& minuscule_nodes() const { return minuscule_; }
  bool is_minuscule(int i) const { return std::find(minuscule_.begin(), minuscule_.end(), i) != minuscule_.end(); }

  /// Diagram involution alpha_i -> -w0(alpha_i).
  int involution(int i) const {
    check_node(i);
    return involution_[i - 1];
  }

  /// Index into positive_roots() if r is a positive root, -1 otherwise.
  int positive_root_index(const IVec& r) const {
    auto it = pos_index_.find(r);
    return it == pos_index_.end() ? -1 : it->second;
  }
  bool is_root(const IVec& r) const {
    return positive_root_index(r) >= 0 || positive_root_index(-r) >= 0;
  }

  IVec simple_root(int i) const {
    check_node(i);
    IVec v(rank_, 0);
    v[i - 1] = 1;
    return v;
  }
  /// Fundamental coweight varpi_i^vee in coweight coordinates.
  IVec fundamental_coweight(int i) const { return simple_root(i); }
  /// alpha_i^vee in fundamental-coweight coordinates.
  IVec simple_coroot_as_coweight(int i) const {
    check_node(i);
    return cartan_.row(i - 1);
  }
  /// alpha_i in fundamental-weight coordinates.
  IVec simple_root_as_weight(int i) const {
    check_node(i);
    return cartan_.col(i - 1);
  }

  /// <lambda, alpha> for a coweight (fundamental-coweight coords) and root (simple-root coords).
  std::int64_t pairing(const IVec& coweight, const IVec& root) const {
    if (static_cast<int>(coweight.size()) != rank_ || static_cast<int>(root.size()) != rank_)
      throw Error("pairing: dimension mismatch (rank " + std::to_string(rank_) + ", got " +
                  std::to_string(coweight.size()) + " and " + std::to_string(root.size()) + ")");
    return dot(coweight, root);
  }

  /// <alpha, beta^vee> for roots/coroots in their simple coordinates.
  std::int64_t root_coroot_pairing(const IVec& root, const IVec& coroot) const {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) s += root[j] * coroot[k] * cartan_(k, j);
    return s;
  }

  /// Converts simple-coroot coordinates to fundamental-coweight coordinates.
  IVec coroot_to_coweight(const IVec& c) const { return cartan_.transpose().apply(c); }

  /// Converts a coweight to simple-coroot coordinates; false if not in Q^vee.
  bool coweight_to_coroot(const IVec& lambda, IVec& out) const { return to_coroot_.solve_integral(lambda, out); }

  bool in_coroot_lattice(const IVec& lambda) const {
    IVec tmp;
    return coweight_to_coroot(lambda, tmp);
  }

  void check_node(int i) const {
    if (i < 1 || i > rank_)
      throw Error("node " + std::to_string(i) + " out of range for " + name());
  }

 private:
  void build_cartan();
  void build_roots();
  void build_involution();
  void build_minuscule();

  char letter_;
  int rank_;
  IMat cartan_;
  std::vector<IVec> pos_roots_;
  std::vector<IVec> pos_coroots_;
  std::map<IVec, int> pos_index_;
  IVec theta_;
  IVec theta_coroot_;
  std::vector<int> minuscule_;
  std::vector<int> involution_;
  RationalInverse to_coroot_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr make_root_system(char letter, int rank) { return std::make_shared<const RootSystem>(letter, rank); }

/// Parses strings such as "A3" or "e6".
inline RootSystemPtr parse_root_system(std::string_view s) {
  if (s.size() < 2) throw Error("invalid root system '" + std::string(s) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (char c : s.substr(1)) {
    if (c < '0' || c > '9') throw Error("invalid root system '" + std::string(s) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw Error("invalid root system '" + std::string(s) + "'");
  }
  return make_root_system(letter, rank);
}

// ---------------------------------------------------------------------------

inline RootSystem::RootSystem(char letter, int rank) : letter_(letter), rank_(rank) {
  const std::string pair = "(" + std::string(1, letter) + "," + std::to_string(rank) + ")";
  bool ok = false;
  switch (letter) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) throw Error("invalid root system type/rank pair " + pair);
  if (rank > 8) throw Error("rank above 8 is not supported: " + pair);
  build_cartan();
  to_coroot_ = invert(cartan_.transpose());
  build_roots();
  build_involution();
  build_minuscule();
}

inline void RootSystem::build_cartan() {
  // Gram matrix (alpha_i, alpha_j) scaled to integers, then
  // cartan(i, j) = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  const int n = rank_;
  IMat g(n);
  auto edge = [&](int i, int j, std::int64_t v) {
    g(i - 1, j - 1) = v;
    g(j - 1, i - 1) = v;
  };
  switch (letter_) {
    case 'A':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i < n; ++i) edge(i, i + 1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
      g(n - 1, n - 1) = 1;
      for (int i = 1; i < n; ++i) edge(i, i + 1, -1);
      break;
    case 'C':  // alpha_n long
      for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 2;
      g(n - 1, n - 1) = 4;
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1);
      edge(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      for (int i = 1; i < n - 1; ++i) edge(i, i + 1, -1);
      edge(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 2;
      edge(1, 3, -1);
      edge(2, 4, -1);
      for (int i = 3; i < n; ++i) edge(i, i + 1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      g(0, 0) = g(1, 1) = 4;
      g(2, 2) = g(3, 3) = 2;
      edge(1, 2, -2);
      edge(2, 3, -2);
      edge(3, 4, -1);
      break;
    case 'G':  // alpha_1 short
      g(0, 0) = 2;
      g(1, 1) = 6;
      edge(1, 2, -3);
      break;
  }
  cartan_ = IMat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_(i, j) = 2 * g(i, j) / g(i, i);
}

inline void RootSystem::build_roots() {
  // Closure of the simple roots under simple reflections, tracking coroots
  // alongside: s_i(b) = b - <b, alpha_i^vee> alpha_i,
  //            s_i(b^vee) = b^vee - <alpha_i, b^vee> alpha_i^vee.
  const int n = rank_;
  std::map<IVec, IVec> seen;
  std::deque<IVec> queue;
  for (int i = 1; i <= n; ++i) {
    seen.emplace(simple_root(i), simple_root(i));
    queue.push_back(simple_root(i));
  }
  while (!queue.empty()) {
    IVec b = queue.front();
    queue.pop_front();
    const IVec bc = seen.at(b);
    for (int i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (int j = 0; j < n; ++j) p += cartan_(i, j) * b[j];
      std::int64_t pc = 0;
      for (int k = 0; k < n; ++k) pc += bc[k] * cartan_(k, i);
      IVec img = b;
      img[i] -= p;
      IVec imgc = bc;
      imgc[i] -= pc;
      if (is_positive(img) && !seen.count(img)) {
        seen.emplace(img, imgc);
        queue.push_back(img);
      }
    }
  }
  std::vector<std::pair<IVec, IVec>> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    auto ha = std::accumulate(a.first.begin(), a.first.end(), std::int64_t{0});
    auto hb = std::accumulate(b.first.begin(), b.first.end(), std::int64_t{0});
    return ha != hb ? ha < hb : a.first < b.first;
  });
  for (auto& [r, c] : all) {
    pos_index_.emplace(r, static_cast<int>(pos_roots_.size()));
    pos_roots_.push_back(r);
    pos_coroots_.push_back(c);
  }
  theta_ = pos_roots_.back();
  theta_coroot_ = pos_coroots_.back();
  for (const auto& r : pos_roots_)
    for (int i = 0; i < n; ++i)
      if (r[i] > theta_[i]) throw ConsistencyError("highest root does not dominate " + to_string(r));
}

inline void RootSystem::build_involution() {
  // w0 acting on roots: right-multiply by s_i while some simple root stays positive.
  const int n = rank_;
  IMat w = IMat::identity(n);
  auto simple_refl = [&](int i) {
    IMat s = IMat::identity(n);
    for (int j = 0; j < n; ++j) s(i, j) -= cartan_(i, j);
    return s;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      if (is_positive(w.col(i))) {
        w = w * simple_refl(i);
        changed = true;
      }
  }
  involution_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    IVec img = -w.col(i);
    int k = -1;
    for (int j = 0; j < n; ++j)
      if (img == simple_root(j + 1)) k = j + 1;
    if (k < 0) throw ConsistencyError("-w0 does not permute simple roots in " + name());
    involution_[i] = k;
  }
  for (int i = 1; i <= n; ++i)
    if (involution(involution(i)) != i) throw ConsistencyError("Weyl involution is not an involution");
}

inline void RootSystem::build_minuscule() {
  std::vector<int> by_theta, by_pairing;
  for (int i = 1; i <= rank_; ++i) {
    if (theta_[i - 1] == 1) by_theta.push_back(i);
    bool ok = true;
    for (const auto& r : pos_roots_) {
      auto p = pairing(fundamental_coweight(i), r);
      if (p != 0 && p != 1) ok = false;
    }
    if (ok) by_pairing.push_back(i);
  }
  if (by_theta != by_pairing) throw ConsistencyError("minuscule characterizations disagree in " + name());
  minuscule_ = by_theta;
  for (int i : minuscule_)
    if (!is_minuscule(involution(i))) throw ConsistencyError("involution does not preserve I_m");
}

}  // namespace qseidel
