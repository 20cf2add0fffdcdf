#pragma once

/// @file verify.hpp
/// @brief Exhaustive and sampled verification suites, shared by the CLI and the acceptance runner.
///
/// Every suite returns counts of performed checks and failures plus the first
/// few failure messages. Suites shard over root systems with std::async and
/// merge the shard results in catalog order, so reports are deterministic.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qseidel/json_io.hpp"
#include "qseidel/nilhecke.hpp"
#include "qseidel/qh.hpp"

namespace qseidel {

struct RunConfig {
  std::string root_system;     ///< empty: the whole catalog
  std::vector<int> parabolic;  ///< empty: every nonempty I_P
  std::string suite = "all";
  int radius = 2;
  std::string format = "json";
  std::size_t weyl_bound = kDefaultWeylBound;
  std::size_t expansion_cap = kDefaultExpansionLength;
  std::uint64_t seed = 1;
  int max_rank = 4;
};

inline void validate(const RunConfig& c) {
  if (c.radius < 1) throw Error("radius must be at least 1");
  if (c.max_rank < 1 || c.max_rank > 8) throw Error("max-rank must be in 1..8");
  if (c.format != "json" && c.format != "text") throw Error("format must be json or text");
  if (!c.root_system.empty()) {
    auto rs = parse_root_system(c.root_system);
    for (int i : c.parabolic) rs->check_node(i);
  } else if (!c.parabolic.empty()) {
    throw Error("--parabolic requires a root system");
  }
}

inline RunConfig run_config_from_json(const Json& j) {
  RunConfig c;
  c.root_system = j.value("root_system", c.root_system);
  c.parabolic = j.value("parabolic", c.parabolic);
  c.suite = j.value("suite", c.suite);
  c.radius = j.value("radius", c.radius);
  c.format = j.value("format", c.format);
  c.weyl_bound = j.value("weyl_bound", c.weyl_bound);
  c.expansion_cap = j.value("expansion_cap", c.expansion_cap);
  c.seed = j.value("seed", c.seed);
  c.max_rank = j.value("max_rank", c.max_rank);
  return c;
}

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  ///< first failures
  std::vector<std::string> findings;  ///< expected divergences worth reporting

  static constexpr std::size_t kMaxMessages = 8;

  bool passed() const { return failures == 0 && checks > 0; }

  void check(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(what());
  }
  void merge(const SuiteResult& o) {
    checks += o.checks;
    failures += o.failures;
    for (const auto& m : o.messages)
      if (messages.size() < kMaxMessages) messages.push_back(m);
    findings.insert(findings.end(), o.findings.begin(), o.findings.end());
  }
};

inline Json to_json(const SuiteResult& r) {
  return {{"name", r.name},         {"checks", r.checks},     {"failures", r.failures},
          {"passed", r.passed()},   {"messages", r.messages}, {"findings", r.findings}};
}

// -- enumeration helpers ----------------------------------------------------

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"};
  return names;
}

inline std::vector<RootSystemPtr> catalog(const RunConfig& cfg, int max_rank) {
  std::vector<RootSystemPtr> out;
  if (!cfg.root_system.empty()) {
    auto rs = parse_root_system(cfg.root_system);
    if (rs->rank() <= max_rank) out.push_back(rs);
    return out;
  }
  for (const auto& n : catalog_names()) {
    auto rs = parse_root_system(n);
    if (rs->rank() <= std::min(max_rank, cfg.max_rank)) out.push_back(rs);
  }
  return out;
}

inline std::vector<ParabolicSet> parabolics(const RunConfig& cfg, const RootSystem& rs) {
  if (!cfg.parabolic.empty() && cfg.root_system == rs.name()) return {ParabolicSet(rs, cfg.parabolic)};
  std::vector<ParabolicSet> out;
  const int n = rs.rank();
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) nodes.push_back(i + 1);
    out.emplace_back(rs, nodes);
  }
  return out;
}

/// All integer vectors of length n with entries in [lo, hi].
inline std::vector<IVec> box(int n, std::int64_t lo, std::int64_t hi) {
  std::vector<IVec> out;
  IVec v(n, lo);
  while (true) {
    out.push_back(v);
    int k = 0;
    while (k < n && v[k] == hi) v[k++] = lo;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

/// Coweights whose simple-coroot coordinates lie in [-r, r].
inline std::vector<IVec> coroot_box(const RootSystem& rs, int r) {
  std::vector<IVec> out;
  for (const auto& c : box(rs.rank(), -r, r)) out.push_back(rs.coroot_to_coweight(c));
  return out;
}

inline bool is_antidominant(const IVec& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](std::int64_t x) { return x <= 0; });
}

/// Order of the class of lambda in P^vee / Q^vee.
inline int class_order(const RootSystem& rs, const IVec& lambda) {
  for (int k = 1; k <= 64; ++k)
    if (rs.in_coroot_lattice(static_cast<std::int64_t>(k) * lambda)) return k;
  throw ConsistencyError("class order exceeds 64");
}

/// Nontrivial invariant factors of an integer matrix (Smith normal form).
inline std::vector<std::int64_t> smith_invariants(IMat m) {
  const int n = m.size();
  std::vector<std::int64_t> d;
  for (int t = 0; t < n; ++t) {
    // Move a nonzero entry of minimal absolute value to (t, t) and clear its row and column.
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (m(i, j) != 0 && (bi < 0 || std::abs(m(i, j)) < std::abs(m(bi, bj)))) bi = i, bj = j;
      if (bi < 0) return d;
      for (int j = 0; j < n; ++j) std::swap(m(t, j), m(bi, j));
      for (int i = 0; i < n; ++i) std::swap(m(i, t), m(i, bj));
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        std::int64_t q = m(i, t) / m(t, t);
        for (int j = t; j < n; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        std::int64_t q = m(t, j) / m(t, t);
        for (int i = t; i < n; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the remaining block.
      int bad_i = -1;
      for (int i = t + 1; i < n && bad_i < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad_i = i;
            break;
          }
      if (bad_i < 0) break;
      for (int j = t; j < n; ++j) m(t, j) += m(bad_i, j);
    }
    if (std::abs(m(t, t)) > 1) d.push_back(std::abs(m(t, t)));
  }
  return d;
}

/// Runs fn on every item concurrently and merges the results in item order.
template <class T, class F>
SuiteResult shard(const std::string& name, const std::vector<T>& items, F fn) {
  std::vector<std::future<SuiteResult>> futs;
  for (const auto& it : items) futs.push_back(std::async(std::launch::async, [&fn, &it] { return fn(it); }));
  SuiteResult out;
  out.name = name;
  for (auto& f : futs) out.merge(f.get());
  return out;
}

/// Checks that a throwing computation fails the suite instead of escaping it.
inline void guarded(SuiteResult& r, const std::string& ctx, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.check(false, [&] { return ctx + ": exception: " + e.what(); });
  }
}

// -- suites -----------------------------------------------------------------

namespace suites {

inline int coxeter_number(const RootSystem& rs) {
  const int n = rs.rank();
  switch (rs.type_letter()) {
    case 'A': return n + 1;
    case 'B':
    case 'C': return 2 * n;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 12;
    default: return 6;
  }
}

/// Root system invariants.
inline SuiteResult rootsys(const RunConfig& cfg) {
  return shard("rootsys", catalog(cfg, 8), [](const RootSystemPtr& rs) {
    SuiteResult r;
    const std::string nm = rs->name();
    guarded(r, nm, [&] {
      const int n = rs->rank();
      const auto& C = rs->cartan();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          r.check(i == j ? C(i, j) == 2 : C(i, j) <= 0, [&] { return nm + ": bad Cartan entry"; });
      r.check(static_cast<int>(rs->num_positive_roots()) * 2 == n * coxeter_number(*rs),
              [&] { return nm + ": |R+| differs from n h / 2"; });
      for (int i = 1; i <= n; ++i) {
        auto s = WeylElt::simple_reflection(rs, i);
        for (const auto& a : rs->positive_roots())
          r.check(rs->is_root(s.act_on_root(a)), [&] { return nm + ": s_i(alpha) not a root"; });
      }
      for (const auto& a : rs->positive_roots())
        for (int k = 0; k < n; ++k)
          r.check(a[k] <= rs->highest_root()[k], [&] { return nm + ": theta does not dominate " + to_string(a); });
      std::vector<int> by_theta, by_pairing;
      for (int i = 1; i <= n; ++i) {
        if (rs->highest_root()[i - 1] == 1) by_theta.push_back(i);
        bool ok = true;
        for (const auto& a : rs->positive_roots()) ok = ok && rs->pairing(rs->fundamental_coweight(i), a) <= 1;
        if (ok) by_pairing.push_back(i);
      }
      r.check(by_theta == by_pairing && by_theta == rs->minuscule_nodes(),
              [&] { return nm + ": minuscule characterizations disagree"; });
      const WeylElt w0 = longest_element(rs);
      for (int i = 1; i <= n; ++i) {
        r.check(rs->involution(rs->involution(i)) == i, [&] { return nm + ": f is not an involution"; });
        r.check(-w0.act_on_root(rs->simple_root(i)) == rs->simple_root(rs->involution(i)),
                [&] { return nm + ": f(i) differs from -w0(alpha_i)"; });
      }
      for (int i : rs->minuscule_nodes()) {
        const int fi = rs->involution(i);
        r.check(rs->is_minuscule(fi), [&] { return nm + ": f does not preserve I_m"; });
        r.check(rs->pairing(rs->fundamental_coweight(fi), rs->highest_root()) == 1,
                [&] { return nm + ": <varpi_f(i)^vee, theta> != 1"; });
      }
      if (rs->type_letter() == 'G' || rs->type_letter() == 'F' || nm == "E8")
        r.check(rs->minuscule_nodes().empty(), [&] { return nm + ": expected no minuscule nodes"; });
    });
    return r;
  });
}

/// Coset decomposition, exponent well-definedness.
inline SuiteResult weyl(const RunConfig& cfg) {
  return shard("weyl", catalog(cfg, 4), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    const std::string nm = rs->name();
    guarded(r, nm, [&] {
      const auto W = enumerate_weyl(rs, cfg.weyl_bound);
      const auto coweights = box(rs->rank(), -cfg.radius, cfg.radius);
      for (const auto& P : parabolics(cfg, *rs)) {
        const std::string ctx = nm + " I_P=" + to_string(IVec(P.nodes().begin(), P.nodes().end()));
        const auto WP = enumerate_parabolic(rs, P, cfg.weyl_bound);
        const auto mins = enumerate_minreps(rs, P, cfg.weyl_bound);
        r.check(mins.size() * WP.size() == W.size(), [&] { return ctx + ": |W^P| |W_P| != |W|"; });
        std::set<WeylElt> reps;
        std::set<std::pair<WeylElt, WeylElt>> pairs;
        for (const auto& w : W) {
          auto [rep, u] = coset_reduce(w, P);
          r.check(rep * u == w && is_minimal_coset_rep(rep, P) && in_parabolic_subgroup(u, P) &&
                      rep.length() + u.length() == w.length(),
                  [&] { return ctx + ": coset_reduce failed on " + word_string(w.reduced_word()); });
          reps.insert(rep);
          pairs.emplace(rep, u);
        }
        r.check(pairs.size() == W.size(), [&] { return ctx + ": coset_reduce not injective"; });
        r.check(reps == std::set<WeylElt>(mins.begin(), mins.end()), [&] { return ctx + ": W^P mismatch"; });
        for (const auto& u : WP)
          for (const auto& mu : coweights) {
            IVec c;
            bool ok = rs->coweight_to_coroot(u.act_on_coweight(mu) - mu, c);
            for (int i : P.nodes()) ok = ok && c[i - 1] == 0;
            r.check(ok, [&] { return ctx + ": u(mu) - mu not in Q^vee_P"; });
          }
        AffineWeyl aff(rs);
        QuantumOps ops(rs, P);
        for (int i : rs->minuscule_nodes())
          for (const auto& w : mins) {
            const IVec e = ops.seidel_exponent(i, w);
            for (const auto& u : WP)
              r.check(ops.seidel_exponent(i, w * u) == e, [&] { return ctx + ": Seidel exponent not coset-invariant"; });
          }
      }
    });
    return r;
  });
}

/// The elements v_i: inverses, positivity criterion, lengths.
inline SuiteResult minuscule(const RunConfig& cfg) {
  return shard("minuscule", catalog(cfg, 4), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    const std::string nm = rs->name();
    guarded(r, nm, [&] {
      const auto W = enumerate_weyl(rs, cfg.weyl_bound);
      const WeylElt w0 = longest_element(rs);
      AffineWeyl aff(rs);
      for (int i : rs->minuscule_nodes()) {
        const std::string ctx = nm + " i=" + std::to_string(i);
        const WeylElt& v = aff.v(i);
        r.check(v.inverse() == aff.v(rs->involution(i)), [&] { return ctx + ": v_i^{-1} != v_f(i)"; });
        for (const auto& a : rs->positive_roots())
          r.check(is_positive(v.act_on_root(a)) == (rs->pairing(rs->fundamental_coweight(i), a) == 0),
                  [&] { return ctx + ": positivity criterion fails at " + to_string(a); });
        std::vector<int> others;
        for (int j = 1; j <= rs->rank(); ++j)
          if (j != i) others.push_back(j);
        r.check(v.length() == w0.length() - longest_element(rs, others).length(),
                [&] { return ctx + ": l(v_i) != l(w0) - l(w0^P)"; });
        const auto mins = enumerate_minreps(rs, ParabolicSet(*rs, {i}), cfg.weyl_bound);
        r.check(mins.back().length() == v.length() && is_minimal_coset_rep(v, ParabolicSet(*rs, {i})),
                [&] { return ctx + ": v_i is not the longest element of W^P_i"; });
        // Brute force: unique minimal u with u(varpi_i^vee) = w0(varpi_i^vee).
        const IVec target = w0.act_on_coweight(rs->fundamental_coweight(i));
        int best = 1 << 30;
        std::vector<WeylElt> argmin;
        for (const auto& u : W) {
          if (u.act_on_coweight(rs->fundamental_coweight(i)) != target) continue;
          if (u.length() < best) best = u.length(), argmin.clear();
          if (u.length() == best) argmin.push_back(u);
        }
        r.check(argmin.size() == 1 && argmin.front() == v, [&] { return ctx + ": v_i is not the unique minimum"; });
      }
      std::vector<int> nodes{0};
      for (int i : rs->minuscule_nodes()) nodes.push_back(i);
      for (int a : nodes)
        for (int b : nodes) {
          CentralElt c = aff.central_mul({a}, {b});
          r.check(aff.v(c.node) == aff.v(a) * aff.v(b), [&] { return nm + ": v-part of tau_a tau_b != v_a v_b"; });
        }
    });
    return r;
  });
}

/// Length formula against inversion counting.
inline SuiteResult length(const RunConfig& cfg) {
  return shard("length", catalog(cfg, 3), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      const auto lams = coroot_box(*rs, cfg.radius);
      for (const auto& w : enumerate_weyl(rs, cfg.weyl_bound))
        for (const auto& l : lams) {
          ExtAffElt x(w, l);
          r.check(aff_length(x) == inversion_count_oracle(x),
                  [&] { return rs->name() + ": length mismatch at " + x.to_string(); });
        }
    });
    return r;
  });
}

/// Minimal length in x W, by comparing against every coset member.
inline bool waff_minus_oracle(const ExtAffElt& x, const std::vector<WeylElt>& W) {
  const auto l = aff_length(x);
  const IVec zero(x.root_system()->rank(), 0);
  for (const auto& u : W)
    if (!u.is_identity() && aff_length(x * ExtAffElt(u, zero)) <= l) return false;
  return true;
}

/// Decomposition x = tau x-hat, length and membership transport.
inline SuiteResult hat(const RunConfig& cfg) {
  return shard("hat", catalog(cfg, 3), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      AffineWeyl aff(rs);
      const auto W = enumerate_weyl(rs, cfg.weyl_bound);
      const auto Ps = parabolics(cfg, *rs);
      for (const auto& w : W)
        for (const auto& l : box(rs->rank(), -cfg.radius, cfg.radius)) {
          ExtAffElt x(w, l);
          const std::string ctx = rs->name() + " " + x.to_string();
          auto d = aff.hat_decompose(x);
          r.check(aff.tau(d.tau) * d.hat == x, [&] { return ctx + ": no reconstruction"; });
          r.check(d.hat.in_affine_weyl(), [&] { return ctx + ": hat not in W_aff"; });
          r.check(aff_length(x) == aff_length(d.hat), [&] { return ctx + ": l(x) != l(hat x)"; });
          r.check(aff_length(aff.tau(d.tau)) == 0, [&] { return ctx + ": central part has positive length"; });
          const bool minus = is_waff_minus(x);
          r.check(minus == is_waff_minus(d.hat), [&] { return ctx + ": W_aff^- not transported"; });
          r.check(minus == waff_minus_oracle(x, W), [&] { return ctx + ": W_aff^- test disagrees with oracle"; });
          for (const auto& P : Ps)
            r.check(is_wpaff(x, P) == is_wpaff(d.hat, P), [&] { return ctx + ": (W^P)_aff not transported"; });
        }
    });
    return r;
  });
}

/// The group Z: closure, orders, Dynkin action.
inline void central_group_checks(SuiteResult& r, const RootSystemPtr& rs) {
  AffineWeyl aff(rs);
  const int n = rs->rank();
  std::vector<int> nodes{0};
  for (int i : rs->minuscule_nodes()) nodes.push_back(i);
  std::multiset<int> orders;
  for (int a : nodes) {
    r.check(aff_length(aff.tau({a})) == 0, [&] { return rs->name() + ": l(tau) != 0"; });
    for (int b : nodes) {
      CentralElt c = aff.central_mul({a}, {b});
      r.check(std::find(nodes.begin(), nodes.end(), c.node) != nodes.end(), [&] { return rs->name() + ": Z not closed"; });
    }
    int k = 1;
    for (CentralElt p{a}; !p.is_identity(); p = aff.central_mul(p, {a})) ++k;
    orders.insert(a == 0 ? 1 : k);
    if (a != 0)
      r.check(k == class_order(*rs, rs->fundamental_coweight(a)),
              [&] { return rs->name() + ": order of tau differs from the class order"; });
    std::set<int> image;
    for (int i = 0; i <= n; ++i) image.insert(aff.central_dynkin_action({a}, i));
    r.check(static_cast<int>(image.size()) == n + 1, [&] { return rs->name() + ": Dynkin action not a permutation"; });
  }
  // Oracle: element orders of the abelian group with the Smith invariants of C^T.
  std::vector<std::int64_t> inv = smith_invariants(rs->cartan().transpose());
  std::multiset<int> expect;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t ord) {
    if (k == inv.size()) {
      expect.insert(static_cast<int>(ord));
      return;
    }
    for (std::int64_t x = 0; x < inv[k]; ++x) {
      std::int64_t o = inv[k] / std::gcd(inv[k], x);
      rec(k + 1, std::lcm(ord, o));
    }
  };
  rec(0, 1);
  r.check(orders == expect, [&] { return rs->name() + ": Z is not isomorphic to P^vee/Q^vee"; });
}

/// pi_P: membership, residual, uniqueness against a windowed brute force.
inline SuiteResult pi_p(const RunConfig& cfg) {
  return shard("pi_p", catalog(cfg, 4), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      AffineWeyl aff(rs);
      const int window = cfg.radius + 2;
      for (const auto& P : parabolics(cfg, *rs)) {
        const auto levi = P.levi_nodes();
        // Brute force over x2 = u t_mu in the window: x t_{-mu} u^{-1} = u^{-1} t_{u(lambda - mu)}
        // is tested against the (W^P)_aff conditions directly.
        struct Cand {
          WeylElt u;
          std::vector<std::pair<IVec, std::int64_t>> conds;  // (root, required pairing)
          std::vector<IVec> umus;
        };
        std::vector<Cand> cands;
        std::vector<IVec> mus;
        for (const auto& c : box(static_cast<int>(levi.size()), -window, window)) {
          IVec mu(rs->rank(), 0);
          for (std::size_t b = 0; b < levi.size(); ++b) mu = mu + c[b] * rs->simple_coroot_as_coweight(levi[b]);
          mus.push_back(mu);
        }
        for (const auto& u : enumerate_parabolic(rs, P, cfg.weyl_bound)) {
          Cand cd{u, {}, {}};
          const WeylElt uinv = u.inverse();
          for (const auto& a : rs->positive_roots())
            if (P.in_levi(a)) cd.conds.emplace_back(a, is_negative(uinv.act_on_root(a)) ? -1 : 0);
          for (const auto& mu : mus) cd.umus.push_back(u.act_on_coweight(mu));
          cands.push_back(std::move(cd));
        }
        for (const auto& l : box(rs->rank(), -cfg.radius, cfg.radius)) {
          ExtAffElt x = aff.translation(l);
          const std::string ctx = rs->name() + " " + x.to_string();
          ExtAffElt x1 = aff.pi_P(x, P);
          r.check(is_wpaff(x1, P), [&] { return ctx + ": pi_P(x) not in (W^P)_aff"; });
          r.check(in_levi_affine(x1.inverse() * x, P), [&] { return ctx + ": residual not in (W_P)_aff"; });
          std::size_t hits = 0;
          bool same = true;
          for (const auto& cd : cands) {
            const IVec ul = cd.u.act_on_coweight(l);
            for (std::size_t k = 0; k < cd.umus.size(); ++k) {
              bool ok = true;
              for (const auto& [a, want] : cd.conds) {
                std::int64_t p = 0;
                for (int t = 0; t < rs->rank(); ++t) p += (ul[t] - cd.umus[k][t]) * a[t];
                if (p != want) {
                  ok = false;
                  break;
                }
              }
              if (!ok) continue;
              ++hits;
              same = same && ExtAffElt(cd.u.inverse(), ul - cd.umus[k]) == x1;
            }
          }
          r.check(hits == 1 && same, [&] { return ctx + ": brute force found " + std::to_string(hits) + " factorizations"; });
        }
      }
    });
    return r;
  });
}

inline std::vector<IVec> antidominant_box(int n, int r) { return box(n, -r, 0); }

/// Closure and length additivity of the Peterson combinatorics, and the Fact on t_lambda.
inline SuiteResult wp_closure(const RunConfig& cfg) {
  return shard("wp_closure", catalog(cfg, 4), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      AffineWeyl aff(rs);
      std::mt19937_64 rng(cfg.seed);
      const auto anti = antidominant_box(rs->rank(), cfg.radius);
      for (const auto& P : parabolics(cfg, *rs)) {
        const std::string ctx = rs->name() + " I_P=" + to_string(IVec(P.nodes().begin(), P.nodes().end()));
        auto both = [&](const ExtAffElt& y) { return is_waff_minus(y) && is_wpaff(y, P); };
        // Fact: t_lambda in both sets iff lambda antidominant and orthogonal to R_P^+.
        for (const auto& l : box(rs->rank(), -cfg.radius, cfg.radius)) {
          bool expect = is_antidominant(l);
          for (int j : P.levi_nodes()) expect = expect && l[j - 1] == 0;
          r.check(both(aff.translation(l)) == expect, [&] { return ctx + ": Fact fails at t" + to_string(l); });
        }
        std::map<IVec, ExtAffElt> pit;
        auto pi_t = [&](const IVec& l) -> const ExtAffElt& {
          auto it = pit.find(l);
          if (it == pit.end()) it = pit.emplace(l, aff.pi_P(aff.translation(l), P)).first;
          return it->second;
        };
        std::vector<ExtAffElt> xs;
        for (const auto& w : enumerate_minreps(rs, P, cfg.weyl_bound))
          for (const auto& nu : anti) {
            ExtAffElt x = aff.finite(w) * pi_t(nu);
            if (both(x)) xs.push_back(x);
          }
        r.check(!xs.empty(), [&] { return ctx + ": no samples"; });
        std::shuffle(xs.begin(), xs.end(), rng);
        if (xs.size() > 48) xs.resize(48);
        for (const auto& x : xs)
          for (const auto& l : anti)
            r.check(both(x * pi_t(l)), [&] { return ctx + ": closure fails for " + x.to_string() + " t" + to_string(l); });
        for (const auto& nu : anti)
          for (const auto& l : anti) {
            const IVec s = nu + l;
            r.check(aff_length(aff.pi_P(aff.translation(s), P)) == aff_length(pi_t(nu)) + aff_length(pi_t(l)),
                    [&] { return ctx + ": length not additive at " + to_string(nu) + "+" + to_string(l); });
          }
      }
    });
    return r;
  });
}

/// All elements of the extended affine Weyl group with l(x-hat) <= max_len.
inline std::vector<ExtAffElt> extended_ball(const AffineWeyl& aff, int max_len) {
  std::vector<ExtAffElt> waff{aff.identity()};
  std::set<ExtAffElt> seen{aff.identity()};
  for (std::size_t k = 0; k < waff.size(); ++k) {
    if (aff_length(waff[k]) >= max_len) continue;
    for (int i = 0; i <= aff.root_system()->rank(); ++i) {
      ExtAffElt y = waff[k] * aff.simple_reflection(i);
      if (seen.insert(y).second) waff.push_back(y);
    }
  }
  std::vector<ExtAffElt> out;
  std::vector<int> nodes{0};
  for (int i : aff.root_system()->minuscule_nodes()) nodes.push_back(i);
  for (int z : nodes)
    for (const auto& x : waff) out.push_back(aff.tau({z}) * x);
  return out;
}

/// Nil Hecke relations, embedding, J~ and the action on xi-classes.
inline SuiteResult nilhecke(const RunConfig& cfg) {
  return shard("nilhecke", catalog(cfg, 2), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    const std::string nm = rs->name();
    guarded(r, nm, [&] {
      NilHecke nh(rs, cfg.expansion_cap);
      const AffineWeyl& aff = nh.affine();
      const int n = rs->rank();
      for (int i = 0; i <= n; ++i) {
        auto s = nh.embed_group(aff.simple_reflection(i));
        r.check(nh.mul(s, s) == nh.one(), [&] { return nm + ": s_" + std::to_string(i) + "^2 != 1"; });
        r.check(nh.mul(nh.A(i), nh.A(i)).is_zero(), [&] { return nm + ": A_i^2 != 0"; });
      }
      // Braid relations in the image, including the affine node.
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          ExtAffElt si = aff.simple_reflection(i), sj = aff.simple_reflection(j);
          int mij = 1;
          for (ExtAffElt p = si * sj; !p.is_identity() && mij <= 12; ++mij) p = p * si * sj;
          if (mij > 12) continue;  // infinite order (affine A1)
          NilHeckeElt a = nh.one(), b = nh.one();
          for (int k = 0; k < mij; ++k) {
            a = nh.mul(a, nh.embed_group(k % 2 ? sj : si));
            b = nh.mul(b, nh.embed_group(k % 2 ? si : sj));
          }
          r.check(a == b, [&] { return nm + ": braid relation fails for " + std::to_string(i) + "," + std::to_string(j); });
        }
      // Multiplicativity on seeded random pairs.
      std::mt19937_64 rng(cfg.seed ^ std::hash<std::string>{}(nm));
      std::vector<int> centrals{0};
      for (int i : rs->minuscule_nodes()) centrals.push_back(i);
      auto random_elt = [&](int len) {
        ExtAffElt x = aff.tau({centrals[rng() % centrals.size()]});
        for (int k = 0; k < len; ++k) x = x * aff.simple_reflection(static_cast<int>(rng() % (n + 1)));
        return x;
      };
      for (int trial = 0; trial < 200; ++trial) {
        const int total = static_cast<int>(rng() % 7);
        const int a = static_cast<int>(rng() % (total + 1));
        ExtAffElt x = random_elt(a), y = random_elt(total - a);
        r.check(nh.mul(nh.embed_group(x), nh.embed_group(y)) == nh.embed_group(x * y),
                [&] { return nm + ": embedding not multiplicative at " + x.to_string() + " * " + y.to_string(); });
      }
      // tau-conjugation against the Dynkin action.
      for (int z : centrals)
        for (int i = 0; i <= n; ++i) {
          const int ti = aff.central_dynkin_action({z}, i);
          r.check(nh.mul(nh.central({z}), nh.A(i)) == nh.mul(nh.A(ti), nh.central({z})),
                  [&] { return nm + ": tau A_i != A_tau(i) tau"; });
        }
      // J~ is a left ideal killed by the reduction.
      const auto ball = extended_ball(aff, 2);
      for (const auto& w : enumerate_weyl(rs, cfg.weyl_bound)) {
        if (w.is_identity()) continue;
        NilHeckeElt gen = nh.A_tilde(aff.finite(w));
        for (const auto& x : ball)
          r.check(nh.mod_Jtilde(nh.mul(nh.embed_group(x), gen)).is_zero(), [&] { return nm + ": J~ not annihilated"; });
      }
      // Action on xi-classes: explicit rule against the ring computation.
      if (n <= 2 && rs->type_letter() == 'A') {
        const auto xs = extended_ball(aff, 4);
        std::vector<ExtAffElt> ys;
        for (const auto& y : xs)
          if (is_waff_minus(y)) ys.push_back(y);
        const SPoly w1 = SPoly::variable(n, 1);
        for (const auto& x : xs)
          for (const auto& y : ys)
            for (const SPoly& c : {SPoly::constant(n, 1), w1}) {
              XiVector v;
              v.add(y, c);
              r.check(nh.act_on_xi(x, v) == nh.act_via_ring(nh.A_tilde(x), v),
                      [&] { return nm + ": xi action mismatch for " + x.to_string() + " on " + y.to_string(); });
            }
      }
    });
    return r;
  });
}

/// The projective-plane Seidel table.
inline SuiteResult table(const RunConfig&) {
  SuiteResult r;
  r.name = "table";
  guarded(r, "A2", [&] {
    auto rs = parse_root_system("A2");
    ParabolicSet P(*rs, {1});
    QuantumOps ops(rs, P);
    auto S = [&](const std::vector<int>& w, std::int64_t q) { return ops.sigma(WeylElt::from_word(rs, w), {q}); };
    const std::vector<std::vector<int>> ws{{}, {1}, {2, 1}};
    // Rows: seidel element (1, h, pt); columns: sigma(e), sigma(s1), sigma(s2s1).
    const std::vector<std::vector<QHClass>> expect{
        {S({}, 0), S({1}, 0), S({2, 1}, 0)},
        {S({1}, 0), S({2, 1}, 0), S({}, 1)},
        {S({2, 1}, 0), S({}, 1), S({1}, 1)},
    };
    const std::vector<CentralElt> zs{{0}, {1}, {2}};
    const std::vector<int> rows{0, 1, 2};
    for (int a : rows) {
      // The Seidel class of z: 1, sigma(v_2) = h, sigma(v_1) = pt.
      QHClass el = ops.seidel_element(zs[a]);
      r.check(el == expect[a][0], [&] { return "seidel_element row " + std::to_string(a); });
      for (int b : rows) {
        QHClass got = ops.seidel_multiply(ops.seidel_node(zs[a]), S(ws[b], 0));
        r.check(got == expect[a][b], [&] {
          return "table entry " + std::to_string(a) + "," + std::to_string(b) + " got " + to_text(got);
        });
        // Chevalley oracle: h = D_1, pt = D_1^2.
        QHClass chev = S(ws[b], 0);
        for (int k = 0; k < a; ++k) chev = ops.chevalley_multiply(1, chev);
        r.check(got == chev, [&] { return "Chevalley disagrees at " + std::to_string(a) + "," + std::to_string(b); });
      }
    }
  });
  return r;
}

inline std::vector<RootSystemPtr> quantum_catalog(const RunConfig& cfg) {
  auto all = catalog(cfg, 4);
  all.erase(std::remove_if(all.begin(), all.end(), [](const RootSystemPtr& rs) { return rs->type_letter() == 'G'; }),
            all.end());
  return all;
}

/// Seidel operators against the Chevalley operators.
inline SuiteResult commutation(const RunConfig& cfg) {
  return shard("commutation", quantum_catalog(cfg), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      for (const auto& P : parabolics(cfg, *rs)) {
        QuantumOps ops(rs, P);
        for (int i : rs->minuscule_nodes())
          for (int j : P.nodes())
            for (const auto& w : enumerate_minreps(rs, P, cfg.weyl_bound)) {
              QHClass s = ops.sigma(w);
              r.check(ops.seidel_multiply(i, ops.chevalley_multiply(j, s)) ==
                          ops.chevalley_multiply(j, ops.seidel_multiply(i, s)),
                      [&] { return rs->name() + ": S_i D_j != D_j S_i at " + to_text(s); });
            }
      }
    });
    return r;
  });
}

/// Chevalley operators commute; h^{n+1} = q on projective space.
inline SuiteResult chevalley(const RunConfig& cfg) {
  return shard("chevalley", quantum_catalog(cfg), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      for (const auto& P : parabolics(cfg, *rs)) {
        QuantumOps ops(rs, P);
        for (bool eq : {false, true})
          for (int j : P.nodes())
            for (int k : P.nodes()) {
              if (k <= j) continue;
              for (const auto& w : enumerate_minreps(rs, P, cfg.weyl_bound)) {
                QHClass s = ops.sigma(w);
                r.check(ops.chevalley_multiply(j, ops.chevalley_multiply(k, s, eq), eq) ==
                            ops.chevalley_multiply(k, ops.chevalley_multiply(j, s, eq), eq),
                        [&] { return rs->name() + ": D_j D_k != D_k D_j at " + to_text(s); });
              }
            }
      }
      if (rs->type_letter() == 'A') {
        ParabolicSet P(*rs, {1});
        QuantumOps ops(rs, P);
        QHClass c = ops.unit();
        for (int k = 0; k <= rs->rank(); ++k) c = ops.chevalley_multiply(1, c);
        r.check(c == ops.sigma(WeylElt::identity(rs), {1}), [&] { return rs->name() + ": h^{n+1} = " + to_text(c); });
      }
    });
    return r;
  });
}

/// Seidel orbits, the group law and the structure of Z.
inline SuiteResult orbit(const RunConfig& cfg) {
  return shard("orbit", catalog(cfg, 4), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      central_group_checks(r, rs);
      AffineWeyl aff(rs);
      std::vector<int> nodes{0};
      for (int i : rs->minuscule_nodes()) nodes.push_back(i);
      for (const auto& P : parabolics(cfg, *rs)) {
        QuantumOps ops(rs, P);
        const auto mins = enumerate_minreps(rs, P, cfg.weyl_bound);
        for (int i : rs->minuscule_nodes()) {
          auto orb = ops.seidel_orbit(i);
          r.check(static_cast<int>(orb.size()) == class_order(*rs, rs->fundamental_coweight(i)),
                  [&] { return rs->name() + ": orbit length " + std::to_string(orb.size()); });
        }
        for (int a : nodes)
          for (int b : nodes) {
            CentralElt ab = aff.central_mul({a}, {b});
            const int na = ops.seidel_node({a}), nb = ops.seidel_node({b}), nab = ops.seidel_node(ab);
            const IVec e = na == 0 ? IVec(P.nodes().size(), 0) : ops.seidel_exponent(na, aff.v(nb));
            for (const auto& w : mins) {
              QHClass s = ops.sigma(w);
              r.check(ops.seidel_multiply(na, ops.seidel_multiply(nb, s)) == ops.seidel_multiply(nab, s).q_shift(e),
                      [&] { return rs->name() + ": group law fails at " + to_text(s); });
            }
          }
      }
    });
    return r;
  });
}

/// The Peterson dictionary.
inline SuiteResult psi(const RunConfig& cfg) {
  SuiteResult head;
  head.name = "psi";
  guarded(head, "A1", [&] {
    auto rs = parse_root_system("A1");
    ParabolicSet B = ParabolicSet::borel(*rs);
    QuantumOps ops(rs, B);
    const AffineWeyl& aff = ops.affine();
    const IVec m{-2};  // -alpha_1^vee
    head.check(ops.psi_P(aff.simple_reflection(0), m) == ops.sigma(WeylElt::simple_reflection(rs, 1)),
               [] { return "A1: xi_{s0} does not map to sigma(s1)"; });
    head.check(ops.psi_P(aff.identity(), m) == ops.sigma(WeylElt::identity(rs), {1}),
               [] { return "A1: xi_id xi_{t}^{-1} does not map to q"; });
  });
  SuiteResult body = shard("psi", catalog(cfg, 3), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      std::mt19937_64 rng(cfg.seed);
      std::vector<IVec> anti;
      for (const auto& l : coroot_box(*rs, cfg.radius))
        if (is_antidominant(l)) anti.push_back(l);
      for (const auto& P : parabolics(cfg, *rs)) {
        QuantumOps ops(rs, P);
        const AffineWeyl& aff = ops.affine();
        auto both = [&](const ExtAffElt& y) { return is_waff_minus(y) && is_wpaff(y, P); };
        std::vector<IVec> shifts;
        for (const auto& nu : anti) {
          bool ok = true;
          for (int j : P.levi_nodes()) ok = ok && nu[j - 1] == 0;
          if (ok) shifts.push_back(nu);
        }
        for (const auto& w : enumerate_minreps(rs, P, cfg.weyl_bound)) {
          const IVec& lam = anti[rng() % anti.size()];
          const IVec& mu = anti[rng() % anti.size()];
          ExtAffElt y = aff.finite(w) * aff.pi_P(aff.translation(lam), P);
          if (!both(y)) continue;
          QHClass base = ops.psi_P(y, mu);
          for (const auto& nu : shifts) {
            ExtAffElt y2 = aff.finite(w) * aff.pi_P(aff.translation(lam + nu), P);
            r.check(both(y2), [&] { return rs->name() + ": shifted representative left W_aff^- cap (W^P)_aff"; });
            if (both(y2))
              r.check(ops.psi_P(y2, mu + nu) == base, [&] { return rs->name() + ": psi_P depends on the representative"; });
          }
        }
      }
    });
    return r;
  });
  head.merge(body);
  return head;
}

/// Quantum-side product identity for the factorization of xi-classes through pi_P(t_lambda).
inline SuiteResult factorization(const RunConfig& cfg) {
  return shard("factorization", catalog(cfg, 3), [&cfg](const RootSystemPtr& rs) {
    SuiteResult r;
    guarded(r, rs->name(), [&] {
      std::mt19937_64 rng(cfg.seed);
      const auto anti = antidominant_box(rs->rank(), cfg.radius);
      const IVec zero(rs->rank(), 0);
      for (const auto& P : parabolics(cfg, *rs)) {
        QuantumOps ops(rs, P);
        const AffineWeyl& aff = ops.affine();
        auto both = [&](const ExtAffElt& y) { return is_waff_minus(y) && is_wpaff(y, P); };
        std::vector<ExtAffElt> xs;
        for (const auto& w : enumerate_minreps(rs, P, cfg.weyl_bound))
          for (const auto& nu : anti) {
            ExtAffElt x = aff.finite(w) * aff.pi_P(aff.translation(nu), P);
            if (both(x)) xs.push_back(x);
          }
        std::shuffle(xs.begin(), xs.end(), rng);
        if (xs.size() > 24) xs.resize(24);
        for (const auto& x : xs)
          for (const auto& l : anti) {
            const ExtAffElt pl = aff.pi_P(aff.translation(l), P);
            const auto dl = aff.hat_decompose(pl);
            const auto dx = aff.hat_decompose(x);
            const auto dp = aff.hat_decompose(x * pl);
            // psi(xi_{hat x}) * psi(xi_{hat pi(t_l)}) = psi(xi_{hat(x pi(t_l))}), all with mu = 0.
            QHClass a = ops.psi_P(dx.hat, zero);
            QHClass b = ops.psi_P(dl.hat, zero);
            QHClass c = ops.psi_P(dp.hat, zero);
            if (b.terms().size() != 1) {
              r.check(false, [&] { return rs->name() + ": unexpected psi image"; });
              continue;
            }
            const auto& bk = b.terms().begin()->first;
            const QHClass seidel_b = ops.seidel_element(dl.tau);
            r.check(seidel_b.terms().begin()->first.w == bk.w,
                    [&] { return rs->name() + ": psi of hat pi(t_l) is not a Seidel class"; });
            QHClass ab = ops.seidel_multiply(ops.seidel_node(dl.tau), a).q_shift(bk.q);
            r.check(ab == c, [&] {
              return rs->name() + ": product identity fails for x=" + x.to_string() + " l=" + to_string(l) + ": " +
                     to_text(ab) + " vs " + to_text(c);
            });
          }
      }
    });
    return r;
  });
}

/// Equivariant Chevalley against the Seidel operators on the projective line: the
/// commutator is nonzero exactly at the documented terms.
inline SuiteResult equivariant(const RunConfig&) {
  SuiteResult r;
  r.name = "equivariant";
  guarded(r, "A1", [&] {
    auto rs = parse_root_system("A1");
    ParabolicSet B = ParabolicSet::borel(*rs);
    QuantumOps ops(rs, B);
    const WeylElt e = WeylElt::identity(rs), s1 = WeylElt::simple_reflection(rs, 1);
    const SPoly alpha1 = SPoly::linear(rs->simple_root_as_weight(1));
    auto comm = [&](const QHClass& c, bool eq) {
      return ops.chevalley_multiply(1, ops.seidel_multiply(1, c), eq) -
             ops.seidel_multiply(1, ops.chevalley_multiply(1, c, eq));
    };
    // D_1 S_1 - S_1 D_1 on sigma(e) and sigma(s1).
    const QHClass expect_e = QHClass::basis(rs, B, s1, {0}, alpha1);
    const QHClass expect_s1 = QHClass::basis(rs, B, e, {1}, -alpha1);
    for (const auto& [w, expect] : {std::pair{e, expect_e}, std::pair{s1, expect_s1}}) {
      QHClass got = comm(ops.sigma(w), true);
      r.check(got == expect, [&] { return "equivariant commutator on " + sigma_string(w) + " is " + to_text(got); });
      r.check(comm(ops.sigma(w), false).is_zero(), [&] { return "non-equivariant commutator nonzero"; });
      r.findings.push_back("expected divergence: (D1 S1 - S1 D1) " + sigma_string(w) + " = " + to_text(got));
    }
    r.check(ops.chevalley_multiply(1, ops.sigma(s1), true) ==
                QHClass::basis(rs, B, s1, {0}, alpha1) + ops.sigma(e, {1}),
            [] { return "equivariant sigma(s1)^2 != alpha1 sigma(s1) + q"; });
  });
  return r;
}

}  // namespace suites

using SuiteFn = SuiteResult (*)(const RunConfig&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> t{
      {"rootsys", suites::rootsys},         {"weyl", suites::weyl},
      {"minuscule", suites::minuscule},           {"length", suites::length},
      {"hat", suites::hat},                 {"pi_p", suites::pi_p},
      {"wp_closure", suites::wp_closure},         {"nilhecke", suites::nilhecke},
      {"table", suites::table},             {"commutation", suites::commutation},
      {"chevalley", suites::chevalley},     {"orbit", suites::orbit},
      {"psi", suites::psi},                 {"factorization", suites::factorization},
      {"equivariant", suites::equivariant},
  };
  return t;
}

/// Runs the configured suite(s); "all" runs every suite concurrently.
inline std::vector<SuiteResult> run_suites(const RunConfig& cfg) {
  validate(cfg);
  std::vector<std::pair<std::string, SuiteFn>> chosen;
  for (const auto& s : suite_table())
    if (cfg.suite == "all" || cfg.suite == s.first) chosen.push_back(s);
  if (chosen.empty()) throw Error("unknown suite \"" + cfg.suite + "\"");
  std::vector<std::future<SuiteResult>> futs;
  for (const auto& [name, fn] : chosen)
    futs.push_back(std::async(std::launch::async, [fn = fn, &cfg, name = name] {
      SuiteResult r = fn(cfg);
      r.name = name;
      return r;
    }));
  std::vector<SuiteResult> out;
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

}  // namespace qseidel
