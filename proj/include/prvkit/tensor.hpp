#pragma once

// Tensor product decompositions V(lambda) (x) V(mu) = sum_nu m^nu V(nu), by
// four independent methods, plus extreme components, generalized PRV
// components and the minuscule closed form.

#include "prvkit/irreps.hpp"
#include "prvkit/kostant.hpp"

#include <optional>

namespace prvkit {

enum class Method { Character, Steinberg, Klimyk, Prv };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Character: return "character";
    case Method::Steinberg: return "steinberg";
    case Method::Klimyk: return "klimyk";
    case Method::Prv: return "prv";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  if (s == "character") return Method::Character;
  if (s == "steinberg") return Method::Steinberg;
  if (s == "klimyk") return Method::Klimyk;
  if (s == "prv") return Method::Prv;
  throw UsageError("unknown method '" + std::string(s) + "'");
}

struct Decomposition {
  IVec lambda, mu;
  Method method = Method::Character;
  std::map<IVec, long> entries;  // nu -> m^nu, positive entries only

  long at(const IVec& nu) const {
    auto it = entries.find(nu);
    return it == entries.end() ? 0 : it->second;
  }
  friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.entries == b.entries; }
};

struct TensorCaps {
  unsigned long long max_dim = kDefaultMaxDim;       // product dimension for character/klimyk
  std::size_t max_weyl = kDefaultWeylCap;            // Weyl enumeration
  unsigned long long realize_cap = 4000;             // realizations used by the prv method
};

/// Sum_nu m^nu dim V(nu) == dim V(lambda) dim V(mu).
inline void dimension_audit(const RootSystem& rs, const Decomposition& d) {
  mpz_class total = 0;
  for (const auto& [nu, m] : d.entries) total += m * weyl_dimension_exact(rs, Weight::from_ints(nu));
  mpz_class expect = weyl_dimension_exact(rs, Weight::from_ints(d.lambda)) * weyl_dimension_exact(rs, Weight::from_ints(d.mu));
  ensure(total == expect, std::string("dimension audit failed for the ") + method_name(d.method) + " decomposition");
}

/// Dominant weights lambda + mu' with mu' a weight of V(mu): the only possible components.
inline std::vector<IVec> candidate_components(const RootSystem& rs, const IVec& lambda, const IVec& mu) {
  std::set<IVec> out;
  for (const auto& [dom, m] : *dominant_multiplicities(rs, mu))
    for (const auto& x : weyl_orbit(rs, dom)) {
      IVec nu = lambda + x;
      if (all_nonnegative(nu)) out.insert(nu);
    }
  return {out.rbegin(), out.rend()};
}

namespace detail {

inline Decomposition by_character(const RootSystem& rs, const IVec& l, const IVec& m, const TensorCaps& caps) {
  auto dl = weyl_dimension(rs, l), dm = weyl_dimension(rs, m);
  if (dl * dm > caps.max_dim)
    throw CapExceeded("product dimension " + std::to_string(dl * dm) + " exceeds cap " + std::to_string(caps.max_dim));
  Character prod = multiply(character_of(rs, Weight::from_ints(l), caps.max_dim), character_of(rs, Weight::from_ints(m), caps.max_dim));
  // Only dominant weights are tracked; peel the one of least depth below
  // lambda + mu, lexicographically in simple-root coordinates (a linear
  // extension of the dominance order).
  IVec top = l + m;
  std::map<IVec, std::pair<IVec, long>> dom;  // depth -> (weight, coefficient)
  for (const auto& [w, c] : prod.entries)
    if (all_nonnegative(w)) dom[*rs.weight_to_root(top - w)] = {w, c};
  Decomposition d{l, m, Method::Character, {}};
  while (!dom.empty()) {
    auto [nu, c] = dom.begin()->second;
    ensure(c > 0, "character peeling met a negative coefficient");
    d.entries[nu] = c;
    for (const auto& [mu, k] : *dominant_multiplicities(rs, nu)) {
      auto it = dom.find(*rs.weight_to_root(top - mu));
      ensure(it != dom.end() && it->second.second >= c * k, "character peeling left the support");
      it->second.second -= c * k;
      if (it->second.second == 0) dom.erase(it);
    }
  }
  return d;
}

inline Decomposition by_steinberg(const RootSystem& rs, const IVec& l, const IVec& m, const TensorCaps& caps) {
  const WeylGroup& W = enumerate_weyl(rs, caps.max_weyl);
  IVec rho = rs.rho_ints();
  std::vector<IVec> wmu;
  for (const auto& w : W.elements()) wmu.push_back(w.matrix.apply(m + rho));
  Decomposition d{l, m, Method::Steinberg, {}};
  for (const auto& nu : candidate_components(rs, l, m)) {
    long long total = 0;
    for (const auto& w : W.elements()) {
      IVec base = l - w.matrix.apply(nu + rho);
      for (std::size_t k = 0; k < W.size(); ++k) {
        long long p = partition_of_weight(rs, wmu[k] + base);
        if (p) total += w.sign() * W[k].sign() * p;
      }
    }
    ensure(total >= 0, "negative Steinberg multiplicity");
    if (total) d.entries[nu] = static_cast<long>(total);
  }
  return d;
}

inline Decomposition by_klimyk(const RootSystem& rs, const IVec& l, const IVec& m, const TensorCaps& caps) {
  Character chm = character_of(rs, Weight::from_ints(m), caps.max_dim);
  std::map<IVec, long> acc;
  for (const auto& [mu1, mult] : chm.entries) {
    IVec x = l + mu1 + rs.rho_ints();
    int sign = 1;
    while (true) {
      std::size_t i = 0;
      while (i < x.size() && x[i] >= 0) ++i;
      if (i == x.size()) break;
      x = rs.reflect(x, i);
      sign = -sign;
    }
    bool regular = true;
    for (long c : x) regular = regular && c > 0;
    if (!regular) continue;
    acc[x - rs.rho_ints()] += sign * mult;
  }
  Decomposition d{l, m, Method::Klimyk, {}};
  for (const auto& [nu, c] : acc) {
    ensure(c >= 0, "negative Klimyk coefficient");
    if (c) d.entries[nu] = c;
  }
  return d;
}

inline Decomposition by_prv(const RootSystem& rs, const IVec& l, const IVec& m, const TensorCaps& caps) {
  // m^nu_{lambda,mu} = m^nu_{mu,lambda}; realize the smaller factor.
  bool swap = weyl_dimension(rs, m) > weyl_dimension(rs, l);
  const IVec& big = swap ? m : l;
  const IVec& small = swap ? l : m;
  auto V = shared_realization(rs, small, caps.realize_cap);
  Decomposition d{l, m, Method::Prv, {}};
  for (const auto& nu : candidate_components(rs, l, m)) {
    auto mult = v_extremes(*V, nu - big, big).dim;
    if (mult) d.entries[nu] = static_cast<long>(mult);
  }
  return d;
}

}  // namespace detail

inline Decomposition decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu, Method method,
                               const TensorCaps& caps = {}) {
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu");
  Decomposition d;
  switch (method) {
    case Method::Character: d = detail::by_character(rs, l, m, caps); break;
    case Method::Steinberg: d = detail::by_steinberg(rs, l, m, caps); break;
    case Method::Klimyk: d = detail::by_klimyk(rs, l, m, caps); break;
    case Method::Prv: d = detail::by_prv(rs, l, m, caps); break;
  }
  dimension_audit(rs, d);
  return d;
}

/// Both forms of m^nu: dim V+(mu; nu - lambda, lambda) and
/// dim V+(nu; lambda + w0 mu, -w0 mu). Throws InvariantViolation if they differ.
inline long multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                         const TensorCaps& caps = {}) {
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu"), n = require_dominant(rs, nu, "nu");
  const WeylGroup& W = enumerate_weyl(rs, caps.max_weyl);
  IVec w0mu = W.longest().matrix.apply(m);
  auto Vm = shared_realization(rs, m, caps.realize_cap);
  auto Vn = shared_realization(rs, n, caps.realize_cap);
  auto a = v_extremes(*Vm, n - l, l).dim;
  auto b = v_extremes(*Vn, l + w0mu, -w0mu).dim;
  ensure(a == b, "the two expressions for the tensor multiplicity disagree");
  return static_cast<long>(a);
}

struct ExtremeTypes {
  IVec cartan, minimal;
};

/// w0 mu is the antidominant member of W mu, found without enumerating W.
inline IVec lowest_weight(const RootSystem& rs, IVec x) {
  while (true) {
    std::size_t i = 0;
    while (i < x.size() && x[i] <= 0) ++i;
    if (i == x.size()) return x;
    x = rs.reflect(x, i);
  }
}

/// w0 x, with w0 found by reducing rho to -rho.
inline IVec apply_longest(const RootSystem& rs, IVec x) {
  IVec r = rs.rho_ints();
  while (true) {
    std::size_t i = 0;
    while (i < r.size() && r[i] <= 0) ++i;
    if (i == r.size()) return x;
    r = rs.reflect(r, i);
    x = rs.reflect(x, i);
  }
}

inline ExtremeTypes extreme_types(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu");
  return {l + m, dominant_rep(rs, l + lowest_weight(rs, m))};
}

struct GeneralizedPrv {
  IVec component;     // dominant rep of lambda + w mu
  long mult = 0;      // m^component
  long lower_bound = 0;
  std::optional<long> kprv_mult;
  bool w_dominant = false;  // lambda + w mu already dominant
};

/// eta over double cosets: coset id -> dominant rep of lambda + w mu.
inline std::vector<IVec> eta_values(const RootSystem& rs, const IVec& l, const IVec& m, const DoubleCosets& dc,
                                    const WeylGroup& W) {
  std::vector<IVec> out;
  for (auto rep : dc.representatives) out.push_back(dominant_rep(rs, l + W[rep].matrix.apply(m)));
  return out;
}

inline GeneralizedPrv generalized_prv(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& w,
                                      const Decomposition& full, const TensorCaps& caps = {}, bool with_kprv = true) {
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu");
  const WeylGroup& W = enumerate_weyl(rs, caps.max_weyl);
  GeneralizedPrv g;
  IVec x = l + w.matrix.apply(m);
  g.w_dominant = all_nonnegative(x);
  g.component = dominant_rep(rs, x);
  g.mult = full.at(g.component);
  auto dc = double_cosets(rs, lambda, mu, caps.max_weyl);
  auto eta = eta_values(rs, l, m, dc, W);
  const IVec& mine = eta[dc.coset_of[W.find(w.matrix)]];
  for (const auto& e : eta) g.lower_bound += e == mine;
  if (with_kprv) {
    try {
      g.kprv_mult = static_cast<long>(kprv_multiplicity(rs, lambda, mu, w, caps.realize_cap));
    } catch (const CapExceeded&) {
    }
  }
  return g;
}

inline GeneralizedPrv generalized_prv(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& w,
                                      const TensorCaps& caps = {}, bool with_kprv = true) {
  return generalized_prv(rs, lambda, mu, w, decompose(rs, lambda, mu, Method::Klimyk, caps), caps, with_kprv);
}

inline bool is_minuscule(const RootSystem& rs, const IVec& mu) {
  auto table = dominant_multiplicities(rs, mu);
  return table->size() == 1;
}

/// V(lambda) (x) V(mu) for minuscule mu: one copy of V(lambda + x) for every x
/// in the orbit W mu with lambda + x dominant.
inline Decomposition minuscule_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu");
  if (!is_minuscule(rs, m)) throw UsageError("weight " + mu.to_string() + " is not minuscule");
  Decomposition d{l, m, Method::Character, {}};
  for (const auto& x : weyl_orbit(rs, m))
    if (all_nonnegative(l + x)) d.entries[l + x] += 1;
  dimension_audit(rs, d);
  return d;
}

struct ComponentTestReport {
  struct Kum4 {
    IVec beta;  // positive root, simple-root coordinates
    bool hypothesis = false;
    long mult = 0;
  };
  std::vector<Kum4> kum4;
  bool steinberg_hypothesis = false;  // (lambda + mu')(h_i) >= -1 for all weights mu' of V(mu)
  bool steinberg_consistent = true;   // if the hypothesis holds: m^nu = dim V(mu)_{nu - lambda}
  bool ok = true;
};

inline ComponentTestReport component_tests(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                           const TensorCaps& caps = {}) {
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu");
  Decomposition d = decompose(rs, lambda, mu, Method::Klimyk, caps);
  ComponentTestReport rep;
  for (const auto& beta : rs.positive_roots()) {
    IVec nu = l + m - rs.root_to_weight(beta);
    if (!all_nonnegative(nu)) continue;
    ComponentTestReport::Kum4 k;
    k.beta = beta;
    k.hypothesis = true;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (l[i] != 0 && m[i] != 0) continue;
      IVec diff = beta - rs.simple_root(i);
      if (is_zero(diff) || rs.positive_index(diff)) k.hypothesis = false;
    }
    k.mult = d.at(nu);
    if (k.hypothesis && k.mult <= 0) rep.ok = false;
    rep.kum4.push_back(k);
  }
  Character chm = character_of(rs, mu, caps.max_dim);
  rep.steinberg_hypothesis = true;
  for (const auto& [x, c] : chm.entries)
    for (std::size_t i = 0; i < rs.rank(); ++i)
      if (l[i] + x[i] < -1) rep.steinberg_hypothesis = false;
  if (rep.steinberg_hypothesis) {
    for (const auto& nu : candidate_components(rs, l, m))
      if (d.at(nu) != chm.at(nu - l)) rep.steinberg_consistent = false;
    rep.ok = rep.ok && rep.steinberg_consistent;
  }
  return rep;
}

}  // namespace prvkit
