#pragma once

// Parameter calculus for the irreducible Harish-Chandra modules pi^(lambda, nu):
// minimal type, K-type bounds, equivalence, finite-dimensional members, class
// zero and isomorphism-class counts.

#include "prvkit/charsdets.hpp"
#include "prvkit/tensor.hpp"

namespace prvkit {

struct HCParams {
  Weight lambda;  // rational
  Weight nu;      // integral
};

inline void check_params(const RootSystem& rs, const HCParams& p) {
  if (p.lambda.rank() != rs.rank() || p.nu.rank() != rs.rank())
    throw UsageError("parameters must have " + std::to_string(rs.rank()) + " coordinates");
  if (!p.nu.is_integral()) throw UsageError("nu " + p.nu.to_string() + " is not integral");
}

struct HCInvariants {
  IVec minimal_type;
  CentralCharacterPair inf_char;
};

inline HCInvariants invariants(const RootSystem& rs, const HCParams& p) {
  check_params(rs, p);
  return {dominant_rep(rs, p.nu.to_ints()), hc_inf_character(rs, p.lambda, p.nu)};
}

/// Upper bound dim V(mu)_nu for the multiplicity of the K-type V(mu).
inline long ktype_bound(const RootSystem& rs, const HCParams& p, const Weight& mu) {
  check_params(rs, p);
  return weight_multiplicity(rs, mu, p.nu);
}

/// Checks that the minimal type minimizes (mu + 2 rho, mu + 2 rho) over the
/// dominant mu with nu a weight of V(mu), for mu with coordinates up to the
/// minimal type's plus `radius`.
inline bool minimal_type_minimizes_norm(const RootSystem& rs, const IVec& nu, long radius) {
  IVec bar = dominant_rep(rs, nu);
  IVec two_rho = scaled(rs.rho_ints(), 2);
  Rational best = rs.form(bar + two_rho, bar + two_rho);
  IVec mu(rs.rank(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == mu.size()) {
      if (mu == bar || !rs.in_root_lattice(mu - bar) || !dominates(rs, mu, bar)) return true;
      return rs.form(mu + two_rho, mu + two_rho) > best;
    }
    for (mu[i] = 0; mu[i] <= bar[i] + radius; ++mu[i])
      if (!rec(i + 1)) return false;
    return true;
  };
  return rec(0);
}

/// w with (lambda', nu') = (w * lambda, w nu), if any.
inline std::optional<WeylElement> equivalent(const RootSystem& rs, const HCParams& p, const HCParams& q,
                                             std::size_t weyl_cap = kDefaultWeylCap) {
  check_params(rs, p);
  check_params(rs, q);
  const WeylGroup& W = enumerate_weyl(rs, weyl_cap);
  for (const auto& w : W.elements())
    if (w.matrix.apply(p.nu) == q.nu && twisted_action(rs, w, p.lambda) == q.lambda) return w;
  return std::nullopt;
}

/// (lambda, mu) with pi^(lambda, nu) = V(lambda) (x) V(mu), mu = -w0 (lambda - nu).
inline std::optional<std::pair<IVec, IVec>> finite_dimensional(const RootSystem& rs, const HCParams& p) {
  check_params(rs, p);
  if (!p.lambda.is_dominant_integral()) return std::nullopt;
  IVec l = p.lambda.to_ints();
  IVec mu = -apply_longest(rs, l - p.nu.to_ints());
  if (!all_nonnegative(mu)) return std::nullopt;
  return std::make_pair(l, mu);
}

struct ClassZeroReport {
  bool complete = false;
  CentralCharacterId canonical;
  std::optional<Decomposition> mults;
};

/// -w0 lambda
inline IVec dual_weight(const RootSystem& rs, const IVec& lambda) { return -lowest_weight(rs, lambda); }

inline ClassZeroReport class_zero(const RootSystem& rs, const Weight& lambda, const TensorCaps& caps = {}) {
  if (lambda.rank() != rs.rank()) throw UsageError("lambda has the wrong number of coordinates");
  ClassZeroReport rep;
  rep.complete = true;
  Weight lr = lambda + rs.rho();
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    Rational x = rs.coroot_pairing(lr, k);
    if (x.get_den() == 1 && sgn(x) != 0) rep.complete = false;
  }
  rep.canonical = central_character_id(rs, lambda);
  if (lambda.is_dominant_integral()) {
    IVec l = lambda.to_ints();
    try {
      rep.mults = decompose(rs, lambda, Weight::from_ints(dual_weight(rs, l)), Method::Klimyk, caps);
    } catch (const CapExceeded&) {
    }
  }
  return rep;
}

inline std::size_t isoclass_count(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                  std::size_t weyl_cap = kDefaultWeylCap) {
  require_dominant(rs, lambda, "lambda");
  require_dominant(rs, mu, "mu");
  return double_cosets(rs, lambda, mu, weyl_cap).count();
}

struct NonUniquenessWitness {
  HCParams p, q;
};

/// Searches integral parameters with |lambda_i| <= lambda_box, |nu_i| <= nu_box
/// for two inequivalent modules with equal minimal type and infinitesimal
/// character.
inline std::optional<NonUniquenessWitness> find_nonuniqueness_witness(const RootSystem& rs, long lambda_box,
                                                                      long nu_box,
                                                                      std::size_t weyl_cap = kDefaultWeylCap) {
  std::map<std::pair<IVec, CentralCharacterPair>, std::vector<HCParams>> groups;
  const std::size_t r = rs.rank();
  IVec l(r), n(r);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == 2 * r) {
      HCParams p{Weight::from_ints(l), Weight::from_ints(n)};
      auto inv = invariants(rs, p);
      groups[{inv.minimal_type, inv.inf_char}].push_back(p);
      return;
    }
    long box = i < r ? lambda_box : nu_box;
    long& x = i < r ? l[i] : n[i - r];
    for (x = -box; x <= box; ++x) rec(i + 1);
  };
  rec(0);
  for (const auto& [key, members] : groups)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (!equivalent(rs, members[a], members[b], weyl_cap)) return NonUniquenessWitness{members[a], members[b]};
  return std::nullopt;
}

}  // namespace prvkit
