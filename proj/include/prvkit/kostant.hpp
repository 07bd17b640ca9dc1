#pragma once

// Kostant partition function, weight multiplicities (Kostant and Freudenthal),
// formal characters and the Weyl dimension formula.

#include "prvkit/rootcore.hpp"

#include <map>
#include <set>

namespace prvkit {

inline constexpr unsigned long long kDefaultMaxDim = 100000;

struct Character {
  enum class Kind { Formal, Decomposition };
  Kind kind = Kind::Formal;
  std::map<IVec, long> entries;

  long at(const IVec& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
  long total() const {
    long s = 0;
    for (const auto& [w, m] : entries) s += m;
    return s;
  }
  void add(const IVec& w, long m) {
    if (!m) return;
    long& x = entries[w];
    x += m;
    if (!x) entries.erase(w);
  }
  friend bool operator==(const Character& a, const Character& b) { return a.entries == b.entries; }
};

namespace detail {

inline long long partition_rec(const RootSystem& rs, std::unordered_map<IVec, long long, IVecHash>& memo, IVec& beta,
                               std::size_t k) {
  for (long x : beta)
    if (x < 0) return 0;
  const auto& roots = rs.positive_roots();
  if (k == roots.size()) return is_zero(beta) ? 1 : 0;
  if (is_zero(beta)) return 1;
  beta.push_back(static_cast<long>(k));
  auto it = memo.find(beta);
  beta.pop_back();
  if (it != memo.end()) return it->second;

  long long total = partition_rec(rs, memo, beta, k + 1);
  IVec rest = beta - roots[k];
  total += partition_rec(rs, memo, rest, k);

  beta.push_back(static_cast<long>(k));
  memo.emplace(beta, total);
  beta.pop_back();
  return total;
}

}  // namespace detail

/// Number of ways to write beta (simple-root coordinates) as a sum of positive roots.
inline long long partition_function(const RootSystem& rs, const IVec& beta) {
  if (beta.size() != rs.rank()) throw UsageError("root vector has the wrong length");
  auto& c = rs.caches();
  std::lock_guard lock(c.partition_mutex);
  IVec b = beta;
  return detail::partition_rec(rs, c.partitions, b, 0);
}

/// Partition function evaluated on a weight; zero off the root lattice.
inline long long partition_of_weight(const RootSystem& rs, const IVec& w) {
  auto beta = rs.weight_to_root(w);
  if (!beta || !all_nonnegative(*beta)) return 0;
  return partition_function(rs, *beta);
}

/// Weyl dimension formula, exact.
inline mpz_class weyl_dimension_exact(const RootSystem& rs, const Weight& lambda) {
  Rational d = 1;
  Weight lr = lambda + rs.rho();
  for (std::size_t k = 0; k < rs.num_positive(); ++k) d *= rs.coroot_pairing(lr, k) / rs.coroot_pairing(rs.rho(), k);
  ensure(d.get_den() == 1, "Weyl dimension is not an integer");
  return d.get_num();
}

inline unsigned long long weyl_dimension(const RootSystem& rs, const IVec& lambda) {
  mpz_class d = weyl_dimension_exact(rs, Weight::from_ints(lambda));
  ensure(d.fits_ulong_p(), "dimension overflow");
  return d.get_ui();
}

inline IVec require_dominant(const RootSystem& rs, const Weight& lambda, const char* what = "weight") {
  if (lambda.rank() != rs.rank())
    throw UsageError(std::string(what) + " has " + std::to_string(lambda.rank()) + " coordinates, rank is " +
                     std::to_string(rs.rank()));
  if (!lambda.is_dominant_integral()) throw UsageError(std::string(what) + " " + lambda.to_string() + " is not dominant integral");
  return lambda.to_ints();
}

/// dim V(lambda)_mu = sum_w sgn(w) P(w(lambda+rho) - (mu+rho)).
inline long kostant_multiplicity(const RootSystem& rs, const IVec& lambda, const IVec& mu,
                                 std::size_t weyl_cap = kDefaultWeylCap) {
  const WeylGroup& W = enumerate_weyl(rs, weyl_cap);
  IVec lr = lambda + rs.rho_ints(), mr = mu + rs.rho_ints();
  if (!rs.in_root_lattice(lambda - mu)) return 0;
  long long total = 0;
  for (const auto& w : W.elements()) total += w.sign() * partition_of_weight(rs, w.matrix.apply(lr) - mr);
  ensure(total >= 0, "negative Kostant multiplicity");
  return static_cast<long>(total);
}

/// Dominant weights mu <= lambda, reached from lambda by subtracting positive
/// roots while staying dominant.
inline std::vector<IVec> dominant_weights_below(const RootSystem& rs, const IVec& lambda) {
  std::vector<IVec> roots;
  for (const auto& a : rs.positive_roots()) roots.push_back(rs.root_to_weight(a));
  std::set<IVec> seen{lambda};
  std::vector<IVec> queue{lambda};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& a : roots) {
      IVec m = queue[q] - a;
      if (all_nonnegative(m) && seen.insert(m).second) queue.push_back(m);
    }
  return queue;
}

enum class MultAlgo { Auto, Kostant, Freudenthal };

/// Weyl groups up to this order use Kostant's formula for whole characters.
inline constexpr unsigned long long kKostantTableLimit = 48;

/// Multiplicities of all dominant weights of V(lambda), keyed by weight.
/// Auto picks Kostant's formula for small Weyl groups and the Freudenthal
/// recursion otherwise.
inline std::shared_ptr<const std::map<IVec, long>> dominant_multiplicities(const RootSystem& rs, const IVec& lambda,
                                                                        MultAlgo algo = MultAlgo::Auto) {
  if (algo == MultAlgo::Auto)
    algo = rs.weyl_order() <= kKostantTableLimit ? MultAlgo::Kostant : MultAlgo::Freudenthal;
  IVec key = lambda;
  key.push_back(algo == MultAlgo::Kostant ? 0 : 1);
  auto& c = rs.caches();
  {
    std::lock_guard lock(c.table_mutex);
    auto it = c.dominant_tables.find(key);
    if (it != c.dominant_tables.end()) return it->second;
  }
  auto dom = dominant_weights_below(rs, lambda);
  if (algo == MultAlgo::Kostant) {
    auto table = std::make_shared<std::map<IVec, long>>();
    for (const auto& mu : dom)
      if (long m = kostant_multiplicity(rs, lambda, mu)) (*table)[mu] = m;
    std::lock_guard lock(c.table_mutex);
    return c.dominant_tables.emplace(key, table).first->second;
  }
  std::vector<std::pair<long, IVec>> order;
  for (const auto& m : dom) order.emplace_back(sum(*rs.weight_to_root(lambda - m)), m);
  std::sort(order.begin(), order.end());

  std::vector<IVec> roots;
  for (const auto& a : rs.positive_roots()) roots.push_back(rs.root_to_weight(a));
  IVec rho = rs.rho_ints();
  Rational top = rs.form(lambda + rho, lambda + rho);

  auto table = std::make_shared<std::map<IVec, long>>();
  auto lookup = [&](const IVec& w) -> long {
    auto it = table->find(dominant_rep(rs, w));
    return it == table->end() ? 0 : it->second;
  };
  for (const auto& [depth, mu] : order) {
    if (depth == 0) {
      (*table)[mu] = 1;
      continue;
    }
    Rational acc = 0;
    for (const auto& a : roots) {
      IVec x = mu;
      while (true) {
        x = x + a;
        long m = lookup(x);
        if (!m) break;
        acc += m * rs.form(x, a);
      }
    }
    Rational denom = top - rs.form(mu + rho, mu + rho);
    ensure(sgn(denom) > 0, "Freudenthal denominator vanished");
    Rational m = 2 * acc / denom;
    ensure(m.get_den() == 1, "non-integral Freudenthal multiplicity");
    if (sgn(m) != 0) (*table)[mu] = m.get_num().get_si();
  }
  std::lock_guard lock(c.table_mutex);
  return c.dominant_tables.emplace(key, table).first->second;
}

inline long freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  IVec l = require_dominant(rs, lambda);
  if (mu.rank() != rs.rank()) throw UsageError("weight has the wrong number of coordinates");
  if (!mu.is_integral()) return 0;
  if (!rs.in_root_lattice(l - mu.to_ints())) return 0;
  auto table = dominant_multiplicities(rs, l, MultAlgo::Freudenthal);
  auto it = table->find(dominant_rep(rs, mu.to_ints()));
  return it == table->end() ? 0 : it->second;
}

/// dim V(lambda)_mu; uses Kostant's formula when W is small enough, else Freudenthal.
inline long weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                std::size_t weyl_cap = kDefaultWeylCap) {
  IVec l = require_dominant(rs, lambda);
  if (mu.rank() != rs.rank()) throw UsageError("weight has the wrong number of coordinates");
  if (!mu.is_integral()) return 0;
  if (rs.weyl_order() > weyl_cap) return freudenthal_multiplicity(rs, lambda, mu);
  return kostant_multiplicity(rs, l, mu.to_ints(), weyl_cap);
}

/// Full formal character of V(lambda).
inline Character character_of(const RootSystem& rs, const Weight& lambda, unsigned long long max_dim = kDefaultMaxDim) {
  IVec l = require_dominant(rs, lambda);
  auto dim = weyl_dimension(rs, l);
  if (dim > max_dim)
    throw CapExceeded("dim V(" + lambda.to_string() + ") = " + std::to_string(dim) + " exceeds cap " + std::to_string(max_dim));
  Character ch;
  for (const auto& [mu, m] : *dominant_multiplicities(rs, l))
    for (const auto& x : weyl_orbit(rs, mu)) ch.entries[x] = m;
  ensure(static_cast<unsigned long long>(ch.total()) == dim, "character total disagrees with the Weyl dimension formula");
  return ch;
}

/// Product of two formal characters.
inline Character multiply(const Character& a, const Character& b) {
  Character out;
  for (const auto& [x, m] : a.entries)
    for (const auto& [y, n] : b.entries) out.add(x + y, m * n);
  return out;
}

}  // namespace prvkit
