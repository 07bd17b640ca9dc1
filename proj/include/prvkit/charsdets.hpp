#pragma once

// Central characters, infinitesimal characters of Harish-Chandra modules, the
// sl2 x sl2 Omega' computation, Shapovalov determinants and PRV determinants.

#include "prvkit/envalg.hpp"
#include "prvkit/irreps.hpp"

namespace prvkit {

// ---------------------------------------------------------------------------
// Central characters

/// Twisted-orbit label: dominant rep of lambda + rho, shifted back by rho.
struct CentralCharacterId {
  Weight rep;

  friend bool operator==(const CentralCharacterId& a, const CentralCharacterId& b) { return a.rep == b.rep; }
  friend bool operator!=(const CentralCharacterId& a, const CentralCharacterId& b) { return !(a == b); }
  friend bool operator<(const CentralCharacterId& a, const CentralCharacterId& b) { return a.rep < b.rep; }
  std::string to_string() const { return rep.to_string(); }
};

struct CentralCharacterPair {
  CentralCharacterId left, right;

  friend bool operator==(const CentralCharacterPair& a, const CentralCharacterPair& b) {
    return a.left == b.left && a.right == b.right;
  }
  friend bool operator!=(const CentralCharacterPair& a, const CentralCharacterPair& b) { return !(a == b); }
  friend bool operator<(const CentralCharacterPair& a, const CentralCharacterPair& b) {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  }
};

inline CentralCharacterId central_character_id(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw UsageError("weight has the wrong number of coordinates");
  return {dominant_representative(rs, lambda + rs.rho()).first - rs.rho()};
}

/// lambda(beta(z)) for a central element z.
inline Rational central_character(Enveloping& U, const Weight& lambda, const UElement& z) {
  if (lambda.rank() != U.root_system().rank()) throw UsageError("weight has the wrong number of coordinates");
  if (!U.is_central(z)) throw UsageError("element is not central");
  return U.hc_projection(z).evaluate(lambda.coords);
}

/// Label of chi(lambda, nu - lambda - 2 rho).
inline CentralCharacterPair hc_inf_character(const RootSystem& rs, const Weight& lambda, const Weight& nu) {
  if (nu.rank() != rs.rank() || !nu.is_integral()) throw UsageError("nu must be an integral weight of the right rank");
  Weight two_rho = Rational(2) * rs.rho();
  return {central_character_id(rs, lambda), central_character_id(rs, nu - lambda - two_rho)};
}

// ---------------------------------------------------------------------------
// sl2 x sl2: the subalgebra Omega' = C[Delta_1, Delta_2, Delta_bar]

struct Sl2OmegaResult {
  // Normal forms modulo (U g^) q^ after the projection on the diagonal factor;
  // polynomials in (hbar, h1).
  Poly delta1, delta2, delta_bar;
  Rational v1, v2, vbar;  // evaluated at (hbar, h1) = (nu, lambda)
  bool omega_commutes = false;  // each Delta commutes with the diagonal copy
};

namespace detail {

/// Element of U(g) rewritten in another PBW basis of the same Lie algebra.
inline UElement rewrite(PBWAlgebra& target, const std::vector<SparseVec>& images, const UElement& u) {
  UElement out(target.n());
  for (const auto& [m, c] : u.terms()) {
    UElement cur = target.one();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) cur = target.mul(cur, target.element(images[i]));
    out.add(cur, c);
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> sl2_omega_names() { return {"hbar", "h1"}; }

inline Sl2OmegaResult sl2_omega(const Weight& lambda, const Weight& nu) {
  if (lambda.rank() != 1 || nu.rank() != 1) throw UsageError("sl2_omega takes rank-one weights");
  RootSystem rs = RootSystem::build("A1xA1");
  Enveloping U(rs);
  const ChevalleyBasis& cb = U.basis();
  const std::size_t k1 = *rs.positive_index({1, 0}), k2 = *rs.positive_index({0, 1});
  const std::size_t F1 = cb.f_index(k1), F2 = cb.f_index(k2), E1 = cb.e_index(k1), E2 = cb.e_index(k2);
  const std::size_t H1 = cb.h_index(0), H2 = cb.h_index(1);

  auto casimir_of = [&](const UElement& f, const UElement& e, const UElement& h) {
    return U.mul(f, e).scaled(4) + U.mul(h, h) + h.scaled(2);
  };
  UElement f1 = U.f(k1), f2 = U.f(k2), e1 = U.e(k1), e2 = U.e(k2), h1 = U.h(0), h2 = U.h(1);
  UElement d1 = casimir_of(f1, e1, h1);
  UElement d2 = casimir_of(f2, e2, h2);
  UElement dbar = casimir_of(f1 + f2, e1 + e2, h1 + h2);

  // New basis: fbar, hbar, ebar, h1, e1, f2; the last two span q^.
  const Rational one(1);
  std::vector<SparseVec> elems = {
      {{F1, one}, {F2, one}}, {{H1, one}, {H2, one}}, {{E1, one}, {E2, one}}, {{H1, one}}, {{E1, one}}, {{F2, one}}};
  // SparseVec entries are kept sorted by index.
  for (auto& v : elems) std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  PBWAlgebra alt(change_basis(cb.lie(), elems, {"fbar", "hbar", "ebar", "h1", "e1", "f2"}));
  auto images = inverse_change(elems);

  Sl2OmegaResult res;
  res.omega_commutes = true;
  auto project = [&](const UElement& u) {
    UElement v = detail::rewrite(alt, images, u);
    for (std::size_t g = 0; g < 3; ++g)
      if (!alt.commutator(v, alt.generator(g)).is_zero()) res.omega_commutes = false;
    Poly p(2);
    for (const auto& [m, c] : v.terms()) {
      if (m[0] || m[2] || m[4] || m[5]) continue;
      p.add_term({m[1], m[3]}, c);
    }
    return p;
  };
  res.delta1 = project(d1);
  res.delta2 = project(d2);
  res.delta_bar = project(dbar);
  std::vector<Rational> at = {nu[0], lambda[0]};
  res.v1 = res.delta1.evaluate(at);
  res.v2 = res.delta2.evaluate(at);
  res.vbar = res.delta_bar.evaluate(at);
  return res;
}

/// p(h1) lies in C[h1]^(W,*) iff p(h1) = p(-h1 - 2).
inline bool in_twisted_invariants_sl2(const Poly& p) {
  ensure(p.nvars() == 1, "expected a polynomial in one variable");
  Poly x = Poly::variable(1, 0);
  return p.substitute({Poly::constant(1, -2) - x}) == p;
}

/// The three Omega' images at fixed nu, as polynomials in h1.
inline std::vector<Poly> sl2_omega_images_at(const Sl2OmegaResult& r, const Rational& nu) {
  std::vector<Poly> img = {Poly::constant(1, nu), Poly::variable(1, 0)};
  return {r.delta1.substitute(img), r.delta2.substitute(img), r.delta_bar.substitute(img)};
}

// ---------------------------------------------------------------------------
// Determinants

/// A determinant in the variables h_1..h_r, optionally in factored form
/// scalar * prod factor^exponent.
struct DetPolynomial {
  std::size_t nvars = 0;
  Rational scalar = 1;
  std::vector<std::pair<Poly, unsigned long>> factors;
  Poly expanded;

  bool factored() const { return !factors.empty(); }
  unsigned degree() const { return expanded.degree(); }
};

inline DetPolynomial expand_factors(std::size_t nvars, const Rational& scalar,
                                    std::vector<std::pair<Poly, unsigned long>> factors) {
  DetPolynomial d;
  d.nvars = nvars;
  d.scalar = scalar;
  d.factors = std::move(factors);
  d.expanded = Poly::constant(nvars, scalar);
  for (const auto& [p, e] : d.factors) d.expanded = d.expanded * p.pow(static_cast<unsigned>(e));
  return d;
}

/// h_alpha + rho(h_alpha) - j as a polynomial in h_1..h_r.
inline Poly shifted_coroot(const RootSystem& rs, std::size_t k, long j) {
  std::vector<Rational> coeffs(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) coeffs[i] = rs.coroot(k)[i];
  return Poly::linear(coeffs, Rational(rs.coroot_pairing(rs.rho_ints(), k) - j));
}

enum class DetMode { Direct, Formula };

inline std::size_t default_shapovalov_height(std::size_t rank) { return rank == 1 ? 6 : rank == 2 ? 4 : 3; }

/// Shapovalov determinant on (U n^-)_{-nu}, nu in simple-root coordinates.
inline DetPolynomial shapovalov_det(Enveloping& U, const IVec& nu, DetMode mode, std::size_t max_height = 0) {
  const RootSystem& rs = U.root_system();
  const std::size_t r = rs.rank();
  if (nu.size() != r) throw UsageError("nu has the wrong number of coordinates");
  if (!all_nonnegative(nu)) throw UsageError("nu must be a nonnegative combination of simple roots");
  if (!max_height) max_height = default_shapovalov_height(r);
  if (static_cast<std::size_t>(sum(nu)) > max_height)
    throw CapExceeded("height " + std::to_string(sum(nu)) + " exceeds cap " + std::to_string(max_height));
  if (mode == DetMode::Direct) {
    DetPolynomial d;
    d.nvars = r;
    d.expanded = poly_determinant(U.shapovalov_gram(nu), r);
    return d;
  }
  std::vector<std::pair<Poly, unsigned long>> factors;
  const auto& roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (long j = 1;; ++j) {
      IVec rest = nu - scaled(roots[k], j);
      if (!all_nonnegative(rest)) break;
      auto p = partition_function(rs, rest);
      if (p) factors.emplace_back(shifted_coroot(rs, k, j), static_cast<unsigned long>(p));
    }
  return expand_factors(r, 1, std::move(factors));
}

/// direct / formula as a nonzero rational, if they are proportional.
inline std::optional<Rational> shapovalov_ratio(Enveloping& U, const IVec& nu, std::size_t max_height = 0) {
  auto direct = shapovalov_det(U, nu, DetMode::Direct, max_height);
  auto formula = shapovalov_det(U, nu, DetMode::Formula, max_height);
  return direct.expanded.ratio_to(formula.expanded);
}

/// Gram matrix of the Shapovalov form evaluated at lambda.
inline QMatrix shapovalov_gram_at(Enveloping& U, const IVec& nu, const Weight& lambda) {
  auto g = U.shapovalov_gram(nu);
  QMatrix m(g.size(), g.size());
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) m(a, b) = g[a][b].evaluate(lambda.coords);
  return m;
}

/// Dimension of the space of singular vectors of M(lambda) at weight lambda - nu
/// (vectors of (U n^-)_{-nu} v_lambda killed by every e_i).
inline std::size_t verma_singular_dim(Enveloping& U, const IVec& nu, const Weight& lambda) {
  const RootSystem& rs = U.root_system();
  const ChevalleyBasis& cb = U.basis();
  auto basis = U.negative_monomials(nu);
  if (basis.empty()) return 0;
  // Image of e_i b v_lambda, written on the f-monomials of weight -(nu - alpha_i).
  std::map<Monomial, std::size_t> row_of;
  std::vector<std::vector<std::pair<Monomial, Rational>>> cols(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      UElement prod = U.mul(U.e(*rs.positive_index(rs.simple_root(i))), U.monomial(basis[c]));
      for (const auto& [m, coef] : prod.terms()) {
        Monomial fpart(m.size(), 0);
        Poly::Exponents hex(rs.rank(), 0);
        bool dies = false;
        for (std::size_t x = 0; x < m.size() && !dies; ++x) {
          if (!m[x]) continue;
          if (cb.is_h(x))
            hex[x - cb.h_index(0)] = m[x];
          else if (x < cb.num_positive())
            fpart[x] = m[x];
          else
            dies = true;
        }
        if (dies) continue;
        Rational val = coef;
        for (std::size_t t = 0; t < hex.size(); ++t)
          for (unsigned q = 0; q < hex[t]; ++q) val *= lambda[t];
        if (sgn(val) == 0) continue;
        row_of.emplace(fpart, 0);
        cols[c].emplace_back(fpart, val);
      }
    }
  std::size_t next = 0;
  for (auto& [m, idx] : row_of) idx = next++;
  QMatrix A(row_of.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& [m, v] : cols[c]) A(row_of[m], c) += v;
  if (A.rows() == 0) return basis.size();
  return nullity(A);
}

/// {a, j} = (-1)^j j! a (a-1) ... (a-j+1)
inline DetPolynomial prv_bracket(const Poly& a, long j) {
  std::vector<std::pair<Poly, unsigned long>> factors;
  Rational scalar = 1;
  for (long t = 1; t <= j; ++t) scalar *= -t;
  for (long t = 0; t < j; ++t) factors.emplace_back(a - Poly::constant(a.nvars(), t), 1);
  return expand_factors(a.nvars(), scalar, std::move(factors));
}

struct PrvDetResult {
  bool empty = false;  // V(mu)_0 = 0: empty determinant
  std::size_t zero_dim = 0;
  std::vector<ZeroWeightSpectrum> spectra;  // per positive root
  DetPolynomial kprime;                     // prod {h_alpha + rho(h_alpha) - 1, j}^{m_j}
  DetPolynomial k;                          // prod h_alpha^{m(alpha)}
  long sum_m = 0;                           // sum over alpha of m_mu(alpha)
  long sum_jm = 0;                          // sum over alpha, j of j m_{j,mu}(alpha)
};

/// Product formulas for the PRV determinants of V(mu), from the f_alpha e_alpha
/// spectra on V(mu)_0. Scalars are set to 1 up to the signs of the brackets.
inline PrvDetResult prv_det(const RootSystem& rs, const Weight& mu, unsigned long long realize_cap = 4000) {
  IVec m = require_dominant(rs, mu, "mu");
  const std::size_t r = rs.rank();
  PrvDetResult res;
  if (!rs.in_root_lattice(m)) {
    res.empty = true;
    res.kprime = expand_factors(r, 1, {});
    res.k = expand_factors(r, 1, {});
    return res;
  }
  auto V = shared_realization(rs, m, realize_cap);
  auto recipe = chevalley_recipe(rs);
  res.zero_dim = V->weight_dim(IVec(r, 0));
  std::vector<std::pair<Poly, unsigned long>> kp, kk;
  Rational scalar = 1;
  for (std::size_t a = 0; a < rs.num_positive(); ++a) {
    auto spec = zero_weight_spectrum(*V, recipe, a);
    Poly shifted = shifted_coroot(rs, a, 1);
    for (const auto& [j, mult] : spec.mult) {
      if (j == 0) continue;
      res.sum_jm += j * mult;
      auto br = prv_bracket(shifted, j);
      for (long t = 0; t < mult; ++t) scalar *= br.scalar;
      for (const auto& [p, e] : br.factors) kp.emplace_back(p, e * static_cast<unsigned long>(mult));
    }
    res.sum_m += spec.m_total;
    if (spec.m_total) kk.emplace_back(shifted_coroot(rs, a, rs.coroot_pairing(rs.rho_ints(), a)),
                                      static_cast<unsigned long>(spec.m_total));
    res.spectra.push_back(std::move(spec));
  }
  res.kprime = expand_factors(r, scalar, std::move(kp));
  res.k = expand_factors(r, 1, std::move(kk));
  ensure(res.kprime.degree() == static_cast<unsigned>(res.sum_jm), "PRV determinant has the wrong degree");
  ensure(res.k.degree() == static_cast<unsigned>(res.sum_m), "PRV determinant has the wrong degree");
  return res;
}

/// c h (h-1) ... (h - n + 1) for sl2, with c = 1.
inline Poly falling_factorial_h(long n) {
  Poly p = Poly::constant(1, 1);
  Poly h = Poly::variable(1, 0);
  for (long t = 0; t < n; ++t) p = p * (h - Poly::constant(1, t));
  return p;
}

}  // namespace prvkit
