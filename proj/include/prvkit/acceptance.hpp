#pragma once

// Acceptance criteria 1-12 as self-contained checks. Each check compares the
// library against an oracle computed along an independent route, or against a
// closed form.

#include "prvkit/hcmods.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace prvkit::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

/// Dominant integral weights with dim V(lambda) <= bound; dimension grows in
/// each coordinate, so a search from 0 that stops at the bound finds them all.
inline std::vector<IVec> dominant_weights_up_to_dim(const RootSystem& rs, unsigned long long bound) {
  std::set<IVec> seen{IVec(rs.rank(), 0)};
  std::vector<IVec> queue{IVec(rs.rank(), 0)};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      IVec x = queue[q];
      ++x[i];
      if (weyl_dimension(rs, x) <= bound && seen.insert(x).second) queue.push_back(x);
    }
  return {seen.begin(), seen.end()};
}

/// Ordered pairs (lambda, mu) with dim V(lambda) dim V(mu) <= bound.
inline std::vector<std::pair<IVec, IVec>> pairs_up_to(const RootSystem& rs, unsigned long long bound) {
  auto ws = dominant_weights_up_to_dim(rs, bound);
  std::vector<std::pair<IVec, IVec>> out;
  for (const auto& l : ws)
    for (const auto& m : ws)
      if (weyl_dimension(rs, l) * weyl_dimension(rs, m) <= bound) out.emplace_back(l, m);
  return out;
}

struct PairData {
  IVec lambda, mu;
  Decomposition reference;  // character method
  bool agree = true;
  std::string disagreement;
};

struct SystemData {
  RootSystem rs;
  std::vector<PairData> pairs;
};

inline constexpr const char* kFourWaySystems[] = {"A1", "A2", "B2", "G2"};

/// Criterion 2 data, computed once and shared by criteria 2-4.
inline const std::vector<SystemData>& four_way_data() {
  static std::once_flag once;
  static std::vector<SystemData> data;
  std::call_once(once, [] {
    for (const char* label : kFourWaySystems) {
      SystemData sd{RootSystem::build(label), {}};
      for (const auto& [l, m] : pairs_up_to(sd.rs, 2000)) {
        PairData pd;
        pd.lambda = l;
        pd.mu = m;
        Weight wl = Weight::from_ints(l), wm = Weight::from_ints(m);
        pd.reference = decompose(sd.rs, wl, wm, Method::Character);
        for (Method meth : {Method::Steinberg, Method::Klimyk, Method::Prv}) {
          auto d = decompose(sd.rs, wl, wm, meth);
          if (!(d == pd.reference)) {
            pd.agree = false;
            pd.disagreement = method_name(meth);
          }
        }
        sd.pairs.push_back(std::move(pd));
      }
      data.push_back(std::move(sd));
    }
  });
  return data;
}

inline std::string pair_string(const IVec& l, const IVec& m) {
  return "(" + Weight::from_ints(l).to_string() + ";" + Weight::from_ints(m).to_string() + ")";
}

inline CriterionResult make(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.pass = true;
  return r;
}

inline void fail(CriterionResult& r, const std::string& why) {
  if (r.pass) r.detail = why;
  r.pass = false;
}

}  // namespace detail

// 1. sl2 Clebsch-Gordan.
inline CriterionResult criterion_1() {
  auto r = detail::make(1, "sl2 Clebsch-Gordan, 0 <= mu <= lambda <= 20");
  RootSystem rs = RootSystem::build("A1");
  long checked = 0;
  for (long l = 0; l <= 20; ++l)
    for (long m = 0; m <= l; ++m) {
      std::map<IVec, long> expect;
      for (long n = l - m; n <= l + m; n += 2) expect[{n}] = 1;
      for (Method meth : {Method::Character, Method::Steinberg, Method::Klimyk, Method::Prv}) {
        auto d = decompose(rs, Weight::from_ints({l}), Weight::from_ints({m}), meth);
        if (d.entries != expect)
          detail::fail(r, std::string(method_name(meth)) + " wrong at " + detail::pair_string({l}, {m}));
        ++checked;
      }
    }
  if (r.pass) r.detail = std::to_string(checked) + " decompositions";
  return r;
}

// 2. Four-way agreement.
inline CriterionResult criterion_2() {
  auto r = detail::make(2, "four-way method agreement, dim product <= 2000 in A1, A2, B2, G2");
  std::ostringstream counts;
  for (const auto& sd : detail::four_way_data()) {
    for (const auto& pd : sd.pairs)
      if (!pd.agree) detail::fail(r, sd.rs.label() + " " + pd.disagreement + " differs at " + detail::pair_string(pd.lambda, pd.mu));
    counts << sd.rs.label() << ":" << sd.pairs.size() << " ";
  }
  if (r.pass) r.detail = "pairs " + counts.str();
  return r;
}

// 3. PRV identity and the V+/V- symmetry.
inline CriterionResult criterion_3() {
  auto r = detail::make(3, "m^nu = dim V+(mu; nu-lambda, lambda) = dim V+(nu; lambda+w0 mu, -w0 mu), V+/V- symmetry");
  long triples = 0;
  for (const auto& sd : detail::four_way_data()) {
    const RootSystem& rs = sd.rs;
    const WeylGroup& W = enumerate_weyl(rs);
    const IntMatrix& w0 = W.longest().matrix;
    struct Triple {
      const detail::PairData* pd;
      IVec nu;
    };
    std::vector<Triple> triples_all;
    for (const auto& pd : sd.pairs)
      for (const auto& nu : candidate_components(rs, pd.lambda, pd.mu)) triples_all.push_back({&pd, nu});
    triples += static_cast<long>(triples_all.size());

    // First form and symmetry: one full realization of V(mu) at a time.
    std::map<IVec, std::vector<const Triple*>> by_mu, by_nu;
    for (const auto& t : triples_all) {
      by_mu[t.pd->mu].push_back(&t);
      by_nu[t.nu].push_back(&t);
    }
    for (const auto& [mu, ts] : by_mu) {
      IrrepRealization V = realize(rs, Weight::from_ints(mu), 4000);
      for (const Triple* t : ts) {
        const IVec& l = t->pd->lambda;
        long m = t->pd->reference.at(t->nu);
        IVec gamma = t->nu - l;
        auto plus = v_extremes(V, gamma, l).dim;
        auto minus = v_extremes(V, w0.apply(gamma), -w0.apply(l), false).dim;
        if (static_cast<long>(plus) != m)
          detail::fail(r, rs.label() + " first form at " + detail::pair_string(l, mu) + " nu=" + format_ivec(t->nu));
        if (plus != minus)
          detail::fail(r, rs.label() + " V+/V- symmetry at " + detail::pair_string(l, mu) + " nu=" + format_ivec(t->nu));
      }
    }
    // Second form: V(nu) is only needed down to the weight lambda + w0 mu.
    for (const auto& [nu, ts] : by_nu) {
      long height = 0;
      for (const Triple* t : ts)
        height = std::max(height, sum(*rs.weight_to_root(nu - t->pd->lambda - w0.apply(t->pd->mu))));
      IrrepRealization V = realize(rs, Weight::from_ints(nu), 1ULL << 40, height);
      for (const Triple* t : ts) {
        const IVec& l = t->pd->lambda;
        IVec w0mu = w0.apply(t->pd->mu);
        auto second = v_extremes(V, l + w0mu, -w0mu).dim;
        if (static_cast<long>(second) != t->pd->reference.at(nu))
          detail::fail(r, rs.label() + " second form at " + detail::pair_string(l, t->pd->mu) + " nu=" + format_ivec(nu));
      }
    }
  }
  if (r.pass) r.detail = std::to_string(triples) + " triples";
  return r;
}

// 4. PRV conjecture and Kumar's lower bound.
inline CriterionResult criterion_4() {
  auto r = detail::make(4, "m^{lambda+w mu} >= max(1, #eta^-1(eta(W_lambda w W_mu))), = 1 when lambda + w mu is dominant");
  long checked = 0, sharp = 0;
  for (const auto& sd : detail::four_way_data()) {
    const RootSystem& rs = sd.rs;
    const WeylGroup& W = enumerate_weyl(rs);
    for (const auto& pd : sd.pairs) {
      Weight wl = Weight::from_ints(pd.lambda), wm = Weight::from_ints(pd.mu);
      auto dc = double_cosets(rs, wl, wm);
      auto eta = eta_values(rs, pd.lambda, pd.mu, dc, W);
      for (std::size_t k = 0; k < W.size(); ++k) {
        IVec x = pd.lambda + W[k].matrix.apply(pd.mu);
        IVec comp = dominant_rep(rs, x);
        long mult = pd.reference.at(comp);
        long bound = 0;
        for (const auto& e : eta) bound += e == comp;
        ++checked;
        if (bound > 1) ++sharp;
        if (mult < std::max(1L, bound))
          detail::fail(r, rs.label() + " bound fails at " + detail::pair_string(pd.lambda, pd.mu) + " w=" + W[k].word_string());
        if (all_nonnegative(x) && mult != 1)
          detail::fail(r, rs.label() + " dominant case not 1 at " + detail::pair_string(pd.lambda, pd.mu) + " w=" + W[k].word_string());
      }
    }
  }
  if (r.pass) r.detail = std::to_string(checked) + " (pair, w) cases, " + std::to_string(sharp) + " with bound > 1";
  return r;
}

// 5. KPRV multiplicity one, Bruhat monotonicity, regular-weight exclusion.
inline CriterionResult criterion_5() {
  auto r = detail::make(5, "KPRV: multiplicity 1, Bruhat monotonicity, exclusion for w' < w (A1, A2, tensor dim <= 100)");
  long cases = 0, containments = 0, exclusions = 0;
  for (const char* label : {"A1", "A2"}) {
    RootSystem rs = RootSystem::build(label);
    const WeylGroup& W = enumerate_weyl(rs);
    for (const auto& [l, m] : detail::pairs_up_to(rs, 100)) {
      TensorModule T(shared_realization(rs, l), shared_realization(rs, m));
      std::vector<Submodule> S;
      for (const auto& w : W.elements()) S.push_back(extremal_submodule(T, w));
      bool regular = true;
      for (std::size_t i = 0; i < rs.rank(); ++i) regular = regular && l[i] > 0 && m[i] > 0;
      for (std::size_t a = 0; a < W.size(); ++a) {
        IVec comp = dominant_rep(rs, l + W[a].matrix.apply(m));
        ++cases;
        if (S[a].highest_weight_multiplicity(comp) != 1)
          detail::fail(r, rs.label() + " multiplicity != 1 at " + detail::pair_string(l, m) + " w=" + W[a].word_string());
        for (std::size_t b = 0; b < W.size(); ++b) {
          if (b == a || !bruhat_leq(rs, W[b], W[a])) continue;
          ++containments;
          if (!S[a].contains(S[b]))
            detail::fail(r, rs.label() + " S(" + W[b].word_string() + ") not inside S(" + W[a].word_string() + ") at " +
                                detail::pair_string(l, m));
          if (regular) {
            ++exclusions;
            if (S[b].highest_weight_multiplicity(comp) != 0)
              detail::fail(r, rs.label() + " V(" + format_ivec(comp) + ") occurs in S(" + W[b].word_string() + ") at " +
                                  detail::pair_string(l, m) + " w=" + W[a].word_string());
          }
        }
      }
    }
  }
  if (r.pass)
    r.detail = std::to_string(cases) + " multiplicities, " + std::to_string(containments) + " containments, " +
               std::to_string(exclusions) + " exclusions";
  return r;
}

// 6. A rank-two generalized PRV component of multiplicity >= 2.
inline CriterionResult criterion_6() {
  auto r = detail::make(6, "A2, lambda = mu = rho: some w gives m^{rho + w rho} >= 2");
  RootSystem rs = RootSystem::build("A2");
  const WeylGroup& W = enumerate_weyl(rs);
  IVec rho = rs.rho_ints();
  auto full = decompose(rs, rs.rho(), rs.rho(), Method::Character);
  std::string found;
  for (const auto& w : W.elements()) {
    IVec comp = dominant_rep(rs, rho + w.matrix.apply(rho));
    long m = full.at(comp);
    if (m >= 2) found += (found.empty() ? "" : ", ") + std::string("w=") + w.word_string() + " -> V(" + format_ivec(comp) + ") m=" + std::to_string(m);
  }
  if (found.empty())
    detail::fail(r, "no w found");
  else
    r.detail = found;
  return r;
}

// 7. wt(V(lambda) (x) V(mu)) = wt V(lambda + mu), dominance <=> hull.
inline CriterionResult criterion_7() {
  auto r = detail::make(7, "wt(V(lambda) x V(mu)) = wt V(lambda+mu) and dominance <=> hull, coordinates <= 4, rank <= 3");
  long pairs = 0;
  for (const char* label : {"A1", "A2", "B2", "G2", "A1xA1", "A3", "B3", "C3", "A1xA2", "A1xA1xA1"}) {
    RootSystem rs = RootSystem::build(label);
    const std::size_t rank = rs.rank();
    // Weights are packed one byte per coordinate: pack(x, off) = sum (x_i + off) 256^i,
    // so pack(x, 64) + pack(y, 64) = pack(x + y, 128).
    auto pack = [&](const IVec& x, long off) {
      long key = 0;
      for (std::size_t i = rank; i-- > 0;) {
        if (x[i] + off < 0 || x[i] + off > 255 || std::abs(x[i]) >= 64)
          throw InvariantViolation("criterion 7: weight coordinate out of packing range");
        key = key * 256 + x[i] + off;
      }
      return key;
    };
    std::vector<IVec> box;
    IVec x(rank, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == x.size()) {
        box.push_back(x);
        return;
      }
      for (x[i] = 0; x[i] <= 4; ++x[i]) rec(i + 1);
    };
    rec(0);
    struct Table {
      std::vector<long> dom64, all64;
    };
    std::map<IVec, Table> tables;
    auto table = [&](const IVec& l) -> const Table& {
      auto it = tables.find(l);
      if (it != tables.end()) return it->second;
      Table t;
      for (const auto& [mu, m] : *dominant_multiplicities(rs, l)) {
        t.dom64.push_back(pack(mu, 64));
        for (const auto& y : weyl_orbit(rs, mu)) t.all64.push_back(pack(y, 64));
      }
      return tables.emplace(l, std::move(t)).first->second;
    };
    // dom_index[pack(z, 128)] = index of the dominant rep of z among the
    // dominant weights of V(lambda + mu), or -1 if z is not a weight of it.
    std::vector<std::int32_t> dom_index(std::size_t{1} << (8 * rank), -1);
    std::vector<long> stamp;
    long pair_id = 0;
    std::map<IVec, std::vector<std::pair<IVec, IVec>>> by_sum;
    for (const auto& l : box)
      for (const auto& m : box) by_sum[l + m].emplace_back(l, m);
    for (const auto& [s, members] : by_sum) {
      std::vector<long> s_all;
      std::int32_t n_dom = 0;
      for (const auto& [mu, k] : *dominant_multiplicities(rs, s)) {
        for (const auto& y : weyl_orbit(rs, mu)) {
          s_all.push_back(pack(y, 128));
          dom_index[s_all.back()] = n_dom;
        }
        ++n_dom;
      }
      stamp.assign(n_dom, -1);
      for (const auto& [l, m] : members) {
        ++pairs;
        ++pair_id;
        const Table& tl = table(l);
        const Table& tm = table(m);
        // {dom(x + y)} over x in wt V(lambda), y in wt V(mu) equals the dominant
        // weights of V(lambda + mu); by W-invariance x may be taken dominant.
        bool ok = true;
        std::int32_t hits = 0;
        for (long px : tl.dom64) {
          for (long py : tm.all64) {
            std::int32_t d = dom_index[px + py];
            if (d < 0) {
              ok = false;
              break;
            }
            if (stamp[d] != pair_id) {
              stamp[d] = pair_id;
              ++hits;
            }
          }
          if (!ok) break;
        }
        if (!ok || hits != n_dom) detail::fail(r, rs.label() + " weight sets differ at " + detail::pair_string(l, m));
        auto [dom, hull] = dominance_hull_equiv(rs, Weight::from_ints(l), Weight::from_ints(m));
        if (dom != hull) detail::fail(r, rs.label() + " dominance and hull disagree at " + detail::pair_string(l, m));
      }
      for (long k : s_all) dom_index[k] = -1;
    }
  }
  if (r.pass) r.detail = std::to_string(pairs) + " pairs";
  return r;
}

// 8. Shapovalov determinant: direct Gram determinant vs product formula.
inline CriterionResult criterion_8() {
  auto r = detail::make(8, "Shapovalov det: direct proportional to the product formula (A1 ht <= 6, A2 ht <= 4); sl2 depth 2 = 2h(h-1)");
  long checked = 0;
  {
    RootSystem rs = RootSystem::build("A1");
    Enveloping U(rs);
    for (long d = 0; d <= 6; ++d) {
      ++checked;
      if (!shapovalov_ratio(U, {d})) detail::fail(r, "A1 depth " + std::to_string(d));
    }
    Poly h = Poly::variable(1, 0);
    Poly expect = (h * (h - Poly::constant(1, 1))).scaled(2);
    if (!(shapovalov_det(U, {2}, DetMode::Direct).expanded == expect)) detail::fail(r, "sl2 depth 2 direct value");
  }
  {
    RootSystem rs = RootSystem::build("A2");
    Enveloping U(rs);
    for (long a = 0; a <= 4; ++a)
      for (long b = 0; a + b <= 4; ++b) {
        ++checked;
        if (!shapovalov_ratio(U, {a, b})) detail::fail(r, "A2 nu=" + format_ivec({a, b}));
      }
  }
  if (r.pass) r.detail = std::to_string(checked) + " depths";
  return r;
}

// 9. sl2 PRV determinant.
inline CriterionResult criterion_9() {
  auto r = detail::make(9, "sl2 PRV determinant proportional to h(h-1)...(h-mu/2+1), m_{j,mu} = delta_{j,mu/2}, even mu <= 12");
  RootSystem rs = RootSystem::build("A1");
  for (long m = 0; m <= 12; m += 2) {
    auto p = prv_det(rs, Weight::from_ints({m}));
    std::map<long, long> expect{{m / 2, 1}};
    if (p.empty || p.spectra.size() != 1 || p.spectra[0].mult != expect) detail::fail(r, "spectrum at mu=" + std::to_string(m));
    if (!p.kprime.expanded.ratio_to(falling_factorial_h(m / 2))) detail::fail(r, "determinant at mu=" + std::to_string(m));
  }
  for (long m = 1; m <= 11; m += 2)
    if (!prv_det(rs, Weight::from_ints({m})).empty) detail::fail(r, "odd mu=" + std::to_string(m) + " has a zero weight");
  if (r.pass) r.detail = "mu = 0, 2, ..., 12";
  return r;
}

// 10. sl2 Omega' check.
inline CriterionResult criterion_10() {
  auto r = detail::make(10, "sl2 Omega': images of Delta_1, Delta_2, Delta_bar and the generated rings");
  auto res = sl2_omega(Weight::from_ints({0}), Weight::from_ints({0}));
  Poly hb = Poly::variable(2, 0), h1 = Poly::variable(2, 1);
  Poly e1 = h1 * h1 + h1.scaled(2);
  Poly e2 = hb * hb - hb.scaled(2) - (hb * h1).scaled(2) + h1 * h1 + h1.scaled(2);
  Poly ebar = hb * hb + hb.scaled(2);
  if (!res.omega_commutes) detail::fail(r, "an element of Omega' does not commute with the diagonal copy");
  if (!(res.delta1 == e1)) detail::fail(r, "Delta_1 -> " + res.delta1.to_string(sl2_omega_names()));
  if (!(res.delta2 == e2)) detail::fail(r, "Delta_2 -> " + res.delta2.to_string(sl2_omega_names()));
  if (!(res.delta_bar == ebar)) detail::fail(r, "Delta_bar -> " + res.delta_bar.to_string(sl2_omega_names()));
  // Values at (n1, n1 - n2).
  for (long n1 = 1; n1 <= 8; ++n1)
    for (long n2 = 1; n2 <= n1; ++n2) {
      auto v = sl2_omega(Weight::from_ints({n1}), Weight::from_ints({n1 - n2}));
      long nu = n1 - n2;
      if (v.v1 != n1 * n1 + 2 * n1 || v.v2 != n2 * n2 + 2 * n2 || v.vbar != nu * nu + 2 * nu)
        detail::fail(r, "values at (n1, n2) = (" + std::to_string(n1) + ", " + std::to_string(n2) + ")");
    }
  // nu = 0: all three images lie in C[h1]^(W,*).
  for (const auto& p : sl2_omega_images_at(res, 0))
    if (!in_twisted_invariants_sl2(p)) detail::fail(r, "nu = 0 image outside C[h1^2 + 2 h1]");
  // nu > 0: Delta_bar + Delta_1 - Delta_2 = 4 nu + 2 nu h1 generates C[h1].
  for (long nu = 1; nu <= 6; ++nu) {
    auto img = sl2_omega_images_at(res, nu);
    Poly lin = img[2] + img[0] - img[1];
    Poly expect = Poly::constant(1, 4 * nu) + Poly::variable(1, 0).scaled(2 * nu);
    if (!(lin == expect)) detail::fail(r, "nu = " + std::to_string(nu) + " linear combination");
  }
  if (r.pass) r.detail = "normal forms exact; values checked for 0 < n2 <= n1 <= 8";
  return r;
}

// 11. Central characters.
inline CriterionResult criterion_11() {
  auto r = detail::make(11, "chi(z w)(Delta) = z^2 + 2z on sl2; chi constant on twisted orbits for Delta^k, k <= 3, rank <= 2");
  {
    RootSystem rs = RootSystem::build("A1");
    Enveloping U(rs);
    auto cas = U.casimir();
    for (long z = -3; z <= 5; ++z)
      if (central_character(U, Weight::from_ints({z}), cas.element) != z * z + 2 * z)
        detail::fail(r, "sl2 value at z=" + std::to_string(z));
  }
  long checked = 0;
  for (const char* label : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    RootSystem rs = RootSystem::build(label);
    const WeylGroup& W = enumerate_weyl(rs);
    Enveloping U(rs);
    UElement delta = U.casimir().element;
    std::vector<Weight> grid;
    IVec x(rs.rank(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == x.size()) {
        grid.push_back(Weight::from_ints(x));
        return;
      }
      for (x[i] = -2; x[i] <= 2; ++x[i]) rec(i + 1);
    };
    rec(0);
    Weight odd(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) odd[i] = ratio(static_cast<long>(2 * i + 1), static_cast<long>(i + 2)) - 1;
    grid.push_back(odd);
    UElement power = U.one();
    for (unsigned k = 1; k <= 3; ++k) {
      power = U.mul(power, delta);
      if (!U.is_central(power)) {
        detail::fail(r, rs.label() + " Delta^" + std::to_string(k) + " is not central");
        continue;
      }
      Poly p = U.hc_projection(power);
      for (const auto& lam : grid) {
        Rational base = p.evaluate(lam.coords);
        for (const auto& w : W.elements()) {
          ++checked;
          if (p.evaluate(twisted_action(rs, w, lam).coords) != base)
            detail::fail(r, rs.label() + " k=" + std::to_string(k) + " lambda=" + lam.to_string() + " w=" + w.word_string());
        }
      }
    }
  }
  if (r.pass) r.detail = std::to_string(checked) + " orbit evaluations";
  return r;
}

// 12. Harish-Chandra parameter calculus.
inline CriterionResult criterion_12() {
  auto r = detail::make(12, "HC calculus: equivalence relation, sl2 witness, finite-dimensional consistency, class zero, isoclass counts");
  long nontrivial = 0;
  // Grids of 200 parameters.
  auto grid_for = [](const RootSystem& rs) {
    std::vector<HCParams> g;
    if (rs.rank() == 1) {
      for (long a = -9; a <= 10; ++a)
        for (long n = -4; n <= 5; ++n) g.push_back({Weight({ratio(a, 2)}), Weight::from_ints({n})});
    } else {
      std::vector<Rational> vals = {-2, -1, 0, ratio(1, 2), 1};
      std::vector<IVec> nus = {{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {1, -1}, {-1, 0}, {0, -1}, {2, -1}};
      for (const auto& a : vals)
        for (const auto& b : vals)
          for (const auto& n : nus) g.push_back({Weight({a, b}), Weight::from_ints(n)});
    }
    return g;
  };
  for (const char* label : {"A1", "A2"}) {
    RootSystem rs = RootSystem::build(label);
    auto grid = grid_for(rs);
    if (grid.size() != 200) detail::fail(r, "grid size");
    const std::size_t n = grid.size();
    std::vector<std::vector<std::optional<WeylElement>>> eq(n, std::vector<std::optional<WeylElement>>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) eq[a][b] = equivalent(rs, grid[a], grid[b]);
    for (std::size_t a = 0; a < n; ++a) {
      if (!eq[a][a]) detail::fail(r, rs.label() + " not reflexive");
      for (std::size_t b = 0; b < n; ++b) {
        if (!eq[a][b]) continue;
        if (a != b) ++nontrivial;
        if (!eq[b][a]) detail::fail(r, rs.label() + " not symmetric");
        auto ia = invariants(rs, grid[a]), ib = invariants(rs, grid[b]);
        if (ia.minimal_type != ib.minimal_type || ia.inf_char != ib.inf_char)
          detail::fail(r, rs.label() + " equivalent parameters with different invariants");
        for (std::size_t c = 0; c < n; ++c) {
          if (!eq[b][c]) continue;
          if (!eq[a][c]) detail::fail(r, rs.label() + " not transitive");
          WeylElement w = compose(rs, *eq[b][c], *eq[a][b]);
          if (twisted_action(rs, w, grid[a].lambda) != grid[c].lambda || w.matrix.apply(grid[a].nu) != grid[c].nu)
            detail::fail(r, rs.label() + " witnesses do not compose");
        }
      }
    }
    // Finite-dimensional members.
    for (const auto& p : grid) {
      auto fd = finite_dimensional(rs, p);
      if (!fd) continue;
      auto [l, m] = *fd;
      auto et = extreme_types(rs, Weight::from_ints(l), Weight::from_ints(m));
      auto inv = invariants(rs, p);
      CentralCharacterPair expect{central_character_id(rs, Weight::from_ints(l)), central_character_id(rs, Weight::from_ints(m))};
      if (et.minimal != inv.minimal_type) detail::fail(r, rs.label() + " minimal type of V(lambda, mu)");
      if (inv.inf_char != expect) detail::fail(r, rs.label() + " infinitesimal character of V(lambda, mu)");
    }
    // Class zero completeness, oracle through the invariant form.
    for (const auto& p : grid) {
      Weight lr = p.lambda + rs.rho();
      bool complete = true;
      for (const auto& beta : rs.positive_roots()) {
        IVec a = rs.root_to_weight(beta);
        Rational pairing = 2 * rs.form(lr, Weight::from_ints(a)) / rs.form(Weight::from_ints(a), Weight::from_ints(a));
        if (pairing.get_den() == 1 && sgn(pairing) != 0) complete = false;
      }
      if (class_zero(rs, p.lambda).complete != complete) detail::fail(r, rs.label() + " completeness at " + p.lambda.to_string());
    }
    if (!class_zero(rs, -rs.rho()).complete) detail::fail(r, rs.label() + " lambda = -rho should be complete");
    // lambda = n rho.
    for (long k = 0; k <= 4; ++k) {
      IVec l = scaled(rs.rho_ints(), k);
      auto cz = class_zero(rs, Weight::from_ints(l));
      if (k > 0 && cz.complete) detail::fail(r, rs.label() + " dominant lambda reported complete");
      if (!cz.mults) {
        detail::fail(r, rs.label() + " no multiplicities for lambda = " + std::to_string(k) + " rho");
        continue;
      }
      if (cz.mults->at(IVec(rs.rank(), 0)) != 1) detail::fail(r, rs.label() + " trivial type multiplicity != 1");
      for (const auto& nu : candidate_components(rs, l, dual_weight(rs, l))) {
        if (!rs.in_root_lattice(nu)) continue;
        // [V(lambda) (x) V(lambda)* : V(nu)] = dim V(nu)_0 once no (k+1) alpha_i is a weight of V(nu).
        bool in_range = true;
        for (std::size_t i = 0; i < rs.rank(); ++i)
          if (weight_multiplicity(rs, Weight::from_ints(nu), Weight::from_ints(rs.root_to_weight(scaled(rs.simple_root(i), k + 1)))) > 0)
            in_range = false;
        if (!in_range) continue;
        long zero = weight_multiplicity(rs, Weight::from_ints(nu), Weight(rs.rank()));
        if (cz.mults->at(nu) != zero)
          detail::fail(r, rs.label() + " class-zero multiplicity at nu=" + format_ivec(nu) + ", lambda = " + std::to_string(k) + " rho");
      }
    }
  }
  // sl2 witness (lambda, nu) ~ (-lambda - 2, -nu).
  {
    RootSystem rs = RootSystem::build("A1");
    for (const auto& p : grid_for(rs)) {
      HCParams q{Weight({-p.lambda[0] - 2}), Weight::from_ints({-p.nu.to_ints()[0]})};
      auto w = equivalent(rs, p, q);
      if (!w) detail::fail(r, "sl2 witness missing at " + p.lambda.to_string() + ";" + p.nu.to_string());
    }
  }
  // Isomorphism-class counts against W_lambda-orbits on W mu.
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(label);
    const WeylGroup& W = enumerate_weyl(rs);
    IVec zero(rs.rank(), 0), rho = rs.rho_ints();
    std::vector<std::pair<IVec, IVec>> tests = {{rho, rho}, {rho, scaled(rho, 2)}, {zero, rho}, {rho, zero}, {zero, zero}};
    if (rs.rank() == 2) tests.push_back({{1, 0}, {0, 1}});
    if (rs.rank() == 2) tests.push_back({{1, 0}, {1, 0}});
    for (const auto& [l, m] : tests) {
      auto count = isoclass_count(rs, Weight::from_ints(l), Weight::from_ints(m));
      auto stab = stabilizer(W, Weight::from_ints(l));
      std::set<IVec> seen;
      std::size_t orbits = 0;
      for (const auto& y : weyl_orbit(rs, m)) {
        if (seen.count(y)) continue;
        ++orbits;
        for (auto s : stab) seen.insert(W[s].matrix.apply(y));
      }
      if (count != orbits) detail::fail(r, rs.label() + " isoclass count at " + detail::pair_string(l, m));
      bool regular = all_nonnegative(l - rho) && all_nonnegative(m - rho);
      if (regular && count != W.size()) detail::fail(r, rs.label() + " regular count != |W|");
      if ((is_zero(l) || is_zero(m)) && count != 1) detail::fail(r, rs.label() + " zero weight count != 1");
    }
  }
  if (nontrivial == 0) detail::fail(r, "grid exercised no nontrivial equivalences");
  if (r.pass) r.detail = std::to_string(nontrivial) + " nontrivial equivalent pairs";
  return r;
}

using CriterionFn = CriterionResult (*)();

inline const std::vector<CriterionFn>& all_criteria() {
  static const std::vector<CriterionFn> fns = {criterion_1, criterion_2, criterion_3,  criterion_4,
                                               criterion_5, criterion_6, criterion_7,  criterion_8,
                                               criterion_9, criterion_10, criterion_11, criterion_12};
  return fns;
}

/// Runs the given criteria (1-based ids) on up to `threads` worker threads;
/// results come back in id order. Exceptions count as failures.
inline std::vector<CriterionResult> run(const std::vector<int>& ids, unsigned threads = 1) {
  std::vector<CriterionResult> out(ids.size());
  std::size_t next = 0;
  std::mutex m;
  auto worker = [&] {
    while (true) {
      std::size_t k;
      {
        std::lock_guard lock(m);
        if (next == ids.size()) return;
        k = next++;
      }
      int id = ids[k];
      auto start = std::chrono::steady_clock::now();
      try {
        if (id < 1 || id > static_cast<int>(all_criteria().size())) throw UsageError("no criterion " + std::to_string(id));
        out[k] = all_criteria()[id - 1]();
      } catch (const std::exception& e) {
        out[k].id = id;
        out[k].title = "criterion " + std::to_string(id);
        out[k].pass = false;
        out[k].detail = std::string("exception: ") + e.what();
      }
      out[k].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(ids.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

inline std::vector<int> all_ids() {
  std::vector<int> ids;
  for (int i = 1; i <= static_cast<int>(all_criteria().size()); ++i) ids.push_back(i);
  return ids;
}

inline std::string format_line(const CriterionResult& r, bool color = false, bool timing = false) {
  std::string status = r.pass ? "PASS" : "FAIL";
  if (color) status = (r.pass ? "\033[32m" : "\033[31m") + status + "\033[0m";
  std::ostringstream s;
  s << "criterion " << (r.id < 10 ? " " : "") << r.id << ": " << status << "  " << r.title;
  if (!r.detail.empty()) s << " [" << r.detail << "]";
  if (timing) s << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
  return s.str();
}

}  // namespace prvkit::acceptance
