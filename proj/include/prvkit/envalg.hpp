#pragma once

// Chevalley basis with exact structure constants, PBW normal form in U(g),
// the transpose anti-involution, Harish-Chandra projections, the Shapovalov
// form and the Casimir element.
//
// Basis order (also the PBW order): f_{b_1} .. f_{b_N}, h_1 .. h_r,
// e_{b_N} .. e_{b_1}, where b_1 .. b_N are the positive roots in the
// RootSystem order. The e block mirrors the f block, so the transpose maps
// normally ordered monomials to normally ordered monomials.

#include "prvkit/poly.hpp"
#include "prvkit/weightmodule.hpp"

#include <map>
#include <memory>
#include <unordered_map>

namespace prvkit {

inline constexpr std::size_t kDefaultEngineRank = 4;

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// A finite-dimensional Lie algebra given by a basis and its bracket table.
struct LieBasis {
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<std::vector<SparseVec>> bracket;  // [a][b] = [x_a, x_b]

  const SparseVec& br(std::size_t a, std::size_t b) const { return bracket[a][b]; }
};

namespace detail {

struct SMat {
  std::size_t n = 0;
  std::vector<std::map<std::size_t, Rational>> rows;

  explicit SMat(std::size_t size = 0) : n(size), rows(size) {}
  void add(std::size_t r, std::size_t c, const Rational& v) {
    if (sgn(v) == 0) return;
    auto [it, fresh] = rows[r].try_emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (sgn(it->second) == 0) rows[r].erase(it);
    }
  }
  bool is_zero() const {
    for (const auto& row : rows)
      if (!row.empty()) return false;
    return true;
  }
  friend SMat operator*(const SMat& x, const SMat& y) {
    SMat out(x.n);
    for (std::size_t r = 0; r < x.n; ++r)
      for (const auto& [k, a] : x.rows[r])
        for (const auto& [c, b] : y.rows[k]) out.add(r, c, a * b);
    return out;
  }
  friend SMat operator-(SMat x, const SMat& y) {
    for (std::size_t r = 0; r < y.n; ++r)
      for (const auto& [c, v] : y.rows[r]) x.add(r, c, -v);
    return x;
  }
  SMat scaled(const Rational& s) const {
    SMat out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (const auto& [c, v] : rows[r]) out.add(r, c, v * s);
    return out;
  }
  friend bool operator==(const SMat& a, const SMat& b) { return a.rows == b.rows; }
};

inline void add_to(SparseVec& acc, const SparseVec& v, const Rational& s) {
  std::map<std::size_t, Rational> m(acc.begin(), acc.end());
  for (const auto& [i, c] : v) {
    m[i] += c * s;
    if (sgn(m[i]) == 0) m.erase(i);
  }
  acc.assign(m.begin(), m.end());
}

}  // namespace detail

class ChevalleyBasis {
 public:
  const RootSystem& root_system() const { return rs_; }
  const LieBasis& lie() const { return lie_; }
  const std::vector<RootRecipe>& recipe() const { return recipe_; }
  std::size_t dim() const { return lie_.n; }
  std::size_t num_positive() const { return rs_.num_positive(); }
  std::size_t rank() const { return rs_.rank(); }

  std::size_t f_index(std::size_t k) const { return k; }
  std::size_t h_index(std::size_t i) const { return num_positive() + i; }
  std::size_t e_index(std::size_t k) const { return num_positive() + rank() + (num_positive() - 1 - k); }
  bool is_h(std::size_t idx) const { return idx >= num_positive() && idx < num_positive() + rank(); }
  /// Image of basis element idx under the transpose (h fixed, e_b <-> f_b).
  std::size_t transpose_index(std::size_t idx) const { return is_h(idx) ? idx : dim() - 1 - idx; }
  /// Weight of basis element idx in simple-root coordinates.
  const IVec& weight(std::size_t idx) const { return weights_[idx]; }

  friend ChevalleyBasis chevalley_basis(const RootSystem& rs, std::size_t rank_cap);

 private:
  RootSystem rs_;
  LieBasis lie_;
  std::vector<RootRecipe> recipe_;
  std::vector<IVec> weights_;
};

/// Structure constants computed in the direct sum of the adjoint modules of
/// the simple components, realized from the Cartan matrix alone.
inline ChevalleyBasis chevalley_basis(const RootSystem& rs, std::size_t rank_cap = kDefaultEngineRank) {
  if (rs.rank() > rank_cap)
    throw CapExceeded("rank " + std::to_string(rs.rank()) + " exceeds the enveloping-algebra engine cap " +
                      std::to_string(rank_cap));
  ChevalleyBasis cb;
  cb.rs_ = rs;
  cb.recipe_ = chevalley_recipe(rs);
  const std::size_t N = rs.num_positive(), r = rs.rank(), n = 2 * N + r;
  const auto& roots = rs.positive_roots();

  cb.weights_.resize(n);
  cb.lie_.n = n;
  cb.lie_.names.resize(n);
  for (std::size_t k = 0; k < N; ++k) {
    cb.weights_[cb.f_index(k)] = -roots[k];
    cb.weights_[cb.e_index(k)] = roots[k];
    cb.lie_.names[cb.f_index(k)] = "f[" + format_ivec(roots[k]) + "]";
    cb.lie_.names[cb.e_index(k)] = "e[" + format_ivec(roots[k]) + "]";
  }
  for (std::size_t i = 0; i < r; ++i) {
    cb.weights_[cb.h_index(i)] = IVec(r, 0);
    cb.lie_.names[cb.h_index(i)] = "h[" + std::to_string(i + 1) + "]";
  }

  // Faithful representation: direct sum of adjoint modules of the components.
  std::vector<IrrepRealization> pieces;
  std::size_t total = 0;
  for (const auto& theta : rs.highest_roots()) {
    pieces.push_back(realize(rs, Weight::from_ints(rs.root_to_weight(theta)), 1000));
    total += pieces.back().dim();
  }
  std::vector<detail::SMat> mats(n, detail::SMat(total));
  std::size_t base = 0;
  for (const auto& V : pieces) {
    for (std::size_t b = 0; b < V.weights().size(); ++b) {
      const IVec& w = V.weights()[b];
      std::size_t src = base + V.offset(b);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < V.block_dim(b); ++t) mats[cb.h_index(i)].add(src + t, src + t, w[i]);
      for (std::size_t k = 0; k < N; ++k)
        for (bool raise : {true, false}) {
          IVec tw = rs.root_to_weight(roots[k]);
          IVec target = raise ? w + tw : w - tw;
          auto tb = V.block(target);
          if (!tb) continue;
          QMatrix m = root_action(V, cb.recipe_, k, raise, w);
          std::size_t dst = base + V.offset(*tb);
          auto& M = mats[raise ? cb.e_index(k) : cb.f_index(k)];
          for (std::size_t x = 0; x < m.rows(); ++x)
            for (std::size_t y = 0; y < m.cols(); ++y) M.add(dst + x, src + y, m(x, y));
        }
    }
    base += V.dim();
  }

  std::map<IVec, std::size_t> by_weight;
  for (std::size_t k = 0; k < N; ++k) {
    by_weight[roots[k]] = cb.e_index(k);
    by_weight[-roots[k]] = cb.f_index(k);
  }

  cb.lie_.bracket.assign(n, std::vector<SparseVec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (b < a) {
        SparseVec neg = cb.lie_.bracket[b][a];
        for (auto& [i, c] : neg) c = -c;
        cb.lie_.bracket[a][b] = neg;
        continue;
      }
      detail::SMat z = mats[a] * mats[b] - mats[b] * mats[a];
      if (z.is_zero()) continue;
      IVec w = cb.weights_[a] + cb.weights_[b];
      SparseVec out;
      if (is_zero(w)) {
        // Diagonal matrix: solve for the coefficients of h_1 .. h_r.
        QMatrix sys(total, r + 1);
        for (std::size_t p = 0; p < total; ++p) {
          for (std::size_t i = 0; i < r; ++i) {
            auto it = mats[cb.h_index(i)].rows[p].find(p);
            if (it != mats[cb.h_index(i)].rows[p].end()) sys(p, i) = it->second;
          }
          auto it = z.rows[p].find(p);
          if (it != z.rows[p].end()) sys(p, r) = it->second;
        }
        auto piv = rref(sys);
        ensure(piv.size() == r && piv.back() < r, "bracket is not in the Cartan subalgebra");
        detail::SMat check(total);
        for (std::size_t i = 0; i < r; ++i) {
          if (sgn(sys(i, r)) == 0) continue;
          out.emplace_back(cb.h_index(i), sys(i, r));
          for (std::size_t p = 0; p < total; ++p)
            for (const auto& [c, v] : mats[cb.h_index(i)].rows[p]) check.add(p, c, sys(i, r) * v);
        }
        ensure(check == z, "bracket is not a combination of the h_i");
      } else {
        auto it = by_weight.find(w);
        ensure(it != by_weight.end(), "nonzero bracket of non-root weight");
        const detail::SMat& m = mats[it->second];
        Rational s;
        bool set = false;
        for (std::size_t p = 0; p < total && !set; ++p)
          if (!m.rows[p].empty()) {
            auto [c, v] = *m.rows[p].begin();
            auto zt = z.rows[p].find(c);
            s = zt == z.rows[p].end() ? Rational(0) : zt->second / v;
            set = true;
          }
        ensure(set && z == m.scaled(s), "bracket is not proportional to a root vector");
        out.emplace_back(it->second, s);
      }
      cb.lie_.bracket[a][b] = std::move(out);
    }
  return cb;
}

// ---------------------------------------------------------------------------
// Basis changes

/// Re-expresses a Lie algebra in a new basis; elements[k] gives new basis
/// vector k in old coordinates.
inline LieBasis change_basis(const LieBasis& old, const std::vector<SparseVec>& elements,
                             const std::vector<std::string>& names) {
  const std::size_t n = old.n;
  ensure(elements.size() == n && names.size() == n, "change_basis: wrong number of elements");
  QMatrix P(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [i, c] : elements[k]) P(i, k) = c;
  QMatrix Pinv = inverse(P);
  LieBasis lb;
  lb.n = n;
  lb.names = names;
  lb.bracket.assign(n, std::vector<SparseVec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      SparseVec old_coords;
      for (const auto& [i, x] : elements[a])
        for (const auto& [j, y] : elements[b]) detail::add_to(old_coords, old.br(i, j), x * y);
      std::vector<Rational> v(n);
      for (const auto& [i, c] : old_coords) v[i] = c;
      auto nv = Pinv.apply(v);
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(nv[i]) != 0) lb.bracket[a][b].emplace_back(i, nv[i]);
    }
  return lb;
}

/// Old basis vectors expressed in the new basis (rows of the inverse change).
inline std::vector<SparseVec> inverse_change(const std::vector<SparseVec>& elements) {
  const std::size_t n = elements.size();
  QMatrix P(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [i, c] : elements[k]) P(i, k) = c;
  QMatrix Pinv = inverse(P);
  std::vector<SparseVec> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(Pinv(k, i)) != 0) out[i].emplace_back(k, Pinv(k, i));
  return out;
}

// ---------------------------------------------------------------------------
// PBW normal form

using Monomial = std::vector<unsigned short>;  // exponent per basis element

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : m) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

/// Element of U(g): normally ordered monomial -> coefficient, no zero entries.
class UElement {
 public:
  UElement() = default;
  explicit UElement(std::size_t n) : n_(n) {}

  std::size_t nbasis() const { return n_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  void add(const UElement& u, const Rational& s = 1) {
    if (!n_) n_ = u.n_;
    for (const auto& [m, c] : u.terms_) add(m, c * s);
  }
  UElement scaled(const Rational& s) const {
    UElement out(n_);
    out.add(*this, s);
    return out;
  }
  friend UElement operator+(UElement a, const UElement& b) {
    a.add(b);
    return a;
  }
  friend UElement operator-(UElement a, const UElement& b) {
    a.add(b, -1);
    return a;
  }
  friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational mag = abs(c);
      if (first)
        s += sgn(c) < 0 ? "-" : "";
      else
        s += sgn(c) < 0 ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!mono.empty()) mono += ' ';
        mono += names[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty())
        s += mag.get_str();
      else
        s += (mag == 1 ? "" : mag.get_str() + " ") + mono;
    }
    return s;
  }

 private:
  std::size_t n_ = 0;
  std::map<Monomial, Rational> terms_;
};

/// Straightening engine for U of a Lie algebra given by a LieBasis; the PBW
/// order is the basis index order. Memoizes monomial * generator products,
/// so an instance must not be shared between threads.
class PBWAlgebra {
 public:
  explicit PBWAlgebra(LieBasis lie) : lie_(std::move(lie)) {}

  const LieBasis& lie() const { return lie_; }
  std::size_t n() const { return lie_.n; }

  UElement one() const {
    UElement u(n());
    u.add(Monomial(n(), 0), 1);
    return u;
  }
  UElement generator(std::size_t i) const {
    UElement u(n());
    Monomial m(n(), 0);
    m[i] = 1;
    u.add(m, 1);
    return u;
  }
  UElement element(const SparseVec& v) const {
    UElement u(n());
    for (const auto& [i, c] : v) u.add(generator(i), c);
    return u;
  }

  /// Normal form of m * x_i.
  const UElement& mul_gen(const Monomial& m, std::size_t x) {
    Monomial key = m;
    key.push_back(static_cast<unsigned short>(x));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::size_t last = n();
    for (std::size_t k = n(); k-- > 0;)
      if (m[k]) {
        last = k;
        break;
      }
    UElement out(n());
    if (last == n() || last <= x) {
      Monomial mm = m;
      ++mm[x];
      out.add(mm, 1);
    } else {
      // m = m' y with y = x_last > x:  m' y x = (m' x) y + m' [y, x]
      Monomial mp = m;
      --mp[last];
      UElement left = mul_gen(mp, x);
      for (const auto& [mono, c] : left.terms()) out.add(mul_gen(mono, last), c);
      for (const auto& [z, c] : lie_.br(last, x)) out.add(mul_gen(mp, z), c);
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  UElement mul_gen(const UElement& u, std::size_t x) {
    UElement out(n());
    for (const auto& [m, c] : u.terms()) out.add(mul_gen(m, x), c);
    return out;
  }

  UElement mul(const UElement& u, const UElement& v) {
    UElement out(n());
    for (const auto& [mv, cv] : v.terms()) {
      UElement cur = u;
      for (std::size_t i = 0; i < n(); ++i)
        for (unsigned k = 0; k < mv[i]; ++k) cur = mul_gen(cur, i);
      out.add(cur, cv);
    }
    return out;
  }

  /// Normal form of the product x_{word[0]} x_{word[1]} ...
  UElement word(const std::vector<std::size_t>& w) {
    UElement cur = one();
    for (auto i : w) cur = mul_gen(cur, i);
    return cur;
  }

  UElement pow(const UElement& u, unsigned k) {
    UElement r = one();
    for (unsigned i = 0; i < k; ++i) r = mul(r, u);
    return r;
  }

  UElement commutator(const UElement& u, const UElement& v) { return mul(u, v) - mul(v, u); }

 private:
  LieBasis lie_;
  std::unordered_map<Monomial, UElement, MonomialHash> memo_;
};

// ---------------------------------------------------------------------------
// U(g) for a Chevalley basis

struct Casimir {
  UElement element;
  /// hc projection evaluated at lambda equals scale * ((lambda+rho, lambda+rho) - (rho, rho)).
  Rational scale;
};

class Enveloping {
 public:
  explicit Enveloping(const RootSystem& rs, std::size_t rank_cap = kDefaultEngineRank)
      : cb_(std::make_shared<const ChevalleyBasis>(chevalley_basis(rs, rank_cap))), alg_(cb_->lie()) {}
  explicit Enveloping(std::shared_ptr<const ChevalleyBasis> cb) : cb_(std::move(cb)), alg_(cb_->lie()) {}

  const ChevalleyBasis& basis() const { return *cb_; }
  const RootSystem& root_system() const { return cb_->root_system(); }
  PBWAlgebra& algebra() { return alg_; }
  std::size_t n() const { return cb_->dim(); }

  UElement one() const { return alg_.one(); }
  UElement e(std::size_t k) const { return alg_.generator(cb_->e_index(k)); }
  UElement f(std::size_t k) const { return alg_.generator(cb_->f_index(k)); }
  UElement h(std::size_t i) const { return alg_.generator(cb_->h_index(i)); }
  /// Coroot h_beta of positive root k.
  UElement coroot(std::size_t k) const {
    UElement u(n());
    const IVec& co = root_system().coroot(k);
    for (std::size_t i = 0; i < co.size(); ++i)
      if (co[i]) u.add(h(i), co[i]);
    return u;
  }

  UElement mul(const UElement& u, const UElement& v) { return alg_.mul(u, v); }
  UElement word(const std::vector<std::size_t>& w) { return alg_.word(w); }
  UElement pow(const UElement& u, unsigned k) { return alg_.pow(u, k); }
  UElement commutator(const UElement& u, const UElement& v) { return alg_.commutator(u, v); }

  /// Weight of a monomial in simple-root coordinates.
  IVec weight(const Monomial& m) const {
    IVec w(root_system().rank(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) w = w + scaled(cb_->weight(i), m[i]);
    return w;
  }
  bool has_weight(const UElement& u, const IVec& w) const {
    for (const auto& [m, c] : u.terms())
      if (weight(m) != w) return false;
    return true;
  }

  /// Anti-involution fixing h and exchanging e_b, f_b.
  UElement transpose(const UElement& u) const {
    UElement out(n());
    for (const auto& [m, c] : u.terms()) {
      Monomial t(n(), 0);
      for (std::size_t i = 0; i < n(); ++i) t[cb_->transpose_index(i)] = m[i];
      out.add(t, c);
    }
    return out;
  }

  /// Harish-Chandra projection onto Sym h along n^-_w U n^+_w, for weight-zero u.
  /// Polynomial variables are h_1 .. h_r.
  Poly hc_projection(const UElement& u, const WeylElement& w) {
    const std::size_t r = root_system().rank();
    if (!has_weight(u, IVec(r, 0))) throw UsageError("hc_projection needs a weight-zero element");
    if (w.is_identity()) return pure_h_part(u, [&](std::size_t i) { return cb_->is_h(i); },
                                            [&](std::size_t i) { return i - cb_->h_index(0); });
    // Order: roots in -wR+, then h, then roots in wR+.
    const RootSystem& rs = root_system();
    std::vector<std::size_t> neg, pos, hs;
    IntMatrix winv = weyl_from_word(rs, std::vector<int>(w.word.rbegin(), w.word.rend())).matrix;
    for (std::size_t idx = 0; idx < n(); ++idx) {
      if (cb_->is_h(idx)) {
        hs.push_back(idx);
        continue;
      }
      // The root of idx lies in wR+ iff its w^{-1}-image is positive.
      IVec pre = *rs.weight_to_root(winv.apply(rs.root_to_weight(cb_->weight(idx))));
      (all_nonnegative(pre) ? pos : neg).push_back(idx);
    }
    std::vector<std::size_t> order = neg;
    order.insert(order.end(), hs.begin(), hs.end());
    order.insert(order.end(), pos.begin(), pos.end());
    std::vector<SparseVec> elems;
    std::vector<std::string> names;
    std::vector<std::size_t> where(n());
    for (std::size_t k = 0; k < n(); ++k) {
      elems.push_back({{order[k], Rational(1)}});
      names.push_back(cb_->lie().names[order[k]]);
      where[order[k]] = k;
    }
    PBWAlgebra alt(change_basis(cb_->lie(), elems, names));
    UElement v(n());
    for (const auto& [m, c] : u.terms()) {
      UElement cur = alt.one();
      for (std::size_t i = 0; i < n(); ++i)
        for (unsigned k = 0; k < m[i]; ++k) cur = alt.mul_gen(cur, where[i]);
      v.add(cur, c);
    }
    std::size_t h0 = neg.size();
    return pure_h_part(v, [&](std::size_t i) { return i >= h0 && i < h0 + r; }, [&](std::size_t i) { return i - h0; });
  }
  Poly hc_projection(const UElement& u) { return hc_projection(u, weyl_identity(root_system())); }

  /// Sh(b1, b2) = hc_projection(transpose(b1) b2); zero across different weights.
  Poly shapovalov(const UElement& b1, const UElement& b2) {
    UElement prod = mul(transpose(b1), b2);
    UElement zero_part(n());
    for (const auto& [m, c] : prod.terms())
      if (is_zero(weight(m))) zero_part.add(m, c);
    return hc_projection(zero_part);
  }

  /// Casimir element: twice the dual-basis Casimir of the invariant form with
  /// short roots of squared length 2. For sl2 this is 4fe + h^2 + 2h.
  Casimir casimir() {
    const RootSystem& rs = root_system();
    const std::size_t r = rs.rank();
    QMatrix B(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) B(i, j) = ratio(rs.cartan(i, j), rs.half_length(j));
    QMatrix Binv = inverse(B);
    UElement omega(n());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (sgn(Binv(i, j)) != 0) omega.add(mul(h(i), h(j)), Binv(i, j));
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
      Rational half_len = rs.root_half_length(k);
      omega.add(mul(e(k), f(k)), half_len);
      omega.add(mul(f(k), e(k)), half_len);
    }
    return Casimir{omega.scaled(2), Rational(2)};
  }

  bool is_central(const UElement& z) {
    for (std::size_t i = 0; i < n(); ++i)
      if (!commutator(z, alg_.generator(i)).is_zero()) return false;
    return true;
  }

  /// f-monomials of weight -nu (nu in simple-root coordinates), in PBW order.
  std::vector<Monomial> negative_monomials(const IVec& nu) const {
    std::vector<Monomial> out;
    const auto& roots = root_system().positive_roots();
    Monomial m(n(), 0);
    std::function<void(std::size_t, IVec)> rec = [&](std::size_t k, IVec rest) {
      if (is_zero(rest)) {
        out.push_back(m);
        return;
      }
      if (k == roots.size()) return;
      rec(k + 1, rest);
      IVec cur = rest;
      unsigned a = 0;
      while (true) {
        cur = cur - roots[k];
        if (!all_nonnegative(cur)) break;
        ++a;
        m[cb_->f_index(k)] = static_cast<unsigned short>(a);
        rec(k + 1, cur);
      }
      m[cb_->f_index(k)] = 0;
    };
    if (all_nonnegative(nu)) rec(0, nu);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  UElement monomial(const Monomial& m) const {
    UElement u(n());
    u.add(m, 1);
    return u;
  }

  /// Gram matrix of the Shapovalov form on (U n^-)_{-nu}.
  std::vector<std::vector<Poly>> shapovalov_gram(const IVec& nu) {
    auto basis = negative_monomials(nu);
    std::vector<std::vector<Poly>> g(basis.size(), std::vector<Poly>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a; b < basis.size(); ++b) {
        g[a][b] = shapovalov(monomial(basis[a]), monomial(basis[b]));
        g[b][a] = g[a][b];
      }
    return g;
  }

  std::string to_string(const UElement& u) const { return u.to_string(cb_->lie().names); }

 private:
  template <class IsH, class HPos>
  Poly pure_h_part(const UElement& u, IsH is_h, HPos hpos) const {
    const std::size_t r = root_system().rank();
    Poly p(r);
    for (const auto& [m, c] : u.terms()) {
      Poly::Exponents ex(r, 0);
      bool pure = true;
      for (std::size_t i = 0; i < m.size() && pure; ++i) {
        if (!m[i]) continue;
        if (is_h(i))
          ex[hpos(i)] = m[i];
        else
          pure = false;
      }
      if (pure) p.add_term(ex, c);
    }
    return p;
  }

  std::shared_ptr<const ChevalleyBasis> cb_;
  PBWAlgebra alg_;
};

/// Determinant of a square matrix of polynomials by Laplace expansion with
/// memoization over column subsets.
inline Poly poly_determinant(const std::vector<std::vector<Poly>>& m, std::size_t nvars) {
  const std::size_t k = m.size();
  if (k == 0) return Poly::constant(nvars, 1);
  ensure(k <= 20, "polynomial determinant too large");
  std::unordered_map<unsigned long, Poly> memo;
  std::function<Poly(std::size_t, unsigned long)> rec = [&](std::size_t row, unsigned long used) -> Poly {
    if (row == k) return Poly::constant(nvars, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Poly total(nvars);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (used & (1UL << c)) continue;
      if (!m[row][c].is_zero()) {
        Poly t = m[row][c] * rec(row + 1, used | (1UL << c));
        total += sign > 0 ? t : t.scaled(-1);
      }
      sign = -sign;
    }
    memo.emplace(used, total);
    return total;
  };
  return rec(0, 0);
}

}  // namespace prvkit
