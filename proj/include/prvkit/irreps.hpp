#pragma once

// Subspaces V+-(mu; gamma, nu), root-vector spectra on zero weight spaces, and
// cyclic submodules of V(lambda) (x) V(mu) generated by extremal vectors.

#include "prvkit/weightmodule.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace prvkit {

/// Process-wide cache of realizations keyed by (root system, highest weight).
inline std::shared_ptr<const IrrepRealization> shared_realization(const RootSystem& rs, const IVec& lambda,
                                                                  unsigned long long cap = kDefaultRealizeCap) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, IVec>, std::shared_ptr<const IrrepRealization>> cache;
  auto key = std::make_pair(rs.label(), lambda);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto V = std::make_shared<const IrrepRealization>(realize(rs, Weight::from_ints(lambda), cap));
  std::lock_guard lock(mutex);
  return cache.emplace(key, V).first->second;
}

/// Matrix of e_i^k (raise) or f_i^k on V_gamma.
inline QMatrix simple_power(const IrrepRealization& V, std::size_t i, bool raise, const IVec& gamma, long k) {
  QMatrix m = QMatrix::identity(V.weight_dim(gamma));
  IVec cur = gamma;
  const IVec& a = V.simple_root_weight(i);
  for (long t = 0; t < k; ++t) {
    m = V.simple_action(i, raise, cur) * m;
    cur = raise ? cur + a : cur - a;
  }
  return m;
}

struct ExtremeSpace {
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> basis;  // coordinates in V_gamma
};

/// V+(mu; gamma, nu) = {v in V_gamma : e_i^{nu_i+1} v = 0 for all i}; with
/// raise = false the f-version V-.
inline ExtremeSpace v_extremes(const IrrepRealization& V, const IVec& gamma, const IVec& nu, bool raise = true) {
  if (!all_nonnegative(nu)) throw UsageError("v_extremes needs a dominant nu");
  ExtremeSpace out;
  const std::size_t d = V.weight_dim(gamma);
  if (!d) return out;
  QMatrix stack;
  for (std::size_t i = 0; i < V.root_system().rank(); ++i) stack.append_rows(simple_power(V, i, raise, gamma, nu[i] + 1));
  if (stack.rows() == 0) stack = QMatrix(0, d);
  out.basis = kernel_basis(stack);
  out.dim = out.basis.size();
  return out;
}

struct ZeroWeightSpectrum {
  std::map<long, long> mult;  // j -> multiplicity of the eigenvalue j(j+1) of f_beta e_beta on V_0
  long m_total = 0;           // sum over j > 0
  std::size_t zero_dim = 0;
};

inline ZeroWeightSpectrum zero_weight_spectrum(const IrrepRealization& V, const std::vector<RootRecipe>& recipe,
                                               std::size_t k) {
  ZeroWeightSpectrum out;
  const RootSystem& rs = V.root_system();
  IVec zero(rs.rank(), 0);
  out.zero_dim = V.weight_dim(zero);
  if (!out.zero_dim) return out;
  IVec beta = rs.root_to_weight(rs.positive_roots()[k]);
  QMatrix fe = root_action(V, recipe, k, false, beta) * root_action(V, recipe, k, true, zero);
  std::size_t seen = 0;
  for (long j = 0; seen < out.zero_dim; ++j) {
    ensure(j <= 4 * static_cast<long>(V.dim()) + 4, "f e has an eigenvalue not of the form j(j+1)");
    QMatrix shifted = fe - QMatrix::identity(out.zero_dim).scaled(Rational(j * (j + 1)));
    std::size_t m = nullity(shifted);
    if (m) {
      out.mult[j] = static_cast<long>(m);
      if (j > 0) out.m_total += static_cast<long>(m);
      seen += m;
    }
  }
  ensure(seen == out.zero_dim, "f e is not diagonalizable with eigenvalues j(j+1)");
  return out;
}

// ---------------------------------------------------------------------------
// Tensor products with the diagonal action

class TensorModule {
 public:
  TensorModule(std::shared_ptr<const IrrepRealization> a, std::shared_ptr<const IrrepRealization> b)
      : A_(std::move(a)), B_(std::move(b)) {
    for (const auto& g1 : A_->weights())
      for (const auto& g2 : B_->weights()) {
        IVec w = g1 + g2;
        auto& lay = layout_[w];
        lay.parts.push_back({g1, g2, lay.size});
        lay.size += A_->weight_dim(g1) * B_->weight_dim(g2);
      }
  }

  const IrrepRealization& left() const { return *A_; }
  const IrrepRealization& right() const { return *B_; }
  std::size_t weight_dim(const IVec& w) const {
    auto it = layout_.find(w);
    return it == layout_.end() ? 0 : it->second.size;
  }
  std::vector<IVec> weights() const {
    std::vector<IVec> out;
    for (const auto& [w, l] : layout_) out.push_back(w);
    return out;
  }

  /// Vector u (x) v with u in V_{g1}, v in V_{g2} given by coordinates.
  std::vector<Rational> pure(const IVec& g1, const std::vector<Rational>& u, const IVec& g2,
                             const std::vector<Rational>& v) const {
    const auto& lay = layout_.at(g1 + g2);
    std::vector<Rational> out(lay.size);
    for (const auto& p : lay.parts)
      if (p.g1 == g1) {
        const std::size_t d2 = B_->weight_dim(g2);
        for (std::size_t x = 0; x < u.size(); ++x)
          for (std::size_t y = 0; y < d2; ++y) out[p.offset + x * d2 + y] = u[x] * v[y];
      }
    return out;
  }

  /// e_i (raise) or f_i applied to a vector of weight w.
  std::vector<Rational> act(std::size_t i, bool raise, const IVec& w, const std::vector<Rational>& x) const {
    const IVec& a = A_->simple_root_weight(i);
    IVec tw = raise ? w + a : w - a;
    auto it = layout_.find(tw);
    if (it == layout_.end()) return {};
    const auto& src = layout_.at(w);
    const auto& dst = it->second;
    std::vector<Rational> out(dst.size);
    auto find_part = [&](const IVec& g1) -> const Part* {
      for (const auto& p : dst.parts)
        if (p.g1 == g1) return &p;
      return nullptr;
    };
    for (const auto& p : src.parts) {
      const std::size_t d1 = A_->weight_dim(p.g1), d2 = B_->weight_dim(p.g2);
      bool nonzero = false;
      for (std::size_t t = 0; t < d1 * d2 && !nonzero; ++t) nonzero = sgn(x[p.offset + t]) != 0;
      if (!nonzero) continue;
      // (X (x) 1) on the left factor
      IVec g1n = raise ? p.g1 + a : p.g1 - a;
      if (const Part* q = find_part(g1n)) {
        QMatrix M = A_->simple_action(i, raise, p.g1);
        for (std::size_t r1 = 0; r1 < M.rows(); ++r1)
          for (std::size_t c1 = 0; c1 < d1; ++c1) {
            if (sgn(M(r1, c1)) == 0) continue;
            for (std::size_t y = 0; y < d2; ++y) out[q->offset + r1 * d2 + y] += M(r1, c1) * x[p.offset + c1 * d2 + y];
          }
      }
      // (1 (x) X) on the right factor
      IVec g2n = raise ? p.g2 + a : p.g2 - a;
      if (B_->block(g2n)) {
        const Part* q = find_part(p.g1);
        if (!q) continue;
        QMatrix M = B_->simple_action(i, raise, p.g2);
        const std::size_t d2n = M.rows();
        for (std::size_t x1 = 0; x1 < d1; ++x1)
          for (std::size_t r2 = 0; r2 < d2n; ++r2)
            for (std::size_t c2 = 0; c2 < d2; ++c2)
              if (sgn(M(r2, c2)) != 0) out[q->offset + x1 * d2n + r2] += M(r2, c2) * x[p.offset + x1 * d2 + c2];
      }
    }
    return out;
  }

 private:
  struct Part {
    IVec g1, g2;
    std::size_t offset;
  };
  struct Layout {
    std::vector<Part> parts;
    std::size_t size = 0;
  };
  std::shared_ptr<const IrrepRealization> A_, B_;
  std::map<IVec, Layout> layout_;
};

/// Submodule of a tensor product, stored as a span per weight.
class Submodule {
 public:
  Submodule(const TensorModule& T, std::map<IVec, EchelonSpan> spans) : T_(&T), spans_(std::move(spans)) {}

  std::size_t dim() const {
    std::size_t d = 0;
    for (const auto& [w, s] : spans_) d += s.dim();
    return d;
  }
  std::size_t weight_dim(const IVec& w) const {
    auto it = spans_.find(w);
    return it == spans_.end() ? 0 : it->second.dim();
  }
  bool contains(const Submodule& other) const {
    for (const auto& [w, s] : other.spans_) {
      auto it = spans_.find(w);
      for (const auto& v : s.basis())
        if (it == spans_.end() || !it->second.contains(v)) return false;
    }
    return true;
  }
  /// Number of independent highest-weight vectors of weight nu inside the submodule.
  std::size_t highest_weight_multiplicity(const IVec& nu) const {
    auto it = spans_.find(nu);
    if (it == spans_.end()) return 0;
    const auto& basis = it->second.basis();
    QMatrix stack;
    for (std::size_t i = 0; i < T_->left().root_system().rank(); ++i) {
      std::vector<std::vector<Rational>> imgs;
      for (const auto& b : basis) imgs.push_back(T_->act(i, true, nu, b));
      if (imgs.empty() || imgs[0].empty()) continue;
      QMatrix m(imgs[0].size(), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < imgs[c].size(); ++r) m(r, c) = imgs[c][r];
      stack.append_rows(m);
    }
    if (stack.rows() == 0) return basis.size();
    return nullity(stack);
  }

 private:
  const TensorModule* T_;
  std::map<IVec, EchelonSpan> spans_;
};

/// U(g) v for a vector v of weight w, by closure under all e_i, f_i.
inline Submodule generate_submodule(const TensorModule& T, const IVec& w, const std::vector<Rational>& v) {
  std::map<IVec, EchelonSpan> spans;
  std::vector<std::pair<IVec, std::vector<Rational>>> queue;
  auto insert = [&](const IVec& wt, const std::vector<Rational>& x) {
    auto it = spans.try_emplace(wt, T.weight_dim(wt)).first;
    if (it->second.insert(x)) queue.emplace_back(wt, x);
  };
  insert(w, v);
  const std::size_t r = T.left().root_system().rank();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [wt, x] = queue[q];
    for (std::size_t i = 0; i < r; ++i)
      for (bool raise : {true, false}) {
        auto y = T.act(i, raise, wt, x);
        if (y.empty()) continue;
        bool nonzero = false;
        for (const auto& c : y) nonzero = nonzero || sgn(c) != 0;
        if (!nonzero) continue;
        const IVec& a = T.left().simple_root_weight(i);
        insert(raise ? wt + a : wt - a, y);
      }
  }
  return Submodule(T, std::move(spans));
}

/// U(g)(v_lambda (x) v'_{w mu}) inside V(lambda) (x) V(mu).
inline Submodule extremal_submodule(const TensorModule& T, const WeylElement& w) {
  const IVec& lambda = T.left().highest();
  IVec wmu = w.matrix.apply(T.right().highest());
  ensure(T.right().weight_dim(wmu) == 1, "extremal weight space is not one-dimensional");
  return generate_submodule(T, lambda + wmu, T.pure(lambda, {Rational(1)}, wmu, {Rational(1)}));
}

/// Multiplicity of V(dominant rep of lambda + w mu) in U(g)(v_lambda (x) v'_{w mu}).
inline std::size_t kprv_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const WeylElement& w,
                                     unsigned long long cap = kDefaultRealizeCap) {
  IVec l = require_dominant(rs, lambda, "lambda"), m = require_dominant(rs, mu, "mu");
  auto dl = weyl_dimension(rs, l), dm = weyl_dimension(rs, m);
  if (dl * dm > cap)
    throw CapExceeded("tensor product dimension " + std::to_string(dl * dm) + " exceeds cap " + std::to_string(cap));
  TensorModule T(shared_realization(rs, l, cap), shared_realization(rs, m, cap));
  Submodule S = extremal_submodule(T, w);
  return S.highest_weight_multiplicity(dominant_rep(rs, l + w.matrix.apply(m)));
}

}  // namespace prvkit
