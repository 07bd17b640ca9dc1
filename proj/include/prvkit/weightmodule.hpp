#pragma once

// Explicit realization of V(lambda) by weight blocks, built from the top
// using only the simple generators e_i, f_i and the Cartan matrix.
//
// A vector of V(lambda)_gamma (gamma != lambda) vanishes iff every e_j kills
// it, so V_gamma is identified with the span of the "signatures"
// (e_j f_i b)_j of the spanning set {f_i b : b a basis vector of V_{gamma+alpha_i}}.
// The first independent signatures (in candidate order) give the basis.

#include "prvkit/kostant.hpp"
#include "prvkit/linalg.hpp"

#include <optional>

namespace prvkit {

inline constexpr unsigned long long kDefaultRealizeCap = 400;

/// e_gamma = [e_a, e_b] / c for a non-simple positive root gamma, where a is the
/// least-index positive root with gamma - a a root, b = gamma - a, and c = p + 1
/// with p maximal such that b - p a is a root. f_gamma = [f_b, f_a] / c.
struct RootRecipe {
  std::size_t a = 0, b = 0;
  long c = 1;
  bool simple = true;
};

inline std::vector<RootRecipe> chevalley_recipe(const RootSystem& rs) {
  const auto& roots = rs.positive_roots();
  std::vector<RootRecipe> out(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (sum(roots[k]) == 1) continue;
    RootRecipe r;
    r.simple = false;
    bool found = false;
    for (std::size_t a = 0; a < k && !found; ++a) {
      auto b = rs.positive_index(roots[k] - roots[a]);
      if (!b) continue;
      long p = 0;
      while (rs.is_root(roots[*b] - scaled(roots[a], p + 1))) ++p;
      r.a = a;
      r.b = *b;
      r.c = p + 1;
      found = true;
    }
    ensure(found, "positive root without a decomposition");
    out[k] = r;
  }
  return out;
}

class IrrepRealization {
 public:
  const RootSystem& root_system() const { return rs_; }
  const IVec& highest() const { return highest_; }
  std::size_t dim() const { return total_; }
  /// True when only the weights within max_height() of the top were built.
  bool truncated() const { return truncated_; }
  long max_height() const { return max_height_; }

  /// Weights in construction order (by depth below the highest weight, then
  /// lexicographically descending).
  const std::vector<IVec>& weights() const { return weights_; }
  std::optional<std::size_t> block(const IVec& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t block_dim(std::size_t b) const { return dims_[b]; }
  std::size_t weight_dim(const IVec& w) const {
    auto b = block(w);
    return b ? dims_[*b] : 0;
  }
  std::size_t offset(std::size_t b) const { return offsets_[b]; }

  /// Matrix of e_i (raise) or f_i (lower) from V_w to V_{w +- alpha_i}. A missing
  /// source or target block gives a matrix with zero rows or columns.
  QMatrix simple_action(std::size_t i, bool raise, const IVec& w) const {
    auto b = block(w);
    IVec target = raise ? w + alpha_w_[i] : w - alpha_w_[i];
    std::size_t rows = weight_dim(target);
    if (!b) return QMatrix(rows, 0);
    const QMatrix& m = raise ? e_[i][*b] : f_[i][*b];
    if (m.rows() != rows) return QMatrix(rows, dims_[*b]);
    return m;
  }

  /// Basis vector k of V_w as a word f_{i1} f_{i2} ... applied to the highest vector.
  std::vector<int> basis_word(const IVec& w, std::size_t k) const {
    std::vector<int> word;
    IVec cur = w;
    while (cur != highest_) {
      auto [i, src] = origin_[*block(cur)][k];
      word.push_back(static_cast<int>(i));
      cur = cur + alpha_w_[i];
      k = src;
    }
    return word;
  }

  /// alpha_i in weight coordinates.
  const IVec& simple_root_weight(std::size_t i) const { return alpha_w_[i]; }

  friend IrrepRealization realize(const RootSystem& rs, const Weight& lambda, unsigned long long cap, long max_height);

 private:
  RootSystem rs_;
  IVec highest_;
  std::vector<IVec> alpha_w_;
  std::vector<IVec> weights_;
  std::map<IVec, std::size_t> index_;
  std::vector<std::size_t> dims_, offsets_;
  std::size_t total_ = 0;
  bool truncated_ = false;
  long max_height_ = -1;
  std::vector<std::vector<QMatrix>> e_, f_;  // [i][block]
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> origin_;  // per block, per basis vector: (i, k)
};

/// Builds V(lambda). With max_height >= 0 only the weights lambda - beta with
/// ht(beta) <= max_height are built; maps leaving that range are then zero, so
/// only raising operators are exact on the lowest layer.
inline IrrepRealization realize(const RootSystem& rs, const Weight& lambda,
                                unsigned long long cap = kDefaultRealizeCap, long max_height = -1) {
  IVec top = require_dominant(rs, lambda);
  auto dim = weyl_dimension(rs, top);
  if (max_height < 0 && dim > cap)
    throw CapExceeded("realizing V(" + lambda.to_string() + ") needs dimension " + std::to_string(dim) + " > cap " +
                      std::to_string(cap));
  const std::size_t r = rs.rank();
  IrrepRealization V;
  V.rs_ = rs;
  V.highest_ = top;
  V.max_height_ = max_height;
  for (std::size_t i = 0; i < r; ++i) V.alpha_w_.push_back(rs.root_to_weight(rs.simple_root(i)));

  auto table = dominant_multiplicities(rs, top);
  auto expected = [&](const IVec& w) -> long {
    if (!rs.in_root_lattice(top - w)) return 0;
    auto it = table->find(dominant_rep(rs, w));
    return it == table->end() ? 0 : it->second;
  };

  auto add_block = [&](const IVec& w, std::size_t d) {
    V.index_[w] = V.weights_.size();
    V.weights_.push_back(w);
    V.dims_.push_back(d);
    V.offsets_.push_back(V.total_);
    V.total_ += d;
    V.origin_.emplace_back();
    for (std::size_t i = 0; i < r; ++i) {
      V.e_[i].emplace_back();
      V.f_[i].emplace_back();
    }
  };
  V.e_.resize(r);
  V.f_.resize(r);

  add_block(top, 1);
  std::vector<IVec> layer{top};
  for (long height = 1; !layer.empty(); ++height) {
    if (max_height >= 0 && height > max_height) {
      V.truncated_ = true;
      break;
    }
    std::set<IVec, std::greater<>> next_set;
    for (const auto& g : layer)
      for (std::size_t i = 0; i < r; ++i) {
        IVec w = g - V.alpha_w_[i];
        if (expected(w) > 0) next_set.insert(w);
      }
    std::vector<IVec> next(next_set.begin(), next_set.end());
    for (const auto& g : next) {
      // Candidates f_i b_k with b_k in V_{g + alpha_i}.
      std::vector<std::pair<std::size_t, std::size_t>> cands;
      for (std::size_t i = 0; i < r; ++i) {
        auto src = V.block(g + V.alpha_w_[i]);
        if (!src) continue;
        for (std::size_t k = 0; k < V.dims_[*src]; ++k) cands.emplace_back(i, k);
      }
      // Signature layout: one segment per j with g + alpha_j a weight.
      std::vector<std::size_t> seg_start(r + 1, 0);
      for (std::size_t j = 0; j < r; ++j) seg_start[j + 1] = seg_start[j] + V.weight_dim(g + V.alpha_w_[j]);
      const std::size_t sig_len = seg_start[r];

      QMatrix sig(sig_len, cands.size());
      for (std::size_t c = 0; c < cands.size(); ++c) {
        auto [i, k] = cands[c];
        IVec above = g + V.alpha_w_[i];
        std::size_t b_above = *V.block(above);
        for (std::size_t j = 0; j < r; ++j) {
          IVec tgt = g + V.alpha_w_[j];
          if (!V.block(tgt)) continue;
          std::vector<Rational> part(V.weight_dim(tgt));
          // f_i e_j b_k
          IVec mid = above + V.alpha_w_[j];
          if (auto bm = V.block(mid)) {
            const QMatrix& E = V.e_[j][b_above];
            std::vector<Rational> ej(V.dims_[*bm]);
            for (std::size_t t = 0; t < ej.size(); ++t) ej[t] = E(t, k);
            const QMatrix& F = V.f_[i][*bm];
            part = F.apply(ej);
          }
          if (i == j) part[k] += above[i];
          for (std::size_t t = 0; t < part.size(); ++t) sig(seg_start[j] + t, c) = part[t];
        }
      }

      // Pivot candidates, then coordinates of every candidate in that basis.
      QMatrix red = sig;
      auto pivots = rref(red);
      const std::size_t d = pivots.size();
      ensure(static_cast<long>(d) == expected(g), "weight space dimension disagrees with the multiplicity formula");
      add_block(g, d);
      if (V.total_ > cap)
        throw CapExceeded("realizing V(" + lambda.to_string() + ") exceeds cap " + std::to_string(cap));
      std::size_t bg = *V.block(g);
      for (auto p : pivots) V.origin_[bg].push_back(cands[p]);

      for (std::size_t j = 0; j < r; ++j) {
        QMatrix E(V.weight_dim(g + V.alpha_w_[j]), d);
        for (std::size_t t = 0; t < E.rows(); ++t)
          for (std::size_t m = 0; m < d; ++m) E(t, m) = sig(seg_start[j] + t, pivots[m]);
        V.e_[j][bg] = std::move(E);
      }
      for (std::size_t i = 0; i < r; ++i) {
        auto src = V.block(g + V.alpha_w_[i]);
        if (!src) continue;
        QMatrix F(d, V.dims_[*src]);
        for (std::size_t c = 0; c < cands.size(); ++c) {
          if (cands[c].first != i) continue;
          for (std::size_t m = 0; m < d; ++m) F(m, cands[c].second) = red(m, c);
        }
        V.f_[i][*src] = std::move(F);
      }
    }
    layer = std::move(next);
  }
  // Maps into missing blocks are zero; store them with the right shape.
  for (std::size_t b = 0; b < V.weights_.size(); ++b)
    for (std::size_t i = 0; i < r; ++i) {
      if (V.e_[i][b].rows() == 0 && V.e_[i][b].cols() == 0)
        V.e_[i][b] = QMatrix(V.weight_dim(V.weights_[b] + V.alpha_w_[i]), V.dims_[b]);
      if (V.f_[i][b].rows() == 0 && V.f_[i][b].cols() == 0)
        V.f_[i][b] = QMatrix(V.weight_dim(V.weights_[b] - V.alpha_w_[i]), V.dims_[b]);
    }
  ensure(V.truncated_ || V.total_ == dim, "realized dimension disagrees with the Weyl dimension formula");
  return V;
}

/// Matrix of e_beta (raise) or f_beta from V_w to V_{w +- beta}, for positive
/// root k, built from the simple generators through the recipe brackets.
inline QMatrix root_action(const IrrepRealization& V, const std::vector<RootRecipe>& recipe, std::size_t k, bool raise,
                           const IVec& w) {
  const RootSystem& rs = V.root_system();
  const RootRecipe& rr = recipe[k];
  if (rr.simple) {
    const IVec& beta = rs.positive_roots()[k];
    std::size_t i = 0;
    while (beta[i] == 0) ++i;
    return V.simple_action(i, raise, w);
  }
  IVec wa = rs.root_to_weight(rs.positive_roots()[rr.a]);
  IVec wb = rs.root_to_weight(rs.positive_roots()[rr.b]);
  Rational inv(1, rr.c);
  if (raise) {
    // [e_a, e_b] = e_a e_b - e_b e_a
    QMatrix x = root_action(V, recipe, rr.a, true, w + wb) * root_action(V, recipe, rr.b, true, w);
    QMatrix y = root_action(V, recipe, rr.b, true, w + wa) * root_action(V, recipe, rr.a, true, w);
    return (x - y).scaled(inv);
  }
  // [f_b, f_a] = f_b f_a - f_a f_b
  QMatrix x = root_action(V, recipe, rr.b, false, w - wa) * root_action(V, recipe, rr.a, false, w);
  QMatrix y = root_action(V, recipe, rr.a, false, w - wb) * root_action(V, recipe, rr.b, false, w);
  return (x - y).scaled(inv);
}

}  // namespace prvkit
