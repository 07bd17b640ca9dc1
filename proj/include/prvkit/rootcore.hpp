#pragma once

// Root systems, weights, Weyl groups and their (twisted) actions.
//
// Conventions:
//  * weights are stored in the fundamental-weight basis, coordinate i being
//    lambda(h_i);
//  * roots are stored in the simple-root basis;
//  * cartan[i][j] = alpha_j(h_i), so alpha_j in weight coordinates is column j;
//  * s_i(lambda) = lambda - lambda(h_i) alpha_i;
//  * the invariant form is normalised so that short roots have length^2 = 2.

#include "prvkit/core.hpp"
#include "prvkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace prvkit {

inline constexpr std::size_t kDefaultWeylCap = 1152;

// ---------------------------------------------------------------------------
// Weight

struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank) {}
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  static Weight from_ints(const IVec& v) {
    Weight w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w.coords[i] = v[i];
    return w;
  }

  std::size_t rank() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_integral() const {
    for (const auto& c : coords)
      if (c.get_den() != 1) return false;
    return true;
  }
  bool is_dominant() const {
    for (const auto& c : coords)
      if (sgn(c) < 0) return false;
    return true;
  }
  bool is_dominant_integral() const { return is_integral() && is_dominant(); }

  IVec to_ints() const {
    if (!is_integral()) throw UsageError("weight " + to_string() + " is not integral");
    IVec v(coords.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords[i].get_num().get_si();
    return v;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ',';
      s += coords[i].get_str();
    }
    return s;
  }

  friend Weight operator+(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords) c = -c;
    return a;
  }
  friend Weight operator*(const Rational& s, Weight a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

/// "a,b,c" with rational entries "p/q".
inline Weight parse_weight(std::string_view text) {
  Weight w;
  for (const auto& part : split(text, ',')) w.coords.push_back(parse_rational(part));
  return w;
}

// ---------------------------------------------------------------------------
// Integer matrices acting on weight coordinates

struct IntMatrix {
  std::size_t n = 0;
  std::vector<long> a;  // row-major

  static IntMatrix identity(std::size_t n) {
    IntMatrix m{n, std::vector<long>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
    return m;
  }
  long operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  long& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix m{x.n, std::vector<long>(x.n * x.n, 0)};
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k) {
        long v = x(i, k);
        if (!v) continue;
        for (std::size_t j = 0; j < x.n; ++j) m(i, j) += v * y(k, j);
      }
    return m;
  }
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.a == y.a; }
  friend bool operator<(const IntMatrix& x, const IntMatrix& y) { return x.a < y.a; }

  IVec apply(const IVec& v) const {
    IVec out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  Weight apply(const Weight& v) const {
    Weight out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((*this)(i, j)) out[i] += (*this)(i, j) * v[j];
    return out;
  }
};

// ---------------------------------------------------------------------------
// Weyl group elements

struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;  // w = s_{word[0]} s_{word[1]} ...

  std::size_t length() const { return word.size(); }
  int sign() const { return word.size() % 2 ? -1 : 1; }
  bool is_identity() const { return word.empty(); }

  std::string word_string() const {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k) s += ' ';
      s += "s" + std::to_string(word[k] + 1);
    }
    return s;
  }
};

class RootSystem;
class WeylGroup;

namespace detail {

struct RootSystemCaches {
  std::mutex mutex;
  std::shared_ptr<const WeylGroup> weyl;
  std::mutex partition_mutex;
  std::unordered_map<IVec, long long, IVecHash> partitions;  // key: beta followed by the root index
  std::mutex table_mutex;
  std::map<IVec, std::shared_ptr<const std::map<IVec, long>>> dominant_tables;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// RootSystem

struct SimpleComponent {
  char series;
  int rank;
  int offset;
  std::string label() const { return std::string(1, series) + std::to_string(rank); }
};

class RootSystem {
 public:
  /// Builds from a type label such as "A2", "G2" or a product "A1xA1".
  static RootSystem build(std::string_view spec);

  const std::string& label() const { return label_; }
  std::size_t rank() const { return cartan_.size(); }
  const std::vector<SimpleComponent>& components() const { return components_; }
  const std::vector<IVec>& cartan() const { return cartan_; }
  long cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  /// Positive roots in simple-root coordinates, ordered by height then
  /// lexicographically descending (so the simple roots come first, in index order).
  const std::vector<IVec>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  std::optional<std::size_t> positive_index(const IVec& beta) const {
    auto it = positive_index_.find(beta);
    if (it == positive_index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_root(const IVec& beta) const {
    return positive_index_.count(beta) || positive_index_.count(-beta);
  }
  IVec simple_root(std::size_t i) const {
    IVec r(rank(), 0);
    r[i] = 1;
    return r;
  }
  /// Highest root of each simple component.
  const std::vector<IVec>& highest_roots() const { return highest_; }

  /// Half squared length of simple root i (1 for short roots).
  long half_length(std::size_t i) const { return half_len_[i]; }
  /// Half squared length of positive root k.
  long root_half_length(std::size_t k) const { return root_half_len_[k]; }
  /// Coroot h_alpha of positive root k in the basis h_1..h_r.
  const IVec& coroot(std::size_t k) const { return coroots_[k]; }

  Weight rho() const { return Weight::from_ints(IVec(rank(), 1)); }
  IVec rho_ints() const { return IVec(rank(), 1); }

  /// Root-lattice vector -> fundamental-weight coordinates.
  IVec root_to_weight(const IVec& beta) const {
    IVec w(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * beta[j];
    return w;
  }
  /// Fundamental-weight coordinates -> root coordinates, if in the root lattice.
  std::optional<IVec> weight_to_root(const IVec& w) const {
    IVec beta(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
      long s = 0;
      for (std::size_t j = 0; j < rank(); ++j) s += inv_num_[i][j] * w[j];
      if (s % inv_den_ != 0) return std::nullopt;
      beta[i] = s / inv_den_;
    }
    return beta;
  }
  /// Rational root coordinates of an arbitrary weight.
  std::vector<Rational> root_coordinates(const Weight& w) const {
    std::vector<Rational> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      for (std::size_t j = 0; j < rank(); ++j) out[i] += Rational(inv_num_[i][j]) * w[j];
      out[i] /= inv_den_;
    }
    return out;
  }
  bool in_root_lattice(const IVec& w) const { return weight_to_root(w).has_value(); }

  /// Invariant form on weights.
  Rational form(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (sgn(a[i]) && sgn(b[j])) s += form_(i, j) * a[i] * b[j];
    return s;
  }
  Rational form(const IVec& a, const IVec& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (a[i] && b[j]) s += form_(i, j) * a[i] * b[j];
    return s;
  }
  const QMatrix& form_matrix() const { return form_; }

  /// lambda(h_alpha) for positive root k.
  Rational coroot_pairing(const Weight& w, std::size_t k) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      if (coroots_[k][i]) s += coroots_[k][i] * w[i];
    return s;
  }
  long coroot_pairing(const IVec& w, std::size_t k) const {
    long s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += coroots_[k][i] * w[i];
    return s;
  }

  IntMatrix simple_reflection(std::size_t i) const {
    IntMatrix m = IntMatrix::identity(rank());
    for (std::size_t r = 0; r < rank(); ++r) m(r, i) -= cartan_[r][i];
    return m;
  }
  IVec reflect(const IVec& w, std::size_t i) const {
    IVec out(w);
    long c = w[i];
    for (std::size_t r = 0; r < rank(); ++r) out[r] -= c * cartan_[r][i];
    return out;
  }
  Weight reflect(const Weight& w, std::size_t i) const {
    Weight out(w);
    Rational c = w[i];
    for (std::size_t r = 0; r < rank(); ++r) out[r] -= c * cartan_[r][i];
    return out;
  }
  /// s_i on a root-lattice vector (simple-root coordinates).
  IVec reflect_root(const IVec& beta, std::size_t i) const {
    long p = 0;
    for (std::size_t j = 0; j < rank(); ++j) p += cartan_[i][j] * beta[j];
    IVec out(beta);
    out[i] -= p;
    return out;
  }

  /// Order of the Weyl group, from the type classification.
  unsigned long long weyl_order() const;

  detail::RootSystemCaches& caches() const { return *caches_; }

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.cartan_ == b.cartan_; }

 private:
  std::string label_;
  std::vector<SimpleComponent> components_;
  std::vector<IVec> cartan_;
  std::vector<long> half_len_;
  std::vector<IVec> positive_;
  std::map<IVec, std::size_t> positive_index_;
  std::vector<IVec> highest_;
  std::vector<long> root_half_len_;
  std::vector<IVec> coroots_;
  std::vector<IVec> inv_num_;
  long inv_den_ = 1;
  QMatrix form_;
  std::shared_ptr<detail::RootSystemCaches> caches_ = std::make_shared<detail::RootSystemCaches>();
};

namespace detail {

inline std::vector<IVec> cartan_for(char series, int n) {
  auto bad_rank = [&] {
    return UsageError("rank " + std::to_string(n) + " is not valid for type " + std::string(1, series));
  };
  std::vector<IVec> a(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (series) {
    case 'A':
      if (n < 1) throw bad_rank();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad_rank();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw bad_rank();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      if (n < 4) throw bad_rank();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad_rank();
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad_rank();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      if (n != 2) throw bad_rank();
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw UsageError(std::string("unknown root system series '") + series + "'");
  }
  return a;
}

inline unsigned long long weyl_order_for(char series, int n) {
  auto fact = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (series) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1ULL << n) * fact(n);
    case 'D': return (1ULL << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace detail

inline unsigned long long RootSystem::weyl_order() const {
  unsigned long long order = 1;
  for (const auto& c : components_) order *= detail::weyl_order_for(c.series, c.rank);
  return order;
}

inline RootSystem RootSystem::build(std::string_view spec) {
  RootSystem rs;
  std::string text = trim(spec);
  if (text.empty()) throw UsageError("empty root system label");
  std::vector<std::pair<char, int>> parts;
  for (auto part : split(text, 'x')) {
    part = trim(part);
    if (part.size() < 2) throw UsageError("malformed root system label '" + text + "'");
    char series = static_cast<char>(std::toupper(static_cast<unsigned char>(part[0])));
    for (std::size_t k = 1; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) throw UsageError("malformed root system label '" + text + "'");
    int n = std::stoi(part.substr(1));
    parts.emplace_back(series, n);
  }
  int total = 0;
  for (auto [s, n] : parts) {
    detail::cartan_for(s, n);  // validates
    rs.components_.push_back({s, n, total});
    total += n;
    if (!rs.label_.empty()) rs.label_ += "x";
    rs.label_ += std::string(1, s) + std::to_string(n);
  }
  rs.cartan_.assign(total, IVec(total, 0));
  for (const auto& c : rs.components_) {
    auto block = detail::cartan_for(c.series, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) rs.cartan_[c.offset + i][c.offset + j] = block[i][j];
  }
  const std::size_t r = total;

  // Symmetrizer: d_i A[i][j] = d_j A[j][i], smallest d = 1 per component.
  std::vector<Rational> d(r, 0);
  for (const auto& c : rs.components_) {
    d[c.offset] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = c.offset; i < c.offset + c.rank; ++i) {
        if (sgn(d[i]) == 0) continue;
        for (int j = c.offset; j < c.offset + c.rank; ++j) {
          if (i == j || rs.cartan_[i][j] == 0 || sgn(d[j]) != 0) continue;
          d[j] = d[i] * rs.cartan_[i][j] / rs.cartan_[j][i];
          changed = true;
        }
      }
    }
    Rational mn = d[c.offset];
    for (int i = c.offset; i < c.offset + c.rank; ++i) mn = std::min(mn, d[i]);
    for (int i = c.offset; i < c.offset + c.rank; ++i) d[i] /= mn;
  }
  rs.half_len_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    ensure(d[i].get_den() == 1, "non-integral symmetrizer");
    rs.half_len_[i] = d[i].get_num().get_si();
  }

  // Inverse Cartan matrix as integer numerator / common denominator.
  QMatrix a(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = rs.cartan_[i][j];
  QMatrix ainv = inverse(a);
  mpz_class den = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) den = lcm(den, ainv(i, j).get_den());
  rs.inv_den_ = den.get_si();
  rs.inv_num_.assign(r, IVec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational v = ainv(i, j) * Rational(den);
      rs.inv_num_[i][j] = v.get_num().get_si();
    }

  // Form on fundamental coordinates: G = D A^{-1}.
  rs.form_ = QMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.form_(i, j) = d[i] * ainv(i, j);

  // Positive roots by closure of the simple roots under simple reflections.
  std::set<IVec> found;
  std::vector<IVec> queue;
  for (std::size_t i = 0; i < r; ++i) {
    queue.push_back(rs.simple_root(i));
    found.insert(queue.back());
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t i = 0; i < r; ++i) {
      IVec img = rs.reflect_root(queue[q], i);
      if (!all_nonnegative(img) || is_zero(img)) continue;
      if (found.insert(img).second) queue.push_back(img);
    }
  }
  rs.positive_.assign(found.begin(), found.end());
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const IVec& x, const IVec& y) {
    long hx = sum(x), hy = sum(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.positive_index_[rs.positive_[k]] = k;

  for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
    const IVec& alpha = rs.positive_[k];
    // (alpha, alpha) = sum a_i a_j d_i A[i][j]
    long len2 = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) len2 += alpha[i] * alpha[j] * rs.half_len_[i] * rs.cartan_[i][j];
    long half = len2 / 2;
    rs.root_half_len_.push_back(half);
    IVec co(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      ensure((alpha[i] * rs.half_len_[i]) % half == 0, "non-integral coroot");
      co[i] = alpha[i] * rs.half_len_[i] / half;
    }
    rs.coroots_.push_back(co);
  }

  for (const auto& c : rs.components_) {
    IVec best;
    for (const auto& alpha : rs.positive_) {
      bool inside = true;
      for (std::size_t i = 0; i < r; ++i)
        if (alpha[i] && (static_cast<int>(i) < c.offset || static_cast<int>(i) >= c.offset + c.rank)) inside = false;
      if (inside && (best.empty() || sum(alpha) > sum(best))) best = alpha;
    }
    rs.highest_.push_back(best);
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Weyl group

/// Canonical (lexicographically least) reduced word of the element with
/// matrix m, read off from the descents of m(rho).
inline std::vector<int> canonical_word(const RootSystem& rs, const IntMatrix& m) {
  IVec v = m.apply(rs.rho_ints());
  std::vector<int> word;
  while (true) {
    std::size_t i = 0;
    while (i < v.size() && v[i] >= 0) ++i;
    if (i == v.size()) break;
    word.push_back(static_cast<int>(i));
    v = rs.reflect(v, i);
  }
  return word;
}

inline WeylElement weyl_from_matrix(const RootSystem& rs, IntMatrix m) {
  WeylElement w;
  w.word = canonical_word(rs, m);
  w.matrix = std::move(m);
  return w;
}

inline WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::identity(rs.rank());
  for (int i : word) m = m * rs.simple_reflection(i);
  return weyl_from_matrix(rs, std::move(m));
}

inline WeylElement weyl_identity(const RootSystem& rs) {
  return WeylElement{IntMatrix::identity(rs.rank()), {}};
}

inline WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return weyl_from_matrix(rs, a.matrix * b.matrix);
}

class WeylGroup {
 public:
  WeylGroup(const RootSystem& rs, std::vector<WeylElement> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), [](const WeylElement& x, const WeylElement& y) {
      if (x.length() != y.length()) return x.length() < y.length();
      return x.word < y.word;
    });
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      index_[elements_[k].matrix.a] = k;
      if (elements_[k].length() > elements_[longest_].length()) longest_ = k;
    }
    (void)rs;
  }

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](std::size_t k) const { return elements_[k]; }
  std::size_t longest_index() const { return longest_; }
  const WeylElement& longest() const { return elements_[longest_]; }

  std::size_t find(const IntMatrix& m) const {
    auto it = index_.find(m.a);
    ensure(it != index_.end(), "matrix is not a Weyl group element");
    return it->second;
  }
  std::size_t multiply(std::size_t a, std::size_t b) const { return find(elements_[a].matrix * elements_[b].matrix); }
  std::size_t inverse(std::size_t a) const {
    for (std::size_t k = 0; k < size(); ++k)
      if (multiply(a, k) == 0) return k;
    throw InvariantViolation("element without inverse");
  }

 private:
  std::vector<WeylElement> elements_;
  std::map<std::vector<long>, std::size_t> index_;
  std::size_t longest_ = 0;
};

/// All of W, sorted by (length, canonical word); index 0 is the identity.
/// Throws CapExceeded when |W| > cap.
inline const WeylGroup& enumerate_weyl(const RootSystem& rs, std::size_t cap = kDefaultWeylCap) {
  auto order = rs.weyl_order();
  if (order > cap)
    throw CapExceeded("Weyl group of " + rs.label() + " has order " + std::to_string(order) + " > cap " + std::to_string(cap));
  auto& c = rs.caches();
  std::lock_guard lock(c.mutex);
  if (!c.weyl) {
    std::map<std::vector<long>, bool> seen;
    std::vector<IntMatrix> queue{IntMatrix::identity(rs.rank())};
    seen[queue[0].a] = true;
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < rs.rank(); ++i) gens.push_back(rs.simple_reflection(i));
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& s : gens) {
        IntMatrix m = queue[q] * s;
        if (seen.emplace(m.a, true).second) queue.push_back(std::move(m));
      }
    }
    std::vector<WeylElement> elems;
    elems.reserve(queue.size());
    for (auto& m : queue) elems.push_back(weyl_from_matrix(rs, std::move(m)));
    ensure(elems.size() == order, "Weyl enumeration disagrees with the group order");
    c.weyl = std::make_shared<const WeylGroup>(rs, std::move(elems));
  }
  return *c.weyl;
}

inline Weight apply_weyl(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  if (lambda.rank() != rs.rank() || w.matrix.n != rs.rank())
    throw UsageError("dimension mismatch: weight has " + std::to_string(lambda.rank()) + " coordinates, rank is " +
                     std::to_string(rs.rank()));
  return w.matrix.apply(lambda);
}

/// w * lambda = w(lambda + rho) - rho
inline Weight twisted_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  return apply_weyl(rs, w, lambda + rs.rho()) - rs.rho();
}

inline IVec twisted_action(const RootSystem& rs, const WeylElement& w, const IVec& lambda) {
  return w.matrix.apply(lambda + rs.rho_ints()) - rs.rho_ints();
}

/// Dominant W-translate of lambda and the element w with w(lambda) = result,
/// produced by reflecting at the least index with a negative coordinate.
inline std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs, const Weight& lambda) {
  Weight v = lambda;
  IntMatrix m = IntMatrix::identity(rs.rank());
  while (true) {
    std::size_t i = 0;
    while (i < v.rank() && sgn(v[i]) >= 0) ++i;
    if (i == v.rank()) break;
    v = rs.reflect(v, i);
    m = rs.simple_reflection(i) * m;
  }
  return {v, weyl_from_matrix(rs, std::move(m))};
}

inline IVec dominant_rep(const RootSystem& rs, IVec v) {
  while (true) {
    std::size_t i = 0;
    while (i < v.size() && v[i] >= 0) ++i;
    if (i == v.size()) return v;
    v = rs.reflect(v, i);
  }
}

/// W-orbit by reflection closure; does not need the full group.
inline std::vector<IVec> weyl_orbit(const RootSystem& rs, const IVec& lambda) {
  std::set<IVec> seen{lambda};
  std::vector<IVec> orbit{lambda};
  for (std::size_t q = 0; q < orbit.size(); ++q)
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (orbit[q][i] == 0) continue;
      IVec img = rs.reflect(orbit[q], i);
      if (seen.insert(img).second) orbit.push_back(img);
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> orbit{lambda};
  for (std::size_t q = 0; q < orbit.size(); ++q)
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (sgn(orbit[q][i]) == 0) continue;
      Weight img = rs.reflect(orbit[q], i);
      if (seen.insert(img).second) orbit.push_back(img);
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

/// Twisted orbit {w * lambda}.
inline std::vector<Weight> twisted_orbit(const RootSystem& rs, const Weight& lambda) {
  std::vector<Weight> out;
  for (const auto& x : weyl_orbit(rs, lambda + rs.rho())) out.push_back(x - rs.rho());
  std::sort(out.begin(), out.end());
  return out;
}

/// Indices of the elements of W fixing lambda.
inline std::vector<std::size_t> stabilizer(const WeylGroup& W, const Weight& lambda) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < W.size(); ++k)
    if (W[k].matrix.apply(lambda) == lambda) out.push_back(k);
  return out;
}

struct DoubleCosets {
  std::vector<std::size_t> stab_left;       // W_lambda
  std::vector<std::size_t> stab_right;      // W_mu
  std::vector<std::size_t> representatives;  // length-minimal, lexicographic tie-break
  std::vector<std::size_t> coset_of;        // element index -> coset number
  std::size_t count() const { return representatives.size(); }
};

/// Partition of W into W_lambda \ W / W_mu.
inline DoubleCosets double_cosets(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                  std::size_t cap = kDefaultWeylCap) {
  const WeylGroup& W = enumerate_weyl(rs, cap);
  DoubleCosets dc;
  dc.stab_left = stabilizer(W, lambda);
  dc.stab_right = stabilizer(W, mu);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  dc.coset_of.assign(W.size(), unset);
  for (std::size_t k = 0; k < W.size(); ++k) {
    if (dc.coset_of[k] != unset) continue;
    std::size_t id = dc.representatives.size();
    dc.representatives.push_back(k);
    for (auto a : dc.stab_left) {
      std::size_t ak = W.multiply(a, k);
      for (auto b : dc.stab_right) dc.coset_of[W.multiply(ak, b)] = id;
    }
  }
  return dc;
}

/// lambda - mu in Z_{>=0} Pi.
inline bool dominates(const RootSystem& rs, const IVec& lambda, const IVec& mu) {
  auto beta = rs.weight_to_root(lambda - mu);
  return beta && all_nonnegative(*beta);
}

/// x in conv(W lambda), via the facet description: (x, y) <= (lambda, fw_i)
/// for every y in the W-orbit of each fundamental weight fw_i.
inline bool in_orbit_hull(const RootSystem& rs, const IVec& lambda_dominant, const IVec& x) {
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    IVec fw(rs.rank(), 0);
    fw[i] = 1;
    Rational bound = rs.form(lambda_dominant, fw);
    for (const auto& y : weyl_orbit(rs, fw))
      if (rs.form(x, y) > bound) return false;
  }
  return true;
}

/// (dominance test, hull test) for dominant integral lambda, mu. The hull test
/// checks conv(W mu) inside conv(W lambda) together with lambda - mu in Z Pi.
inline std::pair<bool, bool> dominance_hull_equiv(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  if (!lambda.is_dominant_integral() || !mu.is_dominant_integral())
    throw UsageError("dominance_hull_equiv needs dominant integral weights");
  IVec l = lambda.to_ints(), m = mu.to_ints();
  bool dom = dominates(rs, l, m);
  bool hull = rs.in_root_lattice(l - m);
  if (hull)
    for (const auto& x : weyl_orbit(rs, m))
      if (!in_orbit_hull(rs, l, x)) {
        hull = false;
        break;
      }
  return {dom, hull};
}

/// Bruhat order u <= w via the lifting property.
inline bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  if (w.is_identity()) return u.is_identity();
  if (u.length() > w.length()) return false;
  int s = w.word.front();
  IntMatrix sm = rs.simple_reflection(s);
  WeylElement sw = weyl_from_matrix(rs, sm * w.matrix);
  WeylElement su = weyl_from_matrix(rs, sm * u.matrix);
  if (su.length() < u.length()) return bruhat_leq(rs, su, sw);
  return bruhat_leq(rs, u, sw);
}

}  // namespace prvkit
