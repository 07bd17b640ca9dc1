#pragma once

// Multivariate polynomials over Q, used as elements of Sym h (variables are
// the simple coroots h_1..h_r, or any other named coordinates).

#include "prvkit/core.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prvkit {

class Poly {
 public:
  using Exponents = std::vector<unsigned>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    if (sgn(c) != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
  }

  static Poly variable(std::size_t nvars, std::size_t i) {
    Poly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  /// c_0 + sum_i coeffs[i] * x_i
  static Poly linear(const std::vector<Rational>& coeffs, const Rational& c0) {
    Poly p = constant(coeffs.size(), c0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p += variable(coeffs.size(), i) * Poly::constant(coeffs.size(), coeffs[i]);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(p.nvars_, 0);
        for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }

  Poly scaled(const Rational& s) const {
    Poly p(nvars_);
    for (const auto& [e, c] : terms_) p.add_term(e, c * s);
    return p;
  }

  Poly pow(unsigned k) const {
    Poly r = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
      total += t;
    }
    return total;
  }

  /// Substitutes x_i -> images[i] (each a polynomial in a common variable set).
  Poly substitute(const std::vector<Poly>& images) const {
    std::size_t nv = images.empty() ? 0 : images.front().nvars();
    Poly out(nv);
    for (const auto& [e, c] : terms_) {
      Poly t = constant(nv, c);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) t = t * images[i].pow(e[i]);
      out += t;
    }
    return out;
  }

  /// If this == s * other for a nonzero rational s, returns s.
  std::optional<Rational> ratio_to(const Poly& other) const {
    if (terms_.size() != other.terms_.size() || other.is_zero()) return std::nullopt;
    auto it = other.terms_.begin();
    Rational s = coefficient(it->first) / it->second;
    if (sgn(s) == 0) return std::nullopt;
    if (!(*this == other.scaled(s))) return std::nullopt;
    return s;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // highest total degree first
    std::vector<std::pair<Exponents, Rational>> sorted(terms_.rbegin(), terms_.rend());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      unsigned da = 0, db = 0;
      for (auto x : a.first) da += x;
      for (auto x : b.first) db += x;
      return da > db;
    });
    for (const auto& [e, c] : sorted) {
      Rational mag = abs(c);
      bool is_const = true;
      for (auto x : e)
        if (x) is_const = false;
      if (first) {
        if (sgn(c) < 0) s += "-";
      } else {
        s += sgn(c) < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (is_const) {
        s += mag.get_str();
      } else {
        if (mag != 1) s += mag.get_str() + "*";
        s += mono;
      }
    }
    return s;
  }

  std::string to_string() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars_; ++i) names.push_back("h" + std::to_string(i + 1));
    return to_string(names);
  }

 private:
  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

}  // namespace prvkit
