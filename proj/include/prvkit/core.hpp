#pragma once

// Shared scalar types, integer vectors, error types and parsing helpers.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prvkit {

using Rational = mpq_class;

/// Integer coordinate vector. Used for integral weights (fundamental-weight
/// coordinates) and for root-lattice vectors (simple-root coordinates).
using IVec = std::vector<long>;

/// p / q in lowest terms.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Errors. The CLI maps these onto exit codes 1, 2 and 3.

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

// ---------------------------------------------------------------------------
// IVec arithmetic

inline IVec operator+(const IVec& a, const IVec& b) {
  IVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline IVec operator-(const IVec& a, const IVec& b) {
  IVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline IVec operator-(const IVec& a) {
  IVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline IVec scaled(const IVec& a, long k) {
  IVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

inline bool all_nonnegative(const IVec& a) {
  for (long x : a)
    if (x < 0) return false;
  return true;
}

inline bool is_zero(const IVec& a) {
  for (long x : a)
    if (x != 0) return false;
  return true;
}

inline long sum(const IVec& a) {
  long s = 0;
  for (long x : a) s += x;
  return s;
}

struct IVecHash {
  std::size_t operator()(const IVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// Formatting and parsing

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

inline std::string format_ivec(const IVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

/// Parses "p", "-p" or "p/q" with q > 0. Anything else is a UsageError.
inline Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw UsageError("malformed rational '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw UsageError("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace prvkit
