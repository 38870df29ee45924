#pragma once

// Exact rational scalars and fixed-length rational vectors.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "halfint/error.hpp"

namespace halfint {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw UsageError("zero denominator");
    value_.canonicalize();
  }
  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (den == 0) throw UsageError("zero denominator");
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw UsageError("empty rational literal");
    const auto slash = s.find('/');
    Integer num;
    Integer den = 1;
    auto read_int = [&](const std::string& part, Integer& out) {
      std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
      if (part.size() == start ||
          part.find_first_not_of("0123456789", start) != std::string::npos ||
          out.set_str(part[0] == '+' ? part.substr(1) : part, 10) != 0) {
        throw UsageError("malformed rational literal '" + s + "'");
      }
    };
    if (slash == std::string::npos) {
      read_int(s, num);
    } else {
      read_int(s.substr(0, slash), num);
      read_int(s.substr(slash + 1), den);
      if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
  }

  const mpq_class& value() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const {
    if (is_zero()) throw UsageError("inverse of zero");
    return Rational(mpq_class(1 / value_));
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Truncated decimal rendering with `digits` fractional digits, computed
  /// with integer arithmetic only.
  std::string decimal(unsigned digits = 6) const {
    Integer num = value_.get_num();
    const Integer den = value_.get_den();
    std::string out = num < 0 ? "-" : "";
    num = ::abs(num);
    Integer whole = num / den;
    Integer rem = num % den;
    out += whole.get_str();
    if (digits == 0) return out;
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
      rem *= 10;
      Integer q = rem / den;
      rem %= den;
      out += q.get_str();
    }
    return out;
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  /// this -= a * b, the elimination kernel.
  void sub_mul(const Rational& a, const Rational& b) {
    mpq_class t = a.value_ * b.value_;
    value_ -= t;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

/// A point (or vector) of Q^d. The dimension is fixed at construction.
class RatPoint {
 public:
  RatPoint() = default;
  explicit RatPoint(std::size_t dim) : coords_(dim) {}
  RatPoint(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RatPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static RatPoint unit(std::size_t dim, std::size_t i) {
    RatPoint p(dim);
    p[i] = 1;
    return p;
  }

  std::size_t dim() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    for (const auto& c : coords_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  /// Index of the first nonzero coordinate, or dim() for the zero vector.
  std::size_t leading_index() const {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (!coords_[i].is_zero()) return i;
    }
    return coords_.size();
  }

  Rational sum() const {
    Rational s;
    for (const auto& c : coords_) s += c;
    return s;
  }

  RatPoint& operator+=(const RatPoint& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  RatPoint& operator-=(const RatPoint& o) {
    check_same_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  RatPoint& operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }

  friend RatPoint operator+(RatPoint a, const RatPoint& b) { return a += b; }
  friend RatPoint operator-(RatPoint a, const RatPoint& b) { return a -= b; }
  friend RatPoint operator*(const Rational& s, RatPoint a) { return a *= s; }
  friend RatPoint operator*(RatPoint a, const Rational& s) { return a *= s; }
  friend RatPoint operator-(RatPoint a) { return a *= Rational(-1); }

  friend Rational dot(const RatPoint& a, const RatPoint& b) {
    a.check_same_dim(b);
    Rational s;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
  }

  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  friend auto operator<=>(const RatPoint& a, const RatPoint& b) { return a.coords_ <=> b.coords_; }

  /// "(c0,c1,...)" with canonical rational strings.
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += coords_[i].str();
    }
    return out + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatPoint& p) { return os << p.str(); }

 private:
  void check_same_dim(const RatPoint& o) const {
    if (o.dim() != dim()) throw UsageError("dimension mismatch");
  }

  std::vector<Rational> coords_;
};

/// Rectangular matrix stored as equal-length rows.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::vector<RatPoint> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_) {
      if (r.dim() != rows_.front().dim()) throw UsageError("ragged matrix rows");
    }
  }
  RatMatrix(std::size_t n_rows, std::size_t n_cols) : rows_(n_rows, RatPoint(n_cols)) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return rows_.empty() ? 0 : rows_.front().dim(); }
  const RatPoint& row(std::size_t i) const { return rows_[i]; }
  std::span<const RatPoint> row_list() const { return rows_; }
  Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  RatMatrix transposed() const {
    RatMatrix t(cols(), rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

 private:
  std::vector<RatPoint> rows_;
};

inline Rational binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

inline Rational pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return Rational(r);
}

}  // namespace halfint

template <>
struct std::hash<halfint::Rational> {
  std::size_t operator()(const halfint::Rational& r) const noexcept {
    const std::size_t hn = mpz_get_ui(r.value().get_num_mpz_t()) ^
                           (mpz_sgn(r.value().get_num_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    const std::size_t hd = mpz_get_ui(r.value().get_den_mpz_t());
    return hn * 1000003u ^ hd;
  }
};

template <>
struct std::hash<halfint::RatPoint> {
  std::size_t operator()(const halfint::RatPoint& p) const noexcept {
    std::size_t h = p.dim();
    for (const auto& c : p) h = h * 0x100000001b3ULL ^ std::hash<halfint::Rational>{}(c);
    return h;
  }
};
