#pragma once

// Exact rational scalars and dense exact matrix algebra.
//
// Integers are arbitrary precision throughout; nothing in this header ever
// rounds. Rational values are kept reduced with a positive denominator, so
// equality is structural.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "contactkirby/errors.hpp"

namespace contactkirby {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() = default;
  Rational(BigInt value) : num_(std::move(value)) {}  // NOLINT(implicit)
  Rational(std::int64_t value) : num_(value) {}       // NOLINT(implicit)
  Rational(int value) : num_(value) {}                // NOLINT(implicit)

  /// Unique reduced representative of num/den.
  static Rational reduce(BigInt num, BigInt den) {
    if (den == 0) throw InvalidInput("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = gcd(abs(num), den);
    Rational r;
    if (num == 0) return r;
    r.num_ = num / g;
    r.den_ = den / g;
    return r;
  }

  /// Parses "p", "+p", "-p" or "p/q" (surrounding whitespace not allowed).
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto num = parse_integer(text.substr(0, slash));
    if (slash == std::string_view::npos) return Rational(std::move(num));
    return reduce(std::move(num), parse_integer(text.substr(slash + 1)));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Largest integer not exceeding the value.
  BigInt floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return reduce(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidInput("division by zero");
    return reduce(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static BigInt parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
      digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("not a rational number: '" + std::string(text) + "'");
    BigInt value{std::string(digits)};
    return text.front() == '-' ? BigInt(-value) : value;
  }

  BigInt num_ = 0;
  BigInt den_ = 1;
};

inline Rational reduce(BigInt num, BigInt den) {
  return Rational::reduce(std::move(num), std::move(den));
}

/// Checked narrowing of a big integer to a machine word.
inline std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw InvalidInput("integer out of 64-bit range: " + value.str());
  return static_cast<std::int64_t>(value);
}

/// Dense square matrix, row-major.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw InvalidInput("matrix must be square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * n_, n_);
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;
using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

inline bool is_integral(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

namespace detail {

// In-place fraction-free Gaussian elimination on the n leading columns of a
// row-major n x width integer array. Returns the sign of the row permutation
// applied, or 0 if the leading n x n block is singular. Afterwards the leading
// block is upper triangular and entry (n-1, n-1) is the determinant of the
// permuted leading block.
inline int bareiss_eliminate(std::vector<BigInt>& a, std::size_t n, std::size_t width) {
  int sign = 1;
  BigInt prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * width + j]; };
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < width; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        // Exact by Sylvester's identity.
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign;
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<BigInt> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& x : m.row(i)) a.push_back(x);
  int sign = detail::bareiss_eliminate(a, n, n);
  if (sign == 0) return 0;
  return sign * a[n * n - 1];
}

/// Exact inverse: Bareiss elimination of [M | I] to integer upper-triangular
/// form, then rational back-substitution. Throws SingularMatrix.
inline RationalMatrix invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  const std::size_t width = 2 * n;
  std::vector<BigInt> a(n * width, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * width + j] = m(i, j);
    a[i * width + n + i] = 1;
  }
  if (detail::bareiss_eliminate(a, n, width) == 0) throw SingularMatrix();

  RationalMatrix inv(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(a[ii * width + n + col]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii * width + j]) * inv(j, col);
      inv(ii, col) = acc / Rational(a[ii * width + ii]);
    }
  }
  return inv;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("dimension mismatch");
  const std::size_t n = a.size();
  RationalMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == Rational()) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

/// Exact matrix-vector product.
inline RationalVector multiply(const RationalMatrix& m, std::span<const BigInt> v) {
  if (m.size() != v.size()) throw InvalidInput("dimension mismatch in matrix-vector product");
  RationalVector out(v.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m(i, j) * Rational(v[j]);
  return out;
}

inline Rational inner(std::span<const BigInt> u, std::span<const Rational> w) {
  if (u.size() != w.size()) throw InvalidInput("dimension mismatch in inner product");
  Rational acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += Rational(u[i]) * w[i];
  return acc;
}

}  // namespace contactkirby
