#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace strata::linalg {

class Scalar;

/// Raised when values from two different ground fields meet in one operation.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ground field descriptor: the rationals, or a prime field F_p with p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>" (e.g. "F5").
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_rational(const mpq_class& q) const;
  /// "p/q", "n" for the rationals; an integer literal for F_p.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator (GMP canonical form); residues lie in [0, p).
class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  friend class Field;
  void check_same(const Scalar& o) const;

  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
  mpq_class q_;
};

}  // namespace strata::linalg
