// Exact scalars over Q or a prime field F_p.
//
// Rationals are kept in lowest terms with positive denominator (the
// multiprecision backend canonicalizes on every operation). Prime-field
// values are canonical representatives in [0, p) with p an odd prime.
// Scalars carry their field; mixing fields raises field_mismatch_error.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "spinver/errors.hpp"

namespace spinver {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Field descriptor: characteristic 0 (rationals) or an odd prime p.
class Field {
 public:
  Field() : p_(0) {}

  static Field rational() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string to_string() const;

 private:
  std::uint32_t p_;
};

bool is_odd_prime(std::uint32_t n);

class Scalar {
 public:
  Scalar() : field_(Field::rational()), fp_(0), rat_(0) {}

  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long n);
  static Scalar from_rational(const BigRat& q);          // field = Q
  static Scalar from_fp(const Field& f, std::uint64_t v);  // reduced mod p
  // Parses "n" or "n/d" over Q, a decimal representative over F_p.
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // division_by_zero_error on 0
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long long e) const;  // negative e inverts first

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Total order used only for deterministic tie-breaking (not field order).
  bool operator<(const Scalar& o) const;

  // Prime-field representative in [0, p); invalid over Q.
  std::uint64_t fp_value() const;
  // Rational value; invalid over F_p.
  const BigRat& rat_value() const;

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::uint64_t fp_;  // representative when field_ is prime
  BigRat rat_;        // value when field_ is rational
};

// Convenience for building scalar vectors from integer literals.
std::vector<Scalar> scalar_vector(const Field& f,
                                  const std::vector<long long>& v);

}  // namespace spinver
