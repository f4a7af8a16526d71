#include "spinver/field.hpp"

#include <cassert>

namespace spinver {

bool is_odd_prime(std::uint32_t n) {
  if (n < 3 || n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_odd_prime(p))
    throw bad_characteristic_error("field modulus " + std::to_string(p) +
                                   " is not an odd prime");
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::to_string() const {
  return is_rational() ? "rational" : "p=" + std::to_string(p_);
}

namespace {

std::uint64_t mod_reduce_ll(long long n, std::uint64_t p) {
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p); p prime, a != 0
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  assert(r == 1);
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::from_int(const Field& f, long long n) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.rat_ = BigRat(n);
  } else {
    s.fp_ = mod_reduce_ll(n, f.characteristic());
  }
  return s;
}

Scalar Scalar::from_rational(const BigRat& q) {
  Scalar s;
  s.field_ = Field::rational();
  s.rat_ = q;
  return s;
}

Scalar Scalar::from_fp(const Field& f, std::uint64_t v) {
  if (!f.is_prime())
    throw field_mismatch_error("from_fp needs a prime field");
  Scalar s;
  s.field_ = f;
  s.fp_ = v % f.characteristic();
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& str) {
  if (f.is_prime()) {
    long long v = std::stoll(str);
    return from_int(f, v);
  }
  auto slash = str.find('/');
  if (slash == std::string::npos) return from_rational(BigRat(BigInt(str)));
  BigInt num(str.substr(0, slash));
  BigInt den(str.substr(slash + 1));
  if (den == 0) throw division_by_zero_error("zero denominator in " + str);
  return from_rational(BigRat(num, den));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw field_mismatch_error("scalar fields differ: " + field_.to_string() +
                               " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : fp_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : fp_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.rat_ = rat_ + o.rat_;
  } else {
    std::uint64_t p = field_.characteristic();
    r.fp_ = fp_ + o.fp_;
    if (r.fp_ >= p) r.fp_ -= p;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.rat_ = rat_ - o.rat_;
  } else {
    std::uint64_t p = field_.characteristic();
    r.fp_ = fp_ >= o.fp_ ? fp_ - o.fp_ : fp_ + p - o.fp_;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.rat_ = rat_ * o.rat_;
  else
    r.fp_ = mod_mul(fp_, o.fp_, field_.characteristic());
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw division_by_zero_error("inverse of zero");
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.rat_ = BigRat(1) / rat_;
  else
    r.fp_ = mod_inv(fp_, field_.characteristic());
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational())
    r.rat_ = -rat_;
  else
    r.fp_ = fp_ == 0 ? 0 : field_.characteristic() - fp_;
  return r;
}

Scalar Scalar::pow(long long e) const {
  Scalar base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Scalar acc = Scalar::one(field_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ == o.rat_ : fp_ == o.fp_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? rat_ < o.rat_ : fp_ < o.fp_;
}

std::uint64_t Scalar::fp_value() const {
  if (!field_.is_prime())
    throw field_mismatch_error("fp_value on a rational scalar");
  return fp_;
}

const BigRat& Scalar::rat_value() const {
  if (!field_.is_rational())
    throw field_mismatch_error("rat_value on a prime-field scalar");
  return rat_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(fp_);
  BigInt num = boost::multiprecision::numerator(rat_);
  BigInt den = boost::multiprecision::denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::vector<Scalar> scalar_vector(const Field& f,
                                  const std::vector<long long>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (long long n : v) out.push_back(Scalar::from_int(f, n));
  return out;
}

}  // namespace spinver
