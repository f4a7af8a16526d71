#include "spinver/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "spinver/errors.hpp"

namespace spinver {

std::size_t num_vars(Ambient a) {
  switch (a) {
    case Ambient::P1xP1: return 4;
    case Ambient::P2: return 3;
    case Ambient::P3: return 4;
  }
  return 0;
}

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::P1xP1: return "P1xP1";
    case Ambient::P2: return "P2";
    case Ambient::P3: return "P3";
  }
  return "?";
}

Ambient ambient_from_name(const std::string& s) {
  if (s == "P1xP1") return Ambient::P1xP1;
  if (s == "P2") return Ambient::P2;
  if (s == "P3") return Ambient::P3;
  throw invalid_argument_error("unknown ambient name: " + s);
}

const std::vector<std::string>& var_names(Ambient a) {
  static const std::vector<std::string> p1p1 = {"x0", "x1", "y0", "y1"};
  static const std::vector<std::string> p2 = {"x0", "x1", "x2"};
  static const std::vector<std::string> p3 = {"z0", "z1", "z2", "z3"};
  switch (a) {
    case Ambient::P1xP1: return p1p1;
    case Ambient::P2: return p2;
    case Ambient::P3: return p3;
  }
  return p2;
}

std::string degree_to_string(Ambient amb, const Multidegree& d) {
  if (amb == Ambient::P1xP1)
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
  return std::to_string(d.a);
}

Multidegree monomial_degree(Ambient amb, const Monomial& m) {
  if (amb == Ambient::P1xP1)
    return bideg(int(m[0]) + int(m[1]), int(m[2]) + int(m[3]));
  int n = static_cast<int>(num_vars(amb));
  int d = 0;
  for (int i = 0; i < 4; ++i) {
    if (i >= n && m[i] != 0)
      throw invalid_argument_error("monomial uses a variable outside ambient");
    d += int(m[i]);
  }
  return deg(d);
}

std::vector<Monomial> monomial_basis(Ambient amb, const Multidegree& d) {
  std::vector<Monomial> out;
  if (amb == Ambient::P1xP1) {
    if (d.a < 0 || d.b < 0) return out;
    for (int e0 = 0; e0 <= d.a; ++e0)
      for (int e2 = 0; e2 <= d.b; ++e2)
        out.push_back(Monomial{std::uint8_t(e0), std::uint8_t(d.a - e0),
                               std::uint8_t(e2), std::uint8_t(d.b - e2)});
  } else {
    if (d.a < 0) return out;
    int n = static_cast<int>(num_vars(amb));
    Monomial m{0, 0, 0, 0};
    // Enumerate exponent tuples of total degree d.a over n variables.
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int idx, int rem) -> void {
      if (idx == n - 1) {
        e[idx] = rem;
        for (int i = 0; i < n; ++i) m[i] = std::uint8_t(e[i]);
        out.push_back(m);
        return;
      }
      for (int v = 0; v <= rem; ++v) {
        e[idx] = v;
        self(self, idx + 1, rem - v);
      }
    };
    rec(rec, 0, d.a);
  }
  std::sort(out.begin(), out.end(), std::greater<Monomial>());
  return out;
}

MultiPoly::MultiPoly(const Field& f, Ambient amb, const Multidegree& d)
    : field_(f), ambient_(amb), degree_(d) {}

MultiPoly MultiPoly::from_term(const Field& f, Ambient amb, const Monomial& m,
                               const Scalar& c) {
  MultiPoly p(f, amb, monomial_degree(amb, m));
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.field() != field_)
    throw field_mismatch_error("add_term: coefficient from a different field");
  if (c.is_zero()) return;
  if (monomial_degree(ambient_, m) != degree_)
    throw invalid_argument_error("add_term: monomial degree " +
                                 degree_to_string(ambient_,
                                                  monomial_degree(ambient_, m)) +
                                 " does not match polynomial degree " +
                                 degree_to_string(ambient_, degree_));
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (field_ != o.field_ || ambient_ != o.ambient_ || degree_ != o.degree_)
    throw invalid_argument_error("sum of polynomials of different type");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (field_ != o.field_ || ambient_ != o.ambient_ || degree_ != o.degree_)
    throw invalid_argument_error("difference of polynomials of different type");
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (field_ != o.field_ || ambient_ != o.ambient_)
    throw invalid_argument_error("product of polynomials of different type");
  Multidegree d = ambient_ == Ambient::P1xP1
                      ? bideg(degree_.a + o.degree_.a, degree_.b + o.degree_.b)
                      : deg(degree_.a + o.degree_.a);
  MultiPoly r(field_, ambient_, d);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (int i = 0; i < 4; ++i) m[i] = std::uint8_t(m1[i] + m2[i]);
      r.add_term(m, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(-Scalar::one(field_)); }

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(field_, ambient_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return field_ == o.field_ && ambient_ == o.ambient_ &&
         degree_ == o.degree_ && terms_ == o.terms_;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& pt) const {
  if (pt.size() != num_vars(ambient_))
    throw invalid_argument_error("evaluate: wrong number of coordinates");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < pt.size(); ++i)
      if (m[i] != 0) t *= pt[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= num_vars(ambient_))
    throw invalid_argument_error("derivative: variable index out of range");
  Multidegree d = degree_;
  if (ambient_ == Ambient::P1xP1) {
    if (var < 2) d.a -= 1; else d.b -= 1;
  } else {
    d.a -= 1;
  }
  if (d.a < 0 || d.b < 0) return MultiPoly(field_, ambient_, deg(0));
  MultiPoly r(field_, ambient_, d);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial mm = m;
    mm[var] -= 1;
    r.add_term(mm, c * Scalar::from_int(field_, m[var]));
  }
  return r;
}

MultiPoly MultiPoly::substitute_linear(
    const std::vector<std::vector<Scalar>>& lin) const {
  std::size_t n = num_vars(ambient_);
  if (lin.size() != n)
    throw invalid_argument_error("substitute_linear: need one form per variable");
  for (const auto& l : lin)
    if (l.size() != n)
      throw invalid_argument_error("substitute_linear: form has wrong length");

  using Raw = std::map<Monomial, Scalar, std::greater<Monomial>>;
  auto raw_mul = [&](const Raw& a, const Raw& b) {
    Raw r;
    for (const auto& [m1, c1] : a)
      for (const auto& [m2, c2] : b) {
        Monomial m;
        for (int i = 0; i < 4; ++i) m[i] = std::uint8_t(m1[i] + m2[i]);
        auto it = r.find(m);
        if (it == r.end()) r.emplace(m, c1 * c2);
        else {
          it->second += c1 * c2;
          if (it->second.is_zero()) r.erase(it);
        }
      }
    return r;
  };

  Raw acc;
  for (const auto& [m, c] : terms_) {
    Raw prod;
    prod.emplace(Monomial{0, 0, 0, 0}, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Raw form;
      for (std::size_t j = 0; j < n; ++j) {
        if (lin[i][j].is_zero()) continue;
        Monomial mj{0, 0, 0, 0};
        mj[j] = 1;
        form.emplace(mj, lin[i][j]);
      }
      for (int e = 0; e < int(m[i]); ++e) prod = raw_mul(prod, form);
    }
    for (const auto& [mm, cc] : prod) {
      auto it = acc.find(mm);
      if (it == acc.end()) acc.emplace(mm, cc);
      else {
        it->second += cc;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }

  if (acc.empty()) return MultiPoly(field_, ambient_, degree_);
  Multidegree d = monomial_degree(ambient_, acc.begin()->first);
  MultiPoly r(field_, ambient_, d);
  for (const auto& [m, c] : acc) r.add_term(m, c);  // validates homogeneity
  return r;
}

std::vector<Scalar> MultiPoly::coefficient_vector(
    const std::vector<Monomial>& basis) const {
  std::vector<Scalar> v;
  v.reserve(basis.size());
  std::size_t seen = 0;
  for (const Monomial& m : basis) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      v.push_back(Scalar::zero(field_));
    } else {
      v.push_back(it->second);
      ++seen;
    }
  }
  if (seen != terms_.size())
    throw invalid_argument_error(
        "coefficient_vector: basis does not cover all terms");
  return v;
}

MultiPoly MultiPoly::from_coefficient_vector(
    const Field& f, Ambient amb, const Multidegree& d,
    const std::vector<Monomial>& basis, const std::vector<Scalar>& coeffs) {
  if (basis.size() != coeffs.size())
    throw invalid_argument_error("from_coefficient_vector: length mismatch");
  MultiPoly p(f, amb, d);
  for (std::size_t i = 0; i < basis.size(); ++i)
    p.add_term(basis[i], coeffs[i]);
  return p;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.begin()->second.inverse());
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = var_names(ambient_);
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-", cs = cs.substr(1);
      first = false;
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (m[i] == 0) continue;
      if (any) mono << "*";
      mono << names[i];
      if (m[i] > 1) mono << "^" << int(m[i]);
      any = true;
    }
    if (!any) {
      os << cs;
    } else if (cs == "1") {
      os << mono.str();
    } else {
      os << cs << "*" << mono.str();
    }
  }
  return os.str();
}

nlohmann::ordered_json MultiPoly::to_json() const {
  nlohmann::ordered_json j;
  j["ambient"] = ambient_name(ambient_);
  if (ambient_ == Ambient::P1xP1)
    j["degree"] = nlohmann::ordered_json::array({degree_.a, degree_.b});
  else
    j["degree"] = degree_.a;
  auto terms = nlohmann::ordered_json::array();
  std::size_t n = num_vars(ambient_);
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json t;
    auto exp = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) exp.push_back(int(m[i]));
    t["exp"] = exp;
    t["coeff"] = c.to_string();
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

MultiPoly MultiPoly::from_json(const Field& f,
                               const nlohmann::ordered_json& j) {
  Ambient amb = ambient_from_name(j.at("ambient").get<std::string>());
  Multidegree d;
  if (amb == Ambient::P1xP1) {
    d = bideg(j.at("degree").at(0).get<int>(), j.at("degree").at(1).get<int>());
  } else {
    d = deg(j.at("degree").get<int>());
  }
  MultiPoly p(f, amb, d);
  std::size_t n = num_vars(amb);
  for (const auto& t : j.at("terms")) {
    Monomial m{0, 0, 0, 0};
    const auto& exp = t.at("exp");
    if (exp.size() != n)
      throw invalid_argument_error("polynomial json: exponent length mismatch");
    for (std::size_t i = 0; i < n; ++i) m[i] = std::uint8_t(exp[i].get<int>());
    p.add_term(m, Scalar::parse(f, t.at("coeff").get<std::string>()));
  }
  return p;
}

std::vector<Scalar> normalize_projective(std::vector<Scalar> pt) {
  for (const Scalar& s : pt) {
    if (!s.is_zero()) {
      Scalar inv = s.inverse();
      for (Scalar& x : pt) x *= inv;
      return pt;
    }
  }
  throw invalid_argument_error("normalize_projective: zero vector");
}

std::vector<Scalar> normalize_p1xp1(std::vector<Scalar> pt) {
  if (pt.size() != 4)
    throw invalid_argument_error("normalize_p1xp1: need 4 coordinates");
  std::vector<Scalar> x = normalize_projective({pt[0], pt[1]});
  std::vector<Scalar> y = normalize_projective({pt[2], pt[3]});
  return {x[0], x[1], y[0], y[1]};
}

std::vector<Scalar> p1xp1_point(const std::array<Scalar, 2>& x,
                                const std::array<Scalar, 2>& y) {
  return normalize_p1xp1({x[0], x[1], y[0], y[1]});
}

std::string point_to_string(Ambient amb, const std::vector<Scalar>& pt) {
  std::ostringstream os;
  auto emit = [&](std::size_t from, std::size_t to) {
    os << "(";
    for (std::size_t i = from; i < to; ++i) {
      if (i > from) os << ":";
      os << pt[i].to_string();
    }
    os << ")";
  };
  if (amb == Ambient::P1xP1) {
    emit(0, 2);
    os << "x";
    emit(2, 4);
  } else {
    emit(0, pt.size());
  }
  return os.str();
}

namespace {

// Binary forms as coefficient vectors: entry i multiplies u^(d-i) v^i.
std::vector<Scalar> bf_mul(const Field& f, const std::vector<Scalar>& a,
                           const std::vector<Scalar>& b) {
  std::vector<Scalar> r(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

std::vector<Scalar> restrict_to_line(const MultiPoly& f,
                                     const std::vector<Scalar>& A,
                                     const std::vector<Scalar>& B) {
  if (f.ambient() == Ambient::P1xP1)
    throw invalid_argument_error("restrict_to_line: use restrict_to_ruling");
  std::size_t n = num_vars(f.ambient());
  if (A.size() != n || B.size() != n)
    throw invalid_argument_error("restrict_to_line: point length mismatch");
  const Field& k = f.field();
  int d = f.degree().a;
  std::vector<Scalar> out(std::size_t(d) + 1, Scalar::zero(k));
  for (const auto& [m, c] : f.terms()) {
    std::vector<Scalar> prod{c};
    for (std::size_t i = 0; i < n; ++i)
      for (int e = 0; e < int(m[i]); ++e)
        prod = bf_mul(k, prod, {A[i], B[i]});
    for (std::size_t i = 0; i < prod.size(); ++i) out[i] += prod[i];
  }
  return out;
}

std::vector<Scalar> restrict_to_ruling(const MultiPoly& f, int fixed_factor,
                                       const std::array<Scalar, 2>& pt) {
  if (f.ambient() != Ambient::P1xP1)
    throw invalid_argument_error("restrict_to_ruling: ambient must be P1xP1");
  const Field& k = f.field();
  int d = fixed_factor == 0 ? f.degree().b : f.degree().a;
  std::vector<Scalar> out(std::size_t(d) + 1, Scalar::zero(k));
  for (const auto& [m, c] : f.terms()) {
    Scalar coef = c;
    std::size_t iv;  // index giving the v-exponent of the surviving pair
    if (fixed_factor == 0) {
      coef *= pt[0].pow(m[0]) * pt[1].pow(m[1]);
      iv = 3;
    } else {
      coef *= pt[0].pow(m[2]) * pt[1].pow(m[3]);
      iv = 1;
    }
    out[m[iv]] += coef;
  }
  return out;
}

namespace {

// Multiplicity of t0 as a root of the univariate polynomial with ascending
// coefficients g[0..deg]; divides out (t - t0) repeatedly.
std::size_t root_multiplicity(const Field& f, std::vector<Scalar> g,
                              const Scalar& t0) {
  std::size_t mult = 0;
  while (g.size() > 0) {
    // Evaluate by Horner.
    Scalar val = Scalar::zero(f);
    for (std::size_t i = g.size(); i-- > 0;) val = val * t0 + g[i];
    if (!val.is_zero()) break;
    ++mult;
    // Synthetic division by (t - t0): ascending -> work from the top.
    std::vector<Scalar> q(g.size() - 1, Scalar::zero(f));
    Scalar carry = Scalar::zero(f);
    for (std::size_t i = g.size(); i-- > 1;) {
      carry = g[i] + carry * t0;
      q[i - 1] = carry;
    }
    g = std::move(q);
    if (g.empty()) break;
  }
  return mult;
}

// Divisors of |n| in increasing order; n fits a 64-bit magnitude by guard.
std::vector<BigInt> divisors_of(const BigInt& n) {
  BigInt a = n < 0 ? BigInt(-n) : n;
  std::vector<BigInt> lo, hi;
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      lo.push_back(d);
      if (d * d != a) hi.push_back(a / d);
    }
  }
  for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
  return lo;
}

}  // namespace

FactorResult linear_factors(const Field& f, const std::vector<Scalar>& coeffs) {
  if (coeffs.empty())
    throw invalid_argument_error("linear_factors: empty coefficient vector");
  std::size_t d = coeffs.size() - 1;
  std::size_t top = coeffs.size();  // index of highest nonzero, +1 sentinel
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (!coeffs[i].is_zero()) { top = i; break; }
  if (top == coeffs.size())
    throw invalid_argument_error("linear_factors: zero form");

  FactorResult res;
  // Root at (0:1) comes from a common factor of u.
  std::size_t inf_mult = d - top;

  // Finite part: g(t) = form(1, t), ascending coefficients up to index top.
  std::vector<Scalar> g(coeffs.begin(), coeffs.begin() + long(top) + 1);
  std::size_t finite_deg = top;
  std::size_t finite_sum = 0;

  auto push_root = [&](const Scalar& t0, std::size_t mult) {
    res.factors.push_back(
        LinearFactor{{Scalar::one(f), t0}, mult});
    finite_sum += mult;
  };

  if (f.is_prime()) {
    if (f.characteristic() > (1u << 17))
      throw invalid_argument_error(
          "linear_factors: field too large for a full scan");
    for (std::uint64_t t = 0; t < f.characteristic(); ++t) {
      Scalar t0 = Scalar::from_fp(f, t);
      std::size_t m = root_multiplicity(f, g, t0);
      if (m > 0) push_root(t0, m);
      if (finite_sum == finite_deg) break;
    }
  } else {
    // Rational root test on the primitive integer model of g.
    BigInt lcm = 1;
    for (const Scalar& c : g)
      lcm = boost::multiprecision::lcm(
          lcm, boost::multiprecision::denominator(c.rat_value()));
    std::vector<BigInt> gi;
    gi.reserve(g.size());
    for (const Scalar& c : g)
      gi.push_back(boost::multiprecision::numerator(c.rat_value() * BigRat(lcm)));
    std::size_t low = 0;
    while (low < gi.size() && gi[low] == 0) ++low;
    if (low > 0) push_root(Scalar::zero(f), root_multiplicity(f, g, Scalar::zero(f)));
    BigInt c0 = gi[low], cd = gi[top];
    const BigInt guard = BigInt(1) << 63;
    if (boost::multiprecision::abs(c0) > guard ||
        boost::multiprecision::abs(cd) > guard)
      throw invalid_argument_error(
          "linear_factors: coefficients too large for a rational root test");
    std::vector<Scalar> found;
    for (const BigInt& p : divisors_of(c0))
      for (const BigInt& q : divisors_of(cd))
        for (int sign = 0; sign < 2; ++sign) {
          if (boost::multiprecision::gcd(p, q) != 1) continue;
          BigRat cand = BigRat(sign ? -p : p, q);
          Scalar t0 = Scalar::from_rational(cand);
          bool dup = false;
          for (const Scalar& s : found)
            if (s == t0) { dup = true; break; }
          if (dup) continue;
          std::size_t m = root_multiplicity(f, g, t0);
          if (m > 0) {
            found.push_back(t0);
            push_root(t0, m);
          }
        }
    // Deterministic order for the rational roots.
    std::sort(res.factors.begin(), res.factors.end(),
              [](const LinearFactor& a, const LinearFactor& b) {
                return a.point[1] < b.point[1];
              });
  }

  if (inf_mult > 0)
    res.factors.push_back(
        LinearFactor{{Scalar::zero(f), Scalar::one(f)}, inf_mult});
  res.fully_split = (finite_sum == finite_deg);
  return res;
}

}  // namespace spinver
