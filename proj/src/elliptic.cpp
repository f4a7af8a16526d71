#include "spinver/elliptic.hpp"

#include <cassert>

#include "spinver/errors.hpp"
#include "spinver/matrix.hpp"

namespace spinver {

EllipticCurve make_curve(const Field& f, const Scalar& a, const Scalar& b) {
  if (!f.is_prime() || f.characteristic() <= 3)
    throw bad_characteristic_error(
        "make_curve: need a prime field of characteristic > 3");
  Scalar four = Scalar::from_int(f, 4);
  Scalar twenty7 = Scalar::from_int(f, 27);
  Scalar disc = four * a * a * a + twenty7 * b * b;
  if (disc.is_zero())
    throw invalid_argument_error("make_curve: discriminant vanishes");
  return EllipticCurve{f, a, b};
}

ECPoint ec_infinity() { return ECPoint{}; }

ECPoint ec_affine(const Scalar& x, const Scalar& y) {
  ECPoint p;
  p.infinity = false;
  p.x = x;
  p.y = y;
  return p;
}

bool on_curve(const EllipticCurve& e, const ECPoint& p) {
  if (p.infinity) return true;
  return p.y * p.y == p.x * p.x * p.x + e.a * p.x + e.b;
}

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p) {
  (void)e;
  if (p.infinity) return p;
  return ec_affine(p.x, -p.y);
}

ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Field& f = e.field;
  if (p.x == q.x) {
    if (p.y != q.y || p.y.is_zero()) return ec_infinity();
    // Doubling.
    Scalar three = Scalar::from_int(f, 3);
    Scalar two = Scalar::from_int(f, 2);
    Scalar lam = (three * p.x * p.x + e.a) / (two * p.y);
    Scalar x3 = lam * lam - two * p.x;
    Scalar y3 = lam * (p.x - x3) - p.y;
    return ec_affine(x3, y3);
  }
  Scalar lam = (q.y - p.y) / (q.x - p.x);
  Scalar x3 = lam * lam - p.x - q.x;
  Scalar y3 = lam * (p.x - x3) - p.y;
  return ec_affine(x3, y3);
}

ECPoint ec_sub(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
  return ec_add(e, p, ec_neg(e, q));
}

ECPoint ec_mul(const EllipticCurve& e, long long n, const ECPoint& p) {
  ECPoint base = p;
  if (n < 0) {
    base = ec_neg(e, p);
    n = -n;
  }
  ECPoint acc = ec_infinity();
  while (n > 0) {
    if (n & 1) acc = ec_add(e, acc, base);
    base = ec_add(e, base, base);
    n >>= 1;
  }
  return acc;
}

std::size_t ec_order(const EllipticCurve& e, const ECPoint& p,
                     std::size_t cap) {
  ECPoint acc = p;
  for (std::size_t n = 1; n <= cap; ++n) {
    if (acc.infinity) return n;
    acc = ec_add(e, acc, p);
  }
  throw invalid_argument_error("ec_order: order exceeds cap");
}

ECPoint divisor_class_sum(const EllipticCurve& e,
                          const std::vector<ECPoint>& pts) {
  ECPoint acc = ec_infinity();
  for (const ECPoint& p : pts) acc = ec_add(e, acc, p);
  return acc;
}

std::optional<Scalar> sqrt_mod(const Scalar& n) {
  const Field& f = n.field();
  if (!f.is_prime())
    throw bad_characteristic_error("sqrt_mod: prime fields only");
  if (n.is_zero()) return n;
  const std::uint64_t p = f.characteristic();
  // Euler criterion.
  if (n.pow((long long)((p - 1) / 2)) != Scalar::one(f)) return std::nullopt;

  Scalar r = Scalar::zero(f);
  if (p % 4 == 3) {
    r = n.pow((long long)((p + 1) / 4));
  } else {
    // Tonelli-Shanks: write p - 1 = q 2^s with q odd.
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    // A quadratic non-residue z, deterministic scan.
    Scalar z = Scalar::zero(f);
    for (std::uint64_t c = 2; c < p; ++c) {
      z = Scalar::from_fp(f, c);
      if (z.pow((long long)((p - 1) / 2)) != Scalar::one(f)) break;
    }
    Scalar m_c = z.pow((long long)q);
    Scalar t = n.pow((long long)q);
    r = n.pow((long long)((q + 1) / 2));
    std::uint64_t m = s;
    while (t != Scalar::one(f)) {
      Scalar tt = t;
      std::uint64_t i = 0;
      while (tt != Scalar::one(f)) {
        tt *= tt;
        ++i;
        if (i == m) return std::nullopt;  // defensive; residue check above
      }
      Scalar bpow = m_c;
      for (std::uint64_t j = 0; j + i + 1 < m; ++j) bpow *= bpow;
      m = i;
      m_c = bpow * bpow;
      t *= m_c;
      r *= bpow;
    }
  }
  assert(r * r == n);
  // Canonical representative: the smaller of r and p - r.
  Scalar other = -r;
  return r.fp_value() <= other.fp_value() ? r : other;
}

std::vector<Scalar> torsion3_poly(const EllipticCurve& e) {
  const Field& f = e.field;
  return {-(e.a * e.a), Scalar::from_int(f, 12) * e.b,
          Scalar::from_int(f, 6) * e.a, Scalar::zero(f),
          Scalar::from_int(f, 3)};
}

std::vector<Scalar> torsion4_poly(const EllipticCurve& e) {
  const Field& f = e.field;
  const Scalar& a = e.a;
  const Scalar& b = e.b;
  return {-(Scalar::from_int(f, 8) * b * b) - a * a * a,
          -(Scalar::from_int(f, 4) * a * b),
          -(Scalar::from_int(f, 5) * a * a),
          Scalar::from_int(f, 20) * b,
          Scalar::from_int(f, 5) * a,
          Scalar::zero(f),
          Scalar::one(f)};
}

std::vector<ECPoint> torsion_points(const EllipticCurve& e, int n) {
  if (n != 3 && n != 4)
    throw invalid_argument_error("torsion_points: only orders 3 and 4");
  const Field& f = e.field;
  std::vector<Scalar> pol = n == 3 ? torsion3_poly(e) : torsion4_poly(e);
  FactorResult fr = linear_factors(f, pol);
  std::vector<ECPoint> out;
  for (const LinearFactor& lf : fr.factors) {
    if (lf.point[0].is_zero()) continue;  // ignore the root at infinity slot
    const Scalar& x = lf.point[1];
    Scalar rhs = x * x * x + e.a * x + e.b;
    std::optional<Scalar> y = sqrt_mod(rhs);
    if (!y) continue;
    for (const Scalar& yy : {*y, -*y}) {
      ECPoint p = ec_affine(x, yy);
      if (!on_curve(e, p)) continue;
      if (ec_order(e, p) == std::size_t(n)) {
        bool dup = false;
        for (const ECPoint& q : out)
          if (q == p) { dup = true; break; }
        if (!dup) out.push_back(p);
      }
      if (yy.is_zero()) break;
    }
  }
  return out;
}

TorsionSample sample_curve_with_torsion(Rng& rng, const Field& f, int n,
                                        std::size_t attempts) {
  if (n != 3 && n != 4)
    throw invalid_argument_error(
        "sample_curve_with_torsion: only orders 3 and 4");
  for (std::size_t it = 0; it < attempts; ++it) {
    Scalar a = rng.element(f);
    Scalar b = rng.element(f);
    Scalar disc = Scalar::from_int(f, 4) * a * a * a +
                  Scalar::from_int(f, 27) * b * b;
    if (disc.is_zero()) continue;
    EllipticCurve e{f, a, b};
    std::vector<ECPoint> tors = torsion_points(e, n);
    if (tors.empty()) continue;
    return TorsionSample{e, tors.front()};
  }
  throw error("sample_curve_with_torsion: attempts exhausted");
}

ECPoint random_point(Rng& rng, const EllipticCurve& e, std::size_t attempts) {
  if (e.field.is_rational())
    throw invalid_argument_error("random_point: needs a prime field");
  for (std::size_t it = 0; it < attempts; ++it) {
    Scalar x = rng.element(e.field);
    Scalar rhs = x * x * x + e.a * x + e.b;
    if (rhs.is_zero()) return ec_affine(x, rhs);
    auto y = sqrt_mod(rhs);
    if (!y) continue;
    bool flip = (rng.next() & 1) != 0;
    return ec_affine(x, flip ? -*y : *y);
  }
  throw error("random_point: attempts exhausted");
}

std::vector<Scalar> embed_quartic(const EllipticCurve& e, const ECPoint& p) {
  const Field& f = e.field;
  if (p.infinity)
    return {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
            Scalar::one(f)};
  if (!on_curve(e, p))
    throw invalid_argument_error("embed_quartic: point not on the curve");
  return normalize_projective({Scalar::one(f), p.x, p.y, p.x * p.x});
}

std::vector<MultiPoly> model_quadrics(const EllipticCurve& e) {
  const Field& f = e.field;
  MultiPoly q(f, Ambient::P3, deg(2));
  q.add_term(Monomial{0, 2, 0, 0}, Scalar::one(f));
  q.add_term(Monomial{1, 0, 0, 1}, -Scalar::one(f));
  MultiPoly s(f, Ambient::P3, deg(2));
  s.add_term(Monomial{0, 0, 2, 0}, Scalar::one(f));
  s.add_term(Monomial{0, 1, 0, 1}, -Scalar::one(f));
  s.add_term(Monomial{1, 1, 0, 0}, -e.a);
  s.add_term(Monomial{2, 0, 0, 0}, -e.b);
  return {q, s};
}

std::vector<MultiPoly> quadrics_through_embedded_curve(
    const EllipticCurve& e) {
  const Field& f = e.field;
  // At least 13 points: more than 2 * deg = 8, so a quadric vanishing on all
  // of them contains the irreducible quartic curve.
  std::vector<ECPoint> pts{ec_infinity()};
  for (std::uint64_t c = 0; c < f.characteristic() && pts.size() < 13; ++c) {
    Scalar x = Scalar::from_fp(f, c);
    Scalar rhs = x * x * x + e.a * x + e.b;
    std::optional<Scalar> y = sqrt_mod(rhs);
    if (!y) continue;
    pts.push_back(ec_affine(x, *y));
    if (!y->is_zero() && pts.size() < 13)
      pts.push_back(ec_affine(x, -*y));
  }
  if (pts.size() < 13)
    throw error("quadrics_through_embedded_curve: too few rational points");

  std::vector<Monomial> basis = monomial_basis(Ambient::P3, deg(2));
  Matrix ev(f, pts.size(), basis.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Scalar> z = embed_quartic(e, pts[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Scalar m = Scalar::one(f);
      for (int v = 0; v < 4; ++v)
        if (basis[j][v] != 0) m *= z[std::size_t(v)].pow(basis[j][v]);
      ev.at(i, j) = m;
    }
  }
  std::vector<std::vector<Scalar>> ker = kernel_basis(ev);
  if (ker.size() != 2)
    throw error("quadrics_through_embedded_curve: expected a 2-dimensional "
                "space of quadrics, found " + std::to_string(ker.size()));

  std::vector<MultiPoly> model = model_quadrics(e);
  std::vector<std::vector<Scalar>> model_vecs;
  for (const auto& mq : model) model_vecs.push_back(mq.coefficient_vector(basis));
  if (!spans_equal(f, ker, model_vecs))
    throw error("quadrics_through_embedded_curve: kernel does not match the "
                "model quadrics");

  std::vector<MultiPoly> out;
  for (const auto& v : ker)
    out.push_back(
        MultiPoly::from_coefficient_vector(f, Ambient::P3, deg(2), basis, v));
  return out;
}

bool embedded_coplanar(const EllipticCurve& e,
                       const std::vector<ECPoint>& pts) {
  if (pts.size() != 4)
    throw invalid_argument_error("embedded_coplanar: need exactly 4 points");
  Matrix m(e.field, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Scalar> z = embed_quartic(e, pts[i]);
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = z[j];
  }
  return determinant(m).is_zero();
}

}  // namespace spinver
