// Elliptic curves in short Weierstrass form over prime fields, their group
// law, small-torsion sampling, and the degree-4 embedding into P3 whose
// hyperplane sections realize divisor sums.
//
// A curve y^2 = x^3 + a x + b lives over F_p with p > 3 and nonzero
// discriminant. Torsion points of order 3 and 4 come from the classical
// division polynomials; square roots use Tonelli-Shanks. The quartic model
// sends (x, y) to (1 : x : y : x^2) and the origin to (0 : 0 : 0 : 1), and
// the space of quadrics through the image is recovered from a point
// evaluation matrix and checked against the two expected model quadrics.
#pragma once

#include <optional>
#include <vector>

#include "spinver/poly.hpp"
#include "spinver/rng.hpp"

namespace spinver {

struct EllipticCurve {
  Field field;
  Scalar a, b;
};

struct ECPoint {
  bool infinity = true;
  Scalar x, y;

  bool operator==(const ECPoint& o) const {
    if (infinity != o.infinity) return false;
    if (infinity) return true;
    return x == o.x && y == o.y;
  }
  bool operator!=(const ECPoint& o) const { return !(*this == o); }
};

// Validates p > 3 and 4a^3 + 27b^2 != 0.
EllipticCurve make_curve(const Field& f, const Scalar& a, const Scalar& b);

ECPoint ec_infinity();
ECPoint ec_affine(const Scalar& x, const Scalar& y);
bool on_curve(const EllipticCurve& e, const ECPoint& p);

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p);
ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_sub(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_mul(const EllipticCurve& e, long long n, const ECPoint& p);

// Smallest n in [1, cap] with n p = infinity; throws if none.
std::size_t ec_order(const EllipticCurve& e, const ECPoint& p,
                     std::size_t cap = 16);

// Group sum of a list of points.
ECPoint divisor_class_sum(const EllipticCurve& e,
                          const std::vector<ECPoint>& pts);

// Square root in a prime field (Tonelli-Shanks; direct power for p = 3
// mod 4), or nothing for a non-residue. The returned root is canonicalized
// to the smaller of the two representatives.
std::optional<Scalar> sqrt_mod(const Scalar& n);

// Ascending coefficients of the polynomial whose roots are x-coordinates of
// the nontrivial 3-torsion: 3x^4 + 6a x^2 + 12b x - a^2.
std::vector<Scalar> torsion3_poly(const EllipticCurve& e);

// Ascending coefficients of the degree-6 factor of the fourth division
// polynomial: its roots are x-coordinates of points of exact order 4.
std::vector<Scalar> torsion4_poly(const EllipticCurve& e);

struct TorsionSample {
  EllipticCurve curve;
  ECPoint tau;  // verified exact order
};

// Random curve carrying a rational point of exact order n (3 or 4).
TorsionSample sample_curve_with_torsion(Rng& rng, const Field& f, int n,
                                        std::size_t attempts = 1000);

// All rational points of exact order n on the curve, deterministic order.
std::vector<ECPoint> torsion_points(const EllipticCurve& e, int n);

// Uniform-ish random affine point: random x until the cubic is a square,
// then a random choice of the two roots. Throws after the attempt cap.
ECPoint random_point(Rng& rng, const EllipticCurve& e,
                     std::size_t attempts = 1000);

// ---- the quartic model in P3 ----------------------------------------------

// (x, y) -> (1 : x : y : x^2), infinity -> (0 : 0 : 0 : 1).
std::vector<Scalar> embed_quartic(const EllipticCurve& e, const ECPoint& p);

// The two quadrics z1^2 - z0 z3 and z2^2 - z1 z3 - a z0 z1 - b z0^2 that cut
// out the embedded curve.
std::vector<MultiPoly> model_quadrics(const EllipticCurve& e);

// Recovers the quadrics through the embedded curve as the kernel of an
// evaluation matrix on at least 13 curve points; checks the dimension is 2
// and the span matches model_quadrics.
std::vector<MultiPoly> quadrics_through_embedded_curve(const EllipticCurve& e);

// Whether four embedded points lie on a common plane (4x4 determinant).
bool embedded_coplanar(const EllipticCurve& e, const std::vector<ECPoint>& pts);

}  // namespace spinver
