// The order-12 symmetry group of P1 x P1 stabilizing the three diagonal
// marked points (1:0)x(1:0), (0:1)x(0:1), (1:1)x(1:1), its exact linear
// action on spaces of bihomogeneous forms, and the decomposition of such
// spaces into irreducible summands.
//
// An element pairs a projectively normalized 2x2 matrix, applied to both
// factors at once, with an optional factor exchange. Pullback on forms
// substitutes the normalized inverse matrix; normalized lifts differ from
// true matrix products only by sign, so on spaces of even total bidegree
// (the only ones handled here) the induced matrices form an honest
// representation, not just a projective one.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinver/matrix.hpp"
#include "spinver/poly.hpp"

namespace spinver {

struct GroupElement {
  // Row-major 2x2 matrix with first nonzero entry scaled to 1.
  std::array<Scalar, 4> mat;
  // Whether the element exchanges the two P1 factors.
  bool swap = false;
  // Induced permutation of the three marked points (entry i = image of i).
  std::array<int, 3> perm{0, 1, 2};
};

bool same_element(const GroupElement& a, const GroupElement& b);
GroupElement identity_element(const Field& f);
// Composition acting on points as a after b.
GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& g);
int perm_sign(const std::array<int, 3>& perm);
bool is_identity(const GroupElement& g);

// The marked points as normalized 4-vectors (x0, x1, y0, y1).
std::vector<std::vector<Scalar>> marked_points(const Field& f);

// Image of a P1 x P1 point under the element's point map, normalized.
std::vector<Scalar> apply_to_point(const GroupElement& g,
                                   const std::vector<Scalar>& pt);

// Closure of the generators: the coordinate swap on both factors (exchanges
// marked points 1 and 2), the map fixing x0 and sending x1 to x0 - x1 on
// both factors (exchanges marked points 1 and 3), and the factor exchange.
// Returns all 12 elements sorted with the 6 swap-free ones first, each half
// ordered by marked-point permutation, and verifies closure, inverses, and
// that the permutation action is faithful on the swap-free half. A failed
// verification throws error (it would mean a wrong generator matrix).
std::vector<GroupElement> build_group(const Field& f);

// The factor exchange element of a built group.
const GroupElement& factor_exchange(const std::vector<GroupElement>& group);

// Pullback action on forms: (g . f)(P) = f(g^{-1} P).
MultiPoly apply_element(const GroupElement& g, const MultiPoly& f);

// The scalar c with a = c * b when a is a nonzero multiple of b.
std::optional<Scalar> proportionality_factor(const MultiPoly& a,
                                             const MultiPoly& b);

// ---- distinguished forms on P1 x P1 ----------------------------------------

// x0 y1 - x1 y0, the (1,1) form cutting the diagonal through the marked
// points. Every group element scales it by +-1.
MultiPoly diagonal_form(const Field& f);

// For i in {1, 2, 3}: the symmetric (1,1) form vanishing at the two marked
// points other than the i-th. Concretely s - 2 x0 y0, s - 2 x1 y1, and s
// itself for s = x0 y1 + x1 y0.
MultiPoly pair_conic(const Field& f, int i);

// The combination of the three pair conics fixed by every group element.
// The exact action permutes the conics with signs, which makes the fixed
// line in their span the alternating sum (conic 1) + (conic 2) - (conic 3).
MultiPoly pair_conic_invariant(const Field& f);

// Product of the six lines through the marked points, three in each ruling:
// x0 x1 (x0 - x1) y0 y1 (y0 - y1), of bidegree (3, 3).
MultiPoly six_lines_form(const Field& f);

// Basis of the 10-dimensional space of (3,3) forms spanned by the six-line
// product together with all multiples of the diagonal form by (2,2) forms.
// Members restrict to the diagonal with even order everywhere, which is the
// tritangency constraint at the marked points.
std::vector<MultiPoly> tritangent_system(const Field& f);

// ---- induced matrices and decomposition ------------------------------------

// Matrix of the element on an independent basis of a group-stable space;
// column j holds the coordinates of the image of basis vector j. Throws
// not_invariant_error when some image leaves the span.
Matrix induced_matrix(const GroupElement& g,
                      const std::vector<MultiPoly>& system);

enum class Isotype { Trivial, Sign, Standard };
std::string isotype_name(Isotype t);

struct Summand {
  int eigenvalue;   // +1 or -1 under the factor exchange
  Isotype isotype;  // type under the marked-point permutation action
  // Echelon-normalized basis in the coordinates of the ambient system.
  std::vector<std::vector<Scalar>> coords;
  std::vector<MultiPoly> forms;

  std::size_t dim() const { return coords.size(); }
};

struct Decomposition {
  std::vector<MultiPoly> system;
  std::vector<Summand> summands;
};

// Splits a group-stable space of even total bidegree into irreducible
// summands: factor-exchange eigenspaces first, then character projectors
// for the trivial, sign, and 2-dimensional types of the permutation part,
// then a deterministic refinement of each isotypic piece into irreducibles.
// Output order: eigenvalue +1 before -1; trivial, sign, standard; echelon
// basis order within a type. Characteristic 2 or 3 is rejected with
// bad_characteristic_error (the projector weights 1/6 need p > 3); a
// non-stable system raises not_invariant_error.
Decomposition decompose(const std::vector<GroupElement>& group,
                        const std::vector<MultiPoly>& system);

nlohmann::ordered_json decomposition_to_json(const Decomposition& d);

// True when no swap-free element with a nontrivial marked-point permutation
// acts as the identity matrix on the summand.
bool summand_faithful(const std::vector<GroupElement>& group,
                      const Summand& s);

}  // namespace spinver
