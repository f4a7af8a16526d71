#include <sstream>

#include "spinver/errors.hpp"
#include "spinver/groebner.hpp"
#include "spinver/linsys.hpp"
#include "spinver/matrix.hpp"
#include "spinver/pipelines.hpp"
#include "spinver/reptheory.hpp"

namespace spinver {

namespace {

// Renders the summand profile for one exchange eigenvalue, e.g.
// "trivial:1,trivial:1,standard:2". Summand order is deterministic.
std::string isotype_profile(const Decomposition& dec, int eigenvalue) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : dec.summands) {
    if (s.eigenvalue != eigenvalue) continue;
    if (!first) os << ",";
    first = false;
    os << isotype_name(s.isotype) << ":" << s.dim();
  }
  return os.str();
}

std::string p1_to_string(const std::array<Scalar, 2>& pt) {
  return "(" + pt[0].to_string() + ":" + pt[1].to_string() + ")";
}

// Renders a split binary form's roots as "(u:v)^m" joined by "*".
std::string factors_to_string(const FactorResult& fr) {
  if (!fr.fully_split) return "not fully split";
  std::ostringstream os;
  bool first = true;
  for (const auto& lf : fr.factors) {
    if (!first) os << "*";
    first = false;
    os << p1_to_string(lf.point) << "^" << lf.multiplicity;
  }
  return os.str();
}

// The line {x = (u:v)} or {y = (u:v)} as a bidegree (1,0) or (0,1) form.
MultiPoly ruling_line(const Field& f, int factor,
                      const std::array<Scalar, 2>& pt) {
  Multidegree d = factor == 0 ? bideg(1, 0) : bideg(0, 1);
  std::size_t base = factor == 0 ? 0 : 2;
  MultiPoly line(f, Ambient::P1xP1, d);
  Monomial m0{0, 0, 0, 0};
  ++m0[base];
  Monomial m1{0, 0, 0, 0};
  ++m1[base + 1];
  line.add_term(m0, pt[1]);
  line.add_term(m1, -pt[0]);
  return line;
}

bool is_certified_smooth(const SolutionSet& ss) {
  return ss.points.empty() && ss.all_points_rational;
}

}  // namespace

void genus4_odd_invariant_checks(const Field& f, CheckReport& rep) {
  std::vector<GroupElement> group = build_group(f);
  std::vector<MultiPoly> system = tritangent_system(f);
  auto mono33 = monomial_basis(Ambient::P1xP1, bideg(3, 3));
  auto mono22 = monomial_basis(Ambient::P1xP1, bideg(2, 2));

  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : system) rows.push_back(g.coefficient_vector(mono33));
  add_check(rep, "tangency_system_dim",
            "bidegree (3,3) forms with double contact along the diagonal at "
            "the three marked points have dimension 10",
            std::size_t{10}, span_rank(f, rows));

  MultiPoly l = diagonal_form(f);
  MultiPoly c = six_lines_form(f);

  std::vector<std::vector<Scalar>> lr22;
  for (const auto& m : mono22) {
    MultiPoly lm = l * MultiPoly::from_term(f, Ambient::P1xP1, m,
                                            Scalar::one(f));
    lr22.push_back(lm.coefficient_vector(mono33));
  }
  add_check(rep, "six_lines_outside_diagonal_part",
            "the six-line form is not a diagonal multiple", true,
            !span_contains(f, lr22, c.coefficient_vector(mono33)));
  auto with_c = lr22;
  with_c.push_back(c.coefficient_vector(mono33));
  add_check(rep, "six_lines_completes_system",
            "the six-line form together with the diagonal multiples spans "
            "the full 10-dimensional system",
            std::size_t{10}, span_rank(f, with_c));

  bool stable = true;
  bool pm1 = true;
  Scalar one = Scalar::one(f);
  for (const auto& g : group) {
    auto s = proportionality_factor(apply_element(g, l), l);
    if (!s) {
      stable = false;
    } else if (!(*s == one || *s == -one)) {
      pm1 = false;
    }
  }
  add_check(rep, "diagonal_divisor_stable",
            "every symmetry pulls the diagonal form back to a scalar "
            "multiple of itself",
            true, stable);
  add_check(rep, "diagonal_scalars_pm1",
            "those scalars are all 1 or -1 (a sign character)", true, pm1);

  Decomposition dec = decompose(group, system);
  std::size_t dplus = 0, dminus = 0;
  for (const auto& s : dec.summands)
    (s.eigenvalue > 0 ? dplus : dminus) += s.dim();
  add_check(rep, "exchange_eigenspace_dims",
            "the factor-exchange eigenspaces have dimensions 4 and 6",
            std::string("4,6"),
            std::to_string(dplus) + "," + std::to_string(dminus));
  add_check(rep, "isotypic_plus",
            "the +1 eigenspace splits as two trivial lines and one "
            "2-dimensional standard summand",
            std::string("trivial:1,trivial:1,standard:2"),
            isotype_profile(dec, +1));
  add_check(rep, "isotypic_minus",
            "the -1 eigenspace splits as two sign lines and two "
            "2-dimensional standard summands",
            std::string("sign:1,sign:1,standard:2,standard:2"),
            isotype_profile(dec, -1));

  bool any_standard = false;
  bool all_faithful = true;
  for (const auto& s : dec.summands) {
    if (s.isotype != Isotype::Standard) continue;
    any_standard = true;
    if (!summand_faithful(group, s)) all_faithful = false;
  }
  add_check(rep, "standard_summands_faithful",
            "the marked-point permutations act faithfully on every standard "
            "summand",
            true, any_standard && all_faithful);

  MultiPoly h1 = pair_conic(f, 1);
  MultiPoly h2 = pair_conic(f, 2);
  MultiPoly h3 = pair_conic(f, 3);
  Sym2Kernel sk = sym2_kernel({l, h1, h2, h3});
  add_check(rep, "pair_product_kernel_dim",
            "the products of the diagonal and pair conics satisfy exactly "
            "one linear relation",
            std::size_t{1}, sk.kernel.size());

  std::vector<Scalar> expected(sk.pair_basis.size(), Scalar::zero(f));
  for (std::size_t k = 0; k < sk.pair_basis.size(); ++k) {
    auto [i, j] = sk.pair_basis[k];
    if (i == 0 && j == 0) expected[k] = -one;           // -l^2
    if (i == 1 && j == 2) expected[k] = -one;           // -h1 h2
    if (i == 1 && j == 3) expected[k] = one;            // +h1 h3
    if (i == 2 && j == 3) expected[k] = one;            // +h2 h3
  }
  bool span_match = sk.kernel.size() == 1 &&
                    spans_equal(f, sk.kernel, {expected});
  add_check(rep, "pair_product_kernel_span",
            "that relation is h3^2 - l^2 - (h1 - h3)(h2 - h3)", true,
            span_match);
  MultiPoly expansion = h3 * h3 - l * l - (h1 - h3) * (h2 - h3);
  add_check(rep, "pair_product_relation_expands",
            "expanding the relation in coordinates gives the zero form", true,
            expansion.is_zero());

  // The distinguished member decomposes into three lines of each ruling,
  // located at the marked parameters; rebuilding the product recovers it.
  std::array<Scalar, 2> generic{Scalar::from_int(f, 2), one};
  std::string want =
      "(1:0)^1*(1:1)^1*(0:1)^1";
  MultiPoly rebuilt(f, Ambient::P1xP1, bideg(0, 0));
  rebuilt.add_term(Monomial{0, 0, 0, 0}, one);
  bool rebuilt_ok = true;
  for (int factor = 0; factor < 2; ++factor) {
    // Fixing the other factor at a generic parameter leaves the binary
    // cubic whose roots locate this factor's lines.
    auto bin = restrict_to_ruling(c, 1 - factor, generic);
    FactorResult fr = linear_factors(f, bin);
    std::string label = factor == 0 ? "six_lines_first_ruling"
                                    : "six_lines_second_ruling";
    add_check(rep, label,
              "the distinguished member meets this ruling in simple lines "
              "at the three marked parameters",
              want, factors_to_string(fr));
    if (!fr.fully_split) rebuilt_ok = false;
    for (const auto& lf : fr.factors)
      for (std::size_t k = 0; k < lf.multiplicity; ++k)
        rebuilt = rebuilt * ruling_line(f, factor, lf.point);
  }
  rebuilt_ok = rebuilt_ok && proportionality_factor(rebuilt, c).has_value();
  add_check(rep, "six_lines_product",
            "the product of the six recovered lines is proportional to the "
            "distinguished member",
            true, rebuilt_ok);
}

CheckReport run_genus4_odd_invariants(const Field& f) {
  CheckReport rep;
  rep.pipeline = "genus4-odd-invariants";
  rep.field = field_label(f);
  rep.seed = 0;
  genus4_odd_invariant_checks(f, rep);
  return rep;
}

CheckReport run_genus4_odd_sample(const Field& f, std::uint64_t seed,
                                  std::size_t cap, bool include_invariants) {
  CheckReport rep;
  rep.pipeline = "genus4-odd-sample";
  rep.field = field_label(f);
  rep.seed = seed;
  Resampler rs(cap);
  try {
    if (include_invariants) genus4_odd_invariant_checks(f, rep);

    Rng rng(seed);
    std::vector<MultiPoly> system = tritangent_system(f);
    bool smooth_flag = false;
    MultiPoly member = rs.run(
        "smooth-tangency-member", [&]() -> std::optional<MultiPoly> {
          MultiPoly g(f, Ambient::P1xP1, bideg(3, 3));
          for (const auto& b : system) g = g + b.scaled(rng.element(f));
          if (g.is_zero()) return std::nullopt;
          if (!is_certified_smooth(singular_points(g))) return std::nullopt;
          smooth_flag = true;
          return g;
        });
    add_check(rep, "member_smooth",
              "the sampled member of the tangency system is smooth, "
              "certified over the algebraic closure",
              true, smooth_flag);

    MultiPoly l = diagonal_form(f);
    auto mpts = marked_points(f);
    RestrictionDivisor rd = restriction_divisor(member, {l}, mpts, 6);
    bool tritangent = rd.points.size() == 3 && rd.accounts_for_expected;
    for (const auto& dp : rd.points)
      if (dp.order != 2 || !dp.exact) tritangent = false;
    add_check(rep, "diagonal_tangency_orders",
              "the member meets the diagonal with order exactly 2 at each "
              "marked point, total 6",
              true, tritangent);

    bool distinct = true;
    bool separated = true;
    for (std::size_t i = 0; i < mpts.size(); ++i) {
      for (std::size_t j = i + 1; j < mpts.size(); ++j) {
        if (mpts[i] == mpts[j]) distinct = false;
        // Normalized factor coordinates; a shared ruling would repeat them.
        if (mpts[i][0] == mpts[j][0] && mpts[i][1] == mpts[j][1])
          separated = false;
        if (mpts[i][2] == mpts[j][2] && mpts[i][3] == mpts[j][3])
          separated = false;
      }
    }
    add_check(rep, "marked_points_distinct",
              "the three marked tangency points are pairwise distinct", true,
              distinct);
    add_check(rep, "marked_points_separated",
              "no two marked points share a ruling of either factor", true,
              separated);

    add_check(rep, "diagonal_smooth",
              "the diagonal itself is a smooth curve", true,
              is_certified_smooth(singular_points(l)));
  } catch (const search_exhausted_error&) {
    rep.exhausted = true;
  }
  rep.resamples = rs.total();
  return rep;
}

}  // namespace spinver
