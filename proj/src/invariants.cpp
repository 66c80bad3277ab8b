#include "gromov/invariants.hpp"

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"

namespace gromov {

namespace {

Int half_exact(Int twice, const HClass &a, const char *what) {
  if (twice % 2 != 0)
    throw DomainError("parity", std::string(what) + " of " + format_class(a) +
                                    " is not an integer; the canonical class "
                                    "of lattice '" +
                                    a.lattice()->name() +
                                    "' is not characteristic");
  return twice / 2;
}

Int ceil_half(Int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

} // namespace

Int k(const HClass &a) {
  return half_exact(checked::add(c1(a), pair(a, a)), a, "k");
}

Int m_e(const ManifoldModel &model, const HClass &a, const HClass &e) {
  if (!model.is_exceptional(e))
    throw DomainError("not-exceptional",
                      format_class(e) + " is not in the stored exceptional set "
                                        "of '" +
                          model.name() + "'");
  const Int p = pair(a, e);
  return p < 0 ? -p : 0;
}

Int k_prime(const ManifoldModel &model, const HClass &a) {
  Int twice = checked::add(c1(a), pair(a, a));
  for (const auto &e : model.exceptional()) {
    const Int m = m_e(model, a, e);
    twice = checked::add(twice, checked::sub(checked::mul(m, m), m));
  }
  return half_exact(twice, a, "k'");
}

Int ell_g(const HClass &a, Int genus) {
  return checked::add(c1(a), checked::sub(genus, 1));
}

Int genus_embedded(const HClass &a) {
  const Int twice = checked::sub(pair(a, a), c1(a)); // K.A + A.A
  return checked::add(1, half_exact(twice, a, "genus"));
}

Int moduli_dimension(const HClass &a, Int genus) {
  if (genus < 0)
    throw DomainError("genus", "genus must be non-negative");
  const Int group = genus == 0 ? 6 : genus == 1 ? 2 : 0;
  return checked::add(checked::mul(2, ell_g(a, genus)), group);
}

bool is_good_class(const ManifoldModel &model, const HClass &a) {
  for (const auto &e : model.exceptional())
    if (pair(e, a) < -1)
      return false;
  return true;
}

Reduction reduce_multicovers(const ManifoldModel &model, const HClass &a) {
  Reduction r{a, {}, true};
  for (const auto &e : model.exceptional()) {
    if (pair(e, a) < -1) {
      const Int m = m_e(model, a, e);
      r.strips.push_back({e, m});
      r.reduced -= m * e;
    }
  }
  for (std::size_t i = 0; i < r.strips.size(); ++i) {
    if (pair(r.strips[i].exceptional, r.reduced) != 0)
      r.consistent = false;
    for (std::size_t j = i + 1; j < r.strips.size(); ++j)
      if (pair(r.strips[i].exceptional, r.strips[j].exceptional) != 0)
        r.consistent = false;
  }
  if (k(r.reduced) != k_prime(model, a))
    r.consistent = false;
  return r;
}

NegClassVerdict classify_negative(const HClass &a) {
  const Int square = pair(a, a);
  if (square >= 0)
    throw DomainError("nonnegative-square",
                      format_class(a) + " has square " +
                          std::to_string(square) + " >= 0");
  const Int c = c1(a);
  const Int g_max = std::max<Int>(0, 1 + ceil_half(checked::sub(square, c)));
  for (Int g = 0; g <= g_max; ++g) {
    const bool enough_points = c + g - 1 >= 0;
    const bool adjunction = c + 2 * (g - 1) <= square;
    if (enough_points && adjunction)
      return {NegClassKind::ExceptionalSphere, NegClassWitness{g, c, square}};
  }
  return {NegClassKind::NotRepresentable, std::nullopt};
}

bool in_forward_cone(const HClass &a, bool strict) {
  const Int square = pair(a, a);
  const Rational area = omega_area(a);
  return strict ? (square > 0 && area > 0) : (square >= 0 && area >= 0);
}

LightConeReport light_cone_pair_check(const HClass &b1, const HClass &b2) {
  require_same_lattice(b1, b2);
  const int bplus = b2_plus(*b1.lattice());
  if (bplus != 1)
    throw DomainError("b2plus", "light cone check needs b2+ = 1, lattice '" +
                                    b1.lattice()->name() + "' has " +
                                    std::to_string(bplus));
  for (const HClass *b : {&b1, &b2})
    if (b->is_zero() || !in_forward_cone(*b, false))
      throw DomainError("not-in-cone",
                        format_class(*b) +
                            " is not a nonzero class in the closed forward cone");

  LightConeReport report;
  report.product = pair(b1, b2);
  report.proportional_nulls =
      proportional(b1, b2) && pair(b1, b1) == 0 && pair(b2, b2) == 0;
  if (report.product > 0) {
    report.passed = true;
  } else if (report.product == 0 && report.proportional_nulls) {
    report.passed = true;
    report.detail = "proportional square-zero classes";
  } else {
    report.passed = false;
    report.detail = "violation: " + format_class(b1) + " . " +
                    format_class(b2) + " = " + std::to_string(report.product);
  }
  return report;
}

} // namespace gromov
