#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gromov/model.hpp"

namespace gromov {

/// Number of generic point constraints, (c1(A) + A.A) / 2.
Int k(const HClass &a);

/// max(-A.E, 0). Throws DomainError("not-exceptional") unless E is in the
/// model's stored exceptional set.
Int m_e(const ManifoldModel &model, const HClass &a, const HClass &e);

/// k(A) + sum over stored E of (m_E(A)^2 - m_E(A)) / 2.
Int k_prime(const ManifoldModel &model, const HClass &a);

/// Maximum number of generic points on a genus g curve in class A:
/// c1(A) + g - 1.
Int ell_g(const HClass &a, Int genus);

/// Genus an embedded connected representative would have,
/// 1 + (K.A + A.A) / 2. May be negative.
Int genus_embedded(const HClass &a);

/// Real dimension of the moduli space of genus g curves in class A:
/// 2 (c1(A) + g - 1) + dim G_g, with dim G_0 = 6, dim G_1 = 2 and
/// dim G_g = 0 for g > 1.
Int moduli_dimension(const HClass &a, Int genus);

/// E.A >= -1 for every stored exceptional class E.
bool is_good_class(const ManifoldModel &model, const HClass &a);

struct Strip {
  HClass exceptional;
  Int multiplicity;
};

struct Reduction {
  HClass reduced;
  std::vector<Strip> strips;
  /// The stripped classes are pairwise orthogonal and orthogonal to the
  /// reduced class, and k(reduced) == k_prime(original).
  bool consistent = true;
};

/// Removes multiply covered exceptional spheres:
///   B = A - sum over {E : E.A < -1} of m_E(A) E.
/// Strips are listed in the model's exceptional order.
Reduction reduce_multicovers(const ManifoldModel &model, const HClass &a);

enum class NegClassKind { ExceptionalSphere, NotRepresentable };

struct NegClassWitness {
  Int genus;
  Int c1;
  Int square;

  friend bool operator==(const NegClassWitness &,
                         const NegClassWitness &) = default;
};

struct NegClassVerdict {
  NegClassKind kind;
  /// Present exactly for ExceptionalSphere, and then equal to (0, 1, -1).
  std::optional<NegClassWitness> witness;
};

/// For A.A < 0: whether a simple curve in class A can exist for generic J.
/// Scans g = 0 .. max(0, 1 + ceil((A.A - c1(A)) / 2)) for a solution of
///   c1(A) + g - 1 >= 0   and   c1(A) + 2(g - 1) <= A.A.
/// Throws DomainError("nonnegative-square") when A.A >= 0.
NegClassVerdict classify_negative(const HClass &a);

/// A.A >= 0 and omega(A) >= 0 (strict: both > 0).
bool in_forward_cone(const HClass &a, bool strict);

struct LightConeReport {
  Int product = 0;
  bool proportional_nulls = false;
  bool passed = false;
  std::string detail;
};

/// Checks B1.B2 >= 0 with equality only for proportional square-zero classes.
/// Requires b2+ = 1 (DomainError "b2plus") and both classes nonzero and in
/// the closed forward cone (DomainError "not-in-cone").
LightConeReport light_cone_pair_check(const HClass &b1, const HClass &b2);

} // namespace gromov
