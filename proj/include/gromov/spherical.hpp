#pragma once

#include <optional>
#include <vector>

#include "gromov/model.hpp"

namespace gromov {

/// Number of generic points when A is represented by p disjoint spheres:
/// c1(A) - p. Throws DomainError("sphere-count") unless 1 <= p <= c1(A).
Int k_for(const HClass &a, Int p);

/// A disjoint union of embedded spheres realising A. Each part B carries
/// c1(B) - 1 of the k points.
struct SphereConfig {
  std::vector<HClass> parts; ///< sorted, repeats adjacent
  Int k = 0;
  Int p = 0;
};

/// All multisets of sphere_table keys with c1 >= 1 summing to A, with
/// distinct parts orthogonal and repeats only for exceptional or square-zero
/// classes. Sorted lexicographically by parts. Empty when c1(A) < 1.
std::vector<SphereConfig> enumerate_sphere_configs(const ManifoldModel &model,
                                                   const HClass &a);

/// Weight of one configuration. Classes repeated r times with point budget
/// b >= 1 each: the points are split into unordered blocks, so the count is
/// the multinomial of the budgets divided by r! per repeated class, times
/// N^r curve choices. Budget-zero classes (exceptional spheres, allowed to
/// coincide) contribute C(N + r - 1, r).
struct SphereCount {
  BigInt value = 0;
  /// Set when a class with table count N > 1 is repeated; the assignment
  /// factor used there is a convention, not a derived count.
  bool ambiguous = false;
};

SphereCount sphere_config_count(const ManifoldModel &model,
                                const SphereConfig &cfg);

struct GrS {
  BigInt value = 0;
  bool ambiguous = false;
  std::vector<SphereConfig> configs;
};

GrS gr_s_detail(const ManifoldModel &model, const HClass &a);
BigInt gr_s(const ManifoldModel &model, const HClass &a);

/// 1 when A has embedded genus 0, A.A >= -1 and a positive sphere_table
/// entry; empty otherwise.
std::optional<Int> embedded_sphere_rule(const ManifoldModel &model,
                                        const HClass &a);

} // namespace gromov
