#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gromov/model.hpp"

namespace gromov {

/// Built-in models.
///
///   cp2             rank 1, basis L, Q = (1), K = -3L.
///   cp2_blowup(n)   basis L, E1..En, Q = diag(1, -1, ..., -1),
///                   K = -3L + E1 + ... + En, stored exceptional set {Ei}.
///   s2xs2           basis A1, A2, hyperbolic form, K = -2A1 - 2A2.
///   s2xt2           basis S = [S^2 x pt], B = [pt x T^2], hyperbolic form,
///                   K = -2B, two (+,0) tori in class B.
///   elliptic(n)     the span of the fiber F and a section S inside V(n):
///                   F.F = 0, F.S = 1, S.S = -n, K = (n-2)F, b2+ = 2n - 1.
///
/// Areas: omega(L) = 3 and omega(Ei) = 1 for n <= 8; for n >= 9 the blow-up
/// areas shrink to 2/n so that the fiber class 3L - E1 - ... - E9 keeps
/// positive area. All other basis classes have area 1.
ManifoldModel preset_cp2();
ManifoldModel preset_cp2_blowup(int n);
ManifoldModel preset_s2xs2();
ManifoldModel preset_s2xt2();
ManifoldModel preset_elliptic(int n);

/// Looks up "cp2", "cp2_blowup(3)", "cp2_blowup:3", "elliptic(2)", ...
/// Throws DomainError("unknown-preset") / ("preset-param").
ManifoldModel preset(std::string_view spec);
ManifoldModel preset(std::string_view name, int n);

struct PresetInfo {
  std::string name;
  std::string params;
  std::string summary;
};
const std::vector<PresetInfo> &preset_registry();

} // namespace gromov
