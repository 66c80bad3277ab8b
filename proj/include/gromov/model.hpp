#pragma once

#include <map>
#include <string>
#include <vector>

#include "gromov/lattice.hpp"
#include "gromov/torus_series.hpp"

namespace gromov {

template <typename T> using ClassMap = std::map<HClass, T>;

/// A lattice together with the finite stored part of the exceptional set and
/// the count tables the computations consume.
///
/// The exceptional set of a blow-up is infinite in general; every operation
/// that quantifies over exceptional classes uses the stored set as its
/// universe. `with_exceptional` extends it.
///
/// Construction checks: each stored exceptional class has square -1 and
/// c1 = 1; a minimal model stores none; every table key has positive area;
/// torus table keys are primitive with square 0 and c1 = 0, and covers are
/// positive; sphere counts are non-negative.
class ManifoldModel {
public:
  ManifoldModel(LatticePtr lattice, std::vector<HClass> exceptional,
                bool minimal, ClassMap<Int> gr0_table = {},
                ClassMap<std::vector<TorusEntry>> torus_table = {},
                ClassMap<Int> sphere_table = {});

  const LatticePtr &lattice() const noexcept { return lattice_; }
  const std::string &name() const noexcept { return lattice_->name(); }
  const std::vector<HClass> &exceptional() const noexcept {
    return exceptional_;
  }
  bool minimal() const noexcept { return minimal_; }
  const ClassMap<Int> &gr0_table() const noexcept { return gr0_table_; }
  const ClassMap<std::vector<TorusEntry>> &torus_table() const noexcept {
    return torus_table_;
  }
  const ClassMap<Int> &sphere_table() const noexcept { return sphere_table_; }

  bool is_exceptional(const HClass &a) const;

  /// Copy with extra classes added to the stored exceptional set
  /// (duplicates ignored, invariants re-checked).
  ManifoldModel with_exceptional(const std::vector<HClass> &extra) const;

  HClass parse(std::string_view expr) const;
  HClass canonical() const { return canonical_class(lattice_); }

private:
  LatticePtr lattice_;
  std::vector<HClass> exceptional_;
  bool minimal_;
  ClassMap<Int> gr0_table_;
  ClassMap<std::vector<TorusEntry>> torus_table_;
  ClassMap<Int> sphere_table_;
};

/// Every class with square -1, c1 = 1 and positive area whose coordinates
/// lie in [-bound, bound]. These are the homological candidates for
/// exceptional classes; whether each is actually represented by an embedded
/// sphere is not decided here. Ordered lexicographically.
std::vector<HClass> exceptional_candidates(const LatticePtr &lattice, Int bound);

} // namespace gromov
