#include "gromov/model.hpp"

#include <algorithm>

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"

namespace gromov {

namespace {

void require_in_lattice(const LatticePtr &lattice, const HClass &a,
                        const char *what) {
  if (!(a.lattice() == lattice || a.lattice()->same_structure(*lattice)))
    throw DomainError("lattice-mismatch",
                      std::string(what) + " " + format_class(a) +
                          " belongs to a different lattice");
}

template <typename T>
void check_keys(const LatticePtr &lattice, const ClassMap<T> &table,
                const char *table_name) {
  for (const auto &[key, value] : table) {
    require_in_lattice(lattice, key, table_name);
    if (omega_area(key) <= 0)
      throw DomainError("model-invariant",
                        std::string(table_name) + " key " + format_class(key) +
                            " has non-positive area " +
                            to_string(omega_area(key)));
  }
}

} // namespace

ManifoldModel::ManifoldModel(LatticePtr lattice, std::vector<HClass> exceptional,
                             bool minimal, ClassMap<Int> gr0_table,
                             ClassMap<std::vector<TorusEntry>> torus_table,
                             ClassMap<Int> sphere_table)
    : lattice_(std::move(lattice)), exceptional_(std::move(exceptional)),
      minimal_(minimal), gr0_table_(std::move(gr0_table)),
      torus_table_(std::move(torus_table)),
      sphere_table_(std::move(sphere_table)) {
  if (!lattice_)
    throw DomainError("model-invariant", "model without a lattice");
  for (const auto &e : exceptional_) {
    require_in_lattice(lattice_, e, "exceptional class");
    if (pair(e, e) != -1 || c1(e) != 1)
      throw DomainError("model-invariant",
                        "exceptional class " + format_class(e) +
                            " must have square -1 and c1 = 1 (has square " +
                            std::to_string(pair(e, e)) + ", c1 " +
                            std::to_string(c1(e)) + ")");
  }
  std::sort(exceptional_.begin(), exceptional_.end());
  exceptional_.erase(std::unique(exceptional_.begin(), exceptional_.end()),
                     exceptional_.end());
  if (minimal_ && !exceptional_.empty())
    throw DomainError("model-invariant",
                      "a minimal model cannot store exceptional classes");

  check_keys(lattice_, gr0_table_, "gr0_table");
  check_keys(lattice_, torus_table_, "torus_table");
  check_keys(lattice_, sphere_table_, "sphere_table");

  for (const auto &[key, tori] : torus_table_) {
    if (key.content() != 1)
      throw DomainError("model-invariant", "torus_table key " +
                                               format_class(key) +
                                               " is not primitive");
    if (pair(key, key) != 0 || c1(key) != 0)
      throw DomainError("model-invariant",
                        "torus_table key " + format_class(key) +
                            " must have square 0 and c1 = 0");
    for (const auto &t : tori)
      if (t.cover < 1)
        throw DomainError("model-invariant", "torus cover must be >= 1 for " +
                                                 format_class(key));
  }
  for (const auto &[key, count] : sphere_table_)
    if (count < 0)
      throw DomainError("model-invariant", "sphere_table count for " +
                                               format_class(key) +
                                               " is negative");
}

bool ManifoldModel::is_exceptional(const HClass &a) const {
  return std::binary_search(exceptional_.begin(), exceptional_.end(), a) &&
         same_lattice(a, HClass::zero(lattice_));
}

ManifoldModel
ManifoldModel::with_exceptional(const std::vector<HClass> &extra) const {
  std::vector<HClass> all = exceptional_;
  all.insert(all.end(), extra.begin(), extra.end());
  return ManifoldModel(lattice_, std::move(all), minimal_, gr0_table_,
                       torus_table_, sphere_table_);
}

HClass ManifoldModel::parse(std::string_view expr) const {
  return parse_class(lattice_, expr);
}

std::vector<HClass> exceptional_candidates(const LatticePtr &lattice,
                                           Int bound) {
  std::vector<HClass> out;
  const std::size_t n = lattice->rank();
  std::vector<Int> c(n, -bound);
  while (true) {
    HClass a(lattice, c);
    if (pair(a, a) == -1 && c1(a) == 1 && omega_area(a) > 0)
      out.push_back(a);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (c[i] < bound) {
        ++c[i];
        break;
      }
      c[i] = -bound;
      if (i == 0)
        return out;
    }
  }
}

} // namespace gromov
