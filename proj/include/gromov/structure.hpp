#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gromov/model.hpp"

namespace gromov {

/// One curve component: an underlying simple class, the covering
/// multiplicity and the genus of the domain.
struct Component {
  HClass cls;
  Int mult = 1;
  Int genus = 0;
};

/// A curve as a list of components; the total class is always recomputed.
class Configuration {
public:
  /// Throws DomainError("empty-configuration") for an empty list and
  /// ("component") for mult < 1 or genus < 0.
  explicit Configuration(std::vector<Component> components);

  const std::vector<Component> &components() const noexcept {
    return components_;
  }
  HClass total() const;

private:
  std::vector<Component> components_;
};

/// A splitting A = B1 + ... + Bl into pairwise orthogonal, pairwise
/// non-proportional classes of non-negative square. Parts are sorted.
struct Decomposition {
  std::vector<HClass> parts;

  HClass sum() const;
  friend bool operator==(const Decomposition &, const Decomposition &) = default;
  friend bool operator<(const Decomposition &a, const Decomposition &b);
};

/// The four bullets of a decomposition, checked from scratch.
bool is_valid_decomposition(const HClass &a, const Decomposition &d);

struct Clause {
  std::string id;
  bool pass = true;
  std::vector<HClass> witnesses;
  std::string detail;
};

struct Report {
  std::vector<Clause> clauses;

  bool passed() const;
  /// The clause with this id; throws std::out_of_range if absent.
  const Clause &clause(const std::string &id) const;
};

/// Clauses:
///   points         points == k(total)
///   a-disjoint     components pairwise orthogonal
///   b-multiplicity mult == 1 unless genus 1 and square 0
///   c-negative     negative-square components are exceptional spheres
///   d-point-count  sum of ell_g over components == k(total), and
///                  k(mult * cls) >= ell_g(cls) for each component
Report verify_good_configuration(const ManifoldModel &model,
                                 const Configuration &cfg, Int points);

/// Checks the equalities behind the finiteness of the corrected moduli
/// space. Components whose class lies in the stored exceptional set are the
/// stripped spheres; the rest make up B.
///
///   points         points == k'(total), when given
///   a-disjoint     components pairwise orthogonal
///   b-multiplicity non-exceptional components have mult 1 unless genus 1
///                  and square 0
///   c-negative     negative-square components are exceptional spheres
///   e-exceptional  mult on each stored E equals m_E(total)
///   d-point-count  k'(total) == k(B) == sum of ell_g over the components
///                  of B
Report verify_kprime_configuration(const ManifoldModel &model,
                                   const Configuration &cfg,
                                   std::optional<Int> points = std::nullopt);

/// All decompositions of A into parts generated by the candidates.
///
/// Candidates of positive square are used at most once; candidates of square
/// zero on a common ray are merged into a single part (their sum);
/// candidates of negative square never appear. When the model is minimal
/// with b2+ > 1, candidates with k != 0 are dropped first. Coefficients are
/// bounded by omega(A) / omega(candidate). Output is sorted.
///
/// Throws DomainError("candidate-area") for a candidate with omega <= 0.
std::vector<Decomposition>
enumerate_decompositions(const ManifoldModel &model, const HClass &a,
                         const std::vector<HClass> &candidates);

/// Gr0 of a single part: gr0_table for positive square, the torus count of
/// the primitive class at the part's multiple for square zero.
/// Throws DomainError("unknown-gr0").
BigInt gr0(const ManifoldModel &model, const HClass &part);

/// Sum over decompositions of the product of Gr0 over the parts. The
/// default candidates are A itself and the keys of gr0_table and
/// torus_table, so a class missing from the tables is reported rather than
/// counted as zero. The zero class counts 1.
BigInt gromov_via_decompositions(const ManifoldModel &model, const HClass &a);
BigInt gromov_via_decompositions(const ManifoldModel &model, const HClass &a,
                                 const std::vector<HClass> &candidates);

/// Flags table entries that contradict the constraints on a minimal model
/// with b2+ > 1:
///   i    k(A) != 0 and Gr(A) != 0
///   ii   |Gr(K)| != 1 (when K is in the table)
///   iii  |Gr(A)| != |Gr(K - A)| when both are in the table
///   iv   K.K = 0, Gr(A) != 0 and A.A != 0
/// One clause per rule, with the offending classes as witnesses. Throws
/// DomainError("kmin-precondition") unless the model is minimal with
/// b2+ > 1.
Report check_kmin_constraints(const ManifoldModel &model,
                              const ClassMap<Int> &table);

} // namespace gromov
