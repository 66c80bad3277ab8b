#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gromov {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rational as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational &r);
std::string to_string(const BigInt &n);

/// Accepts "p", "p/q" and "-p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

namespace checked {
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
} // namespace checked

/// Integer model of H_2(M; Z): Gram matrix of the intersection form, the
/// canonical class K and the symplectic area functional, all in one fixed
/// basis. Immutable after construction.
///
/// Construction enforces symmetry of the Gram matrix and that K is
/// characteristic (Q(e,e) = Q(K,e) mod 2 for every basis vector), so that
/// c1(A) + A.A is always even.
class IntersectionLattice {
public:
  IntersectionLattice(std::string name, std::vector<std::string> symbols,
                      std::vector<std::vector<Int>> gram,
                      std::vector<Int> canonical, std::vector<Rational> area,
                      std::optional<int> b2plus_override = std::nullopt);

  const std::string &name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return symbols_.size(); }
  const std::vector<std::string> &symbols() const noexcept { return symbols_; }
  Int gram(std::size_t i, std::size_t j) const { return gram_[i * rank() + j]; }
  const std::vector<Int> &canonical() const noexcept { return canonical_; }
  const std::vector<Rational> &area() const noexcept { return area_; }
  const std::optional<int> &b2plus_override() const noexcept {
    return b2plus_override_;
  }

  std::optional<std::size_t> symbol_index(std::string_view symbol) const;

  /// a^T Q b.
  Int form(std::span<const Int> a, std::span<const Int> b) const;

  /// Number of positive pivots of an exact congruence diagonalization of the
  /// Gram matrix, ignoring any override.
  int computed_b2_plus() const noexcept { return computed_b2plus_; }

  bool same_structure(const IntersectionLattice &other) const;

private:
  std::string name_;
  std::vector<std::string> symbols_;
  std::vector<Int> gram_;
  std::vector<Int> canonical_;
  std::vector<Rational> area_;
  std::optional<int> b2plus_override_;
  int computed_b2plus_ = 0;
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

/// Positive-index count of a symmetric integer matrix via symmetric Gaussian
/// elimination over Q.
int positive_index(const std::vector<std::vector<Int>> &gram);

/// A homology class: integer coordinates in the basis of one lattice.
class HClass {
public:
  HClass(LatticePtr lattice, std::vector<Int> coords);

  static HClass zero(const LatticePtr &lattice);
  static HClass basis(const LatticePtr &lattice, std::size_t index);

  const std::vector<Int> &coords() const noexcept { return coords_; }
  const LatticePtr &lattice() const noexcept { return lattice_; }
  std::size_t rank() const noexcept { return coords_.size(); }
  bool is_zero() const noexcept;

  /// gcd of the coordinates; 0 for the zero class.
  Int content() const;
  /// The class divided by its content (the zero class maps to itself).
  HClass primitive() const;

  HClass operator-() const;
  HClass &operator+=(const HClass &other);
  HClass &operator-=(const HClass &other);

  friend HClass operator+(HClass a, const HClass &b) { return a += b; }
  friend HClass operator-(HClass a, const HClass &b) { return a -= b; }
  friend HClass operator*(Int s, const HClass &a);

  /// Classes in different lattices never compare equal.
  friend bool operator==(const HClass &a, const HClass &b);
  /// Lexicographic on coordinates; used for stable ordering inside a lattice.
  friend bool operator<(const HClass &a, const HClass &b) {
    return a.coords_ < b.coords_;
  }

private:
  LatticePtr lattice_;
  std::vector<Int> coords_;
};

bool same_lattice(const HClass &a, const HClass &b);
/// Throws DomainError("lattice-mismatch") unless both live in one lattice.
void require_same_lattice(const HClass &a, const HClass &b);

/// The intersection pairing A.B.
Int pair(const HClass &a, const HClass &b);
/// c1(A) = -K.A.
Int c1(const HClass &a);
/// omega(A), exact.
Rational omega_area(const HClass &a);
/// The canonical class as an element of its lattice.
HClass canonical_class(const LatticePtr &lattice);
/// Override if present, else the computed positive index.
int b2_plus(const IntersectionLattice &lattice);

/// True when a and b span a subspace of dimension <= 1 over Q (zero counts
/// as proportional to everything).
bool proportional(const HClass &a, const HClass &b);

} // namespace gromov
