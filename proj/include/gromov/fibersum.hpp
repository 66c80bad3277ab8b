#pragma once

#include <string>
#include <vector>

#include "gromov/model.hpp"

namespace gromov {

/// A manifold, possibly with T^3 boundary components, in the fiber-sum
/// ledger. Only the signed count of fiber-class tori is tracked.
struct Piece {
  std::string name;
  Int boundary_count = 0;
  Int fiber_gr = 0;
  /// Every invariant in a class other than multiples of the fiber vanishes.
  bool other_classes_vanish = false;
  std::vector<std::string> notes;

  bool closed() const { return boundary_count == 0; }
};

/// The four constants the ledger starts from:
///   D2xT2     neighbourhood of a fiber, 1 boundary, fiber count 1
///   V1        rational elliptic surface, closed, fiber count 1
///   V1-NF     V(1) minus a fiber neighbourhood, 1 boundary, fiber count 0
///   N-P       the collar piece between two boundary tori, fiber count -1
std::vector<Piece> base_pieces();
/// Throws DomainError("unknown-piece").
Piece base_piece(const std::string &name);

/// Glues one boundary component of a to one of b. Fiber counts add; the
/// glued torus itself has Euler characteristic 0 and contributes nothing.
/// Throws DomainError("glue") when either piece is closed.
Piece glue(const Piece &a, const Piece &b);

struct TraceStep {
  std::string step;
  std::string constant;
  Int running = 0;
};

struct EllipticFiber {
  Int value = 0;
  Piece piece;
  std::vector<TraceStep> trace;
};

/// Fiber-class invariant of V(n): V(1) - N(F), then n - 1 collars, then a
/// D2xT2 cap. Throws DomainError("elliptic-n") for n < 1.
EllipticFiber gr_elliptic_fiber(Int n);

/// Known invariants of the elliptic(n) model on the span of F and S:
/// {0: 1, F: 2 - n}. Classes are parsed in `model`.
ClassMap<Int> elliptic_gr_table(const ManifoldModel &model, Int n);

} // namespace gromov
