#include "gromov/fibersum.hpp"

#include "gromov/error.hpp"

namespace gromov {

std::vector<Piece> base_pieces() {
  return {
      {"D2xT2", 1, 1, false, {"Gr(D2 x T2, [F]) = 1"}},
      {"V1", 0, 1, false, {"Gr(V(1), [F]) = 1"}},
      {"V1-NF", 1, 0, true, {"Gr(V(1) - Int N(F), B) = 0"}},
      {"N-P", 2, -1, false, {"Gr(N - Int P, [F]) = -1"}},
  };
}

Piece base_piece(const std::string &name) {
  for (auto &p : base_pieces())
    if (p.name == name)
      return p;
  throw DomainError("unknown-piece", "no base piece named '" + name + "'");
}

Piece glue(const Piece &a, const Piece &b) {
  for (const Piece *p : {&a, &b})
    if (p->boundary_count < 1)
      throw DomainError("glue", "piece '" + p->name +
                                    "' has no boundary component to glue");
  Piece out;
  out.name = "(" + a.name + " + " + b.name + ")";
  out.boundary_count = a.boundary_count + b.boundary_count - 2;
  out.fiber_gr = checked::add(a.fiber_gr, b.fiber_gr);
  out.other_classes_vanish = a.other_classes_vanish && b.other_classes_vanish;
  out.notes = a.notes;
  out.notes.insert(out.notes.end(), b.notes.begin(), b.notes.end());
  out.notes.push_back("glue " + a.name + " + " + b.name + ": " +
                      std::to_string(a.fiber_gr) + " + " +
                      std::to_string(b.fiber_gr) + " = " +
                      std::to_string(out.fiber_gr));
  return out;
}

EllipticFiber gr_elliptic_fiber(Int n) {
  if (n < 1)
    throw DomainError("elliptic-n", "V(n) needs n >= 1, got " +
                                        std::to_string(n));
  EllipticFiber r;
  Piece open = base_piece("V1-NF");
  r.trace.push_back({"start V(1) - N(F)", open.notes.front(), open.fiber_gr});
  const Piece collar = base_piece("N-P");
  for (Int i = 2; i <= n; ++i) {
    open = glue(open, collar);
    open.name = "V(" + std::to_string(i) + ") - N(F)";
    r.trace.push_back({"glue N - P -> " + open.name, collar.notes.front(),
                       open.fiber_gr});
  }
  const Piece cap = base_piece("D2xT2");
  r.piece = glue(open, cap);
  r.piece.name = "V(" + std::to_string(n) + ")";
  r.value = r.piece.fiber_gr;
  r.trace.push_back({"cap with D2 x T2 -> " + r.piece.name, cap.notes.front(),
                     r.value});
  return r;
}

ClassMap<Int> elliptic_gr_table(const ManifoldModel &model, Int n) {
  const HClass zero = HClass::zero(model.lattice());
  return {{zero, 1}, {model.parse("F"), gr_elliptic_fiber(n).value}};
}

} // namespace gromov
