#include "gromov/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"
#include "gromov/invariants.hpp"

namespace gromov {

Configuration::Configuration(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw DomainError("empty-configuration", "configuration has no components");
  for (const auto &c : components_) {
    if (c.mult < 1)
      throw DomainError("component", "multiplicity must be >= 1 for " +
                                         format_class(c.cls));
    if (c.genus < 0)
      throw DomainError("component",
                        "genus must be >= 0 for " + format_class(c.cls));
    require_same_lattice(c.cls, components_.front().cls);
  }
}

HClass Configuration::total() const {
  HClass t = HClass::zero(components_.front().cls.lattice());
  for (const auto &c : components_)
    t += c.mult * c.cls;
  return t;
}

HClass Decomposition::sum() const {
  if (parts.empty())
    throw DomainError("empty-decomposition", "decomposition has no parts");
  HClass s = HClass::zero(parts.front().lattice());
  for (const auto &p : parts)
    s += p;
  return s;
}

bool operator<(const Decomposition &a, const Decomposition &b) {
  return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                      b.parts.begin(), b.parts.end());
}

bool is_valid_decomposition(const HClass &a, const Decomposition &d) {
  if (d.parts.empty() || !(d.sum() == a))
    return false;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (pair(d.parts[i], d.parts[i]) < 0)
      return false;
    for (std::size_t j = i + 1; j < d.parts.size(); ++j)
      if (pair(d.parts[i], d.parts[j]) != 0 ||
          proportional(d.parts[i], d.parts[j]))
        return false;
  }
  return true;
}

bool Report::passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const Clause &c) { return c.pass; });
}

const Clause &Report::clause(const std::string &id) const {
  for (const auto &c : clauses)
    if (c.id == id)
      return c;
  throw std::out_of_range("no clause '" + id + "' in report");
}

namespace {

Clause disjoint_clause(const std::vector<Component> &comps) {
  Clause c{"a-disjoint", true, {}, {}};
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      const Int p = pair(comps[i].cls, comps[j].cls);
      if (p != 0 && c.pass) {
        c.pass = false;
        c.witnesses = {comps[i].cls, comps[j].cls};
        c.detail = format_class(comps[i].cls) + " . " +
                   format_class(comps[j].cls) + " = " + std::to_string(p);
      }
    }
  return c;
}

bool multiple_allowed(const Component &c) {
  return c.genus == 1 && pair(c.cls, c.cls) == 0;
}

Clause negative_clause(const std::vector<Component> &comps) {
  Clause c{"c-negative", true, {}, {}};
  for (const auto &comp : comps) {
    if (pair(comp.cls, comp.cls) >= 0)
      continue;
    if (classify_negative(comp.cls).kind != NegClassKind::ExceptionalSphere) {
      c.pass = false;
      c.witnesses.push_back(comp.cls);
    }
  }
  if (!c.pass)
    c.detail = "negative square class not represented by an exceptional sphere";
  return c;
}

Clause points_clause(Int points, Int expected, const char *name) {
  Clause c{"points", points == expected, {}, {}};
  if (!c.pass)
    c.detail = "points = " + std::to_string(points) + " but " + name + " = " +
               std::to_string(expected);
  return c;
}

} // namespace

Report verify_good_configuration(const ManifoldModel &model,
                                 const Configuration &cfg, Int points) {
  const auto &comps = cfg.components();
  const HClass total = cfg.total();
  require_same_lattice(total, HClass::zero(model.lattice()));
  const Int k_total = k(total);

  Report r;
  r.clauses.push_back(points_clause(points, k_total, "k(total)"));
  r.clauses.push_back(disjoint_clause(comps));

  Clause mult{"b-multiplicity", true, {}, {}};
  for (const auto &comp : comps)
    if (comp.mult != 1 && !multiple_allowed(comp)) {
      mult.pass = false;
      mult.witnesses.push_back(comp.cls);
    }
  if (!mult.pass)
    mult.detail = "multiply covered component that is not a square-zero torus";
  r.clauses.push_back(mult);

  r.clauses.push_back(negative_clause(comps));

  Clause count{"d-point-count", true, {}, {}};
  Int ell_sum = 0;
  for (const auto &comp : comps) {
    const Int ell = ell_g(comp.cls, comp.genus);
    ell_sum = checked::add(ell_sum, ell);
    if (k(comp.mult * comp.cls) < ell) {
      count.pass = false;
      count.witnesses.push_back(comp.cls);
    }
  }
  if (ell_sum != k_total) {
    count.pass = false;
    count.detail = "sum of ell_g = " + std::to_string(ell_sum) +
                   ", k(total) = " + std::to_string(k_total);
  } else if (!count.pass) {
    count.detail = "k(m B) < ell_g(B)";
  }
  r.clauses.push_back(count);
  return r;
}

Report verify_kprime_configuration(const ManifoldModel &model,
                                   const Configuration &cfg,
                                   std::optional<Int> points) {
  const auto &comps = cfg.components();
  const HClass total = cfg.total();
  require_same_lattice(total, HClass::zero(model.lattice()));
  const Int kp = k_prime(model, total);

  Report r;
  if (points)
    r.clauses.push_back(points_clause(*points, kp, "k'(total)"));
  r.clauses.push_back(disjoint_clause(comps));

  Clause mult{"b-multiplicity", true, {}, {}};
  Clause exc{"e-exceptional", true, {}, {}};
  HClass rest = total;
  Int ell_sum = 0;
  for (const auto &comp : comps) {
    if (model.is_exceptional(comp.cls)) {
      rest -= comp.mult * comp.cls;
      if (comp.mult != m_e(model, total, comp.cls)) {
        exc.pass = false;
        exc.witnesses.push_back(comp.cls);
      }
      continue;
    }
    ell_sum = checked::add(ell_sum, ell_g(comp.cls, comp.genus));
    if (comp.mult != 1 && !multiple_allowed(comp)) {
      mult.pass = false;
      mult.witnesses.push_back(comp.cls);
    }
  }
  if (!exc.pass)
    exc.detail = "multiplicity on an exceptional class differs from m_E(total)";
  if (!mult.pass)
    mult.detail = "multiply covered component that is not a square-zero torus";
  r.clauses.push_back(mult);
  r.clauses.push_back(negative_clause(comps));
  r.clauses.push_back(exc);

  Clause count{"d-point-count", true, {rest}, {}};
  const Int k_rest = k(rest);
  if (k_rest != kp || ell_sum != k_rest) {
    count.pass = false;
    count.detail = "k'(total) = " + std::to_string(kp) +
                   ", k(B) = " + std::to_string(k_rest) +
                   ", sum of ell_g = " + std::to_string(ell_sum);
  }
  r.clauses.push_back(count);
  return r;
}

std::vector<Decomposition>
enumerate_decompositions(const ManifoldModel &model, const HClass &a,
                         const std::vector<HClass> &candidates) {
  require_same_lattice(a, HClass::zero(model.lattice()));
  const bool kmin_filter = model.minimal() && b2_plus(*model.lattice()) > 1;

  std::vector<HClass> usable;
  for (const auto &c : candidates) {
    require_same_lattice(a, c);
    if (omega_area(c) <= 0)
      throw DomainError("candidate-area",
                        "candidate " + format_class(c) +
                            " has non-positive area " +
                            to_string(omega_area(c)));
    if (kmin_filter && k(c) != 0)
      continue;
    if (pair(c, c) < 0)
      continue;
    usable.push_back(c);
  }
  std::sort(usable.begin(), usable.end());
  usable.erase(std::unique(usable.begin(), usable.end()), usable.end());

  const Rational area = omega_area(a);
  if (a.is_zero() || area <= 0)
    return {};

  std::vector<Int> bound(usable.size());
  for (std::size_t i = 0; i < usable.size(); ++i) {
    if (pair(usable[i], usable[i]) > 0) {
      bound[i] = 1;
    } else {
      const Rational q = area / omega_area(usable[i]);
      bound[i] = static_cast<Int>(numerator(q) / denominator(q));
    }
  }

  std::vector<Decomposition> out;
  std::vector<Int> coef(usable.size(), 0);
  std::function<void(std::size_t, const HClass &, const Rational &)> walk =
      [&](std::size_t i, const HClass &remaining, const Rational &left) {
        if (i == usable.size()) {
          if (!remaining.is_zero())
            return;
          ClassMap<HClass> rays; // primitive -> merged part
          Decomposition d;
          for (std::size_t j = 0; j < usable.size(); ++j) {
            if (coef[j] == 0)
              continue;
            const HClass part = coef[j] * usable[j];
            if (pair(usable[j], usable[j]) > 0) {
              d.parts.push_back(part);
              continue;
            }
            const HClass key = usable[j].primitive();
            auto it = rays.find(key);
            if (it == rays.end())
              rays.emplace(key, part);
            else
              it->second += part;
          }
          for (auto &[key, part] : rays)
            d.parts.push_back(part);
          std::sort(d.parts.begin(), d.parts.end());
          if (is_valid_decomposition(a, d))
            out.push_back(std::move(d));
          return;
        }
        const Rational step = omega_area(usable[i]);
        HClass rem = remaining;
        Rational l = left;
        for (Int n = 0; n <= bound[i] && l >= 0; ++n) {
          coef[i] = n;
          walk(i + 1, rem, l);
          rem -= usable[i];
          l -= step;
        }
        coef[i] = 0;
      };
  walk(0, a, area);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt gr0(const ManifoldModel &model, const HClass &part) {
  const Int square = pair(part, part);
  if (square > 0) {
    auto it = model.gr0_table().find(part);
    if (it != model.gr0_table().end())
      return it->second;
  } else if (square == 0 && !part.is_zero()) {
    auto it = model.torus_table().find(part.primitive());
    if (it != model.torus_table().end())
      return gr_torus_class(it->second, part.content());
  }
  throw DomainError("unknown-gr0", "unknown Gr0(" + format_class(part) +
                                       ") in model '" + model.name() + "'");
}

BigInt gromov_via_decompositions(const ManifoldModel &model, const HClass &a) {
  std::vector<HClass> candidates{a};
  for (const auto &[key, value] : model.gr0_table())
    candidates.push_back(key);
  for (const auto &[key, tori] : model.torus_table())
    candidates.push_back(key);
  return gromov_via_decompositions(model, a, candidates);
}

BigInt gromov_via_decompositions(const ManifoldModel &model, const HClass &a,
                                 const std::vector<HClass> &candidates) {
  if (a.is_zero())
    return 1;
  BigInt total = 0;
  for (const auto &d : enumerate_decompositions(model, a, candidates)) {
    BigInt product = 1;
    for (const auto &part : d.parts)
      product *= gr0(model, part);
    total += product;
  }
  return total;
}

Report check_kmin_constraints(const ManifoldModel &model,
                              const ClassMap<Int> &table) {
  const int bplus = b2_plus(*model.lattice());
  if (!model.minimal() || bplus <= 1)
    throw DomainError("kmin-precondition",
                      "model '" + model.name() +
                          "' must be minimal with b2+ > 1 (b2+ = " +
                          std::to_string(bplus) + ")");
  const HClass kc = model.canonical();
  const Int k_square = pair(kc, kc);

  Clause nonzero_k{"i", true, {}, {}};
  Clause canonical{"ii", true, {}, {}};
  Clause duality{"iii", true, {}, {}};
  Clause null{"iv", true, {}, {}};
  for (const auto &[a, gr] : table) {
    require_same_lattice(a, kc);
    if (gr != 0 && k(a) != 0) {
      nonzero_k.pass = false;
      nonzero_k.witnesses.push_back(a);
    }
    if (a == kc && gr != 1 && gr != -1) {
      canonical.pass = false;
      canonical.witnesses.push_back(a);
    }
    if (auto dual = table.find(kc - a); dual != table.end()) {
      const Int lhs = gr < 0 ? -gr : gr;
      const Int rhs = dual->second < 0 ? -dual->second : dual->second;
      if (lhs != rhs) {
        duality.pass = false;
        duality.witnesses.push_back(a);
      }
    }
    if (k_square == 0 && gr != 0 && pair(a, a) != 0) {
      null.pass = false;
      null.witnesses.push_back(a);
    }
  }
  if (!nonzero_k.pass)
    nonzero_k.detail = "nonzero invariant on a class with k != 0";
  if (!canonical.pass)
    canonical.detail = "|Gr(K)| != 1";
  if (!duality.pass)
    duality.detail = "|Gr(A)| != |Gr(K - A)|";
  if (!null.pass)
    null.detail = "K.K = 0 but a class with nonzero square has Gr != 0";
  return Report{{nonzero_k, canonical, duality, null}};
}

} // namespace gromov
