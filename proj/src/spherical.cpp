#include "gromov/spherical.hpp"

#include <algorithm>
#include <functional>

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"
#include "gromov/invariants.hpp"

namespace gromov {

namespace {

BigInt factorial(Int n) {
  BigInt f = 1;
  for (Int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

BigInt binomial(BigInt n, Int r) {
  BigInt b = 1;
  for (Int i = 0; i < r; ++i)
    b = b * (n - i) / (i + 1);
  return b;
}

bool may_repeat(const ManifoldModel &model, const HClass &b) {
  const Int square = pair(b, b);
  if (square == 0 || model.is_exceptional(b))
    return true;
  return square < 0 &&
         classify_negative(b).kind == NegClassKind::ExceptionalSphere;
}

} // namespace

Int k_for(const HClass &a, Int p) {
  const Int c = c1(a);
  if (p < 1 || p > c)
    throw DomainError("sphere-count", "p = " + std::to_string(p) +
                                          " outside 1.." + std::to_string(c) +
                                          " for " + format_class(a));
  return c - p;
}

std::vector<SphereConfig> enumerate_sphere_configs(const ManifoldModel &model,
                                                   const HClass &a) {
  require_same_lattice(a, HClass::zero(model.lattice()));
  const Int c_total = c1(a);
  if (c_total < 1)
    return {};

  std::vector<HClass> keys;
  for (const auto &[b, count] : model.sphere_table())
    if (c1(b) >= 1)
      keys.push_back(b);

  // Parts are chosen in key order; c1 of every part is >= 1 so the depth is
  // bounded by c1(A).
  std::vector<SphereConfig> out;
  std::vector<HClass> chosen;
  std::function<void(std::size_t, const HClass &, Int)> walk =
      [&](std::size_t first, const HClass &remaining, Int c_left) {
        if (remaining.is_zero() && !chosen.empty()) {
          if (c_left >= 0) {
            SphereConfig cfg{chosen, 0, static_cast<Int>(chosen.size())};
            cfg.k = c_total - cfg.p;
            out.push_back(std::move(cfg));
          }
          return;
        }
        for (std::size_t i = first; i < keys.size(); ++i) {
          const HClass &b = keys[i];
          const Int cb = c1(b);
          if (cb > c_left)
            continue;
          if (!chosen.empty() && chosen.back() == b && !may_repeat(model, b))
            continue;
          bool orthogonal = true;
          for (const auto &prev : chosen)
            if (!(prev == b) && pair(prev, b) != 0) {
              orthogonal = false;
              break;
            }
          if (!orthogonal)
            continue;
          chosen.push_back(b);
          walk(i, remaining - b, c_left - cb);
          chosen.pop_back();
        }
      };
  walk(0, a, c_total);

  // Depth-first order over sorted keys already yields lexicographic order.
  for (const auto &cfg : out) {
    Int budget = 0;
    for (const auto &b : cfg.parts)
      budget += c1(b) - 1;
    if (budget != cfg.k)
      throw DomainError("internal", "point budget mismatch");
  }
  return out;
}

SphereCount sphere_config_count(const ManifoldModel &model,
                                const SphereConfig &cfg) {
  SphereCount result;
  BigInt numerator = factorial(cfg.k);
  BigInt denominator = 1;
  BigInt choices = 1;
  for (std::size_t i = 0; i < cfg.parts.size();) {
    const HClass &b = cfg.parts[i];
    std::size_t j = i;
    while (j < cfg.parts.size() && cfg.parts[j] == b)
      ++j;
    const Int r = static_cast<Int>(j - i);
    const Int budget = c1(b) - 1;
    auto it = model.sphere_table().find(b);
    if (it == model.sphere_table().end())
      throw DomainError("unknown-sphere-count",
                        "no sphere count for " + format_class(b));
    const Int n = it->second;
    for (Int t = 0; t < r; ++t)
      denominator *= factorial(budget);
    if (budget >= 1) {
      denominator *= factorial(r);
      BigInt pw = 1;
      for (Int t = 0; t < r; ++t)
        pw *= n;
      choices *= pw;
    } else {
      choices *= binomial(BigInt(n) + r - 1, r);
    }
    if (n > 1 && r >= 2)
      result.ambiguous = true;
    i = j;
  }
  result.value = numerator / denominator * choices;
  return result;
}

GrS gr_s_detail(const ManifoldModel &model, const HClass &a) {
  GrS g;
  g.configs = enumerate_sphere_configs(model, a);
  for (const auto &cfg : g.configs) {
    const SphereCount c = sphere_config_count(model, cfg);
    g.value += c.value;
    g.ambiguous = g.ambiguous || c.ambiguous;
  }
  return g;
}

BigInt gr_s(const ManifoldModel &model, const HClass &a) {
  return gr_s_detail(model, a).value;
}

std::optional<Int> embedded_sphere_rule(const ManifoldModel &model,
                                        const HClass &a) {
  require_same_lattice(a, HClass::zero(model.lattice()));
  if (a.is_zero() || genus_embedded(a) != 0 || pair(a, a) < -1)
    return std::nullopt;
  auto it = model.sphere_table().find(a);
  if (it == model.sphere_table().end() || it->second < 1)
    return std::nullopt;
  return 1;
}

} // namespace gromov
