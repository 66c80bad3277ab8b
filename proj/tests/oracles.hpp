// Independent reference implementations used by the unit tests and the
// acceptance runner. They trade speed for obviousness and share no code
// paths with the library beyond HClass arithmetic and the pairing.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gromov/invariants.hpp"
#include "gromov/model.hpp"
#include "gromov/structure.hpp"

namespace oracle {

using gromov::HClass;
using gromov::Int;

/// Schoolbook division of power series num / den to `order` terms, den[0]
/// must be +-1.
inline std::vector<long long> divide(std::vector<long long> num,
                                     const std::vector<long long> &den,
                                     std::size_t order) {
  num.resize(order + 1, 0);
  std::vector<long long> q(order + 1, 0);
  for (std::size_t i = 0; i <= order; ++i) {
    q[i] = num[i] / den[0];
    for (std::size_t j = 0; j < den.size() && i + j <= order; ++j)
      num[i + j] -= q[i] * den[j];
  }
  return q;
}

/// Does a simple curve of some genus satisfy both the point-count and the
/// adjunction inequality? Scans far more genera than needed.
inline bool negative_class_representable(Int c1, Int square) {
  for (Int g = 0; g < 200; ++g)
    if (c1 + g - 1 >= 0 && c1 + 2 * (g - 1) <= square)
      return true;
  return false;
}

/// Every class with coordinates in [-bound, bound], in odometer order.
inline std::vector<HClass> box(const gromov::LatticePtr &lat, Int bound) {
  std::vector<HClass> out;
  std::vector<Int> c(lat->rank(), -bound);
  while (true) {
    out.emplace_back(lat, c);
    std::size_t i = 0;
    while (i < c.size() && c[i] == bound)
      c[i++] = -bound;
    if (i == c.size())
      break;
    ++c[i];
  }
  return out;
}

/// Brute-force decompositions: every coefficient vector up to the area
/// bound, rays merged by pairwise proportionality, bullets re-checked by
/// hand.
inline std::set<std::vector<std::vector<Int>>>
decompositions(const gromov::ManifoldModel &model, const HClass &a,
               std::vector<HClass> candidates) {
  using gromov::pair;
  const bool kmin = model.minimal() && gromov::b2_plus(*model.lattice()) > 1;
  std::vector<HClass> cands;
  for (const auto &c : candidates) {
    if (kmin && gromov::k(c) != 0)
      continue;
    if (std::find(cands.begin(), cands.end(), c) == cands.end())
      cands.push_back(c);
  }
  std::set<std::vector<std::vector<Int>>> found;
  if (a.is_zero() || gromov::omega_area(a) <= 0)
    return found;

  std::vector<Int> bound;
  for (const auto &c : cands) {
    gromov::Rational q = gromov::omega_area(a) / gromov::omega_area(c);
    bound.push_back(static_cast<Int>(numerator(q) / denominator(q)));
  }
  // Odometer over coefficient vectors; the running sum is kept as plain
  // coordinates so that only hits on the target build classes.
  const std::size_t rank = a.coords().size();
  std::vector<Int> n(cands.size(), 0), sum(rank, 0);
  while (true) {
    bool ok = sum == a.coords();
    std::vector<HClass> parts;
    std::vector<bool> used(cands.size(), false);
    for (std::size_t i = 0; ok && i < cands.size(); ++i) {
      if (n[i] == 0 || used[i])
        continue;
      const Int sq = pair(cands[i], cands[i]);
      if (sq < 0 || (sq > 0 && n[i] > 1)) {
        ok = false;
        break;
      }
      HClass part = n[i] * cands[i];
      if (sq == 0)
        for (std::size_t j = i + 1; j < cands.size(); ++j)
          if (n[j] > 0 && pair(cands[j], cands[j]) == 0 &&
              gromov::proportional(cands[i], cands[j]) &&
              pair(cands[i], cands[j]) == 0 &&
              gromov::omega_area(cands[j]) > 0) {
            part += n[j] * cands[j];
            used[j] = true;
          }
      parts.push_back(part);
    }
    for (std::size_t i = 0; ok && i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (pair(parts[i], parts[j]) != 0 ||
            gromov::proportional(parts[i], parts[j]))
          ok = false;
    if (ok && !parts.empty()) {
      std::vector<std::vector<Int>> key;
      for (const auto &p : parts)
        key.push_back(p.coords());
      std::sort(key.begin(), key.end());
      found.insert(key);
    }
    std::size_t i = 0;
    for (; i < n.size() && n[i] == bound[i]; ++i) {
      for (std::size_t r = 0; r < rank; ++r)
        sum[r] -= n[i] * cands[i].coords()[r];
      n[i] = 0;
    }
    if (i == n.size())
      break;
    ++n[i];
    for (std::size_t r = 0; r < rank; ++r)
      sum[r] += cands[i].coords()[r];
  }
  return found;
}

inline std::set<std::vector<std::vector<Int>>>
as_keys(const std::vector<gromov::Decomposition> &ds) {
  std::set<std::vector<std::vector<Int>>> out;
  for (const auto &d : ds) {
    std::vector<std::vector<Int>> key;
    for (const auto &p : d.parts)
      key.push_back(p.coords());
    std::sort(key.begin(), key.end());
    out.insert(key);
  }
  return out;
}

/// Random candidate sets on one model: classes of positive area with
/// coordinates in [-3, 3], a target built from a random sub-sum, total area
/// at most 12. Returns false when the draw is unusable.
inline bool random_decomposition_case(const gromov::ManifoldModel &model,
                                      std::mt19937 &rng,
                                      std::vector<HClass> &cands, HClass &a) {
  std::uniform_int_distribution<Int> coord(-3, 3);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<Int> mult(0, 2);
  const auto &lat = model.lattice();
  cands.clear();
  const int want = count(rng);
  for (int tries = 0; tries < 400 && static_cast<int>(cands.size()) < want;
       ++tries) {
    std::vector<Int> c(lat->rank());
    for (auto &x : c)
      x = coord(rng);
    HClass h(lat, c);
    if (gromov::omega_area(h) <= 0)
      continue;
    // Bias towards the interesting classes: non-negative square, with a
    // few negative ones mixed in.
    if (gromov::pair(h, h) < 0 && tries % 5 != 0)
      continue;
    cands.push_back(h);
  }
  if (cands.empty())
    return false;
  a = HClass::zero(lat);
  for (const auto &c : cands)
    a += mult(rng) * c;
  if (a.is_zero()) {
    std::vector<Int> c(lat->rank());
    for (auto &x : c)
      x = coord(rng);
    a = HClass(lat, c);
  }
  const auto area = gromov::omega_area(a);
  return area > 0 && area <= 12;
}

} // namespace oracle
