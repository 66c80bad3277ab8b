#include "gromov/presets.hpp"

#include <charconv>

#include "gromov/error.hpp"

namespace gromov {

namespace {

std::vector<std::vector<Int>> diagonal(const std::vector<Int> &d) {
  std::vector<std::vector<Int>> g(d.size(), std::vector<Int>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i)
    g[i][i] = d[i];
  return g;
}

HClass cls(const LatticePtr &lattice, std::vector<Int> coords) {
  return HClass(lattice, std::move(coords));
}

} // namespace

ManifoldModel preset_cp2() {
  auto lat = std::make_shared<const IntersectionLattice>(
      "cp2", std::vector<std::string>{"L"}, diagonal({1}), std::vector<Int>{-3},
      std::vector<Rational>{3});
  ClassMap<Int> gr0{{cls(lat, {1}), 1}, {cls(lat, {2}), 1}, {cls(lat, {3}), 1}};
  ClassMap<Int> spheres{
      {cls(lat, {1}), 1}, {cls(lat, {2}), 1}, {cls(lat, {3}), 12}};
  return ManifoldModel(lat, {}, true, std::move(gr0), {}, std::move(spheres));
}

ManifoldModel preset_cp2_blowup(int n) {
  if (n < 1)
    throw DomainError("preset-param",
                      "cp2_blowup needs n >= 1, got " + std::to_string(n));
  const auto rank = static_cast<std::size_t>(n) + 1;
  std::vector<std::string> symbols{"L"};
  std::vector<Int> diag{1};
  std::vector<Int> k{-3};
  const Rational blowup_area = n <= 8 ? Rational(1) : Rational(2, n);
  std::vector<Rational> area{3};
  for (int i = 1; i <= n; ++i) {
    symbols.push_back("E" + std::to_string(i));
    diag.push_back(-1);
    k.push_back(1);
    area.push_back(blowup_area);
  }
  auto lat = std::make_shared<const IntersectionLattice>(
      "cp2_blowup(" + std::to_string(n) + ")", std::move(symbols),
      diagonal(diag), std::move(k), std::move(area));

  auto line_multiple = [&](Int d) {
    std::vector<Int> c(rank, 0);
    c[0] = d;
    return cls(lat, c);
  };
  std::vector<HClass> exceptional;
  ClassMap<Int> spheres{
      {line_multiple(1), 1}, {line_multiple(2), 1}, {line_multiple(3), 12}};
  for (std::size_t i = 1; i < rank; ++i) {
    HClass e = HClass::basis(lat, i);
    exceptional.push_back(e);
    spheres.emplace(e, 1);
    spheres.emplace(line_multiple(1) - e, 1);
  }
  ClassMap<Int> gr0{
      {line_multiple(1), 1}, {line_multiple(2), 1}, {line_multiple(3), 1}};
  return ManifoldModel(lat, std::move(exceptional), false, std::move(gr0), {},
                       std::move(spheres));
}

ManifoldModel preset_s2xs2() {
  auto lat = std::make_shared<const IntersectionLattice>(
      "s2xs2", std::vector<std::string>{"A1", "A2"},
      std::vector<std::vector<Int>>{{0, 1}, {1, 0}}, std::vector<Int>{-2, -2},
      std::vector<Rational>{1, 1});
  ClassMap<Int> gr0{{cls(lat, {1, 1}), 1}};
  ClassMap<Int> spheres{
      {cls(lat, {1, 0}), 1}, {cls(lat, {0, 1}), 1}, {cls(lat, {1, 1}), 1}};
  return ManifoldModel(lat, {}, true, std::move(gr0), {}, std::move(spheres));
}

ManifoldModel preset_s2xt2() {
  auto lat = std::make_shared<const IntersectionLattice>(
      "s2xt2", std::vector<std::string>{"S", "B"},
      std::vector<std::vector<Int>>{{0, 1}, {1, 0}}, std::vector<Int>{0, -2},
      std::vector<Rational>{1, 1});
  const TorusEntry section{TorusLabel(true, 0), 1};
  ClassMap<std::vector<TorusEntry>> tori{{cls(lat, {0, 1}), {section, section}}};
  ClassMap<Int> spheres{{cls(lat, {1, 0}), 1}};
  return ManifoldModel(lat, {}, true, {}, std::move(tori), std::move(spheres));
}

ManifoldModel preset_elliptic(int n) {
  if (n < 1)
    throw DomainError("preset-param",
                      "elliptic needs n >= 1, got " + std::to_string(n));
  auto lat = std::make_shared<const IntersectionLattice>(
      "elliptic(" + std::to_string(n) + ")", std::vector<std::string>{"F", "S"},
      std::vector<std::vector<Int>>{{0, 1}, {1, -n}},
      std::vector<Int>{n - 2, 0}, std::vector<Rational>{1, 1}, 2 * n - 1);
  const HClass fiber = cls(lat, {1, 0});
  ClassMap<std::vector<TorusEntry>> tori;
  if (n == 1)
    tori.emplace(fiber, std::vector<TorusEntry>{{TorusLabel(true, 0), 1}});
  else if (n == 2)
    tori.emplace(fiber, std::vector<TorusEntry>{});
  std::vector<HClass> exceptional;
  if (n == 1)
    exceptional.push_back(cls(lat, {0, 1}));
  return ManifoldModel(lat, std::move(exceptional), n >= 2, {},
                       std::move(tori), {});
}

const std::vector<PresetInfo> &preset_registry() {
  static const std::vector<PresetInfo> registry{
      {"cp2", "", "complex projective plane, basis L"},
      {"cp2_blowup", "n>=1", "CP2 blown up n times, basis L, E1..En"},
      {"s2xs2", "", "S2 x S2, basis A1, A2"},
      {"s2xt2", "", "S2 x T2, basis S = [S2 x pt], B = [pt x T2]"},
      {"elliptic", "n>=1", "elliptic surface V(n), sublattice F, S"},
  };
  return registry;
}

ManifoldModel preset(std::string_view name, int n) {
  if (name == "cp2_blowup")
    return preset_cp2_blowup(n);
  if (name == "elliptic")
    return preset_elliptic(n);
  if (name == "cp2" || name == "s2xs2" || name == "s2xt2")
    throw DomainError("preset-param",
                      "preset '" + std::string(name) + "' takes no parameter");
  throw DomainError("unknown-preset",
                    "unknown preset '" + std::string(name) + "'");
}

ManifoldModel preset(std::string_view spec) {
  std::string_view name = spec;
  std::string_view param;
  if (auto open = spec.find('('); open != std::string_view::npos) {
    if (!spec.ends_with(')'))
      throw DomainError("unknown-preset",
                        "malformed preset '" + std::string(spec) + "'");
    name = spec.substr(0, open);
    param = spec.substr(open + 1, spec.size() - open - 2);
  } else if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    param = spec.substr(colon + 1);
  }

  if (param.empty()) {
    if (name == "cp2")
      return preset_cp2();
    if (name == "s2xs2")
      return preset_s2xs2();
    if (name == "s2xt2")
      return preset_s2xt2();
    if (name == "cp2_blowup" || name == "elliptic")
      throw DomainError("preset-param",
                        "preset '" + std::string(name) + "' needs a parameter n");
    throw DomainError("unknown-preset",
                      "unknown preset '" + std::string(spec) + "'");
  }
  int n = 0;
  auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), n);
  if (ec != std::errc() || ptr != param.data() + param.size())
    throw DomainError("preset-param",
                      "malformed preset parameter '" + std::string(param) + "'");
  return preset(name, n);
}

} // namespace gromov
