#include <doctest.h>

#include <random>

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"
#include "gromov/fibersum.hpp"
#include "gromov/invariants.hpp"
#include "gromov/presets.hpp"
#include "gromov/structure.hpp"
#include "oracles.hpp"

using namespace gromov;

namespace {

Configuration config(const ManifoldModel &m,
                     std::vector<std::tuple<const char *, Int, Int>> parts) {
  std::vector<Component> comps;
  for (auto &[cls, mult, genus] : parts)
    comps.push_back({m.parse(cls), mult, genus});
  return Configuration(comps);
}

/// Rank 2, Q = diag(1, 1), two orthogonal classes of square 1.
ManifoldModel two_planes(Int gr1, Int gr2, bool with_sum = false) {
  auto lat = std::make_shared<const IntersectionLattice>(
      "two_planes", std::vector<std::string>{"B1", "B2"},
      std::vector<std::vector<Int>>{{1, 0}, {0, 1}}, std::vector<Int>{1, 1},
      std::vector<Rational>{1, 1});
  ClassMap<Int> gr0{{HClass(lat, {1, 0}), gr1}, {HClass(lat, {0, 1}), gr2}};
  if (with_sum)
    gr0.emplace(HClass(lat, {1, 1}), 7);
  return ManifoldModel(lat, {}, false, gr0);
}

} // namespace

TEST_CASE("configurations recompute their total") {
  auto b = preset_cp2_blowup(1);
  auto cfg = config(b, {{"L", 1, 0}, {"E1", 2, 0}});
  CHECK(cfg.total() == b.parse("L + 2E1"));
  CHECK_THROWS_AS(Configuration({}), DomainError);
  CHECK_THROWS_AS(config(b, {{"L", 0, 0}}), DomainError);
  CHECK_THROWS_AS(config(b, {{"L", 1, -1}}), DomainError);
}

TEST_CASE("good configurations") {
  auto b = preset_cp2_blowup(1);
  auto r = verify_good_configuration(b, config(b, {{"L", 1, 0}, {"E1", 1, 0}}), 2);
  CHECK(r.passed());

  r = verify_good_configuration(b, config(b, {{"L", 1, 0}, {"E1", 2, 0}}), 2);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.clause("b-multiplicity").pass);
  CHECK(r.clause("b-multiplicity").witnesses ==
        std::vector<HClass>{b.parse("E1")});
  CHECK(r.clause("a-disjoint").pass);

  auto s = preset_s2xs2();
  r = verify_good_configuration(s, config(s, {{"A1", 1, 0}, {"A1", 1, 0}}), 2);
  CHECK(r.passed());

  // A square-zero torus may be multiply covered.
  auto t = preset_s2xt2();
  r = verify_good_configuration(t, config(t, {{"B", 3, 1}}), 0);
  CHECK(r.clause("b-multiplicity").pass);

  auto p = preset_cp2();
  r = verify_good_configuration(p, config(p, {{"L", 1, 0}, {"L", 1, 0}}), 5);
  CHECK_FALSE(r.clause("a-disjoint").pass);
  r = verify_good_configuration(b, config(b, {{"2E1", 1, 0}}), -1);
  CHECK_FALSE(r.clause("c-negative").pass);
  CHECK_THROWS_AS(r.clause("nope"), std::out_of_range);
}

TEST_CASE("passing configurations satisfy k(total) = sum k(m B)") {
  std::mt19937 rng(17);
  auto b = preset_cp2_blowup(2);
  const std::vector<std::string> pool{"L",      "E1",     "E2",     "L - E1",
                                      "L - E2", "2L",     "3L",     "L - E1 - E2",
                                      "2L - E1", "3L - E1 - E2"};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<Int> len(1, 3), mult(1, 2), genus(0, 1);
  int passes = 0;
  for (int t = 0; t < 3000; ++t) {
    std::vector<Component> comps;
    for (Int i = len(rng); i > 0; --i)
      comps.push_back({b.parse(pool[pick(rng)]), mult(rng), genus(rng)});
    Configuration cfg(comps);
    auto r = verify_good_configuration(b, cfg, k(cfg.total()));
    if (!r.passed())
      continue;
    ++passes;
    Int sum = 0;
    for (const auto &c : cfg.components())
      sum += k(c.mult * c.cls);
    CHECK(sum == k(cfg.total()));
  }
  CHECK(passes > 20);
}

TEST_CASE("k' configurations") {
  auto b = preset_cp2_blowup(1);
  auto r = verify_kprime_configuration(b, config(b, {{"L", 1, 0}, {"E1", 2, 0}}), 2);
  CHECK(r.passed());

  r = verify_kprime_configuration(b, config(b, {{"L - E1", 1, 0}, {"E1", 3, 0}}));
  CHECK_FALSE(r.passed());
  const auto &cl = r.clause("a-disjoint");
  CHECK_FALSE(cl.pass);
  CHECK(cl.witnesses == std::vector<HClass>{b.parse("L - E1"), b.parse("E1")});

  auto p = preset_cp2();
  CHECK(verify_kprime_configuration(p, config(p, {{"3L", 1, 1}}), 9).passed());
  CHECK_FALSE(
      verify_kprime_configuration(p, config(p, {{"3L", 1, 1}}), 8).passed());
}

TEST_CASE("decomposition examples") {
  auto m = two_planes(1, 1);
  auto B1 = m.parse("B1"), B2 = m.parse("B2"), A = m.parse("B1 + B2");
  auto ds = enumerate_decompositions(m, A, {B1, B2});
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].parts == std::vector<HClass>{B2, B1});

  ds = enumerate_decompositions(m, A, {B1, B2, A});
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].parts == std::vector<HClass>{B2, B1});
  CHECK(ds[1].parts == std::vector<HClass>{A});

  CHECK(enumerate_decompositions(m, m.parse("2B1 + B2"), {B1, B2}).empty());
  CHECK(enumerate_decompositions(m, m.parse("0"), {B1, B2}).empty());

  auto t = preset_s2xt2();
  auto B = t.parse("B");
  ds = enumerate_decompositions(t, t.parse("2B"), {B});
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].parts == std::vector<HClass>{t.parse("2B")});
  // Candidates on one ray merge into one part.
  ds = enumerate_decompositions(t, t.parse("3B"), {B, t.parse("2B")});
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].parts == std::vector<HClass>{t.parse("3B")});

  CHECK_THROWS_AS(enumerate_decompositions(t, B, {t.parse("-B")}), DomainError);
  CHECK_THROWS_AS(enumerate_decompositions(t, B, {t.parse("S - B")}), DomainError);
}

TEST_CASE("enumeration matches the brute-force oracle") {
  std::mt19937 rng(31337);
  std::vector<ManifoldModel> models{preset_cp2(),          preset_cp2_blowup(1),
                                    preset_cp2_blowup(2),  preset_s2xs2(),
                                    preset_s2xt2(),        preset_elliptic(1),
                                    preset_elliptic(2),    preset_elliptic(3),
                                    two_planes(1, 1)};
  int nonempty = 0;
  for (const auto &m : models)
    for (int t = 0; t < 150; ++t) {
      std::vector<HClass> cands;
      HClass a = HClass::zero(m.lattice());
      if (!oracle::random_decomposition_case(m, rng, cands, a))
        continue;
      auto ds = enumerate_decompositions(m, a, cands);
      for (const auto &d : ds)
        CHECK(is_valid_decomposition(a, d));
      CHECK(std::is_sorted(ds.begin(), ds.end()));
      CHECK(oracle::as_keys(ds) == oracle::decompositions(m, a, cands));
      nonempty += !ds.empty();
    }
  CHECK(nonempty > 50);
}

TEST_CASE("Gr via decompositions") {
  auto t = preset_s2xt2();
  for (Int k = 1; k <= 12; ++k)
    CHECK(gromov_via_decompositions(t, k * t.parse("B")) == k + 1);
  CHECK(gromov_via_decompositions(t, t.parse("0")) == 1);

  auto m = two_planes(1, 1);
  const std::vector<HClass> axes{m.parse("B1"), m.parse("B2")};
  CHECK(gromov_via_decompositions(m, m.parse("B1 + B2"), axes) == 1);
  // By default B1 + B2 is itself a candidate, and it has no entry.
  CHECK_THROWS_AS(gromov_via_decompositions(m, m.parse("B1 + B2")), DomainError);
  auto n = two_planes(2, -3);
  CHECK(gromov_via_decompositions(n, n.parse("B1 + B2"),
                                  {n.parse("B1"), n.parse("B2")}) == -6);
  // With the sum itself in the table both decompositions count.
  auto w = two_planes(2, -3, true);
  CHECK(gromov_via_decompositions(w, w.parse("B1 + B2")) == 7 - 6);
  // Indecomposable: a single candidate of positive square.
  CHECK(gromov_via_decompositions(w, w.parse("B1 + B2"),
                                  {w.parse("B1 + B2")}) == 7);

  auto p = preset_cp2();
  CHECK(gromov_via_decompositions(p, p.parse("3L")) == 1);
  // 4L is in no table: an error, not a silent zero.
  CHECK_THROWS_AS(gromov_via_decompositions(p, p.parse("4L")), DomainError);

  auto e1 = preset_elliptic(1);
  CHECK(gromov_via_decompositions(e1, e1.parse("F")) == 1);
  auto k3 = preset_elliptic(2);
  CHECK(gromov_via_decompositions(k3, k3.parse("F")) == 0);
  CHECK(gromov_via_decompositions(k3, k3.parse("4F")) == 0);

  auto e3 = preset_elliptic(3);
  try {
    gromov_via_decompositions(e3, e3.parse("F"), {e3.parse("F")});
    FAIL("expected unknown Gr0");
  } catch (const DomainError &e) {
    CHECK(e.code() == "unknown-gr0");
    CHECK(std::string(e.what()).find("F") != std::string::npos);
  }
}

TEST_CASE("Kmin constraints") {
  auto e3 = preset_elliptic(3);
  ClassMap<Int> table{{e3.parse("F"), -1}, {e3.parse("0"), 1}};
  CHECK(e3.canonical() == e3.parse("F"));
  CHECK(check_kmin_constraints(e3, table).passed());

  // k(S + 3F) = 2 on K3.
  auto k3 = preset_elliptic(2);
  CHECK(k(k3.parse("S + 3F")) == 2);
  auto r = check_kmin_constraints(k3, {{k3.parse("S + 3F"), 1}});
  CHECK_FALSE(r.clause("i").pass);
  CHECK(r.clause("i").witnesses == std::vector<HClass>{k3.parse("S + 3F")});

  CHECK(pair(k3.parse("S + F"), k3.parse("S + F")) == 0);
  r = check_kmin_constraints(k3, {{k3.parse("F"), 5}, {k3.parse("S + F"), 1}});
  CHECK(r.clause("iv").pass);
  r = check_kmin_constraints(k3, {{k3.parse("F"), 5}, {k3.parse("S"), 1}});
  CHECK_FALSE(r.clause("iv").pass);
  CHECK(r.clause("iv").witnesses == std::vector<HClass>{k3.parse("S")});

  r = check_kmin_constraints(e3, {{e3.parse("F"), 3}});
  CHECK_FALSE(r.clause("ii").pass);
  r = check_kmin_constraints(e3, {{e3.parse("F"), 1}, {e3.parse("0"), 2}});
  CHECK_FALSE(r.clause("iii").pass);

  CHECK_THROWS_AS(check_kmin_constraints(preset_cp2(), {}), DomainError);
  CHECK_THROWS_AS(check_kmin_constraints(preset_elliptic(1), {}), DomainError);
}

TEST_CASE("shipped elliptic tables satisfy the Kmin constraints") {
  for (Int n = 2; n <= 20; ++n) {
    auto m = preset_elliptic(static_cast<int>(n));
    CHECK(check_kmin_constraints(m, elliptic_gr_table(m, n)).passed());
  }
}
