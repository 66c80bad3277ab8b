#include <doctest.h>

#include <random>

#include "gromov/class_expr.hpp"
#include "gromov/error.hpp"
#include "gromov/presets.hpp"

using namespace gromov;

namespace {

std::vector<ManifoldModel> all_presets() {
  std::vector<ManifoldModel> out{preset_cp2(), preset_s2xs2(), preset_s2xt2()};
  for (int n : {1, 2, 3, 8, 9})
    out.push_back(preset_cp2_blowup(n));
  for (int n : {1, 2, 3, 5})
    out.push_back(preset_elliptic(n));
  return out;
}

HClass random_class(const LatticePtr &lat, std::mt19937 &rng, Int bound = 6) {
  std::uniform_int_distribution<Int> d(-bound, bound);
  std::vector<Int> c(lat->rank());
  for (auto &x : c)
    x = d(rng);
  return HClass(lat, c);
}

} // namespace

TEST_CASE("pairing on cp2_blowup(1)") {
  auto m = preset_cp2_blowup(1);
  auto L = m.parse("L"), E = m.parse("E1");
  CHECK(pair(L, L) == 1);
  CHECK(pair(E, E) == -1);
  CHECK(pair(L, E) == 0);
  CHECK(c1(L) == 3);
  CHECK(c1(E) == 1);
  CHECK(omega_area(L) == 3);
  CHECK(omega_area(L - E) == 2);
  CHECK(m.canonical() == m.parse("-3L + E1"));
}

TEST_CASE("pairing is symmetric and bilinear; c1 + A.A is even") {
  std::mt19937 rng(7);
  for (const auto &m : all_presets()) {
    const auto &lat = m.lattice();
    for (int t = 0; t < 200; ++t) {
      auto a = random_class(lat, rng), b = random_class(lat, rng),
           c = random_class(lat, rng);
      Int s = std::uniform_int_distribution<Int>(-5, 5)(rng);
      CHECK(pair(a, b) == pair(b, a));
      CHECK(pair(a + b, c) == pair(a, c) + pair(b, c));
      CHECK(pair(s * a, c) == s * pair(a, c));
      CHECK(c1(a + b) == c1(a) + c1(b));
      CHECK((c1(a) + pair(a, a)) % 2 == 0);
    }
  }
}

TEST_CASE("b2+ of the presets") {
  CHECK(b2_plus(*preset_cp2().lattice()) == 1);
  CHECK(b2_plus(*preset_cp2_blowup(4).lattice()) == 1);
  CHECK(b2_plus(*preset_s2xs2().lattice()) == 1);
  CHECK(b2_plus(*preset_s2xt2().lattice()) == 1);
  auto e3 = preset_elliptic(3);
  CHECK(e3.lattice()->computed_b2_plus() == 1);
  CHECK(b2_plus(*e3.lattice()) == 5);
  CHECK(positive_index({{0, 0}, {0, 0}}) == 0);
  CHECK(positive_index({{0, 1}, {1, 0}}) == 1);
  CHECK(positive_index({{2, 1, 0}, {1, 2, 0}, {0, 0, -3}}) == 2);
  // E8 is negative definite.
  std::vector<std::vector<Int>> e8(8, std::vector<Int>(8, 0));
  for (int i = 0; i < 8; ++i)
    e8[i][i] = -2;
  const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
  for (auto &e : edges)
    e8[e[0]][e[1]] = e8[e[1]][e[0]] = 1;
  CHECK(positive_index(e8) == 0);
}

TEST_CASE("b2+ is unchanged by a unimodular change of basis") {
  std::mt19937 rng(11);
  for (const auto &m : all_presets()) {
    const auto &lat = *m.lattice();
    const std::size_t n = lat.rank();
    for (int t = 0; t < 30; ++t) {
      // Product of random elementary matrices.
      std::vector<std::vector<Int>> p(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        p[i][i] = 1;
      std::uniform_int_distribution<std::size_t> idx(0, n - 1);
      std::uniform_int_distribution<Int> s(-2, 2);
      for (int step = 0; step < 6 && n > 1; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
          continue;
        Int f = s(rng);
        for (std::size_t r = 0; r < n; ++r)
          p[r][i] += f * p[r][j];
      }
      std::vector<std::vector<Int>> g(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              g[i][j] += p[a][i] * lat.gram(a, b) * p[b][j];
      CHECK(positive_index(g) == lat.computed_b2_plus());
    }
  }
}

TEST_CASE("lattice construction rejects malformed input") {
  using V = std::vector<Int>;
  using G = std::vector<std::vector<Int>>;
  using R = std::vector<Rational>;
  CHECK_THROWS_AS(IntersectionLattice("x", {"A", "B"}, G{{0, 1}, {2, 0}},
                                      V{0, 0}, R{1, 1}),
                  DomainError);
  // K = 0 is not characteristic for the odd form (1).
  CHECK_THROWS_AS(IntersectionLattice("x", {"A"}, G{{1}}, V{0}, R{1}),
                  DomainError);
  CHECK_THROWS_AS(IntersectionLattice("x", {"A", "A"}, G{{0, 1}, {1, 0}},
                                      V{0, 0}, R{1, 1}),
                  DomainError);
  CHECK_THROWS_AS(IntersectionLattice("x", {"1A"}, G{{0}}, V{0}, R{1}),
                  DomainError);
  CHECK_THROWS_AS(IntersectionLattice("x", {}, G{}, V{}, R{}), DomainError);
  CHECK_NOTHROW(IntersectionLattice("x", {"A"}, G{{1}}, V{-3}, R{3}));
}

TEST_CASE("class expressions") {
  auto m = preset_cp2_blowup(2);
  CHECK(m.parse("3L - E1 - 2E2").coords() == std::vector<Int>{3, -1, -2});
  CHECK(m.parse(" -2 * L+E2 ").coords() == std::vector<Int>{-2, 0, 1});
  CHECK(m.parse("L − E1").coords() == std::vector<Int>{1, -1, 0});
  CHECK(m.parse("0").is_zero());
  CHECK(m.parse("L + L - 2L").is_zero());
  CHECK(format_class(m.parse("3L - E1 - 2E2")) == "3L - E1 - 2E2");
  CHECK(format_class(m.parse("-E1")) == "-E1");
  CHECK(format_class(m.parse("0")) == "0");
  for (const char *bad : {"3Q", "", "   ", "L +", "3", "L E1", "2*", "++L",
                          "99999999999999999999L"})
    CHECK_THROWS_AS(m.parse(bad), ParseError);
}

TEST_CASE("format and parse round trip") {
  std::mt19937 rng(3);
  for (const auto &m : all_presets())
    for (int t = 0; t < 200; ++t) {
      auto a = random_class(m.lattice(), rng, 20);
      CHECK(m.parse(format_class(a)) == a);
    }
}

TEST_CASE("content, primitive and proportionality") {
  auto m = preset_s2xs2();
  auto a = m.parse("4A1 - 6A2");
  CHECK(a.content() == 2);
  CHECK(a.primitive() == m.parse("2A1 - 3A2"));
  CHECK(HClass::zero(m.lattice()).content() == 0);
  CHECK(proportional(m.parse("A1"), m.parse("3A1")));
  CHECK(proportional(m.parse("A1"), m.parse("-A1")));
  CHECK_FALSE(proportional(m.parse("A1"), m.parse("A1 + A2")));
  CHECK(proportional(HClass::zero(m.lattice()), m.parse("A2")));
}

TEST_CASE("classes of different lattices do not mix") {
  auto a = preset_s2xs2().parse("A1");
  auto b = preset_s2xt2().parse("S");
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(pair(a, b), DomainError);
}

TEST_CASE("exact rationals and overflow") {
  CHECK(parse_rational("2/6") == Rational(1, 3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(to_string(Rational(2, 9)) == "2/9");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked::add(big, 1), DomainError);
  CHECK_THROWS_AS(checked::mul(big, 2), DomainError);
  CHECK(checked::sub(-5, 7) == -12);
}

TEST_CASE("exceptional candidates on cp2_blowup(2)") {
  auto m = preset_cp2_blowup(2);
  auto found = exceptional_candidates(m.lattice(), 2);
  std::vector<HClass> expected{m.parse("E2"), m.parse("E1"),
                               m.parse("L - E1 - E2")};
  CHECK(found == expected);
}

TEST_CASE("blow-up areas stay positive on the anticanonical class") {
  for (int n = 1; n <= 12; ++n) {
    auto m = preset_cp2_blowup(n);
    CHECK(omega_area(-m.canonical()) > 0);
  }
  CHECK(omega_area(preset_cp2_blowup(9).parse("E1")) == Rational(2, 9));
}

TEST_CASE("preset lookup") {
  CHECK(preset("cp2_blowup(3)").lattice()->rank() == 4);
  CHECK(preset("elliptic:2").lattice()->name() == "elliptic(2)");
  CHECK_THROWS_AS(preset("cp3"), DomainError);
  CHECK_THROWS_AS(preset("cp2_blowup"), DomainError);
  CHECK_THROWS_AS(preset("cp2_blowup(0)"), DomainError);
  CHECK_THROWS_AS(preset("cp2(2)"), DomainError);
  CHECK(preset_registry().size() == 5);
}
