#include <doctest.h>

#include <algorithm>

#include "rooted/error.hpp"
#include "rooted/monomial.hpp"
#include "support.hpp"

using namespace rooted;
using test::mono;
using test::mono_set;

TEST_CASE("divides") {
  CHECK(divides(mono("x1*x3", 5), mono("x1*x2*x3", 5)));
  CHECK_FALSE(divides(mono("x2*x4", 5), mono("x1*x3*x5", 5)));
  const auto u = mono("x2^3*x4", 5);
  CHECK(divides(u, u));
  CHECK_FALSE(strictly_divides(u, u));
  CHECK(strictly_divides(mono("x2", 5), u));
}

TEST_CASE("colon") {
  CHECK(colon(mono("x2*x4", 5), mono("x1*x3*x4", 5)) == mono("x2", 5));
  CHECK(colon(mono("x1*x3^2", 5), mono("x1*x3^2", 5)).is_unit());
  CHECK(colon(mono("x1*x3*x4", 5), mono("x2*x3*x5", 5)) == mono("x1*x4", 5));
}

TEST_CASE("universe mismatch throws") {
  const auto a = Monomial::variable(3, 1);
  const auto b = Monomial::variable(4, 1);
  for (auto f : {+[](const Monomial& x, const Monomial& y) { (void)divides(x, y); },
                 +[](const Monomial& x, const Monomial& y) { (void)colon(x, y); },
                 +[](const Monomial& x, const Monomial& y) { (void)gcd(x, y); },
                 +[](const Monomial& x, const Monomial& y) { (void)(x * y); }}) {
    try {
      f(a, b);
      FAIL("expected UniverseMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UniverseMismatch);
    }
  }
  CHECK_THROWS_AS(MonomialSet({a, b}), Error);
}

TEST_CASE("display and parse") {
  CHECK(to_string(Monomial(4)) == "1");
  CHECK(to_string(mono("x3^2*x1", 4)) == "x1*x3^2");
  CHECK(to_string(Monomial({0, 2, 0, 1})) == "x2^2*x4");
  CHECK(parse_monomial("1", 3).is_unit());
  CHECK(parse_monomial("x2*x2", 3) == mono("x2^2", 3));
  for (const char* bad : {"", "x0", "x4", "y1", "x1*", "x1^", "x1^-2", "2", "x1**x2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_monomial(bad, 3), Error);
  }
}

TEST_CASE("canonical set order") {
  const auto set = mono_set({"x1*x2*x3", "x2", "x1*x3", "x2*x3", "x1"}, 3);
  CHECK(test::strings(set) == std::vector<std::string>{"x1", "x2", "x1*x3", "x2*x3", "x1*x2*x3"});
  CHECK(set.max_degree() == 3);
  CHECK(set.contains(mono("x2*x3", 3)));
  CHECK_FALSE(set.contains(mono("x3", 3)));
  CHECK(mono_set({"x1", "x1"}, 3).size() == 1);
}

TEST_CASE("minimalize") {
  CHECK(minimalize(mono_set({"x1*x2", "x1*x2*x3", "x2*x4"}, 4)) == mono_set({"x1*x2", "x2*x4"}, 4));
  CHECK(minimalize(MonomialSet{}).empty());
  CHECK(minimalize(mono_set({"x1^2", "x1", "x2^3", "x2^2*x1"}, 2)) == mono_set({"x1", "x2^3"}, 2));
}

TEST_CASE("is_variable_generated") {
  CHECK(is_variable_generated(mono_set({"x2", "x2*x4"}, 4)));
  CHECK_FALSE(is_variable_generated(mono_set({"x1*x3"}, 4)));
  CHECK(is_variable_generated(mono_set({"x4", "x1*x4", "x1"}, 4)));
  CHECK(is_variable_generated(MonomialSet{}));
  CHECK_FALSE(is_variable_generated(mono_set({"x1^2"}, 4)));
}

TEST_CASE("quotient and pow") {
  CHECK(quotient(mono("x1^2*x3", 3), mono("x1", 3)) == mono("x1*x3", 3));
  CHECK_THROWS_AS(quotient(mono("x1", 3), mono("x2", 3)), Error);
  CHECK(mono("x1*x2^2", 3).pow(3) == mono("x1^3*x2^6", 3));
  CHECK(mono("x1*x2^2", 3).pow(0).is_unit());
  CHECK(Monomial::from_support(5, std::vector<int>{2, 4}) == mono("x2*x4", 5));
  CHECK(mono("x2*x4", 5).support() == std::vector<int>{2, 4});
  CHECK(mono("x2*x4", 5).is_squarefree());
  CHECK_FALSE(mono("x2^2", 5).is_squarefree());
}

TEST_CASE("property: colon times gcd recovers u") {
  test::Gen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto u = gen.monomial(6, 4);
    const auto v = gen.monomial(6, 4);
    CHECK(colon(u, v) * gcd(u, v) == u);
  }
}

TEST_CASE("property: divides is a partial order") {
  test::Gen gen(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = gen.monomial(4, 2), b = gen.monomial(4, 2), c = gen.monomial(4, 2);
    CHECK(divides(a, a));
    if (divides(a, b) && divides(b, a)) CHECK(a == b);
    if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
  }
}

TEST_CASE("property: minimalize against a quadratic oracle") {
  test::Gen gen(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto elems = gen.monomials(static_cast<std::size_t>(gen.uniform(0, 25)), 4, 2);
    const auto got = minimalize(elems);

    std::vector<Monomial> expected;
    for (const auto& u : elems) {
      const bool dominated = std::any_of(elems.begin(), elems.end(),
                                         [&](const Monomial& v) { return strictly_divides(v, u); });
      if (!dominated) expected.push_back(u);
    }
    CHECK(got == MonomialSet(expected));
    CHECK(minimalize(got) == got);
    for (const auto& u : elems) {
      if (got.contains(u)) continue;
      CHECK(std::any_of(got.begin(), got.end(), [&](const Monomial& v) { return strictly_divides(v, u); }));
    }
  }
}

TEST_CASE("property: display round-trips") {
  test::Gen gen(14);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = gen.monomial(7, 3);
    CHECK(parse_monomial(to_string(m), 7) == m);
  }
}
