#include "doctest.h"
#include "support.hpp"
#include "zlab/qfield.hpp"

using namespace zlab;

TEST_CASE("rational canonical form") {
  Rational q = parse_rational("-6/4");
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK(to_string(parse_rational("+10/15")) == "2/3");
}

TEST_CASE("conjugate product and unit inverse") {
  FieldDescriptor q3(Rational(3));
  FieldElem r = FieldElem::root(q3);
  FieldElem one = FieldElem::one(q3);
  CHECK((one + r) * (one - r) == FieldElem(Rational(-2), q3));
  FieldElem u = FieldElem(Rational(7), q3) + FieldElem(Rational(4), q3) * r;
  CHECK(one / u == FieldElem(Rational(7), Rational(-4), q3));
  CHECK(u.norm() == 1);
  CHECK(FieldElem(Rational(2), Rational(5), q3).conjugate() == FieldElem(Rational(2), Rational(-5), q3));
}

TEST_CASE("denominator of the first sqrt(3) example is nonzero") {
  FieldDescriptor q3(Rational(3));
  FieldElem a(Rational(-3539), Rational(1787), q3);
  FieldElem u(Rational(7), Rational(4), q3);
  FieldElem d = a * pow(u, 4);
  // independent expansion: u^2 = 97 + 56 sqrt3, u^4 = 18817 + 10864 sqrt3
  FieldElem u4(Rational(18817), Rational(10864), q3);
  CHECK(pow(u, 4) == u4);
  CHECK(d == a * u4);
  CHECK_FALSE(d.is_zero());
}

TEST_CASE("descriptor checks") {
  FieldDescriptor q3(Rational(3)), q5(Rational(5));
  CHECK_THROWS_AS(FieldDescriptor(Rational(4)), Error);
  CHECK_THROWS_AS(FieldDescriptor(Rational(9, 4)), Error);
  auto x = FieldElem::one(q3), y = FieldElem::one(q5);
  try {
    (void)(x + y);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DescriptorMismatch);
  }
  try {
    (void)(x / FieldElem::zero(q3));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK(FieldDescriptor(Rational(12)) == FieldDescriptor(Rational(12)));
  CHECK_FALSE(FieldDescriptor(Rational(12)) == FieldDescriptor(Rational(3)));
}

TEST_CASE("print and parse round trip") {
  for (const char* d : {"0", "3", "-1407", "-42", "854"}) {
    FieldDescriptor f(parse_rational(d));
    for (int k = 0; k < 50; ++k) {
      FieldElem e = zt::random_elem(f);
      CHECK(FieldElem::parse(e.to_string(), f) == e);
    }
  }
  FieldDescriptor m42(Rational(-42));
  CHECK(FieldElem(Rational(1, 2), Rational(-3), m42).to_string() == "1/2 - 3*sqrt(-42)");
  CHECK(FieldElem(Rational(0), Rational(-1), m42).to_string() == "-sqrt(-42)");
}

TEST_CASE("square roots inside the field") {
  FieldDescriptor q3(Rational(3));
  FieldElem u(Rational(7), Rational(4), q3);  // (2 + sqrt3)^2
  auto r = u.sqrt();
  REQUIRE(r);
  CHECK(*r * *r == u);
  CHECK_FALSE(FieldElem(Rational(2), q3).sqrt());
  CHECK(FieldElem(Rational(12), q3).sqrt());
}

TEST_CASE("field axioms on random triples") {
  for (const char* d : {"0", "3", "-3", "-1407", "59"}) {
    FieldDescriptor f(parse_rational(d));
    for (int k = 0; k < 100; ++k) {
      auto a = zt::random_elem(f), b = zt::random_elem(f), c = zt::random_elem(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == FieldElem::one(f));
    }
  }
}

TEST_CASE("norm is multiplicative and vanishes only at zero") {
  for (const char* d : {"3", "-42", "170", "2"}) {
    FieldDescriptor f(parse_rational(d));
    for (int k = 0; k < 100; ++k) {
      auto a = zt::random_elem(f), b = zt::random_elem(f);
      // independent expansion of the product's components
      Rational D = f.radicand();
      Rational pa = a.a() * b.a() + D * a.b() * b.b();
      Rational pb = a.a() * b.b() + a.b() * b.a();
      CHECK(pa * pa - D * pb * pb == a.norm() * b.norm());
      CHECK((a.norm() == 0) == a.is_zero());
    }
  }
}
