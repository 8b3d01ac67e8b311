#include <doctest.h>

#include "support.hpp"
#include "zlab/adjunction.hpp"
#include "zlab/curvefile.hpp"
#include "zlab/linalg.hpp"
#include "zlab/singloc.hpp"

using namespace zlab;

namespace {

const FieldDescriptor Q;

BiPoly P(const std::string& s, const FieldDescriptor& f = Q) { return parse_polynomial(s, f); }
ProjPoint O(const FieldDescriptor& f = Q) { return ProjPoint::affine(FieldElem::zero(f), FieldElem::zero(f)); }
ProjPoint pt(long x, long y, const FieldDescriptor& f = Q) {
  return ProjPoint::affine(FieldElem(Rational(x), f), FieldElem(Rational(y), f));
}

using zt::truncated_quotient_dim;

BiPoly random_through_origin(int deg) {
  for (;;) {
    BiPoly p = zt::random_poly(Q, deg, 0.5);
    p.set_coeff(0, 0, FieldElem::zero(Q));
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("intersection multiplicity agrees with a truncated local algebra") {
  int finite = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int df = 1 + static_cast<int>(zt::rng()() % 4), dg = 1 + static_cast<int>(zt::rng()() % 4);
    BiPoly f = random_through_origin(df), g = random_through_origin(dg);
    // mix in tangencies so higher multiplicities show up
    if (trial % 3 == 0) g = g + f * P("x");
    if (trial % 5 == 0) g = f + P("y^3") * random_through_origin(1);
    auto I = intersection_at_origin(f, g);
    // the truncated dimensions are non-decreasing in N and, once two consecutive
    // values agree, they have reached the length of the local quotient
    int N = I ? *I + 1 : 10;
    int a = truncated_quotient_dim(f, g, N), b = truncated_quotient_dim(f, g, N + 1);
    if (I) {
      ++finite;
      CHECK(a == *I);
      CHECK(b == *I);
    } else {
      CHECK(a < b);
    }
  }
  CHECK(finite >= 100);
}

TEST_CASE("intersection multiplicity of classical pairs") {
  CHECK(intersection_at_origin(P("y - x^2"), P("y")) == 2);
  CHECK(intersection_at_origin(P("y^2 - x^3"), P("y")) == 3);
  CHECK(intersection_at_origin(P("y^2 - x^3"), P("x")) == 2);
  CHECK(intersection_at_origin(P("y^2 - x^3"), P("y^2 - x^3 + x^5")) == 10);
  CHECK_FALSE(intersection_at_origin(P("x*y"), P("x^2")).has_value());
  // common component x = 0: Fulton's reduction never reaches zero here
  CHECK_FALSE(intersection_at_origin(P("3/2*x^2 - 5/3*x*y + 3/5*x"),
                                     P("3/2*x^3 - 5/3*x^2*y + 29/15*x^2 + 5*x*y")).has_value());
  CHECK_FALSE(intersection_at_origin(P("(x + y^2)*(1 + y)"), P("(x + y^2)*(2 - x)")).has_value());
  CHECK(intersection_multiplicity(P("x^2 + y^2 - 1"), P("x - 1"), pt(1, 0)) == 2);
}

TEST_CASE("Milnor numbers of A_k normal forms") {
  for (int k = 1; k <= 17; ++k) {
    Curve c(P("y^2 - x^" + std::to_string(k + 1)));
    CHECK(milnor_number(c, O()) == k);
    CHECK(classify_ade(c, O()).ade == AdeType::a(k));
  }
}

TEST_CASE("D and E normal forms") {
  CHECK(milnor_number(Curve(P("x^3 + y^4")), O()) == 6);
  CHECK(classify_ade(Curve(P("x^3 + y^4")), O()).ade == AdeType::e(6));
  CHECK(classify_ade(Curve(P("x^3 + x*y^3")), O()).ade == AdeType::e(7));
  CHECK(classify_ade(Curve(P("x^3 + y^5")), O()).ade == AdeType::e(8));
  for (int n = 4; n <= 9; ++n) {
    Curve c(P("x^2*y + y^" + std::to_string(n - 1)));
    CHECK(classify_ade(c, O()).ade == AdeType::d(n));
    CHECK(milnor_number(c, O()) == n);
  }
  CHECK_FALSE(classify_ade(Curve(P("x^4 + y^4")), O()).ade.is_simple());
  CHECK_FALSE(classify_ade(Curve(P("x^3 + y^6")), O()).ade.is_simple());
  CHECK(classify_ade(Curve(P("x*y")), O()).ade == AdeType::a(1));
  CHECK(classify_ade(Curve(P("x^2 + y^2 + x^3")), O()).ade == AdeType::a(1));
}

TEST_CASE("ADE type names round-trip") {
  for (const char* s : {"A1", "A17", "D4", "D9", "E6", "E7", "E8"}) CHECK(AdeType::parse(s).to_string() == s);
  CHECK(Configuration::parse("[2A5, 2A2]") == Configuration::parse("2A2+2A5"));
  CHECK(Configuration::parse("A14+A2+A1").total() == 3);
  CHECK_THROWS_AS(AdeType::parse("B3"), Error);
}

TEST_CASE("maximal contact against a known contact curve") {
  // (y - p(x))^2 - x^(k+1): the solution of f_y = 0 is y = p(x) exactly
  for (int k : {2, 5, 8, 11, 14}) {
    Curve c(P("(y - x^2 - 3*x^3 + 1/2*x^5)^2 - x^" + std::to_string(k + 1)));
    auto rec = classify_ade(c, O());
    REQUIRE(rec.ade == AdeType::a(k));
    REQUIRE(rec.contact.has_value());
    const auto& cd = *rec.contact;
    std::vector<Rational> want{0, 0, 1, 3, 0, Rational(-1, 2)};  // by power of x
    CHECK(cd.tau == (k + 1) / 2);
    REQUIRE(static_cast<int>(cd.t.size()) == cd.tau);
    for (int i = 0; i < cd.tau; ++i) {
      Rational w = i + 1 < static_cast<int>(want.size()) ? want[static_cast<std::size_t>(i + 1)] : Rational(0);
      CHECK(cd.t[static_cast<std::size_t>(i)].as_field()->a() == w);
    }
    CHECK(cd.order == k + 1);
    CHECK(cd.b.as_field()->a() == -1);
    CHECK(cd.iota == ((k + 1) % 3 == 0 ? (k + 1) / 3 : 0));
  }
}

TEST_CASE("maximal contact of the A14 curve matches the published expansion") {
  auto cf = corpus_file("a14_a2_a1");
  REQUIRE(cf);
  auto cd = maximal_contact(cf->curve(), O(), 5);
  std::vector<Rational> want{0, 1, 1, 2, Rational(9, 2), Rational(81, 8), Rational(829, 32)};
  REQUIRE(cd.t.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(cd.t[i].as_field()->a() == want[i]);
  CHECK(cd.mu == 14);
  CHECK_THROWS_AS(maximal_contact(cf->curve(), O(), 4), Error);
}

TEST_CASE("rho(P,5) table") {
  CHECK(rho5(AdeType::a(1)) == 0);
  CHECK(rho5(AdeType::a(2)) == 1);
  CHECK(rho5(AdeType::a(5)) == 2);
  CHECK(rho5(AdeType::a(8)) == 3);
  CHECK(rho5(AdeType::a(11)) == 4);
  CHECK(rho5(AdeType::a(14)) == 5);
  CHECK(rho5(AdeType::a(17)) == 6);
  CHECK(rho5(AdeType::e(6)) == 2);
  CHECK_THROWS_AS(rho5(AdeType{}), Error);
  CHECK_THROWS_AS(adjunction_ideal(AdeType::a(4), 5, 8), Error);
  CHECK(adjunction_ideal(AdeType::a(4), 9, 10).dimension() == 2);
}

TEST_CASE("singular points at infinity") {
  // y^2 z = x^3 has its cusp at (0:0:1) and is smooth at (0:1:0)
  auto recs = analyze_singularities(Curve(P("y^2 - x^3")));
  REQUIRE(recs.size() == 1);
  // two parabolas, tangent at (0:1:0)
  Curve c(P("(y - x^2)*(y - x^2 - 1)"));
  auto cfg = configuration(c);
  CHECK(cfg.total() >= 1);
  bool at_infinity = false;
  for (const auto& r : analyze_singularities(c)) at_infinity = at_infinity || r.point.chart() != Chart::Z;
  CHECK(at_infinity);
}

TEST_CASE("irrational singular points form one conjugate family") {
  // two parabolas crossing at (+-sqrt 2, 0)
  Curve c(P("(x^2 - 2)^2 - y^2"));
  auto recs = analyze_singularities(c);
  int nodes = 0;
  for (const auto& r : recs) nodes += r.ade == AdeType::a(1) ? r.count() : 0;
  CHECK(nodes == 2);
}

TEST_CASE("corpus curves have their stated configurations") {
  for (const auto& [file, text] : embedded_corpus()) {
    CAPTURE(file);
    auto cf = parse_curve_file(text, file);
    if (!cf.expected.count("configuration")) continue;
    Curve c = cf.curve();
    auto recs = analyze_singularities(c);
    CHECK(configuration(recs) == Configuration::parse(cf.expected.at("configuration")));
    CHECK(configuration(recs).all_simple());
    if (cf.expected.count("points")) {
      for (const auto& [ptxt, type] : parse_point_claims(cf.expected.at("points"))) {
        CAPTURE(ptxt);
        CHECK(classify_ade(c, parse_point(ptxt, cf.field)).ade == AdeType::parse(type));
      }
    }
    if (cf.expected.count("contact")) {
      for (const auto& [ptxt, iota] : parse_int_claims(cf.expected.at("contact"))) {
        CHECK(maximal_contact(c, parse_point(ptxt, cf.field), iota).iota == iota);
      }
    }
  }
}

TEST_CASE("local types are invariant under affine changes of coordinates") {
  for (const auto& [file, text] : embedded_corpus()) {
    auto cf = parse_curve_file(text, file);
    Curve c = cf.curve();
    if (c.degree > 6) continue;
    CAPTURE(file);
    for (const auto& r : analyze_singularities(c)) {
      auto p = r.point.rational_point();
      if (!p || !p->is_affine()) continue;
      auto [px, py] = p->affine_coordinates();
      for (int k = 0; k < 10; ++k) {
        AffineMap m = zt::random_affine(cf.field);
        Curve moved(pull_back(c.f, m));
        auto [qx, qy] = m.inverse().apply(px, py);
        auto rec = classify_ade(moved, ProjPoint::affine(qx, qy));
        CHECK(rec.ade == r.ade);
        CHECK(rec.mu == r.mu);
      }
    }
  }
}

TEST_CASE("configurations are invariant under affine changes of coordinates") {
  for (const char* name : {"f6_6a2", "a14_a2_a1", "nt_a5_e6_2a2", "nt_2a5_2a2"}) {
    auto cf = corpus_file(name);
    REQUIRE(cf);
    Curve c = cf->curve();
    Configuration want = configuration(c);
    for (int k = 0; k < 3; ++k) {
      CAPTURE(name);
      CHECK(configuration(Curve(pull_back(c.f, zt::random_affine(cf->field)))) == want);
    }
  }
}
