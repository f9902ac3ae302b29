#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fb/error.hpp"
#include "fb/groebner.hpp"
#include "fb/submodule.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace fb;
using fbtest::element;
using fbtest::matrix;
using fbtest::poly;
using fbtest::polys;

namespace {

std::vector<ModuleElement> as_columns(const std::vector<Polynomial>& gens) {
  std::vector<ModuleElement> out;
  for (const auto& g : gens) out.push_back(ModuleElement(std::vector<Polynomial>{g}));
  return out;
}

GroebnerBasis ideal_gb(const RingPtr& r, const std::vector<std::string>& gens) {
  auto cols = as_columns(polys(r, gens));
  return groebner_basis(cols, {0}, *r, false);
}

std::vector<oracle::Poly> oracle_basis(const GroebnerBasis& gb) {
  std::vector<oracle::Poly> out;
  for (const auto& e : gb.elements()) out.push_back(oracle::from(e[0]));
  return out;
}

SubmodulePresentation ideal_in(const RingPtr& r, const std::vector<std::string>& gens) {
  auto g = polys(r, gens);
  return SubmodulePresentation::ideal(r, g);
}

}  // namespace

TEST_CASE("groebner bases of ideals") {
  auto s = fbtest::ring(5, {"x", "y"}, {});
  auto gb = ideal_gb(s, {"x^2", "x*y"});
  CHECK(gb.size() == 2);

  auto gb2 = ideal_gb(s, {"x^2-y^2", "x*y"});
  REQUIRE(gb2.size() == 3);
  std::vector<std::string> printed;
  for (const auto& e : gb2.elements()) printed.push_back(s->format(e[0]));
  std::sort(printed.begin(), printed.end());
  CHECK(printed == std::vector<std::string>{"x*y", "x^2+4*y^2", "y^3"});
  auto naive = oracle::groebner({oracle::from(poly(s, "x^2-y^2")), oracle::from(poly(s, "x*y"))}, 5);
  CHECK(oracle_basis(gb2) == naive);
  CHECK(gb2.satisfies_buchberger_criterion());

  auto unit = ideal_gb(s, {"1"});
  REQUIRE(unit.size() == 1);
  CHECK(unit.elements()[0][0] == s->one());
  CHECK(unit.is_unit());

  try {
    ideal_gb(s, {"x^2+y"});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomogeneous);
  }
}

TEST_CASE("groebner bases agree with a naive Buchberger run") {
  fbtest::Gen g(23);
  for (int k = 0; k < 60; ++k) {
    std::uint64_t p = k % 3 == 0 ? 2 : (k % 3 == 1 ? 3 : 101);
    std::size_t n = g.uniform(2, 3);
    std::vector<std::string> names{"a", "b", "c"};
    names.resize(n);
    auto s = fbtest::ring(p, names, {});
    std::vector<ModuleElement> cols;
    std::vector<oracle::Poly> og;
    std::size_t count = g.uniform(1, 4);
    for (std::size_t i = 0; i < count; ++i) {
      auto f = g.homogeneous(s->field(), n, g.uniform(1, 3), g.uniform(1, 3));
      cols.push_back(ModuleElement(std::vector<Polynomial>{f}));
      og.push_back(oracle::from(f));
    }
    auto gb = groebner_basis(cols, {0}, *s, false);
    CHECK(gb.satisfies_buchberger_criterion());
    CHECK(oracle_basis(gb) == oracle::groebner(og, p));
    for (const auto& c : cols) CHECK(gb.contains(c));
  }
}

TEST_CASE("normal forms") {
  auto s = fbtest::ring(5, {"x", "y"}, {});
  auto gb = ideal_gb(s, {"x^2", "x*y"});
  CHECK(gb.normal_form(poly(s, "x^2+y")) == poly(s, "y"));
  CHECK(gb.normal_form(s->zero()).is_zero());
  CHECK(gb.normal_form(poly(s, "x*y+y^3")) == poly(s, "y^3"));
  // v - NF(v) lies in the ideal
  CHECK(gb.contains(ModuleElement(std::vector<Polynomial>{poly(s, "x^2+y") - poly(s, "y")})));

  fbtest::Gen g(5);
  auto gb3 = ideal_gb(s, {"x^2-y^2", "x*y"});
  for (int k = 0; k < 100; ++k) {
    auto f = g.polynomial(s->field(), 2, 5, 4);
    auto nf = gb3.normal_form(f);
    CHECK(gb3.normal_form(nf) == nf);
    CHECK(gb3.normal_form(f - nf).is_zero());
    CHECK(oracle::from(nf) == oracle::reduce(oracle::from(f), oracle_basis(gb3), 5));
    for (const auto& t : nf.terms())
      for (const auto& e : gb3.elements()) CHECK_FALSE(e[0].lead_monomial().divides(t.mono));
  }

  GroebnerBasis rank2 = groebner_basis(std::vector<ModuleElement>{element(s, {"x", "y"})}, {0, 0}, *s, false);
  try {
    (void)rank2.normal_form(ModuleElement(std::vector<Polynomial>{s->one()}));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbientMismatch);
  }
}

TEST_CASE("syzygies") {
  auto s = fbtest::ring(5, {"x", "y"}, {});
  auto syz = syzygy_generators(matrix(s, {{"x", "y"}}, {0}), s);
  auto koszul = element(s, {"y", "-x"});
  SubmodulePresentation span(s, syz, PresentationMode::Submodule);
  CHECK(span.contains(koszul));
  CHECK((matrix(s, {{"x", "y"}}, {0}) * syz).is_zero());

  auto r1 = fbtest::r1();
  auto a = matrix(r1, {{"x", "y"}}, {0});
  auto ker = kernel_over_quotient(a, r1);
  REQUIRE(ker.cols() == 3);
  CHECK(ker.column(0) == element(r1, {"x", "0"}));
  CHECK(ker.column(1) == element(r1, {"y", "0"}));
  CHECK(ker.column(2) == element(r1, {"0", "x"}));
  CHECK(r1->reduce(a * ker).is_zero());

  auto one = syzygy_generators(matrix(s, {{"1"}}, {0}), s);
  CHECK(one.cols() == 0);

  auto kx = kernel_over_quotient(matrix(r1, {{"x"}}, {0}), r1);
  SubmodulePresentation kxs(r1, kx, PresentationMode::Submodule);
  CHECK(kxs.basis().elements() == ideal_in(r1, {"x", "y"}).basis().elements());
  CHECK(kxs.row_degrees() == std::vector<Degree>{1});

  auto r2 = fbtest::r2();
  for (int q : {1, 5, 25}) {
    auto k = kernel_over_quotient(matrix(r2, {{"x^" + std::to_string(q)}}, {0}), r2);
    CHECK(k.cols() == 0);
  }
}

TEST_CASE("ideal quotients") {
  auto s = fbtest::ring(5, {"x", "y"}, {});
  auto j = ideal_in(s, {"x^2", "x*y"});
  CHECK(ideal_quotient(j, poly(s, "x")).same_span(ideal_in(s, {"x", "y"})));
  CHECK(ideal_quotient(j, s->one()).same_span(j));
  try {
    ideal_quotient(j, s->zero());
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroDivisorQuery);
  }

  for (std::uint64_t p : {101u, 32003u}) {
    auto r5 = fbtest::r5(p);
    auto s5 = r5->ambient();
    auto i5 = SubmodulePresentation::ideal(s5, r5->ideal_generators());
    auto colon = ideal_quotient(i5, poly(s5, "y"));
    auto gens = r5->ideal_generators();
    for (const auto& t : {"u", "v", "z^2"}) gens.push_back(poly(s5, t));
    CHECK(colon.same_span(SubmodulePresentation::ideal(s5, gens)));
  }
}

TEST_CASE("saturation") {
  auto s = fbtest::ring(5, {"x", "y"}, {});
  auto sat = saturate_at_irrelevant(ideal_in(s, {"x^2", "x*y"}));
  CHECK(sat.same_span(ideal_in(s, {"x"})));
  CHECK(saturate_at_irrelevant(sat).same_span(sat));
  CHECK(saturate_at_irrelevant(ideal_in(s, {"x*y"})).same_span(ideal_in(s, {"x*y"})));
  CHECK(saturate_at_irrelevant(ideal_in(s, {"1"})).same_span(ideal_in(s, {"1"})));
  // m-primary ideals saturate to the unit ideal
  CHECK(saturate_at_irrelevant(ideal_in(s, {"x^2", "y^3"})).same_span(ideal_in(s, {"1"})));
}

TEST_CASE("membership lifting") {
  auto s = fbtest::ring(5, {"x", "y"}, {});
  auto n = ideal_in(s, {"x^2", "x*y"});
  auto c = membership_lift(element(s, {"x^2"}), n);
  REQUIRE(c.has_value());
  CHECK(*c == element(s, {"1", "0"}));
  CHECK_FALSE(membership_lift(element(s, {"y^3"}), n).has_value());
  auto z = membership_lift(element(s, {"0"}), n);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  CHECK(z->rank() == 2);

  fbtest::Gen g(3);
  auto n2 = ideal_in(s, {"x^2-y^2", "x*y"});
  for (int k = 0; k < 30; ++k) {
    auto a = g.homogeneous(s->field(), 2, 2, 1), b = g.homogeneous(s->field(), 2, 2, 1);
    auto v = a * poly(s, "x^2-y^2") + b * poly(s, "x*y");
    auto lifted = membership_lift(ModuleElement(std::vector<Polynomial>{v}), n2);
    REQUIRE(lifted.has_value());
    CHECK(n2.generators().apply(*lifted)[0] == v);
  }
}

TEST_CASE("lengths and dimensions") {
  auto s = fbtest::ring(5, {"x", "y"}, {});
  CHECK(fbtest::quotient(s, {"x^2", "x*y", "y^3"}).length() == Length::finite(4));
  CHECK(fbtest::quotient(s, {"x"}).length() == Length::infinite());
  CHECK(fbtest::quotient(s, {"x"}).dimension() == 1);

  auto r1 = fbtest::r1();
  auto m5 = fbtest::quotient(r1, {"x^5", "y^5"});
  CHECK(m5.length() == Length::finite(6));
  CHECK(oracle::count_standard_monomials(2, {{2, 0}, {1, 1}, {5, 0}, {0, 5}}, 20) == 6);

  CHECK(fbtest::quotient(r1, {"0"}).dimension() == 1);
  CHECK(fbtest::quotient(fbtest::r5(), {"y"}).dimension() == 0);
  auto zero = fbtest::quotient(r1, {"1"});
  CHECK(zero.dimension() == -1);
  CHECK(zero.is_zero());
  CHECK(zero.length() == Length::finite(0));

  // submodule mode: the ideal (x) in R1 is one-dimensional K
  auto x = ideal_in(r1, {"x"});
  CHECK(x.length() == Length::finite(1));
  CHECK(x.dimension() == 0);
  CHECK(ideal_in(r1, {"y"}).dimension() == 1);
}

TEST_CASE("lengths agree with degreewise linear algebra") {
  fbtest::Gen g(41);
  for (int k = 0; k < 40; ++k) {
    std::uint64_t p = k % 2 ? 3 : 5;
    auto s = fbtest::ring(p, {"a", "b", "c"}, {});
    std::vector<Polynomial> gens{poly(s, "a^3"), poly(s, "b^3"), poly(s, "c^3")};
    std::size_t extra = g.uniform(0, 3);
    for (std::size_t i = 0; i < extra; ++i)
      gens.push_back(g.homogeneous(s->field(), 3, g.uniform(1, 3), g.uniform(1, 3)));
    auto m = SubmodulePresentation::quotient_ring_module(s, gens);
    std::vector<oracle::Poly> og;
    for (const auto& f : gens) og.push_back(oracle::from(f));
    CHECK(m.length().value() == oracle::quotient_length_up_to(3, og, 7, p));
    auto hs = m.hilbert_series().values(0, 7);
    for (std::uint64_t d = 0; d <= 7; ++d)
      CHECK(hs[d] == static_cast<std::int64_t>(oracle::quotient_dimension_in_degree(3, og, d, p)));
  }
  // finite length iff dimension <= 0, positive-dimensional examples
  for (int k = 0; k < 30; ++k) {
    auto s = fbtest::ring(7, {"a", "b", "c"}, {});
    std::vector<Polynomial> gens;
    std::size_t count = g.uniform(1, 3);
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(g.homogeneous(s->field(), 3, g.uniform(1, 2), g.uniform(1, 2)));
    auto m = SubmodulePresentation::quotient_ring_module(s, gens);
    CHECK(m.length().is_finite() == (m.dimension() <= 0));
    CHECK(m.hilbert_series().dimension() == m.dimension());
  }
}
