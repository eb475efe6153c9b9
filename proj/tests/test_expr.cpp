#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qheis/expr.hpp"

using namespace qheis;

TEST_CASE("atoms and arithmetic") {
    Algebra alg(Preset::two_parameter, {4, 4});
    auto v = build_element(alg, "(+ N (* 2 A))");
    auto expect = alg.gen(Gen::N) + alg.gen(Gen::A) * Rational(2);
    CHECK(std::get<PBWElement>(v) == expect);

    auto prod = build_element(alg, "(* A Ap)");
    CHECK(std::get<PBWElement>(prod) == alg.mul(alg.gen(Gen::A), alg.gen(Gen::Ap)));

    auto rat = build_element(alg, "(* -3/7 h w E)");
    CHECK(std::get<PBWElement>(rat) ==
          alg.gen(Gen::E) * TruncatedSeries::monomial(Rational(-3, 7), 1, 1, alg.truncation()));

    CHECK(std::get<PBWElement>(build_element(alg, "(neg N)")) == -alg.gen(Gen::N));
}

TEST_CASE("named series via operators") {
    Algebra alg(Preset::two_parameter, {4, 4});
    CHECK(std::get<PBWElement>(build_element(alg, "(sinhover h E)")) == alg.sinh_hE_over_h());
    CHECK(std::get<PBWElement>(build_element(alg, "(expm1over w Ap)")) ==
          alg.expm1_wAp_over_w(1));
    CHECK(std::get<PBWElement>(build_element(alg, "(exp (* w Ap))")) == alg.exp_wAp(1));
    CHECK(std::get<PBWElement>(build_element(alg, "(exp (* -1 h E))")) == alg.exp_hE(-1));
}

TEST_CASE("tensor expressions") {
    Algebra alg(Preset::two_parameter, {3, 3});
    auto v = build_element(alg, "(tensor A Ap)");
    CHECK(std::get<TensorElement>(v) == alg.tensor(alg.gen(Gen::A), alg.gen(Gen::Ap)));
    auto t3 = build_element(alg, "(tensor A 1 N)");
    CHECK(std::get<TensorElement>(t3) ==
          alg.tensor(alg.gen(Gen::A), alg.one(), alg.gen(Gen::N)));
    auto r = build_element(alg, "(exp (* -2 h (tensor E N)))");
    auto x = alg.tensor(alg.gen(Gen::E), alg.gen(Gen::N)) *
             TruncatedSeries::monomial(-2, 1, 0, alg.truncation());
    CHECK(std::get<TensorElement>(r) == alg.tensor_exp(x));
}

TEST_CASE("errors carry positions and reasons") {
    Algebra alg(Preset::two_parameter, {3, 3});
    CHECK_THROWS_WITH_AS(build_element(alg, "(exp E)"),
                         doctest::Contains("no constant term"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_element(alg, "(foo A)"),
                         doctest::Contains("unknown operator"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_element(alg, "Q"),
                         doctest::Contains("unknown atom"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_element(alg, "(+ A"),
                         doctest::Contains("unexpected end"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_element(alg, "A B"),
                         doctest::Contains("trailing input"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_element(alg, "(+ A (tensor A A))"),
                         doctest::Contains("mix"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_element(alg, "(tensor (tensor A A) A)"),
                         doctest::Contains("non-tensor"), std::invalid_argument);
}
