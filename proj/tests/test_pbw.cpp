#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qheis/pbw.hpp"

#include <cstdlib>
#include <random>

using namespace qheis;

namespace {

std::mt19937_64 &rng() {
    static std::mt19937_64 gen = [] {
        const char *seed = std::getenv("QHEIS_SEED");
        return std::mt19937_64(seed ? std::strtoull(seed, nullptr, 10) : 20260826ull);
    }();
    return gen;
}

PBWElement random_element(Algebra &alg, int max_terms = 3) {
    const Truncation t = alg.truncation();
    std::uniform_int_distribution<int> nt(1, max_terms), ex(0, 2);
    std::uniform_int_distribution<int> da(0, t.kh - 1), db(0, t.kw - 1);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    PBWElement e(t);
    const int n = nt(rng());
    for (int q = 0; q < n; ++q) {
        PBWMonomial m{ex(rng()), ex(rng()), ex(rng()), ex(rng())};
        e.add(m, TruncatedSeries::monomial(Rational(num(rng()), den(rng())), da(rng()),
                                           db(rng()), t));
    }
    return e;
}

} // namespace

TEST_CASE("two-parameter relation [A, A+] = sinh(hE) e^{w A+} / h") {
    Algebra alg(Preset::two_parameter, {4, 4});
    auto lhs = alg.commutator(alg.gen(Gen::A), alg.gen(Gen::Ap));
    auto rhs = alg.mul(alg.sinh_hE_over_h(), alg.exp_wAp(1));
    CHECK(lhs == rhs);
    // A * A+ = A+ A + [A, A+]
    auto prod = alg.mul(alg.gen(Gen::A), alg.gen(Gen::Ap));
    auto expect = alg.mul(alg.gen(Gen::Ap), alg.gen(Gen::A)) + rhs;
    CHECK(prod == expect);
}

TEST_CASE("N relations") {
    Algebra alg(Preset::two_parameter, {4, 4});
    // A * N = N A + A  (from [N, A] = -A)
    auto an = alg.mul(alg.gen(Gen::A), alg.gen(Gen::N));
    auto expect = alg.mul(alg.gen(Gen::N), alg.gen(Gen::A)) + alg.gen(Gen::A);
    CHECK(an == expect);
    // N * A+ = A+ N + (e^{w A+} - 1)/w
    auto nap = alg.mul(alg.gen(Gen::N), alg.gen(Gen::Ap));
    auto expect2 = alg.mul(alg.gen(Gen::Ap), alg.gen(Gen::N)) + alg.expm1_wAp_over_w(1);
    CHECK(nap == expect2);
}

TEST_CASE("preset relations degenerate correctly") {
    // two-parameter at K_w = 1 gives the standard relations
    Algebra two_w1(Preset::two_parameter, {4, 1});
    Algebra std_w1(Preset::standard_h, {4, 1});
    auto c2 = two_w1.commutator(two_w1.gen(Gen::A), two_w1.gen(Gen::Ap));
    auto cs = std_w1.commutator(std_w1.gen(Gen::A), std_w1.gen(Gen::Ap));
    CHECK(c2 == cs);
    CHECK(two_w1.commutator(two_w1.gen(Gen::N), two_w1.gen(Gen::Ap)) ==
          std_w1.commutator(std_w1.gen(Gen::N), std_w1.gen(Gen::Ap)));
    // two-parameter at K_h = 1 gives the nonstandard relations
    Algebra two_h1(Preset::two_parameter, {1, 4});
    Algebra non_h1(Preset::nonstandard_w, {1, 4});
    CHECK(two_h1.commutator(two_h1.gen(Gen::A), two_h1.gen(Gen::Ap)) ==
          non_h1.commutator(non_h1.gen(Gen::A), non_h1.gen(Gen::Ap)));
}

TEST_CASE("E is central") {
    for (Preset p : {Preset::standard_h, Preset::nonstandard_w, Preset::two_parameter}) {
        Algebra alg(p, {3, 3});
        for (int it = 0; it < 20; ++it) {
            auto x = random_element(alg);
            CHECK(alg.commutator(alg.gen(Gen::E), x).is_zero());
        }
    }
}

TEST_CASE("associativity on random elements") {
    for (Preset p : {Preset::standard_h, Preset::nonstandard_w, Preset::two_parameter}) {
        Algebra alg(p, {3, 3});
        for (int it = 0; it < 25; ++it) {
            auto x = random_element(alg), y = random_element(alg), z = random_element(alg);
            CHECK(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)));
        }
    }
}

TEST_CASE("coproduct of generators") {
    Algebra alg(Preset::two_parameter, {4, 4});
    auto one = alg.one();
    CHECK(alg.coproduct(alg.gen(Gen::E)) ==
          alg.tensor(alg.gen(Gen::E), one) + alg.tensor(one, alg.gen(Gen::E)));
    CHECK(alg.coproduct(one) == TensorElement::unit(2, alg.truncation()));
    // Delta(A) per the two-parameter structure
    auto dA = alg.coproduct(alg.gen(Gen::A));
    auto expect = alg.tensor(alg.gen(Gen::A), alg.mul(alg.exp_hE(1), alg.exp_wAp(1))) +
                  alg.tensor(alg.exp_hE(-1), alg.gen(Gen::A)) +
                  alg.tensor(alg.mul(alg.exp_hE(-1), alg.gen(Gen::N)) * alg.w_scalar(),
                             alg.mul(alg.sinh_hE_over_h(), alg.exp_wAp(1)));
    CHECK(dA == expect);
}

TEST_CASE("antipode of generators") {
    Algebra alg(Preset::two_parameter, {4, 4});
    CHECK(alg.antipode(alg.gen(Gen::E)) == -alg.gen(Gen::E));
    CHECK(alg.antipode(alg.one()) == alg.one());
    auto sA = alg.antipode(alg.gen(Gen::A));
    auto expect = -alg.mul(alg.gen(Gen::A), alg.exp_wAp(-1)) +
                  alg.mul(alg.gen(Gen::N), alg.mul(alg.sinh_hE_over_h(), alg.exp_wAp(-1))) *
                      alg.w_scalar();
    CHECK(sA == expect);
}

TEST_CASE("counit") {
    Algebra alg(Preset::two_parameter, {4, 4});
    CHECK(alg.counit(alg.gen(Gen::N)).is_zero());
    auto x = alg.one() + alg.gen(Gen::A) * TruncatedSeries::monomial(3, 1, 0, alg.truncation());
    CHECK(alg.counit(x) == TruncatedSeries::one(alg.truncation()));
    // eps(A * A+): every monomial of the normal form carries E or A+
    auto p = alg.mul(alg.gen(Gen::A), alg.gen(Gen::Ap));
    CHECK(alg.counit(p).is_zero());
}

TEST_CASE("Delta and eps are algebra maps, S an anti-map, on generator pairs") {
    for (Preset p : {Preset::standard_h, Preset::nonstandard_w, Preset::two_parameter}) {
        Algebra alg(p, {3, 3});
        const Gen gens[] = {Gen::E, Gen::Ap, Gen::N, Gen::A};
        for (Gen g1 : gens)
            for (Gen g2 : gens) {
                auto x = alg.gen(g1), y = alg.gen(g2);
                auto xy = alg.mul(x, y);
                CHECK(alg.coproduct(xy) ==
                      alg.tensor_mul(alg.coproduct(x), alg.coproduct(y)));
                CHECK(alg.counit(xy) == alg.counit(x) * alg.counit(y));
                CHECK(alg.antipode(xy) == alg.mul(alg.antipode(y), alg.antipode(x)));
            }
    }
}

TEST_CASE("tensor_mul basics") {
    Algebra alg(Preset::two_parameter, {3, 3});
    auto one = alg.one();
    auto a1 = alg.tensor(alg.gen(Gen::A), one);
    auto ap2 = alg.tensor(one, alg.gen(Gen::Ap));
    CHECK(alg.tensor_mul(a1, ap2) == alg.tensor(alg.gen(Gen::A), alg.gen(Gen::Ap)));
    auto x = alg.tensor(alg.gen(Gen::N), alg.gen(Gen::A));
    CHECK(alg.tensor_mul(TensorElement::unit(2, alg.truncation()), x) == x);
    // slotwise oracle: (A (x) 1) * (A+ (x) 1) = (A * A+) (x) 1
    auto lhs = alg.tensor_mul(a1, alg.tensor(alg.gen(Gen::Ap), one));
    CHECK(lhs == alg.tensor(alg.mul(alg.gen(Gen::A), alg.gen(Gen::Ap)), one));
}

TEST_CASE("embed slot conventions") {
    Algebra alg(Preset::two_parameter, {3, 3});
    auto ab = alg.tensor(alg.gen(Gen::A), alg.gen(Gen::N));
    auto e12 = alg.embed(ab, 12);
    auto e13 = alg.embed(ab, 13);
    TensorElement x12(3, alg.truncation()), x13(3, alg.truncation());
    x12.add({PBWMonomial{0, 0, 0, 1}, PBWMonomial{0, 0, 1, 0}, PBWMonomial{}},
            TruncatedSeries::one(alg.truncation()));
    x13.add({PBWMonomial{0, 0, 0, 1}, PBWMonomial{}, PBWMonomial{0, 0, 1, 0}},
            TruncatedSeries::one(alg.truncation()));
    CHECK(e12 == x12);
    CHECK(e13 == x13);
    CHECK_THROWS_AS(alg.embed(ab, 21), std::invalid_argument);
    CHECK(alg.embed(TensorElement::unit(2, alg.truncation()), 23) ==
          TensorElement::unit(3, alg.truncation()));
}

TEST_CASE("exp / log / inverse round-trips") {
    Algebra alg(Preset::two_parameter, {3, 3});
    auto x = alg.gen(Gen::N) * alg.w_scalar() +
             alg.mul(alg.gen(Gen::A), alg.gen(Gen::Ap)) * alg.h_scalar();
    auto ex = alg.exp(x);
    CHECK(alg.mul(ex, alg.exp(-x)) == alg.one());
    CHECK(alg.log(ex) == x);
    CHECK(alg.mul(alg.inverse(ex), ex) == alg.one());
    CHECK_THROWS_AS(alg.exp(alg.gen(Gen::A)), std::invalid_argument);
}

TEST_CASE("telescoping identity behind the N series") {
    // 2 sinh(hE) * sum_{k<K} e^{-(2k+1)hE} = 1 - e^{-2KhE}: the finite form of
    // the geometric series expressing N via A, A+, E.
    Algebra alg(Preset::two_parameter, {5, 2});
    const int K = 4;
    auto two_sinh = alg.sinh_hE_over_h() * alg.h_scalar() * Rational(2);
    auto sum = alg.zero();
    for (int k = 0; k < K; ++k)
        sum += alg.exp_hE(-(2 * k + 1));
    CHECK(alg.mul(two_sinh, sum) == alg.one() - alg.exp_hE(-2 * K));
}
