#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qheis/series.hpp"

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

TruncatedSeries random_series(Truncation t, int max_terms = 5) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> da(0, t.kh - 1), db(0, t.kw - 1);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    TruncatedSeries s(t);
    const int n = nt(rng());
    for (int q = 0; q < n; ++q)
        s.add_term(da(rng()), db(rng()), Rational(num(rng()), den(rng())));
    return s;
}

} // namespace

TEST_CASE("add: disjoint supports, inverses, like terms") {
    Truncation t{4, 4};
    auto h = TruncatedSeries::h(t), w = TruncatedSeries::w(t);
    auto hw = h * w;
    CHECK(h + w == TruncatedSeries::monomial(1, 1, 0, t) + TruncatedSeries::monomial(1, 0, 1, t));
    CHECK((h + (-h)).is_zero());
    auto one = TruncatedSeries::one(t);
    auto lhs = (one + hw) + hw;
    TruncatedSeries expect(t);
    expect.add_term(0, 0, 1);
    expect.add_term(1, 1, 2);
    CHECK(lhs == expect);
}

TEST_CASE("add rejects mismatched truncations") {
    auto x = TruncatedSeries::h({4, 4});
    auto y = TruncatedSeries::h({3, 4});
    CHECK_THROWS_AS(x + y, std::invalid_argument);
}

TEST_CASE("mul: cauchy product with truncation") {
    Truncation t22{2, 2};
    auto h = TruncatedSeries::h(t22), w = TruncatedSeries::w(t22);
    CHECK(h * w == TruncatedSeries::monomial(1, 1, 1, t22));
    CHECK((h * h).is_zero()); // h^2 truncated at kh = 2

    Truncation t34{3, 4};
    auto one = TruncatedSeries::one(t34);
    auto hh = TruncatedSeries::h(t34);
    auto prod = (one + hh) * (one - hh);
    TruncatedSeries expect(t34);
    expect.add_term(0, 0, 1);
    expect.add_term(2, 0, -1);
    CHECK(prod == expect);
}

TEST_CASE("exp_series") {
    Truncation t{3, 4};
    CHECK(exp_series(TruncatedSeries(t)) == TruncatedSeries::one(t));

    auto e = exp_series(TruncatedSeries::h(t));
    TruncatedSeries expect(t);
    expect.add_term(0, 0, 1);
    expect.add_term(1, 0, 1);
    expect.add_term(2, 0, Rational(1, 2));
    CHECK(e == expect);

    Truncation t22{2, 2};
    auto ehw = exp_series(TruncatedSeries::monomial(1, 1, 1, t22));
    TruncatedSeries expect2(t22);
    expect2.add_term(0, 0, 1);
    expect2.add_term(1, 1, 1);
    CHECK(ehw == expect2);

    CHECK_THROWS_AS(exp_series(TruncatedSeries::one(t)), std::invalid_argument);
}

TEST_CASE("sinh_over") {
    Truncation t{4, 4};
    auto s1 = sinh_over(TruncatedSeries::one(t), Param::h);
    TruncatedSeries expect(t);
    expect.add_term(0, 0, 1);
    expect.add_term(2, 0, Rational(1, 6));
    CHECK(s1 == expect);

    CHECK(sinh_over(TruncatedSeries(t), Param::h).is_zero());

    auto s2 = sinh_over(TruncatedSeries::constant(2, t), Param::h);
    TruncatedSeries expect2(t);
    expect2.add_term(0, 0, 2);
    expect2.add_term(2, 0, Rational(8, 6));
    CHECK(s2 == expect2);
}

TEST_CASE("ring axioms on random series") {
    Truncation t{4, 4};
    for (int it = 0; it < 200; ++it) {
        auto x = random_series(t), y = random_series(t), z = random_series(t);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
    }
}

TEST_CASE("exp(x) * exp(-x) == 1 for nilpotent x") {
    Truncation t{4, 4};
    for (int it = 0; it < 100; ++it) {
        auto x = random_series(t) * TruncatedSeries::h(t) +
                 random_series(t) * TruncatedSeries::w(t);
        CHECK(exp_series(x) * exp_series(-x) == TruncatedSeries::one(t));
    }
}

TEST_CASE("truncation is a ring homomorphism") {
    Truncation big{4, 4}, small{2, 3};
    for (int it = 0; it < 100; ++it) {
        auto x = random_series(big), y = random_series(big);
        CHECK((x * y).truncate(small) == x.truncate(small) * y.truncate(small));
        CHECK((x + y).truncate(small) == x.truncate(small) + y.truncate(small));
    }
}

TEST_CASE("rendering uses p/q rationals") {
    Truncation t{4, 4};
    TruncatedSeries s(t);
    s.add_term(0, 0, Rational(1, 2));
    s.add_term(2, 1, Rational(-3, 7));
    CHECK(s.str() == "1/2 + -3/7 * h^2 * w^1");
    CHECK(TruncatedSeries(t).str() == "0");
}
