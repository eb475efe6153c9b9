#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qheis/rtt.hpp"

#include <cstdlib>
#include <random>

using namespace qheis;

namespace {

constexpr Truncation kT{3, 3};

std::mt19937_64 &rng() {
    static std::mt19937_64 gen = [] {
        const char *seed = std::getenv("QHEIS_SEED");
        return std::mt19937_64(seed ? std::strtoull(seed, nullptr, 10) : 20260826ull);
    }();
    return gen;
}

GroupGen random_gen() {
    static std::uniform_int_distribution<int> d(0, 4);
    return static_cast<GroupGen>(d(rng()));
}

} // namespace

TEST_CASE("defining relations of the function algebra") {
    GroupAlgebra alg(kT);
    const TruncatedSeries h = TruncatedSeries::h(kT), w = TruncatedSeries::w(kT);
    const GroupElement al = alg.gen(GroupGen::alpha), be = alg.gen(GroupGen::beta),
                       g = alg.gen(GroupGen::g), gb = alg.gen(GroupGen::gbar),
                       de = alg.gen(GroupGen::delta);

    CHECK(alg.commutator(al, be) == al * (h * Rational(2)) + alg.mul(al, al) * w);
    CHECK(alg.commutator(al, de) == alg.mul(al, g) * w);
    CHECK(alg.commutator(be, g) == -(alg.mul(al, g) * w));
    CHECK(alg.commutator(g, de) == alg.mul(g, g) * w - g * w);
    CHECK(alg.commutator(gb, de) == gb * w - alg.one() * w);
    CHECK(alg.commutator(be, de).is_zero());
    CHECK(alg.commutator(al, g).is_zero());
    CHECK(alg.commutator(al, gb).is_zero());

    // g gbar = gbar g = 1, applied eagerly
    CHECK(alg.mul(g, gb) == alg.one());
    CHECK(alg.mul(gb, g) == alg.one());
}

TEST_CASE("gbar-conjugates of the relations reduce to zero") {
    GroupAlgebra alg(kT);
    const TruncatedSeries h = TruncatedSeries::h(kT), w = TruncatedSeries::w(kT);
    const GroupElement al = alg.gen(GroupGen::alpha), be = alg.gen(GroupGen::beta),
                       g = alg.gen(GroupGen::g), gb = alg.gen(GroupGen::gbar);
    // gbar ([alpha,beta] - 2h alpha - w alpha^2) g = 0
    const GroupElement rel =
        alg.commutator(al, be) - al * (h * Rational(2)) - alg.mul(al, al) * w;
    CHECK(alg.mul(gb, alg.mul(rel, g)).is_zero());
}

TEST_CASE("T matrix has the unitriangular shape") {
    GroupAlgebra alg(kT);
    const TMatrix T = t_matrix(alg);
    CHECK(T[0][0] == alg.one());
    CHECK(T[2][2] == alg.one());
    for (int j = 0; j < 3; ++j) {
        CHECK(T[1][0].is_zero());
        CHECK(T[2][j == 2 ? 0 : j].is_zero());
    }
}

TEST_CASE("RTT residual vanishes entrywise") {
    const CheckReport r = check_rtt(kT);
    INFO(r.json_line());
    CHECK(r.pass);
}

TEST_CASE("deleting any single relation breaks the RTT equation") {
    for (int which = 0; which < 4; ++which) {
        GroupAlgebra::Relations rel;
        if (which == 0)
            rel.alpha_beta = false;
        if (which == 1)
            rel.alpha_delta = false;
        if (which == 2)
            rel.beta_g = false;
        if (which == 3)
            rel.g_delta = false;
        const CheckReport r = check_rtt(kT, rel);
        INFO("deleted relation ", which, ": ", r.json_line());
        CHECK(!r.pass);
        CHECK(r.residual_terms > 0);
    }
}

TEST_CASE("commutative limit is trivially consistent") {
    // with both deformation orders truncated away the algebra is commutative
    GroupAlgebra alg(Truncation{1, 1});
    const GroupElement al = alg.gen(GroupGen::alpha), be = alg.gen(GroupGen::beta),
                       de = alg.gen(GroupGen::delta);
    CHECK(alg.commutator(al, be).is_zero());
    CHECK(alg.commutator(al, de).is_zero());
    CHECK(check_rtt(Truncation{1, 1}).pass);
}

TEST_CASE("reduction is confluent on random words") {
    GroupAlgebra alg(kT);
    std::uniform_int_distribution<int> len(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<GroupGen> word(static_cast<std::size_t>(len(rng())));
        for (auto &x : word)
            x = random_gen();
        CHECK(alg.word(word) == alg.word_right_fold(word));
    }
}

TEST_CASE("multiplication is associative on random words") {
    GroupAlgebra alg(kT);
    std::uniform_int_distribution<int> len(1, 3);
    auto random_element = [&]() {
        std::vector<GroupGen> word(static_cast<std::size_t>(len(rng())));
        for (auto &x : word)
            x = random_gen();
        return alg.word(word);
    };
    for (int trial = 0; trial < 25; ++trial) {
        const GroupElement x = random_element(), y = random_element(), z = random_element();
        CHECK(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z)));
    }
}

TEST_CASE("Hopf structure of the function algebra") {
    const CheckReport r = check_group_hopf(kT);
    INFO(r.json_line());
    CHECK(r.pass);
}

TEST_CASE("one-parameter reductions of the function algebra") {
    const CheckReport r = check_reductions(kT);
    INFO(r.json_line());
    CHECK(r.pass);
}
