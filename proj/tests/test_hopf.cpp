#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qheis/hopf_checks.hpp"

#include <nlohmann/json.hpp>

using namespace qheis;

namespace {
const std::vector<Preset> kPresets{Preset::standard_h, Preset::nonstandard_w,
                                   Preset::two_parameter};
constexpr Truncation kCube{3, 3};  // arity-3 identities
constexpr Truncation kSquare{4, 4}; // arity-2 / element identities
} // namespace

TEST_CASE("Hopf axioms hold on generators and products for every preset") {
    for (Preset p : kPresets) {
        const CheckReport r = check_hopf_axioms(p, kCube);
        INFO(r.json_line());
        CHECK(r.pass);
        CHECK(r.residual_terms == 0);
    }
}

TEST_CASE("universal R-matrix is quasitriangular for every preset") {
    for (Preset p : kPresets) {
        const CheckReport r = check_quasitriangular(p, kCube);
        INFO(r.json_line());
        CHECK(r.pass);
    }
}

TEST_CASE("universal R-matrix satisfies the Yang-Baxter equation") {
    for (Preset p : kPresets) {
        const CheckReport r = check_qybe(p, kCube);
        INFO(r.json_line());
        CHECK(r.pass);
    }
}

TEST_CASE("spectral Yang-Baxter holds only at the trivial spectral point") {
    // With both exponentiated spectral parameters equal to 1 the matrix
    // degenerates to the constant one and the equation holds.
    CHECK(check_spectral_qybe(1, 1, kCube).pass);
    // At generic spectral points the residual is genuinely nonzero at the
    // mixed h*w order: the rescaling of the lowering generator is not an
    // algebra automorphism once both deformations are switched on.
    const CheckReport r = check_spectral_qybe(2, 3, kCube);
    INFO(r.json_line());
    CHECK(!r.pass);
    CHECK(r.residual_terms > 0);
    CHECK(!check_spectral_qybe(Rational(1, 2), Rational(1, 2), kCube).pass);
}

TEST_CASE("twist cocycle conditions and coproduct conjugation") {
    const CheckReport r = check_twist_conditions(kCube);
    INFO(r.json_line());
    CHECK(r.pass);
}

TEST_CASE("v element: closed forms, twisted antipode, grouplike identities") {
    const CheckReport r = check_v_element(kSquare);
    INFO(r.json_line());
    CHECK(r.pass);
}

TEST_CASE("u element and ribbon element for every preset") {
    for (Preset p : kPresets) {
        const CheckReport r = check_u_ribbon(p, kSquare);
        INFO(r.json_line());
        CHECK(r.pass);
    }
}

TEST_CASE("Casimir elements are central") {
    const CheckReport r = check_casimir(kSquare);
    INFO(r.json_line());
    CHECK(r.pass);
}

TEST_CASE("check reports serialize to the documented JSON line") {
    const CheckReport r = check_qybe(Preset::standard_h, Truncation{2, 2});
    const auto j = nlohmann::json::parse(r.json_line());
    CHECK(j.at("check") == "qybe");
    CHECK(j.at("preset") == "standard-h");
    CHECK(j.at("K_h") == 2);
    CHECK(j.at("K_w") == 2);
    CHECK(j.at("residual_terms") == 0);
    CHECK(j.at("pass") == true);
    CHECK(j.at("ms").is_number());
}
