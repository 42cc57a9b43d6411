#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kp/json_io.hpp"
#include "oracles.hpp"

using kp::json;
using kp::Permutation;
using kp::SparsePoly;

TEST_CASE("polynomial JSON round trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        SparsePoly f = oracles::random_poly(rng, 4, 5, 6);
        // keys must be nonnegative for the wire format
        SparsePoly g = f * f + SparsePoly::constant(3);
        CHECK(kp::poly_from_json(kp::poly_to_json(g)) == g);
    }
    // huge coefficients survive the string encoding
    SparsePoly big = kp::Int("123456789123456789123456789") * SparsePoly::variable(2);
    CHECK(kp::poly_from_json(kp::poly_to_json(big)) == big);
    // the wrapped form is also accepted
    CHECK(kp::poly_from_json(json{{"terms", kp::poly_to_json(big)}}) == big);
}

TEST_CASE("polynomial JSON shape") {
    json j = kp::poly_to_json(SparsePoly::monomial({2}));
    CHECK(j == json::parse(R"([{"c":"1","e":[2]}])"));
}

TEST_CASE("expansion JSON") {
    kp::SchubertExpansion e{{Permutation({3, 1, 2}), 1}};
    json j = kp::expansion_to_json(e);
    CHECK(j == json::parse(R"({"terms":[{"coeff":"1","perm":[3,1,2]}]})"));
    CHECK(kp::expansion_from_json(j) == e);
    // identity permutation serializes as [1]
    kp::SchubertExpansion id_exp{{Permutation(), 2}};
    CHECK(kp::expansion_from_json(kp::expansion_to_json(id_exp)) == id_exp);
}

TEST_CASE("module JSON carries shape, weights and actions") {
    kp::WeightModule m = kp::kp_module(Permutation::simple(2), 3);
    json j = kp::module_to_json(m);
    CHECK(j.at("dim").get<std::size_t>() == 2);
    CHECK(j.at("rank").get<int>() == 3);
    CHECK(j.at("weights").size() == 2);
    CHECK(j.at("action").contains("e_1_2"));
}

TEST_CASE("certificate round trip and re-verification") {
    kp::FiltrationCertificate cert = kp::monk_filtration(Permutation({1, 3, 2}), 1, 3);
    REQUIRE(cert.passed());
    json j = kp::certificate_to_json(cert);
    kp::FiltrationCertificate back = kp::certificate_from_json(j);
    CHECK(kp::certificate_to_json(back) == j);
    CHECK(kp::verify_certificate_json(j).empty());

    kp::FiltrationCertificate icert = kp::iterated_monk_filtration(Permutation::simple(2), {1}, 3);
    REQUIRE(icert.passed());
    CHECK(kp::verify_certificate_json(kp::certificate_to_json(icert)).empty());
}

TEST_CASE("tampered certificates are rejected") {
    kp::FiltrationCertificate cert = kp::monk_filtration(Permutation::simple(1), 1, 2);
    json j = kp::certificate_to_json(cert);

    json wrong_char = j;
    wrong_char["steps"][0]["character"][0]["c"] = "2";
    CHECK_FALSE(kp::verify_certificate_json(wrong_char).empty());

    json wrong_dim = j;
    wrong_dim["steps"][0]["dim_F"] = 5;
    CHECK_FALSE(kp::verify_certificate_json(wrong_dim).empty());

    json wrong_flag = j;
    wrong_flag["checks"]["generation"] = false;
    CHECK_FALSE(kp::verify_certificate_json(wrong_flag).empty());

    json wrong_label = j;
    wrong_label["steps"][0]["label"] = json::array({2, 1});
    CHECK_FALSE(kp::verify_certificate_json(wrong_label).empty());
}
