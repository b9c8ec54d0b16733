#include <doctest.h>

#include "postnikov/json_io.hpp"

using namespace postnikov;
using BAP = BoundedAffinePermutation;

TEST_CASE("permutation JSON round trip") {
    const auto w = BAP::validate({4, 6, 5, 7, 8, 9});
    const json j = to_json(w);
    CHECK(j["n"] == 6);
    CHECK(j["k"] == 3);
    CHECK(permutation_from_json(j) == w);
    json bad = j;
    bad["k"] = 2;
    CHECK_THROWS_AS(permutation_from_json(bad), BadInput);
}

TEST_CASE("window parsing") {
    CHECK(parse_window("4,6,5,7,8,9").window() == std::vector<int>{4, 6, 5, 7, 8, 9});
    CHECK_THROWS_AS(parse_window("3,8,7,6,2,10,9,14,13"), BoundsViolation);
    CHECK_THROWS_AS(parse_window("1,a"), BadInput);
}

TEST_CASE("quiver JSON round trip") {
    const auto q = IceQuiver::make({{"M1", false}, {"F1", true}, {"M2", false}},
                                   {{"M1", "M2", 2}, {"F1", "M1", 1}});
    const json j = to_json(q);
    CHECK(quiver_from_json(j) == q);
    CHECK(to_json(quiver_from_json(j)) == j);
}

TEST_CASE("plabic JSON round trip") {
    const auto w = BAP::validate({4, 6, 5, 7, 8, 9});
    const auto g = construct_diagram(w);
    const json j = to_json(g);
    const auto back = plabic_from_json(j);
    CHECK(back.trip_permutation() == w);
    CHECK(back.canonical_string() == g.canonical_string());
    CHECK(to_json(back) == j);
}

TEST_CASE("certificate JSON round trip and verification") {
    const auto w = BAP::validate({4, 6, 5, 7, 8, 9});
    const auto cert = certify(w);
    const json j = to_json(cert);
    const auto back = certificate_from_json(j);
    CHECK(verify(back).ok);
    CHECK(to_json(back) == j);

    json tampered = j;
    tampered["case"] = "ShortArc";
    CHECK_FALSE(verify(certificate_from_json(tampered)).ok);
    json garbage = j;
    garbage["case"] = "Nonsense";
    CHECK_THROWS_AS(certificate_from_json(garbage), BadInput);
}

TEST_CASE("quiver certificate JSON round trip") {
    const auto cyc = IceQuiver::make({{"a", false}, {"b", false}, {"c", false}},
                                     {{"a", "b", 1}, {"b", "c", 1}, {"c", "a", 1}});
    const auto r = banff_search(cyc);
    REQUIRE(r.status == BanffStatus::Found);
    const json j = to_json(r.certificate);
    const auto back = quiver_certificate_from_json(j);
    CHECK(check_quiver_certificate(cyc, *back.root));
    CHECK(to_json(back) == j);
}
