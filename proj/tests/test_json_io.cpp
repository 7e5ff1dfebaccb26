#include <doctest.h>

#include "lagobs/json_io.hpp"

using namespace lagobs;

TEST_CASE("profile JSON schema") {
    const auto j = profile_to_json(munzner_betti_N(validate_family(6, 2, 2)));
    CHECK(j.at("n") == 12);
    CHECK(j.at("cap").is_null());
    CHECK(j.at("known") == json::parse("[[0,1],[3,0],[6,2],[9,0],[12,1]]"));

    const auto full = profile_to_json(profile_from_dims({1, 0, 1}));
    CHECK(full.at("known") == json::parse("[[0,1],[1,0],[2,1]]"));

    const auto capped = profile_from_json(json::parse(R"({"n": 2, "known": [[0, 1]], "cap": 4})"));
    CHECK(capped.at(1) == DimBound::between(0, 3));
    CHECK(capped.cap() == 4);
    CHECK(profile_from_json(profile_to_json(capped)) == capped);
}

TEST_CASE("profile JSON errors") {
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"n": 2})")), FormatError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"n": 2, "known": [[3, 1]]})")), FormatError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"n": "x", "known": []})")), FormatError);
    CHECK_THROWS_AS(profile_from_json(json::parse("[1, 2]")), FormatError);

    // Interval slots not expressible through known/cap.
    const BettiProfile odd(1, {DimBound::exactly(1), DimBound::between(1, 2)});
    CHECK_THROWS_AS(profile_to_json(odd), DomainError);
}

TEST_CASE("verdict JSON round trip and schema") {
    const auto h = munzner_betti_N(validate_family(4, 2, 2));
    const VerdictRecord rec{h, 4, 2, propagate_narrow(h, 4, 8, 2)};
    const auto j = verdict_to_json(rec);
    CHECK(j.at("kind") == "Contradiction");
    CHECK(j.at("slot") == 4);
    CHECK(j.at("page") == 3);
    CHECK(j.at("witness").at("lower_bound") == 2);
    CHECK(verdict_from_json(j) == rec);
    CHECK(verdict_from_json(json::parse(j.dump())) == rec);

    const auto f = profile_from_dims({1, 1, 1, 2, 1, 1, 1});
    const VerdictRecord feas{f, 3, 2, oracle_narrow_feasible(f, 3, 2)};
    CHECK(verdict_from_json(verdict_to_json(feas)) == feas);
    const VerdictRecord infeas{h, 4, 2, oracle_narrow_feasible(h, 4, 2)};
    CHECK(verdict_from_json(verdict_to_json(infeas)) == infeas);
    const VerdictRecord none{f, 3, 2, propagate_narrow(f, 3, 6, 2)};
    CHECK(verdict_to_json(none).at("slot").is_null());
    CHECK(verdict_from_json(verdict_to_json(none)) == none);

    const auto g6 = munzner_betti_N(validate_family(6, 2, 2));
    const VerdictRecord partial{g6, 4, 3, propagate_narrow(g6, 4, 12, 3)};
    CHECK(verdict_from_json(json::parse(verdict_to_json(partial).dump())) == partial);
}

TEST_CASE("verdict JSON errors") {
    CHECK_THROWS_AS(verdict_from_json(json::parse(R"({"kind": "Maybe"})")), FormatError);
    auto j = verdict_to_json(VerdictRecord{profile_from_dims({1, 0, 0, 1}), 6, 0,
                                           propagate_narrow(profile_from_dims({1, 0, 0, 1}), 6, 3, 0)});
    j["witness"].erase("chain");
    CHECK_THROWS_AS(verdict_from_json(j), FormatError);
}

TEST_CASE("report JSON round trip") {
    for (const auto& f : enumerate_families(8)) {
        const auto r = classify(f);
        const auto j = report_to_json(r);
        CAPTURE(to_string(f));
        for (const char* key : {"family", "status", "justification", "intersects_real_form", "volume_lower_bound"})
            CHECK(j.contains(key));
        CHECK(report_from_json(json::parse(j.dump())) == r);
    }
}

TEST_CASE("family JSON") {
    CHECK(family_from_json(json::parse(R"({"g": 4, "m1": 1, "m2": 2, "n": 6})")) == validate_family(4, 1, 2));
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"g": 4, "m1": 1, "m2": 2, "n": 7})")), FormatError);
    CHECK_THROWS_AS(family_from_json(json::parse(R"({"g": 5, "m1": 1, "m2": 1})")), FormatError);
}

TEST_CASE("gauss image JSON") {
    const auto j = gauss_image_to_json(gauss_image_data(validate_family(3, 1, 1)));
    CHECK(j.at("maslov") == 2);
    CHECK(j.at("nu") == 2);
    CHECK(j.at("betti_L").at("cited") == true);
    CHECK(j.at("cited").size() == 1);
    CHECK(gauss_image_to_json(gauss_image_data(validate_family(6, 1, 1))).at("betti_N").is_null());
}
