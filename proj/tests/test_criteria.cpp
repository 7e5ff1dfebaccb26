#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lagobs/criteria.hpp"
#include "oracles.hpp"

using namespace lagobs;

TEST_CASE("wide_check_biran_cornea") {
    CHECK(wide_check_biran_cornea(gauss_image_betti_g3(validate_family(3, 2, 2)).profile, 4));
    CHECK_FALSE(wide_check_biran_cornea(gauss_image_betti_g3(validate_family(3, 1, 1)).profile, 2));
    CHECK_FALSE(wide_check_biran_cornea(profile_from_dims({1, 0, 1, 0, 0}), 3));
    CHECK(wide_check_biran_cornea(profile_from_dims({1, 1, 0, 1, 1}), 3));
    // Unknown slot off the tested degrees is fine, on them it is not.
    CHECK(wide_check_biran_cornea(make_partial_profile(4, {{0, 1}, {2, 0}, {4, 1}}), 3));
    CHECK_THROWS_AS(wide_check_biran_cornea(make_partial_profile(4, {{0, 1}, {4, 1}}), 3), DomainError);
    CHECK_THROWS_AS(wide_check_biran_cornea(profile_from_dims({1, 1}), 1), DomainError);
}

TEST_CASE("damian_nondisplaceable") {
    for (int m1 = 2; m1 <= 6; ++m1)
        for (int m2 = m1; m2 <= 6; ++m2) {
            CAPTURE(m1);
            CAPTURE(m2);
            CHECK(damian_nondisplaceable(validate_family(4, m1, m2)).kind == VerdictKind::Contradiction);
        }
    CHECK(damian_nondisplaceable(validate_family(6, 2, 2)).kind == VerdictKind::Contradiction);
    CHECK(damian_nondisplaceable(validate_family(4, 1, 2)).kind == VerdictKind::NoContradiction);
    CHECK_THROWS_AS(damian_nondisplaceable(validate_family(4, 1, 1)), DomainError);
    CHECK_THROWS_AS(damian_nondisplaceable(validate_family(6, 1, 1)), DomainError);
}

TEST_CASE("volume_lower_bound") {
    using std::numbers::pi;
    CHECK(volume_lower_bound(1) == doctest::Approx(pi).epsilon(1e-14));
    CHECK(volume_lower_bound(2) == doctest::Approx(2 * pi).epsilon(1e-14));
    CHECK(volume_lower_bound(6) == doctest::Approx(8 * pi * pi * pi / 15).epsilon(1e-14));
    CHECK(volume_lower_bound(6) == doctest::Approx(16.5366).epsilon(1e-5));
    for (int n = 1; n <= 30; ++n) {
        const double expected = oracle::sphere_volume(n) / 2;
        CAPTURE(n);
        CHECK(std::abs(volume_lower_bound(n) - expected) / expected < 1e-12);
    }
    CHECK_THROWS_AS(volume_lower_bound(0), DomainError);
}

TEST_CASE("classify examples") {
    SUBCASE("(3,2,2) is wide with the volume bound") {
        const auto r = classify(validate_family(3, 2, 2));
        CHECK(r.status == CaseStatus::Wide);
        CHECK(r.intersects_real_form);
        REQUIRE(r.volume_lower_bound);
        CHECK(*r.volume_lower_bound == doctest::Approx(8 * std::pow(std::numbers::pi, 3) / 15).epsilon(1e-12));
        CHECK(r.justification.back().anchor == "biran-cornea-wideness");
    }
    SUBCASE("(4,2,2) is non-displaceable with replayable witness") {
        const auto r = classify(validate_family(4, 2, 2));
        CHECK(r.status == CaseStatus::NonDisplaceable);
        CHECK_FALSE(r.intersects_real_form);
        CHECK_FALSE(r.volume_lower_bound);
        const auto& step = r.justification.back();
        REQUIRE(step.verdict);
        CHECK(replay_witness(step.verdict->verdict, step.verdict->profile, step.verdict->maslov, step.verdict->nu));
    }
    SUBCASE("(6,1,1) stays open") {
        CHECK(classify(validate_family(6, 1, 1)).status == CaseStatus::Unresolved);
    }
    SUBCASE("real forms are wide by citation") {
        const auto r = classify(validate_family(2, 1, 3));
        CHECK(r.status == CaseStatus::Wide);
        REQUIRE(r.justification.size() == 1);
        CHECK(r.justification[0].source == StepSource::Cited);
        CHECK_FALSE(r.volume_lower_bound);
    }
    SUBCASE("(3,1,1) fails the wideness test") {
        const auto r = classify(validate_family(3, 1, 1));
        CHECK(r.status == CaseStatus::Unresolved);
        CHECK(r.justification.front().source == StepSource::Cited);
    }
}

TEST_CASE("classification invariants") {
    for (int bound = 2; bound <= 12; ++bound) {
        for (const auto& f : enumerate_families(bound)) {
            const auto r = classify(f);
            CAPTURE(to_string(f));
            const bool exceptional = (f.g == 3 && f.m1 == 1) || (f.g == 4 && f.m1 == 1) || (f.g == 6 && f.m1 == 1);
            CHECK((r.status == CaseStatus::Unresolved) == exceptional);

            if (r.status == CaseStatus::Wide) {
                const auto& last = r.justification.back();
                CHECK((last.anchor == "biran-cornea-wideness" || last.source == StepSource::Cited));
                if (f.g == 3) CHECK((f.n == 6 || f.n == 12 || f.n == 24));
                for (const auto& s : r.justification) CHECK(s.detail.find("does not vanish") == std::string::npos);
            } else {
                CHECK_FALSE(r.intersects_real_form);
            }
            if (r.status == CaseStatus::NonDisplaceable) {
                bool replayed = false;
                for (const auto& s : r.justification)
                    if (s.verdict && s.verdict->verdict.kind == VerdictKind::Contradiction)
                        replayed = replay_witness(s.verdict->verdict, s.verdict->profile, s.verdict->maslov, s.verdict->nu);
                CHECK(replayed);
            }
            CHECK(r.volume_lower_bound.has_value() == (f.g == 3 && r.status == CaseStatus::Wide));
        }
    }
}
