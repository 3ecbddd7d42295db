#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixkit/error.hpp"
#include "fixkit/mapping.hpp"

using namespace fixkit;

TEST_CASE("T1 shifts by one and has no fixed point") {
    const Mapping t = make_t1();
    CHECK(t.apply(Vector{0}) == Vector{1});
    CHECK(t.apply(Vector{1}) == Vector{2});
    CHECK(t.fixed_points().kind() == FixedPointSet::Kind::Empty);
}

TEST_CASE("T2 reflects about 1") {
    const Mapping t = make_t2();
    CHECK(t.apply(Vector{0}) == Vector{2});
    CHECK(t.apply(Vector{1}) == Vector{1});
    CHECK(t.apply(Vector{2}) == Vector{0});
    CHECK(t.fixed_points().points() == std::vector<Vector>{Vector{1}});
}

TEST_CASE("T3 is the reciprocal on [1/2, 2]") {
    const Mapping t = make_t3();
    CHECK(t.apply(Vector{0.5}) == Vector{2});
    CHECK(t.apply(Vector{1}) == Vector{1});
    CHECK(t.apply(Vector{2}) == Vector{0.5});
    CHECK(t.domain().lo() == std::vector<double>{0.5});
}

TEST_CASE("T4") {
    const Mapping t = make_t4();
    CHECK(t.apply(Vector{0}) == Vector{2});
    CHECK(t.apply(Vector{1.0 / 3.0})[0] == doctest::Approx(19.0 / 12.0).epsilon(1e-15));
    CHECK(t.apply(Vector{2}) == Vector{2});
    // |T4 0 - T4(1/3)| = 5/12
    CHECK(std::abs(t.apply(Vector{0})[0] - t.apply(Vector{1.0 / 3.0})[0]) == doctest::Approx(5.0 / 12.0));
}

TEST_CASE("T5 jumps at 1") {
    const Mapping t = make_t5();
    CHECK(t.apply(Vector{0.999}) == Vector{0.875});
    CHECK(t.apply(Vector{std::nextafter(1.0, 0.0)}) == Vector{0.875});
    CHECK(t.apply(Vector{1}) == Vector{0.25});
    CHECK(t.apply(Vector{0.875}) == Vector{0.875});
}

TEST_CASE("scaled reflection") {
    const Mapping t = make_scaled_reflection(3, 1);
    CHECK(t.apply(Vector{1}) == Vector{-3});
    REQUIRE(t.known_dc_constant());
    CHECK(*t.known_dc_constant() == 0.5);
    CHECK(t.fixed_points().points() == std::vector<Vector>{Vector{0}});
    CHECK(t.domain().kind() == Domain::Kind::WholeSpace);

    try {
        make_scaled_reflection(1.0, 2);
        FAIL("expected alpha-out-of-range");
    } catch (const Error& e) {
        CHECK(e.code() == "alpha-out-of-range");
    }
    CHECK_THROWS_AS(make_scaled_reflection(0.5, 1), Error);
}

TEST_CASE("reflection composition law") {
    for (double alpha : {1.5, 2.0, 3.0, 10.0}) {
        for (std::size_t dim = 1; dim <= 4; ++dim) {
            const Mapping t = make_scaled_reflection(alpha, dim);
            for (const Vector& x : random_sample(t.domain(), 50, dim)) {
                const Vector twice = t.apply(t.apply(x));
                for (std::size_t i = 0; i < dim; ++i) {
                    CHECK(std::abs(twice[i] - alpha * alpha * x[i]) <= 1e-12 * std::max(1.0, std::abs(twice[i])));
                }
            }
        }
    }
}

TEST_CASE("declared gallery fixed points are exact") {
    std::vector<Mapping> all = example_gallery();
    all.push_back(make_scaled_reflection(2.0, 3));
    std::set<std::string> labels;
    for (const Mapping& t : all) {
        labels.insert(t.label());
        for (const Vector& p : t.fixed_points().points()) {
            CHECK(distance(t.apply(p), p) == 0.0);
        }
    }
    CHECK(labels.size() == all.size());
}

TEST_CASE("apply is deterministic") {
    for (const Mapping& t : example_gallery()) {
        for (const Vector& x : random_sample(t.domain(), 20, 9)) {
            CHECK(t.apply(x) == t.apply(x));
        }
    }
}

TEST_CASE("labels resolve") {
    CHECK(mapping_from_label("t3").label() == "t3");
    const Mapping r = mapping_from_label("reflection:2.5:3");
    CHECK(r.domain().dim() == 3);
    CHECK(r.apply(Vector{1, 0, -2}) == Vector{-2.5, 0, 5});
    CHECK(mapping_from_label("reflection:3", 4).domain().dim() == 4);
    CHECK(mapping_from_label("reflection:3:1").label() == "reflection:3:1");

    for (const char* bad : {"nosuch", "t6", "reflection:", "reflection:x:1", "reflection:3:", "reflection:3:a"}) {
        try {
            mapping_from_label(bad);
            FAIL("expected unknown-mapping for " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == "unknown-mapping");
        }
    }
}

TEST_CASE("user mapping with a wrong declared fixed point is rejected") {
    auto build = [] {
        return Mapping("half", Domain::interval(0, 1), [](const Vector& x) { return 0.5 * x; },
                       FixedPointSet::known({Vector{0.5}}));
    };
    CHECK_THROWS_AS(build(), Error);
    const Mapping ok("half", Domain::interval(0, 1), [](const Vector& x) { return 0.5 * x; },
                     FixedPointSet::known({Vector{0}}));
    CHECK(ok.apply(Vector{1}) == Vector{0.5});
    CHECK_THROWS_AS(ok.apply(Vector{1, 1}), Error);
}

TEST_CASE("self-map audit") {
    CHECK(check_self_map(make_t2(), 101, 1).pass);
    CHECK(check_self_map(make_t5(), 101, 1).pass);
    CHECK(check_self_map(make_t3(), 101, 1).pass);
    CHECK(check_self_map(make_t4(), 101, 1).pass);
    CHECK(check_self_map(make_scaled_reflection(3, 2), 100, 1).pass);

    const SelfMapAudit t1 = check_self_map(make_t1(), 101, 1);
    CHECK_FALSE(t1.pass);
    // T1 0 = 1 is still inside [0, 1]; every other point leaves.
    CHECK(t1.violations.size() == t1.evaluated - 1);
    bool found_half = false;
    for (const auto& v : t1.violations) {
        CHECK(v.x[0] > 0.0);
        if (v.x == Vector{0.5}) {
            found_half = true;
            CHECK(v.image == Vector{1.5});
        }
    }
    CHECK(found_half);
}
