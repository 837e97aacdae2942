#include <doctest.h>

#include <random>

#include "arbor/closure.hpp"
#include "arbor/error.hpp"

using namespace arbor;

namespace {

MorphismSet random_subset(const LinearQuiver& q, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution coin(density);
    MorphismSet w(q);
    for (const auto& f : all_morphisms(q, false).members()) {
        if (coin(rng)) w.insert(f);
    }
    return w;
}

}  // namespace

TEST_CASE("two crossing arrows saturate the whole quiver") {
    const auto q = make_quiver(2);
    const auto w = parse_morphism_set(q, "0->2,1->3");
    const auto c = closure_2of6(q, w);
    CHECK(c.is_full());
    CHECK(c.members() == brute_force_minimal_closed_superset(q, w).members());
    CHECK(c.passes() == 2);
    CHECK(c.provenance() == w);
    REQUIRE(c.trace().size() == 4);
    CHECK(c.trace()[0] == SaturationStep{{0, 1}, 1, {0, 1, 2, 3}});
    CHECK(c.step_for({0, 3})->round == 1);
    CHECK_FALSE(c.step_for({0, 2}).has_value());
}

TEST_CASE("one arrow is already closed") {
    const auto q = make_quiver(2);
    const auto w = parse_morphism_set(q, "0->2");
    const auto c = closure_2of6(q, w);
    CHECK(to_string(c.members()) == "0->0,0->2,1->1,2->2,3->3");
    CHECK(c.passes() == 1);
    CHECK(c.trace().empty());
}

TEST_CASE("the empty set closes to the identities") {
    for (int n = 1; n <= 5; ++n) {
        const auto q = make_quiver(n);
        CHECK(closure_2of6(q, MorphismSet(q)).members() == MorphismSet::identities(q));
    }
}

TEST_CASE("crossing arrows at n=3 leave the last object alone") {
    const auto q = make_quiver(3);
    const auto c = closure_2of6(q, parse_morphism_set(q, "0->2,1->3"));
    CHECK(to_string(c.members()) == "0->0,0->1,0->2,0->3,1->1,1->2,1->3,2->2,2->3,3->3,4->4");
}

TEST_CASE("number of closed sets per n") {
    // Enumerated by the rule-mask oracle.
    const std::size_t expected[] = {5, 14, 42, 132};
    for (int n = 1; n <= 4; ++n) {
        CHECK(enumerate_closed_sets(make_quiver(n)).size() == expected[n - 1]);
    }
}

TEST_CASE("closed sets agree with the closedness predicate") {
    for (int n = 1; n <= 3; ++n) {
        const auto q = make_quiver(n);
        const std::uint64_t count = std::uint64_t{1} << q.non_identity_count();
        std::size_t closed = 0;
        for (std::uint64_t m = 0; m < count; ++m) {
            const auto s = MorphismSet::from_non_identity_mask(q, m) | MorphismSet::identities(q);
            if (is_two_of_six_closed(q, s)) ++closed;
        }
        CHECK(closed == enumerate_closed_sets(q).size());
    }
}

TEST_CASE("closure properties on random sets") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 6; ++n) {
        const auto q = make_quiver(n);
        for (int trial = 0; trial < 60; ++trial) {
            const auto w = random_subset(q, rng, 0.25);
            const auto c = closure_2of6(q, w);
            CAPTURE(to_string(w));
            CHECK(w.is_subset_of(c.members()));
            CHECK(is_two_of_six_closed(q, c.members()));
            // Idempotent.
            CHECK(closure_2of6(q, c.members().without_identities()).members() == c.members());
            // Monotone.
            auto bigger = w;
            bigger.insert(q.non_identity_at(static_cast<std::size_t>(trial) % q.non_identity_count()));
            CHECK(c.members().is_subset_of(closure_2of6(q, bigger).members()));
            // Every traced step is justified by its quadruple.
            for (const auto& s : c.trace()) {
                const auto [a, b, cc, d] = s.quadruple;
                CHECK(a <= b);
                CHECK(b <= cc);
                CHECK(cc <= d);
                CHECK(c.contains({a, cc}));
                CHECK(c.contains({b, d}));
            }
        }
    }
}

TEST_CASE("brute force agrees at n=5 on random sets") {
    std::mt19937_64 rng(11);
    const auto q = make_quiver(5);
    for (int trial = 0; trial < 12; ++trial) {
        const auto w = random_subset(q, rng, 0.3);
        CAPTURE(to_string(w));
        CHECK(closure_2of6(q, w).members() == brute_force_minimal_closed_superset(q, w).members());
    }
}

TEST_CASE("closure input validation") {
    const auto q = make_quiver(2);
    CHECK_THROWS_AS(closure_2of6(q, MorphismSet(make_quiver(3))), DomainError);
    CHECK_THROWS_AS(brute_force_minimal_closed_superset(make_quiver(6), MorphismSet(make_quiver(6))),
                    CapacityError);
    CHECK_THROWS_AS(ClosedMorphismSet::from_closed(parse_morphism_set(q, "0->2,1->3")), DomainError);
    const auto closed = closure_2of6(q, parse_morphism_set(q, "0->2")).members();
    CHECK(ClosedMorphismSet::from_closed(closed).members() == closed);
    CHECK_THROWS_AS(ClosedMorphismSet::restore(closed, parse_morphism_set(q, "1->3"), 1, {}),
                    DomainError);
}
