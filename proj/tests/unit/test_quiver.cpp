#include <doctest.h>

#include "arbor/error.hpp"
#include "arbor/quiver.hpp"

using namespace arbor;

TEST_CASE("quiver sizes") {
    const auto q = make_quiver(2);
    CHECK(q.size() == 4);
    CHECK(q.ambient_n() == 2);
    CHECK(q.morphism_count() == 10);
    CHECK(q.non_identity_count() == 6);
    CHECK_THROWS_AS(make_quiver(0), DomainError);
    CHECK_THROWS_AS(LinearQuiver(1), DomainError);
    CHECK_THROWS_AS(LinearQuiver(65), CapacityError);
}

TEST_CASE("canonical index is row-major over the upper triangle") {
    const auto q = make_quiver(2);
    CHECK(q.index_of({0, 0}) == 0);
    CHECK(q.index_of({0, 3}) == 3);
    CHECK(q.index_of({1, 1}) == 4);
    CHECK(q.index_of({2, 3}) == 8);
    CHECK(q.index_of({3, 3}) == 9);
    CHECK(q.non_identity_index({0, 1}) == 0);
    CHECK(q.non_identity_index({1, 2}) == 3);
    CHECK(q.non_identity_index({2, 3}) == 5);
    CHECK_THROWS_AS(q.index_of({2, 1}), DomainError);
    CHECK_THROWS_AS(q.non_identity_index({1, 1}), DomainError);
}

TEST_CASE("index and morphism_at are inverse bijections") {
    for (int s = 2; s <= 12; ++s) {
        const LinearQuiver q(s);
        std::size_t expect = 0;
        for (int a = 0; a < s; ++a) {
            for (int b = a; b < s; ++b) {
                REQUIRE(q.index_of({a, b}) == expect);
                REQUIRE(q.morphism_at(expect) == Morphism{a, b});
                ++expect;
            }
        }
        CHECK(expect == q.morphism_count());
        for (std::size_t i = 0; i < q.non_identity_count(); ++i) {
            REQUIRE(q.non_identity_index(q.non_identity_at(i)) == i);
        }
    }
}

TEST_CASE("composition in the thin category") {
    const auto q = make_quiver(3);
    CHECK(q.compose({0, 2}, {2, 4}) == Morphism{0, 4});
    CHECK(compose(q, {1, 1}, {1, 3}) == Morphism{1, 3});
    CHECK_THROWS_AS(q.compose({0, 2}, {1, 4}), CompositionError);
    CHECK_THROWS_AS(q.compose({0, 2}, {2, 9}), DomainError);
}

TEST_CASE("morphism set algebra") {
    const auto q = make_quiver(2);
    MorphismSet a(q, {{0, 1}, {1, 3}});
    MorphismSet b(q, {{1, 3}, {2, 3}});
    CHECK((a | b).count() == 3);
    CHECK((a & b).count() == 1);
    CHECK((a & b).contains({1, 3}));
    CHECK(a.non_identity_mask() == 0b10001);
    CHECK(MorphismSet::from_non_identity_mask(q, 0b10001) == a);
    CHECK(MorphismSet::identities(q).count() == 4);
    CHECK(MorphismSet::identities(q).contains_all_identities());
    CHECK_FALSE(a.has_identity_member());
    CHECK((a | MorphismSet::identities(q)).without_identities() == a);
    CHECK(a.is_subset_of(a | b));
    CHECK_FALSE((a | b).is_subset_of(a));
    a.erase({0, 1});
    CHECK(a.count() == 1);
    CHECK_THROWS_AS(a.insert({0, 7}), DomainError);
    CHECK_THROWS_AS((void)(a | MorphismSet(make_quiver(3))), DomainError);
    CHECK(all_morphisms(q, true).count() == 10);
    CHECK(all_morphisms(q, false).count() == 6);
}

TEST_CASE("text encoding") {
    const auto q = make_quiver(2);
    CHECK(to_string(Morphism{1, 3}) == "1->3");
    CHECK(parse_morphism(" 2 -> 3 ") == Morphism{2, 3});
    const auto w = parse_morphism_set(q, "1->3, 0->2");
    CHECK(to_string(w) == "0->2,1->3");
    CHECK(to_string(MorphismSet(q)).empty());
    CHECK(parse_morphism_set(q, "").empty());
    CHECK(parse_morphism_set(q, to_string(all_morphisms(q, true))) == all_morphisms(q, true));
    CHECK_THROWS_AS(parse_morphism("1-2"), DomainError);
    CHECK_THROWS_AS(parse_morphism("a->b"), DomainError);
    CHECK_THROWS_AS(parse_morphism_set(q, "0->1,"), DomainError);
    CHECK_THROWS_AS(parse_morphism_set(q, "0->1,,1->2"), DomainError);
    CHECK_THROWS_AS(parse_morphism_set(q, "0->4"), DomainError);
    CHECK_THROWS_AS(parse_morphism_set(q, "2->1"), DomainError);
}
