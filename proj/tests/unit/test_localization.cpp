#include <doctest.h>

#include "arbor/closure.hpp"
#include "arbor/error.hpp"
#include "arbor/localization.hpp"
#include "arbor/modcat.hpp"

using namespace arbor;

namespace {

ClosedMorphismSet closed(const LinearQuiver& q, const char* w) {
    return closure_2of6(q, parse_morphism_set(q, w));
}

}  // namespace

TEST_CASE("zigzag validity") {
    const auto q = make_quiver(2);
    const auto wbar = closed(q, "0->2");
    CHECK(is_valid_zigzag(wbar, 1, 1, {2, 0}));   // 1 -> 2 <- 0 -> 1
    CHECK(is_valid_zigzag(wbar, 1, 1, {1, 1}));
    CHECK_FALSE(is_valid_zigzag(wbar, 1, 1, {2, 1}));  // 1->2 is not inverted
    CHECK_FALSE(is_valid_zigzag(wbar, 2, 1, {1, 1}));  // apex below source
    CHECK_FALSE(is_valid_zigzag(wbar, 1, 0, {2, 1}));  // pivot above target
}

TEST_CASE("the non-thin localization at n=2") {
    const auto q = make_quiver(2);
    const LocalizedCategory lc(q, closed(q, "0->2"));
    const std::size_t expected[4][4] = {{1, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 1, 1}, {0, 0, 0, 1}};
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(lc.hom_size(a, b) == expected[a][b]);
        }
    }
    const auto hom = lc.hom(1, 1);
    REQUIRE(hom.size() == 2);
    const auto& id = lc.identity(1);
    const auto& t = hom[0] == id ? hom[1] : hom[0];
    CHECK(t.representative == Zigzag{2, 0});
    CHECK(lc.compose(t, t) == t);
    CHECK_FALSE(lc.is_iso(t));
    CHECK(lc.max_hom_size() == 2);
    // t factors as 1 -> 2 ~ 0 -> 1.
    const auto& to2 = lc.image({1, 2});
    const auto* back = lc.find_iso(2, 0);
    REQUIRE(back != nullptr);
    CHECK(lc.compose(lc.compose(to2, *back), lc.image({0, 1})) == t);
}

TEST_CASE("localization inverts exactly the closed set") {
    for (int n = 1; n <= 3; ++n) {
        const auto q = make_quiver(n);
        for (const auto& wbar : enumerate_closed_sets(q)) {
            CAPTURE(to_string(wbar.members()));
            const LocalizedCategory lc(q, wbar);
            MorphismSet table_isos(q);
            for (const auto& f : all_morphisms(q, true).members()) {
                if (lc.is_iso(lc.image(f))) table_isos.insert(f);
            }
            CHECK(table_isos == wbar.members());
            CHECK(iso_image_set(q, wbar) == wbar.members());
        }
    }
}

TEST_CASE("case-rule composition agrees with the table") {
    for (int n = 1; n <= 3; ++n) {
        const auto q = make_quiver(n);
        const int s = q.size();
        for (const auto& wbar : enumerate_closed_sets(q)) {
            const LocalizedCategory lc(q, wbar);
            for (int a = 0; a < s; ++a)
                for (int b = 0; b < s; ++b)
                    for (int c = 0; c < s; ++c)
                        for (const auto& f : lc.hom(a, b))
                            for (const auto& g : lc.hom(b, c)) {
                                REQUIRE(compose_loc(lc, f, g) == lc.compose(f, g));
                            }
        }
    }
}

TEST_CASE("images compose like the quiver") {
    const auto q = make_quiver(3);
    for (const auto& wbar : enumerate_closed_sets(q)) {
        const LocalizedCategory lc(q, wbar);
        for (int a = 0; a < q.size(); ++a) {
            CHECK(lc.image({a, a}) == lc.identity(a));
            for (int b = a; b < q.size(); ++b)
                for (int c = b; c < q.size(); ++c) {
                    REQUIRE(lc.compose(lc.image({a, b}), lc.image({b, c})) == lc.image({a, c}));
                }
        }
    }
}

TEST_CASE("class members are valid and sorted") {
    const auto q = make_quiver(3);
    const auto wbar = closed(q, "0->2,1->2");
    const LocalizedCategory lc(q, wbar);
    for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
            for (const auto& f : lc.hom(a, b)) {
                const auto& members = lc.class_members(f);
                REQUIRE_FALSE(members.empty());
                CHECK(members.front() == f.representative);
                CHECK(std::is_sorted(members.begin(), members.end()));
                for (const auto& z : members) CHECK(is_valid_zigzag(wbar, a, b, z));
                CHECK(hom_set(q, wbar, a, b).size() == lc.hom_size(a, b));
            }
}

TEST_CASE("full inversion collapses every object") {
    const auto q = make_quiver(2);
    const auto loc = localize(q, parse_morphism_set(q, "0->2,1->3"));
    CHECK(loc.category.inverted().is_full());
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(loc.category.hom_size(a, b) == 1);
    CHECK(skeleton(loc.category).vanishing);
}

TEST_CASE("localization rejects sets that are not closed") {
    const auto q = make_quiver(2);
    CHECK_THROWS_AS(ClosedMorphismSet::from_closed(parse_morphism_set(q, "0->1,1->2")), DomainError);
    const LocalizedCategory lc(q, closed(q, "0->2"));
    const LocalizedCategory other(make_quiver(3), closed(make_quiver(3), "0->2"));
    CHECK_THROWS_AS(lc.compose(lc.image({0, 1}), lc.image({2, 3})), CompositionError);
    CHECK_THROWS(lc.compose(other.image({0, 4}), lc.image({0, 1})));
}
