#include <doctest.h>

#include <random>
#include <sstream>

#include "arbor/arboreal.hpp"
#include "arbor/error.hpp"

using namespace arbor;

namespace {

std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

TEST_CASE("cell counts are binomial") {
    for (int n = 1; n <= 8; ++n) {
        const auto cx = cell_complex(n);
        std::size_t total = 0;
        for (int m = 0; m <= n - 1; ++m) {
            CHECK(cx.count(m) == choose(n + 2, n - m + 1));
            total += cx.count(m);
        }
        CHECK(cx.cells().size() == total);
        CHECK(cx.top_cells().size() == make_quiver(n).non_identity_count());
    }
    CHECK(cell_complex(2).count(1) == 6);
    CHECK(cell_complex(2).count(0) == 4);
    CHECK(cell_complex(2).euler_characteristic() == -2);
    CHECK_THROWS_AS(cell_complex(19), CapacityError);
}

TEST_CASE("every top cell bounds exactly n vertices") {
    for (int n = 1; n <= 4; ++n) {
        const auto cx = cell_complex(n);
        for (const auto& top : cx.top_cells()) {
            std::size_t corners = 0;
            for (const auto& c : cx.cells_of_dimension(0)) corners += ArborealComplex::is_face(c, top) ? 1 : 0;
            CHECK(corners == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("face poset is graded by superset order") {
    const auto cx = cell_complex(3);
    for (const auto& [cell, face] : cx.hasse_edges()) {
        CHECK(face.dimension(3) + 1 == cell.dimension(3));
        CHECK(ArborealComplex::is_face(face, cell));
    }
    // Each (k+1)-subset covers k+1 subsets of size k (those of size >= 2).
    std::size_t expected = 0;
    for (const auto& c : cx.cells()) {
        if (c.vertices.size() > 2) expected += c.vertices.size();
    }
    CHECK(cx.hasse_edges().size() == expected);
}

TEST_CASE("top cells and morphisms") {
    CHECK(top_cell_morphism(Cell{{1, 3}}) == Morphism{1, 3});
    CHECK(morphism_top_cell({0, 2}) == Cell{{0, 2}});
    CHECK(to_string(Cell{{0, 2, 3}}) == "{0,2,3}");
    CHECK_THROWS_AS(top_cell_morphism(Cell{{1, 2, 3}}), DomainError);
    CHECK_THROWS_AS(morphism_top_cell({2, 2}), DomainError);
    const auto cx = cell_complex(2);
    CHECK(cx.region_label(0) == "U_0 (unbounded)");
    CHECK(cx.region_label(1) == "U_v0");
    CHECK(cx.region_label(3) == "U_v2 (top)");
}

TEST_CASE("loose report for crossing punctures at n=3") {
    const auto q = make_quiver(3);
    const auto r = loose_report(3, parse_morphism_set(q, "0->2,1->3"));
    REQUIRE(r.cells.size() == 10);
    std::size_t loose = 0;
    for (const auto& c : r.cells) loose += c.loose ? 1 : 0;
    CHECK(loose == 6);
    CHECK_FALSE(r.loose);
    CHECK_FALSE(r.vanishing);
    CHECK_FALSE(r.dimension_warning);
    CHECK(r.skeleton_classes == 2);
    CHECK(r.cells[1].reason == LooseReason::Punctured);
    CHECK(r.cells[0].reason == LooseReason::Saturation);
    CHECK(r.cells[0].step.has_value());
    CHECK(r.cells[3].reason == LooseReason::NotInClosure);
}

TEST_CASE("loose report basics") {
    const auto q = make_quiver(2);
    const auto full = loose_report(2, parse_morphism_set(q, "0->2,1->3"));
    CHECK(full.loose);
    CHECK(full.vanishing);
    CHECK(full.dimension_warning);
    const auto none = loose_report(2, MorphismSet(q));
    CHECK_FALSE(none.loose);
    CHECK(none.skeleton_classes == 4);
    CHECK_THROWS_AS(loose_report(2, parse_morphism_set(q, "1->1")), DomainError);
    CHECK_THROWS_AS(loose_report(3, MorphismSet(q)), DomainError);
}

TEST_CASE("enlarging W never turns a verdict off") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n) {
        const auto q = make_quiver(n);
        const auto k = q.non_identity_count();
        for (int trial = 0; trial < 40; ++trial) {
            const auto mask = rng() & ((std::uint64_t{1} << k) - 1) & rng();
            const auto extra = std::uint64_t{1} << (rng() % k);
            const auto small = loose_report(n, MorphismSet::from_non_identity_mask(q, mask));
            const auto big = loose_report(n, MorphismSet::from_non_identity_mask(q, mask | extra));
            for (std::size_t i = 0; i < small.cells.size(); ++i) {
                CHECK((!small.cells[i].loose || big.cells[i].loose));
            }
            CHECK((!small.vanishing || big.vanishing));
        }
    }
}

TEST_CASE("every W at n<=3: global verdicts agree") {
    for (int n = 1; n <= 3; ++n) {
        const auto q = make_quiver(n);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << q.non_identity_count()); ++m) {
            const auto r = loose_report(n, MorphismSet::from_non_identity_mask(q, m));
            REQUIRE(r.loose == r.vanishing);
            REQUIRE(r.vanishing == r.closure.is_full());
        }
    }
}

TEST_CASE("flag files") {
    std::istringstream good(
        "# cells of the n=2 link\n"
        "0,1 full\n0,2 proper\n\n0,3 full   # comment\n1,2 full\n1,3 empty\n2,3 full\n");
    const auto link = read_flag_file(2, good);
    CHECK(to_string(link.punctures) == "0->2,1->3");
    REQUIRE(link.empty_cells.size() == 1);
    CHECK(link.empty_cells[0] == Morphism{1, 3});
    const auto r = loose_report(link);
    CHECK(r.vanishing);
    CHECK(r.empty_cells == link.empty_cells);

    auto fails = [](const char* text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_flag_file(2, in), DomainError);
    };
    fails("0,1 full\n");                                                        // missing cells
    fails("0,1 full\n0,1 full\n0,2 full\n0,3 full\n1,2 full\n1,3 full\n2,3 full\n");  // repeated
    fails("0,1 partial\n");
    fails("0;1 full\n");
    fails("0,9 full\n");
    fails("0,1 full extra\n");
    fails("1,1 full\n");
}

TEST_CASE("sheaf presentation of the idempotent example") {
    const auto q = make_quiver(2);
    const auto p = sheaf_presentation(2, parse_morphism_set(q, "0->2"));
    CHECK(p.category.hom_size(1, 1) == 2);
    CHECK(p.skeleton.classes.size() == 3);
    CHECK_FALSE(p.skeleton.vanishing);
}
