#include <doctest.h>

#include <random>
#include <sstream>

#include "arbor/error.hpp"
#include "arbor/graph_export.hpp"
#include "arbor/report_io.hpp"

using namespace arbor;

TEST_CASE("loose reports round-trip byte for byte") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; ++n) {
        const auto q = make_quiver(n);
        for (int trial = 0; trial < 25; ++trial) {
            const auto mask = rng() & rng() & ((std::uint64_t{1} << q.non_identity_count()) - 1);
            const auto report = loose_report(n, MorphismSet::from_non_identity_mask(q, mask));
            const auto text = dump(to_json(report));
            const auto again = dump(to_json(loose_report_from_json(parse_json(text))));
            REQUIRE(text == again);
        }
    }
}

TEST_CASE("flag-file reports keep their empty cells") {
    std::istringstream in("0,1 proper\n0,2 empty\n1,2 full\n");
    const auto report = loose_report(read_flag_file(1, in));
    const auto text = dump(to_json(report));
    CHECK(text.find("\"empty_cells\": [\n    \"0->2\"") != std::string::npos);
    CHECK(dump(to_json(loose_report_from_json(parse_json(text)))) == text);
}

TEST_CASE("tampered reports are rejected") {
    const auto q = make_quiver(2);
    const auto j = to_json(loose_report(2, parse_morphism_set(q, "0->2")));
    auto flipped = j;
    flipped["vanishing"] = true;
    CHECK_THROWS_AS(loose_report_from_json(flipped), DomainError);
    auto cell = j;
    cell["cells"][0]["loose"] = true;
    CHECK_THROWS_AS(loose_report_from_json(cell), DomainError);
    auto missing = j;
    missing.erase("closure");
    CHECK_THROWS_AS(loose_report_from_json(missing), DomainError);
    auto open = j;
    open["closure"]["members"] = "0->0,0->1,0->2,1->1,2->2,3->3";
    CHECK_THROWS_AS(loose_report_from_json(open), DomainError);
    CHECK_THROWS_AS(parse_json("{\"n\": "), DomainError);
}

TEST_CASE("closure payload") {
    const auto q = make_quiver(2);
    const auto c = closure_2of6(q, parse_morphism_set(q, "0->2,1->3"));
    const auto j = to_json(c);
    CHECK(j["full"] == true);
    CHECK(j["passes"] == 2);
    CHECK(j["trace"].size() == 4);
    const auto back = closure_from_json(q, j);
    CHECK(back.members() == c.members());
    CHECK(back.trace() == c.trace());
}

TEST_CASE("identical inputs give identical payloads") {
    const auto q = make_quiver(3);
    const auto w = parse_morphism_set(q, "0->3,1->2");
    const LocalizedCategory lc(q, closure_2of6(q, w));
    const auto a = dump(localization_json(lc, skeleton(lc), iso_image_set(q, lc.inverted()), true));
    const LocalizedCategory lc2(q, closure_2of6(q, w));
    const auto b = dump(localization_json(lc2, skeleton(lc2), iso_image_set(q, lc2.inverted()), true));
    CHECK(a == b);
}

TEST_CASE("graph exports") {
    const auto q = make_quiver(2);
    const LocalizedCategory lc(q, closure_2of6(q, parse_morphism_set(q, "0->2")));
    std::ostringstream dot;
    write_category_dot(lc, dot);
    const auto text = dot.str();
    CHECK(text.rfind("digraph localization {", 0) == 0);
    // One non-identity loop at 1: the idempotent.
    CHECK(text.find("1 -> 1 [label=\"2/0\", style=\"dashed\"]") != std::string::npos);
    std::ostringstream faces;
    const auto report = loose_report(2, parse_morphism_set(q, "0->2"));
    write_face_poset_dot(cell_complex(2), faces, &report);
    CHECK(faces.str().find("c_0_2 [label=\"{0,2}\\ndim 1\", style=filled") != std::string::npos);
    CHECK(faces.str().find("c_0_2 -> c_0_1_2;") != std::string::npos);
}
