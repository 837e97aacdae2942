#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "arbor/error.hpp"
#include "arbor/frontgen.hpp"

using namespace arbor;

namespace {

// Independent region count: distinct above/below patterns relative to the
// saucer and every extended dome, found by dense sampling.
int sign_vector_regions(const FrontDiagram& d) {
    std::set<std::vector<bool>> patterns;
    const int cols = 1200;
    const int rows = 1200;
    for (int i = 0; i <= cols; ++i) {
        const double x = -d.saucer_half_width + 2 * d.saucer_half_width * i / cols;
        for (int j = 0; j <= rows; ++j) {
            const double z = d.saucer_height * j / rows;
            if (!d.inside_saucer(x, z)) continue;
            std::vector<bool> p;
            for (int v = 1; v < d.tree.size(); ++v) p.push_back(z > d.dome_height(v, x));
            patterns.insert(p);
        }
    }
    return static_cast<int>(patterns.size());
}

}  // namespace

TEST_CASE("bump profile values") {
    const double eps = kDefaultEpsilon;
    CHECK(bump_chi(1.0 + eps) == doctest::Approx(0.0));
    CHECK(bump_chi(2.0) == 0.0);
    CHECK(bump_chi(1.0) == doctest::Approx(eps * eps).epsilon(1e-12));
    CHECK(bump_chi(0.0) == doctest::Approx(kDefaultPlateau));
    CHECK(bump_chi(0.5) == doctest::Approx(kDefaultPlateau));
    CHECK(bump_chi(1.1) == doctest::Approx(0.01));
    CHECK(plateau_edge(eps, kDefaultPlateau) == doctest::Approx(1.0 - eps));
    // With the default plateau the Hermite piece is c0 - (r - 1 + eps)^2.
    for (double r : {0.85, 0.9, 0.95}) {
        CHECK(bump_chi(r) == doctest::Approx(kDefaultPlateau - (r - 1 + eps) * (r - 1 + eps)));
    }
    CHECK_THROWS_AS(bump_chi<double>(0.5, eps, eps * eps), DomainError);
    CHECK_THROWS_AS(bump_chi<double>(0.5, 1.5, 3.0), DomainError);
    CHECK_THROWS_AS(bump_chi<double>(-0.1, eps, kDefaultPlateau), DomainError);
}

TEST_CASE("bump profile is monotone and C1 for other parameters") {
    for (double eps : {0.05, 0.2, 0.4}) {
        for (double factor : {1.1, 2.0, 5.0, 40.0}) {
            const double c0 = factor * eps * eps;
            double prev = bump_chi<double>(0.0, eps, c0);
            CHECK(prev == doctest::Approx(c0));
            for (int i = 1; i <= 20000; ++i) {
                const double v = bump_chi<double>(2.0 * i / 20000, eps, c0);
                REQUIRE(v <= prev);
                prev = v;
            }
            const long double h = 1e-10L;
            const long double e = eps;
            const long double at = bump_chi<long double>(1.0L, e, c0);
            const long double left = (at - bump_chi<long double>(1.0L - h, e, c0)) / h;
            const long double right = (bump_chi<long double>(1.0L + h, e, c0) - at) / h;
            CHECK(std::fabs(static_cast<double>(left + 2 * e)) < 1e-8);
            CHECK(std::fabs(static_cast<double>(right + 2 * e)) < 1e-8);
        }
    }
}

TEST_CASE("Venn layout is a unit simplex") {
    for (int n = 2; n <= 7; ++n) {
        const auto layout = venn_layout(n);
        REQUIRE(layout.centers.size() == static_cast<std::size_t>(n));
        double common = -1;
        for (std::size_t i = 0; i < layout.centers.size(); ++i) {
            REQUIRE(layout.centers[i].size() == static_cast<std::size_t>(n - 1));
            double norm = 0;
            for (double c : layout.centers[i]) norm += c * c;
            CHECK(std::sqrt(norm) == doctest::Approx(1.0));
            for (std::size_t j = i + 1; j < layout.centers.size(); ++j) {
                double dist = 0;
                for (std::size_t k = 0; k < layout.centers[i].size(); ++k) {
                    const double diff = layout.centers[i][k] - layout.centers[j][k];
                    dist += diff * diff;
                }
                if (common < 0) common = dist;
                CHECK(dist == doctest::Approx(common));
            }
        }
        CHECK(layout.radius() == doctest::Approx(1.2));
    }
    CHECK_THROWS_AS(venn_layout(1), DomainError);
    CHECK_THROWS_AS(venn_layout(3, 1.0), DomainError);
}

TEST_CASE("tree specs") {
    const auto a3 = parse_tree("root;0;1");
    CHECK(a3.size() == 3);
    CHECK(a3.is_linear());
    CHECK(a3.chain(2) == std::vector<int>{1, 2});
    CHECK(a3.precedes(1, 2));
    const auto fork = parse_tree("root; 0; 0");
    CHECK_FALSE(fork.is_linear());
    CHECK_FALSE(fork.precedes(1, 2));
    CHECK(to_string(fork) == "root;0;0");
    CHECK(parse_tree("root").size() == 1);
    CHECK_THROWS_AS(parse_tree("0;0"), DomainError);
    CHECK_THROWS_AS(parse_tree("root;1"), DomainError);
    CHECK_THROWS_AS(parse_tree("root;x"), DomainError);
    CHECK_THROWS_AS(parse_tree("root;0;"), DomainError);
    CHECK_THROWS_AS(front_curves(parse_tree("root;0;1;2")), DomainError);
}

TEST_CASE("front pieces match top cells on linear trees") {
    const auto d = front_curves(parse_tree("root;0;1"));
    std::set<Morphism> cells;
    for (const auto& p : d.pieces) {
        REQUIRE(p.cell.has_value());
        cells.insert(*p.cell);
    }
    CHECK(cells.size() == 6);
    CHECK(d.quiver().size() == 4);
    CHECK(d.classify(0.0, 100.0) == 0);
    CHECK(d.classify(0.0, d.saucer_height - 0.1) == 3);
    CHECK(front_curves(parse_tree("root;0")).pieces.size() == 3);
    CHECK(front_curves(parse_tree("root")).pieces.size() == 1);
}

TEST_CASE("stacked domes stay apart and the saucer clears them") {
    const auto d = front_curves(parse_tree("root;0;1"));
    const double c2 = d.layout.centers[1][0];
    const double r = d.layout.radius();
    for (int i = 1; i < 1000; ++i) {
        const double x = c2 - r + 2 * r * i / 1000;
        CHECK(d.dome_height(2, x) > d.dome_height(1, x));
    }
    for (double x = -2.2; x <= 2.2; x += 0.01) {
        CHECK(d.dome_height(2, x) < d.saucer_height - 2.0);
    }
}

TEST_CASE("incomparable domes cross") {
    const auto d = front_curves(parse_tree("root;0;0"));
    const double left = d.dome_height(1, -0.1) - d.dome_height(2, -0.1);
    const double right = d.dome_height(1, 0.1) - d.dome_height(2, 0.1);
    CHECK(left * right < 0);
    CHECK_FALSE(d.classify(0, 0.01).has_value());
}

TEST_CASE("raster census agrees with the sign-vector count") {
    struct Case {
        const char* tree;
        int bounded;
    };
    for (const Case c : {Case{"root", 1}, Case{"root;0", 2}, Case{"root;0;1", 3}, Case{"root;0;0", 4}}) {
        const auto d = front_curves(parse_tree(c.tree));
        CAPTURE(c.tree);
        CHECK(sign_vector_regions(d) == c.bounded);
        for (int res : {256, 512}) {
            const auto census = region_census(d, res);
            CHECK(census.bounded == c.bounded);
            CHECK(census.unbounded == 1);
            CHECK(census.labels_bijective == d.tree.is_linear());
        }
    }
}

TEST_CASE("census input checks") {
    const auto d = front_curves(parse_tree("root;0;1"));
    CHECK_THROWS_AS(region_census(d, 128), DomainError);
    CHECK_THROWS_AS(region_census(d, 9000), CapacityError);
    const auto thin = front_curves(parse_tree("root;0;1"), {}, 0.08, 0.02);
    CHECK_THROWS_AS(region_census(thin, 256), ResolutionError);
}

TEST_CASE("punctures open gaps") {
    const auto d = front_curves(parse_tree("root;0;1"), {{1, 2}});
    CHECK(d.drawn_polylines().size() == d.pieces.size() + 1);
    // The gap joins the regions below and above dome 1 near the overlap.
    CHECK(region_census(d, 512).bounded == 2);
    CHECK_THROWS_AS(front_curves(parse_tree("root;0;0"), {{0, 1}}), DomainError);
    CHECK_THROWS_AS(front_curves(parse_tree("root;0;1"), {{1, 1}}), DomainError);
    CHECK_THROWS_AS(front_curves(parse_tree("root;0;1"), {{0, 4}}), DomainError);
}

TEST_CASE("svg output") {
    std::ostringstream out;
    write_svg(front_curves(parse_tree("root;0;1"), {{2, 3}}), out);
    const auto svg = out.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("U_v2") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::ostringstream venn;
    write_venn_svg(venn_layout(3), venn);
    CHECK(venn.str().find("<circle") != std::string::npos);
    std::ostringstream bad;
    CHECK_THROWS_AS(write_venn_svg(venn_layout(4), bad), DomainError);
}
