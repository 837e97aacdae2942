#pragma once

#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "arbor/quiver.hpp"

namespace arbor {

inline constexpr double kDefaultEpsilon = 0.2;
inline constexpr double kDefaultPlateau = 2 * kDefaultEpsilon * kDefaultEpsilon;

/// n balls of radius 1+eps in R^(n-1), centred at the vertices of a regular
/// simplex inscribed in the unit sphere.
struct VennLayout {
    int n = 0;
    double epsilon = kDefaultEpsilon;
    std::vector<std::vector<double>> centers;

    double radius() const { return 1.0 + epsilon; }
};

VennLayout venn_layout(int n, double epsilon = kDefaultEpsilon);

/// Radial profile of a dome: c0 on a plateau around 0, a monotone cubic
/// Hermite segment up to r = 1, then (1+eps-r)^2 on [1, 1+eps] and 0 beyond.
/// The plateau edge is chosen so the Hermite segment cannot overshoot; for
/// c0 = 2 eps^2 it sits at 1-eps and the segment is c0 - (r-1+eps)^2.
/// Throws DomainError unless r >= 0, 0 < eps < 1 and c0 > eps^2.
template <std::floating_point T>
T bump_chi(T r, T epsilon, T c0);

inline double bump_chi(double r) { return bump_chi<double>(r, kDefaultEpsilon, kDefaultPlateau); }

/// Where the plateau ends for the given parameters.
double plateau_edge(double epsilon, double c0);

/// Rooted tree as a parent list: vertex 0 is the root, parent[v] < v.
struct RootedTree {
    std::vector<int> parent;  // parent[0] == -1

    int size() const { return static_cast<int>(parent.size()); }
    bool is_linear() const;
    /// Non-root ancestors of v including v itself.
    std::vector<int> chain(int v) const;
    bool precedes(int w, int v) const;  // w <= v in the tree order
};

/// Parses "root;p1;p2;..." where entry i names the parent of vertex i.
RootedTree parse_tree(std::string_view spec);
std::string to_string(const RootedTree& t);

struct Point {
    double x = 0;
    double z = 0;
};

/// A maximal arc of the front between breakpoints. For linear trees `cell`
/// names the two complement regions the arc separates, i.e. the top cell.
struct FrontPiece {
    std::string curve;  // "saucer" or "dome:<v>"
    std::vector<Point> points;
    std::optional<Morphism> cell;
    bool punctured = false;
};

/// Planar front of the link attached to a tree with at most three vertices.
struct FrontDiagram {
    RootedTree tree;
    VennLayout layout;
    double c0 = kDefaultPlateau;
    double saucer_height = 0;
    double saucer_half_width = 0;
    std::vector<FrontPiece> pieces;
    MorphismSet punctures;

    /// Quiver whose objects label the complement regions (tree size + 1).
    LinearQuiver quiver() const { return punctures.quiver(); }

    /// z of the dome of non-root vertex v at x, ignoring where the dome ends.
    double dome_height(int v, double x) const;
    /// Polylines as drawn: punctured pieces lose a stretch around their
    /// arclength midpoint.
    std::vector<std::vector<Point>> drawn_polylines() const;
    /// Object of the region containing (x, z), for linear trees; nullopt on
    /// non-linear trees.
    std::optional<int> classify(double x, double z) const;
    bool inside_saucer(double x, double z) const;
};

/// Builds the front. Punctures must be non-identity morphisms of the
/// region quiver and are only accepted for linear trees.
FrontDiagram front_curves(const RootedTree& tree, const std::vector<Morphism>& punctures = {},
                          double epsilon = kDefaultEpsilon, double c0 = kDefaultPlateau);

void write_svg(const FrontDiagram& d, std::ostream& out);
/// Circles of the Venn layout for n = 2 or 3, projected to the plane.
void write_venn_svg(const VennLayout& layout, std::ostream& out);

struct CensusRegion {
    std::size_t pixels = 0;
    bool bounded = false;
    std::optional<int> object;  // majority label of the region's pixels
};

struct RegionCensus {
    int resolution = 0;
    int bounded = 0;
    int unbounded = 0;
    std::vector<CensusRegion> regions;
    /// Linear trees: bounded regions carry the labels 1..k exactly once.
    bool labels_bijective = false;
};

inline constexpr int kMinCensusResolution = 256;
inline constexpr int kMaxCensusResolution = 8192;

/// Rasterizes the drawn curves (8-connected), flood-fills the complement with
/// 4-connectivity and counts components; those touching the frame are
/// unbounded. Throws ResolutionError when the thinnest designed feature
/// spans fewer than three pixels.
RegionCensus region_census(const FrontDiagram& d, int resolution);

}  // namespace arbor
