#include "arbor/frontgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "arbor/error.hpp"

namespace arbor {

namespace {

constexpr double kOffset = 1e-6;       // probe distance when labelling pieces
constexpr double kSampleStep = 0.0025; // x spacing of curve samples
constexpr double kSaucerMargin = 0.3;
constexpr double kCuspWidth = 0.5;

void check_profile(double epsilon, double c0) {
    if (!(epsilon > 0 && epsilon < 1)) {
        throw DomainError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
    }
    if (!(c0 > epsilon * epsilon)) {
        throw DomainError("plateau value must exceed epsilon^2 = " +
                          std::to_string(epsilon * epsilon) + ", got " + std::to_string(c0));
    }
}

}  // namespace

VennLayout venn_layout(int n, double epsilon) {
    if (n < 2) throw DomainError("Venn layout needs n >= 2, got " + std::to_string(n));
    if (n > 16) throw CapacityError("Venn layout supports n <= 16");
    if (!(epsilon > 0 && epsilon < 1)) {
        throw DomainError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
    }
    VennLayout layout{n, epsilon, {}};
    // Coordinates of e_i - centroid in the (negated) Helmert basis of the
    // hyperplane sum(x) = 0, rescaled to the unit sphere.
    const double scale = std::sqrt(static_cast<double>(n) / (n - 1));
    for (int i = 0; i < n; ++i) {
        std::vector<double> c;
        for (int k = 1; k < n; ++k) {
            const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
            double dot = 0;
            if (i < k) dot = 1.0 / norm;
            if (i == k) dot = -static_cast<double>(k) / norm;
            c.push_back(-dot * scale);
        }
        layout.centers.push_back(std::move(c));
    }
    return layout;
}

double plateau_edge(double epsilon, double c0) {
    check_profile(epsilon, c0);
    // Fritsch-Carlson: with zero slope at the left end the cubic stays
    // monotone iff 2*eps*h / (c0 - eps^2) <= 3. Take h = (c0 - eps^2)/eps,
    // which gives ratio 2, capped so that a plateau survives.
    const double h = std::min(0.9, (c0 - epsilon * epsilon) / epsilon);
    return 1.0 - h;
}

template <std::floating_point T>
T bump_chi(T r, T epsilon, T c0) {
    if (!(r >= 0)) throw DomainError("radius must be non-negative");
    const T r0 = static_cast<T>(plateau_edge(static_cast<double>(epsilon), static_cast<double>(c0)));
    const T e2 = epsilon * epsilon;
    if (r >= 1 + epsilon) return 0;
    if (r >= 1) {
        const T d = 1 + epsilon - r;
        return d * d;
    }
    if (r <= r0) return c0;
    const T h = 1 - r0;
    const T t = (r - r0) / h;
    const T t2 = t * t;
    const T t3 = t2 * t;
    const T h00 = 2 * t3 - 3 * t2 + 1;
    const T h01 = -2 * t3 + 3 * t2;
    const T h11 = t3 - t2;
    return h00 * c0 + h01 * e2 + h11 * h * (-2 * epsilon);
}

template double bump_chi<double>(double, double, double);
template long double bump_chi<long double>(long double, long double, long double);

// ---------------------------------------------------------------------------

bool RootedTree::is_linear() const {
    for (int v = 1; v < size(); ++v) {
        if (parent[static_cast<std::size_t>(v)] != v - 1) return false;
    }
    return true;
}

std::vector<int> RootedTree::chain(int v) const {
    std::vector<int> out;
    for (int w = v; w > 0; w = parent[static_cast<std::size_t>(w)]) out.push_back(w);
    std::reverse(out.begin(), out.end());
    return out;
}

bool RootedTree::precedes(int w, int v) const {
    for (int u = v; u >= 0; u = parent[static_cast<std::size_t>(u)]) {
        if (u == w) return true;
    }
    return false;
}

RootedTree parse_tree(std::string_view spec) {
    RootedTree t;
    std::string item;
    std::istringstream in{std::string(spec)};
    int v = 0;
    while (std::getline(in, item, ';')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (v == 0) {
            if (item != "root") throw DomainError("tree spec must start with 'root'");
            t.parent.push_back(-1);
        } else {
            char* end = nullptr;
            const long p = std::strtol(item.c_str(), &end, 10);
            if (item.empty() || *end != '\0') {
                throw DomainError("tree spec entry " + std::to_string(v) + " is not a vertex: '" +
                                  item + "'");
            }
            if (p < 0 || p >= v) {
                throw DomainError("parent of vertex " + std::to_string(v) +
                                  " must be an earlier vertex, got " + item);
            }
            t.parent.push_back(static_cast<int>(p));
        }
        ++v;
    }
    if (t.parent.empty()) throw DomainError("empty tree spec");
    if (!spec.empty() && spec.back() == ';') throw DomainError("tree spec has a trailing ';'");
    return t;
}

std::string to_string(const RootedTree& t) {
    std::string out = "root";
    for (int v = 1; v < t.size(); ++v) out += ";" + std::to_string(t.parent[static_cast<std::size_t>(v)]);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

double center_x(const FrontDiagram& d, int v) {
    return d.layout.centers[static_cast<std::size_t>(v - 1)][0];
}

double saucer_shape(const FrontDiagram& d, double x) {
    const double flat = d.saucer_half_width - kCuspWidth;
    const double ax = std::abs(x);
    if (ax <= flat) return 1.0;
    if (ax >= d.saucer_half_width) return 0.0;
    return std::pow((d.saucer_half_width - ax) / kCuspWidth, 1.5);
}

double saucer_lower(const FrontDiagram& d, double x) {
    return 0.5 * d.saucer_height * (1.0 - saucer_shape(d, x));
}

double saucer_upper(const FrontDiagram& d, double x) {
    return 0.5 * d.saucer_height * (1.0 + saucer_shape(d, x));
}

std::vector<double> sample_xs(double x0, double x1) {
    const int steps = std::max(8, static_cast<int>(std::ceil((x1 - x0) / kSampleStep)));
    std::vector<double> xs;
    for (int i = 0; i <= steps; ++i) xs.push_back(x0 + (x1 - x0) * i / steps);
    return xs;
}

// Interval endpoints of every dome other than `skip` falling strictly inside
// (lo, hi), plus lo and hi.
std::vector<double> breakpoints(const FrontDiagram& d, int skip, double lo, double hi) {
    std::set<double> cuts{lo, hi};
    const double r = d.layout.radius();
    for (int u = 1; u < d.tree.size(); ++u) {
        if (u == skip) continue;
        for (double x : {center_x(d, u) - r, center_x(d, u) + r}) {
            if (x > lo && x < hi) cuts.insert(x);
        }
    }
    return {cuts.begin(), cuts.end()};
}

std::optional<Morphism> label_between(const FrontDiagram& d, double x, double z) {
    const auto above = d.classify(x, z + kOffset);
    const auto below = d.classify(x, z - kOffset);
    if (!above || !below) return std::nullopt;
    if (*above == *below) {
        throw ModelViolation("front piece at x = " + std::to_string(x) +
                             " does not separate two regions");
    }
    return Morphism{std::min(*above, *below), std::max(*above, *below)};
}

struct RawPiece {
    std::vector<Point> points;
    std::optional<Morphism> cell;
};

// Consecutive raw pieces with equal labels are joined; `cyclic` also joins
// the last to the first.
std::vector<RawPiece> merge_runs(std::vector<RawPiece> raw, bool cyclic) {
    std::vector<RawPiece> out;
    for (auto& p : raw) {
        if (!out.empty() && out.back().cell == p.cell) {
            auto& pts = out.back().points;
            pts.insert(pts.end(), p.points.begin() + 1, p.points.end());
        } else {
            out.push_back(std::move(p));
        }
    }
    if (cyclic && out.size() > 1 && out.front().cell == out.back().cell) {
        auto& tail = out.back().points;
        tail.insert(tail.end(), out.front().points.begin() + 1, out.front().points.end());
        out.front() = std::move(out.back());
        out.pop_back();
    }
    return out;
}

double arclength(const std::vector<Point>& pts) {
    double len = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        len += std::hypot(pts[i].x - pts[i - 1].x, pts[i].z - pts[i - 1].z);
    }
    return len;
}

std::vector<std::vector<Point>> piece_polylines(const FrontPiece& piece) {
    if (!piece.punctured) return {piece.points};
    const double len = arclength(piece.points);
    const double gap = std::min(0.3, 0.4 * len);
    const double lo = 0.5 * (len - gap);
    const double hi = 0.5 * (len + gap);
    std::vector<std::vector<Point>> out(2);
    double s = 0;
    for (std::size_t i = 0; i < piece.points.size(); ++i) {
        if (i > 0) {
            s += std::hypot(piece.points[i].x - piece.points[i - 1].x,
                            piece.points[i].z - piece.points[i - 1].z);
        }
        if (s <= lo) out[0].push_back(piece.points[i]);
        if (s >= hi) out[1].push_back(piece.points[i]);
    }
    std::erase_if(out, [](const auto& line) { return line.size() < 2; });
    return out;
}

}  // namespace

double FrontDiagram::dome_height(int v, double x) const {
    double z = 0;
    for (int w : tree.chain(v)) {
        z += bump_chi<double>(std::abs(x - center_x(*this, w)), layout.epsilon, c0);
    }
    return z;
}

bool FrontDiagram::inside_saucer(double x, double z) const {
    return std::abs(x) < saucer_half_width && z > saucer_lower(*this, x) &&
           z < saucer_upper(*this, x);
}

std::optional<int> FrontDiagram::classify(double x, double z) const {
    if (!tree.is_linear()) return std::nullopt;
    if (!inside_saucer(x, z)) return 0;
    // Extended domes are nested, so counting those below the point gives
    // the stacking level.
    int level = 1;
    for (int v = 1; v < tree.size(); ++v) {
        if (z > dome_height(v, x)) ++level;
    }
    return level;
}

std::vector<std::vector<Point>> FrontDiagram::drawn_polylines() const {
    std::vector<std::vector<Point>> out;
    for (const auto& piece : pieces) {
        for (auto& line : piece_polylines(piece)) out.push_back(std::move(line));
    }
    return out;
}

FrontDiagram front_curves(const RootedTree& tree, const std::vector<Morphism>& punctures,
                          double epsilon, double c0) {
    if (tree.size() < 1 || tree.parent[0] != -1) throw DomainError("malformed rooted tree");
    if (tree.size() > 3) {
        throw DomainError("planar fronts are drawn for trees with at most 3 vertices, got " +
                          std::to_string(tree.size()));
    }
    check_profile(epsilon, c0);
    const LinearQuiver q(tree.size() + 1);
    FrontDiagram d{tree, venn_layout(2, epsilon), c0, 0, 0, {}, MorphismSet(q)};
    d.saucer_height = 2.5;  // above n = 2, clear of every dome
    d.saucer_half_width = 1.0 + d.layout.radius() + kSaucerMargin + kCuspWidth;

    // Saucer: lower branch left to right, then the upper branch back.
    std::vector<RawPiece> saucer;
    const auto cuts = breakpoints(d, 0, -d.saucer_half_width, d.saucer_half_width);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        RawPiece p;
        for (double x : sample_xs(cuts[i], cuts[i + 1])) p.points.push_back({x, saucer_lower(d, x)});
        const double xm = 0.5 * (cuts[i] + cuts[i + 1]);
        p.cell = label_between(d, xm, saucer_lower(d, xm));
        saucer.push_back(std::move(p));
    }
    RawPiece upper;
    for (double x : sample_xs(-d.saucer_half_width, d.saucer_half_width)) {
        upper.points.push_back({-x, saucer_upper(d, -x)});
    }
    upper.cell = label_between(d, 0.0, saucer_upper(d, 0.0));
    saucer.push_back(std::move(upper));
    for (auto& p : merge_runs(std::move(saucer), true)) {
        d.pieces.push_back({"saucer", std::move(p.points), p.cell, false});
    }

    const double r = d.layout.radius();
    for (int v = 1; v < tree.size(); ++v) {
        std::vector<RawPiece> dome;
        const double lo = center_x(d, v) - r;
        const double hi = center_x(d, v) + r;
        const auto dome_cuts = breakpoints(d, v, lo, hi);
        for (std::size_t i = 0; i + 1 < dome_cuts.size(); ++i) {
            RawPiece p;
            for (double x : sample_xs(dome_cuts[i], dome_cuts[i + 1])) {
                p.points.push_back({x, d.dome_height(v, x)});
            }
            const double xm = 0.5 * (dome_cuts[i] + dome_cuts[i + 1]);
            p.cell = label_between(d, xm, d.dome_height(v, xm));
            dome.push_back(std::move(p));
        }
        for (auto& p : merge_runs(std::move(dome), false)) {
            d.pieces.push_back({"dome:" + std::to_string(v), std::move(p.points), p.cell, false});
        }
    }

    if (tree.is_linear()) {
        std::set<Morphism> labels;
        for (const auto& p : d.pieces) {
            if (!p.cell || !labels.insert(*p.cell).second) {
                throw ModelViolation("front pieces do not match top cells one to one");
            }
        }
        if (labels.size() != q.non_identity_count()) {
            throw ModelViolation("front has " + std::to_string(labels.size()) + " pieces, expected " +
                                 std::to_string(q.non_identity_count()));
        }
    }
    if (!punctures.empty() && !tree.is_linear()) {
        throw DomainError("punctures are supported on linear trees only");
    }
    for (const auto& f : punctures) {
        if (!q.contains(f) || f.is_identity()) {
            throw DomainError("puncture " + to_string(f) + " is not a top cell of this front");
        }
        d.punctures.insert(f);
    }
    for (auto& p : d.pieces) p.punctured = p.cell && d.punctures.contains(*p.cell);
    return d;
}

// ---------------------------------------------------------------------------

namespace {

std::string region_name(int object) {
    return object == 0 ? "U_0" : "U_v" + std::to_string(object - 1);
}

struct SvgFrame {
    double xmin, zmax, sx, sz;
    double px(double x) const { return (x - xmin) * sx; }
    double pz(double z) const { return (zmax - z) * sz; }
};

void write_polyline(std::ostream& out, const SvgFrame& f, const std::vector<Point>& pts,
                    const std::string& stroke) {
    out << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) out << ' ';
        out << f.px(pts[i].x) << ',' << f.pz(pts[i].z);
    }
    out << "\"/>\n";
}

}  // namespace

void write_svg(const FrontDiagram& d, std::ostream& out) {
    const double margin = 0.2;
    const double xmin = -d.saucer_half_width - margin;
    const double xmax = d.saucer_half_width + margin;
    const double zmin = -margin;
    const double zmax = d.saucer_height + margin;
    // Vertical exaggeration keeps the shallow domes readable.
    const SvgFrame f{xmin, zmax, 120.0, 240.0};
    const double width = (xmax - xmin) * f.sx;
    const double height = (zmax - zmin) * f.sz;

    std::ostringstream body;
    body << std::fixed << std::setprecision(2);
    for (const auto& piece : d.pieces) {
        const std::string stroke = piece.curve == "saucer" ? "#000000" : "#1f5fa8";
        for (const auto& line : piece_polylines(piece)) write_polyline(body, f, line, stroke);
    }
    if (d.tree.is_linear()) {
        // One label per region, at the middle of its tallest vertical run on
        // a coarse grid.
        std::map<int, std::pair<double, Point>> best;
        const int cols = 240;
        const int rows = 400;
        for (int i = 1; i < cols; ++i) {
            const double x = xmin + (xmax - xmin) * i / cols;
            int run_label = -1;
            int run_start = 0;
            for (int j = 0; j <= rows; ++j) {
                const double z = zmin + (zmax - zmin) * j / rows;
                const int label = j < rows ? d.classify(x, z).value_or(-1) : -2;
                if (label != run_label) {
                    if (run_label > 0) {
                        const double len = (j - run_start) * f.sz * (zmax - zmin) / rows;
                        const double zm = zmin + (zmax - zmin) * (run_start + j - 1) / (2.0 * rows);
                        auto it = best.find(run_label);
                        if (it == best.end() || len > it->second.first) {
                            best[run_label] = {len, Point{x, zm}};
                        }
                    }
                    run_label = label;
                    run_start = j;
                }
            }
        }
        for (const auto& [object, entry] : best) {
            body << "  <text x=\"" << f.px(entry.second.x) << "\" y=\"" << f.pz(entry.second.z)
                 << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
                 << region_name(object) << "</text>\n";
        }
    }

    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <title>front of tree " << to_string(d.tree) << "</title>\n";
    out << body.str();
    out << "</svg>\n";
}

void write_venn_svg(const VennLayout& layout, std::ostream& out) {
    if (layout.n != 2 && layout.n != 3) {
        throw DomainError("Venn diagrams are drawn for n = 2 or 3, got " + std::to_string(layout.n));
    }
    const double scale = 120.0;
    const double half = layout.radius() + 1.2;
    const double size = 2 * half * scale;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    out << "  <title>Venn layout n=" << layout.n << " eps=" << layout.epsilon << "</title>\n";
    for (std::size_t i = 0; i < layout.centers.size(); ++i) {
        const auto& c = layout.centers[i];
        const double x = c[0];
        const double y = c.size() > 1 ? c[1] : 0.0;
        if (layout.n == 2) {
            // One-dimensional balls: intervals on a line.
            out << "  <line x1=\"" << (x - layout.radius() + half) * scale << "\" y1=\""
                << (half + 0.1 * (static_cast<double>(i) - 0.5)) * scale << "\" x2=\""
                << (x + layout.radius() + half) * scale << "\" y2=\""
                << (half + 0.1 * (static_cast<double>(i) - 0.5)) * scale
                << "\" stroke=\"#1f5fa8\" stroke-width=\"2\"/>\n";
        } else {
            out << "  <circle cx=\"" << (x + half) * scale << "\" cy=\"" << (half - y) * scale
                << "\" r=\"" << layout.radius() * scale
                << "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "</svg>\n";
}

// ---------------------------------------------------------------------------

RegionCensus region_census(const FrontDiagram& d, int resolution) {
    if (resolution < kMinCensusResolution) {
        throw DomainError("census resolution must be >= " + std::to_string(kMinCensusResolution) +
                          ", got " + std::to_string(resolution));
    }
    if (resolution > kMaxCensusResolution) {
        throw CapacityError("census resolution is capped at " +
                            std::to_string(kMaxCensusResolution));
    }
    const double margin = 0.15;
    const double xmin = -d.saucer_half_width - margin;
    const double xmax = d.saucer_half_width + margin;
    const double zmin = -margin;
    const double zmax = d.saucer_height + margin;
    const double zpix = (resolution - 1) / (zmax - zmin);
    const double xpix = (resolution - 1) / (xmax - xmin);

    // Thinnest designed feature: the gap between stacked domes where the
    // upper one leaves its plateau, eps^2 tall.
    const double eps2 = d.layout.epsilon * d.layout.epsilon;
    if (eps2 * zpix < 3.0) {
        throw ResolutionError("resolution " + std::to_string(resolution) +
                              " gives features of " + std::to_string(eps2 * zpix) +
                              " px; need at least 3");
    }

    const auto n = static_cast<std::size_t>(resolution);
    std::vector<std::uint8_t> ink(n * n, 0);
    auto to_px = [&](Point p) {
        return std::pair<int, int>{static_cast<int>(std::lround((p.x - xmin) * xpix)),
                                   static_cast<int>(std::lround((p.z - zmin) * zpix))};
    };
    auto plot = [&](int i, int j) {
        if (i >= 0 && j >= 0 && i < resolution && j < resolution) {
            ink[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = 1;
        }
    };
    for (const auto& line : d.drawn_polylines()) {
        for (std::size_t k = 0; k + 1 < line.size(); ++k) {
            auto [x0, y0] = to_px(line[k]);
            const auto [x1, y1] = to_px(line[k + 1]);
            // Bresenham, 8-connected.
            const int dx = std::abs(x1 - x0);
            const int dy = -std::abs(y1 - y0);
            const int sx = x0 < x1 ? 1 : -1;
            const int sy = y0 < y1 ? 1 : -1;
            int err = dx + dy;
            for (;;) {
                plot(x0, y0);
                if (x0 == x1 && y0 == y1) break;
                const int e2 = 2 * err;
                if (e2 >= dy) {
                    err += dy;
                    x0 += sx;
                }
                if (e2 <= dx) {
                    err += dx;
                    y0 += sy;
                }
            }
        }
    }

    RegionCensus census;
    census.resolution = resolution;
    std::vector<int> component(n * n, -1);
    std::queue<std::size_t> frontier;
    for (std::size_t start = 0; start < n * n; ++start) {
        if (ink[start] || component[start] >= 0) continue;
        const int id = static_cast<int>(census.regions.size());
        CensusRegion region;
        std::map<int, std::size_t> votes;
        component[start] = id;
        frontier.push(start);
        while (!frontier.empty()) {
            const std::size_t cur = frontier.front();
            frontier.pop();
            ++region.pixels;
            const std::size_t i = cur % n;
            const std::size_t j = cur / n;
            if (const auto label = d.classify(xmin + static_cast<double>(i) / xpix,
                                              zmin + static_cast<double>(j) / zpix)) {
                ++votes[*label];
            }
            const std::size_t next[4] = {i > 0 ? cur - 1 : cur, i + 1 < n ? cur + 1 : cur,
                                         j > 0 ? cur - n : cur, j + 1 < n ? cur + n : cur};
            for (std::size_t nb : next) {
                if (nb != cur && !ink[nb] && component[nb] < 0) {
                    component[nb] = id;
                    frontier.push(nb);
                }
            }
        }
        region.bounded = true;
        if (!votes.empty()) {
            region.object = std::max_element(votes.begin(), votes.end(), [](const auto& a, const auto& b) {
                                return a.second < b.second;
                            })->first;
        }
        census.regions.push_back(region);
    }
    // Components touching the frame are unbounded.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t idx : {i, (n - 1) * n + i, i * n, i * n + n - 1}) {
            if (component[idx] >= 0) census.regions[static_cast<std::size_t>(component[idx])].bounded = false;
        }
    }
    for (const auto& r : census.regions) (r.bounded ? census.bounded : census.unbounded) += 1;

    if (d.tree.is_linear()) {
        std::set<int> seen;
        bool ok = true;
        for (const auto& r : census.regions) {
            if (!r.bounded) {
                ok = ok && r.object == 0;
                continue;
            }
            ok = ok && r.object && *r.object >= 1 && seen.insert(*r.object).second;
        }
        census.labels_bijective = ok && static_cast<int>(seen.size()) == d.tree.size();
    }
    return census;
}

}  // namespace arbor
