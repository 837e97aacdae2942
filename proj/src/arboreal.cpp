#include "arbor/arboreal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "arbor/error.hpp"

namespace arbor {

namespace {

constexpr int kMaxComplexN = 18;

}  // namespace

std::string to_string(const Cell& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(c.vertices[i]);
    }
    return out + "}";
}

ArborealComplex::ArborealComplex(int n) : n_(n), quiver_(make_quiver(n)) {
    if (n > kMaxComplexN) {
        throw CapacityError("cell complex enumeration supports n <= " + std::to_string(kMaxComplexN));
    }
    const int s = quiver_.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
        const int k = std::popcount(mask);
        if (k < 2 || k > n + 1) continue;
        Cell c;
        for (int v = 0; v < s; ++v) {
            if (mask & (std::uint32_t{1} << v)) c.vertices.push_back(v);
        }
        cells_.push_back(std::move(c));
    }
    std::sort(cells_.begin(), cells_.end(), [](const Cell& x, const Cell& y) {
        if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
        return x.vertices < y.vertices;
    });
}

std::vector<Cell> ArborealComplex::cells_of_dimension(int m) const {
    std::vector<Cell> out;
    for (const auto& c : cells_) {
        if (c.dimension(n_) == m) out.push_back(c);
    }
    return out;
}

std::size_t ArborealComplex::count(int m) const {
    return static_cast<std::size_t>(std::count_if(
        cells_.begin(), cells_.end(), [&](const Cell& c) { return c.dimension(n_) == m; }));
}

bool ArborealComplex::is_face(const Cell& face, const Cell& cell) {
    return std::includes(face.vertices.begin(), face.vertices.end(), cell.vertices.begin(),
                         cell.vertices.end());
}

std::vector<std::pair<Cell, Cell>> ArborealComplex::hasse_edges() const {
    std::vector<std::pair<Cell, Cell>> out;
    for (const auto& cell : cells_) {
        for (const auto& face : cells_) {
            if (face.vertices.size() == cell.vertices.size() + 1 && is_face(face, cell)) {
                out.emplace_back(cell, face);
            }
        }
    }
    return out;
}

long long ArborealComplex::euler_characteristic() const {
    long long chi = 0;
    for (const auto& c : cells_) chi += (c.dimension(n_) % 2 == 0) ? 1 : -1;
    return chi;
}

std::string ArborealComplex::region_label(int object) const {
    if (!quiver_.has_object(object)) throw DomainError("no object " + std::to_string(object));
    if (object == 0) return "U_0 (unbounded)";
    std::string label = "U_v" + std::to_string(object - 1);
    if (object == n_ + 1) label += " (top)";
    return label;
}

ArborealComplex cell_complex(int n) { return ArborealComplex(n); }

Morphism top_cell_morphism(const Cell& c) {
    if (c.vertices.size() != 2 || c.vertices[0] >= c.vertices[1]) {
        throw DomainError("top cells are indexed by two distinct objects, got " + to_string(c));
    }
    return {c.vertices[0], c.vertices[1]};
}

Cell morphism_top_cell(Morphism f) {
    if (f.is_identity() || f.source > f.target || f.source < 0) {
        throw DomainError("top cells correspond to non-identity morphisms, got " + to_string(f));
    }
    return Cell{{f.source, f.target}};
}

// ---------------------------------------------------------------------------

PuncturedLink ingest_closed_set(int n,
                                const std::vector<std::pair<Cell, CellIntersection>>& flags) {
    ArborealComplex complex(n);
    const auto& q = complex.quiver();
    MorphismSet punctures(q);
    std::vector<Morphism> empty;
    std::map<Morphism, bool> seen;
    for (const auto& [cell, flag] : flags) {
        const Morphism f = top_cell_morphism(cell);
        if (!q.contains(f)) {
            throw DomainError("cell " + to_string(cell) + " is not a top cell for n = " +
                              std::to_string(n));
        }
        if (!seen.emplace(f, true).second) {
            throw DomainError("duplicate flag for cell " + to_string(cell));
        }
        if (flag != CellIntersection::Full) punctures.insert(f);
        if (flag == CellIntersection::Empty) empty.push_back(f);
    }
    for (const auto& cell : complex.top_cells()) {
        if (!seen.contains(top_cell_morphism(cell))) {
            throw DomainError("missing flag for cell " + to_string(cell));
        }
    }
    std::sort(empty.begin(), empty.end());
    return {std::move(complex), std::move(punctures), std::move(empty)};
}

PuncturedLink read_flag_file(int n, std::istream& in) {
    std::vector<std::pair<Cell, CellIntersection>> flags;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string pair_text;
        std::string word;
        if (!(ls >> pair_text)) continue;
        const auto where = "flag file line " + std::to_string(line_no) + ": ";
        if (!(ls >> word)) throw DomainError(where + "expected 'a,b full|proper|empty'");
        std::string trailing;
        if (ls >> trailing) throw DomainError(where + "unexpected trailing text '" + trailing + "'");
        const auto comma = pair_text.find(',');
        if (comma == std::string::npos) throw DomainError(where + "expected 'a,b'");
        Morphism f{};
        try {
            f = parse_morphism(pair_text.substr(0, comma) + "->" + pair_text.substr(comma + 1));
        } catch (const DomainError&) {
            throw DomainError(where + "malformed cell '" + pair_text + "'");
        }
        CellIntersection flag;
        if (word == "full") {
            flag = CellIntersection::Full;
        } else if (word == "proper") {
            flag = CellIntersection::Proper;
        } else if (word == "empty") {
            flag = CellIntersection::Empty;
        } else {
            throw DomainError(where + "unknown flag '" + word + "'");
        }
        flags.emplace_back(Cell{{std::min(f.source, f.target), std::max(f.source, f.target)}},
                           flag);
    }
    return ingest_closed_set(n, flags);
}

// ---------------------------------------------------------------------------

std::string to_string(LooseReason r) {
    switch (r) {
        case LooseReason::Punctured: return "punctured";
        case LooseReason::Saturation: return "saturation";
        case LooseReason::NotInClosure: return "not-in-closure";
    }
    return "unknown";
}

LooseReport loose_report(int n, const MorphismSet& w) {
    const LinearQuiver q = make_quiver(n);
    if (w.quiver() != q) {
        throw DomainError("puncture set belongs to a quiver with " +
                          std::to_string(w.quiver().size()) + " objects, expected " +
                          std::to_string(q.size()));
    }
    if (w.has_identity_member()) {
        throw DomainError("puncture sets contain non-identity morphisms only");
    }
    ClosedMorphismSet closure = closure_2of6(q, w);
    std::vector<CellVerdict> cells;
    bool all_loose = true;
    for (int a = 0; a < q.size(); ++a) {
        for (int b = a + 1; b < q.size(); ++b) {
            CellVerdict v;
            v.morphism = {a, b};
            v.punctured = w.contains(v.morphism);
            v.loose = closure.contains(v.morphism);
            if (v.punctured) {
                v.reason = LooseReason::Punctured;
            } else if (v.loose) {
                v.reason = LooseReason::Saturation;
                v.step = closure.step_for(v.morphism);
            }
            all_loose = all_loose && v.loose;
            cells.push_back(v);
        }
    }
    const LocalizedCategory lc(q, closure);
    const SkeletonReport sk = skeleton(lc);
    if (sk.vanishing != all_loose || closure.is_full() != all_loose) {
        throw ModelViolation("global looseness, sheaf vanishing and closure fullness disagree");
    }
    return LooseReport{n,          w,          std::move(closure), std::move(cells),
                       all_loose,  sk.vanishing, n < 3,           sk.classes.size(), {}};
}

LooseReport loose_report(const PuncturedLink& link) {
    LooseReport report = loose_report(link.complex.n(), link.punctures);
    report.empty_cells = link.empty_cells;
    return report;
}

SheafPresentation sheaf_presentation(int n, const MorphismSet& w) {
    const LinearQuiver q = make_quiver(n);
    if (w.has_identity_member()) {
        throw DomainError("puncture sets contain non-identity morphisms only");
    }
    LocalizedCategory lc(q, closure_2of6(q, w));
    SkeletonReport sk = skeleton(lc);
    return {std::move(lc), std::move(sk)};
}

}  // namespace arbor
