#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbor/closure.hpp"
#include "arbor/localization.hpp"
#include "arbor/modcat.hpp"
#include "arbor/quiver.hpp"

namespace arbor {

/// A cell of the linear arboreal link, named by the set of complement regions
/// (objects of Q) whose closures meet along it.
struct Cell {
    std::vector<int> vertices;  // sorted, 2 <= size <= n+1

    /// Dimension inside a link of ambient parameter n: n - |S| + 1.
    int dimension(int n) const { return n - static_cast<int>(vertices.size()) + 1; }
    bool is_top() const { return vertices.size() == 2; }

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

class ArborealComplex {
public:
    explicit ArborealComplex(int n);

    int n() const { return n_; }
    const LinearQuiver& quiver() const { return quiver_; }

    /// All cells, by decreasing dimension, lexicographic within a dimension.
    const std::vector<Cell>& cells() const { return cells_; }
    std::vector<Cell> cells_of_dimension(int m) const;
    std::size_t count(int m) const;
    std::vector<Cell> top_cells() const { return cells_of_dimension(n_ - 1); }

    /// `face` lies in the closure of `cell` iff cell's vertex set is contained
    /// in face's.
    static bool is_face(const Cell& face, const Cell& cell);
    /// Covering relations of the face poset (one dimension apart).
    std::vector<std::pair<Cell, Cell>> hasse_edges() const;

    long long euler_characteristic() const;

    /// Complement region of each object: 0 is the unbounded component, 1 the
    /// region below every dome, n+1 the region above every dome.
    std::string region_label(int object) const;

private:
    int n_;
    LinearQuiver quiver_;
    std::vector<Cell> cells_;
};

ArborealComplex cell_complex(int n);

Morphism top_cell_morphism(const Cell& c);
Cell morphism_top_cell(Morphism f);

enum class CellIntersection { Full, Proper, Empty };

/// The link with an open ball removed from each top cell in `punctures`.
struct PuncturedLink {
    ArborealComplex complex;
    MorphismSet punctures;
    /// Cells reported as disjoint from the closed set; counted as punctured.
    std::vector<Morphism> empty_cells;
};

/// One flag per top cell: `Proper` (and `Empty`) puts the cell's morphism
/// into W. Missing or repeated cells throw DomainError.
PuncturedLink ingest_closed_set(int n, const std::vector<std::pair<Cell, CellIntersection>>& flags);

/// Reads lines "a,b full|proper|empty"; blank lines and '#' comments ignored.
PuncturedLink read_flag_file(int n, std::istream& in);

enum class LooseReason { Punctured, Saturation, NotInClosure };
std::string to_string(LooseReason r);

struct CellVerdict {
    Morphism morphism;
    bool punctured = false;
    bool loose = false;
    LooseReason reason = LooseReason::NotInClosure;
    std::optional<SaturationStep> step;  // for LooseReason::Saturation
};

struct LooseReport {
    int n = 0;
    MorphismSet w;
    ClosedMorphismSet closure;
    std::vector<CellVerdict> cells;  // top cells in canonical morphism order
    bool loose = false;
    bool vanishing = false;
    bool dimension_warning = false;  // n < 3: the link has dimension below 5
    std::size_t skeleton_classes = 0;
    /// Cells flagged as missing the closed set entirely; treated as proper.
    std::vector<Morphism> empty_cells;
};

/// Per-cell looseness (cell {a,b} loose iff (a,b) is in the closure of W) and
/// the global verdict, cross-checked against the skeleton of the localized
/// category. Identities in W throw DomainError.
LooseReport loose_report(int n, const MorphismSet& w);
LooseReport loose_report(const PuncturedLink& link);

struct SheafPresentation {
    LocalizedCategory category;
    SkeletonReport skeleton;
};

SheafPresentation sheaf_presentation(int n, const MorphismSet& w);

}  // namespace arbor
