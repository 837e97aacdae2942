#include "arbor/graph_export.hpp"

#include <string>

namespace arbor {

namespace {

std::string node_id(const Cell& c) {
    std::string id = "c";
    for (int v : c.vertices) id += "_" + std::to_string(v);
    return id;
}

}  // namespace

void write_category_dot(const LocalizedCategory& lc, std::ostream& out) {
    const int s = lc.object_count();
    out << "digraph localization {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < s; ++v) out << "  " << v << ";\n";
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            for (const auto& f : lc.hom(a, b)) {
                if (f == lc.identity(a) && a == b) continue;
                const bool from_quiver = a <= b && lc.image({a, b}) == f;
                std::string style = from_quiver ? "solid" : "dashed";
                if (lc.is_iso(f)) style += ",bold";
                out << "  " << a << " -> " << b << " [label=\"" << f.representative.apex << "/"
                    << f.representative.pivot << "\", style=\"" << style << "\"];\n";
            }
        }
    }
    out << "}\n";
}

void write_face_poset_dot(const ArborealComplex& complex, std::ostream& out,
                          const LooseReport* report) {
    out << "digraph face_poset {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box];\n";
    for (const auto& c : complex.cells()) {
        out << "  " << node_id(c) << " [label=\"" << to_string(c) << "\\ndim "
            << c.dimension(complex.n()) << "\"";
        if (report != nullptr && c.is_top()) {
            const Morphism f = top_cell_morphism(c);
            for (const auto& v : report->cells) {
                if (v.morphism == f && v.loose) out << ", style=filled, fillcolor=\"#f2b8b8\"";
            }
        }
        out << "];\n";
    }
    for (const auto& [cell, face] : complex.hasse_edges()) {
        out << "  " << node_id(cell) << " -> " << node_id(face) << ";\n";
    }
    out << "}\n";
}

}  // namespace arbor
