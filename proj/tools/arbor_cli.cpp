// arbor: looseness and sheaf vanishing for punctured linear arboreal links.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "arbor/acceptance.hpp"
#include "arbor/arboreal.hpp"
#include "arbor/closure.hpp"
#include "arbor/error.hpp"
#include "arbor/frontgen.hpp"
#include "arbor/graph_export.hpp"
#include "arbor/localization.hpp"
#include "arbor/modcat.hpp"
#include "arbor/report_io.hpp"
#include "arbor/workers.hpp"

using namespace arbor;

namespace {

enum ExitCode { kOk = 0, kSelftestFailed = 1, kDomain = 2, kCapacity = 3, kModel = 4 };

struct RunConfig {
    int n = 0;
    std::string w;
    std::string format = "human";
    // oracle
    int prime = 2;
    int dmax = 2;
    std::string kind = "both";
    // localize
    bool composition = false;
    // loose-report
    std::string flags_path;
    std::string from_path;
    // front
    std::string tree;
    std::string punctures;
    std::string out_path;
    bool census = false;
    std::vector<int> resolutions{512};
    int venn = 0;
    // selftest
    int max_n = 3;
    std::vector<int> only;
};

MorphismSet parse_w(const LinearQuiver& q, const std::string& text) {
    MorphismSet w = parse_morphism_set(q, text);
    for (const auto& f : w.members()) {
        if (f.is_identity()) {
            throw DomainError("--w contains the identity " + to_string(f) +
                              "; puncture sets hold non-identity morphisms only");
        }
    }
    return w;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (cfg.format == f) return;
    }
    throw DomainError("--format " + cfg.format + " is not available for this subcommand");
}

void print_closure_human(const ClosedMorphismSet& c, std::ostream& out) {
    const auto& q = c.quiver();
    out << "W       : " << to_string(c.provenance()) << "\n";
    out << "closure : " << to_string(c.members()) << "\n";
    out << "size    : " << c.members().count() << " / " << q.morphism_count()
        << (c.is_full() ? " (full)" : "") << "\n";
    out << "passes  : " << c.passes() << "\n";
    for (const auto& s : c.trace()) {
        out << "  round " << s.round << ": +" << to_string(s.added) << " from (" << s.quadruple[0]
            << "," << s.quadruple[1] << "," << s.quadruple[2] << "," << s.quadruple[3] << ")\n";
    }
}

int run_closure(const RunConfig& cfg) {
    require_format(cfg, {"human", "json"});
    const LinearQuiver q = make_quiver(cfg.n);
    const auto c = closure_2of6(q, parse_w(q, cfg.w));
    if (cfg.format == "json") {
        Json j;
        j["n"] = cfg.n;
        j["closure"] = to_json(c);
        std::cout << dump(j);
    } else {
        print_closure_human(c, std::cout);
    }
    return kOk;
}

int run_localize(const RunConfig& cfg) {
    require_format(cfg, {"human", "json", "dot"});
    const LinearQuiver q = make_quiver(cfg.n);
    const auto loc = localize(q, parse_w(q, cfg.w));
    const auto& lc = loc.category;
    if (cfg.format == "dot") {
        write_category_dot(lc, std::cout);
        return kOk;
    }
    const auto sk = skeleton(lc);
    const auto image = iso_image_set(q, lc.inverted());
    if (cfg.format == "json") {
        Json j;
        j["n"] = cfg.n;
        j["w"] = to_string(loc.input);
        j["localization"] = localization_json(lc, sk, image, cfg.composition);
        std::cout << dump(j);
        return kOk;
    }
    const int s = lc.object_count();
    std::cout << "objects   : " << s << "\n";
    std::cout << "inverted  : " << to_string(lc.inverted().members()) << "\n";
    std::cout << "iso image : " << to_string(image) << "\n";
    std::cout << "hom sizes :\n      ";
    for (int b = 0; b < s; ++b) std::cout << std::setw(3) << b;
    std::cout << "\n";
    for (int a = 0; a < s; ++a) {
        std::cout << "  " << std::setw(3) << a << " ";
        for (int b = 0; b < s; ++b) std::cout << std::setw(3) << lc.hom_size(a, b);
        std::cout << "\n";
    }
    std::cout << "iso classes:";
    for (const auto& cls : sk.classes) {
        std::cout << " {";
        for (std::size_t i = 0; i < cls.size(); ++i) std::cout << (i ? "," : "") << cls[i];
        std::cout << "}";
    }
    std::cout << "\nvanishing : " << (sk.vanishing ? "true" : "false") << "\n";
    if (cfg.composition) {
        std::cout << "composition (class ids; row = first, column = second):\n";
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                for (int c = 0; c < s; ++c) {
                    if (lc.hom_size(a, b) == 0 || lc.hom_size(b, c) == 0) continue;
                    std::cout << "  " << a << "->" << b << "->" << c << ":";
                    for (const auto& f : lc.hom(a, b)) {
                        std::cout << " [";
                        bool first = true;
                        for (const auto& g : lc.hom(b, c)) {
                            std::cout << (first ? "" : " ") << lc.compose(f, g).class_id;
                            first = false;
                        }
                        std::cout << "]";
                    }
                    std::cout << "\n";
                }
    }
    return kOk;
}

int run_oracle(const RunConfig& cfg) {
    require_format(cfg, {"human", "json"});
    const LinearQuiver q = make_quiver(cfg.n);
    const auto w = parse_w(q, cfg.w);
    const auto closure = closure_2of6(q, w);
    std::vector<ForcedIsoSet> results;
    if (cfg.kind == "reps" || cfg.kind == "both") {
        results.push_back(forced_iso_reps(q, w, cfg.prime, cfg.dmax));
    }
    if (cfg.kind == "representable" || cfg.kind == "both") {
        results.push_back(forced_iso_representable(q, closure));
    }
    bool all_agree = true;
    for (const auto& r : results) all_agree = all_agree && r.forced == closure.members();
    if (cfg.format == "json") {
        Json j;
        j["n"] = cfg.n;
        j["w"] = to_string(w);
        j["closure"] = to_string(closure.members());
        Json list = Json::array();
        for (const auto& r : results) list.push_back(to_json(r, closure));
        j["oracles"] = std::move(list);
        j["agree"] = all_agree;
        std::cout << dump(j);
    } else {
        std::cout << "closure : " << to_string(closure.members()) << "\n";
        for (const auto& r : results) {
            std::cout << to_string(r.kind);
            if (r.kind == OracleKind::Representations) std::cout << " (F" << r.prime << ", dmax " << r.dmax << ")";
            std::cout << ": " << r.family_size << " modules, forced " << to_string(r.forced) << " -> "
                      << (r.forced == closure.members() ? "agrees" : "DISAGREES") << "\n";
        }
    }
    return kOk;
}

void print_report_human(const LooseReport& r, std::ostream& out) {
    out << "n = " << r.n << ", W = {" << to_string(r.w) << "}\n";
    out << "closure: " << r.closure.members().count() << " of " << r.closure.quiver().morphism_count()
        << " morphisms, " << r.closure.passes() << (r.closure.passes() == 1 ? " pass\n" : " passes\n");
    out << std::left << std::setw(8) << "cell" << std::setw(10) << "morphism" << std::setw(7) << "loose"
        << "reason\n";
    std::size_t loose = 0;
    for (const auto& c : r.cells) {
        out << std::setw(8) << to_string(morphism_top_cell(c.morphism)) << std::setw(10)
            << to_string(c.morphism) << std::setw(7) << (c.loose ? "yes" : "no") << to_string(c.reason);
        if (c.step) {
            out << " (round " << c.step->round << ", quadruple " << c.step->quadruple[0] << ","
                << c.step->quadruple[1] << "," << c.step->quadruple[2] << "," << c.step->quadruple[3] << ")";
        }
        out << "\n";
        loose += c.loose ? 1 : 0;
    }
    out << std::right;
    out << "loose cells: " << loose << " / " << r.cells.size() << "\n";
    out << "loose: " << (r.loose ? "true" : "false") << "\n";
    out << "vanishing: " << (r.vanishing ? "true" : "false") << "\n";
    out << "isomorphism classes: " << r.skeleton_classes << "\n";
    for (const auto& f : r.empty_cells) {
        out << "note: cell " << to_string(morphism_top_cell(f))
            << " misses the closed set entirely; treated as proper\n";
    }
    if (r.dimension_warning) {
        out << "warning: n < 3; the combinatorial verdicts hold, the geometric looseness reading "
               "needs 2n-1 >= 5\n";
    }
}

int run_loose_report(const RunConfig& cfg) {
    require_format(cfg, {"human", "json", "dot"});
    std::optional<LooseReport> report;
    if (!cfg.from_path.empty()) {
        std::ifstream in(cfg.from_path);
        if (!in) throw DomainError("cannot read " + cfg.from_path);
        std::stringstream text;
        text << in.rdbuf();
        report = loose_report_from_json(parse_json(text.str()));
    } else if (!cfg.flags_path.empty()) {
        std::ifstream in(cfg.flags_path);
        if (!in) throw DomainError("cannot read " + cfg.flags_path);
        report = loose_report(read_flag_file(cfg.n, in));
    } else {
        const LinearQuiver q = make_quiver(cfg.n);
        report = loose_report(cfg.n, parse_w(q, cfg.w));
    }
    if (cfg.format == "json") {
        std::cout << dump(to_json(*report));
    } else if (cfg.format == "dot") {
        write_face_poset_dot(cell_complex(report->n), std::cout, &*report);
    } else {
        print_report_human(*report, std::cout);
    }
    return kOk;
}

int run_front(const RunConfig& cfg) {
    require_format(cfg, {"human", "json"});
    if (cfg.venn != 0) {
        if (cfg.out_path.empty()) throw DomainError("--venn needs --out");
        std::ofstream out(cfg.out_path);
        if (!out) throw DomainError("cannot write " + cfg.out_path);
        write_venn_svg(venn_layout(cfg.venn), out);
        return kOk;
    }
    const RootedTree tree = parse_tree(cfg.tree);
    std::vector<Morphism> punctures;
    if (!cfg.punctures.empty()) {
        const LinearQuiver q(tree.size() + 1);
        punctures = parse_w(q, cfg.punctures).members();
    }
    const auto diagram = front_curves(tree, punctures);
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) throw DomainError("cannot write " + cfg.out_path);
        write_svg(diagram, out);
    }
    if (!cfg.census) return kOk;
    std::vector<RegionCensus> results;
    for (int res : cfg.resolutions) results.push_back(region_census(diagram, res));
    if (cfg.format == "json") {
        Json j;
        j["tree"] = to_string(tree);
        j["linear"] = tree.is_linear();
        j["punctures"] = to_string(diagram.punctures);
        Json list = Json::array();
        for (const auto& r : results) list.push_back(to_json(r));
        j["census"] = std::move(list);
        std::cout << dump(j);
    } else {
        for (const auto& r : results) {
            std::cout << "resolution " << r.resolution << ": " << r.bounded << " bounded + " << r.unbounded
                      << " unbounded";
            if (tree.is_linear()) std::cout << (r.labels_bijective ? ", labels match objects" : ", labels DO NOT match");
            std::cout << "\n";
        }
    }
    return kOk;
}

int run_selftest(const RunConfig& cfg) {
    AcceptanceOptions opt;
    opt.max_n = cfg.max_n;
    opt.only = cfg.only;
    const auto results = run_acceptance(opt, [](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
    });
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    std::cout << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? kOk : kSelftestFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Looseness and sheaf vanishing for punctured linear arboreal links"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
        sub->add_option("--format", cfg.format, "Output encoding")->check(CLI::IsMember(allowed));
    };
    auto add_nw = [&](CLI::App* sub, bool w_required) {
        sub->add_option("--n", cfg.n, "Ambient parameter; the quiver has n+2 objects")->required();
        auto* w = sub->add_option("--w", cfg.w, "Puncture set, e.g. \"0->2,1->3\"");
        if (w_required) w->required();
        return w;
    };

    auto* closure = app.add_subcommand("closure", "2-out-of-6 closure of W");
    add_nw(closure, true);
    add_format(closure, {"human", "json"});

    auto* localize = app.add_subcommand("localize", "Finite model of Q[W^-1]");
    add_nw(localize, true);
    localize->add_flag("--composition", cfg.composition, "Print the full composition table");
    add_format(localize, {"human", "json", "dot"});

    auto* oracle = app.add_subcommand("oracle", "Module-theoretic forced-isomorphism sets");
    add_nw(oracle, true);
    oracle->add_option("--p", cfg.prime, "Field size (prime)");
    oracle->add_option("--dmax", cfg.dmax, "Largest dimension per object");
    oracle->add_option("--kind", cfg.kind, "Module family")
        ->check(CLI::IsMember({"reps", "representable", "both"}));
    add_format(oracle, {"human", "json"});

    auto* loose = app.add_subcommand("loose-report", "Per-cell looseness and sheaf vanishing");
    loose->add_option("--n", cfg.n, "Ambient parameter");
    auto* lw = loose->add_option("--w", cfg.w, "Puncture set");
    auto* lf = loose->add_option("--flags", cfg.flags_path, "Flag file: lines \"a,b full|proper|empty\"");
    auto* lj = loose->add_option("--from", cfg.from_path, "Re-emit a JSON report after validating it");
    lw->excludes(lf)->excludes(lj);
    lf->excludes(lj);
    add_format(loose, {"human", "json", "dot"});

    auto* front = app.add_subcommand("front", "Planar front diagram as SVG, with region census");
    front->add_option("--tree", cfg.tree, "Parent list, e.g. \"root;0;1\"");
    front->add_option("--punctures", cfg.punctures, "Punctured top cells, e.g. \"1->2\"");
    front->add_option("--out", cfg.out_path, "SVG output path");
    front->add_flag("--census", cfg.census, "Print complement region counts");
    front->add_option("--resolution", cfg.resolutions, "Census raster sizes")->expected(1, 8);
    front->add_option("--venn", cfg.venn, "Draw only the Venn layout for n = 2 or 3");
    add_format(front, {"human", "json"});

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->add_option("--max-n", cfg.max_n, "Cap on n for the exhaustive checks")->check(CLI::Range(1, 4));
    selftest->add_option("--only", cfg.only, "Run only these check ids")->delimiter(',')->check(CLI::Range(1, 9));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kDomain;
    }

    try {
        worker_count();  // validates ARBOR_WORKERS before any work
        if (*loose) {
            if (cfg.from_path.empty() && loose->count("--n") == 0) {
                throw DomainError("loose-report needs --n");
            }
            if (cfg.from_path.empty() && cfg.flags_path.empty() && loose->count("--w") == 0) {
                throw DomainError("loose-report needs --w, --flags or --from");
            }
            return run_loose_report(cfg);
        }
        if (*front) {
            if (cfg.venn == 0 && cfg.tree.empty()) throw DomainError("front needs --tree or --venn");
            if (cfg.venn != 0 && !cfg.tree.empty()) throw DomainError("--venn and --tree conflict");
            if (!cfg.census && cfg.out_path.empty()) throw DomainError("front needs --out or --census");
            return run_front(cfg);
        }
        if (*closure) return run_closure(cfg);
        if (*localize) return run_localize(cfg);
        if (*oracle) return run_oracle(cfg);
        if (*selftest) return run_selftest(cfg);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kCapacity;
    } catch (const ModelViolation& e) {
        std::cerr << "model violation: " << e.what() << "\n";
        return kModel;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kDomain;
}
