#include "arbor/report_io.hpp"

#include "arbor/error.hpp"

namespace arbor {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw DomainError(std::string("report is missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw DomainError(std::string("report field '") + key + "' has the wrong type");
    }
}

Json morphism_list(const std::vector<Morphism>& ms) {
    Json out = Json::array();
    for (const auto& f : ms) out.push_back(to_string(f));
    return out;
}

}  // namespace

Json to_json(const SaturationStep& step) {
    Json j;
    j["added"] = to_string(step.added);
    j["round"] = step.round;
    j["quadruple"] = step.quadruple;
    return j;
}

SaturationStep saturation_step_from_json(const Json& j) {
    SaturationStep step;
    step.added = parse_morphism(field<std::string>(j, "added"));
    step.round = field<int>(j, "round");
    step.quadruple = field<std::array<int, 4>>(j, "quadruple");
    return step;
}

Json to_json(const ClosedMorphismSet& closure) {
    Json j;
    j["generators"] = to_string(closure.provenance());
    j["members"] = to_string(closure.members());
    j["size"] = closure.members().count();
    j["full"] = closure.is_full();
    j["passes"] = closure.passes();
    Json trace = Json::array();
    for (const auto& step : closure.trace()) trace.push_back(to_json(step));
    j["trace"] = std::move(trace);
    return j;
}

ClosedMorphismSet closure_from_json(const LinearQuiver& q, const Json& j) {
    const auto members = parse_morphism_set(q, field<std::string>(j, "members"));
    const auto generators = parse_morphism_set(q, field<std::string>(j, "generators"));
    std::vector<SaturationStep> trace;
    for (const auto& s : field<Json>(j, "trace")) trace.push_back(saturation_step_from_json(s));
    return ClosedMorphismSet::restore(members, generators, field<int>(j, "passes"), std::move(trace));
}

Json to_json(const LooseReport& report) {
    Json j;
    j["n"] = report.n;
    j["w"] = to_string(report.w);
    j["closure"] = to_json(report.closure);
    Json cells = Json::array();
    for (const auto& c : report.cells) {
        Json cell;
        cell["cell"] = to_string(morphism_top_cell(c.morphism));
        cell["morphism"] = to_string(c.morphism);
        cell["punctured"] = c.punctured;
        cell["loose"] = c.loose;
        cell["reason"] = to_string(c.reason);
        if (c.step) cell["step"] = to_json(*c.step);
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    j["loose_cells"] = std::count_if(report.cells.begin(), report.cells.end(),
                                     [](const CellVerdict& c) { return c.loose; });
    j["loose"] = report.loose;
    j["vanishing"] = report.vanishing;
    j["skeleton_classes"] = report.skeleton_classes;
    j["dimension_warning"] = report.dimension_warning;
    j["empty_cells"] = morphism_list(report.empty_cells);
    return j;
}

LooseReport loose_report_from_json(const Json& j) {
    const int n = field<int>(j, "n");
    const LinearQuiver q = make_quiver(n);
    const MorphismSet w = parse_morphism_set(q, field<std::string>(j, "w"));
    ClosedMorphismSet closure = closure_from_json(q, field<Json>(j, "closure"));
    if (!(closure.provenance() == w)) {
        throw DomainError("report closure was not generated by its puncture set");
    }

    std::vector<CellVerdict> cells;
    for (const auto& c : field<Json>(j, "cells")) {
        CellVerdict v;
        v.morphism = parse_morphism(field<std::string>(c, "morphism"));
        v.punctured = field<bool>(c, "punctured");
        v.loose = field<bool>(c, "loose");
        const auto reason = field<std::string>(c, "reason");
        if (reason == "punctured") {
            v.reason = LooseReason::Punctured;
        } else if (reason == "saturation") {
            v.reason = LooseReason::Saturation;
        } else if (reason == "not-in-closure") {
            v.reason = LooseReason::NotInClosure;
        } else {
            throw DomainError("unknown looseness reason '" + reason + "'");
        }
        if (c.contains("step")) v.step = saturation_step_from_json(c.at("step"));
        if (field<std::string>(c, "cell") != to_string(morphism_top_cell(v.morphism))) {
            throw DomainError("cell and morphism disagree for " + to_string(v.morphism));
        }
        cells.push_back(v);
    }
    std::vector<Morphism> empty;
    for (const auto& e : field<Json>(j, "empty_cells")) empty.push_back(parse_morphism(e.get<std::string>()));

    LooseReport report{n,
                       w,
                       std::move(closure),
                       std::move(cells),
                       field<bool>(j, "loose"),
                       field<bool>(j, "vanishing"),
                       field<bool>(j, "dimension_warning"),
                       field<std::size_t>(j, "skeleton_classes"),
                       std::move(empty)};

    // A report is only accepted if it says what a fresh computation says.
    const LooseReport fresh = loose_report(n, w);
    bool same = fresh.loose == report.loose && fresh.vanishing == report.vanishing &&
                fresh.skeleton_classes == report.skeleton_classes &&
                fresh.dimension_warning == report.dimension_warning &&
                fresh.closure.members() == report.closure.members() &&
                fresh.cells.size() == report.cells.size();
    for (std::size_t i = 0; same && i < fresh.cells.size(); ++i) {
        const auto& a = fresh.cells[i];
        const auto& b = report.cells[i];
        same = a.morphism == b.morphism && a.punctured == b.punctured && a.loose == b.loose &&
               a.reason == b.reason;
    }
    if (!same) throw DomainError("report contents disagree with a fresh computation");
    return report;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const SkeletonReport& sk) {
    Json j;
    j["classes"] = sk.classes;
    j["hom_sizes"] = sk.hom_sizes;
    j["vanishing"] = sk.vanishing;
    return j;
}

Json localization_json(const LocalizedCategory& lc, const SkeletonReport& sk,
                       const MorphismSet& iso_image, bool with_composition) {
    const int s = lc.object_count();
    Json j;
    j["objects"] = s;
    j["inverted"] = to_string(lc.inverted().members());
    std::vector<std::vector<std::size_t>> sizes(static_cast<std::size_t>(s));
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) sizes[static_cast<std::size_t>(a)].push_back(lc.hom_size(a, b));
    }
    j["hom_sizes"] = sizes;
    j["max_hom_size"] = lc.max_hom_size();
    j["iso_image"] = to_string(iso_image);
    j["skeleton"] = to_json(sk);

    Json homs = Json::array();
    for (int a = 0; a < s; ++a) {
        for (int b = 0; b < s; ++b) {
            for (const auto& f : lc.hom(a, b)) {
                Json c;
                c["source"] = a;
                c["target"] = b;
                c["class"] = f.class_id;
                c["apex"] = f.representative.apex;
                c["pivot"] = f.representative.pivot;
                c["members"] = lc.class_members(f).size();
                c["iso"] = lc.is_iso(f);
                homs.push_back(std::move(c));
            }
        }
    }
    j["morphisms"] = std::move(homs);

    if (with_composition) {
        Json table = Json::array();
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b)
                for (int c = 0; c < s; ++c) {
                    if (lc.hom_size(a, b) == 0 || lc.hom_size(b, c) == 0) continue;
                    Json rows = Json::array();
                    for (const auto& f : lc.hom(a, b)) {
                        Json row = Json::array();
                        for (const auto& g : lc.hom(b, c)) row.push_back(lc.compose(f, g).class_id);
                        rows.push_back(std::move(row));
                    }
                    Json entry;
                    entry["a"] = a;
                    entry["b"] = b;
                    entry["c"] = c;
                    entry["table"] = std::move(rows);
                    table.push_back(std::move(entry));
                }
        j["composition"] = std::move(table);
    }
    return j;
}

Json to_json(const ForcedIsoSet& forced, const ClosedMorphismSet& closure) {
    Json j;
    j["kind"] = to_string(forced.kind);
    j["prime"] = forced.prime;
    if (forced.kind == OracleKind::Representations) j["dmax"] = forced.dmax;
    j["family_size"] = forced.family_size;
    j["forced"] = to_string(forced.forced);
    j["agrees"] = forced.forced == closure.members();
    const auto missing = closure.members().members();
    Json extra = Json::array();
    Json lacking = Json::array();
    for (const auto& f : forced.forced.members()) {
        if (!closure.contains(f)) extra.push_back(to_string(f));
    }
    for (const auto& f : missing) {
        if (!forced.forced.contains(f)) lacking.push_back(to_string(f));
    }
    j["forced_not_in_closure"] = std::move(extra);
    j["closure_not_forced"] = std::move(lacking);
    return j;
}

Json to_json(const RegionCensus& census) {
    Json j;
    j["resolution"] = census.resolution;
    j["bounded"] = census.bounded;
    j["unbounded"] = census.unbounded;
    Json regions = Json::array();
    for (const auto& r : census.regions) {
        Json e;
        e["pixels"] = r.pixels;
        e["bounded"] = r.bounded;
        e["object"] = r.object ? Json(*r.object) : Json(nullptr);
        regions.push_back(std::move(e));
    }
    j["regions"] = std::move(regions);
    j["labels_bijective"] = census.labels_bijective;
    return j;
}

}  // namespace arbor
