#include <chrono>
#include <sstream>

#include "equilef/errors.hpp"
#include "equilef/io.hpp"
#include "equilef/trace.hpp"

namespace equilef {

std::optional<Command> parse_command(const std::string& name) {
    if (name == "validate") return Command::Validate;
    if (name == "lefschetz") return Command::Lefschetz;
    if (name == "reidemeister") return Command::Reidemeister;
    if (name == "nielsen") return Command::Nielsen;
    if (name == "compare") return Command::Compare;
    if (name == "report") return Command::Report;
    return std::nullopt;
}

const char* command_name(Command c) {
    switch (c) {
    case Command::Validate: return "validate";
    case Command::Lefschetz: return "lefschetz";
    case Command::Reidemeister: return "reidemeister";
    case Command::Nielsen: return "nielsen";
    case Command::Compare: return "compare";
    case Command::Report: return "report";
    }
    return "?";
}

std::string orbit_type_name(const GCWBundle& bundle, std::size_t subgroup_class) {
    const Subgroup& h = bundle.subgroup_classes.at(subgroup_class).front();
    std::string s = "G/{";
    for (std::size_t i = 0; i < h.members.size(); ++i) {
        if (i) s += ",";
        s += bundle.group.name(h.members[i]);
    }
    return s + "}";
}

Json invariant_entries(const ExtendedInvariant& ext, const GCWBundle& bundle, const EquivariantMapData& map,
                       bool reidemeister) {
    Json a = Json::array();
    for (const auto& [key, x] : ext.entries()) {
        const StratumComponent* c = bundle.find(key.first);
        const ComponentMap* m = map.find(key.first);
        std::string label = key.second.rep.q >= 0 && c && m
                                ? (reidemeister ? reidemeister_classifier(*c, *m) : lefschetz_classifier(*c, *m))
                                      .format(key.second)
                                : "?";
        a.push_back(Json{{"component", key.first}, {"class", label}, {"coefficient", coefficient_json(x)}});
    }
    return a;
}

Json burnside_entries(const BurnsideVector& b, const GCWBundle& bundle) {
    Json a = Json::array();
    for (const auto& [h, x] : b.coeffs)
        a.push_back(Json{{"orbit_type", orbit_type_name(bundle, h)}, {"coefficient", coefficient_json(x)}});
    return a;
}

namespace {

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::CrosscheckFailed:
    case ErrorKind::NonIntegralCoefficient:
    case ErrorKind::EquivalenceViolated: return 2;
    default: return 1;
    }
}

Json validation_json(const ValidationReport& v) {
    Json issues = Json::array();
    for (const auto& i : v.issues) {
        Json j{{"kind", i.kind}, {"component", i.component}};
        if (i.degree >= 0) j["degree"] = i.degree;
        if (i.row >= 0) j["row"] = i.row;
        if (i.col >= 0) j["col"] = i.col;
        j["message"] = i.message;
        issues.push_back(std::move(j));
    }
    return Json{{"ok", v.ok()}, {"issues", issues}};
}

Json lefschetz_json(const InputDocument& doc) {
    ExtendedInvariant ext = extended_global_lefschetz(doc.bundle, doc.map);
    Json comp = Json::array();
    for (const auto& [id, x] : identity_coefficients(ext, doc.bundle)) {
        const ComponentMap* m = doc.map.find(id);
        if (m && m->self_mapped) comp.push_back(Json{{"component", id}, {"coefficient", coefficient_json(x)}});
    }
    return Json{{"extended", invariant_entries(ext, doc.bundle, doc.map, false)},
                {"plain", burnside_entries(plain_global_lefschetz(ext, doc.bundle), doc.bundle)},
                {"identity_coefficients", comp}};
}

Json class_counts_json(const InputDocument& doc) {
    Json a = Json::array();
    for (const auto& c : doc.bundle.components) {
        const ComponentMap* m = doc.map.find(c.id);
        if (!m || !m->self_mapped) continue;
        Classifier cl = reidemeister_classifier(c, *m);
        auto n = cl.class_count();
        Json per = Json::array();
        for (int q = 0; q < c.ring->finite_part().order(); ++q) {
            auto k = cl.class_count_at(q);
            per.push_back(Json{{"element", c.ring->finite_part().name(q)},
                               {"classes", k ? Json(*k) : Json("infinite")}});
        }
        a.push_back(Json{{"component", c.id}, {"classes", n ? Json(*n) : Json("infinite")}, {"by_element", per}});
    }
    return a;
}

Json reidemeister_json(const InputDocument& doc) {
    ExtendedInvariant ext = extended_global_reidemeister(doc.bundle, doc.map);
    return Json{{"extended", invariant_entries(ext, doc.bundle, doc.map, true)},
                {"plain", invariant_entries(plain_reidemeister(ext, doc.bundle), doc.bundle, doc.map, true)},
                {"class_counts", class_counts_json(doc)}};
}

Json nielsen_json(const InputDocument& doc) {
    NielsenFunction n = nielsen_number(doc.bundle, doc.map, doc.phi ? *doc.phi : std::vector<PhiEntry>{});
    Json values = Json::array();
    for (const auto& [h, x] : n.values) values.push_back(Json{{"orbit_type", orbit_type_name(doc.bundle, h)}, {"value", x}});
    Json levels = Json::array();
    for (const auto& lvl : n.levels) {
        const StratumComponent& c = *doc.bundle.find(lvl.component);
        Json classes = Json::array();
        for (const auto& k : lvl.classes)
            classes.push_back(Json{{"class", c.ring->format(k.label.rep)},
                                   {"relative_index", coefficient_json(k.relative_index)},
                                   {"total_index", coefficient_json(k.total_index)},
                                   {"essential", k.essential}});
        levels.push_back(Json{{"component", lvl.component}, {"classes", classes}});
    }
    return Json{{"values", values}, {"levels", levels}};
}

// Fills "compare"; returns false when a cross-check fails.
bool compare_json(const InputDocument& doc, const RunOptions& options, Json& out) {
    bool ok = true;
    std::vector<std::string> warnings;
    auto* w = options.strict_integrality ? nullptr : &warnings;
    ExtendedInvariant lef = extended_global_lefschetz(doc.bundle, doc.map);
    ExtendedInvariant reid = extended_global_reidemeister(doc.bundle, doc.map);
    if (doc.fixed_points) {
        ExtendedInvariant geo = assemble_geometric_lefschetz(doc.bundle, doc.map, *doc.fixed_points, w);
        bool eq = geo == lef;
        ok &= eq;
        out["lefschetz"] = Json{{"geometric", invariant_entries(geo, doc.bundle, doc.map, false)},
                                {"verdict", eq ? "geometric = global: OK" : "geometric != global: FAILED"}};
    }
    if (doc.reidemeister_fixed_points) {
        ExtendedInvariant geo = assemble_geometric_reidemeister(doc.bundle, doc.map, *doc.reidemeister_fixed_points, w);
        bool eq = geo == reid;
        ok &= eq;
        out["reidemeister"] = Json{{"geometric", invariant_entries(geo, doc.bundle, doc.map, true)},
                                   {"verdict", eq ? "geometric = global: OK" : "geometric != global: FAILED"}};
    }
    CrosscheckReport cc = crosscheck_specialization(doc.bundle, doc.map);
    Json rows = Json::array();
    for (const auto& r : cc.rows) {
        const StratumComponent& c = *doc.bundle.find(r.component);
        rows.push_back(Json{{"component", r.component},
                            {"element", c.finite_ring->finite_part().name(r.element)},
                            {"integer_trace", coefficient_json(r.integer_trace)},
                            {"predicted", coefficient_json(r.predicted)},
                            {"ok", r.ok()}});
    }
    ok &= cc.ok();
    out["specialization"] = Json{{"ok", cc.ok()}, {"rows", rows}};
    bool forget = collapse_to_lefschetz(reid, doc.bundle, doc.map) == lef;
    ok &= forget;
    out["forgetful_refinement"] = forget;
    BurnsideVector via_reid = plain_global_lefschetz(
        collapse_to_lefschetz(plain_reidemeister(reid, doc.bundle), doc.bundle, doc.map), doc.bundle);
    bool square = via_reid == plain_global_lefschetz(lef, doc.bundle);
    ok &= square;
    out["pi_square"] = square;
    if (!warnings.empty()) out["warnings"] = warnings;
    out["ok"] = ok;
    return ok;
}

Json zero_json(const ZeroEquivalenceReport& z) {
    return Json{{"extended_lefschetz_zero", z.extended_lefschetz_zero},
                {"plain_lefschetz_zero", z.plain_lefschetz_zero},
                {"burnside_lefschetz_zero", z.burnside_lefschetz_zero},
                {"stratum_traces_zero", z.stratum_traces_zero},
                {"extended_reidemeister_zero", z.extended_reidemeister_zero},
                {"plain_reidemeister_zero", z.plain_reidemeister_zero},
                {"nielsen_zero", z.nielsen_zero},
                {"prenielsen_agree", z.prenielsen_agree()},
                {"nielsen_iff_plain_reidemeister", z.nielsen_matches_plain()},
                {"nielsen_iff_extended_reidemeister", z.nielsen_matches_extended()}};
}

}  // namespace

RunResult run(Command command, const InputDocument& doc, const RunOptions& options) {
    auto start = std::chrono::steady_clock::now();
    RunResult result;
    Json& r = result.report;
    r["command"] = command_name(command);
    auto name = doc.bundle.metadata.find("name");
    r["input"] = name == doc.bundle.metadata.end() ? "" : name->second;
    ValidationReport v = validate(doc.bundle, doc.map);
    r["validation"] = validation_json(v);
    std::string status = "ok";
    if (!v.ok()) {
        status = "validation_failed";
        result.exit_code = 1;
    } else {
        try {
            const bool all = command == Command::Report;
            if (all || command == Command::Lefschetz) r["lefschetz"] = lefschetz_json(doc);
            if (all || command == Command::Reidemeister) r["reidemeister"] = reidemeister_json(doc);
            if (all || command == Command::Nielsen) {
                try {
                    r["nielsen"] = nielsen_json(doc);
                } catch (const Error& e) {
                    if (!all) throw;
                    r["nielsen"] = Json{{"error", e.what()}};
                }
            }
            if (command == Command::Compare && !doc.fixed_points && !doc.reidemeister_fixed_points)
                throw Error(ErrorKind::InvalidArgument, "compare needs fixed_points or reidemeister_fixed_points");
            if (all || command == Command::Compare) {
                Json cmp;
                if (!compare_json(doc, options, cmp)) {
                    status = "crosscheck_failed";
                    result.exit_code = 2;
                }
                r["compare"] = cmp;
            }
            if (all && !r["nielsen"].contains("error")) {
                auto z = zero_equivalence_report(doc.bundle, doc.map, doc.phi ? *doc.phi : std::vector<PhiEntry>{});
                r["zero_equivalence"] = zero_json(z);
            }
        } catch (const Error& e) {
            r["error"] = Json{{"kind", error_kind_name(e.kind())}, {"message", e.detail()}};
            result.exit_code = exit_code_for(e);
            status = result.exit_code == 2 ? "crosscheck_failed" : "error";
        }
    }
    r["status"] = status;
    r["exit_code"] = result.exit_code;
    if (options.timing) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        r["timing_ms"] = static_cast<double>(us.count()) / 1000.0;
    }
    return result;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void entries(std::ostringstream& os, const Json& list) {
    if (list.empty()) os << "    0\n";
    for (const auto& e : list)
        os << "    " << scalar(e["coefficient"]) << " * (" << scalar(e["component"]) << ", " << scalar(e["class"]) << ")\n";
}

void orbit_entries(std::ostringstream& os, const Json& list, const char* key) {
    if (list.empty()) os << "    0\n";
    for (const auto& e : list) os << "    " << scalar(e[key]) << " [" << scalar(e["orbit_type"]) << "]\n";
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    os << report["command"].get<std::string>() << ": " << scalar(report["input"]) << "\n";
    const Json& v = report["validation"];
    os << "validation: " << (v["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    for (const auto& i : v["issues"]) {
        os << "  " << scalar(i["kind"]) << " " << scalar(i["component"]);
        if (i.contains("degree")) os << " degree " << i["degree"].dump();
        if (i.contains("row")) os << " entry (" << i["row"].dump() << "," << i["col"].dump() << ")";
        os << ": " << scalar(i["message"]) << "\n";
    }
    if (report.contains("lefschetz")) {
        os << "extended Lefschetz:\n";
        entries(os, report["lefschetz"]["extended"]);
        os << "plain Lefschetz:\n";
        orbit_entries(os, report["lefschetz"]["plain"], "coefficient");
    }
    if (report.contains("reidemeister")) {
        const Json& rr = report["reidemeister"];
        os << "extended Reidemeister:\n";
        entries(os, rr["extended"]);
        os << "plain Reidemeister:\n";
        entries(os, rr["plain"]);
        os << "class counts:\n";
        for (const auto& c : rr["class_counts"]) os << "    " << scalar(c["component"]) << ": " << scalar(c["classes"]) << "\n";
    }
    if (report.contains("nielsen")) {
        const Json& n = report["nielsen"];
        if (n.contains("error")) {
            os << "Nielsen: " << scalar(n["error"]) << "\n";
        } else {
            os << "Nielsen:\n";
            for (const auto& e : n["values"]) os << "    N(" << scalar(e["orbit_type"]) << ") = " << scalar(e["value"]) << "\n";
        }
    }
    if (report.contains("compare")) {
        const Json& c = report["compare"];
        if (c.contains("lefschetz")) os << "Lefschetz " << scalar(c["lefschetz"]["verdict"]) << "\n";
        if (c.contains("reidemeister")) os << "Reidemeister " << scalar(c["reidemeister"]["verdict"]) << "\n";
        os << "specialization identity: " << (c["specialization"]["ok"].get<bool>() ? "OK" : "FAILED") << "\n";
        os << "forgetful refinement: " << (c["forgetful_refinement"].get<bool>() ? "OK" : "FAILED") << "\n";
        os << "pi square: " << (c["pi_square"].get<bool>() ? "OK" : "FAILED") << "\n";
        if (c.contains("warnings"))
            for (const auto& w : c["warnings"]) os << "  warning: " << scalar(w) << "\n";
    }
    if (report.contains("zero_equivalence")) {
        os << "zero equivalence:\n";
        for (const auto& item : report["zero_equivalence"].items())
            os << "    " << item.key() << ": " << item.value().dump() << "\n";
    }
    if (report.contains("error"))
        os << "error: " << scalar(report["error"]["kind"]) << ": " << scalar(report["error"]["message"]) << "\n";
    os << "status: " << scalar(report["status"]) << " (exit " << report["exit_code"].dump() << ")\n";
    if (report.contains("timing_ms")) os << "time: " << report["timing_ms"].dump() << " ms\n";
    return os.str();
}

}  // namespace equilef
