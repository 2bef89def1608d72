#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equilef/complex.hpp"
#include "equilef/invariants.hpp"

namespace equilef {

using Json = nlohmann::ordered_json;

struct InputDocument {
    int schema_version = 1;
    GCWBundle bundle;
    EquivariantMapData map;
    std::optional<FixedPointTable> fixed_points;
    std::optional<FixedPointTable> reidemeister_fixed_points;
    std::optional<std::vector<PhiEntry>> phi;
};

struct ParseOptions {
    int max_group_order = 256;
};

InputDocument parse_document(const std::filesystem::path& path, const ParseOptions& options = {});
InputDocument parse_document_text(const std::string& text, const ParseOptions& options = {});
Json emit_document(const InputDocument& doc);

enum class Command { Validate, Lefschetz, Reidemeister, Nielsen, Compare, Report };

std::optional<Command> parse_command(const std::string& name);
const char* command_name(Command c);

struct RunOptions {
    bool strict_integrality = true;
    bool timing = false;
};

struct RunResult {
    Json report;
    int exit_code = 0;
};

RunResult run(Command command, const InputDocument& doc, const RunOptions& options = {});
std::string render_text(const Json& report);
std::string render_json(const Json& report);

// Entry lists as they appear in reports.
Json invariant_entries(const ExtendedInvariant& ext, const GCWBundle& bundle, const EquivariantMapData& map,
                       bool reidemeister);
Json burnside_entries(const BurnsideVector& b, const GCWBundle& bundle);
std::string orbit_type_name(const GCWBundle& bundle, std::size_t subgroup_class);
Json coefficient_json(const Rational& q);

}  // namespace equilef
