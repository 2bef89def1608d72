// equilef: equivariant Lefschetz, Reidemeister and Nielsen invariants from
// cellular chain data.
//
//   equilef <command> <file> [--format json|text] [--check-integrality strict|warn]
//           [--max-group-order N] [--timing]
//
// A file that does not exist as given is looked up in $EQUILEF_FIXTURES, then
// in the bundled fixtures directory.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "equilef/errors.hpp"
#include "equilef/io.hpp"

namespace fs = std::filesystem;

namespace {

fs::path resolve(const std::string& arg) {
    fs::path p(arg);
    if (fs::exists(p) || p.is_absolute()) return p;
    if (const char* env = std::getenv("EQUILEF_FIXTURES")) {
        fs::path q = fs::path(env) / p;
        if (fs::exists(q)) return q;
        if (fs::exists(q.replace_extension(".json"))) return q;
    }
    fs::path q = fs::path(EQUILEF_FIXTURE_DIR) / p;
    if (fs::exists(q)) return q;
    q.replace_extension(".json");
    return fs::exists(q) ? q : p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant fixed point invariants from cellular chain data"};
    std::string command, file, format = "text", integrality = "strict";
    int max_order = 256;
    bool timing = false;
    app.add_option("command", command, "validate | lefschetz | reidemeister | nielsen | compare | report")
        ->required()
        ->check(CLI::IsMember({"validate", "lefschetz", "reidemeister", "nielsen", "compare", "report"}));
    app.add_option("file", file, "input document (JSON)")->required();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--check-integrality", integrality, "strict fails on non-integral coefficients, warn reports them")
        ->check(CLI::IsMember({"strict", "warn"}));
    app.add_option("--max-group-order", max_order, "largest accepted group order")->check(CLI::PositiveNumber);
    app.add_flag("--timing", timing, "include wall-clock time in the report");
    CLI11_PARSE(app, argc, argv);

    equilef::InputDocument doc;
    try {
        doc = equilef::parse_document(resolve(file), equilef::ParseOptions{max_order});
    } catch (const equilef::Error& e) {
        std::cerr << "equilef: " << e.what() << "\n";
        return 1;
    }
    equilef::RunOptions options;
    options.strict_integrality = integrality == "strict";
    options.timing = timing;
    auto result = equilef::run(*equilef::parse_command(command), doc, options);
    std::cout << (format == "json" ? equilef::render_json(result.report) : equilef::render_text(result.report));
    return result.exit_code;
}
