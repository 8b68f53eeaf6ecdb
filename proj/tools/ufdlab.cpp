// Command-line front end: claim list / run / run-all and ring export.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufdlab/claims.hpp"
#include "ufdlab/presentation_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ufdlab;

namespace {

constexpr int kUsageError = 3;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_output(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

RunOptions run_options(long long timeout_ms) {
    RunOptions o;
    if (timeout_ms > 0)
        o.timeout = std::chrono::milliseconds(timeout_ms);
    else
        o.timeout.reset();
    return o;
}

/// Fixture files hold {"claims": [{"claim_id": ..., "params": {...}}, ...]}.
std::vector<std::pair<std::string, json>> load_suite(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw UsageError("no fixture directory " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, json>> claims;
    for (const auto& f : files) {
        json doc = read_json_file(f.string());
        if (!doc.contains("claims") || !doc.at("claims").is_array())
            throw UsageError(f.string() + ": expected a \"claims\" array");
        for (const auto& c : doc.at("claims")) {
            if (!c.contains("claim_id")) throw UsageError(f.string() + ": claim without \"claim_id\"");
            claims.emplace_back(c.at("claim_id").get<std::string>(), c.value("params", json::object()));
        }
    }
    if (claims.empty()) throw UsageError("suite " + dir.string() + " has no claims");
    return claims;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ufdlab: computer-algebra checks for graded UFD constructions"};
    app.require_subcommand(1);

    auto* claim = app.add_subcommand("claim", "Run registered claims");
    claim->require_subcommand(1);
    auto* list = claim->add_subcommand("list", "List claim ids with the statement each one checks");
    bool list_json = false;
    list->add_flag("--json", list_json, "Print the registry as JSON (ids, anchors, default parameters)");

    auto* run = claim->add_subcommand("run", "Run one claim");
    std::string run_id, params_path, out_path;
    long long timeout_ms = 60000;
    run->add_option("id", run_id, "Claim id")->required();
    run->add_option("--params", params_path, "JSON file with parameters (merged over the defaults)");
    run->add_option("--out", out_path, "Write the report here instead of stdout");
    run->add_option("--timeout-ms", timeout_ms, "Per-claim timeout in milliseconds (0 disables)");

    auto* run_all = claim->add_subcommand("run-all", "Run every claim of a fixture suite");
    std::string suite = "acceptance", fixtures = UFDLAB_FIXTURE_DIR, all_out;
    run_all->add_option("--suite", suite, "Suite name (a subdirectory of the fixture directory)");
    run_all->add_option("--fixtures", fixtures, "Fixture directory");
    run_all->add_option("--out", all_out, "Write the suite document here instead of stdout");
    run_all->add_option("--timeout-ms", timeout_ms, "Per-claim timeout in milliseconds (0 disables)");

    auto* ring = app.add_subcommand("ring", "Ring presentations");
    ring->require_subcommand(1);
    auto* exp = ring->add_subcommand("export", "Export a ring built from a JSON spec");
    std::string input, format = "cas-text", ring_out;
    exp->add_option("--input", input, "JSON builder spec")->required();
    exp->add_option("--format", format, "cas-text or json")->check(CLI::IsMember({"cas-text", "json"}));
    exp->add_option("--out", ring_out, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*list) {
            if (list_json) {
                json a = json::array();
                for (const auto& c : claim_registry())
                    a.push_back({{"id", c.id}, {"anchor", c.anchor}, {"defaults", c.defaults}});
                std::cout << a.dump(2) << "\n";
            } else {
                for (const auto& c : claim_registry()) std::cout << c.id << "\t" << c.anchor << "\n";
            }
            return 0;
        }
        if (*run) {
            json params = params_path.empty() ? json::object() : read_json_file(params_path);
            auto report = run_claim(run_id, params, run_options(timeout_ms));
            write_output(report.to_json().dump(2) + "\n", out_path);
            return exit_code({report});
        }
        if (*run_all) {
            auto claims = load_suite(fs::path(fixtures) / suite);
            // validate ids and parameters up front so usage errors surface before any work
            for (const auto& [id, params] : claims) find_claim(id);
            std::vector<ClaimReport> reports;
            json docs = json::array();
            for (const auto& [id, params] : claims) {
                reports.push_back(run_claim(id, params, run_options(timeout_ms)));
                const auto& r = reports.back();
                std::cerr << to_string(r.status) << "  " << r.claim_id << "  (" << r.elapsed_ms << " ms)\n";
                docs.push_back(r.to_json());
            }
            int code = exit_code(reports);
            json doc = {{"suite", suite}, {"tool_version", UFDLAB_VERSION}, {"reports", docs}};
            write_output(doc.dump(2) + "\n", all_out);
            return code;
        }
        if (*exp) {
            auto r = ring_from_spec(read_json_file(input));
            write_output(format == "json" ? to_json(r).dump(2) + "\n" : to_cas_text(r), ring_out);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "ufdlab: " << e.what() << "\n";
        return kUsageError;
    } catch (const UsageError& e) {
        std::cerr << "ufdlab: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "ufdlab: " << e.what() << "\n";
        return kUsageError;
    } catch (const json::exception& e) {
        std::cerr << "ufdlab: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
