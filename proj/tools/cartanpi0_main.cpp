#include "cli/query.hpp"
#include "cli/selftest.hpp"
#include "support/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

nlohmann::json read_query_file(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw cli::usage_error("cannot open query file: " + path);
        buf << in.rdbuf();
    }
    try {
        return nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw cli::usage_error(std::string("query parse error: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact component groups of Cartan and isotropy subgroups of real forms"};
    app.require_subcommand(1);
    std::string catalog_dir;
    app.add_option("--catalog", catalog_dir, "catalog directory (default: built-in data)");

    auto* query_cmd = app.add_subcommand("query", "run a query document");
    std::string query_file;
    query_cmd->add_option("file", query_file, "query JSON file, or - for stdin")->required();
    std::string output = "text";
    query_cmd->add_option("--output", output, "text or doc")
        ->check(CLI::IsMember({"text", "doc"}));
    bool assume_mnc = false;
    query_cmd->add_flag("--assume-maximally-noncompact", assume_mnc,
                        "acknowledge the maximally-noncompact input contract for isotropy "
                        "computations");

    auto* catalog_cmd = app.add_subcommand("catalog", "list the known real forms");
    std::string cat_output = "text";
    catalog_cmd->add_option("--output", cat_output, "text or doc")
        ->check(CLI::IsMember({"text", "doc"}));

    auto* selftest_cmd = app.add_subcommand("selftest", "run the cross-check suites");
    std::string depth = "small";
    selftest_cmd->add_option("--depth", depth, "small or full")
        ->check(CLI::IsMember({"small", "full"}));
    bool inject = false;
    selftest_cmd->add_flag("--inject-failure", inject,
                           "force one failing check to verify the harness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return cli::exit_usage;
    }

    try {
        realform::Catalog local;
        if (!catalog_dir.empty()) local = realform::Catalog::load(catalog_dir);
        const realform::Catalog& catalog =
            catalog_dir.empty() ? realform::Catalog::standard() : local;

        if (query_cmd->parsed()) {
            nlohmann::json input = read_query_file(query_file);
            if (assume_mnc) input["assume_maximally_noncompact"] = true;
            cli::QueryOutcome outcome = cli::run_query(input, catalog);
            if (output == "doc") std::cout << outcome.report.dump(2) << "\n";
            else std::cout << cli::report_to_text(outcome.report);
            return outcome.exit_code;
        }
        if (catalog_cmd->parsed()) {
            nlohmann::ordered_json listing = cli::list_catalog(catalog);
            if (cat_output == "doc") std::cout << listing.dump(2) << "\n";
            else std::cout << cli::catalog_to_text(listing);
            return cli::exit_ok;
        }
        if (selftest_cmd->parsed()) {
            cli::SelftestReport rep = cli::run_selftest(
                depth == "full" ? cli::Depth::full : cli::Depth::small, inject);
            std::cout << rep.to_text();
            return rep.all_pass() ? cli::exit_ok : cli::exit_validation;
        }
    } catch (const cli::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_usage;
    } catch (const support::defect_error& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return cli::exit_defect;
    } catch (const support::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_usage;
    }
    return cli::exit_usage;
}
