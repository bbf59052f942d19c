// bvhodge: Hodge numbers of Borcea-Voisin threefolds from fixed-locus data.
//
// Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 cross-check mismatch.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bvhodge/error.hpp"
#include "bvhodge/report.hpp"

#ifndef BVHODGE_FIXTURE_DIR
#define BVHODGE_FIXTURE_DIR "data/fixtures"
#endif

namespace fs = std::filesystem;

namespace {

fs::path fixture_dir() {
    if (const char* env = std::getenv("BVHODGE_FIXTURES"); env && *env) return env;
    return BVHODGE_FIXTURE_DIR;
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(fixture_dir(), ec))
        if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hodge diamond and Euler characteristic of crepant resolutions of (S x E)/C_n"};
    std::string input;
    std::string fixture;
    std::string format = "text";
    bool no_checks = false;
    bool list = false;
    auto* input_opt = app.add_option("--input", input, "Configuration document (default: stdin)");
    app.add_option("--fixture", fixture, "Run a bundled fixture by name")->excludes(input_opt);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-checks", no_checks, "Skip the cross-checks");
    app.add_flag("--list-fixtures", list, "List bundled fixtures and exit");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        for (const auto& name : fixture_names()) std::cout << name << '\n';
        return 0;
    }

    std::string text;
    if (!fixture.empty()) input = (fixture_dir() / (fixture + ".json")).string();
    if (input.empty() || input == "-") {
        text = slurp(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot read " << input << '\n';
            return 1;
        }
        text = slurp(in);
    }

    try {
        bvhodge::RunOptions options;
        options.checks = !no_checks;
        const auto report = bvhodge::run(bvhodge::parse_document(text), options);
        std::cout << bvhodge::emit(report, format == "json" ? bvhodge::Format::json : bvhodge::Format::text);
        return report.exit_code;
    } catch (const bvhodge::ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << '\n';
        return 1;
    } catch (const bvhodge::Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
}
