#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spherefib/output.hpp"

namespace {

using spherefib::i64;

std::vector<int> parse_k_list(const std::string& text) {
    if (text == "all") return {2, 3, 4, 5, 6};
    std::size_t used = 0;
    int k = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("--k expects an integer or 'all'");
    return {k};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification counts for odd-sphere bundle attaching maps"};
    app.require_subcommand(1);

    int ck = 0;
    i64 cn = 0;
    spherefib::RunOptions copt;
    std::string cout_path;
    auto* classify = app.add_subcommand("classify", "Classify a single (k, n) instance");
    classify->add_option("--k", ck, "k in [2,6]")->required();
    classify->add_option("--n", cn, "n >= 2")->required();
    classify->add_option("--format", copt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    classify->add_flag("--unicode", copt.unicode, "render generator glyphs");
    classify->add_flag("--timing", copt.timing, "report wall time");
    classify->add_option("--out", cout_path, "write output to a file");

    std::string vk = "all";
    std::string vrange;
    spherefib::RunOptions vopt;
    std::string vout_path;
    auto* verify = app.add_subcommand("verify", "Cross-validate closed form vs brute force over a range");
    verify->add_option("--k", vk, "k in [2,6], or 'all'");
    verify->add_option("--n", vrange, "range A..B (default: built-in per-k range)");
    verify->add_option("--jobs", vopt.jobs, "worker threads (0 = hardware)");
    verify->add_option("--format", vopt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", vout_path, "write output to a file");

    int tk = 0;
    std::string trange;
    spherefib::RunOptions topt;
    std::string tout_path;
    auto* table = app.add_subcommand("table", "Closed-form table over a range of n");
    table->add_option("--k", tk, "k in [2,6]")->required();
    table->add_option("--n", trange, "range A..B (default: built-in per-k range)");
    table->add_option("--format", topt.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_option("--out", tout_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto with_sink = [](const std::string& path, auto&& fn) {
        if (path.empty()) return fn(std::cout);
        std::ofstream f(path);
        if (!f) {
            std::cerr << "cannot open output file: " << path << "\n";
            return 2;
        }
        return fn(f);
    };

    try {
        if (classify->parsed()) {
            return with_sink(cout_path, [&](std::ostream& os) {
                return spherefib::run_classify(ck, cn, copt, os, std::cerr);
            });
        }
        if (verify->parsed()) {
            std::vector<int> ks = parse_k_list(vk);
            bool explicit_range = !vrange.empty();
            std::pair<i64, i64> range{0, 0};
            if (explicit_range) range = spherefib::parse_range(vrange);
            return with_sink(vout_path, [&](std::ostream& os) {
                return spherefib::run_verify(ks, explicit_range, range, vopt, os, std::cerr);
            });
        }
        int k = tk;
        std::pair<i64, i64> range =
            trange.empty() ? spherefib::default_range(k) : spherefib::parse_range(trange);
        return with_sink(tout_path, [&](std::ostream& os) {
            return spherefib::run_table(k, range, topt, os);
        });
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
