// tfd: classification table, toric verification and invariant suites.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "tfd/errors.hpp"
#include "tfd/exceptional.hpp"
#include "tfd/format.hpp"
#include "tfd/toric.hpp"

namespace fs = std::filesystem;
using namespace tfd;

namespace {

int cmd_classify(const std::string& format, const std::string& which) {
    std::vector<TFDRecord> recs = classify_case(which);
    for (const auto& r : recs) {
        try {
            check_record(r);
        } catch (const std::exception& e) {
            std::cerr << "invariant failure: " << e.what() << "\n";
            return 1;
        }
    }
    if (format == "json") std::cout << to_json(recs);
    else if (format == "markdown") std::cout << to_markdown(recs);
    else std::cout << to_tsv(recs);
    return 0;
}

int cmd_branches(const std::string& which) {
    ClassifierReport rep;
    if (which == "I") rep = classify_case_I();
    else if (which == "II") rep = classify_case_II();
    else if (which == "III") rep = classify_case_III();
    else if (which == "IV") rep = classify_case_IV();
    else rep = classify_all_report();
    std::cout << "case\tbranch\tunknowns\tstatus\n";
    for (const auto& o : rep.outcomes) {
        std::string u;
        for (const auto& [k, v] : o.unknowns) u += (u.empty() ? "" : ",") + k + "=" + std::to_string(v);
        std::cout << o.case_name << "\t" << o.branch << "\t" << u << "\t" << o.status << "\n";
    }
    return 0;
}

// 0 on match (and expectation met), 1 on mismatch, 2 on malformed input
int verify_one(const std::string& path, const std::vector<TFDRecord>& recs) {
    Fixture f;
    try {
        f = load_fixture(path);
    } catch (const TfdError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return 2;
    }
    std::cout << "== " << path << "\n";
    try {
        ToricFixedReport r = fixture_report(f);
        std::cout << describe(r);
        std::string id = match_tfd(r, recs);
        std::cout << "matched " << id << "\n";
        if (f.expect && *f.expect != id) {
            std::cout << "expected " << *f.expect << "\n";
            return 1;
        }
        return 0;
    } catch (const TfdError& e) {
        std::cout << "no match: " << e.what() << "\n";
        return 1;
    }
}

int cmd_verify(const std::string& file, const std::string& dir) {
    auto recs = classify_all();
    std::vector<std::string> paths;
    if (!file.empty()) paths.push_back(file);
    if (!dir.empty()) {
        if (!fs::is_directory(dir)) {
            std::cerr << dir << ": not a directory\n";
            return 2;
        }
        std::vector<std::string> found;
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().extension() == ".txt") found.push_back(e.path().string());
        std::sort(found.begin(), found.end());
        paths.insert(paths.end(), found.begin(), found.end());
    }
    if (paths.empty()) {
        std::cerr << "verify-example: give a fixture file or --fixtures <dir>\n";
        return 2;
    }
    int worst = 0, matched = 0;
    for (const auto& p : paths) {
        int rc = verify_one(p, recs);
        matched += rc == 0;
        worst = std::max(worst, rc);
    }
    if (paths.size() > 1) std::cout << matched << "/" << paths.size() << " fixtures matched\n";
    return worst;
}

int cmd_check(const std::string& suite) {
    auto lines = oracle::run_suite(suite);
    int failed = 0;
    for (const auto& l : lines) {
        std::cout << (l.ok ? "PASS " : "FAIL ") << l.module << ": " << l.property;
        if (!l.detail.empty()) std::cout << " (" << l.detail << ")";
        std::cout << "\n";
        failed += !l.ok;
    }
    std::cout << (lines.size() - failed) << "/" << lines.size() << " checks passed\n";
    return failed ? 1 : 0;
}

int cmd_list_exceptional(int k) {
    SurfaceModel m = make_model(BaseKind::P2, k);
    for (const auto& c : exceptional_classes(m)) std::cout << format_class(m, c) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological fixed point data of semifree circle actions on monotone 6-manifolds"};
    app.require_subcommand(1);

    std::string format = "markdown", which = "all";
    auto* classify = app.add_subcommand("classify", "print the canonical table of fixed point data");
    classify->add_option("--format", format, "json, markdown or tsv")
        ->check(CLI::IsMember({"json", "markdown", "tsv"}));
    classify->add_option("--case", which, "I, II, III, IV or all")->check(CLI::IsMember({"I", "II", "III", "IV", "all"}));

    std::string bwhich = "all";
    auto* branches = app.add_subcommand("branches", "print every solved branch with its status");
    branches->add_option("--case", bwhich, "I, II, III, IV or all")
        ->check(CLI::IsMember({"I", "II", "III", "IV", "all"}));

    std::string file, dir;
    auto* verify = app.add_subcommand("verify-example", "match polytope or report fixtures against the table");
    verify->add_option("file", file, "fixture file");
    verify->add_option("--fixtures", dir, "directory of fixtures");

    std::string suite = "all";
    auto* check = app.add_subcommand("check", "run the invariant suites");
    check->add_option("suite", suite, "all, lattice, localization or splitting")
        ->check(CLI::IsMember({"all", "lattice", "localization", "splitting"}));

    int k = 1;
    auto* listx = app.add_subcommand("list-exceptional", "exceptional classes of P2 blown up k times");
    listx->add_option("--k", k, "number of blow-ups")->required()->check(CLI::Range(1, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*classify) return cmd_classify(format, which);
        if (*branches) return cmd_branches(bwhich);
        if (*verify) return cmd_verify(file, dir);
        if (*check) return cmd_check(suite);
        if (*listx) return cmd_list_exceptional(k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
