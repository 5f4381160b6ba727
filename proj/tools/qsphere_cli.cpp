// qsphere: batch driver for the check suites.
//
//   qsphere report --q 0.5 --q 0.9 --truncation 120 --json out.json
//   qsphere residues --triple D-spin --csv zeta.csv
//   qsphere normal-form "a* a + b^2"
//   qsphere export --rep pi+ --expr "b^2" --format mm --out b2.mtx

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qsphere/expression.hpp"
#include "qsphere/representation.hpp"
#include "qsphere/suites.hpp"

using namespace qsphere;

namespace {

void print_line(const Report& r) {
    std::printf("%-12s %-44s %-12s", to_string(r.status), r.check.c_str(), r.triple.c_str());
    if (r.q) std::printf(" q=%-5g", *r.q);
    if (r.value) std::printf(" value=%s", format_double(*r.value).c_str());
    if (r.expected) std::printf(" expected=%s", format_double(*r.expected).c_str());
    std::printf("\n");
}

std::string safe_label(std::string s) {
    for (char& c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+')) c = c == '*' ? 's' : '_';
    return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path);
    if (!(os << text)) throw std::runtime_error("cannot write " + path.string());
}

void write_csv(const std::string& path, const SeriesSink& sink) {
    if (sink.empty()) return;
    if (sink.size() == 1) {
        write_file(path, zeta_csv(sink.begin()->second));
        return;
    }
    // several series: one file per series next to the requested path
    const std::filesystem::path p(path);
    for (const auto& [label, z] : sink)
        write_file(p.parent_path() / (p.stem().string() + "." + safe_label(label) + ".csv"), zeta_csv(z));
}

int run(const RunConfig& cfg, const std::vector<std::string>& suites, bool quiet) {
    SeriesSink sink;
    const std::vector<Report> reports = run_suites(cfg, suites, cfg.csv_path.empty() ? nullptr : &sink);
    if (!quiet)
        for (const Report& r : reports) print_line(r);
    if (cfg.json_path == "-") {
        write_json(std::cout, reports);
    } else if (!cfg.json_path.empty()) {
        std::ofstream os(cfg.json_path);
        if (!os) throw std::runtime_error("cannot write " + cfg.json_path);
        write_json(os, reports);
    }
    if (!cfg.csv_path.empty()) write_csv(cfg.csv_path, sink);
    return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Podles sphere and quantum disk spectral triple checks"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::vector<double> qs;
    std::vector<std::string> triples;
    bool quiet = false;
    app.add_option("--q", qs, "deformation parameter in (0,1), repeatable (default 0.3 0.5 0.7 0.9)");
    app.add_option("--truncation", cfg.truncation, "N_max or L_max")->capture_default_str();
    app.add_option("--tol", cfg.tol, "tolerance for index and cocycle checks")->capture_default_str();
    app.add_option("--triple", triples, "N-disk, absD-spinor, Dprime-mu or D-spin, repeatable (default all)");
    app.add_option("--json", cfg.json_path, "write the JSON report here ('-' for stdout)");
    app.add_option("--csv", cfg.csv_path, "write zeta series (lambda,a_lambda,valid) here");
    app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    app.add_flag("--quiet", quiet, "no per-check lines on stdout");

    std::vector<std::pair<CLI::App*, std::vector<std::string>>> suite_cmds;
    for (const std::string& s : suite_names())
        suite_cmds.push_back({app.add_subcommand(s, "run the " + s + " checks"), {s}});
    suite_cmds.push_back({app.add_subcommand("report", "run every suite"), suite_names()});

    auto* nf = app.add_subcommand("normal-form", "print the normal form of an expression");
    std::string expr;
    nf->add_option("expr", expr, "expression such as \"a* a + b^2\"")->required();

    auto* ex = app.add_subcommand("export", "write a represented element as a sparse matrix");
    std::string rep = "pi+", format = "coo", out_path;
    double ex_q = 0.5;
    int ex_trunc = 20;
    ex->add_option("--rep", rep, "representation selector")->check(CLI::IsMember(representation_selectors()))->capture_default_str();
    ex->add_option("--expr", expr, "element to represent")->required();
    ex->add_option("--format", format, "coo or mm")->check(CLI::IsMember({"coo", "mm"}))->capture_default_str();
    ex->add_option("--out", out_path, "output file (default stdout)");
    ex->add_option("--at-q", ex_q, "q for the representation")->capture_default_str();
    ex->add_option("--size", ex_trunc, "truncation for the representation")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (nf->parsed()) {
            std::cout << parse_expression(expr, detect_alphabet(expr)).to_string() << "\n";
            return 0;
        }
        if (ex->parsed()) {
            const Representation r = make_representation(rep, ex_q, ex_trunc);
            const BandedOp x = r.represent(parse_expression(expr, r.alphabet()));
            const std::string text = format == "mm" ? to_matrix_market(x) : to_coo(x);
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
            return 0;
        }
        if (!qs.empty()) cfg.qs = qs;
        for (const std::string& t : triples) cfg.triples.push_back(parse_triple(t));
        for (const auto& [cmd, suites] : suite_cmds)
            if (cmd->parsed()) return run(cfg, suites, quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
