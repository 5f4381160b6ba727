#pragma once

// Check suites driven by the command line tool: each returns Reports for one
// q of the grid, so that (q, suite) pairs can run in parallel.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsphere/report.hpp"
#include "qsphere/spectral.hpp"

namespace qsphere {

struct RunConfig {
    std::vector<TripleKind> triples;  // empty means all four
    std::vector<double> qs{0.3, 0.5, 0.7, 0.9};
    int truncation = 120;
    double tol = 1e-8;
    std::string json_path;
    std::string csv_path;
    int jobs = 1;

    bool selected(TripleKind k) const;
    /// Throws std::invalid_argument when q, truncation or tol is out of range.
    void validate() const;
};

/// "N-disk", "absD-spinor", "Dprime-mu", "D-spin"; throws on anything else.
TripleKind parse_triple(const std::string& name);

/// Zeta series collected for --csv, keyed by a file label such as "D-spin.q0.5".
using SeriesSink = std::map<std::string, ZetaSeries>;

std::vector<Report> suite_relations(const RunConfig& cfg, double q);
std::vector<Report> suite_residues(const RunConfig& cfg, double q, SeriesSink* sink = nullptr);
std::vector<Report> suite_index(const RunConfig& cfg, double q);
std::vector<Report> suite_chern(const RunConfig& cfg, double q);
std::vector<Report> suite_projmod(const RunConfig& cfg, double q);
/// Runs once for the fixed x table 0.01, 0.11, ..., 0.81 and x = q^2 for the grid.
std::vector<Report> suite_series_f(const RunConfig& cfg);

/// Suite names accepted by run_suites: the subcommands except "report".
const std::vector<std::string>& suite_names();

/// Runs the named suites over the q grid with up to cfg.jobs threads; the
/// result order depends only on cfg, never on scheduling.
std::vector<Report> run_suites(const RunConfig& cfg, const std::vector<std::string>& names, SeriesSink* sink = nullptr);

}  // namespace qsphere
