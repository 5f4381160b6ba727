#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qsphere {

enum class Status { Pass, Warn, Fail, Inconclusive };

/// Where the expected value of a check comes from.
enum class Provenance {
    Published,  // closed form quoted from the literature
    Oracle,     // independently computed reference (brute force, direct summation)
    Identity,   // exact algebraic identity or definition
};

struct Report {
    std::string check;
    std::string triple;
    std::optional<double> q;
    std::optional<int> truncation;
    std::optional<double> value;
    std::optional<double> expected;
    Provenance provenance = Provenance::Identity;
    std::optional<double> tolerance;
    Status status = Status::Fail;
    std::string detail;

    bool ok() const { return status == Status::Pass || status == Status::Warn; }
};

/// Pass iff |value - expected| <= tolerance (NaN never passes).
Report compare_report(std::string check, std::string triple, double value, double expected,
                      double tolerance, Provenance provenance);

const char* to_string(Status s);
const char* to_string(Provenance p);

/// One JSON object with fixed field order and 17 significant digits.
std::string to_json(const Report& r);
void write_json(std::ostream& os, const std::vector<Report>& reports);

/// 0 iff every report passes (warn counts as pass), 1 on any fail, 2 on inconclusive.
int exit_code(const std::vector<Report>& reports);

std::string format_double(double v);

}  // namespace qsphere
