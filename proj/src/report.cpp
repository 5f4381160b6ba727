#include "qsphere/report.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qsphere {

Report compare_report(std::string check, std::string triple, double value, double expected,
                      double tolerance, Provenance provenance) {
    Report r;
    r.check = std::move(check);
    r.triple = std::move(triple);
    r.value = value;
    r.expected = expected;
    r.tolerance = tolerance;
    r.provenance = provenance;
    r.status = std::abs(value - expected) <= tolerance ? Status::Pass : Status::Fail;
    return r;
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Warn: return "warn";
        case Status::Fail: return "fail";
        case Status::Inconclusive: return "inconclusive";
    }
    return "fail";
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Published: return "published";
        case Provenance::Oracle: return "oracle";
        case Provenance::Identity: return "identity";
    }
    return "identity";
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

template <class T>
std::string optional_field(const std::optional<T>& v) {
    if (!v) return "null";
    if constexpr (std::is_floating_point_v<T>) return format_double(*v);
    else return std::to_string(*v);
}

}  // namespace

std::string to_json(const Report& r) {
    std::ostringstream os;
    os << "{\"check\":" << quoted(r.check)
       << ",\"triple\":" << quoted(r.triple)
       << ",\"q\":" << optional_field(r.q)
       << ",\"truncation\":" << optional_field(r.truncation)
       << ",\"value\":" << optional_field(r.value)
       << ",\"expected\":" << optional_field(r.expected)
       << ",\"provenance\":" << quoted(to_string(r.provenance))
       << ",\"tolerance\":" << optional_field(r.tolerance)
       << ",\"status\":" << quoted(to_string(r.status))
       << ",\"detail\":" << quoted(r.detail) << "}";
    return os.str();
}

void write_json(std::ostream& os, const std::vector<Report>& reports) {
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        os << "  " << to_json(reports[i]) << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

int exit_code(const std::vector<Report>& reports) {
    bool inconclusive = false;
    for (const auto& r : reports) {
        if (r.status == Status::Fail) return 1;
        if (r.status == Status::Inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

}  // namespace qsphere
