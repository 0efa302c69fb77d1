#include "hopfcalc/shell.hpp"

#include "json.hpp"

#include <cstdio>
#include <sstream>

namespace hopfcalc {
namespace {

using Json = nlohmann::ordered_json;

Json to_json(const ResultValue& v)
{
    return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string to_text(const ResultValue& v)
{
    if (const auto* b = std::get_if<bool>(&v))
        return *b ? "yes" : "no";
    if (const auto* i = std::get_if<std::int64_t>(&v))
        return std::to_string(*i);
    if (const auto* s = std::get_if<std::string>(&v))
        return *s;
    return {};
}

const char* status_label(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "PASS";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::conditional:
        return "COND";
    case CheckStatus::skipped:
        return "SKIP";
    }
    return "?";
}

}  // namespace

std::string render_json(const RunReport& report)
{
    Json j;
    j["tool"] = "hopfcalc";
    j["version"] = kToolVersion;
    j["schema"] = kReportSchema;
    j["command"] = report.command;
    Json args = Json::object();
    for (const auto& [k, v] : report.args)
        args[k] = v;
    j["args"] = args;
    j["input_digest"] = report.digest;
    j["field"] = report.field.empty() ? Json(nullptr) : Json(report.field);
    j["seed"] = report.seed;
    Json result = Json::object();
    for (const auto& [k, v] : report.result)
        result[k] = to_json(v);
    j["result"] = result;
    Json checks = Json::array();
    for (const auto& c : report.checks.checks) {
        Json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        e["witness"] = c.witness.empty() ? Json(nullptr) : Json(c.witness);
        checks.push_back(e);
    }
    j["checks"] = checks;
    j["summary"] = Json{{"total", report.checks.checks.size()},
                        {"pass", report.count(CheckStatus::pass)},
                        {"fail", report.count(CheckStatus::fail)},
                        {"conditional", report.count(CheckStatus::conditional)},
                        {"skipped", report.count(CheckStatus::skipped)}};
    if (report.error) {
        Json e;
        e["message"] = report.error->message;
        e["line"] = report.error->line ? Json(report.error->line) : Json(nullptr);
        e["column"] = report.error->column ? Json(report.error->column) : Json(nullptr);
        j["error"] = e;
    } else {
        j["error"] = nullptr;
    }
    j["exit_code"] = report.exit_code;
    return j.dump(2) + "\n";
}

std::string render_text(const RunReport& report)
{
    std::ostringstream out;
    out << "hopfcalc " << report.command;
    for (const auto& [k, v] : report.args)
        out << " " << k << "=" << v;
    out << "\n";
    out << "input   " << report.digest << "\n";
    if (!report.field.empty())
        out << "field   " << report.field << "\n";
    out << "seed    " << report.seed << "\n";
    for (const auto& [k, v] : report.result) {
        if (const auto* list = std::get_if<std::vector<std::string>>(&v)) {
            out << k << ":" << (list->empty() ? " (none)" : "") << "\n";
            for (const auto& item : *list)
                out << "  " << item << "\n";
        } else {
            out << k << ": " << to_text(v) << "\n";
        }
    }
    if (!report.checks.checks.empty())
        out << "checks:\n";
    for (const auto& c : report.checks.checks) {
        out << "  " << status_label(c.status) << "  " << c.name;
        if (!c.witness.empty())
            out << "  -- " << c.witness;
        out << "\n";
    }
    if (report.error) {
        out << "error: ";
        if (report.error->line)
            out << report.error->line << ":" << report.error->column << ": ";
        out << report.error->message << "\n";
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.1f", report.elapsed_ms);
    out << report.count(CheckStatus::pass) << " passed, " << report.count(CheckStatus::fail) << " failed, "
        << report.count(CheckStatus::conditional) << " conditional, " << report.count(CheckStatus::skipped)
        << " skipped in " << elapsed << " ms; exit " << report.exit_code << "\n";
    return out.str();
}

}  // namespace hopfcalc
