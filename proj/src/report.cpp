#include "umbra/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace umbra::cat {

namespace {

std::string num_str(const Real& v) { return v.is_nan() ? "nan" : v.str(17); }

std::string iso_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

} // namespace

std::string render_report_json(const std::vector<VerificationRecord>& records, bool with_timestamp) {
    nlohmann::ordered_json doc;
    if (with_timestamp) doc["generated_at"] = iso_now();
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["id"] = r.id;
        rec["description"] = r.description;
        rec["class"] = r.klass;
        rec["status"] = r.status;
        rec["residual"] = num_str(r.residual);
        rec["tolerance"] = num_str(r.tolerance);
        rec["precision"] = r.precision;
        rec["method"] = r.method_meta;
        rec["independence"] = r.independence;
        if (!r.error.empty()) rec["error"] = r.error;
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& p : r.points) {
            pts.push_back({{"point", p.label}, {"residual", num_str(p.residual)}, {"detail", p.detail}});
        }
        rec["points"] = pts;
        doc["records"].push_back(rec);
    }
    return doc.dump(2) + "\n";
}

std::string render_report_csv(const std::vector<VerificationRecord>& records) {
    std::ostringstream os;
    os << "id,class,status,residual,tolerance,precision,method,description\n";
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        return out + "\"";
    };
    for (const auto& r : records) {
        os << r.id << ',' << r.klass << ',' << r.status << ',' << num_str(r.residual) << ','
           << num_str(r.tolerance) << ',' << r.precision << ',' << quote(r.method_meta) << ','
           << quote(r.description) << "\n";
    }
    return os.str();
}

std::string render_report_human(const std::vector<VerificationRecord>& records) {
    std::ostringstream os;
    int pass = 0, fail = 0;
    for (const auto& r : records) {
        os << (r.failed() ? "[FAIL] " : (r.status == "formal" ? "[----] " : "[ ok ] "));
        os << r.id << "  class=" << r.klass;
        if (r.status == "formal") {
            os << "  (not a standalone numeric check; " << r.independence << ")\n";
            continue;
        }
        os << "  residual=" << r.residual.str(4) << "  tol=" << r.tolerance.str(4);
        if (!r.error.empty()) os << "  error: " << r.error;
        os << "\n";
        if (r.failed()) {
            ++fail;
            for (const auto& p : r.points)
                os << "         " << p.label << ": residual=" << p.residual.str(6) << "  " << p.detail << "\n";
        } else {
            ++pass;
        }
    }
    os << pass << " passed, " << fail << " failed, " << (records.size() - pass - fail) << " formal\n";
    return os.str();
}

} // namespace umbra::cat
