#include "ideals/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace ideals {

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const partial_sum_series& series) {
    std::string out = "X,value,target,abs_error\n";
    for (const auto& pt : series.points) {
        out += std::to_string(pt.x);
        out += ',';
        out += format_number(pt.value);
        out += ',';
        out += format_number(pt.target);
        out += ',';
        out += format_number(pt.abs_error);
        out += '\n';
    }
    return out;
}

std::string to_csv(const q_sum_report& report) {
    std::string out = "X,sum,predicted,ratio\n";
    for (const auto& pt : report.points) {
        out += std::to_string(pt.x);
        out += ',';
        out += std::to_string(pt.sum);
        out += ',';
        out += format_number(pt.predicted);
        out += ',';
        out += format_number(pt.ratio);
        out += '\n';
    }
    return out;
}

std::string to_csv(const std::vector<smooth_count_report>& reports) {
    std::string out = "X,Y,beta,exact,prediction,ratio\n";
    for (const auto& r : reports) {
        out += std::to_string(r.x);
        out += ',';
        out += std::to_string(r.y);
        out += ',';
        out += format_number(r.beta);
        out += ',';
        out += std::to_string(r.exact_count);
        out += ',';
        out += format_number(r.rho_prediction);
        out += ',';
        out += format_number(r.ratio);
        out += '\n';
    }
    return out;
}

std::string to_csv(const counting_report_result& report) {
    std::string out = "X,pi,li";
    for (const auto& label : report.class_labels) out += ",pi_C_" + label;
    out += ",ideals,ck_x,hr_mean,mertens_ratio\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.x);
        out += ',';
        out += std::to_string(row.prime_ideals);
        out += ',';
        out += format_number(row.li);
        for (std::int64_t c : row.class_counts) {
            out += ',';
            out += std::to_string(c);
        }
        out += ',';
        out += std::to_string(row.ideal_count);
        out += ',';
        out += format_number(row.ck_x);
        out += ',';
        out += format_number(row.hardy_ramanujan_mean);
        out += ',';
        out += format_number(row.mertens_ratio);
        out += '\n';
    }
    return out;
}

std::string to_json(const batch_summary& summary) {
    nlohmann::ordered_json j;
    j["checked"] = summary.checked;
    j["skipped_hypothesis"] = summary.skipped_hypothesis;
    j["skipped_undefined"] = summary.skipped_undefined;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : summary.violations) {
        nlohmann::ordered_json jv;
        jv["ideal"] = v.ideal;
        jv["k"] = v.k;
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        j["violations"].push_back(jv);
    }
    return j.dump(2) + "\n";
}

std::string to_json(const classical_summary& summary) {
    nlohmann::ordered_json j;
    j["checked"] = summary.checked;
    j["violations"] = summary.violations;
    j["first_violation"] = summary.first_violation;
    return j.dump(2) + "\n";
}

}  // namespace ideals
