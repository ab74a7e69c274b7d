#pragma once

#include <string>
#include <vector>

#include "ideals/duality.hpp"
#include "ideals/series.hpp"
#include "ideals/smooth.hpp"

namespace ideals {

// 12 significant digits, the fixed CSV number format.
std::string format_number(double v);

std::string to_csv(const partial_sum_series& series);
std::string to_csv(const q_sum_report& report);
std::string to_csv(const std::vector<smooth_count_report>& reports);
std::string to_csv(const counting_report_result& report);

// {"checked": .., "skipped_hypothesis": .., "skipped_undefined": ..,
//  "violations": [...]} with stable key order.
std::string to_json(const batch_summary& summary);
std::string to_json(const classical_summary& summary);

}  // namespace ideals
