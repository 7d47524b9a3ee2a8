#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace orthospin::cli {

struct ScanRow {
    double p1 = 0.0;
    double p2 = 0.0;
    std::string phase;
    std::vector<double> x;  // best maximiser
    double y1 = 0.0;
    double value = 0.0;
};

std::string format_double(double v);  // 17 significant digits

std::string write_scan_csv(const std::vector<ScanRow>& rows);
std::vector<ScanRow> parse_scan_csv(std::string_view text);

// Region map: one rectangle per grid point, coloured by phase. Depends only on the rows.
std::string render_scan_svg(const std::vector<ScanRow>& rows);

}  // namespace orthospin::cli
