#include "scan_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orthospin::cli {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string write_scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "# schema: 1\n";
    os << "p1,p2,phase,x,y1,value\n";
    for (const auto& r : rows) {
        os << format_double(r.p1) << ',' << format_double(r.p2) << ',' << r.phase << ',';
        for (std::size_t i = 0; i < r.x.size(); ++i) os << (i ? ";" : "") << format_double(r.x[i]);
        os << ',' << format_double(r.y1) << ',' << format_double(r.value) << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::vector<ScanRow> parse_scan_csv(std::string_view text) {
    std::vector<ScanRow> rows;
    bool header_seen = false;
    for (const auto& line : split(text, '\n')) {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != "p1,p2,phase,x,y1,value") throw std::runtime_error("unexpected scan CSV header: " + line);
            header_seen = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 6) throw std::runtime_error("scan CSV row needs 6 fields: " + line);
        ScanRow r;
        r.p1 = std::stod(f[0]);
        r.p2 = std::stod(f[1]);
        r.phase = f[2];
        for (const auto& xi : split(f[3], ';')) r.x.push_back(std::stod(xi));
        r.y1 = std::stod(f[4]);
        r.value = std::stod(f[5]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string render_scan_svg(const std::vector<ScanRow>& rows) {
    static const std::map<std::string, std::string> colours = {
        {"disordered", "#d9d9d9"}, {"ising", "#4e79a7"},       {"xy", "#f28e2b"},
        {"nematic", "#59a14f"},    {"ferromagnetic", "#edc948"}, {"fourth", "#e15759"},
        {"ordered", "#b07aa1"},    {"boundary", "#000000"},     {"not_proven", "#ffffff"}};
    std::set<double> p1s, p2s;
    for (const auto& r : rows) {
        p1s.insert(r.p1);
        p2s.insert(r.p2);
    }
    const int cell = 8, margin = 40;
    const int w = static_cast<int>(p1s.size()) * cell, h = static_cast<int>(p2s.size()) * cell;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 2 * margin << "\" height=\"" << h + 2 * margin
       << "\">\n";
    const std::vector<double> v1(p1s.begin(), p1s.end()), v2(p2s.begin(), p2s.end());
    for (const auto& r : rows) {
        const auto i = std::lower_bound(v1.begin(), v1.end(), r.p1) - v1.begin();
        const auto j = std::lower_bound(v2.begin(), v2.end(), r.p2) - v2.begin();
        const auto it = colours.find(r.phase);
        const std::string fill = it == colours.end() ? "#999999" : it->second;
        os << "<rect x=\"" << margin + i * cell << "\" y=\"" << margin + h - (j + 1) * cell << "\" width=\"" << cell
           << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
    }
    if (!rows.empty()) {
        os << "<text x=\"" << margin << "\" y=\"" << h + margin + 20 << "\" font-size=\"12\">p1 "
           << format_double(v1.front()) << " .. " << format_double(v1.back()) << "</text>\n";
        os << "<text x=\"4\" y=\"" << margin - 10 << "\" font-size=\"12\">p2 " << format_double(v2.front())
           << " .. " << format_double(v2.back()) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace orthospin::cli
