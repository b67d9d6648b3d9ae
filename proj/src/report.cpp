#include "benford/report.hpp"

#include <algorithm>
#include <cstdio>

namespace benford {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::string format_short(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

}  // namespace

void Report::add(std::string key, std::string value) {
    rows_.push_back({std::move(key), value, value});
}

void Report::add(std::string key, double value) {
    rows_.push_back({std::move(key), format_double(value), format_short(value)});
}

void Report::add(std::string key, std::int64_t value) {
    const std::string text = std::to_string(value);
    rows_.push_back({std::move(key), text, text});
}

std::string Report::to_kv() const {
    std::string out;
    for (const auto& row : rows_) {
        out += row.key;
        out += '=';
        out += row.kv_text;
        out += '\n';
    }
    return out;
}

std::string Report::to_table() const {
    std::size_t key_width = 0;
    for (const auto& row : rows_) key_width = std::max(key_width, row.key.size());
    std::string out;
    for (const auto& row : rows_) {
        out += row.key;
        out.append(key_width - row.key.size() + 2, ' ');
        out += row.table_text;
        out += '\n';
    }
    return out;
}

std::string svg_bar_chart(const std::vector<std::string>& labels,
                          const std::vector<double>& observed,
                          const std::vector<double>& expected) {
    const int n = static_cast<int>(labels.size());
    const double bar_w = 32, gap = 10, height = 220, base_y = 250, left = 40;
    double peak = 1e-12;
    for (double v : observed) peak = std::max(peak, v);
    for (double v : expected) peak = std::max(peak, v);

    const double width = left + n * (bar_w + gap) + 40;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      format_double(width) + "\" height=\"290\">\n";
    svg += "<text x=\"8\" y=\"20\" font-size=\"12\">observed (filled) vs expected (outline)</text>\n";
    for (int i = 0; i < n; ++i) {
        const double x = left + i * (bar_w + gap);
        const double oh = observed[i] / peak * height;
        const double eh = expected[i] / peak * height;
        svg += "<rect x=\"" + format_double(x) + "\" y=\"" + format_double(base_y - oh) +
               "\" width=\"" + format_double(bar_w * 0.55) + "\" height=\"" + format_double(oh) +
               "\" fill=\"#4878a8\"/>\n";
        svg += "<rect x=\"" + format_double(x + bar_w * 0.55) + "\" y=\"" +
               format_double(base_y - eh) + "\" width=\"" + format_double(bar_w * 0.45) +
               "\" height=\"" + format_double(eh) +
               "\" fill=\"none\" stroke=\"#a85048\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + format_double(x + 4) + "\" y=\"268\" font-size=\"11\">" +
               labels[i] + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace benford
