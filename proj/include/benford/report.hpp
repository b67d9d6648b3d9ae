#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace benford {

// Locale-independent decimal form with 12 significant digits; identical
// output for identical doubles, which keeps machine-readable reports
// byte-stable.
std::string format_double(double value);

// An ordered flat document of key/value rows. kv rendering keeps the full
// 12-digit form; the aligned human table rounds doubles to 6 significant
// digits.
class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, double value);
    void add(std::string key, std::int64_t value);

    std::string to_kv() const;
    std::string to_table() const;

private:
    struct Row {
        std::string key;
        std::string kv_text;
        std::string table_text;
    };
    std::vector<Row> rows_;
};

// Minimal SVG bar chart of observed proportions against expected ones.
// Decorative output only.
std::string svg_bar_chart(const std::vector<std::string>& labels,
                          const std::vector<double>& observed,
                          const std::vector<double>& expected);

}  // namespace benford
