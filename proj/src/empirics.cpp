#include "benford/empirics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "benford/oracle.hpp"

namespace benford {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Significant-digit characters of a decimal literal: sign, radix point and
// leading zeros dropped, exponent ignored (it only moves the radix point).
// Returns an empty string for a zero value, no value for a malformed one.
std::optional<std::string> significant_decimal_digits(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+' || s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;

    std::string digits;
    bool seen_point = false;
    bool seen_digit = false;
    std::size_t i = 0;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
            if (!digits.empty() || c != '0') digits.push_back(c);
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            // Validate the exponent tail, then stop: it cannot change digits.
            std::size_t j = i + 1;
            if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
            if (j >= s.size()) return std::nullopt;
            for (; j < s.size(); ++j) {
                if (s[j] < '0' || s[j] > '9') return std::nullopt;
            }
            break;
        } else {
            return std::nullopt;
        }
    }
    if (!seen_digit) return std::nullopt;
    return digits;  // empty means the value is zero
}

bool is_negative_literal(std::string_view text) {
    const std::string_view s = trim(text);
    return !s.empty() && s.front() == '-';
}

}  // namespace

std::int64_t extract_digits(double value, int base, int width) {
    if (value == 0.0) {
        throw std::domain_error("extract_digits: zero has no significant digits");
    }
    if (!std::isfinite(value)) {
        throw std::domain_error("extract_digits: value must be finite");
    }
    return leading_block_int(std::fabs(value), base, width);
}

std::int64_t extract_digits(std::string_view text, int base, int width) {
    if (base < 2) throw std::domain_error("extract_digits: base must be >= 2");
    if (width < 1) throw std::domain_error("extract_digits: width must be >= 1");
    if (base != 10) {
        const std::string owned(text);
        char* end = nullptr;
        const double v = std::strtod(owned.c_str(), &end);
        if (end != owned.c_str() + owned.size() || owned.empty()) {
            throw std::domain_error("extract_digits: '" + owned + "' is not a number");
        }
        return extract_digits(v, base, width);
    }
    const auto digits = significant_decimal_digits(text);
    if (!digits) {
        throw std::domain_error("extract_digits: '" + std::string(text) + "' is not a number");
    }
    if (digits->empty()) {
        throw std::domain_error("extract_digits: zero has no significant digits");
    }
    if (width > 18) {
        throw std::domain_error("extract_digits: width > 18 overflows 64-bit blocks");
    }
    std::int64_t lead = 0;
    for (int i = 0; i < width; ++i) {
        const char c = i < static_cast<int>(digits->size()) ? (*digits)[i] : '0';
        lead = lead * 10 + (c - '0');
    }
    return lead;
}

namespace {

template <class Seq, class ExtractFn, class IsZeroFn, class IsNegativeFn>
DigitHistogram build_histogram(const Seq& data, int base, int width, ExtractFn extract,
                               IsZeroFn is_zero, IsNegativeFn is_negative) {
    if (base < 2) throw std::domain_error("histogram: base must be >= 2");
    if (width < 1) throw std::domain_error("histogram: width must be >= 1");
    if (data.empty()) throw std::domain_error("histogram: data is empty");
    DigitHistogram hist;
    hist.base = base;
    hist.width = width;
    for (const auto& v : data) {
        if (is_zero(v)) {
            ++hist.dropped_zeros;
            continue;
        }
        if (is_negative(v)) ++hist.negatives_folded;
        ++hist.counts[extract(v)];
        ++hist.total;
    }
    if (hist.total == 0) {
        throw std::domain_error("histogram: no nonzero values in data");
    }
    return hist;
}

}  // namespace

DigitHistogram histogram(std::span<const double> data, int base, int width) {
    return build_histogram(
        data, base, width,
        [base, width](double v) { return extract_digits(v, base, width); },
        [](double v) { return v == 0.0; }, [](double v) { return v < 0.0; });
}

DigitHistogram histogram(std::span<const std::string> data, int base, int width) {
    return build_histogram(
        data, base, width,
        [base, width](const std::string& v) {
            return extract_digits(std::string_view(v), base, width);
        },
        [base](const std::string& v) {
            if (base == 10) {
                const auto digits = significant_decimal_digits(v);
                return digits.has_value() && digits->empty();
            }
            char* end = nullptr;
            return std::strtod(v.c_str(), &end) == 0.0 && end == v.c_str() + v.size();
        },
        [](const std::string& v) { return is_negative_literal(v); });
}

DigitHistogram merge(DigitHistogram left, const DigitHistogram& right) {
    if (left.base != right.base || left.width != right.width) {
        throw std::domain_error("merge: histograms disagree on base or width");
    }
    for (const auto& [outcome, count] : right.counts) {
        left.counts[outcome] += count;
    }
    left.total += right.total;
    left.dropped_zeros += right.dropped_zeros;
    left.negatives_folded += right.negatives_folded;
    return left;
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::conforms: return "conforms";
        case Verdict::marginal: return "marginal";
        case Verdict::violates: return "violates";
    }
    return "unknown";
}

ConformityReport conformity(const DigitHistogram& hist, const LawPrediction& expected,
                            ConformityThresholds thresholds) {
    if (hist.base != expected.base) {
        throw std::domain_error("conformity: histogram base " + std::to_string(hist.base) +
                                " does not match expected table base " +
                                std::to_string(expected.base));
    }
    for (const auto& [outcome, count] : hist.counts) {
        if (!expected.probabilities.contains(outcome)) {
            throw std::domain_error("conformity: expected table does not cover outcome " +
                                    std::to_string(outcome));
        }
    }

    ConformityReport report;
    report.histogram = hist;
    report.expected = expected;
    const double n = static_cast<double>(hist.total);
    double chi = 0, dev_sum = 0, dev_max = 0;
    for (const auto& [outcome, p] : expected.probabilities) {
        const auto it = hist.counts.find(outcome);
        const double observed = it == hist.counts.end() ? 0.0 : static_cast<double>(it->second);
        const double expected_count = n * p;
        if (expected_count > 0) {
            const double r = observed - expected_count;
            chi += r * r / expected_count;
        }
        const double dev = std::fabs(observed / n - p);
        dev_sum += dev;
        dev_max = std::max(dev_max, dev);
    }
    report.chi_square = chi;
    report.degrees_of_freedom = static_cast<int>(expected.probabilities.size()) - 1;
    report.mad = dev_sum / static_cast<double>(expected.probabilities.size());
    report.max_abs_dev = dev_max;
    report.verdict = report.mad < thresholds.conforms_mad ? Verdict::conforms
                     : report.mad < thresholds.marginal_mad ? Verdict::marginal
                                                            : Verdict::violates;
    return report;
}

std::vector<double> transform_data(std::span<const double> data, TransformKind kind,
                                   double param) {
    if (kind == TransformKind::scale && !(param > 0)) {
        throw std::domain_error("transform_data: scale factor must be > 0");
    }
    if (kind == TransformKind::power && param == 0) {
        throw std::domain_error("transform_data: power must be nonzero");
    }
    std::vector<double> out;
    out.reserve(data.size());
    for (const double x : data) {
        if (x == 0.0) {
            out.push_back(0.0);
            continue;
        }
        switch (kind) {
            case TransformKind::scale: out.push_back(std::fabs(x) * param); break;
            case TransformKind::power: out.push_back(std::pow(std::fabs(x), param)); break;
            case TransformKind::rebase: out.push_back(x); break;
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',' || line[i] == '\t') {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

// Numeric gate for data rows: plain decimal literals only, matching what
// the exact digit extraction accepts (no hex, inf, or nan spellings).
bool parses_as_number(std::string_view field) {
    return significant_decimal_digits(field).has_value();
}

}  // namespace

ColumnData read_column(const std::string& path, const std::string& selector) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }

    // A positive integer selector is a 1-based column index; anything else
    // is a header name resolved from the first row.
    long index = -1;
    {
        char* end = nullptr;
        const long parsed = std::strtol(selector.c_str(), &end, 10);
        if (end == selector.c_str() + selector.size() && parsed >= 1) index = parsed - 1;
    }

    ColumnData out;
    std::string line;
    bool header_pending = index < 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) {
            if (!header_pending) ++out.skipped_rows;
            continue;
        }
        const auto fields = split_fields(line);
        if (header_pending) {
            header_pending = false;
            index = -1;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (trim(fields[i]) == selector) {
                    index = static_cast<long>(i);
                    break;
                }
            }
            if (index < 0) {
                throw std::runtime_error("column '" + selector + "' not found in header of '" +
                                         path + "'");
            }
            continue;
        }
        if (index >= static_cast<long>(fields.size()) || !parses_as_number(fields[index])) {
            ++out.skipped_rows;
            continue;
        }
        out.values.emplace_back(trim(fields[index]));
    }
    if (out.values.empty() && out.skipped_rows == 0) {
        throw std::runtime_error("input file '" + path + "' has no data rows");
    }
    return out;
}

}  // namespace benford
