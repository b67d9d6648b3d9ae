#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "benford/digit_block.hpp"

namespace benford {

// Leading width-digit integer of |value|. Throws std::domain_error on zero
// (callers tally and skip zeros).
std::int64_t extract_digits(double value, int base, int width);

// Same, reading the digits out of the decimal text itself when base is 10,
// so "0.0314" at width 3 yields 314 with no float rounding. Other bases
// parse to double first. Exponent suffixes only shift scale and are ignored.
std::int64_t extract_digits(std::string_view text, int base, int width);

struct DigitHistogram {
    int base = 10;
    int width = 1;
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t total = 0;
    std::int64_t dropped_zeros = 0;
    std::int64_t negatives_folded = 0;
};

DigitHistogram histogram(std::span<const double> data, int base, int width);
DigitHistogram histogram(std::span<const std::string> data, int base, int width);

// Commutative, associative count merge; both sides must share base and
// width. Folding partial histograms from split data gives the same result
// as one pass over the whole.
DigitHistogram merge(DigitHistogram left, const DigitHistogram& right);

enum class Verdict { conforms, marginal, violates };

std::string to_string(Verdict verdict);

// Mean-absolute-deviation cutoffs separating the verdicts; forensic
// convention defaults, overridable per call.
struct ConformityThresholds {
    double conforms_mad = 0.006;
    double marginal_mad = 0.012;
};

struct ConformityReport {
    DigitHistogram histogram;
    LawPrediction expected;
    double chi_square = 0;
    int degrees_of_freedom = 0;
    double mad = 0;          // mean |observed proportion - expected|
    double max_abs_dev = 0;
    Verdict verdict = Verdict::violates;
};

// Pearson chi-square and deviation statistics of the histogram against the
// expected law. The expected table must cover every observed outcome.
ConformityReport conformity(const DigitHistogram& hist, const LawPrediction& expected,
                            ConformityThresholds thresholds = {});

enum class TransformKind { scale, power, rebase };

// Elementwise |x|*param (scale), |x|^param (power) or identity (rebase;
// base changes happen at histogram time). Zeros pass through unchanged.
std::vector<double> transform_data(std::span<const double> data, TransformKind kind,
                                   double param);

// One column of a comma- or tab-delimited text file. Values keep their
// original spelling so base-10 digit extraction stays exact.
struct ColumnData {
    std::vector<std::string> values;
    std::int64_t skipped_rows = 0;  // blank, non-numeric, or missing the column
};

// selector: a 1-based column index, or a header name looked up in the first
// row.
ColumnData read_column(const std::string& path, const std::string& selector);

}  // namespace benford
