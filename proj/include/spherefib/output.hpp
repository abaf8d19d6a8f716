#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spherefib/classify.hpp"

namespace spherefib {

// Flat, serialization-friendly view of one classification.
struct OutputRecord {
    int k = 0;
    i64 n = 0;
    std::string branch;
    bool star = false;
    int rho3 = 0;
    int rho5 = 0;
    int rho7 = 0;
    int rho9 = 0;
    i64 G = 0;
    std::vector<std::string> representatives;
    i64 timing_ms = 0;  // stays 0 unless timing was requested

    bool operator==(const OutputRecord&) const = default;
};

OutputRecord make_record(const ClassificationResult& res, bool unicode);
// Closed-form-only record (no orbit enumeration, no representatives).
OutputRecord make_table_record(int k, i64 n);

std::string to_json(const OutputRecord& rec);
OutputRecord record_from_json(const std::string& text);
std::string csv_header();
std::string to_csv_row(const OutputRecord& rec);
std::string to_text(const OutputRecord& rec);

// "A..B" or a single "N"; throws std::invalid_argument on malformed input.
std::pair<i64, i64> parse_range(const std::string& text);
// Built-in verification range for one k, after applying the
// SPHEREFIB_RANGE_K<k> environment override when present.
std::pair<i64, i64> default_range(int k);

struct RunOptions {
    std::string format = "text";  // text | json | csv
    bool unicode = false;
    bool timing = false;
    int jobs = 0;  // 0 = hardware concurrency
};

int run_classify(int k, i64 n, const RunOptions& opt, std::ostream& os, std::ostream& err);
int run_verify(const std::vector<int>& ks, bool explicit_range, std::pair<i64, i64> range,
               const RunOptions& opt, std::ostream& os, std::ostream& err);
int run_table(int k, std::pair<i64, i64> range, const RunOptions& opt, std::ostream& os);

}  // namespace spherefib
