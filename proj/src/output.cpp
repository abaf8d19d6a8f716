#include "spherefib/output.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "spherefib/numtheory.hpp"

namespace spherefib {

namespace {

std::string format_element(const GroupElement& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.coeffs[i]);
    }
    return s + ")";
}

void print_partition(std::ostream& os, const std::vector<std::vector<GroupElement>>& part) {
    os << "orbit partition (" << part.size() << " orbits):\n";
    for (std::size_t i = 0; i < part.size(); ++i) {
        os << "  orbit " << (i + 1) << " (size " << part[i].size() << "):";
        for (const auto& x : part[i]) os << " " << format_element(x);
        os << "\n";
    }
}

nlohmann::json partition_json(const std::vector<std::vector<GroupElement>>& part) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& block : part) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& x : block) b.push_back(x.coeffs);
        out.push_back(std::move(b));
    }
    return out;
}

void fill_arithmetic(OutputRecord& rec, i64 n) {
    rec.star = satisfies_star(n);
    rec.rho3 = static_cast<int>(rho(3, n));
    rec.rho5 = static_cast<int>(rho(5, n));
    rec.rho7 = static_cast<int>(rho(7, n));
    rec.rho9 = static_cast<int>(rho(9, n));
}

int resolve_jobs(int requested, std::size_t tasks) {
    int jobs = requested > 0 ? requested
                             : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (static_cast<std::size_t>(jobs) > tasks) jobs = static_cast<int>(tasks ? tasks : 1);
    return jobs;
}

}  // namespace

OutputRecord make_record(const ClassificationResult& res, bool unicode) {
    OutputRecord rec;
    rec.k = res.k;
    rec.n = res.n;
    rec.branch = res.branch;
    rec.G = res.closed_form_G;
    fill_arithmetic(rec, res.n);
    if (unicode) {
        rec.representatives = representatives_symbolic(res, true);
    } else {
        rec.representatives.reserve(res.representatives.size());
        for (const auto& [elem, s] : res.representatives) rec.representatives.push_back(s);
    }
    return rec;
}

OutputRecord make_table_record(int k, i64 n) {
    OutputRecord rec;
    rec.k = k;
    rec.n = n;
    ClosedFormBranch tb = closed_form_branch(k, n);
    rec.branch = tb.label;
    rec.G = tb.G;
    fill_arithmetic(rec, n);
    return rec;
}

std::string to_json(const OutputRecord& rec) {
    nlohmann::json j;
    j["k"] = rec.k;
    j["n"] = rec.n;
    j["branch"] = rec.branch;
    j["star"] = rec.star;
    j["rho3"] = rec.rho3;
    j["rho5"] = rec.rho5;
    j["rho7"] = rec.rho7;
    j["rho9"] = rec.rho9;
    j["G"] = rec.G;
    j["representatives"] = rec.representatives;
    j["timing_ms"] = rec.timing_ms;
    return j.dump();
}

OutputRecord record_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    OutputRecord rec;
    rec.k = j.at("k").get<int>();
    rec.n = j.at("n").get<i64>();
    rec.branch = j.at("branch").get<std::string>();
    rec.star = j.at("star").get<bool>();
    rec.rho3 = j.at("rho3").get<int>();
    rec.rho5 = j.at("rho5").get<int>();
    rec.rho7 = j.at("rho7").get<int>();
    rec.rho9 = j.at("rho9").get<int>();
    rec.G = j.at("G").get<i64>();
    rec.representatives = j.at("representatives").get<std::vector<std::string>>();
    rec.timing_ms = j.value("timing_ms", i64{0});
    return rec;
}

std::string csv_header() {
    return "k,n,branch,star,rho3,rho5,rho7,rho9,G";
}

std::string to_csv_row(const OutputRecord& rec) {
    std::ostringstream os;
    // branch labels contain commas, so that field is always quoted
    os << rec.k << "," << rec.n << ",\"" << rec.branch << "\"," << (rec.star ? 1 : 0) << ","
       << rec.rho3 << "," << rec.rho5 << "," << rec.rho7 << "," << rec.rho9 << "," << rec.G;
    return os.str();
}

std::string to_text(const OutputRecord& rec) {
    std::ostringstream os;
    os << "k=" << rec.k << " n=" << rec.n << "\n";
    os << "branch: " << rec.branch << "\n";
    os << "star: " << (rec.star ? "true" : "false") << "\n";
    os << "rho3: " << rec.rho3 << "  rho5: " << rec.rho5 << "  rho7: " << rec.rho7
       << "  rho9: " << rec.rho9 << "\n";
    os << "G: " << rec.G << "\n";
    if (!rec.representatives.empty()) {
        os << "representatives:\n";
        for (std::size_t i = 0; i < rec.representatives.size(); ++i)
            os << "  " << (i + 1) << ". " << rec.representatives[i] << "\n";
    }
    return os.str();
}

std::pair<i64, i64> parse_range(const std::string& text) {
    auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        i64 v;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_range: not an integer: '" + s + "'");
        }
        if (used != s.size() || s.empty())
            throw std::invalid_argument("parse_range: not an integer: '" + s + "'");
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        i64 v = parse_int(text);
        return {v, v};
    }
    i64 lo = parse_int(text.substr(0, dots));
    i64 hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("parse_range: empty range '" + text + "'");
    return {lo, hi};
}

std::pair<i64, i64> default_range(int k) {
    if (k < 2 || k > 6) throw std::invalid_argument("default_range: k must be in [2,6]");
    std::pair<i64, i64> base;
    if (k <= 3)
        base = {2, 500};
    else if (k <= 5)
        base = {2, 300};
    else
        base = {2, 150};
    std::string var = "SPHEREFIB_RANGE_K" + std::to_string(k);
    if (const char* env = std::getenv(var.c_str())) base = parse_range(env);
    return base;
}

int run_classify(int k, i64 n, const RunOptions& opt, std::ostream& os, std::ostream& err) {
    try {
        auto t0 = std::chrono::steady_clock::now();
        ClassificationResult res = cross_validate(k, n);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        OutputRecord rec = make_record(res, opt.unicode);
        if (opt.timing) rec.timing_ms = static_cast<i64>(ms);
        if (opt.format == "json") {
            os << to_json(rec) << "\n";
        } else if (opt.format == "csv") {
            os << csv_header() << "\n" << to_csv_row(rec) << "\n";
        } else {
            os << to_text(rec);
            if (opt.timing) os << "time_ms: " << ms << "\n";
        }
        return 0;
    } catch (const MismatchError& e) {
        err << e.what() << "\n";
        print_partition(err, e.partition);
        return 1;
    }
}

int run_verify(const std::vector<int>& ks, bool explicit_range, std::pair<i64, i64> range,
               const RunOptions& opt, std::ostream& os, std::ostream& err) {
    struct Cell {
        int k;
        i64 n;
        bool ok = false;
        std::string detail;                              // mismatch / error text
        std::vector<std::vector<GroupElement>> partition;  // only on mismatch
    };
    struct Group {
        int k;
        i64 lo, hi;
        std::size_t first;  // index of first cell
    };

    std::vector<Cell> cells;
    std::vector<Group> groups;
    for (int k : ks) {
        auto [lo, hi] = explicit_range ? range : default_range(k);
        groups.push_back({k, lo, hi, cells.size()});
        for (i64 n = lo; n <= hi; ++n) cells.push_back({k, n});
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            Cell& c = cells[i];
            try {
                cross_validate(c.k, c.n);
                c.ok = true;
            } catch (const MismatchError& e) {
                c.detail = e.what();
                c.partition = e.partition;
            } catch (const std::exception& e) {
                c.detail = std::string("error at k=") + std::to_string(c.k) +
                           " n=" + std::to_string(c.n) + ": " + e.what();
            }
        }
    };
    int jobs = resolve_jobs(opt.jobs, cells.size());
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::size_t total_pass = 0, total_fail = 0;
    nlohmann::json jgroups = nlohmann::json::array();
    nlohmann::json jmismatches = nlohmann::json::array();
    std::ostringstream text;
    std::ostringstream failures;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        const Group& g = groups[gi];
        std::size_t last = (gi + 1 < groups.size()) ? groups[gi + 1].first : cells.size();
        std::size_t pass = 0, fail = 0;
        for (std::size_t i = g.first; i < last; ++i) {
            const Cell& c = cells[i];
            if (c.ok) {
                ++pass;
                continue;
            }
            ++fail;
            failures << c.detail << "\n";
            if (!c.partition.empty()) {
                print_partition(failures, c.partition);
                nlohmann::json m;
                m["k"] = c.k;
                m["n"] = c.n;
                m["detail"] = c.detail;
                m["partition"] = partition_json(c.partition);
                jmismatches.push_back(std::move(m));
            } else {
                nlohmann::json m;
                m["k"] = c.k;
                m["n"] = c.n;
                m["detail"] = c.detail;
                jmismatches.push_back(std::move(m));
            }
        }
        total_pass += pass;
        total_fail += fail;
        text << "k=" << g.k << " n=" << g.lo << ".." << g.hi << ": " << pass << " pass / " << fail
             << " fail\n";
        nlohmann::json jg;
        jg["k"] = g.k;
        jg["n_lo"] = g.lo;
        jg["n_hi"] = g.hi;
        jg["pass"] = pass;
        jg["fail"] = fail;
        jgroups.push_back(std::move(jg));
    }
    if (groups.size() > 1)
        text << "total: " << total_pass << " pass / " << total_fail << " fail\n";

    if (opt.format == "json") {
        nlohmann::json j;
        j["groups"] = std::move(jgroups);
        j["mismatches"] = std::move(jmismatches);
        j["pass"] = total_pass;
        j["fail"] = total_fail;
        os << j.dump() << "\n";
    } else {
        os << text.str();
        err << failures.str();
    }
    return total_fail == 0 ? 0 : 1;
}

int run_table(int k, std::pair<i64, i64> range, const RunOptions& opt, std::ostream& os) {
    std::vector<OutputRecord> rows;
    rows.reserve(static_cast<std::size_t>(range.second - range.first + 1));
    for (i64 n = range.first; n <= range.second; ++n) rows.push_back(make_table_record(k, n));

    if (opt.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(nlohmann::json::parse(to_json(r)));
        os << arr.dump() << "\n";
        return 0;
    }
    if (opt.format == "csv") {
        os << csv_header() << "\n";
        for (const auto& r : rows) os << to_csv_row(r) << "\n";
        return 0;
    }
    std::size_t bw = 6;
    for (const auto& r : rows) bw = std::max(bw, r.branch.size());
    os << std::left << std::setw(3) << "k" << std::setw(7) << "n" << std::setw(bw + 2) << "branch"
       << std::setw(6) << "star" << std::setw(6) << "rho3" << std::setw(6) << "rho5" << std::setw(6)
       << "rho7" << std::setw(6) << "rho9" << "G" << "\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(3) << r.k << std::setw(7) << r.n << std::setw(bw + 2)
           << r.branch << std::setw(6) << (r.star ? "true" : "false") << std::setw(6) << r.rho3
           << std::setw(6) << r.rho5 << std::setw(6) << r.rho7 << std::setw(6) << r.rho9 << r.G
           << "\n";
    }
    return 0;
}

}  // namespace spherefib
