#ifndef CLIFFPAR_REPORT_HPP
#define CLIFFPAR_REPORT_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace cliffpar {

enum class Status { Pass, Fail, Skip };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

/// Result of a check body before timing is attached. A failing outcome
/// always carries the counterexample or a reproduction input.
struct Outcome {
    Status status = Status::Pass;
    std::string witness;

    static Outcome pass(std::string info = {}) { return {Status::Pass, std::move(info)}; }
    static Outcome fail(std::string witness) { return {Status::Fail, std::move(witness)}; }
    static Outcome skip(std::string reason) { return {Status::Skip, std::move(reason)}; }
};

struct Report {
    std::string check;
    Status status = Status::Pass;
    std::string witness;
    double ms = 0.0;
};

/// 64-bit FNV-1a of a check name, mixed into seeds so every check draws
/// its own stream regardless of run order.
inline std::uint64_t name_seed(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Runs `body`, timing it; exceptions become failures that quote the message.
inline Report run_check(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = Outcome::fail(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    return {name, o.status, std::move(o.witness), took.count()};
}

inline void sort_reports(std::vector<Report>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const Report& a, const Report& b) { return a.check < b.check; });
}

inline bool all_passed(const std::vector<Report>& reports) {
    return std::none_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::Fail; });
}

/// One JSON object per line, keys in the fixed order check, status, witness, ms.
inline void write_json_lines(std::ostream& os, const std::vector<Report>& reports) {
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["status"] = to_string(r.status);
        j["witness"] = r.witness;
        j["ms"] = r.ms;
        os << j.dump() << '\n';
    }
}

inline void write_human(std::ostream& os, const std::vector<Report>& reports) {
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& r : reports) {
        std::string tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP";
        os << tag << "  " << r.check;
        if (!r.witness.empty()) os << "  [" << r.witness << "]";
        os << '\n';
        if (r.status == Status::Fail) ++failed;
        if (r.status == Status::Skip) ++skipped;
    }
    os << reports.size() << " checks, " << failed << " failed, " << skipped << " skipped\n";
}

}  // namespace cliffpar

#endif
