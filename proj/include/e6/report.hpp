#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "e6/constructions.hpp"
#include "e6/split.hpp"

namespace e6 {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::vector<i64> qs{2, 3, 4, 5};
    std::vector<int> classes;  // filled with 1..25 by default
    std::vector<Mode> modes{Mode::SimplyConnected, Mode::Adjoint};
    // any of: golden, orders, lifts, complements, decisions, obstructions
    std::vector<std::string> checks{"golden", "orders", "lifts", "complements", "decisions"};
    std::uint64_t max_field_size = std::uint64_t{1} << 32;
    std::size_t max_enumeration = 10000000;  // |T| * |C_W(w)| bound for closures
    unsigned threads = 0;                    // 0: hardware concurrency
    bool timings = false;
    std::string output;  // empty: standard output

    RunConfig();
    // throws std::invalid_argument on unknown keys or bad values
    static RunConfig from_json(const json& j);
    json to_json() const;
    void validate() const;
};

enum class Status { Pass, Mismatch, Skipped };
std::string to_string(Status s);

struct Record {
    std::string kind;
    json data;  // inputs and verdicts
    Status status = Status::Pass;
    std::string reason;  // mismatch or skip explanation
    double elapsed_ms = 0;
};

struct Report {
    json config;
    std::vector<Record> records;

    // 0 all pass, 1 some mismatch, 2 no mismatch but some skipped
    int exit_code() const;
    json to_json(bool timings) const;
    std::string summary_text() const;
};

Report run_suite(const RunConfig& cfg);

json to_json(const Decision& d);
json to_json(const ConstructionReport& r);
json to_json(const ObstructionResult& r);
json to_json(const TorusElement& h);
std::string weyl_word(Elt x);

// single scenarios; resource exhaustion yields a SKIPPED record
Record decision_record(int cls, i64 q, Mode mode, const RunConfig& cfg);
Record lift_record(int cls, i64 q, const RunConfig& cfg);
Record complement_record(int cls, i64 q, const RunConfig& cfg);
Record obstruction_record(int cls, i64 q, Mode mode);
Record torus_order_record(int cls, i64 q);
std::vector<Record> golden_records(const std::vector<int>& classes);

}  // namespace e6
