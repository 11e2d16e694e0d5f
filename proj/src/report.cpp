#include "e6/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "e6/classes.hpp"
#include "e6/context.hpp"
#include "e6/ff.hpp"
#include "e6/reference.hpp"

namespace e6 {

RunConfig::RunConfig() {
    for (int c = 1; c <= 25; ++c) classes.push_back(c);
}

namespace {

const std::set<std::string> kChecks{"golden", "orders", "lifts", "complements", "decisions", "obstructions"};

Mode parse_mode(const std::string& s) {
    if (s == "sc") return Mode::SimplyConnected;
    if (s == "adjoint") return Mode::Adjoint;
    throw std::invalid_argument("mode must be \"sc\" or \"adjoint\", got \"" + s + "\"");
}

}  // namespace

void RunConfig::validate() const {
    for (i64 q : qs) {
        int p = 0, e = 0;
        if (!prime_power(q, p, e)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    }
    for (int c : classes)
        if (c < 1 || c > 25) throw std::invalid_argument("class " + std::to_string(c) + " is outside 1..25");
    for (const std::string& c : checks)
        if (!kChecks.count(c)) throw std::invalid_argument("unknown check \"" + c + "\"");
    if (max_field_size < 2) throw std::invalid_argument("max_field_size must be at least 2");
}

RunConfig RunConfig::from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("configuration must be a JSON object");
    RunConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "q") {
            c.qs = v.get<std::vector<i64>>();
        } else if (key == "classes") {
            c.classes = v.get<std::vector<int>>();
        } else if (key == "modes") {
            c.modes.clear();
            for (const std::string& m : v.get<std::vector<std::string>>()) c.modes.push_back(parse_mode(m));
        } else if (key == "checks") {
            c.checks = v.get<std::vector<std::string>>();
        } else if (key == "max_field_size") {
            c.max_field_size = v.get<std::uint64_t>();
        } else if (key == "max_enumeration") {
            c.max_enumeration = v.get<std::size_t>();
        } else if (key == "threads") {
            c.threads = v.get<unsigned>();
        } else if (key == "timings") {
            c.timings = v.get<bool>();
        } else if (key == "output") {
            c.output = v.get<std::string>();
        } else {
            throw std::invalid_argument("unknown configuration key \"" + key + "\"");
        }
    }
    c.validate();
    return c;
}

json RunConfig::to_json() const {
    json modes_j = json::array();
    for (Mode m : modes) modes_j.push_back(e6::to_string(m));
    return json{{"q", qs},
                {"classes", classes},
                {"modes", modes_j},
                {"checks", checks},
                {"max_field_size", max_field_size},
                {"max_enumeration", max_enumeration}};
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Mismatch: return "MISMATCH";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

std::string weyl_word(Elt x) {
    std::string s;
    for (int i : context().weyl.reduced_word(x)) s += "w" + std::to_string(i);
    return s.empty() ? "1" : s;
}

json to_json(const TorusElement& h) { return json(std::vector<i64>(h.e.begin(), h.e.end())); }

namespace {

json closure_json(const ClosureCheck& c) {
    return json{{"size", c.size},
                {"torus_intersection_trivial", c.torus_intersection_trivial},
                {"image_is_centralizer", c.image_is_centralizer}};
}

bool closure_ok(const ClosureCheck& c, std::size_t expected) {
    return c.performed && c.torus_intersection_trivial && c.image_is_centralizer && c.size == expected;
}

bool in_range(int cls, i64 q, std::size_t limit) {
    return static_cast<double>(torus_order(cls, q)) * class_info(cls).centralizer_order <=
           static_cast<double>(limit);
}

Record run_guarded(const std::string& kind, json key, const std::function<void(Record&)>& body) {
    Record r;
    r.kind = kind;
    r.data = std::move(key);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::domain_error& e) {
        r.status = Status::Skipped;
        r.reason = e.what();
    } catch (const std::overflow_error& e) {
        r.status = Status::Skipped;
        r.reason = e.what();
    } catch (const std::length_error& e) {
        r.status = Status::Skipped;
        r.reason = e.what();
    } catch (const std::exception& e) {
        r.status = Status::Mismatch;
        r.reason = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void fail(Record& r, const std::string& why) {
    if (r.status == Status::Pass) {
        r.status = Status::Mismatch;
        r.reason = why;
    }
}

}  // namespace

json to_json(const Decision& d) {
    json j{{"class", d.cls},        {"q", d.q},           {"mode", to_string(d.mode)},
           {"splits", d.splits},    {"expected", d.expected}, {"ambient_k", d.ambient_k},
           {"modulus", d.modulus},  {"generators", d.generators}, {"relators", d.relators}};
    if (d.splits) {
        json w = json::array();
        for (const NormalizerElement& g : d.witness) w.push_back(json{{"h", to_json(g.h)}, {"x", weyl_word(g.x)}});
        j["witness"] = w;
        j["witness_verified"] = d.witness_verified;
        j["closure"] = d.closure.performed ? closure_json(d.closure) : json(nullptr);
    } else {
        j["certificate"] = d.certificate;
        j["certificate_verified"] = d.certificate_verified;
        j["obstruction_unsolvable"] = d.obstruction_unsolvable ? json(*d.obstruction_unsolvable) : json(nullptr);
    }
    if (d.q % 2 == 0) j["canonical_lifts_split"] = d.canonical_lifts_split;
    return j;
}

json to_json(const ConstructionReport& r) {
    json j{{"class", r.cls}, {"q", r.q}, {"applicable", r.applicable}};
    if (!r.applicable) {
        j["reason"] = r.reason;
        return j;
    }
    j["field_k"] = r.field_k;
    j["modulus"] = r.modulus;
    j["elements"] = r.elements;
    json checks = json::array();
    for (const NamedCheck& c : r.checks) checks.push_back(json{{"check", c.name}, {"ok", c.ok}});
    j["checks"] = checks;
    if (r.element_order) j["order"] = r.element_order;
    j["target_order"] = r.weyl_order;
    if (r.closure_in_range) j["closure"] = closure_json(r.closure);
    j["ok"] = r.ok;
    return j;
}

json to_json(const ObstructionResult& r) {
    json j{{"class", r.cls}, {"q", r.q}, {"mode", to_string(r.mode)}, {"has_subsystem", r.has_subsystem}};
    if (!r.has_subsystem) return j;
    j["generators"] = r.generator_words;
    j["relations"] = r.relator_text;
    j["solvable"] = r.solvable;
    if (!r.solvable) {
        j["certificate"] = r.certificate;
        j["certificate_verified"] = r.certificate_verified;
    }
    return j;
}

Record decision_record(int cls, i64 q, Mode mode, const RunConfig& cfg) {
    return run_guarded("decision", json{{"class", cls}, {"q", q}, {"mode", to_string(mode)}}, [&](Record& r) {
        const Decision d = decide_complement(cls, q, mode, cfg.max_enumeration);
        r.data = to_json(d);
        const std::size_t c_order = static_cast<std::size_t>(class_info(cls).centralizer_order);
        if (d.splits != d.expected) fail(r, d.splits ? "splits, expected no complement" : "no complement, expected split");
        if (d.splits) {
            if (!d.witness_verified) fail(r, "witness does not satisfy the relators");
            if (in_range(cls, q, cfg.max_enumeration) && !closure_ok(d.closure, c_order))
                fail(r, "closure of the witness is not a complement");
            if (!in_range(cls, q, cfg.max_enumeration)) r.data["closure_note"] = "relation-level verification only";
        } else {
            if (!d.certificate_verified) fail(r, "certificate check failed");
            if (d.obstruction_unsolvable && !*d.obstruction_unsolvable) fail(r, "hand-made subsystem is solvable");
        }
        if (q % 2 == 0 && !d.canonical_lifts_split) fail(r, "canonical lifts do not form a complement");
    });
}

Record lift_record(int cls, i64 q, const RunConfig& cfg) {
    return run_guarded("lift", json{{"class", cls}, {"q", q}}, [&](Record& r) {
        const ConstructionReport c = verify_lift(cls, q, cfg.max_field_size);
        r.data = to_json(c);
        if (!c.ok) fail(r, "lift check failed");
    });
}

Record complement_record(int cls, i64 q, const RunConfig& cfg) {
    return run_guarded("complement", json{{"class", cls}, {"q", q}}, [&](Record& r) {
        const ConstructionReport c = verify_complement(cls, q, cfg.max_enumeration, cfg.max_field_size);
        r.data = to_json(c);
        if (c.applicable && !c.ok) fail(r, "complement check failed");
    });
}

Record obstruction_record(int cls, i64 q, Mode mode) {
    return run_guarded("obstruction", json{{"class", cls}, {"q", q}, {"mode", to_string(mode)}}, [&](Record& r) {
        const ObstructionResult o = obstruction_check(cls, q, mode);
        r.data = to_json(o);
        if (!o.has_subsystem) return;
        const bool expected = expected_split(cls, q);
        r.data["expected_solvable"] = expected;
        if (o.solvable != expected) fail(r, o.solvable ? "subsystem solvable" : "subsystem unsolvable");
        if (!o.solvable && !o.certificate_verified) fail(r, "certificate check failed");
    });
}

Record torus_order_record(int cls, i64 q) {
    return run_guarded("torus_order", json{{"class", cls}, {"q", q}}, [&](Record& r) {
        const ClassInfo& info = class_info(cls);
        const i64 det = torus_order(cls, q);
        const i64 expected = expected_torus_order(cls, q);
        const std::vector<i64> snf = invariant_factors(twisted_matrix(context().weyl, class_representative(context().weyl, cls), q));
        std::vector<i64> snf_gt1, cyc;
        for (i64 d : snf)
            if (d > 1) snf_gt1.push_back(d);
        for (i64 d : abelian_invariants(expected_cyclic_orders(cls, q)))
            if (d > 1) cyc.push_back(d);
        r.data["label"] = info.torus_label;
        r.data["order"] = det;
        r.data["expected_order"] = expected;
        r.data["invariant_factors"] = snf_gt1;
        r.data["expected_invariant_factors"] = cyc;
        if (det != expected) fail(r, "torus order differs from the polynomial");
        if (snf_gt1 != cyc) fail(r, "invariant factors differ from the cyclic structure");
    });
}

std::vector<Record> golden_records(const std::vector<int>& classes) {
    std::vector<Record> out;
    out.push_back(run_guarded("extraspecial", json::object(), [](Record& r) {
        const std::vector<RootPair> got = context().rs.extraspecial_pairs();
        json list = json::array();
        for (const RootPair& p : got) list.push_back({p.r + 1, p.s + 1, p.sign});
        r.data["pairs"] = list;
        const auto& want = reference_extraspecial();
        bool same = got.size() == want.size();
        for (std::size_t i = 0; same && i < got.size(); ++i)
            same = static_cast<int>(got[i].r) + 1 == want[i][0] && static_cast<int>(got[i].s) + 1 == want[i][1] &&
                   got[i].sign == want[i][2];
        r.data["matches_reference"] = same;
        if (!same) fail(r, "extraspecial pairs differ");
    }));
    out.push_back(run_guarded("weyl_group", json::object(), [](Record& r) {
        const WeylGroup& W = context().weyl;
        r.data["order"] = W.size();
        r.data["classes"] = W.class_count();
        if (W.size() != 51840 || W.class_count() != 25) fail(r, "Weyl group order or class count");
    }));
    for (int cls : classes)
        out.push_back(run_guarded("weyl_class", json{{"class", cls}}, [cls](Record& r) {
            const WeylGroup& W = context().weyl;
            const ClassInfo& info = class_info(cls);
            const Elt w = class_representative(W, cls);
            r.data["representative"] = info.representative;
            r.data["order"] = W.order(w);
            r.data["centralizer_order"] = W.centralizer(w).size();
            r.data["classified_as"] = classify(W, w).cls;
            if (W.order(w) != info.order || W.centralizer(w).size() != static_cast<std::size_t>(info.centralizer_order))
                fail(r, "order or centralizer order differs");
            if (classify(W, w).cls != cls) fail(r, "representative classified elsewhere");
        }));
    out.push_back(run_guarded("tits_identities", json::object(), [&classes](Record& r) {
        json list = json::array();
        std::size_t bad = 0;
        for (const TitsIdentity& id : reference_tits_identities()) {
            if (id.cls && std::find(classes.begin(), classes.end(), id.cls) == classes.end()) continue;
            const TitsIdentityResult t = check_tits_identity(id);
            if (!t.holds) ++bad;
            json e{{"relation", id.relation}, {"holds", t.holds}};
            if (id.cls) e["class"] = id.cls;
            if (!t.holds) e["value"] = t.value;
            list.push_back(e);
        }
        r.data["identities"] = list;
        if (bad) fail(r, std::to_string(bad) + " identities fail");
    }));
    return out;
}

int Report::exit_code() const {
    bool skipped = false;
    for (const Record& r : records) {
        if (r.status == Status::Mismatch) return 1;
        skipped = skipped || r.status == Status::Skipped;
    }
    return skipped ? 2 : 0;
}

json Report::to_json(bool timings) const {
    json recs = json::array();
    std::size_t pass = 0, mismatch = 0, skipped = 0;
    for (const Record& r : records) {
        json j{{"kind", r.kind}, {"status", e6::to_string(r.status)}};
        if (!r.reason.empty()) j["reason"] = r.reason;
        j["data"] = r.data;
        if (timings) j["elapsed_ms"] = r.elapsed_ms;
        recs.push_back(j);
        (r.status == Status::Pass ? pass : r.status == Status::Mismatch ? mismatch : skipped)++;
    }
    const int code = exit_code();
    return json{{"config", config},
                {"summary",
                 {{"verdict", code == 0 ? "pass" : code == 1 ? "mismatch" : "skipped"},
                  {"records", records.size()},
                  {"pass", pass},
                  {"mismatch", mismatch},
                  {"skipped", skipped}}},
                {"records", recs}};
}

std::string Report::summary_text() const {
    std::ostringstream os;
    for (const Record& r : records) {
        if (r.status == Status::Pass) continue;
        os << e6::to_string(r.status) << " " << r.kind;
        for (const char* k : {"class", "q", "mode"})
            if (r.data.contains(k)) os << " " << k << "=" << (r.data[k].is_string() ? r.data[k].get<std::string>() : r.data[k].dump());
        os << ": " << r.reason << "\n";
    }
    const json s = to_json(false)["summary"];
    os << "verdict " << s["verdict"].get<std::string>() << ": " << s["pass"].get<std::size_t>() << " pass, "
       << s["mismatch"].get<std::size_t>() << " mismatch, " << s["skipped"].get<std::size_t>() << " skipped of "
       << s["records"].get<std::size_t>() << " records\n";
    return os.str();
}

Report run_suite(const RunConfig& cfg) {
    cfg.validate();
    auto wants = [&](const char* c) { return std::find(cfg.checks.begin(), cfg.checks.end(), c) != cfg.checks.end(); };
    std::vector<std::function<std::vector<Record>()>> tasks;
    auto one = [&](std::function<Record()> f) { tasks.push_back([f] { return std::vector<Record>{f()}; }); };

    if (wants("golden") && !cfg.classes.empty()) tasks.push_back([&cfg] { return golden_records(cfg.classes); });
    for (i64 q : cfg.qs)
        for (int cls : cfg.classes) {
            if (wants("orders")) one([=] { return torus_order_record(cls, q); });
            if (wants("lifts")) one([=, &cfg] { return lift_record(cls, q, cfg); });
            if (wants("complements") && expected_split(cls, q)) one([=, &cfg] { return complement_record(cls, q, cfg); });
            for (Mode m : cfg.modes) {
                if (wants("decisions")) one([=, &cfg] { return decision_record(cls, q, m, cfg); });
                if (wants("obstructions") && obstruction_subsystem(cls)) one([=] { return obstruction_record(cls, q, m); });
            }
        }

    std::vector<std::vector<Record>> results(tasks.size());
    unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks.size(), 1)));
    context();
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = tasks[i]();
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    Report rep;
    rep.config = cfg.to_json();
    for (auto& rs : results)
        for (Record& r : rs) rep.records.push_back(std::move(r));
    return rep;
}

}  // namespace e6
