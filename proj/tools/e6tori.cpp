#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "e6/classes.hpp"
#include "e6/context.hpp"
#include "e6/report.hpp"
#include "e6/torusnorm.hpp"
#include "e6/words.hpp"

using namespace e6;

namespace {

struct Common {
    std::string config_path;
    std::string output;
    std::vector<int> classes;
    unsigned threads = 0;
    std::uint64_t max_field_size = 0;
    std::size_t max_enumeration = 0;
    bool no_timings = false;
};

void add_common(CLI::App* app, Common& c, bool with_classes) {
    app->add_option("--config", c.config_path, "JSON configuration file; flags override it");
    app->add_option("-o,--output", c.output, "write the JSON report here instead of standard output");
    if (with_classes) app->add_option("--classes", c.classes, "torus classes (1..25)")->check(CLI::Range(1, 25));
    app->add_option("--threads", c.threads, "worker threads, 0 for all cores");
    app->add_option("--max-field-size", c.max_field_size, "largest field F_{q^k} to construct");
    app->add_option("--max-enumeration", c.max_enumeration, "largest |T| * |C_W(w)| for closure checks");
    app->add_flag("--no-timings", c.no_timings, "omit elapsed_ms from the report");
}

RunConfig load_config(const Common& c) {
    RunConfig cfg;
    if (!c.config_path.empty()) {
        std::ifstream in(c.config_path);
        if (!in) throw std::invalid_argument("cannot open " + c.config_path);
        cfg = RunConfig::from_json(json::parse(in));
    }
    if (!c.output.empty()) cfg.output = c.output;
    if (!c.classes.empty()) cfg.classes = c.classes;
    if (c.threads) cfg.threads = c.threads;
    if (c.max_field_size) cfg.max_field_size = c.max_field_size;
    if (c.max_enumeration) cfg.max_enumeration = c.max_enumeration;
    return cfg;
}

void emit(const json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int finish(const Report& rep, const RunConfig& cfg, bool timings) {
    emit(rep.to_json(timings), cfg.output);
    std::cerr << rep.summary_text();
    return rep.exit_code();
}

json root_json(RootId r) {
    const RootSystem& rs = context().rs;
    return json{{"index", r + 1}, {"coords", rs.coords(r)}, {"height", rs.height(r)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact torus-normalizer arithmetic for groups of type E6"};
    app.require_subcommand(1);

    auto* roots = app.add_subcommand("roots", "positive roots and extraspecial pairs");

    auto* weyl = app.add_subcommand("weyl", "Weyl group classes");
    weyl->require_subcommand(1);
    std::string classify_word;
    auto* classify_cmd = weyl->add_subcommand("classify", "torus class of a word in w1..w36");
    classify_cmd->add_option("word", classify_word)->required();
    auto* table = weyl->add_subcommand("table", "the class table");

    std::string tits_word;
    auto* tits = app.add_subcommand("tits", "Weyl image and h-part of a word in n_k, h_k");
    tits->add_option("word", tits_word)->required();

    int torus_class = 0;
    i64 torus_q = 0;
    bool structure = false, enumerate = false;
    std::size_t enum_limit = 1000000;
    auto* torus = app.add_subcommand("torus", "order and structure of a maximal torus");
    torus->add_option("--class", torus_class)->required()->check(CLI::Range(1, 25));
    torus->add_option("--q", torus_q)->required();
    torus->add_flag("--structure", structure, "include generators");
    torus->add_flag("--enumerate", enumerate, "list all elements");
    torus->add_option("--limit", enum_limit, "largest torus to enumerate");

    Common common;
    int split_class = 0;
    i64 split_q = 0;
    bool adjoint = false;
    auto* decide = app.add_subcommand("decide-split", "does T have a complement in N");
    decide->add_option("--class", split_class)->required()->check(CLI::Range(1, 25));
    decide->add_option("--q", split_q)->required();
    decide->add_flag("--adjoint", adjoint, "adjoint group instead of simply connected");
    add_common(decide, common, false);

    std::vector<i64> qs;
    auto* complements = app.add_subcommand("verify-complements", "explicit complements of split classes");
    complements->add_option("--q", qs, "field sizes");
    add_common(complements, common, true);
    auto* lifts = app.add_subcommand("verify-lifts", "lifts of w with the order of w");
    lifts->add_option("--q", qs, "field sizes");
    add_common(lifts, common, true);
    i64 obstruction_q = 0;
    auto* obstructions = app.add_subcommand("obstructions", "hand-made subsystems for non-split classes");
    obstructions->add_option("--q", obstruction_q)->required();
    add_common(obstructions, common, true);

    std::vector<std::string> checks, modes;
    bool timings = false;
    auto* suite = app.add_subcommand("suite", "full verification run");
    suite->add_option("--q", qs, "field sizes");
    suite->add_option("--checks", checks, "golden, orders, lifts, complements, decisions, obstructions");
    suite->add_option("--modes", modes, "sc, adjoint");
    suite->add_flag("--timings", timings, "include elapsed_ms");
    add_common(suite, common, true);

    CLI11_PARSE(app, argc, argv);

    try {
        const Context& ctx = context();
        const WeylGroup& W = ctx.weyl;

        if (*roots) {
            json pos = json::array();
            for (RootId r = 0; r < kPositive; ++r) pos.push_back(root_json(r));
            json extra = json::array();
            for (const RootPair& p : ctx.rs.extraspecial_pairs()) extra.push_back({p.r + 1, p.s + 1, p.sign});
            emit(json{{"positive_roots", pos}, {"extraspecial", extra}}, "");
            return 0;
        }
        if (*classify_cmd) {
            const Elt x = parse_weyl_word(W, classify_word);
            const Classification c = e6::classify(W, x);
            emit(json{{"word", classify_word},
                      {"reduced_word", weyl_word(x)},
                      {"order", W.order(x)},
                      {"class", c.cls},
                      {"conjugator", weyl_word(c.conjugator)}},
                 "");
            return 0;
        }
        if (*table) {
            json rows = json::array();
            for (const ClassInfo& c : class_table())
                rows.push_back(json{{"class", c.index},
                                    {"representative", c.representative},
                                    {"order", c.order},
                                    {"centralizer_order", c.centralizer_order},
                                    {"centralizer", c.centralizer_label},
                                    {"torus", c.torus_label}});
            emit(rows, "");
            return 0;
        }
        if (*tits) {
            const TitsElement t = parse_tits_word(ctx.tits, tits_word);
            emit(json{{"word", tits_word},
                      {"weyl", weyl_word(t.weyl)},
                      {"h_part", hbits_to_string(ctx.tits.h_part(t))}},
                 "");
            return 0;
        }
        if (*torus) {
            int p = 0, e = 0;
            if (!prime_power(torus_q, p, e)) throw std::invalid_argument("q is not a prime power");
            const TorusStructure s = torus_structure(torus_class, torus_q);
            json j{{"class", torus_class},
                   {"q", torus_q},
                   {"order", s.order},
                   {"invariant_factors", s.invariant_factors},
                   {"ambient_k", s.ambient_k}};
            if (structure || enumerate) j["modulus"] = s.modulus;
            if (structure) {
                json gens = json::array();
                for (const TorusElement& g : s.generators) gens.push_back(to_json(g));
                j["generators"] = gens;
            }
            if (enumerate) {
                json all = json::array();
                for (const TorusElement& h : enumerate_torus(TorusModel(torus_q, s.modulus), s, enum_limit))
                    all.push_back(to_json(h));
                j["elements"] = all;
            }
            emit(j, "");
            return 0;
        }

        RunConfig cfg = load_config(common);
        bool with_timings = !common.no_timings;
        if (*decide) {
            cfg.checks = {"decisions"};
            cfg.classes = {split_class};
            cfg.qs = {split_q};
            cfg.modes = {adjoint ? Mode::Adjoint : Mode::SimplyConnected};
        } else if (*complements || *lifts) {
            cfg.checks = {*complements ? "complements" : "lifts"};
            if (!qs.empty()) cfg.qs = qs;
        } else if (*obstructions) {
            cfg.checks = {"obstructions"};
            cfg.qs = {obstruction_q};
        } else if (*suite) {
            if (!qs.empty()) cfg.qs = qs;
            if (!checks.empty()) cfg.checks = checks;
            if (!modes.empty()) {
                json m = modes;
                cfg.modes = RunConfig::from_json(json{{"modes", m}}).modes;
            }
            cfg.timings = cfg.timings || timings;
            with_timings = cfg.timings && !common.no_timings;
        }
        cfg.validate();
        return finish(run_suite(cfg), cfg, with_timings);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "skipped: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "skipped: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
