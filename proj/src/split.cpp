#include "e6/split.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "e6/classes.hpp"
#include "e6/words.hpp"

namespace e6 {

std::string to_string(Mode m) { return m == Mode::SimplyConnected ? "sc" : "adjoint"; }

namespace {

struct NormalHash {
    std::size_t operator()(const NormalizerElement& g) const {
        std::size_t h = g.x;
        for (i64 v : g.h.e) h = h * 1000003u ^ static_cast<std::size_t>(v);
        return h;
    }
};

// z in T, i.e. the center of G(q) is nontrivial and representable in mu_M
bool center_active(const TorusOps& ops, const TwistData& t) {
    const TorusModel& m = ops.model();
    if (m.p() == 3 || m.modulus() % 3) return false;
    return ops.in_torus(ops.center_element(), t);
}

// least of h, hz, hz^2
TorusElement adjoint_normal(const TorusOps& ops, const TorusElement& h, bool active) {
    if (!active) return h;
    const TorusElement z = ops.center_element();
    TorusElement a = ops.mul(h, z), b = ops.mul(a, z);
    return std::min({h.e, a.e, b.e}) == h.e ? h : (std::min(a.e, b.e) == a.e ? a : b);
}

Word commutator_word(int a, int b) { return {a, b, -a, -b}; }

Word power_word(const Word& w, int k) {
    Word r;
    for (int i = 0; i < k; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

// y -> t = M B^{-1} y = V diag(M/d) U y mod M
struct TorusParam {
    SmithForm s;
    i64 m;
    Vec6 operator()(const i64* y) const {
        Vec6 uy{}, t{};
        for (int i = 0; i < 6; ++i) {
            __int128 acc = 0;
            for (int j = 0; j < 6; ++j) acc += static_cast<__int128>(s.u[i][j]) * y[j];
            const i64 d = s.d[i];
            if (m % d) throw std::domain_error("torus model too small for the twisted matrix");
            uy[i] = mulmod(mod(static_cast<i64>(acc % m), m), m / d, m);
        }
        for (int i = 0; i < 6; ++i) {
            __int128 acc = 0;
            for (int j = 0; j < 6; ++j) acc += static_cast<__int128>(s.v[i][j]) * uy[j];
            t[i] = mod(static_cast<i64>(acc % m), m);
        }
        return t;
    }
};

}  // namespace

NormalizerElement evaluate(const TorusOps& ops, const Word& w, const std::vector<NormalizerElement>& gens) {
    NormalizerElement r = ops.identity();
    for (int l : w) {
        const NormalizerElement& g = gens.at(static_cast<std::size_t>(std::abs(l) - 1));
        r = ops.multiply(r, l > 0 ? g : ops.inverse(g));
    }
    return r;
}

SectionSystem build_section_system(const TorusOps& ops, const SectionProblem& p) {
    const Context& ctx = ops.ctx();
    const WeylGroup& W = ctx.weyl;
    const TwistData& t = p.twist;
    const i64 m = ops.model().modulus();
    const std::size_t g = p.generators.size();

    SectionSystem out;
    out.modulus = m;
    std::vector<NormalizerElement> base, base_inv;
    for (Elt x : p.generators) {
        auto h = ops.coset_particular_solution(x, t);
        if (!h) throw std::domain_error("torus model too small for a particular solution");
        out.base.push_back(*h);
        base.push_back({*h, x});
        base_inv.push_back(ops.inverse(base.back()));
    }

    const Mat6 b = twisted_matrix(W, t.w, t.q);

    // lattice L: columns of B, plus B z / M when z is in T
    IntMatrix lat = from_mat6(b);
    if (p.mode == Mode::Adjoint && center_active(ops, t)) {
        const TorusElement z = ops.center_element();
        for (int i = 0; i < 6; ++i) {
            __int128 acc = 0;
            for (int j = 0; j < 6; ++j) acc += static_cast<__int128>(b[i][j]) * z.e[j];
            if (acc % m) throw std::logic_error("center element is not in the torus");
            lat[i].push_back(static_cast<i64>(acc / m));
        }
        out.center_in_lattice = true;
    }
    const SmithForm ls = smith_form(lat);
    i64 e = 1;
    for (std::size_t i = 0; i < 6; ++i) {
        if (ls.d[i] == 0) throw std::logic_error("twisted matrix is singular");
        if (ls.d[i] > 1) out.lattice_factors.push_back(ls.d[i]);
        e = lcm(e, ls.d[i]);
    }

    ModSystem& sys = out.system;
    sys.modulus = e;
    sys.unknowns = 6 * g;
    for (const Word& rel : p.relators) {
        std::vector<Mat6> k(g, Mat6{});
        NormalizerElement pre = ops.identity();
        for (int l : rel) {
            const std::size_t j = static_cast<std::size_t>(std::abs(l) - 1);
            if (j >= g) throw std::invalid_argument("relator letter out of range");
            const Mat6 ax = W.matrix(pre.x);
            if (l > 0) {
                k[j] = add(k[j], ax);
                pre = ops.multiply(pre, base[j]);
            } else {
                k[j] = sub(k[j], e6::mul(ax, W.matrix(W.inverse(p.generators[j]))));
                pre = ops.multiply(pre, base_inv[j]);
            }
        }
        if (pre.x != W.identity()) throw std::invalid_argument("relator has nontrivial Weyl image");
        out.relator_values.push_back(pre.h.e);

        Vec6 bc{};
        for (int i = 0; i < 6; ++i) {
            __int128 acc = 0;
            for (int j = 0; j < 6; ++j) acc += static_cast<__int128>(b[i][j]) * pre.h.e[j];
            if (acc % m) throw std::logic_error("relator value is not in the torus");
            bc[i] = static_cast<i64>(acc / m);
        }
        for (std::size_t i = 0; i < 6; ++i) {
            const i64 d = ls.d[i];
            if (d == 1) continue;
            const i64 scale_i = e / d;
            std::vector<i64> row(6 * g, 0);
            for (std::size_t j = 0; j < g; ++j)
                for (int c = 0; c < 6; ++c) {
                    __int128 acc = 0;
                    for (int r = 0; r < 6; ++r) acc += static_cast<__int128>(ls.u[i][r]) * k[j][r][c];
                    row[6 * j + c] = mulmod(mod(static_cast<i64>(acc % e), e), scale_i, e);
                }
            __int128 acc = 0;
            for (int r = 0; r < 6; ++r) acc += static_cast<__int128>(ls.u[i][r]) * bc[r];
            sys.a.push_back(std::move(row));
            sys.b.push_back(mod(-mulmod(mod(static_cast<i64>(acc % e), e), scale_i, e), e));
        }
    }
    return out;
}

SectionResult solve_section(const TorusOps& ops, const SectionProblem& p) {
    SectionResult r;
    r.system = build_section_system(ops, p);
    const ModSolution sol = solve_mod(r.system.system);
    r.solvable = sol.solvable;
    if (!sol.solvable) {
        r.certificate = sol.certificate;
        return r;
    }
    const TorusParam param{smith_form(from_mat6(twisted_matrix(ops.ctx().weyl, p.twist.w, p.twist.q))),
                           ops.model().modulus()};
    for (std::size_t j = 0; j < p.generators.size(); ++j) {
        TorusElement t{param(sol.y.data() + 6 * j)};
        r.witness.push_back({ops.mul(r.system.base[j], t), p.generators[j]});
    }
    return r;
}

bool relators_hold(const TorusOps& ops, const SectionProblem& p, const std::vector<NormalizerElement>& lifts) {
    const bool active = p.mode == Mode::Adjoint && center_active(ops, p.twist);
    for (const Word& rel : p.relators) {
        const NormalizerElement v = evaluate(ops, rel, lifts);
        if (v.x != ops.ctx().weyl.identity()) return false;
        if (adjoint_normal(ops, v.h, active) != ops.one()) return false;
    }
    return true;
}

ClosureCheck check_closure(const TorusOps& ops, const TwistData& t, const std::vector<NormalizerElement>& lifts,
                           Mode mode, std::size_t limit) {
    ClosureCheck c;
    const bool active = mode == Mode::Adjoint && center_active(ops, t);
    auto norm = [&](NormalizerElement g) {
        g.h = adjoint_normal(ops, g.h, active);
        return g;
    };
    std::unordered_set<NormalizerElement, NormalHash> seen{ops.identity()};
    std::vector<NormalizerElement> queue{ops.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const NormalizerElement& g : lifts) {
            NormalizerElement y = norm(ops.multiply(queue[i], g));
            if (seen.insert(y).second) {
                if (seen.size() > limit) {
                    c.performed = true;
                    c.size = seen.size();
                    return c;
                }
                queue.push_back(y);
            }
        }
    c.performed = true;
    c.size = queue.size();
    const WeylGroup& W = ops.ctx().weyl;
    std::size_t over_identity = 0;
    std::vector<char> image(W.size(), 0);
    std::size_t distinct = 0;
    bool commute = true;
    for (const NormalizerElement& g : queue) {
        if (g.x == W.identity()) ++over_identity;
        if (!image[g.x]) {
            image[g.x] = 1;
            ++distinct;
            if (W.mul(g.x, t.w) != W.mul(t.w, g.x)) commute = false;
        }
    }
    c.torus_intersection_trivial = over_identity == 1;
    c.image_is_centralizer = commute && distinct == W.centralizer(t.w).size();
    return c;
}

std::optional<bool> brute_force_section(const TorusOps& ops, const SectionProblem& p, std::size_t max_steps) {
    const std::size_t g = p.generators.size();
    const TorusStructure ts = torus_structure_in(ops.model(), p.twist.w);
    if (static_cast<std::uint64_t>(ts.order) > max_steps) return std::nullopt;
    const std::vector<TorusElement> torus = enumerate_torus(ops.model(), ts, max_steps);
    if (g == 0) return relators_hold(ops, p, {});

    const bool active = p.mode == Mode::Adjoint && center_active(ops, p.twist);
    std::vector<NormalizerElement> base;
    for (Elt x : p.generators) {
        auto h = ops.coset_particular_solution(x, p.twist);
        if (!h) throw std::domain_error("torus model too small for a particular solution");
        base.push_back({*h, x});
    }
    // a relator is tested as soon as all but its highest generator are fixed,
    // pruning the candidates of that generator (forward checking)
    std::vector<std::vector<const Word*>> single(g), ready(g);
    for (const Word& rel : p.relators) {
        std::vector<std::size_t> used;
        for (int l : rel) used.push_back(static_cast<std::size_t>(std::abs(l) - 1));
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        if (used.empty()) continue;
        if (used.size() == 1) {
            single[used[0]].push_back(&rel);
        } else {
            ready[used[used.size() - 2]].push_back(&rel);
        }
    }
    std::size_t steps = 0;
    bool over = false;
    std::vector<NormalizerElement> cur(g, ops.identity());
    auto holds = [&](const Word& rel) {
        if (++steps > max_steps) over = true;
        const NormalizerElement v = evaluate(ops, rel, cur);
        return v.x == ops.ctx().weyl.identity() && adjoint_normal(ops, v.h, active) == ops.one();
    };
    auto highest = [](const Word& rel) {
        int hi = 0;
        for (int l : rel) hi = std::max(hi, std::abs(l));
        return static_cast<std::size_t>(hi - 1);
    };
    std::vector<std::vector<NormalizerElement>> dom(g);
    for (std::size_t j = 0; j < g && !over; ++j)
        for (const TorusElement& t : torus) {
            cur[j] = {ops.mul(base[j].h, t), base[j].x};
            bool ok = true;
            for (const Word* rel : single[j])
                if (!holds(*rel)) {
                    ok = false;
                    break;
                }
            if (over) break;
            if (ok) dom[j].push_back(cur[j]);
        }
    if (over) return std::nullopt;

    std::function<bool(std::size_t, const std::vector<std::vector<NormalizerElement>>&)> dfs =
        [&](std::size_t j, const std::vector<std::vector<NormalizerElement>>& d) -> bool {
        if (j == g) return true;
        for (const NormalizerElement& c : d[j]) {
            cur[j] = c;
            std::vector<std::vector<NormalizerElement>> next = d;
            bool alive = true;
            for (const Word* rel : ready[j]) {
                const std::size_t k = highest(*rel);
                std::vector<NormalizerElement> kept;
                for (const NormalizerElement& e : next[k]) {
                    cur[k] = e;
                    if (holds(*rel)) kept.push_back(e);
                    if (over) return false;
                }
                next[k] = std::move(kept);
                if (next[k].empty()) {
                    alive = false;
                    break;
                }
            }
            if (alive && dfs(j + 1, next)) return true;
            if (over) return false;
        }
        return false;
    };
    const bool found = dfs(0, dom);
    if (over) return std::nullopt;
    return found;
}

const Presentation& centralizer_presentation(int cls) {
    static std::mutex mu;
    static std::map<int, Presentation> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cls);
    if (it != cache.end()) return it->second;
    const Context& ctx = context();
    const WeylGroup& W = ctx.weyl;
    Presentation p;
    if (cls == 1) {
        p = W.coxeter_presentation();
    } else {
        const Elt w = class_representative(W, cls);
        p = W.presentation(W.greedy_generators(W.centralizer(w)));
    }
    return cache.emplace(cls, std::move(p)).first->second;
}

std::optional<Subsystem> obstruction_subsystem(int cls) {
    Subsystem s;
    const Word a2{1, 1}, b2{2, 2}, c2{3, 3};
    switch (cls) {
        case 1:
        case 2:
        case 3:
            s.generator_words = {"w1", "w2", "w5", "w29"};
            s.relators = {a2, commutator_word(1, 2), commutator_word(1, 3), commutator_word(1, 4)};
            s.relator_text = {"N1^2", "[N1,N2]", "[N1,N3]", "[N1,N4]"};
            break;
        case 5:
            s.generator_words = {"w2w3w5", "w24", "w20w21", "w16w25"};
            s.relators = {b2, commutator_word(2, 1), commutator_word(2, 3), commutator_word(2, 4)};
            s.relator_text = {"N2^2", "[N2,N1]", "[N2,N3]", "[N2,N4]"};
            break;
        case 7:
            s.generator_words = {"w6", "w19w26"};
            s.relators = {a2, b2, power_word({1, 2}, 4)};
            s.relator_text = {"N2^2", "N3^2", "(N2N3)^4"};
            break;
        case 8:
            s.generator_words = {"w1", "w4", "w6", "w36"};
            s.relators = {c2, commutator_word(3, 1), commutator_word(3, 2), commutator_word(3, 4)};
            s.relator_text = {"N3^2", "[N3,N1]", "[N3,N2]", "[N3,N4]"};
            break;
        case 11:
            s.generator_words = {"w1w4w6w3", "w6", "w36"};
            s.relators = {b2, commutator_word(3, 2), commutator_word(2, 1)};
            s.relator_text = {"N2^2", "[N3,N2]", "[N2,N1]"};
            break;
        case 14:
            s.generator_words = {"w3w2w4w14", "w6w15w20"};
            s.relators = {power_word({2}, 4), commutator_word(1, 2)};
            s.relator_text = {"N2^4", "[N1,N2]"};
            break;
        case 16:
            s.generator_words = {"w1w4w6w3", "w36", "w6"};
            s.relators = {c2, commutator_word(3, 1), commutator_word(3, 2)};
            s.relator_text = {"N3^2", "[N3,N1]", "[N3,N2]"};
            break;
        default:
            return std::nullopt;
    }
    const WeylGroup& W = context().weyl;
    for (const std::string& w : s.generator_words) s.generators.push_back(parse_weyl_word(W, w));
    return s;
}

ObstructionResult obstruction_check(int cls, i64 q, Mode mode) {
    ObstructionResult r;
    r.cls = cls;
    r.q = q;
    r.mode = mode;
    auto sub = obstruction_subsystem(cls);
    if (!sub) return r;
    r.has_subsystem = true;
    r.relator_text = sub->relator_text;
    r.generator_words = sub->generator_words;
    const Context& ctx = context();
    SectionProblem p{make_twist(cls, q), sub->generators, sub->relators, mode};
    TorusOps ops(TorusModel(q, decision_modulus(ctx.weyl, p.twist.w, q, mode == Mode::Adjoint)), ctx);
    const SectionResult s = solve_section(ops, p);
    r.solvable = s.solvable;
    if (!s.solvable) {
        r.certificate = s.certificate;
        r.certificate_verified = check_certificate(s.system.system, s.certificate);
    }
    return r;
}

Decision decide_complement(int cls, i64 q, Mode mode, std::size_t closure_limit) {
    const Context& ctx = context();
    Decision d;
    d.cls = cls;
    d.q = q;
    d.mode = mode;
    d.expected = expected_split(cls, q);
    const Presentation& pres = centralizer_presentation(cls);
    SectionProblem p{make_twist(cls, q), pres.generators, pres.relators, mode};
    d.generators = p.generators.size();
    d.relators = p.relators.size();
    const TorusModel model(q, decision_modulus(ctx.weyl, p.twist.w, q, mode == Mode::Adjoint));
    d.modulus = model.modulus();
    d.ambient_k = model.ambient_k();
    TorusOps ops(model, ctx);

    const SectionResult s = solve_section(ops, p);
    d.splits = s.solvable;
    if (s.solvable) {
        d.witness = s.witness;
        bool members = true;
        for (const NormalizerElement& g : s.witness) members = members && ops.in_normalizer(g, p.twist);
        d.witness_verified = members && relators_hold(ops, p, s.witness);
        const i64 t_order = torus_order(cls, q);
        const std::size_t c_order = pres.order;
        if (static_cast<double>(t_order) * static_cast<double>(c_order) <= static_cast<double>(closure_limit))
            d.closure = check_closure(ops, p.twist, s.witness, mode, 2 * c_order + 1);
    } else {
        d.certificate = s.certificate;
        d.certificate_verified = check_certificate(s.system.system, s.certificate);
        if (obstruction_subsystem(cls)) d.obstruction_unsolvable = !obstruction_check(cls, q, mode).solvable;
    }
    if (!model.odd()) {
        std::vector<NormalizerElement> lifts;
        bool members = true;
        for (Elt x : p.generators) {
            lifts.push_back(ops.from_tits(ctx.tits.canonical_lift(x)));
            members = members && ops.in_normalizer(lifts.back(), p.twist);
        }
        d.canonical_lifts_split = members && relators_hold(ops, p, lifts);
    }
    return d;
}

}  // namespace e6
