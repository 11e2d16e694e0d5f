#include "e6/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>

#include "e6/classes.hpp"
#include "e6/words.hpp"

namespace e6 {

namespace {

Word inverse_word(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& l : r) l = -l;
    return r;
}

void append(Word& a, const Word& b) { a.insert(a.end(), b.begin(), b.end()); }

class RelationParser {
public:
    RelationParser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

    Word relation() {
        Word l = expr();
        skip();
        if (peek() == '=') {
            ++pos_;
            append(l, inverse_word(expr()));
        }
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return l;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("relation \"" + s_ + "\": " + what + " at position " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    Word expr() {
        Word r;
        for (;;) {
            skip();
            const char c = peek();
            if (c == '\0' || c == ')' || c == ']' || c == ',' || c == '=') break;
            append(r, term());
        }
        return r;
    }

    Word term() {
        Word a = atom();
        for (;;) {
            skip();
            if (peek() != '^') break;
            ++pos_;
            skip();
            if (peek() == '-' || std::isdigit(static_cast<unsigned char>(peek()))) {
                const bool neg = peek() == '-';
                if (neg) ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                int k = 0;
                while (std::isdigit(static_cast<unsigned char>(peek()))) k = 10 * k + (s_[pos_++] - '0');
                const Word base = neg ? inverse_word(a) : a;
                a.clear();
                for (int i = 0; i < k; ++i) append(a, base);
            } else {
                const Word y = atom();
                Word r = inverse_word(y);
                append(r, a);
                append(r, y);
                a = std::move(r);
            }
        }
        return a;
    }

    Word atom() {
        skip();
        if (peek() == '(') {
            ++pos_;
            Word e = expr();
            expect(')');
            return e;
        }
        if (peek() == '[') {
            ++pos_;
            Word x = expr();
            expect(',');
            Word y = expr();
            expect(']');
            Word r = x;
            append(r, y);
            append(r, inverse_word(x));
            append(r, inverse_word(y));
            return r;
        }
        std::size_t best = 0;
        int index = 0;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            const std::string& n = names_[i];
            if (n.size() > best && s_.compare(pos_, n.size(), n) == 0) {
                best = n.size();
                index = static_cast<int>(i) + 1;
            }
        }
        if (!index && peek() == '1') {
            ++pos_;
            return {};
        }
        if (!index) fail("unknown element");
        pos_ += best;
        return {index};
    }
};

using Consts = std::vector<FieldElement>;

struct Builder {
    const Context& ctx = context();
    i64 q;
    TwistData t;
    std::unique_ptr<FieldCtx> field;
    std::optional<TorusOps> ops;
    Consts c;
    ConstructionReport& rep;
    std::vector<std::string> names;
    std::vector<NormalizerElement> elems;
    std::vector<std::size_t> gens;
    std::string lift_name = "L";
    std::uint64_t max_size;

    Builder(int cls, i64 q_, ConstructionReport& r, std::uint64_t cap)
        : q(q_), t(make_twist(cls, q_)), rep(r), max_size(cap) {}

    // least k such that every root requirement is realizable in F_{q^k}
    void open(const std::vector<RootSpec>& specs) {
        int p = 0, e = 0;
        if (!prime_power(q, p, e)) throw std::invalid_argument("q must be a prime power");
        for (int k = 1;; ++k) {
            std::unique_ptr<FieldCtx> f;
            try {
                f = std::make_unique<FieldCtx>(p, e, k, max_size);
            } catch (const std::exception&) {
                throw std::domain_error("required roots of unity exceed the field size cap");
            }
            try {
                Consts cs;
                for (const RootSpec& s : specs) cs.push_back(f->root_with_property(s));
                c = std::move(cs);
            } catch (const std::domain_error&) {
                continue;
            }
            field = std::move(f);
            break;
        }
        ops.emplace(TorusModel::from_field(*field), ctx);
        rep.field_k = field->k();
        rep.modulus = field->group_order();
    }

    FieldElement one() const { return field->one(); }
    FieldElement m1() const { return field->minus_one(); }
    FieldElement pw(const FieldElement& a, i64 e) const { return field->pow(a, e); }
    FieldElement neg(const FieldElement& a) const { return field->neg(a); }
    TorusElement tor(const std::array<FieldElement, 6>& l) const { return ops->from_field(l); }
    TorusElement hw(const std::string& word) const {
        const TitsElement u = parse_tits_word(ctx.tits, word);
        if (u.weyl != ctx.weyl.identity()) throw std::invalid_argument("not a torus word: " + word);
        return ops->from_tits(u).h;
    }

    void check(const std::string& name, bool ok) { rep.checks.push_back({name, ok}); }

    std::size_t add(const std::string& name, const TorusElement& h, const TitsElement& u, const std::string& text,
                    bool generator) {
        const NormalizerElement g = ops->make(h, u);
        bool member = ops->in_normalizer(g, t);
        if (ctx.weyl.mul(u.weyl, t.w) == ctx.weyl.mul(t.w, u.weyl))
            member = member && ops->normalizer_membership(h, u, t);
        else
            member = false;
        check(name + " in N", member);
        std::string shown = name + " = ";
        if (h != ops->one()) shown += to_string(h) + " ";
        rep.elements.push_back(shown + text);
        names.push_back(name);
        elems.push_back(g);
        if (generator) gens.push_back(elems.size() - 1);
        return elems.size() - 1;
    }
    std::size_t gen(const std::string& name, const TorusElement& h, const std::string& word) {
        return add(name, h, parse_tits_word(ctx.tits, word), word, true);
    }
    std::size_t gen(const std::string& name, const std::string& word) { return gen(name, ops->one(), word); }
    std::size_t extra(const std::string& name, const std::string& word) {
        return add(name, ops->one(), parse_tits_word(ctx.tits, word), word, false);
    }
    std::string n_text() const {
        std::string s = class_info(t.cls).representative;
        std::replace(s.begin(), s.end(), 'w', 'n');
        return s;
    }

    void torus_member(const std::string& name, const TorusElement& h) { check(name + " in T", ops->in_torus(h, t)); }

    void rel(const std::string& text) {
        const Word w = parse_relation(text, names);
        const NormalizerElement v = evaluate(*ops, w, elems);
        check(text.find('=') == std::string::npos ? text + " = 1" : text, v == ops->identity());
    }

    std::vector<NormalizerElement> generator_lifts() const {
        std::vector<NormalizerElement> r;
        for (std::size_t i : gens) r.push_back(elems[i]);
        return r;
    }
};

struct Recipe {
    std::vector<RootSpec> specs;
    std::function<void(Builder&)> body;
};

i64 ipow(i64 q, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, q);
    return r;
}

// lifts given by an explicit H_1 n
std::optional<Recipe> lift_recipe(int cls, i64 q) {
    const i64 q2 = q * q, q3 = ipow(q, 3), q4 = ipow(q, 4), q5 = ipow(q, 5), q6 = ipow(q, 6);
    using B = Builder;
    switch (cls) {
        case 2:
            return Recipe{{{0, q + 1}}, [](B& b) {
                              const auto z = b.c[0];
                              b.gen(b.lift_name, b.tor({z, b.one(), b.m1(), b.one(), b.one(), b.one()}), "n1");
                          }};
        case 3:
            // H = (zeta, zeta, -1, -1, 1, 1) in front of n1n2
            return Recipe{{{0, q + 1}}, [](B& b) {
                              const auto z = b.c[0];
                              b.gen(b.lift_name, b.tor({z, z, b.m1(), b.m1(), b.one(), b.one()}), "n1n2");
                          }};
        case 5:
            return Recipe{{{0, q + 1}}, [](B& b) {
                              const auto z = b.c[0];
                              b.gen(b.lift_name, b.tor({b.one(), z, z, b.m1(), z, b.one()}), "n2n3n5");
                          }};
        case 7:
            return Recipe{{{0, 2 * (q + 1)}}, [q, q2](B& b) {
                              const auto z = b.c[0];
                              b.gen(b.lift_name,
                                    b.tor({b.neg(b.pw(z, -q)), b.m1(), b.pw(z, -q2 - q), z, b.one(), b.one()}),
                                    b.n_text());
                          }};
        case 11:
            return Recipe{{{0, q3 + q2 + q + 1}}, [q, q2](B& b) {
                              const auto z = b.c[0];
                              b.gen(b.lift_name,
                                    b.tor({z, b.m1(), b.pw(z, q + 1), b.neg(b.pw(z, -q2)), b.one(), b.one()}),
                                    b.n_text());
                          }};
        case 16:
            return Recipe{{{0, q3 + q2 + q + 1}}, [q, q2](B& b) {
                              const auto z = b.c[0];
                              b.gen(b.lift_name,
                                    b.tor({z, b.one(), b.pw(z, q + 1), b.neg(b.pw(z, -q2)), b.m1(), b.pw(z, q2 + 1)}),
                                    b.n_text());
                          }};
        case 17:
            return Recipe{{{(q + 1) * (q5 - 1), 0}}, [=](B& b) {
                              const auto z = b.pw(b.c[0], (q - 1) / 2);
                              b.gen(b.lift_name,
                                    b.tor({b.pw(z, q6 + q3 - q), b.pw(z, -q5 + 1), b.pw(z, -q5 + q4 + q3 + 1),
                                           b.pw(z, -q5 + q4 + q3 + q2 + 1), b.pw(z, q4 + q3 + q2 + 1),
                                           b.pw(z, q4 + q3 + q2 + q + 1)}),
                                    b.n_text());
                          }};
        case 18:
            return Recipe{{{0, q + 1}}, [](B& b) {
                              const auto x = b.c[0];
                              b.gen(b.lift_name, b.tor({x, b.m1(), b.m1(), b.pw(x, -1), b.m1(), x}), b.n_text());
                          }};
        case 20:
            return Recipe{{{(q - 1) * (q2 + 1) * (q3 + 1), 0}}, [=](B& b) {
                              const auto z = b.pw(b.c[0], (q - 1) / 2);
                              b.gen(b.lift_name,
                                    b.tor({b.m1(), b.neg(b.pw(z, q)), b.neg(b.pw(z, -q4)), b.neg(b.pw(z, -q4 - q3)),
                                           b.pw(z, -q4 - q3 - q2 - 1), b.pw(z, -q3 - 1)}),
                                    b.n_text());
                          }};
        default:
            return std::nullopt;
    }
}

// complement generators and the relations asserted for them
std::optional<Recipe> complement_recipe(int cls, i64 q) {
    const i64 q2 = q * q, q3 = ipow(q, 3);
    using B = Builder;
    switch (cls) {
        case 4:
            // the printed n1n3 gives [n, n1n3] = h1h3; n itself is used
            return Recipe{{}, [](B& b) {
                              b.gen("N1", b.n_text());
                              b.gen("N2", "h36n2");
                              b.gen("N3", "h2n36");
                              b.gen("N4", "n1n4n14n29");
                              b.gen("N5", "h5h6n5");
                              b.gen("N6", "h5n6");
                              for (const char* h : {"h36", "h2", "h5", "h6"}) b.torus_member(h, b.hw(h));
                              for (const char* r : {"N2^2", "N3^2", "N5^2", "N6^2", "(N2N3)^3", "(N5N6)^3", "N1^3",
                                                    "N4^2", "N1^N2 = N1", "N1^N3 = N1", "N1^N4 = N1", "N1^N5 = N1",
                                                    "N1^N6 = N1", "N5^N4 = N2", "N6^N4 = N3"})
                                  b.rel(r);
                          }};
        case 6:
            return Recipe{{{2 * (q + 1), 0}}, [](B& b) {
                              const auto z = b.c[0];
                              const auto h1 = b.tor({b.one(), b.one(), b.one(), b.one(), b.neg(z), b.m1()});
                              b.torus_member("H1", h1);
                              b.gen("N1", h1, b.n_text());
                              b.gen("N2", "h36n2");
                              b.gen("N3", "h2n36");
                              for (const char* r : {"N2^2", "N3^2", "(N2N3)^3", "N1^6", "[N1,N2]", "[N1,N3]"}) b.rel(r);
                          }};
        case 9:
            return Recipe{{{q2 - 1, 0}}, [q](B& b) {
                              const auto l = b.pw(b.c[0], (q - 1) / 2);
                              const auto h2 = b.tor({b.m1(), l, b.one(), b.m1(), b.one(), b.m1()});
                              const auto h3 = b.tor({b.one(), b.one(), b.one(), b.one(), b.pw(l, -1), b.m1()});
                              b.gen("N1", "n1n3");
                              b.gen("N2", h2, "n2");
                              b.gen("N3", h3, "n5");
                              b.gen("N4", "h1h4n1n4n14n29");
                              for (const char* r : {"N1^3", "[N1,N4]", "[N1,N2]", "[N1,N3]", "N4^2", "N2^2", "N3^2",
                                                    "N2N4 = N4N3"})
                                  b.rel(r);
                          }};
        case 10:
            return Recipe{{}, [](B& b) {
                              b.gen("N1", b.n_text());
                              b.gen("N2", "h36n2");
                              b.gen("N3", "h2n36");
                              b.gen("N4", "h1h6n2n26n28n34");
                              b.gen("N5", "h1h3h6n2n24n32n33");
                              for (const char* r : {"[N1,N2]", "[N1,N3]", "[N1,N4]", "[N1,N5]", "N1^3", "N2^2", "N3^2",
                                                    "N4^2", "N5^2", "(N2N3)^3", "(N4N5)^3", "[N2,N4]", "[N2,N5]",
                                                    "[N3,N4]", "[N3,N5]"})
                                  b.rel(r);
                          }};
        case 12:
            return Recipe{{}, [](B& b) {
                              b.gen("N1", "n1n4n3n2");
                              b.gen("N2", "h2h5n6");
                              for (const char* r : {"[N1,N2]", "N1^5", "N2^2"}) b.rel(r);
                          }};
        case 13:
            return Recipe{{}, [](B& b) {
                              b.gen("N1", "n3n2n5n4");
                              b.gen("N2", "h3h5n17n18");
                              b.gen("N3", "h4h6n20n21");
                              for (const char* r : {"[N1,N2]", "[N1,N3]", "N1^6", "N2^2", "N3^2", "(N2N3)^3"}) b.rel(r);
                          }};
        case 14:
            return Recipe{{{0, 2}}, [](B& b) {
                              const auto a = b.c[0];
                              const auto h1 = b.tor({b.m1(), b.m1(), a, b.one(), a, b.m1()});
                              const auto h2 = b.tor({b.m1(), a, b.one(), b.m1(), b.neg(a), b.one()});
                              b.torus_member("H1", h1);
                              b.torus_member("H2", h2);
                              b.gen("N1", h1, "h6n6n15n20");
                              b.gen("N2", h2, "h4n4n11n28");
                              b.gen("C", "h1h6n1n2n4n6n31n32");
                              for (const char* r : {"N1^4", "N2^4", "C^3", "[N1,N2]", "N1^3N2^2C = C^2N2"}) b.rel(r);
                          }};
        case 15:
            return Recipe{{{2 * (q3 - 1), 0}, {2 * (q + 1), 0}}, [q, q2](B& b) {
                              const auto x = b.c[0], z = b.c[1];
                              const i64 s = q2 + q + 1, t = (q + 1) * (q + 1);
                              const auto h1 = b.tor({b.m1(), z, b.one(), b.m1(), b.neg(b.pw(x, q - 1)),
                                                     b.neg(b.pw(x, q2 - 1))});
                              const auto h2 = b.tor({b.pw(x, q2 + q), b.pw(x, s), b.neg(b.pw(x, 2 * q2 + q + 1)),
                                                     b.neg(b.pw(x, 2 * s)), b.pw(x, t), b.pw(x, q2 + q)});
                              const auto h3 = b.tor({b.pw(x, q + 1), b.pw(x, s), b.pw(x, t), b.neg(b.pw(x, 2 * s)),
                                                     b.pw(x, t), b.pw(x, q2 + q)});
                              b.gen("N1", h1, b.n_text());
                              b.gen("N2", h2, "h1h3h6n24n32n33");
                              b.gen("N3", h3, "h1h6n26n28n34");
                              for (const char* r : {"N1^6", "N2^2", "N3^2", "[N1,N2]", "[N1,N3]", "(N2N3)^3"}) b.rel(r);
                          }};
        case 17:
        case 20: {
            auto lift = lift_recipe(cls, q);
            const char* r = cls == 17 ? "N1^10" : "N1^12";
            return Recipe{lift->specs, [body = lift->body, r](B& b) {
                              b.lift_name = "N1";
                              body(b);
                              b.rel(r);
                          }};
        }
        case 18:
            return Recipe{{{0, q + 1}, {0, q - 1}}, [](B& b) {
                              const auto x = b.c[0], z = b.c[1];
                              const auto z2 = b.pw(z, 2);
                              b.gen("N1", b.tor({x, b.m1(), b.m1(), b.pw(x, -1), b.m1(), x}), b.n_text());
                              b.gen("N2", b.tor({z, b.neg(z2), b.neg(z2), b.pw(z, 3), b.neg(z2), z}), "n36");
                              for (const char* r : {"N1^6", "N2^2", "[N1,N2]"}) b.rel(r);
                          }};
        case 19:
        case 23:
        case 24:
            return Recipe{{}, [cls](B& b) {
                              b.gen("N1", b.n_text());
                              b.rel("N1^" + std::to_string(class_info(cls).order));
                          }};
        case 21:
            return Recipe{{}, [](B& b) {
                              b.gen("a", "h1h2h5n1n2n5n23n26n31");
                              b.gen("b", "h1h5n1n2n6n8n10n29");
                              for (const char* r : {"a^12", "b^6", "a^8ba^-8b^-1", "(a^6b^-1)^3", "a^6b^2a^6b^-2",
                                                    "ba^8(a^-1b)^2a^-1"})
                                  b.rel(r);
                          }};
        case 22:
            return Recipe{{{2 * q3 + 2, 0}}, [q, q2](B& b) {
                              const auto x = b.c[0];
                              const auto l = b.neg(b.pw(x, 2));
                              const auto a = b.pw(x, -q2 + q - 1);
                              const auto a2 = b.pw(a, 2), ai2 = b.pw(a, -2);
                              const auto h = b.tor({a2, a, a, b.one(), a, a2});
                              const auto h1 = b.tor({l, b.one(), b.pw(l, q + 1), b.pw(l, -q2 + q + 1), b.pw(l, q + 1), l});
                              const auto h2 = b.tor({b.neg(ai2), b.one(), b.one(), b.neg(a2), b.one(), b.neg(ai2)});
                              b.gen("N1", h1, b.n_text());
                              b.gen("N2", b.ops->mul(h2, h), "n24");
                              b.gen("N3", "h2h3h5n36");
                              for (const char* r : {"N2^2", "N3^2", "(N2N3)^3", "[N1,N3]", "[N1,N2]", "N1^6"}) b.rel(r);
                          }};
        case 25:
            return Recipe{{}, [](B& b) {
                              const TitsElement n = b.t.n;
                              b.add("N1", b.ops->one(), b.ctx.tits.power(n, 2), "(" + b.n_text() + ")^2", true);
                              b.gen("N2", "h1h2h5n3n6n19n26");
                              b.gen("N3", "h2h3h4h5n3n6n14n30");
                              b.gen("N4", "h1h2h4h6n1n4n6n13n20n34");
                          }};
        default:
            return std::nullopt;
    }
}

i64 element_order(const TorusOps& ops, const NormalizerElement& g, i64 cap) {
    NormalizerElement p = g;
    for (i64 k = 1; k <= cap; ++k) {
        if (p == ops.identity()) return k;
        p = ops.multiply(p, g);
    }
    return 0;
}

bool finish(ConstructionReport& r) {
    bool ok = true;
    for (const NamedCheck& c : r.checks) ok = ok && c.ok;
    if (r.closure_in_range)
        ok = ok && r.closure.performed && r.closure.torus_intersection_trivial && r.closure.image_is_centralizer &&
             r.closure.size == static_cast<std::size_t>(r.weyl_order);
    r.ok = ok;
    return ok;
}

// generation of C_W(w), the full presentation on the images and the closure
void check_generated_group(Builder& b, std::size_t closure_limit) {
    const WeylGroup& W = b.ctx.weyl;
    const std::vector<NormalizerElement> lifts = b.generator_lifts();
    std::vector<Elt> images;
    for (const NormalizerElement& g : lifts) images.push_back(g.x);
    const std::vector<Elt> cent = W.centralizer(b.t.w);
    const std::vector<Elt> span = W.closure(images);
    bool inside = true;
    for (Elt x : images) inside = inside && W.mul(x, b.t.w) == W.mul(b.t.w, x);
    b.check("images generate C_W(w)", inside && span.size() == cent.size());
    const Presentation& cached = centralizer_presentation(b.t.cls);
    const Presentation p = cached.generators == images ? cached : W.presentation(images);
    bool holds = true;
    for (const Word& rel : p.relators) holds = holds && evaluate(*b.ops, rel, lifts) == b.ops->identity();
    b.check("presentation of C_W(w) on the images (" + std::to_string(p.relators.size()) + " relators)", holds);
    b.rep.closure_in_range = static_cast<double>(torus_order(b.t.cls, b.q)) * static_cast<double>(cent.size()) <=
                             static_cast<double>(closure_limit);
    if (b.rep.closure_in_range)
        b.rep.closure = check_closure(*b.ops, b.t, lifts, Mode::SimplyConnected, 2 * cent.size() + 1);
}

}  // namespace

Word parse_relation(const std::string& text, const std::vector<std::string>& names) {
    return RelationParser(text, names).relation();
}

ConstructionReport verify_complement(int cls, i64 q, std::size_t closure_limit, std::uint64_t max_field_size) {
    ConstructionReport r;
    r.cls = cls;
    r.q = q;
    r.weyl_order = class_info(cls).centralizer_order;
    if (!expected_split(cls, q)) {
        r.applicable = false;
        r.reason = "no complement exists for this class at this q";
        return r;
    }
    Builder b(cls, q, r, max_field_size);
    if (q % 2 == 0) {
        b.open({});
        const Presentation& p = centralizer_presentation(cls);
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            b.add("K" + std::to_string(i + 1), b.ops->one(), b.ctx.tits.canonical_lift(p.generators[i]),
                  "canonical lift", true);
    } else {
        auto recipe = complement_recipe(cls, q);
        if (!recipe) throw std::logic_error("missing complement data for class " + std::to_string(cls));
        b.open(recipe->specs);
        recipe->body(b);
    }
    check_generated_group(b, closure_limit);
    finish(r);
    return r;
}

ConstructionReport verify_lift(int cls, i64 q, std::uint64_t max_field_size) {
    ConstructionReport r;
    r.cls = cls;
    r.q = q;
    Builder b(cls, q, r, max_field_size);
    r.weyl_order = class_info(cls).order;
    NormalizerElement lift;
    std::optional<Recipe> recipe = q % 2 ? lift_recipe(cls, q) : std::nullopt;
    static const std::vector<int> derived{4, 6, 9, 15, 22};
    const bool from_complement =
        q % 2 && std::find(derived.begin(), derived.end(), cls) != derived.end();
    if (recipe) {
        b.open(recipe->specs);
        recipe->body(b);
        lift = b.elems.back();
    } else if (from_complement) {
        // an element of the complement mapping to w
        auto comp = complement_recipe(cls, q);
        b.open(comp->specs);
        comp->body(b);
        r.checks.clear();
        const std::vector<NormalizerElement> lifts = b.generator_lifts();
        std::vector<NormalizerElement> seen{b.ops->identity()};
        std::vector<Word> words{{}};
        bool found = false;
        for (std::size_t i = 0; i < seen.size() && !found; ++i)
            for (std::size_t j = 0; j < lifts.size() && !found; ++j) {
                const NormalizerElement y = b.ops->multiply(seen[i], lifts[j]);
                if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
                Word wy = words[i];
                wy.push_back(static_cast<int>(j) + 1);
                seen.push_back(y);
                words.push_back(wy);
                if (y.x == b.t.w) {
                    lift = y;
                    found = true;
                    std::string text;
                    for (int l : wy) text += b.names[b.gens[static_cast<std::size_t>(l - 1)]];
                    r.elements.push_back("L = " + text);
                }
                if (seen.size() > static_cast<std::size_t>(2 * class_info(cls).centralizer_order)) break;
            }
        b.check("complement contains an element over w", found);
        if (found) b.check("L in N", b.ops->in_normalizer(lift, b.t));
    } else {
        b.open({});
        if (cls == 1) {
            b.add("L", b.ops->one(), b.ctx.tits.identity(), "1", true);
        } else {
            b.gen(b.lift_name, b.n_text());
        }
        lift = b.elems.back();
    }
    b.check("L maps to w", lift.x == b.t.w);
    r.element_order = element_order(*b.ops, lift, 64);
    b.check("|L| = |w| = " + std::to_string(r.weyl_order), r.element_order == r.weyl_order);
    finish(r);
    return r;
}

}  // namespace e6
