#include "e6/classes.hpp"

#include <mutex>
#include <stdexcept>

#include "e6/words.hpp"

namespace e6 {

i64 eval(const QPoly& f, i64 q) {
    i64 r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = checked_add(checked_mul(r, q), *it);
    return r;
}

namespace {

const QPoly qm1{-1, 1};             // q - 1
const QPoly qp1{1, 1};              // q + 1
const QPoly q2m1{-1, 0, 1};         // q^2 - 1
const QPoly q3m1{-1, 0, 0, 1};      // q^3 - 1
const QPoly q3p1{1, 0, 0, 1};       // q^3 + 1
const QPoly q4m1{-1, 0, 0, 0, 1};   // q^4 - 1
const QPoly q5m1{-1, 0, 0, 0, 0, 1};
const QPoly phi3{1, 1, 1};          // q^2 + q + 1
const QPoly phi4{1, 0, 1};          // q^2 + 1
const QPoly phi6{1, -1, 1};         // q^2 - q + 1
const QPoly phi8{1, 0, 0, 0, 1};    // q^4 + 1
const QPoly phi12{1, 0, -1, 0, 1};  // q^4 - q^2 + 1
const QPoly phi9{1, 0, 0, 1, 0, 0, 1};
const QPoly q4q2{1, 0, 1, 0, 1};    // q^4 + q^2 + 1
const QPoly q5sum{1, 1, 1, 1, 1, 1};

QPoly times(std::initializer_list<QPoly> fs) {
    QPoly r{1};
    for (const QPoly& f : fs) {
        QPoly t(r.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) t[i + j] += r[i] * f[j];
        r = t;
    }
    return r;
}

std::vector<QPoly> copies(const QPoly& f, int k) { return std::vector<QPoly>(static_cast<std::size_t>(k), f); }

std::vector<QPoly> cat(std::initializer_list<std::vector<QPoly>> parts) {
    std::vector<QPoly> r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

std::vector<ClassInfo> build_table() {
    using S = SplitRule;
    std::vector<ClassInfo> t;
    auto add = [&](std::string rep, int ord, int cent, std::string clabel, std::string tlabel,
                   std::vector<QPoly> cyc, S split) {
        ClassInfo c;
        c.index = static_cast<int>(t.size()) + 1;
        c.representative = std::move(rep);
        c.order = ord;
        c.centralizer_order = cent;
        c.centralizer_label = std::move(clabel);
        c.torus_label = std::move(tlabel);
        c.torus_factors = cyc;
        c.cyclic_factors = std::move(cyc);
        c.split = split;
        t.push_back(std::move(c));
    };
    add("1", 1, 51840, "O5(3):Z2", "(q-1)^6", copies(qm1, 6), S::Never);
    add("w1", 2, 1440, "S2 x S6", "(q-1)^4 x (q^2-1)", cat({copies(qm1, 4), {q2m1}}), S::Never);
    add("w1w2", 2, 192, "D8 x S4", "(q-1)^2 x (q^2-1)^2", cat({copies(qm1, 2), copies(q2m1, 2)}), S::Never);
    add("w3w1", 3, 216, "Z3 x ((S3 x S3):Z2)", "(q-1)^3 x (q^3-1)", cat({copies(qm1, 3), {q3m1}}), S::Always);
    add("w2w3w5", 2, 96, "Z2 x Z2 x S4", "(q^2-1)^3", copies(q2m1, 3), S::Never);
    add("w1w3w5", 6, 36, "Z6 x S3", "(q-1) x (q^2-1) x (q^3-1)", {qm1, q2m1, q3m1}, S::Always);
    add("w1w3w4", 4, 32, "Z4 x D8", "(q-1)^2 x (q^4-1)", cat({copies(qm1, 2), {q4m1}}), S::Never);
    add("w1w4w6w36", 2, 1152, "Z2:(((A4 x A4):Z2):Z2)", "(q+1)^2 x (q^2-1)^2",
        cat({copies(qp1, 2), copies(q2m1, 2)}), S::Never);
    add("w1w2w3w5", 6, 24, "Z3 x D8", "(q^2-1) x (q+1)(q^3-1)", {q2m1, times({qp1, q3m1})}, S::Always);
    add("w1w5w3w6", 3, 108, "Z3 x S3 x S3", "(q-1) x (q^2+q+1) x (q^3-1)", {qm1, phi3, q3m1}, S::Always);
    add("w1w4w6w3", 4, 16, "Z4 x Z2 x Z2", "(q^2-1) x (q^4-1)", {q2m1, q4m1}, S::Never);
    add("w1w4w3w2", 5, 10, "Z2 x Z5", "(q-1) x (q^5-1)", {qm1, q5m1}, S::Always);
    add("w3w2w5w4", 6, 36, "Z6 x S3", "(q^2-1) x (q-1)(q^3+1)", {q2m1, times({qm1, q3p1})}, S::Always);
    // the printed "(q-1)(q^2+1)^2" has degree 5; the square covers the whole product
    add("w3w2w4w14", 4, 96, "SL2(3):Z4", "(q-1)(q^2+1)^2", copies(times({qm1, phi4}), 2), S::UnlessQ3Mod4);
    add("w1w5w3w6w2", 6, 36, "Z6 x S3", "(q^2+q+1) x (q+1)(q^3-1)", {phi3, times({qp1, q3m1})}, S::Always);
    add("w1w4w6w3w36", 4, 96, "Z4 x S4", "(q+1)^2 x (q^4-1)", cat({copies(qp1, 2), {q4m1}}), S::Never);
    add("w1w4w5w3w36", 10, 10, "Z10", "(q+1)(q^5-1)", {times({qp1, q5m1})}, S::Always);
    add("w1w4w6w3w5", 6, 12, "Z6 x Z2", "(q^2+q+1) x (q-1)(q^3+1)", {phi3, times({qm1, q3p1})}, S::Always);
    add("w2w5w3w4w6", 8, 8, "Z8", "(q^2-1)(q^4+1)", {times({q2m1, phi8})}, S::Always);
    add("w20w5w4w3w2", 12, 12, "Z12", "(q-1)(q^2+1)(q^3+1)", {times({qm1, phi4, q3p1})}, S::Always);
    add("w1w5w2w3w6w36", 3, 648, "(((Z3 x Z3):Z3):Q8):Z3", "(q^2+q+1)^3", copies(phi3, 3), S::Always);
    add("w1w4w6w3w5w36", 6, 36, "Z6 x S3", "(q+1) x (q^5+q^4+q^3+q^2+q+1)", {qp1, q5sum}, S::Always);
    add("w1w4w6w3w2w5", 12, 12, "Z12", "(q^2+q+1)(q^4-q^2+1)", {times({phi3, phi12})}, S::Always);
    add("w1w4w14w3w2w6", 9, 9, "Z9", "(q^6+q^3+1)", {phi9}, S::Always);
    add("w1w4w14w3w2w31", 6, 72, "Z3 x SL2(3)", "(q^2-q+1) x (q^4+q^2+1)", {phi6, q4q2}, S::Always);
    return t;
}

}  // namespace

const std::vector<ClassInfo>& class_table() {
    static const std::vector<ClassInfo> table = build_table();
    return table;
}

const ClassInfo& class_info(int cls) {
    if (cls < 1 || cls > 25) throw std::out_of_range("class index must be 1..25");
    return class_table()[static_cast<std::size_t>(cls - 1)];
}

bool expected_split(int cls, i64 q) {
    if (q % 2 == 0) return true;
    switch (class_info(cls).split) {
        case SplitRule::Never: return false;
        case SplitRule::Always: return true;
        case SplitRule::UnlessQ3Mod4: return q % 4 != 3;
    }
    return false;
}

i64 expected_torus_order(int cls, i64 q) {
    i64 r = 1;
    for (const QPoly& f : class_info(cls).torus_factors) r = checked_mul(r, eval(f, q));
    return r;
}

std::vector<i64> expected_cyclic_orders(int cls, i64 q) {
    std::vector<i64> r;
    for (const QPoly& f : class_info(cls).cyclic_factors) r.push_back(eval(f, q));
    return r;
}

Elt class_representative(const WeylGroup& w, int cls) { return parse_weyl_word(w, class_info(cls).representative); }

Classification classify(const WeylGroup& w, Elt x) {
    static std::once_flag once;
    static std::vector<int> table_of_id;
    static const WeylGroup* built_for = nullptr;
    std::call_once(once, [&] {
        table_of_id.assign(static_cast<std::size_t>(w.class_count()), 0);
        for (int c = 1; c <= 25; ++c) {
            int id = w.class_id(class_representative(w, c));
            if (table_of_id[static_cast<std::size_t>(id)]) throw std::logic_error("class representatives are conjugate");
            table_of_id[static_cast<std::size_t>(id)] = c;
        }
        built_for = &w;
    });
    if (built_for != &w) throw std::logic_error("classify is bound to the shared Weyl group");
    Classification r;
    r.cls = table_of_id[static_cast<std::size_t>(w.class_id(x))];
    r.conjugator = w.conjugator(class_representative(w, r.cls), x);
    return r;
}

}  // namespace e6
