#include "e6/torusnorm.hpp"

#include <sstream>
#include <stdexcept>

#include "e6/classes.hpp"
#include "e6/words.hpp"

namespace e6 {

namespace {

Vec6 matvec_mod(const Mat6& a, const Vec6& v, i64 m) {
    Vec6 r{};
    for (int i = 0; i < 6; ++i) {
        __int128 s = 0;
        for (int j = 0; j < 6; ++j) s += static_cast<__int128>(a[i][j]) * v[j];
        r[i] = static_cast<i64>(s % m);
        if (r[i] < 0) r[i] += m;
    }
    return r;
}

}  // namespace

TorusModel::TorusModel(i64 q, i64 modulus) : q_(q), m_(modulus) {
    int e = 0;
    if (!prime_power(q, p_, e)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    if (modulus < 1) throw std::invalid_argument("torus modulus must be positive");
    if (modulus % p_ == 0) throw std::invalid_argument("torus modulus must be prime to p");
    if (p_ != 2 && modulus % 2) throw std::invalid_argument("odd q needs an even torus modulus");
}

TorusModel TorusModel::from_field(const FieldCtx& f) {
    TorusModel m(f.q(), f.group_order());
    m.field_ = &f;
    return m;
}

i64 TorusModel::ambient_k() const { return m_ == 1 ? 1 : mult_order(mod(q_, m_), m_); }

i64 TorusModel::root_of_order(i64 n) const {
    if (n < 1 || m_ % n) throw std::domain_error("no root of unity of order " + std::to_string(n) + " in mu_" + std::to_string(m_));
    return (m_ / n) % m_;
}

TwistData make_twist(int cls, i64 q) {
    const Context& c = context();
    TwistData t;
    t.cls = cls;
    t.w = class_representative(c.weyl, cls);
    t.n = tits_word_of(c.tits, class_info(cls).representative);
    t.q = q;
    return t;
}

TorusOps::TorusOps(const TorusModel& model, const Context& ctx) : model_(model), ctx_(ctx) {}

TorusElement TorusOps::reduce(const Vec6& v) const {
    TorusElement h;
    for (int i = 0; i < 6; ++i) h.e[i] = mod(v[i], model_.modulus());
    return h;
}

TorusElement TorusOps::mul(const TorusElement& a, const TorusElement& b) const {
    const i64 m = model_.modulus();
    TorusElement h;
    for (int i = 0; i < 6; ++i) h.e[i] = mod(a.e[i] + b.e[i], m);
    return h;
}

TorusElement TorusOps::inv(const TorusElement& a) const {
    const i64 m = model_.modulus();
    TorusElement h;
    for (int i = 0; i < 6; ++i) h.e[i] = mod(-a.e[i], m);
    return h;
}

TorusElement TorusOps::pow(const TorusElement& a, i64 k) const {
    const i64 m = model_.modulus();
    TorusElement h;
    for (int i = 0; i < 6; ++i) h.e[i] = mulmod(a.e[i], mod(k, m), m);
    return h;
}

TorusElement TorusOps::act(Elt w, const TorusElement& h) const { return act_matrix(ctx_.weyl.matrix(w), h); }

TorusElement TorusOps::act_matrix(const Mat6& a, const TorusElement& h) const {
    return {matvec_mod(a, h.e, model_.modulus())};
}

TorusElement TorusOps::sigma(const TorusElement& h) const { return pow(h, model_.q()); }

TorusElement TorusOps::from_hbits(HBits bits) const {
    TorusElement h;
    for (int i = 0; i < 6; ++i)
        if (bits >> i & 1) h.e[i] = model_.minus_one();
    return h;
}

TorusElement TorusOps::from_field(const std::array<FieldElement, 6>& lambdas) const {
    const FieldCtx* f = model_.field();
    if (!f) throw std::logic_error("torus model has no field");
    TorusElement h;
    for (int i = 0; i < 6; ++i) h.e[i] = f->dlog(lambdas[i]);
    return h;
}

std::array<FieldElement, 6> TorusOps::to_field(const TorusElement& h) const {
    const FieldCtx* f = model_.field();
    if (!f) throw std::logic_error("torus model has no field");
    std::array<FieldElement, 6> r;
    for (int i = 0; i < 6; ++i) r[i] = f->gen_pow(h.e[i]);
    return r;
}

NormalizerElement TorusOps::from_tits(const TitsElement& t) const {
    return {from_hbits(ctx_.tits.h_part(t)), t.weyl};
}

NormalizerElement TorusOps::make(const TorusElement& h, const TitsElement& t) const {
    NormalizerElement g = from_tits(t);
    g.h = mul(h, g.h);
    return g;
}

NormalizerElement TorusOps::multiply(const NormalizerElement& a, const NormalizerElement& b) const {
    NormalizerElement r;
    r.h = mul(mul(a.h, act(a.x, b.h)), from_hbits(ctx_.tits.cocycle(a.x, b.x)));
    r.x = ctx_.weyl.mul(a.x, b.x);
    return r;
}

NormalizerElement TorusOps::inverse(const NormalizerElement& a) const {
    // (H L(x))^{-1} = L(x^{-1}) c^{-1} H^{-1} with c = L(x) L(x^{-1})
    const Elt xi = ctx_.weyl.inverse(a.x);
    TorusElement t = inv(mul(a.h, from_hbits(ctx_.tits.cocycle(a.x, xi))));
    return {act(xi, t), xi};
}

NormalizerElement TorusOps::power(const NormalizerElement& a, i64 m) const {
    NormalizerElement base = m < 0 ? inverse(a) : a, r = identity();
    std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
    while (e) {
        if (e & 1) r = multiply(r, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return r;
}

NormalizerElement TorusOps::power_by_sum(const TorusElement& h, const TitsElement& u, i64 m) const {
    if (m < 0) throw std::invalid_argument("power_by_sum needs m >= 0");
    const Mat6 a = ctx_.weyl.matrix(u.weyl);
    Mat6 sum{}, ak = identity6();
    for (i64 k = 0; k < m; ++k) {
        sum = add(sum, ak);
        ak = e6::mul(ak, a);
    }
    return make(act_matrix(sum, h), ctx_.tits.power(u, m));
}

NormalizerElement TorusOps::commutator(const NormalizerElement& a, const NormalizerElement& b) const {
    return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

NormalizerElement TorusOps::conjugate(const NormalizerElement& g, const NormalizerElement& x) const {
    return multiply(multiply(x, g), inverse(x));
}

NormalizerElement TorusOps::sigma(const NormalizerElement& g) const { return {sigma(g.h), g.x}; }

bool TorusOps::in_torus(const TorusElement& h, const TwistData& t) const { return sigma(act(t.w, h)) == h; }

bool TorusOps::in_normalizer(const NormalizerElement& g, const TwistData& t) const {
    return sigma(conjugate(g, from_tits(t.n))) == g;
}

bool TorusOps::normalizer_membership(const TorusElement& h, const TitsElement& u, const TwistData& t) const {
    const WeylGroup& w = ctx_.weyl;
    if (w.mul(t.w, u.weyl) != w.mul(u.weyl, t.w)) throw std::invalid_argument("Weyl image of u is not in C_W(w)");
    const HBits c = ctx_.tits.h_part(ctx_.tits.commutator(t.n, u));
    return mul(sigma(act(t.w, h)), from_hbits(c)) == h;
}

std::optional<TorusElement> TorusOps::coset_particular_solution(Elt x, const TwistData& t) const {
    const WeylGroup& w = ctx_.weyl;
    if (w.mul(t.w, x) != w.mul(x, t.w)) throw std::invalid_argument("x is not in C_W(w)");
    const i64 m = model_.modulus();
    // sigma(n L(x) n^{-1}) = F L(x); need (q A_w - I) H = -F
    const NormalizerElement nn = from_tits(t.n);
    const TorusElement f = sigma(conjugate({TorusElement{}, x}, nn)).h;
    const SmithForm s = smith_form(from_mat6(twisted_matrix(w, t.w, model_.q())));
    Vec6 c{}, y{};
    for (int i = 0; i < 6; ++i) {
        __int128 acc = 0;
        for (int j = 0; j < 6; ++j) acc += static_cast<__int128>(s.u[i][j]) * mod(-f.e[j], m);
        c[i] = static_cast<i64>(acc % m);
        if (c[i] < 0) c[i] += m;
    }
    for (int i = 0; i < 6; ++i) {
        const i64 d = mod(s.d[i], m), g = gcd(d, m);
        if (c[i] % g) return std::nullopt;
        const i64 mg = m / g;
        y[i] = mg == 1 ? 0 : mulmod(c[i] / g, inv_mod((d / g) % mg, mg), mg);
    }
    Mat6 v{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) v[i][j] = s.v[i][j];
    return TorusElement{matvec_mod(v, y, m)};
}

TorusElement TorusOps::center_element() const {
    if (model_.p() == 3) return one();
    const i64 third = model_.root_of_order(3);
    TorusElement z;
    z.e = {third, 0, 2 * third, 0, third, 2 * third};
    return z;
}

bool TorusOps::is_central(const TorusElement& h) const {
    for (int i = 1; i <= 6; ++i)
        if (act(ctx_.weyl.gen(i), h) != h) return false;
    return true;
}

bool TorusOps::adjoint_equal(const TorusElement& a, const TorusElement& b) const {
    const TorusElement d = mul(a, inv(b));
    if (d == one()) return true;
    if (model_.p() == 3 || model_.modulus() % 3) return false;
    const TorusElement z = center_element();
    return d == z || d == mul(z, z);
}

Mat6 twisted_matrix(const WeylGroup& w, Elt x, i64 q) { return sub(scale(w.matrix(x), q), identity6()); }

i64 torus_order(int cls, i64 q) {
    const Context& c = context();
    i64 d = det(twisted_matrix(c.weyl, class_representative(c.weyl, cls), q));
    return d < 0 ? -d : d;
}

TorusStructure torus_structure_in(const TorusModel& model, Elt w) {
    const Context& c = context();
    const i64 m = model.modulus();
    const SmithForm s = smith_form(from_mat6(twisted_matrix(c.weyl, w, model.q())));
    TorusStructure out;
    out.order = 1;
    out.ambient_k = model.ambient_k();
    out.modulus = m;
    for (int i = 0; i < 6; ++i) {
        const i64 d = s.d[i];
        if (d == 0 || m % d) throw std::domain_error("mu_" + std::to_string(m) + " does not contain the torus");
        out.order = checked_mul(out.order, d);
        if (d == 1) continue;
        out.invariant_factors.push_back(d);
        TorusElement g;
        for (int r = 0; r < 6; ++r) g.e[r] = mulmod(m / d, mod(s.v[r][i], m), m);
        out.generators.push_back(g);
    }
    return out;
}

TorusStructure torus_structure(int cls, i64 q) {
    const Context& c = context();
    const Elt w = class_representative(c.weyl, cls);
    const auto inv = invariant_factors(twisted_matrix(c.weyl, w, q));
    const i64 dmax = inv.empty() ? 1 : inv.back();
    i64 k = dmax == 1 ? 1 : mult_order(mod(q, dmax), dmax);
    i64 m = 1;
    for (i64 i = 0; i < k; ++i) m = checked_mul(m, q);
    return torus_structure_in(TorusModel(q, m - 1 == 0 ? 1 : m - 1), w);
}

std::vector<TorusElement> enumerate_torus(const TorusModel& model, const TorusStructure& s, std::size_t limit) {
    if (s.modulus != model.modulus()) throw std::invalid_argument("structure and model disagree on the modulus");
    if (static_cast<std::uint64_t>(s.order) > limit) throw std::length_error("torus too large to enumerate");
    TorusOps ops(model);
    std::vector<TorusElement> out{ops.one()};
    for (std::size_t g = 0; g < s.generators.size(); ++g) {
        const std::size_t n = out.size();
        TorusElement step = ops.one();
        for (i64 k = 1; k < s.invariant_factors[g]; ++k) {
            step = ops.mul(step, s.generators[g]);
            for (std::size_t i = 0; i < n; ++i) out.push_back(ops.mul(out[i], step));
        }
    }
    return out;
}

i64 decision_modulus(const WeylGroup& weyl, Elt w, i64 q, bool with_center) {
    const auto inv = invariant_factors(twisted_matrix(weyl, w, q));
    i64 m = inv.empty() ? 1 : inv.back();
    int p = 0, e = 0;
    if (!prime_power(q, p, e)) throw std::invalid_argument("q is not a prime power");
    if (p != 2) m = checked_mul(m, 2);
    if (with_center && p != 3) m = checked_mul(m, 3);
    return m;
}

std::string to_string(const TorusElement& h) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 6; ++i) os << (i ? "," : "") << h.e[i];
    os << ")";
    return os.str();
}

}  // namespace e6
