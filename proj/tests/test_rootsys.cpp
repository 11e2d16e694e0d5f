#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "e6/liealg.hpp"
#include "e6/reference.hpp"
#include "e6/rootsys.hpp"

using namespace e6;

namespace {

using Vec = std::map<int, i64>;

Vec bracket(const AdjointRep& ad, const Vec& x, const Vec& y) {
    Vec out;
    for (auto [a, ca] : x)
        for (auto [b, cb] : y)
            for (auto [c, v] : ad.bracket(a, b)) out[c] += ca * cb * v;
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

Vec add(Vec a, const Vec& b) {
    for (auto [k, v] : b) a[k] += v;
    for (auto it = a.begin(); it != a.end();) it = it->second ? std::next(it) : a.erase(it);
    return a;
}

}  // namespace

TEST_CASE("72 roots with the E6 height distribution") {
    const RootSystem& rs = build_e6();
    std::map<int, int> by_height;
    std::set<Vec6> seen;
    for (RootId r = 0; r < kRoots; ++r) {
        seen.insert(rs.coords(r));
        if (RootSystem::is_positive(r)) ++by_height[rs.height(r)];
        CHECK(rs.pairing(r, r) == 2);
        CHECK(rs.find(rs.coords(r)) == r);
    }
    CHECK(seen.size() == 72);
    // exponents of E6 are 1 4 5 7 8 11
    const std::map<int, int> want{{1, 6}, {2, 5}, {3, 5}, {4, 5}, {5, 4}, {6, 3}, {7, 3}, {8, 2}, {9, 1}, {10, 1}, {11, 1}};
    CHECK(by_height == want);
    CHECK(rs.coords(35) == Vec6{1, 2, 2, 3, 2, 1});
    for (RootId r = 1; r < kPositive; ++r) CHECK(rs.height(r - 1) <= rs.height(r));
}

TEST_CASE("Bourbaki Cartan matrix") {
    const Mat6& c = build_e6().cartan();
    const std::set<std::pair<int, int>> edges{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const bool edge = edges.count({i, j}) || edges.count({j, i});
            CHECK(c[i][j] == (i == j ? 2 : edge ? -1 : 0));
        }
}

TEST_CASE("extraspecial pairs match the reference list") {
    const RootSystem& rs = build_e6();
    const auto got = rs.extraspecial_pairs();
    const auto& want = reference_extraspecial();
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].r + 1 == want[i][0]);
        CHECK(got[i].s + 1 == want[i][1]);
        CHECK(got[i].sign == want[i][2]);
    }
}

TEST_CASE("structure constant symmetries") {
    const RootSystem& rs = build_e6();
    int nonzero = 0;
    for (RootId r = 0; r < kRoots; ++r)
        for (RootId s = 0; s < kRoots; ++s) {
            const int n = rs.structure_constant(r, s);
            CHECK((n != 0) == (rs.sum(r, s) >= 0 && s != RootSystem::negate(r)));
            if (!n) continue;
            ++nonzero;
            CHECK(std::abs(n) == 1);
            CHECK(rs.structure_constant(s, r) == -n);
            CHECK(rs.structure_constant(RootSystem::negate(r), RootSystem::negate(s)) == -n);
            const RootId t = RootSystem::negate(rs.sum(r, s));
            CHECK(rs.structure_constant(s, t) == n);
            CHECK(rs.structure_constant(t, r) == n);
        }
    // 72 roots, each with 20 roots s such that r + s is a root
    CHECK(nonzero == 72 * 20);
}

TEST_CASE("Chevalley basis satisfies the Jacobi identity") {
    const AdjointRep ad(build_e6());
    int violations = 0;
    for (int a = 0; a < kAdjointDim; ++a)
        for (int b = a + 1; b < kAdjointDim; ++b)
            for (int c = b + 1; c < kAdjointDim; ++c) {
                const Vec x{{a, 1}}, y{{b, 1}}, z{{c, 1}};
                const Vec j = add(add(bracket(ad, x, bracket(ad, y, z)), bracket(ad, y, bracket(ad, z, x))),
                                  bracket(ad, z, bracket(ad, x, y)));
                if (!j.empty()) ++violations;
            }
    CHECK(violations == 0);
}

TEST_CASE("root vectors are eigenvectors of the Cartan subalgebra") {
    const RootSystem& rs = build_e6();
    const AdjointRep ad(rs);
    for (RootId r = 0; r < kRoots; ++r)
        for (int i = 0; i < 6; ++i) {
            Vec6 ei{};
            ei[i] = 1;
            const i64 p = rs.pairing(rs.coords(r), ei);
            const Vec got = bracket(ad, {{AdjointRep::h_index(i), 1}}, {{r, 1}});
            CHECK(got == (p ? Vec{{r, p}} : Vec{}));
        }
}

TEST_CASE("root labels") {
    CHECK(RootSystem::label(13) == "r14");
    CHECK(RootSystem::label(36 + 13) == "-r14");
    CHECK(RootSystem::negate(RootSystem::negate(7)) == 7);
}
