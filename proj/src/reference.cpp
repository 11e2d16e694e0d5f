#include "e6/reference.hpp"

#include <algorithm>

#include "e6/classes.hpp"
#include "e6/constructions.hpp"
#include "e6/context.hpp"
#include "e6/words.hpp"

namespace e6 {

const std::vector<std::array<int, 3>>& reference_extraspecial() {
    static const std::vector<std::array<int, 3>> v{
        {1, 3, 1},  {1, 9, 1},  {1, 13, 1}, {1, 15, 1}, {1, 19, 1}, {1, 21, 1}, {1, 24, 1}, {1, 25, 1},
        {1, 28, 1}, {1, 31, 1}, {2, 4, 1},  {2, 9, 1},  {2, 10, 1}, {2, 15, 1}, {2, 16, 1}, {2, 21, 1},
        {2, 35, 1}, {3, 4, 1},  {3, 10, 1}, {3, 16, 1}, {3, 26, 1}, {3, 30, 1}, {3, 33, 1}, {4, 5, 1},
        {4, 11, 1}, {4, 19, 1}, {4, 25, 1}, {4, 34, 1}, {5, 6, 1},  {5, 28, 1}};
    return v;
}

namespace {

std::vector<TitsIdentity> build_identities() {
    std::vector<TitsIdentity> v;
    auto add = [&](int cls, std::vector<std::pair<std::string, std::string>> names, std::vector<std::string> rels) {
        for (std::string& r : rels) v.push_back({cls, names, std::move(r)});
    };
    for (int r = 1; r <= 36; ++r) {
        const std::string k = std::to_string(r);
        add(0, {}, {"n" + k + "^2 = h" + k});
    }
    add(2, {}, {"[n1,n2]", "[n1,n5]", "[n1,n29]"});
    add(4, {}, {"[n,n1n4n14n29]", "[n,n5]", "[n,n6]", "[n,n2]", "[n,n36]"});
    add(4, {{"N2", "h36n2"}, {"N3", "h2n36"}, {"N4", "n1n4n14n29"}, {"N5", "h5h6n5"}, {"N6", "h5n6"}},
        {"N2^2", "N3^2", "N5^2", "N6^2", "(N2N3)^3", "(N5N6)^3", "N4^2", "N5^N4 = N2", "N6^N4 = N3"});
    add(5, {}, {"[n24,n]", "[n17n18,n]", "[h4h6n20n21,n]", "[n16n25,n]", "[n24,h4h6n20n21]", "[n24,n16n25]"});
    add(6, {}, {"[n,n2]", "[n,n36]", "n^6 = h5", "(h36n2)^2", "(h2n36)^2", "(h36n2h2n36)^3"});
    add(7, {}, {"(n19n26)^2 = h1h4", "(n6n19n26)^4 = h1h4"});
    add(8, {}, {"[n,n1]", "[n,n4]", "[n,n6]", "[n,n36]", "[n6,n1]", "[n6,n4]", "[n6,n36]", "n^4"});
    add(9, {{"N4", "h1h4n1n4n14n29"}},
        {"[n,n1n3]", "[n,n2]", "[n,n5]", "[n,N4]", "(n1n3)^3", "[n1n3,N4]", "N4^2", "n2N4 = N4n5"});
    add(10, {{"N2", "h36n2"}, {"N3", "h2n36"}, {"N4", "h1h6n2n26n28n34"}, {"N5", "h1h3h6n2n24n32n33"}},
        {"[n,N2]", "[n,N3]", "[n,N4]", "[n,N5]", "n^3", "N2^2", "N3^2", "N4^2", "N5^2", "(N2N3)^3", "(N4N5)^3"});
    add(11, {}, {"[n,n6]", "[n,n36]"});
    add(12, {{"N2", "h2h5n6"}}, {"[n,N2]", "n^5", "N2^2"});
    add(13, {{"N2", "h3h5n17n18"}, {"N3", "h4h6n20n21"}}, {"[n,N2]", "[n,N3]"});
    add(14, {{"D", "h6n6n15n20"}, {"Y", "h4n4n11n28"}, {"C", "h1h6n1n2n4n6n31n32"}},
        {"[n,D]", "[n,Y]", "[n,C]", "D^4 = h2h3", "Y^4 = h2h3", "[D,Y] = h2h3", "C^3", "D^3Y^2C = C^2Y", "n^4"});
    add(15, {{"u", "n24n32n33"}, {"v", "n26n28n34"}}, {"[h1h3h6u,n]", "[h1h6v,n]", "n^6 = h2"});
    add(16, {}, {"[n,n1n4n6n3]", "[n,n36]", "[n,n6]"});
    add(17, {}, {"n^10 = h1h4h6"});
    add(18, {}, {"n^6 = h1h4h6"});
    add(19, {}, {"n^8"});
    add(20, {}, {"n^12 = h2h3"});
    add(21, {{"N1", "h1h2h5n1n2n5n23n26n31"}, {"N2", "h1h5n1n2n6n8n10n29"}}, {"[n,N1]", "[n,N2]"});
    add(22, {}, {"[n,n36]", "[n,n24] = h2h3h5", "(n24n36)^3"});
    add(23, {}, {"n^12"});
    add(24, {}, {"n^9"});
    add(25, {{"N2", "h1h2h5n3n6n19n26"}, {"N3", "h2h3h4h5n3n6n14n30"}, {"N4", "h1h2h4h6n1n4n6n13n20n34"}},
        {"[n,N2]", "[n,N3]", "[n,N4]"});
    return v;
}

}  // namespace

const std::vector<TitsIdentity>& reference_tits_identities() {
    static const std::vector<TitsIdentity> v = build_identities();
    return v;
}

TitsIdentityResult check_tits_identity(const TitsIdentity& id) {
    const Context& ctx = context();
    const TitsGroup& T = ctx.tits;
    std::vector<std::string> names;
    std::vector<TitsElement> elems;
    for (const auto& [name, word] : id.names) {
        names.push_back(name);
        elems.push_back(parse_tits_word(T, word));
    }
    if (id.cls > 0 && std::find(names.begin(), names.end(), "n") == names.end()) {
        names.push_back("n");
        elems.push_back(tits_word_of(T, class_info(id.cls).representative));
    }
    for (char letter : {'n', 'h'})
        for (int r = 1; r <= 36; ++r) {
            const std::string token = std::string(1, letter) + std::to_string(r);
            names.push_back(token);
            elems.push_back(parse_tits_word(T, token));
        }
    TitsElement v = T.identity();
    for (int l : parse_relation(id.relation, names)) {
        const TitsElement& g = elems[static_cast<std::size_t>(std::abs(l) - 1)];
        v = T.mul(v, l > 0 ? g : T.inverse(g));
    }
    TitsIdentityResult r;
    r.holds = v == T.identity();
    r.value = v.weyl == ctx.weyl.identity() ? hbits_to_string(T.h_part(v)) : "not in H";
    return r;
}

}  // namespace e6
