#include "e6/context.hpp"

namespace e6 {

Context::Context() : rs(build_e6()), weyl(rs), tits(rs, weyl) {}

const Context& context() {
    static const Context ctx;
    return ctx;
}

}  // namespace e6
