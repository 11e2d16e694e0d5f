#pragma once

#include "e6/liealg.hpp"
#include "e6/rootsys.hpp"
#include "e6/weyl.hpp"

namespace e6 {

// Root system, Weyl group and Tits group, built once and shared read-only.
struct Context {
    const RootSystem& rs;
    WeylGroup weyl;
    TitsGroup tits;

    Context();
};

const Context& context();

}  // namespace e6
