#pragma once

#include <string>
#include <vector>

#include "lts/error.hpp"
#include "lts/lie_triple_system.hpp"
#include "lts/linalg.hpp"
#include "lts/representation.hpp"
#include "lts/rota_baxter.hpp"

namespace lts::fixtures {

/// [e1,e2,e1] = e3; center and derived algebra are both span{e3}.
inline LieTripleSystem lts3() {
    return LieTripleSystem::from_entries(3, {{0, 1, 0, {0, 0, 1}}});
}

/// [e1,e2,e1] = e4; center span{e3,e4}, derived algebra span{e4}.
inline LieTripleSystem lts4() {
    return LieTripleSystem::from_entries(4, {{0, 1, 0, {0, 0, 0, 1}}});
}

inline Action adjoint_action(const LieTripleSystem& L) { return Action(adjoint_representation(L), L); }

/// Projection onto span{e1} along span{e2,e3}, relative to the adjoint action of lts3.
inline RelativeRBO rbo3_P(const Scalar& weight = 1) {
    Matrix P(3, 3);
    P(0, 0) = 1;
    return RelativeRBO(adjoint_action(lts3()), weight, LinearMap(P));
}

/// Projection onto span{e2,e3} along span{e1,e4}, relative to the adjoint action of lts4.
inline RelativeRBO rbo4_P(const Scalar& weight = 1) {
    Matrix P(4, 4);
    P(1, 1) = 1;
    P(2, 2) = 1;
    return RelativeRBO(adjoint_action(lts4()), weight, LinearMap(P));
}

struct FixtureInfo {
    std::string name;
    std::string kind;  // "algebra" or "rbo"
    std::string note;
};

inline std::vector<FixtureInfo> list_fixtures() {
    return {
        {"lts3", "algebra", "3-dimensional system, nonzero bracket [e1,e2,e1]=e3; center span{e3}"},
        {"lts4", "algebra", "4-dimensional system, nonzero bracket [e1,e2,e1]=e4; center span{e3,e4}"},
        {"rbo3_P", "rbo",
         "projection onto the abelian subsystem span{e1} of lts3 along span{e2,e3}, adjoint action, weight 1"},
        {"rbo4_P", "rbo",
         "projection onto the abelian subsystem span{e2,e3} of lts4 along span{e1,e4}, adjoint action, weight 1"},
    };
}

}  // namespace lts::fixtures
