#pragma once

// Shared example systems used across the test suites: small interval maps
// with attractors, repellers, connecting orbits, and the sampled circle
// doubling map. Clause tables are the ground-truth data the suites probe.

#include "conley/mvmap.hpp"

namespace examples {

using namespace conley;

inline Clause C(const char* lo_br, Rat lo, Rat hi, const char* hi_br,
                Clause::Value v) {
    Clause c;
    c.lo = lo;
    c.hi = hi;
    c.lo_closed = lo_br[0] == '[';
    c.hi_closed = hi_br[0] == ']';
    c.value = std::move(v);
    return c;
}

inline Clause::Value pts(std::vector<Rat> p) { return p; }
inline Clause::Value iv(Rat a, Rat b) {
    return std::vector<std::pair<Rat, Rat>>{{a, b}};
}
inline Clause::Value ivs(std::vector<std::pair<Rat, Rat>> v) { return v; }

// Attractor at [3,4] isolated by [2,5]; the image [1,5] overshoots the
// neighborhood, so [2,5] is not an isolating block. Space [0,6].
inline PiecewiseSpec overshoot_spec() {
    PiecewiseSpec s;
    s.clauses = {
        C("[", Rat(0), Rat(1), ")", pts({Rat(0)})),
        C("[", Rat(1), Rat(1), "]", iv(Rat(0), Rat(1))),
        C("(", Rat(1), Rat(3), ")", pts({Rat(1)})),
        C("[", Rat(3), Rat(3), "]", iv(Rat(1), Rat(5))),
        C("(", Rat(3), Rat(4), ")", iv(Rat(3), Rat(5))),
        C("[", Rat(4), Rat(4), "]", iv(Rat(2), Rat(5))),
        C("(", Rat(4), Rat(6), "]", pts({Rat(2)})),
    };
    return s;
}

// Attractor at [3,4] whose one-step image and preimage certify the block
// property of [2,5]. Space [0,7].
inline PiecewiseSpec block_spec() {
    PiecewiseSpec s;
    s.clauses = {
        C("[", Rat(0), Rat(1), ")", pts({Rat(0)})),
        C("[", Rat(1), Rat(1), "]", iv(Rat(0), Rat(3))),
        C("(", Rat(1), Rat(3), ")", pts({Rat(3)})),
        C("[", Rat(3), Rat(4), "]", iv(Rat(3), Rat(4))),
        C("(", Rat(4), Rat(6), ")", pts({Rat(3)})),
        C("[", Rat(6), Rat(6), "]", iv(Rat(0), Rat(3))),
        C("(", Rat(6), Rat(7), "]", pts({Rat(0)})),
    };
    return s;
}

// Mirror-symmetric system on [-7,7] with invariant intervals [-4,-3] and
// [3,4] whose union admits no isolating neighborhood (2-cycles through the
// singular values cross every candidate boundary).
inline PiecewiseSpec mirror_spec() {
    PiecewiseSpec s;
    s.clauses = {
        C("[", Rat(-7), Rat(-4), ")", pts({Rat(-6)})),
        C("[", Rat(-4), Rat(-4), "]", iv(Rat(-6), Rat(-3))),
        C("(", Rat(-4), Rat(-3), ")", iv(Rat(-4), Rat(-3))),
        C("[", Rat(-3), Rat(-3), "]", iv(Rat(-4), Rat(3))),
        C("(", Rat(-3), Rat(-1), ")", pts({Rat(3)})),
        C("[", Rat(-1), Rat(-1), "]", iv(Rat(0), Rat(3))),
        C("(", Rat(-1), Rat(0), ")", pts({Rat(0)})),
        C("[", Rat(0), Rat(1), ")", pts({Rat(0)})),
        C("[", Rat(1), Rat(1), "]", iv(Rat(-3), Rat(0))),
        C("(", Rat(1), Rat(3), ")", pts({Rat(-3)})),
        C("[", Rat(3), Rat(3), "]", iv(Rat(-3), Rat(4))),
        C("(", Rat(3), Rat(4), ")", iv(Rat(3), Rat(4))),
        C("[", Rat(4), Rat(4), "]", iv(Rat(3), Rat(6))),
        C("(", Rat(4), Rat(7), "]", pts({Rat(6)})),
    };
    return s;
}

// Two invariant intervals [2,3], [5,6] on [0,8]; the image of the first
// reaches the second, so the union's index is not the product.
inline PiecewiseSpec two_basin_spec() {
    PiecewiseSpec s;
    s.clauses = {
        C("[", Rat(0), Rat(1), ")", pts({Rat(0)})),
        C("[", Rat(1), Rat(1), "]", iv(Rat(0), Rat(1))),
        C("(", Rat(1), Rat(2), ")", pts({Rat(1)})),
        C("[", Rat(2), Rat(2), "]", iv(Rat(1), Rat(6))),
        C("(", Rat(2), Rat(3), ")", iv(Rat(2), Rat(6))),
        C("[", Rat(3), Rat(3), "]", pts({Rat(2), Rat(7)})),
        C("(", Rat(3), Rat(4), ")", pts({Rat(7)})),
        C("[", Rat(4), Rat(4), "]", iv(Rat(4), Rat(7))),
        C("(", Rat(4), Rat(5), ")", pts({Rat(4)})),
        C("[", Rat(5), Rat(5), "]", iv(Rat(4), Rat(6))),
        C("(", Rat(5), Rat(6), ")", iv(Rat(5), Rat(6))),
        C("[", Rat(6), Rat(6), "]", iv(Rat(5), Rat(7))),
        C("(", Rat(6), Rat(7), ")", pts({Rat(7)})),
        C("[", Rat(7), Rat(7), "]", iv(Rat(7), Rat(8))),
        C("(", Rat(7), Rat(8), "]", pts({Rat(8)})),
    };
    return s;
}

// Fold examples on [-5,5]: an invariant interval [-3,-2] whose image under
// |.| loses either isolation (wide variant) or the index (narrow variant).
inline PiecewiseSpec fold_wide_spec() {
    PiecewiseSpec s;
    s.clauses = {
        C("[", Rat(-5), Rat(-3), ")", pts({Rat(-5)})),
        C("[", Rat(-3), Rat(-3), "]", iv(Rat(-5), Rat(3))),
        C("(", Rat(-3), Rat(-2), "]", iv(Rat(-3), Rat(3))),
        C("(", Rat(-2), Rat(-1), ")", iv(Rat(2), Rat(3))),
        C("[", Rat(-1), Rat(-1), "]", iv(Rat(2), Rat(5))),
        C("(", Rat(-1), Rat(1), ")", pts({Rat(5)})),
        C("[", Rat(1), Rat(1), "]", iv(Rat(2), Rat(5))),
        C("(", Rat(1), Rat(2), ")", iv(Rat(2), Rat(3))),
        C("[", Rat(2), Rat(3), ")", iv(Rat(-3), Rat(3))),
        C("[", Rat(3), Rat(3), "]", iv(Rat(-5), Rat(3))),
        C("(", Rat(3), Rat(5), "]", pts({Rat(-5)})),
    };
    return s;
}

inline PiecewiseSpec fold_narrow_spec() {
    PiecewiseSpec s;
    s.clauses = {
        C("[", Rat(-5), Rat(-3), ")", pts({Rat(-5)})),
        C("[", Rat(-3), Rat(-3), "]", iv(Rat(-5), Rat(3))),
        C("(", Rat(-3), Rat(-2), ")", iv(Rat(-3), Rat(3))),
        C("[", Rat(-2), Rat(-2), "]", iv(Rat(3), Rat(5))),
        C("(", Rat(-2), Rat(2), ")", pts({Rat(5)})),
        C("[", Rat(2), Rat(2), "]", iv(Rat(-3), Rat(5))),
        C("(", Rat(2), Rat(3), ")", iv(Rat(-3), Rat(3))),
        C("[", Rat(3), Rat(3), "]", iv(Rat(-5), Rat(3))),
        C("(", Rat(3), Rat(5), "]", pts({Rat(-5)})),
    };
    return s;
}

// The absolute-value factor map |x| : [-5,5] -> [0,5].
inline PiecewiseSpec abs_spec() {
    PiecewiseSpec s;
    s.clauses = {
        C("[", Rat(-5), Rat(0), ")", Clause::Value(Clause::Affine{Rat(-1), Rat(0)})),
        C("[", Rat(0), Rat(5), "]", Clause::Value(Clause::Affine{Rat(1), Rat(0)})),
    };
    return s;
}

// 16-interval circle grid with edges centred on the sample points i/16.
inline GridPtr sample_circle_grid() {
    std::vector<Rat> bp;
    for (int i = 0; i < 16; ++i) bp.push_back(Rat(2 * i + 1, 32));
    return Grid1D::circle(Rat(1), bp);
}

inline void doubling_samples(std::vector<Rat>& xs, std::vector<Rat>& ys) {
    xs.clear();
    ys.clear();
    for (int i = 0; i < 16; ++i) {
        xs.push_back(Rat(i, 16));
        ys.push_back(Rat(2 * i, 16).mod(Rat(1)));
    }
}

}  // namespace examples
