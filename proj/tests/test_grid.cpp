#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conley/set.hpp"

#include <random>

using namespace conley;

static Rat R(long long n, long long d = 1) { return Rat(n, d); }

TEST_CASE("rationals") {
    CHECK(parse_rat("-5/2") == R(-5, 2));
    CHECK(parse_rat("1.5") == R(3, 2));
    CHECK(parse_rat(" 7 ") == R(7));
    CHECK(R(1, 3) + R(1, 6) == R(1, 2));
    CHECK(R(31, 32).mod(R(1)) == R(31, 32));
    CHECK(R(33, 32).mod(R(1)) == R(1, 32));
    CHECK((-R(1, 32)).mod(R(1)) == R(31, 32));
}

TEST_CASE("segment grid cells and location") {
    auto g = Grid1D::uniform_segment(R(0), R(6), R(1));
    CHECK(g->vertex_count() == 7);
    CHECK(g->edge_count() == 6);
    CHECK(g->locate(R(3)) == Grid1D::vertex_cell(3));
    CHECK(g->locate(R(7, 2)) == Grid1D::edge_cell(3));
    CHECK_THROWS(g->locate(R(-1)));
}

TEST_CASE("circle grid wraps") {
    // the 16-interval circle grid: breakpoints at odd multiples of 1/32
    std::vector<Rat> bp;
    for (int i = 0; i < 16; ++i) bp.push_back(R(2 * i + 1, 32));
    auto g = Grid1D::circle(R(1), bp);
    CHECK(g->edge_count() == 16);
    Cell c0 = g->locate(R(0));
    CHECK(Grid1D::is_edge(c0));
    CHECK(Grid1D::index_of(c0) == 15);  // wrap edge [31/32, 33/32]
    CHECK(g->locate(R(33, 32)) == g->locate(R(1, 32)));
}

TEST_CASE("closure and interior on segment") {
    auto g = Grid1D::uniform_segment(R(0), R(6), R(1));
    Region open25 = parse_region(g, "(2,5)");
    CHECK(closure(open25).str() == "[2,5]");
    CubSet s = parse_cubset(g, "[2,5]");
    CHECK(interior(s).str() == "(2,5)");
    // 0 is interior relative to the space
    CubSet a = parse_cubset(g, "[0,2]");
    CHECK(interior(a).str() == "[0,2)");
    CHECK(closure(parse_region(g, "{}")).is_empty());
    // closure((3,4) u {2}) = [3,4] u {2}
    Region r = parse_region(g, "(3,4) u {2}");
    CHECK(closure(r).str() == "{2} u [3,4]");
}

TEST_CASE("difference and boundary") {
    auto g = Grid1D::uniform_segment(R(0), R(6), R(1));
    CubSet s = parse_cubset(g, "[2,5]");
    CubSet ends = parse_cubset(g, "{2,5}");
    CHECK(set_difference(s, ends).str() == "(2,5)");
    CHECK(boundary(s).str() == "{2} u {5}");
    CHECK(boundary(CubSet::full(g)).is_empty());
    std::vector<Rat> bp;
    for (int i = 0; i < 8; ++i) bp.push_back(R(i, 8));
    auto circ = Grid1D::circle(R(1), bp);
    CHECK(boundary(CubSet::full(circ)).is_empty());
    CHECK(interior(CubSet::full(circ)) == Region::full(circ));
}

TEST_CASE("circle arcs through the base point") {
    std::vector<Rat> bp;
    for (int i = 0; i < 16; ++i) bp.push_back(R(2 * i + 1, 32));
    auto g = Grid1D::circle(R(1), bp);
    CubSet s = parse_cubset(g, "[31/32,1/32]");
    CHECK(s.cells.count() == 3);  // wrap edge and its two vertices
    CHECK(s.contains_point(R(0)));
    CHECK(s.contains_point(R(1, 32)));
    CHECK(!s.contains_point(R(3, 64)));
    CubSet arc = parse_cubset(g, "{31/32,1/32 arc}");
    CHECK(arc == s);
}

TEST_CASE("parse errors") {
    auto g = Grid1D::uniform_segment(R(0), R(6), R(1));
    CHECK_THROWS(parse_region(g, ""));
    CHECK_THROWS_WITH_AS(parse_region(g, "[2,9/2]"),
                         doctest::Contains("subdivide by 2"),
                         std::invalid_argument);
    CHECK_THROWS(parse_cubset(g, "(2,5)"));  // not closed
}

TEST_CASE("region interval printing round trip") {
    auto g = Grid1D::uniform_segment(R(0), R(8), R(1, 2));
    Region r = parse_region(g, "[0,3/2) u {2} u (5/2,4]");
    CHECK(r.str() == "[0,3/2) u {2} u (5/2,4]");
}

static Bits random_closed_bits(const GridPtr& g, std::mt19937_64& rng) {
    Bits b(g->cell_count());
    for (int e = 0; e < g->edge_count(); ++e)
        if (rng() & 1) b.set(Grid1D::edge_cell(e));
    for (int v = 0; v < g->vertex_count(); ++v)
        if ((rng() & 3) == 0) b.set(Grid1D::vertex_cell(v));
    return b;
}

TEST_CASE("point-set identities on random sets") {
    std::mt19937_64 rng(20240817);
    auto g = Grid1D::uniform_segment(R(0), R(10), R(1, 2));
    for (int trial = 0; trial < 200; ++trial) {
        CubSet s(g, random_closed_bits(g, rng));
        // closure(interior(s)) subset of s, interior(s) subset of |s|
        CHECK(closure(interior(s)).subset_of(s));
        CHECK(interior(s).subset_of(s.to_region()));
        // de morgan: complement(int s) == closure(complement s) pointwise
        Region lhs = interior(s).complement();
        Region rhs = closure(s.to_region().complement()).to_region();
        // probe lattice: 10 points per edge plus breakpoints
        for (int e = 0; e < g->edge_count(); ++e) {
            for (int k = 0; k <= 10; ++k) {
                Rat x = g->edge_lo(e) +
                        Rat(k, 10) * (g->edge_hi(e) - g->edge_lo(e));
                CHECK(lhs.contains_point(x) == rhs.contains_point(x));
            }
        }
    }
}

TEST_CASE("subdivision preserves point sets") {
    std::mt19937_64 rng(99);
    std::vector<Rat> bp;
    for (int i = 0; i < 16; ++i) bp.push_back(R(i, 16));
    auto g = Grid1D::circle(R(1), bp);
    auto sub = g->subdivide(2);
    CHECK(sub.grid->edge_count() == 32);
    for (int trial = 0; trial < 100; ++trial) {
        Bits b = random_closed_bits(g, rng);
        CubSet s(g, b);
        CubSet t(sub.grid, transfer_bits(sub, s.cells));
        for (int e = 0; e < g->edge_count(); ++e)
            for (int k = 0; k <= 6; ++k) {
                Rat x = g->canon(g->edge_lo(e) +
                                 Rat(k, 6) * (g->edge_hi(e) - g->edge_lo(e)));
                CHECK(s.contains_point(x) == t.contains_point(x));
            }
    }
    // k=1 keeps the grid
    auto id = g->subdivide(1);
    CHECK(id.grid->edge_count() == g->edge_count());
}

TEST_CASE("stars") {
    auto g = Grid1D::uniform_segment(R(0), R(6), R(1));
    CubSet s = parse_cubset(g, "[3,4]");
    CHECK(closed_star(s).str() == "[2,5]");
    CHECK(open_star(s).str() == "(2,5)");
    CHECK(interior(closed_star(s)).str() == "(2,5)");
}
