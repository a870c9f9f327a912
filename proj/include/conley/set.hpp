#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conley/bits.hpp"
#include "conley/grid.hpp"

namespace conley {

struct Region;

/// Closed cubical set: a face-complete set of cells (every member edge has
/// both face vertices in the set). The realization is the union of the
/// closed cells.
struct CubSet {
    GridPtr grid;
    Bits cells;

    CubSet() = default;
    CubSet(GridPtr g, Bits b);  // closes down
    static CubSet empty(GridPtr g) { return CubSet(g, Bits(g->cell_count())); }
    static CubSet full(GridPtr g);

    bool is_empty() const { return cells.none(); }
    bool contains_cell(Cell c) const { return cells.get(c); }
    bool contains_point(const Rat& x) const;

    friend CubSet operator|(const CubSet& a, const CubSet& b);
    friend CubSet operator&(const CubSet& a, const CubSet& b);
    friend bool operator==(const CubSet& a, const CubSet& b) {
        return a.cells == b.cells;
    }
    bool subset_of(const CubSet& o) const { return cells.subset_of(o.cells); }

    Region to_region() const;
    std::string str() const;
};

/// Arbitrary point set expressible on the grid: a set of cell atoms where
/// each atom stands for the relative interior of its cell (a vertex point
/// or an open edge). Interval lists with open/closed endpoint flags are
/// materialized on demand for I/O; cl/int/bd are the exact poset operators.
struct Region {
    GridPtr grid;
    Bits atoms;

    Region() = default;
    Region(GridPtr g, Bits b) : grid(std::move(g)), atoms(std::move(b)) {}
    static Region empty(GridPtr g) { return Region(g, Bits(g->cell_count())); }
    static Region full(GridPtr g);

    bool is_empty() const { return atoms.none(); }
    bool contains_point(const Rat& x) const;
    bool subset_of(const Region& o) const { return atoms.subset_of(o.atoms); }

    friend Region operator|(const Region& a, const Region& b);
    friend Region operator&(const Region& a, const Region& b);
    friend Region operator-(const Region& a, const Region& b);
    Region complement() const { return Region(grid, atoms.complement()); }
    friend bool operator==(const Region& a, const Region& b) {
        return a.atoms == b.atoms;
    }

    /// Maximal intervals with endpoint flags; degenerate ones are points.
    struct Interval {
        Rat lo, hi;
        bool lo_closed = true, hi_closed = true;
    };
    std::vector<Interval> intervals() const;
    std::string str() const;
};

/// Topological closure of a region (face-closure of its atoms).
CubSet closure(const Region& r);
/// Interior as a subset of the space: atoms all of whose cofaces are in.
Region interior(const Region& r);
Region interior(const CubSet& s);
/// Closed-set difference |a| \ |b| (exact, generally not closed).
Region set_difference(const CubSet& a, const CubSet& b);
/// Topological boundary of |s|.
Region boundary(const CubSet& s);
Region boundary(const Region& r);

/// Cells whose closure meets S (one combinatorial collar), then closed.
CubSet closed_star(const CubSet& s);
/// Union of relative interiors of cells having a face in S: the open star.
Region open_star(const CubSet& s);

/// Smallest CubSet containing the closed interval [lo,hi] (wraps on a
/// circle when lo > hi after reduction; covers everything if hi-lo >= C).
CubSet interval_enclosure(const GridPtr& g, Rat lo, Rat hi);
/// Smallest CubSet whose realization contains the point x.
CubSet point_enclosure(const GridPtr& g, const Rat& x);

/// Exact region of an interval whose endpoints are breakpoints.
/// Throws std::invalid_argument (mentioning the needed subdivision factor)
/// if an endpoint is not a breakpoint.
Region interval_region(const GridPtr& g, Rat lo, Rat hi, bool lo_closed,
                       bool hi_closed);

/// Parses set syntax: "[2,5] u (0,1] u {3, 7/2}", unicode "∪" accepted,
/// "∅" or "{}" for empty. On a circle "[a,b]" with a > b wraps; the alias
/// "{a,b arc}" denotes the same closed arc.
Region parse_region(const GridPtr& g, const std::string& text);
/// parse_region + closedness check; throws if the text denotes a non-closed set.
CubSet parse_cubset(const GridPtr& g, const std::string& text);

/// Transfers a cell set along a subdivision (uses Subdivision::transfer).
Bits transfer_bits(const Grid1D::Subdivision& sub, const Bits& old_bits);

}  // namespace conley
