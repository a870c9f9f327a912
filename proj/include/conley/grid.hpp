#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conley/rat.hpp"

namespace conley {

enum class SpaceKind { Segment, Circle };

class Grid1D;
using GridPtr = std::shared_ptr<const Grid1D>;

/// Cell ids interleave vertices and edges: vertex i -> 2*i, edge i -> 2*i+1.
/// A segment with m breakpoints has m vertices and m-1 edges; a circle has
/// m of each, edge m-1 wrapping from the last breakpoint back to the first.
using Cell = int;

/// 1-D cubical grid with exact rational breakpoints, on a segment [a,b]
/// or a circle of given circumference with base point 0.
class Grid1D : public std::enable_shared_from_this<Grid1D> {
  public:
    static GridPtr segment(std::vector<Rat> breakpoints);
    static GridPtr circle(Rat circumference, std::vector<Rat> breakpoints);
    /// Uniform grid with step `step`; segment endpoints / the circumference
    /// must be integer multiples of the step.
    static GridPtr uniform_segment(Rat lo, Rat hi, Rat step);
    static GridPtr uniform_circle(Rat circumference, Rat step);

    SpaceKind kind() const { return kind_; }
    bool is_circle() const { return kind_ == SpaceKind::Circle; }
    Rat circumference() const { return circumference_; }
    Rat lo() const { return breakpoints_.front(); }
    Rat hi() const { return breakpoints_.back(); }

    int vertex_count() const { return (int)breakpoints_.size(); }
    int edge_count() const {
        return is_circle() ? vertex_count() : vertex_count() - 1;
    }
    int cell_count() const { return vertex_count() + edge_count(); }

    static bool is_vertex(Cell c) { return (c & 1) == 0; }
    static bool is_edge(Cell c) { return (c & 1) == 1; }
    static Cell vertex_cell(int i) { return 2 * i; }
    static Cell edge_cell(int i) { return 2 * i + 1; }
    static int index_of(Cell c) { return c >> 1; }

    Rat vertex_coord(int i) const { return breakpoints_[i]; }
    /// Edge i spans [edge_lo(i), edge_hi(i)]; on a circle the wrap edge has
    /// edge_hi = breakpoint[0] + circumference (an unreduced coordinate).
    Rat edge_lo(int i) const { return breakpoints_[i]; }
    Rat edge_hi(int i) const {
        if (is_circle() && i == edge_count() - 1)
            return breakpoints_[0] + circumference_;
        return breakpoints_[i + 1];
    }

    /// Face vertices of edge i as vertex indices (left, right).
    std::pair<int, int> edge_faces(int i) const {
        int r = i + 1;
        if (is_circle() && r == vertex_count()) r = 0;
        return {i, r};
    }
    /// Edge indices incident to vertex i (1 at segment ends, else 2).
    std::vector<int> vertex_cofaces(int i) const;

    /// Cell whose relative interior contains x: the vertex if x is a
    /// breakpoint, else the edge. Circle coordinates are reduced mod
    /// circumference; segment requires lo <= x <= hi.
    Cell locate(const Rat& x) const;
    bool is_breakpoint(const Rat& x) const;

    /// Canonical coordinate: identity on a segment, mod circumference on a
    /// circle (result in [0, C)).
    Rat canon(const Rat& x) const {
        return is_circle() ? x.mod(circumference_) : x;
    }

    std::string cell_name(Cell c) const;

    /// k-fold subdivision. transfer[c] lists the new cells covering old
    /// cell c (closed cover: a subdivided edge transfers to k edges and
    /// their k+1 vertices).
    struct Subdivision {
        GridPtr grid;
        std::vector<std::vector<Cell>> transfer;
    };
    Subdivision subdivide(int k) const;

    bool same_grid(const Grid1D& other) const { return this == &other; }

  private:
    Grid1D() = default;
    SpaceKind kind_ = SpaceKind::Segment;
    Rat circumference_;  // circle only
    std::vector<Rat> breakpoints_;
};

}  // namespace conley
