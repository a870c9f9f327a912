#include "conley/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace conley {

static void check_strictly_increasing(const std::vector<Rat>& bp) {
    for (size_t i = 1; i < bp.size(); ++i)
        if (!(bp[i - 1] < bp[i]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
}

GridPtr Grid1D::segment(std::vector<Rat> breakpoints) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("segment grid needs at least one edge");
    check_strictly_increasing(breakpoints);
    auto g = std::shared_ptr<Grid1D>(new Grid1D);
    g->kind_ = SpaceKind::Segment;
    g->breakpoints_ = std::move(breakpoints);
    return g;
}

GridPtr Grid1D::circle(Rat circumference, std::vector<Rat> breakpoints) {
    if (!(Rat(0) < circumference))
        throw std::invalid_argument("circumference must be positive");
    if (breakpoints.size() < 3)
        throw std::invalid_argument("circle grid needs at least 3 edges");
    check_strictly_increasing(breakpoints);
    if (breakpoints.front() < Rat(0) || !(breakpoints.back() < circumference))
        throw std::invalid_argument("circle breakpoints must lie in [0, C)");
    auto g = std::shared_ptr<Grid1D>(new Grid1D);
    g->kind_ = SpaceKind::Circle;
    g->circumference_ = circumference;
    g->breakpoints_ = std::move(breakpoints);
    return g;
}

GridPtr Grid1D::uniform_segment(Rat lo, Rat hi, Rat step) {
    if (!(lo < hi)) throw std::invalid_argument("empty segment");
    Rat span = (hi - lo) / step;
    if (!span.is_integer() || span.num <= 0)
        throw std::invalid_argument("step must divide the segment length");
    std::vector<Rat> bp;
    for (long long i = 0; i <= span.num; ++i) bp.push_back(lo + Rat(i) * step);
    return segment(std::move(bp));
}

GridPtr Grid1D::uniform_circle(Rat circumference, Rat step) {
    Rat span = circumference / step;
    if (!span.is_integer() || span.num < 3)
        throw std::invalid_argument("step must divide the circumference into >= 3 edges");
    std::vector<Rat> bp;
    for (long long i = 0; i < span.num; ++i) bp.push_back(Rat(i) * step);
    return circle(circumference, std::move(bp));
}

std::vector<int> Grid1D::vertex_cofaces(int i) const {
    std::vector<int> out;
    if (is_circle()) {
        out.push_back(i == 0 ? edge_count() - 1 : i - 1);
        out.push_back(i);
    } else {
        if (i > 0) out.push_back(i - 1);
        if (i < edge_count()) out.push_back(i);
    }
    return out;
}

bool Grid1D::is_breakpoint(const Rat& x) const {
    Rat c = canon(x);
    return std::binary_search(breakpoints_.begin(), breakpoints_.end(), c);
}

Cell Grid1D::locate(const Rat& x) const {
    Rat c = canon(x);
    if (!is_circle() && (c < lo() || hi() < c))
        throw std::out_of_range("point outside segment");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), c);
    int idx = (int)(it - breakpoints_.begin()) - 1;
    if (idx >= 0 && breakpoints_[idx] == c) return vertex_cell(idx);
    if (idx < 0) {
        // circle point below the first breakpoint: wrap edge
        return edge_cell(edge_count() - 1);
    }
    if (!is_circle() && idx >= edge_count()) return vertex_cell(vertex_count() - 1);
    return edge_cell(idx);
}

std::string Grid1D::cell_name(Cell c) const {
    if (is_vertex(c)) return "{" + vertex_coord(index_of(c)).str() + "}";
    int i = index_of(c);
    return "[" + edge_lo(i).str() + "," + canon(edge_hi(i)).str() + "]";
}

Grid1D::Subdivision Grid1D::subdivide(int k) const {
    if (k < 1) throw std::invalid_argument("subdivision factor must be >= 1");
    std::vector<Rat> bp;
    int E = edge_count();
    for (int i = 0; i < E; ++i) {
        Rat a = edge_lo(i), b = edge_hi(i);
        for (int j = 0; j < k; ++j)
            bp.push_back(canon(a + Rat(j) * (b - a) / Rat(k)));
    }
    if (!is_circle()) bp.push_back(hi());
    if (is_circle()) std::sort(bp.begin(), bp.end());

    Subdivision sub;
    sub.grid = is_circle() ? circle(circumference_, bp) : segment(bp);
    const Grid1D& ng = *sub.grid;
    sub.transfer.assign(cell_count(), {});
    for (int i = 0; i < vertex_count(); ++i) {
        Cell nv = ng.locate(vertex_coord(i));
        sub.transfer[vertex_cell(i)] = {nv};
    }
    for (int i = 0; i < E; ++i) {
        std::vector<Cell>& t = sub.transfer[edge_cell(i)];
        Rat a = edge_lo(i), b = edge_hi(i);
        for (int j = 0; j <= k; ++j) {
            Rat p = a + Rat(j) * (b - a) / Rat(k);
            t.push_back(ng.locate(p));
            if (j < k) {
                Rat mid = p + (b - a) / Rat(2 * k);
                t.push_back(ng.locate(mid));
            }
        }
    }
    return sub;
}

}  // namespace conley
