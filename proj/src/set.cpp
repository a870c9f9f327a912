#include "conley/set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace conley {

static Bits close_down(const GridPtr& g, Bits b) {
    for (int e = 0; e < g->edge_count(); ++e) {
        if (b.get(Grid1D::edge_cell(e))) {
            auto [l, r] = g->edge_faces(e);
            b.set(Grid1D::vertex_cell(l));
            b.set(Grid1D::vertex_cell(r));
        }
    }
    return b;
}

CubSet::CubSet(GridPtr g, Bits b) : grid(std::move(g)) {
    cells = close_down(grid, std::move(b));
}

CubSet CubSet::full(GridPtr g) {
    Bits b(g->cell_count());
    for (int i = 0; i < g->cell_count(); ++i) b.set(i);
    return CubSet(std::move(g), std::move(b));
}

Region Region::full(GridPtr g) {
    Bits b(g->cell_count());
    for (int i = 0; i < g->cell_count(); ++i) b.set(i);
    return Region(std::move(g), std::move(b));
}

bool CubSet::contains_point(const Rat& x) const {
    return cells.get(grid->locate(x));
}
bool Region::contains_point(const Rat& x) const {
    return atoms.get(grid->locate(x));
}

static void check_same_grid(const GridPtr& a, const GridPtr& b) {
    if (a.get() != b.get())
        throw std::invalid_argument("operands live on different grids");
}

CubSet operator|(const CubSet& a, const CubSet& b) {
    check_same_grid(a.grid, b.grid);
    return CubSet(a.grid, a.cells | b.cells);
}
CubSet operator&(const CubSet& a, const CubSet& b) {
    check_same_grid(a.grid, b.grid);
    return CubSet(a.grid, a.cells & b.cells);  // intersection of closed is closed
}
Region operator|(const Region& a, const Region& b) {
    check_same_grid(a.grid, b.grid);
    return Region(a.grid, a.atoms | b.atoms);
}
Region operator&(const Region& a, const Region& b) {
    check_same_grid(a.grid, b.grid);
    return Region(a.grid, a.atoms & b.atoms);
}
Region operator-(const Region& a, const Region& b) {
    check_same_grid(a.grid, b.grid);
    return Region(a.grid, a.atoms - b.atoms);
}

Region CubSet::to_region() const { return Region(grid, cells); }

CubSet closure(const Region& r) { return CubSet(r.grid, r.atoms); }

Region interior(const Region& r) {
    const GridPtr& g = r.grid;
    Bits out = r.atoms;
    for (int v = 0; v < g->vertex_count(); ++v) {
        Cell c = Grid1D::vertex_cell(v);
        if (!out.get(c)) continue;
        for (int e : g->vertex_cofaces(v))
            if (!r.atoms.get(Grid1D::edge_cell(e))) { out.set(c, false); break; }
    }
    return Region(g, out);
}
Region interior(const CubSet& s) { return interior(s.to_region()); }

Region set_difference(const CubSet& a, const CubSet& b) {
    check_same_grid(a.grid, b.grid);
    return Region(a.grid, a.cells - b.cells);
}

Region boundary(const Region& r) {
    Bits cl = close_down(r.grid, r.atoms);
    Bits in = interior(r).atoms;
    return Region(r.grid, cl - in);
}
Region boundary(const CubSet& s) { return boundary(s.to_region()); }

CubSet closed_star(const CubSet& s) {
    const GridPtr& g = s.grid;
    Bits b = s.cells;
    for (int v = 0; v < g->vertex_count(); ++v)
        if (s.cells.get(Grid1D::vertex_cell(v)))
            for (int e : g->vertex_cofaces(v)) b.set(Grid1D::edge_cell(e));
    return CubSet(g, std::move(b));
}

Region open_star(const CubSet& s) {
    const GridPtr& g = s.grid;
    Bits b = s.cells;
    for (int v = 0; v < g->vertex_count(); ++v)
        if (s.cells.get(Grid1D::vertex_cell(v)))
            for (int e : g->vertex_cofaces(v)) b.set(Grid1D::edge_cell(e));
    return Region(g, std::move(b));
}

// ---------------------------------------------------------------------------
// interval -> cell machinery

CubSet point_enclosure(const GridPtr& g, const Rat& x) {
    Bits b(g->cell_count());
    b.set(g->locate(x));
    return CubSet(g, std::move(b));
}

CubSet interval_enclosure(const GridPtr& g, Rat lo, Rat hi) {
    Bits b(g->cell_count());
    if (g->is_circle()) {
        Rat C = g->circumference();
        Rat span = hi - lo;
        if (span < Rat(0)) span = span.mod(C);
        lo = g->canon(lo);
        if (!(span < C)) {
            for (int i = 0; i < g->cell_count(); ++i) b.set(i);
            return CubSet(g, std::move(b));
        }
        hi = lo + span;
        auto meets = [&](Rat a, Rat bb, bool openends) {
            // does (a,bb) [or [a,bb] when !openends] meet [lo,hi], allowing one wrap
            for (int k = 0; k <= 1; ++k) {
                Rat A = a + Rat(k) * C, B = bb + Rat(k) * C;
                bool hit = openends ? (A < hi && lo < B) : (!(B < lo) && !(hi < A));
                if (hit) return true;
            }
            return false;
        };
        for (int v = 0; v < g->vertex_count(); ++v)
            if (meets(g->vertex_coord(v), g->vertex_coord(v), false))
                b.set(Grid1D::vertex_cell(v));
        for (int e = 0; e < g->edge_count(); ++e)
            if (meets(g->edge_lo(e), g->edge_hi(e), true))
                b.set(Grid1D::edge_cell(e));
        return CubSet(g, std::move(b));
    }
    if (hi < lo) std::swap(lo, hi);
    if (lo < g->lo()) lo = g->lo();
    if (g->hi() < hi) hi = g->hi();
    if (hi < lo) return CubSet::empty(g);
    for (int v = 0; v < g->vertex_count(); ++v) {
        Rat x = g->vertex_coord(v);
        if (!(x < lo) && !(hi < x)) b.set(Grid1D::vertex_cell(v));
    }
    for (int e = 0; e < g->edge_count(); ++e)
        if (g->edge_lo(e) < hi && lo < g->edge_hi(e)) b.set(Grid1D::edge_cell(e));
    return CubSet(g, std::move(b));
}

static void require_breakpoint(const GridPtr& g, const Rat& x) {
    if (g->is_breakpoint(x)) return;
    // suggest the extra uniform subdivision factor that would make x a breakpoint
    Cell c = g->locate(x);
    long long k = 0;
    if (Grid1D::is_edge(c)) {
        int e = Grid1D::index_of(c);
        Rat w = g->edge_hi(e) - g->edge_lo(e);
        Rat off = (x - g->edge_lo(e)) / w;
        k = off.den;
    }
    throw std::invalid_argument("endpoint " + x.str() +
                                " is not a grid breakpoint (subdivide by " +
                                std::to_string(k) + ")");
}

Region interval_region(const GridPtr& g, Rat lo, Rat hi, bool lo_closed,
                       bool hi_closed) {
    require_breakpoint(g, lo);
    require_breakpoint(g, hi);
    Bits b(g->cell_count());
    if (g->is_circle()) {
        Rat C = g->circumference();
        Rat span = hi - lo;
        if (span < Rat(0) || (span == Rat(0) && !(lo == hi)))
            span = span.mod(C);
        lo = g->canon(lo);
        if (lo + span == lo && lo_closed && hi_closed) {
            b.set(g->locate(lo));
            // single point
            return Region(g, std::move(b));
        }
        if (!(span < C)) return Region::full(g);
        hi = lo + span;
        auto vertex_in = [&](Rat x) {
            for (int k = 0; k <= 1; ++k) {
                Rat X = x + Rat(k) * C;
                bool look = lo_closed ? !(X < lo) : (lo < X);
                bool hook = hi_closed ? !(hi < X) : (X < hi);
                if (look && hook) return true;
            }
            return false;
        };
        for (int v = 0; v < g->vertex_count(); ++v)
            if (vertex_in(g->vertex_coord(v))) b.set(Grid1D::vertex_cell(v));
        for (int e = 0; e < g->edge_count(); ++e) {
            for (int k = 0; k <= 1; ++k) {
                Rat A = g->edge_lo(e) + Rat(k) * C, B = g->edge_hi(e) + Rat(k) * C;
                if (!(A < lo) && !(hi < B)) { b.set(Grid1D::edge_cell(e)); break; }
            }
        }
        return Region(g, std::move(b));
    }
    if (hi < lo)
        throw std::invalid_argument("segment interval with lo > hi");
    for (int v = 0; v < g->vertex_count(); ++v) {
        Rat x = g->vertex_coord(v);
        bool look = lo_closed ? !(x < lo) : (lo < x);
        bool hook = hi_closed ? !(hi < x) : (x < hi);
        if (look && hook) b.set(Grid1D::vertex_cell(v));
    }
    for (int e = 0; e < g->edge_count(); ++e)
        if (!(g->edge_lo(e) < lo) && !(hi < g->edge_hi(e)))
            b.set(Grid1D::edge_cell(e));
    return Region(g, std::move(b));
}

// ---------------------------------------------------------------------------
// printing

std::vector<Region::Interval> Region::intervals() const {
    std::vector<Interval> out;
    int n = grid->cell_count();
    if (atoms.none()) return out;
    bool full = true;
    for (int i = 0; i < n && full; ++i) full = atoms.get(i);
    if (full && grid->is_circle()) {
        out.push_back({Rat(0), grid->circumference(), true, true});
        return out;
    }
    // scan cells in spatial order: v0 e0 v1 e1 ...
    auto cell_at = [&](int pos) {  // pos in [0, n)
        return (pos % 2 == 0) ? Grid1D::vertex_cell(pos / 2)
                              : Grid1D::edge_cell(pos / 2);
    };
    int start = 0;
    if (grid->is_circle()) {
        // begin at a non-member position so runs do not straddle the scan origin
        while (start < n && atoms.get(cell_at(start))) ++start;
    }
    std::vector<std::pair<int, int>> runs;  // [first,last] positions
    int i = 0;
    while (i < n) {
        int pos = (start + i) % n;
        if (!atoms.get(cell_at(pos))) { ++i; continue; }
        int j = i;
        while (j + 1 < n && atoms.get(cell_at((start + j + 1) % n))) ++j;
        runs.push_back({(start + i) % n, (start + j) % n});
        i = j + 1;
    }
    for (auto [a, bpos] : runs) {
        Cell ca = cell_at(a), cb = cell_at(bpos);
        Interval iv;
        if (Grid1D::is_vertex(ca)) {
            iv.lo = grid->vertex_coord(Grid1D::index_of(ca));
            iv.lo_closed = true;
        } else {
            iv.lo = grid->edge_lo(Grid1D::index_of(ca));
            iv.lo_closed = false;
        }
        if (Grid1D::is_vertex(cb)) {
            iv.hi = grid->vertex_coord(Grid1D::index_of(cb));
            iv.hi_closed = true;
        } else {
            iv.hi = grid->edge_hi(Grid1D::index_of(cb));
            iv.hi_closed = false;
        }
        if (grid->is_circle() && iv.hi < iv.lo) iv.hi = iv.hi + grid->circumference();
        out.push_back(iv);
    }
    std::sort(out.begin(), out.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

std::string Region::str() const {
    auto ivs = intervals();
    if (ivs.empty()) return "∅";
    std::ostringstream os;
    bool first = true;
    for (auto& iv : ivs) {
        if (!first) os << " u ";
        first = false;
        Rat hi = grid->is_circle() ? grid->canon(iv.hi) : iv.hi;
        if (iv.lo == iv.hi && iv.lo_closed && iv.hi_closed) {
            os << "{" << iv.lo << "}";
        } else {
            os << (iv.lo_closed ? "[" : "(") << iv.lo << "," << hi
               << (iv.hi_closed ? "]" : ")");
        }
    }
    return os.str();
}

std::string CubSet::str() const { return to_region().str(); }

// ---------------------------------------------------------------------------
// parsing

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_union(const std::string& text) {
    // accept "∪", " u ", " U "
    std::string t;
    for (size_t i = 0; i < text.size();) {
        if (text.compare(i, 3, "∪") == 0) { t += '|'; i += 3; }
        else { t += text[i]; ++i; }
    }
    std::vector<std::string> parts;
    std::string cur;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (c == '|') { parts.push_back(cur); cur.clear(); continue; }
        if ((c == 'u' || c == 'U') && i > 0 && i + 1 < t.size() &&
            std::isspace((unsigned char)t[i - 1]) &&
            std::isspace((unsigned char)t[i + 1])) {
            parts.push_back(cur); cur.clear(); ++i; continue;
        }
        cur += c;
    }
    parts.push_back(cur);
    for (auto& p : parts) p = strip(p);
    return parts;
}

}  // namespace

Region parse_region(const GridPtr& g, const std::string& text) {
    std::string t = strip(text);
    Region acc = Region::empty(g);
    if (t.empty()) throw std::invalid_argument("empty set expression");
    if (t == "∅" || t == "{}") return acc;
    for (const std::string& term : split_union(t)) {
        if (term.empty()) throw std::invalid_argument("empty term in set expression");
        char open = term.front(), close = term.back();
        std::string body = strip(term.substr(1, term.size() - 2));
        if (open == '{') {
            if (close != '}') throw std::invalid_argument("unbalanced braces: " + term);
            bool arc = false;
            if (body.size() > 4 && body.substr(body.size() - 3) == "arc") {
                arc = true;
                body = strip(body.substr(0, body.size() - 3));
            }
            std::vector<std::string> items;
            std::string cur;
            for (char c : body) {
                if (c == ',') { items.push_back(cur); cur.clear(); }
                else cur += c;
            }
            items.push_back(cur);
            if (arc) {
                if (items.size() != 2)
                    throw std::invalid_argument("arc syntax needs two endpoints");
                acc = acc | interval_region(g, parse_rat(items[0]),
                                            parse_rat(items[1]), true, true);
                continue;
            }
            for (auto& it : items) {
                std::string p = strip(it);
                if (p.empty()) continue;
                Rat x = parse_rat(p);
                require_breakpoint(g, x);
                Bits b(g->cell_count());
                b.set(g->locate(x));
                acc = acc | Region(g, std::move(b));
            }
            continue;
        }
        if ((open == '[' || open == '(') && (close == ']' || close == ')')) {
            auto comma = body.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("interval needs two endpoints: " + term);
            Rat lo = parse_rat(body.substr(0, comma));
            Rat hi = parse_rat(body.substr(comma + 1));
            acc = acc | interval_region(g, lo, hi, open == '[', close == ']');
            continue;
        }
        throw std::invalid_argument("cannot parse set term: " + term);
    }
    return acc;
}

CubSet parse_cubset(const GridPtr& g, const std::string& text) {
    Region r = parse_region(g, text);
    CubSet c = closure(r);
    if (!(c.to_region() == r))
        throw std::invalid_argument("set is not closed: " + text);
    return c;
}

Bits transfer_bits(const Grid1D::Subdivision& sub, const Bits& old_bits) {
    Bits out(sub.grid->cell_count());
    for (int c = 0; c < old_bits.size(); ++c)
        if (old_bits.get(c))
            for (Cell nc : sub.transfer[c]) out.set(nc);
    return out;
}

}  // namespace conley
