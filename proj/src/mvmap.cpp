#include "conley/mvmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace conley {

CubSet CombMap::effective_domain() const {
    Bits b(dom_->cell_count());
    for (int c = 0; c < dom_->cell_count(); ++c)
        if (defined(c)) b.set(c);
    // effective domain of a usc map is closed; face-closing is harmless here
    return CubSet(dom_, std::move(b));
}

bool CombMap::total() const {
    for (int c = 0; c < dom_->cell_count(); ++c)
        if (!defined(c)) return false;
    return true;
}

bool CombMap::face_monotone() const {
    for (int e = 0; e < dom_->edge_count(); ++e) {
        Cell ec = Grid1D::edge_cell(e);
        if (!defined(ec)) continue;
        auto [l, r] = dom_->edge_faces(e);
        for (int v : {l, r}) {
            Cell vc = Grid1D::vertex_cell(v);
            if (defined(vc) && !value(vc).subset_of(value(ec))) return false;
        }
    }
    return true;
}

namespace {

// connected components of a cell set in the face-incidence graph
int component_count(const GridPtr& g, const Bits& b) {
    std::vector<int> comp(g->cell_count(), -1);
    int ncomp = 0;
    for (int c0 = 0; c0 < g->cell_count(); ++c0) {
        if (!b.get(c0) || comp[c0] >= 0) continue;
        std::vector<Cell> stack{c0};
        comp[c0] = ncomp;
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            std::vector<Cell> nbrs;
            if (Grid1D::is_edge(c)) {
                auto [l, r] = g->edge_faces(Grid1D::index_of(c));
                nbrs = {Grid1D::vertex_cell(l), Grid1D::vertex_cell(r)};
            } else {
                for (int e : g->vertex_cofaces(Grid1D::index_of(c)))
                    nbrs.push_back(Grid1D::edge_cell(e));
            }
            for (Cell n : nbrs)
                if (b.get(n) && comp[n] < 0) { comp[n] = ncomp; stack.push_back(n); }
        }
        ++ncomp;
    }
    return ncomp;
}

}  // namespace

AcyclicityReport CombMap::check_acyclic_values() const {
    AcyclicityReport rep;
    for (int c = 0; c < dom_->cell_count(); ++c) {
        if (!defined(c)) continue;
        const Bits& v = value(c);
        if (v.none()) { rep.failures.push_back({c, "empty value"}); continue; }
        if (v.count() == cod_->cell_count() && cod_->is_circle()) {
            rep.failures.push_back({c, "value covers the whole circle"});
            continue;
        }
        if (component_count(cod_, v) > 1)
            rep.failures.push_back({c, "value disconnected"});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// construction

namespace {

struct PtInterval {
    Rat lo, hi;
    bool lo_closed, hi_closed;
    bool empty() const {
        return hi < lo || (lo == hi && !(lo_closed && hi_closed));
    }
};

PtInterval clause_interval(const Clause& c) {
    return {c.lo, c.hi, c.lo_closed, c.hi_closed};
}

PtInterval intersect(const PtInterval& a, const PtInterval& b) {
    PtInterval r;
    if (a.lo < b.lo) { r.lo = b.lo; r.lo_closed = b.lo_closed; }
    else if (b.lo < a.lo) { r.lo = a.lo; r.lo_closed = a.lo_closed; }
    else { r.lo = a.lo; r.lo_closed = a.lo_closed && b.lo_closed; }
    if (b.hi < a.hi) { r.hi = b.hi; r.hi_closed = b.hi_closed; }
    else if (a.hi < b.hi) { r.hi = a.hi; r.hi_closed = a.hi_closed; }
    else { r.hi = a.hi; r.hi_closed = a.hi_closed && b.hi_closed; }
    return r;
}

void validate_partition(const PiecewiseSpec& spec, const GridPtr& g) {
    if (spec.clauses.empty()) throw std::invalid_argument("no clauses");
    auto cl = spec.clauses;
    for (size_t i = 1; i < cl.size(); ++i)
        if (cl[i].lo < cl[i - 1].lo)
            throw std::invalid_argument("clauses must be sorted");
    Rat lo = g->is_circle() ? Rat(0) : g->lo();
    Rat hi = g->is_circle() ? g->circumference() : g->hi();
    if (!(cl.front().lo == lo) || !cl.front().lo_closed)
        throw std::invalid_argument("clauses must start at the space's lower end");
    for (size_t i = 0; i + 1 < cl.size(); ++i) {
        if (!(cl[i].hi == cl[i + 1].lo) ||
            cl[i].hi_closed == cl[i + 1].lo_closed)
            throw std::invalid_argument("clause gap or overlap at " + cl[i].hi.str());
    }
    if (!(cl.back().hi == hi))
        throw std::invalid_argument("clauses must end at the space's upper end");
    if (g->is_circle()) {
        // endpoint 0 ~ C: exactly one of the two ends may claim the seam point
        if (cl.front().lo_closed == cl.back().hi_closed)
            throw std::invalid_argument("circle seam covered twice or not at all");
    } else if (!cl.back().hi_closed) {
        throw std::invalid_argument("clauses must close the segment's upper end");
    }
    for (const Clause& c : spec.clauses)
        if (!g->is_breakpoint(c.lo) || !g->is_breakpoint(c.hi))
            throw std::invalid_argument("clause breakpoint " + c.lo.str() + ".." +
                                        c.hi.str() + " not on the grid");
}

void accumulate_value(Bits& acc, const GridPtr& cod, const Clause& c,
                      const PtInterval& isect) {
    if (std::holds_alternative<std::vector<Rat>>(c.value)) {
        for (const Rat& p : std::get<std::vector<Rat>>(c.value))
            acc |= point_enclosure(cod, p).cells;
    } else if (std::holds_alternative<std::vector<std::pair<Rat, Rat>>>(c.value)) {
        for (auto& [a, b] : std::get<std::vector<std::pair<Rat, Rat>>>(c.value))
            acc |= interval_enclosure(cod, a, b).cells;
    } else {
        const auto& af = std::get<Clause::Affine>(c.value);
        Rat y0 = af.a * isect.lo + af.b;
        Rat y1 = af.a * isect.hi + af.b;
        if (y1 < y0) std::swap(y0, y1);
        acc |= interval_enclosure(cod, y0, y1).cells;
    }
}

}  // namespace

CombMap from_piecewise(const PiecewiseSpec& spec, const GridPtr& dom,
                       const GridPtr& cod) {
    validate_partition(spec, dom);
    CombMap f(dom, cod);
    for (int c = 0; c < dom->cell_count(); ++c) {
        PtInterval cellIv;
        if (Grid1D::is_vertex(c)) {
            Rat x = dom->vertex_coord(Grid1D::index_of(c));
            cellIv = {x, x, true, true};
        } else {
            int e = Grid1D::index_of(c);
            cellIv = {dom->edge_lo(e), dom->edge_hi(e), true, true};
        }
        Bits acc(cod->cell_count());
        for (const Clause& cl : spec.clauses) {
            // on a circle the wrap edge reaches past the seam: test the
            // clause against both representatives of the cell interval
            for (int k = 0; k <= (dom->is_circle() ? 1 : 0); ++k) {
                PtInterval iv = cellIv;
                Rat shift = Rat(-k) * (dom->is_circle() ? dom->circumference() : Rat(0));
                iv.lo = iv.lo + shift;
                iv.hi = iv.hi + shift;
                PtInterval isect = intersect(clause_interval(cl), iv);
                if (!isect.empty()) accumulate_value(acc, cod, cl, isect);
            }
        }
        f.set_value(c, std::move(acc));
    }
    return f;
}

CombMap affine_map(const GridPtr& g, const Rat& a, const Rat& b) {
    // x -> a*x + b is continuous, so the cell enclosure is just the image
    // interval of each closed cell (no clause seams to respect)
    CombMap f(g, g);
    for (int c = 0; c < g->cell_count(); ++c) {
        Rat lo, hi;
        if (Grid1D::is_vertex(c)) {
            lo = hi = g->vertex_coord(Grid1D::index_of(c));
        } else {
            lo = g->edge_lo(Grid1D::index_of(c));
            hi = g->edge_hi(Grid1D::index_of(c));
        }
        Rat y0 = a * lo + b, y1 = a * hi + b;
        if (y1 < y0) std::swap(y0, y1);
        f.set_value(c, interval_enclosure(g, y0, y1).cells);
    }
    return f;
}

CombMap from_samples(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                     const GridPtr& g) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("sample point/value count mismatch");
    CombMap f(g, g);
    std::vector<Bits> acc(g->cell_count(), Bits(g->cell_count()));
    std::vector<bool> has(g->cell_count(), false);
    for (size_t j = 0; j < xs.size(); ++j) {
        Cell at = g->locate(xs[j]);
        // cells whose closure contains the sample point
        std::vector<Cell> carriers{at};
        if (Grid1D::is_vertex(at))
            for (int e : g->vertex_cofaces(Grid1D::index_of(at)))
                carriers.push_back(Grid1D::edge_cell(e));
        // smallest cell neighborhood of the sampled value
        Cell vc = g->locate(ys[j]);
        Bits nbhd = Grid1D::is_vertex(vc)
                        ? closed_star(point_enclosure(g, ys[j])).cells
                        : point_enclosure(g, ys[j]).cells;
        for (Cell c : carriers) { acc[c] |= nbhd; has[c] = true; }
    }
    for (int c = 0; c < g->cell_count(); ++c)
        if (has[c]) f.set_value(c, std::move(acc[c]));
    // closing up along faces: an unsampled vertex strictly between defined
    // edges inherits the union of its cofaces' values
    for (int v = 0; v < g->vertex_count(); ++v) {
        Cell vc = Grid1D::vertex_cell(v);
        if (f.defined(vc)) continue;
        Bits u(g->cell_count());
        bool all = true;
        for (int e : g->vertex_cofaces(v)) {
            Cell ec = Grid1D::edge_cell(e);
            if (f.defined(ec)) u |= f.value(ec);
            else all = false;
        }
        if (all) f.set_value(vc, std::move(u));
    }
    return f;
}

// ---------------------------------------------------------------------------
// images

ImageReport image_report(const CombMap& f, const CubSet& a) {
    if (a.grid.get() != f.dom().get())
        throw std::invalid_argument("set not on the map's domain grid");
    Bits out(f.cod()->cell_count());
    ImageReport rep{CubSet::empty(f.cod()), {}};
    for (Cell c : a.cells.members()) {
        if (!f.defined(c)) { rep.undefined_cells.push_back(c); continue; }
        out |= f.value(c);
    }
    rep.image = CubSet(f.cod(), std::move(out));
    return rep;
}

CubSet image(const CombMap& f, const CubSet& a) {
    return image_report(f, a).image;
}

CubSet preimage_large(const CombMap& f, const CubSet& b) {
    if (b.grid.get() != f.cod().get())
        throw std::invalid_argument("set not on the map's codomain grid");
    Bits out(f.dom()->cell_count());
    for (int c = 0; c < f.dom()->cell_count(); ++c)
        if (f.defined(c) && f.value(c).intersects(b.cells)) out.set(c);
    return CubSet(f.dom(), std::move(out));
}

CubSet preimage_small(const CombMap& f, const CubSet& b) {
    if (b.grid.get() != f.cod().get())
        throw std::invalid_argument("set not on the map's codomain grid");
    Bits out(f.dom()->cell_count());
    for (int c = 0; c < f.dom()->cell_count(); ++c)
        if (f.defined(c) && f.value(c).subset_of(b.cells)) out.set(c);
    return CubSet(f.dom(), std::move(out));
}

CubSet f_boundary(const CombMap& f, const CubSet& a) {
    CubSet fa = image(f, a);
    Region diff = set_difference(fa, a);
    CubSet cl = closure(diff);
    return cl & a;  // a is closed, so cl a = a
}

CombMap compose(const CombMap& g, const CombMap& f) {
    if (f.cod().get() != g.dom().get())
        throw std::invalid_argument("compose: grids do not line up");
    CombMap out(f.dom(), g.cod());
    for (int c = 0; c < f.dom()->cell_count(); ++c) {
        if (!f.defined(c)) continue;
        Bits acc(g.cod()->cell_count());
        bool exits = false;
        for (Cell d : f.value(c).members()) {
            if (!g.defined(d)) { exits = true; break; }
            acc |= g.value(d);
        }
        if (exits)
            throw std::invalid_argument("compose: value of " +
                                        f.dom()->cell_name(c) +
                                        " exits the effective domain");
        out.set_value(c, std::move(acc));
    }
    return out;
}

CombMap restrict_map(const CombMap& f, const CubSet& a) {
    if (a.grid.get() != f.dom().get())
        throw std::invalid_argument("restrict: set not on the domain grid");
    CombMap out(f.dom(), f.cod());
    for (Cell c : a.cells.members())
        if (f.defined(c)) out.set_value(c, f.value(c));
    return out;
}

CombMap transfer_map(const CombMap& f, const Grid1D::Subdivision& sub) {
    if (f.dom().get() != f.cod().get())
        throw std::invalid_argument("transfer_map expects an endomap");
    const GridPtr& fine = sub.grid;
    // smallest old cell containing each new cell
    std::vector<Cell> carrier(fine->cell_count(), -1);
    for (int oc = 0; oc < f.dom()->cell_count(); ++oc)
        for (Cell nc : sub.transfer[oc])
            if (Grid1D::is_vertex(oc) || carrier[nc] < 0) carrier[nc] = oc;
    CombMap out(fine, fine);
    for (int nc = 0; nc < fine->cell_count(); ++nc) {
        Cell oc = carrier[nc];
        if (oc < 0 || !f.defined(oc)) continue;
        out.set_value(nc, transfer_bits(sub, f.value(oc)));
    }
    return out;
}

namespace {

struct Arc {  // closed interval in (possibly unreduced) grid coordinates
    Rat lo, hi;
};

// the realization of a connected nonempty closed cell set, as one interval
Arc bits_to_arc(const GridPtr& g, const Bits& b) {
    auto ivs = Region(g, b).intervals();
    if (ivs.size() != 1)
        throw std::invalid_argument("value is not a single interval/arc");
    return {ivs[0].lo, ivs[0].hi};
}

}  // namespace

CombMap convex_family(const CombMap& f0, const CombMap& f1, const Rat& t) {
    if (f0.dom().get() != f1.dom().get() || f0.cod().get() != f1.cod().get())
        throw std::invalid_argument("family endpoints on different grids");
    if (t < Rat(0) || Rat(1) < t)
        throw std::invalid_argument("family parameter outside [0,1]");
    const GridPtr& g = f0.dom();
    if (t == Rat(0)) return f0;
    if (t == Rat(1)) return f1;
    CombMap out(g, f0.cod());
    const GridPtr& cod = f0.cod();
    for (int c = 0; c < g->cell_count(); ++c) {
        if (!f0.defined(c) || !f1.defined(c)) continue;
        // disconnected values (closed-up vertices of sampled maps) are
        // rebuilt by the closing-up pass below instead of hulled directly
        auto ivs0 = Region(cod, f0.value(c)).intervals();
        auto ivs1 = Region(cod, f1.value(c)).intervals();
        if (Grid1D::is_vertex(c) && (ivs0.size() != 1 || ivs1.size() != 1))
            continue;
        Arc v = bits_to_arc(cod, f0.value(c));
        Arc u = bits_to_arc(cod, f1.value(c));
        if (cod->is_circle()) {
            // lift u near v: shift by the multiple of C closest to the centers
            Rat C = cod->circumference();
            Rat cv = (v.lo + v.hi) / Rat(2), cu = (u.lo + u.hi) / Rat(2);
            Rat d = (cv - cu) / C;
            long long k = (2 * d.num + d.den) / (2 * d.den);  // round
            if (2 * d.num + d.den < 0) k = -((-2 * d.num - d.den) / (2 * d.den) + 1);
            u.lo = u.lo + Rat(k) * C;
            u.hi = u.hi + Rat(k) * C;
        }
        Rat lo = t * u.lo + (Rat(1) - t) * v.lo;
        Rat hi = t * u.hi + (Rat(1) - t) * v.hi;
        if (cod->is_circle()) {
            Rat maxw = Rat(0);
            for (int e = 0; e < cod->edge_count(); ++e) {
                Rat w = cod->edge_hi(e) - cod->edge_lo(e);
                if (maxw < w) maxw = w;
            }
            if (cod->circumference() / Rat(2) + maxw < hi - lo)
                throw std::invalid_argument(
                    "family hull exceeds half the circle: value not acyclic");
        }
        out.set_value(c, interval_enclosure(cod, lo, hi).cells);
    }
    // closing up along faces, as for sampled maps
    for (int v = 0; v < g->vertex_count(); ++v) {
        Cell vc = Grid1D::vertex_cell(v);
        if (out.defined(vc)) continue;
        Bits u(cod->cell_count());
        bool all = true;
        for (int e : g->vertex_cofaces(v)) {
            Cell ec = Grid1D::edge_cell(e);
            if (out.defined(ec)) u |= out.value(ec);
            else all = false;
        }
        if (all) out.set_value(vc, std::move(u));
    }
    return out;
}

}  // namespace conley
