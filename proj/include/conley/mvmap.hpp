#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "conley/set.hpp"

namespace conley {

/// One clause of a piecewise map definition: an interval of the domain and
/// the value taken on it. Values are constant point/interval sets or a thin
/// affine image a*x + b.
struct Clause {
    Rat lo, hi;
    bool lo_closed = true, hi_closed = true;

    struct Affine { Rat a, b; };
    using Value = std::variant<std::vector<Rat>,                  // points
                               std::vector<std::pair<Rat, Rat>>,  // intervals
                               Affine>;
    Value value;
};

struct PiecewiseSpec {
    std::vector<Clause> clauses;
};

struct AcyclicityReport {
    struct Entry { Cell cell; std::string reason; };
    std::vector<Entry> failures;
    bool all_ok() const { return failures.empty(); }
};

/// Combinatorial multivalued map: each domain cell carries a closed value
/// set in the codomain, or is outside the effective domain.
class CombMap {
  public:
    CombMap(GridPtr dom, GridPtr cod)
        : dom_(std::move(dom)), cod_(std::move(cod)),
          values_(dom_->cell_count()) {}

    const GridPtr& dom() const { return dom_; }
    const GridPtr& cod() const { return cod_; }

    bool defined(Cell c) const { return values_[c].has_value(); }
    const Bits& value(Cell c) const { return *values_[c]; }
    void set_value(Cell c, Bits b) { values_[c] = std::move(b); }
    void clear_value(Cell c) { values_[c].reset(); }

    CubSet value_set(Cell c) const { return CubSet(cod_, value(c)); }
    CubSet effective_domain() const;
    bool total() const;
    bool face_monotone() const;

    AcyclicityReport check_acyclic_values() const;

  private:
    GridPtr dom_, cod_;
    std::vector<std::optional<Bits>> values_;
};

/// Cell enclosure of a piecewise map: value(cell) is the smallest CubSet
/// containing the union of clause values over the closed cell.
CombMap from_piecewise(const PiecewiseSpec& spec, const GridPtr& dom,
                       const GridPtr& cod);
inline CombMap from_piecewise(const PiecewiseSpec& spec, const GridPtr& g) {
    return from_piecewise(spec, g, g);
}

/// Thin enclosure of x -> a*x + b on one grid.
CombMap affine_map(const GridPtr& g, const Rat& a, const Rat& b);

/// Smallest combinatorial enclosure of a finite sample set: a cell's value
/// collects the smallest closed cell neighborhoods of the values sampled in
/// the cell's closure. Cells whose closure holds no sample stay undefined;
/// an undefined vertex between defined edges then inherits the union of its
/// cofaces' values (closing up along faces).
CombMap from_samples(const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                     const GridPtr& g);

struct ImageReport {
    CubSet image;
    std::vector<Cell> undefined_cells;  // cells of A outside the effective domain
};

CubSet image(const CombMap& f, const CubSet& a);
ImageReport image_report(const CombMap& f, const CubSet& a);
/// Large counter image: cells whose value meets b (face-closed).
CubSet preimage_large(const CombMap& f, const CubSet& b);
/// Small counter image: cells whose value is contained in b (face-closed).
CubSet preimage_small(const CombMap& f, const CubSet& b);

/// cl A ∩ cl(F(A) \ A)
CubSet f_boundary(const CombMap& f, const CubSet& a);

CombMap compose(const CombMap& g, const CombMap& f);
CombMap restrict_map(const CombMap& f, const CubSet& a);

/// Transfers a map along a subdivision of its (shared) domain/codomain grid.
CombMap transfer_map(const CombMap& f, const Grid1D::Subdivision& sub);

/// Convex interpolation value_t = hull{ t*u + (1-t)*v : u in F1, v in F0 }
/// computed cellwise on interval values; t = 0 and t = 1 reproduce the
/// inputs exactly. On a circle the hull uses the shortest covering arc and
/// refuses hulls wider than half the circle plus one cell.
CombMap convex_family(const CombMap& f0, const CombMap& f1, const Rat& t);

}  // namespace conley
