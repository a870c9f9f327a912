#pragma once

#include <optional>
#include <vector>

#include "conley/mvmap.hpp"

namespace conley {

/// Directed graph on the cells of N: an edge c -> d whenever d is a cell of
/// value(c) ∩ N. Cells outside the effective domain are sinks.
struct TransitionGraph {
    GridPtr grid;
    std::vector<Cell> cells;          // cells of N, ascending
    std::vector<int> local;           // cell -> local index or -1
    std::vector<std::vector<int>> out;  // local adjacency
    std::vector<std::vector<int>> in;

    int size() const { return (int)cells.size(); }
};

TransitionGraph build_graph(const CombMap& f, const CubSet& n);

/// Invariant parts at graph level: cells admitting an infinite forward walk
/// (inv_plus), an infinite backward walk (inv_minus), or both (inv). The
/// *_raw variants return exactly those cells; inv/inv_plus/inv_minus return
/// their face closures as CubSets.
Bits inv_plus_raw(const TransitionGraph& g);
Bits inv_minus_raw(const TransitionGraph& g);
Bits inv_raw(const TransitionGraph& g);

CubSet inv_plus(const CombMap& f, const CubSet& n);
CubSet inv_minus(const CombMap& f, const CubSet& n);
CubSet inv(const CombMap& f, const CubSet& n);

/// Least closed R with A∩N ⊆ R and image(F,R)∩N ⊆ R (forward reachability
/// closure F_N^+ at cell level).
CubSet reach_forward(const CombMap& f, const CubSet& n, const CubSet& a);

struct Verdict {
    bool yes = false;
    std::optional<Cell> witness;  // offending cell when the answer is no
    explicit operator bool() const { return yes; }
};

/// Inv N ⊂ int N, tested against the point set of the closed Inv cells.
Verdict is_isolating(const CombMap& f, const CubSet& n);
/// Inv N ∪ F(Inv N) ⊂ int N.
Verdict is_strongly_isolating(const CombMap& f, const CubSet& n);
/// N ∩ F(N) ∩ F⁻¹(N) ⊂ int N.
Verdict is_isolating_block(const CombMap& f, const CubSet& n);

}  // namespace conley
