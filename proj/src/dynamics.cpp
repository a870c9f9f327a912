#include "conley/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace conley {

TransitionGraph build_graph(const CombMap& f, const CubSet& n) {
    if (n.grid.get() != f.dom().get())
        throw std::invalid_argument("N not on the map's grid");
    TransitionGraph g;
    g.grid = n.grid;
    g.cells = n.cells.members();
    g.local.assign(n.grid->cell_count(), -1);
    for (int i = 0; i < (int)g.cells.size(); ++i) g.local[g.cells[i]] = i;
    g.out.resize(g.cells.size());
    g.in.resize(g.cells.size());
    for (int i = 0; i < (int)g.cells.size(); ++i) {
        Cell c = g.cells[i];
        if (!f.defined(c)) continue;
        Bits hit = f.value(c) & n.cells;
        for (Cell d : hit.members()) {
            int j = g.local[d];
            g.out[i].push_back(j);
            g.in[j].push_back(i);
        }
    }
    return g;
}

namespace {

// local indices lying in a cycle (nontrivial SCC or a self-loop)
std::vector<char> recurrent_nodes(const TransitionGraph& g) {
    int n = g.size();
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> onstack(n, 0);
    std::vector<int> stack;
    std::vector<int> comp_size;
    int counter = 0;

    // iterative tarjan
    struct Frame { int v; size_t ei; };
    for (int root = 0; root < n; ++root) {
        if (idx[root] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = 1;
        while (!call.empty()) {
            auto& fr = call.back();
            if (fr.ei < g.out[fr.v].size()) {
                int w = g.out[fr.v][fr.ei++];
                if (idx[w] < 0) {
                    idx[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = 1;
                    call.push_back({w, 0});
                } else if (onstack[w]) {
                    low[fr.v] = std::min(low[fr.v], idx[w]);
                }
            } else {
                int v = fr.v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == idx[v]) {
                    int cid = (int)comp_size.size(), sz = 0;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        onstack[w] = 0;
                        comp[w] = cid;
                        ++sz;
                    } while (w != v);
                    comp_size.push_back(sz);
                }
            }
        }
    }
    std::vector<char> rec(n, 0);
    for (int v = 0; v < n; ++v) {
        if (comp_size[comp[v]] > 1) { rec[v] = 1; continue; }
        for (int w : g.out[v])
            if (w == v) { rec[v] = 1; break; }
    }
    return rec;
}

Bits closure_reach(const TransitionGraph& g, const std::vector<char>& seed,
                   const std::vector<std::vector<int>>& adj) {
    int n = g.size();
    std::vector<char> vis = seed;
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (vis[i]) queue.push_back(i);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : adj[v])
            if (!vis[w]) { vis[w] = 1; queue.push_back(w); }
    }
    Bits out(g.grid->cell_count());
    for (int i = 0; i < n; ++i)
        if (vis[i]) out.set(g.cells[i]);
    return out;
}

}  // namespace

Bits inv_plus_raw(const TransitionGraph& g) {
    // a cell has an infinite forward walk iff it reaches a cycle
    return closure_reach(g, recurrent_nodes(g), g.in);
}

Bits inv_minus_raw(const TransitionGraph& g) {
    return closure_reach(g, recurrent_nodes(g), g.out);
}

Bits inv_raw(const TransitionGraph& g) {
    return inv_plus_raw(g) & inv_minus_raw(g);
}

CubSet inv_plus(const CombMap& f, const CubSet& n) {
    return CubSet(n.grid, inv_plus_raw(build_graph(f, n)));
}
CubSet inv_minus(const CombMap& f, const CubSet& n) {
    return CubSet(n.grid, inv_minus_raw(build_graph(f, n)));
}
CubSet inv(const CombMap& f, const CubSet& n) {
    return CubSet(n.grid, inv_raw(build_graph(f, n)));
}

CubSet reach_forward(const CombMap& f, const CubSet& n, const CubSet& a) {
    if (!a.cells.subset_of(n.cells))
        throw std::invalid_argument("reach_forward: A must lie in N");
    Bits r = a.cells;
    for (;;) {
        Bits grown = r;
        for (Cell c : r.members())
            if (f.defined(c)) grown |= f.value(c) & n.cells;
        // keep the result closed; faces may enable further growth
        CubSet cl(n.grid, std::move(grown));
        if (cl.cells == r) return cl;
        r = cl.cells;
    }
}

static Verdict check_inside_interior(const CubSet& what, const CubSet& n) {
    Region in = interior(n);
    for (Cell c : what.cells.members())
        if (!in.atoms.get(c)) return {false, c};
    return {true, std::nullopt};
}

Verdict is_isolating(const CombMap& f, const CubSet& n) {
    return check_inside_interior(inv(f, n), n);
}

Verdict is_strongly_isolating(const CombMap& f, const CubSet& n) {
    CubSet iv = inv(f, n);
    return check_inside_interior(iv | image(f, iv), n);
}

Verdict is_isolating_block(const CombMap& f, const CubSet& n) {
    CubSet k = n & image(f, n) & preimage_large(f, n);
    return check_inside_interior(k, n);
}

}  // namespace conley
