#pragma once

// Embedded bipartite graphs on two skew lines.
//
// Only the linear order of the vertices along the upper line U and the
// lower line L matters for the boundary link, so a graph is stored as two
// vertex counts plus an edge list of (upper, lower) index pairs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace bglink {

using Rational = boost::rational<std::int64_t>;

enum class Side { upper, lower };

inline Side opposite(Side s) { return s == Side::upper ? Side::lower : Side::upper; }

struct Edge {
    int u = 0;  // index on the upper line
    int l = 0;  // index on the lower line

    friend bool operator==(const Edge&, const Edge&) = default;
    // l-major, then u
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.l != b.l ? a.l < b.l : a.u < b.u;
    }
};

class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Builds a graph with `p` upper and `q` lower vertices. Edges are
    /// sorted; duplicates and out-of-range indices are rejected. The only
    /// graph allowed to have p = 0 or q = 0 is the empty graph (0, 0, {}).
    BipartiteGraph(int p, int q, std::vector<Edge> edges) : p_(p), q_(q), edges_(std::move(edges)) {
        if (p_ < 0 || q_ < 0)
            throw std::invalid_argument("vertex counts must be non-negative");
        if ((p_ == 0) != (q_ == 0))
            throw std::invalid_argument("only the empty graph may have a zero vertex count");
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (e.u < 0 || e.u >= p_ || e.l < 0 || e.l >= q_)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.l) +
                                            ") out of range");
            if (i > 0 && edges_[i - 1] == e)
                throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.l) + ")");
        }
    }

    int p() const { return p_; }
    int q() const { return q_; }
    int count(Side s) const { return s == Side::upper ? p_ : q_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }

    bool has_edge(int u, int l) const {
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, l});
    }

    std::vector<int> degrees(Side s) const {
        std::vector<int> d(static_cast<std::size_t>(count(s)), 0);
        for (const Edge& e : edges_)
            ++d[static_cast<std::size_t>(s == Side::upper ? e.u : e.l)];
        return d;
    }

    int nonisolated(Side s) const {
        auto d = degrees(s);
        return static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x > 0; }));
    }

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    int p_ = 0;
    int q_ = 0;
    std::vector<Edge> edges_;
};

/// A vertex together with its incident edges; teeth are the opposite endpoints.
struct Fork {
    int apex = 0;
    std::vector<int> teeth;  // strictly increasing

    friend bool operator==(const Fork&, const Fork&) = default;
};

/// Weakly decreasing sequence a1 >= a2 >= ... >= an >= 1 (a Young diagram).
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw std::invalid_argument("partition must be nonempty");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return static_cast<int>(parts_.size()); }
    int cells() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

enum class ChildOrder { before, after };

/// Splits the fork at `vertex` on `side`: the first `position` teeth form one
/// child, the rest the other. With `before`, the first child keeps the
/// original slot and the second child is inserted right after it.
struct SplitMove {
    Side side = Side::lower;
    int vertex = 0;
    int position = 1;
    ChildOrder order = ChildOrder::before;

    friend bool operator==(const SplitMove&, const SplitMove&) = default;
};

// ---------------------------------------------------------------------------
// Constructors

inline BipartiteGraph complete_graph(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("complete_graph needs p, q >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(p * q));
    for (int l = 0; l < q; ++l)
        for (int u = 0; u < p; ++u)
            edges.push_back({u, l});
    return {p, q, std::move(edges)};
}

/// Γ(a1,...,an): the k-th lower fork reaches the first a_k upper vertices.
inline BipartiteGraph twisted_torus_graph(const Partition& a) {
    std::vector<Edge> edges;
    for (int l = 0; l < a.size(); ++l)
        for (int u = 0; u < a.parts()[static_cast<std::size_t>(l)]; ++u)
            edges.push_back({u, l});
    return {a.parts().front(), a.size(), std::move(edges)};
}

/// Conjugate partition: b_j = #{k : a_k >= j}.
inline Partition dual_partition(const Partition& a) {
    std::vector<int> b(static_cast<std::size_t>(a.parts().front()), 0);
    for (int part : a.parts())
        for (int j = 0; j < part; ++j)
            ++b[static_cast<std::size_t>(j)];
    return Partition(std::move(b));
}

inline std::vector<Fork> forks_of(const BipartiteGraph& g, Side side) {
    std::vector<std::vector<int>> teeth(static_cast<std::size_t>(g.count(side)));
    for (const Edge& e : g.edges()) {
        if (side == Side::lower)
            teeth[static_cast<std::size_t>(e.l)].push_back(e.u);
        else
            teeth[static_cast<std::size_t>(e.u)].push_back(e.l);
    }
    std::vector<Fork> forks;
    for (std::size_t v = 0; v < teeth.size(); ++v) {
        if (teeth[v].empty())
            continue;
        std::sort(teeth[v].begin(), teeth[v].end());
        forks.push_back({static_cast<int>(v), std::move(teeth[v])});
    }
    return forks;
}

// ---------------------------------------------------------------------------
// Symmetries

/// Turns the picture upside down: the upper line becomes the lower one.
inline BipartiteGraph transpose_graph(const BipartiteGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.push_back({e.l, e.u});
    return {g.q(), g.p(), std::move(edges)};
}

/// Reverses the order on both lines at once (a half turn of the picture).
inline BipartiteGraph reverse_lines(const BipartiteGraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.push_back({g.p() - 1 - e.u, g.q() - 1 - e.l});
    return {g.p(), g.q(), std::move(edges)};
}

/// Raw byte encoding: p, q, then the sorted edge list, 16-bit big endian.
inline std::string encode_graph(const BipartiteGraph& g) {
    std::string out;
    out.reserve(4 + 4 * g.edges().size());
    auto put = [&out](int v) {
        out.push_back(static_cast<char>((v >> 8) & 0xff));
        out.push_back(static_cast<char>(v & 0xff));
    };
    put(g.p());
    put(g.q());
    for (const Edge& e : g.edges()) {
        put(e.l);
        put(e.u);
    }
    return out;
}

/// Minimum encoding over {id, reverse both lines, transpose, transpose∘reverse}.
/// Single-line reversal is deliberately not part of the group.
inline std::string canonical_code(const BipartiteGraph& g) {
    const BipartiteGraph r = reverse_lines(g);
    std::string best = encode_graph(g);
    for (const BipartiteGraph& img : {r, transpose_graph(g), transpose_graph(r)})
        best = std::min(best, encode_graph(img));
    return best;
}

// ---------------------------------------------------------------------------
// Structure

namespace detail {

// Drops isolated vertices, keeping line order.
inline BipartiteGraph compact(int p, int q, const std::vector<Edge>& edges) {
    std::vector<int> up(static_cast<std::size_t>(p), -1), lo(static_cast<std::size_t>(q), -1);
    for (const Edge& e : edges) {
        up[static_cast<std::size_t>(e.u)] = 0;
        lo[static_cast<std::size_t>(e.l)] = 0;
    }
    int np = 0, nq = 0;
    for (int& x : up)
        if (x == 0) x = np++;
    for (int& x : lo)
        if (x == 0) x = nq++;
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges)
        out.push_back({up[static_cast<std::size_t>(e.u)], lo[static_cast<std::size_t>(e.l)]});
    return {np, nq, std::move(out)};
}

// Component label per edge (union-find over p + q vertices).
inline std::vector<int> edge_components(const BipartiteGraph& g, int& n_components) {
    std::vector<int> parent(static_cast<std::size_t>(g.p() + g.q()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : g.edges()) {
        int a = find(e.u), b = find(g.p() + e.l);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> label(parent.size(), -1), result;
    result.reserve(g.edges().size());
    n_components = 0;
    // Edges are l-major, so components are numbered by their first lower vertex.
    for (const Edge& e : g.edges()) {
        int root = find(e.u);
        if (label[static_cast<std::size_t>(root)] < 0)
            label[static_cast<std::size_t>(root)] = n_components++;
        result.push_back(label[static_cast<std::size_t>(root)]);
    }
    return result;
}

}  // namespace detail

/// Connected components with isolated vertices dropped and line order kept.
inline std::vector<BipartiteGraph> connected_components(const BipartiteGraph& g) {
    int n = 0;
    const auto label = detail::edge_components(g, n);
    std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < label.size(); ++i)
        parts[static_cast<std::size_t>(label[i])].push_back(g.edges()[i]);
    std::vector<BipartiteGraph> out;
    out.reserve(parts.size());
    for (const auto& edges : parts)
        out.push_back(detail::compact(g.p(), g.q(), edges));
    return out;
}

inline bool is_connected(const BipartiteGraph& g) {
    int n = 0;
    detail::edge_components(g, n);
    return n == 1;
}

/// Positions k on `side` (1 <= k < count) such that no connected component
/// has vertices on both sides of the gap between k-1 and k.
inline std::vector<int> line_cuts(const BipartiteGraph& g, Side side) {
    int n = 0;
    const auto label = detail::edge_components(g, n);
    std::vector<int> lo(static_cast<std::size_t>(n), g.count(side)), hi(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < label.size(); ++i) {
        const int v = side == Side::upper ? g.edges()[i].u : g.edges()[i].l;
        auto c = static_cast<std::size_t>(label[i]);
        lo[c] = std::min(lo[c], v);
        hi[c] = std::max(hi[c], v);
    }
    // diff[k] counts components whose span crosses the gap before k
    std::vector<int> diff(static_cast<std::size_t>(g.count(side)) + 1, 0);
    for (std::size_t c = 0; c < lo.size(); ++c) {
        ++diff[static_cast<std::size_t>(lo[c]) + 1];
        --diff[static_cast<std::size_t>(hi[c]) + 1];
    }
    std::vector<int> cuts;
    int open = 0;
    for (int k = 1; k < g.count(side); ++k) {
        open += diff[static_cast<std::size_t>(k)];
        if (open == 0)
            cuts.push_back(k);
    }
    return cuts;
}

/// Splits along line cuts, recursively and on both lines, until no cut is
/// left. Each piece is compacted. Pieces separated by a cut bound split
/// sublinks; components that interleave on both lines stay together since
/// their ribbons can link. Isolated vertices are ignored.
inline std::vector<BipartiteGraph> split_pieces(const BipartiteGraph& g) {
    if (g.empty())
        return {};
    const BipartiteGraph c = detail::compact(g.p(), g.q(), g.edges());
    for (Side side : {Side::upper, Side::lower}) {
        const auto cuts = line_cuts(c, side);
        if (cuts.empty())
            continue;
        std::vector<std::vector<Edge>> parts(cuts.size() + 1);
        for (const Edge& e : c.edges()) {
            const int v = side == Side::upper ? e.u : e.l;
            const auto slot = std::upper_bound(cuts.begin(), cuts.end(), v) - cuts.begin();
            parts[static_cast<std::size_t>(slot)].push_back(e);
        }
        std::vector<BipartiteGraph> out;
        for (const auto& edges : parts) {
            if (edges.empty())
                continue;
            for (auto& piece : split_pieces(BipartiteGraph(c.p(), c.q(), edges)))
                out.push_back(std::move(piece));
        }
        return out;
    }
    return {c};
}

struct ReduceResult {
    BipartiteGraph graph;
    int unknots = 0;  // split unknot components removed along the way
};

/// Retracts every degree-1 vertex whose neighbour has degree >= 2, until none
/// is left. Components that shrink to a single edge are disks; they are
/// removed and counted as split unknots. Isolated vertices are dropped.
inline ReduceResult reduce(const BipartiteGraph& g) {
    std::vector<int> du = g.degrees(Side::upper), dl = g.degrees(Side::lower);
    std::vector<char> alive(g.edges().size(), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            if (!alive[i])
                continue;
            const Edge& e = g.edges()[i];
            int& a = du[static_cast<std::size_t>(e.u)];
            int& b = dl[static_cast<std::size_t>(e.l)];
            if ((a == 1 && b >= 2) || (b == 1 && a >= 2)) {
                alive[i] = 0;
                --a;
                --b;
                changed = true;
            }
        }
    }
    ReduceResult result;
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!alive[i])
            continue;
        const Edge& e = g.edges()[i];
        if (du[static_cast<std::size_t>(e.u)] == 1 && dl[static_cast<std::size_t>(e.l)] == 1)
            ++result.unknots;
        else
            kept.push_back(e);
    }
    result.graph = detail::compact(g.p(), g.q(), kept);
    return result;
}

inline bool is_reduced(const BipartiteGraph& g) {
    auto r = reduce(g);
    return r.unknots == 0 && r.graph == g;
}

/// Euler characteristic of the ribbon surface: non-isolated vertices minus
/// edges. Leaf retraction leaves it unchanged, and on a reduced graph it is
/// the maximal Euler characteristic of the boundary link.
inline int euler_characteristic(const BipartiteGraph& g) {
    if (g.empty())
        throw std::invalid_argument("euler_characteristic of the empty graph");
    return g.nonisolated(Side::upper) + g.nonisolated(Side::lower) - g.edge_count();
}

/// e / (p q) over non-isolated vertices.
inline Rational density(const BipartiteGraph& g) {
    if (g.empty())
        throw std::invalid_argument("density of the empty graph");
    const std::int64_t pq = std::int64_t{g.nonisolated(Side::upper)} * g.nonisolated(Side::lower);
    return {g.edge_count(), pq};
}

/// 2/b - chi/b^2, the density bound for a knot of braid index b.
inline Rational density_upper_bound(int braid_index, int chi) {
    if (braid_index < 1)
        throw std::invalid_argument("braid index must be positive");
    const std::int64_t b = braid_index;
    return Rational(2, b) - Rational(chi, b * b);
}

/// True iff every lower fork reaches a block of consecutive upper vertices.
inline bool is_positive_complete(const BipartiteGraph& g) {
    for (const Fork& f : forks_of(g, Side::lower))
        if (f.teeth.back() - f.teeth.front() + 1 != static_cast<int>(f.teeth.size()))
            return false;
    return true;
}

struct Biclique {
    std::vector<int> upper;
    std::vector<int> lower;
};

/// Looks for `a` upper and `b` lower vertices that are pairwise joined.
/// Upper subsets are enumerated; the lower side is then greedy, since any
/// lower vertex adjacent to the whole upper subset can be used.
inline std::optional<Biclique> find_complete_subgraph(const BipartiteGraph& g, int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("biclique sizes must be non-negative");
    if (a > g.p() || b > g.q())
        return std::nullopt;
    if (g.p() > 62)
        throw std::invalid_argument("biclique search supports at most 62 upper vertices");
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(g.q()), 0);
    for (const Edge& e : g.edges())
        nbr[static_cast<std::size_t>(e.l)] |= std::uint64_t{1} << e.u;

    std::vector<int> pick(static_cast<std::size_t>(a));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint64_t mask = 0;
        for (int u : pick)
            mask |= std::uint64_t{1} << u;
        std::vector<int> lower;
        for (int l = 0; l < g.q() && static_cast<int>(lower.size()) < b; ++l)
            if ((nbr[static_cast<std::size_t>(l)] & mask) == mask)
                lower.push_back(l);
        if (static_cast<int>(lower.size()) == b)
            return Biclique{pick, lower};
        // next a-subset of {0..p-1} in lexicographic order
        int i = a - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == g.p() - a + i)
            --i;
        if (i < 0)
            return std::nullopt;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < a; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline bool contains_complete_subgraph(const BipartiteGraph& g, int a, int b) {
    return find_complete_subgraph(g, a, b).has_value();
}

// ---------------------------------------------------------------------------
// Moves

/// Removes one ribbon without reducing.
inline BipartiteGraph cut_edge(const BipartiteGraph& g, int u, int l) {
    if (!g.has_edge(u, l))
        throw std::invalid_argument("no edge (" + std::to_string(u) + "," + std::to_string(l) + ")");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    for (const Edge& e : g.edges())
        if (!(e.u == u && e.l == l))
            edges.push_back(e);
    return {g.p(), g.q(), std::move(edges)};
}

/// Ribbon cut followed by reduction.
inline ReduceResult delete_edge(const BipartiteGraph& g, int u, int l) {
    return reduce(cut_edge(g, u, l));
}

namespace detail {

inline BipartiteGraph split_lower(const BipartiteGraph& g, int vertex, int position, ChildOrder order) {
    if (vertex < 0 || vertex >= g.q())
        throw std::invalid_argument("split vertex out of range");
    std::vector<int> teeth;
    for (const Edge& e : g.edges())
        if (e.l == vertex)
            teeth.push_back(e.u);  // already ascending: edges are l-major
    const int k = static_cast<int>(teeth.size());
    if (k < 2)
        throw std::invalid_argument("fork at vertex " + std::to_string(vertex) + " has fewer than two teeth");
    if (position < 1 || position > k - 1)
        throw std::invalid_argument("split position must lie in [1, " + std::to_string(k - 1) + "]");

    const int first_slot = order == ChildOrder::before ? vertex : vertex + 1;
    const int second_slot = order == ChildOrder::before ? vertex + 1 : vertex;
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        if (e.l < vertex) {
            edges.push_back(e);
        } else if (e.l > vertex) {
            edges.push_back({e.u, e.l + 1});
        } else {
            const auto rank = std::lower_bound(teeth.begin(), teeth.end(), e.u) - teeth.begin();
            edges.push_back({e.u, rank < position ? first_slot : second_slot});
        }
    }
    return {g.p(), g.q() + 1, std::move(edges)};
}

}  // namespace detail

/// Fork splitting. Upper splits are computed as transpose ∘ lower split ∘ transpose.
inline BipartiteGraph split_fork(const BipartiteGraph& g, const SplitMove& m) {
    if (m.side == Side::lower)
        return detail::split_lower(g, m.vertex, m.position, m.order);
    return transpose_graph(detail::split_lower(transpose_graph(g), m.vertex, m.position, m.order));
}

}  // namespace bglink
