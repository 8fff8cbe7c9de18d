#pragma once

// Combinatorial adjacency: fork-splitting search from complete bipartite
// graphs, ribbon-cut (edge subset) enumeration and density estimates.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bglink/graph.hpp"
#include "bglink/invariants.hpp"

namespace bglink {

struct SearchBudget {
    std::size_t max_states = 100000;
    double max_seconds = 60.0;
};

struct SearchOptions {
    bool canonical_dedup = true;     // off: states are told apart by raw encoding
    bool reduced_dedup = true;       // states with equal leaf-retracted forms are merged
    bool summand_pruning = true;     // drop states with more split summands than the target
    bool link_dedup = true;          // keep one state per link hash and level
};

/// Replaying `moves` on θ_{p,q} gives `result`, whose fingerprint is
/// `matched`. Identification is at fingerprint level only.
struct AdjacencyCertificate {
    int source_p = 0;
    int source_q = 0;
    std::vector<SplitMove> moves;
    BipartiteGraph result;
    Fingerprint matched;
};

enum class SearchStatus {
    found,
    impossible,        // χ would have to decrease: definitive
    budget_exhausted,  // inconclusive
    not_found,         // every state at the target depth was checked; inconclusive
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::not_found;
    std::optional<AdjacencyCertificate> certificate;
    int depth = 0;  // χ(target) - χ(θ_{p,q})
    std::size_t states = 0;
};

/// Every (side, vertex, position, order) split of g: lower forks first,
/// then upper, each in line order.
inline std::vector<SplitMove> splitting_moves(const BipartiteGraph& g) {
    std::vector<SplitMove> moves;
    for (Side side : {Side::lower, Side::upper})
        for (const Fork& f : forks_of(g, side))
            for (int m = 1; m < static_cast<int>(f.teeth.size()); ++m)
                for (ChildOrder order : {ChildOrder::before, ChildOrder::after})
                    moves.push_back({side, f.apex, m, order});
    return moves;
}

inline BipartiteGraph replay(int p, int q, const std::vector<SplitMove>& moves) {
    BipartiteGraph g = complete_graph(p, q);
    for (const SplitMove& m : moves)
        g = split_fork(g, m);
    return g;
}

/// Breadth-first search over fork splittings of θ_{p,q} for a graph whose
/// fingerprint equals `target`. Each split raises χ by one, so the depth is
/// fixed in advance and levels never mix. Each level is expanded in order of
/// state key; among matches at the target depth the smallest key wins, which
/// makes the certificate independent of discovery order.
///
/// Below the target depth states are merged by the key of their leaf-retracted
/// form and, per level, by link hash; states with more split summands than
/// the target are dropped. Merging keeps the search small but incomplete, so
/// a miss is never a disproof.

namespace detail {

constexpr std::uint64_t kHashPrime = 2147483647;  // 2^31 - 1

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return a * b % kHashPrime;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1)
            r = mul_mod(r, a);
    return r;
}

inline std::uint64_t to_mod(std::int64_t x) {
    const auto m = static_cast<std::int64_t>(kHashPrime);
    return static_cast<std::uint64_t>(((x % m) + m) % m);
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kHashPrime - b;
}

inline std::uint64_t inv_mod(std::uint64_t a) {
    return pow_mod(a, kHashPrime - 2);
}

/// det(V - tV^T) mod the hash prime.
inline std::uint64_t pencil_mod(const SeifertMatrix& v, std::int64_t t) {
    const int n = v.size();
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    auto at = [&a, n](int i, int j) -> std::uint64_t& { return a[static_cast<std::size_t>(i * n + j)]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            at(i, j) = to_mod(v(i, j) - t * v(j, i));
    std::uint64_t det = 1;
    for (int k = 0; k < n; ++k) {
        int r = k;
        while (r < n && at(r, k) == 0)
            ++r;
        if (r == n)
            return 0;
        if (r != k) {
            for (int j = 0; j < n; ++j)
                std::swap(at(k, j), at(r, j));
            det = kHashPrime - det;
        }
        det = mul_mod(det, at(k, k));
        const std::uint64_t inv = inv_mod(at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const std::uint64_t f = mul_mod(at(i, k), inv);
            if (f == 0)
                continue;
            for (int j = k; j < n; ++j)
                at(i, j) = sub_mod(at(i, j), mul_mod(f, at(k, j)));
        }
    }
    return det % kHashPrime;
}

/// Coefficients of det(V - tV^T) mod the hash prime, trimmed at both ends
/// and sign-folded, i.e. the Alexander polynomial up to units.
inline std::vector<std::uint64_t> alexander_mod(const SeifertMatrix& v) {
    const int n = v.size();
    std::vector<std::uint64_t> xs, dd;
    for (int t = 0; t <= n; ++t) {
        xs.push_back(static_cast<std::uint64_t>(t));
        dd.push_back(pencil_mod(v, t));
    }
    const std::size_t m = xs.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = mul_mod(sub_mod(dd[i], dd[i - 1]), inv_mod(sub_mod(xs[i], xs[i - level])));
    std::vector<std::uint64_t> poly(m, 0);
    for (std::size_t k = m; k-- > 0;) {
        std::vector<std::uint64_t> next(m, 0);
        for (std::size_t d = 0; d + 1 < m; ++d) {
            next[d + 1] = (next[d + 1] + poly[d]) % kHashPrime;
            next[d] = sub_mod(next[d], mul_mod(poly[d], xs[k]));
        }
        next[0] = (next[0] + dd[k]) % kHashPrime;
        poly = std::move(next);
    }
    while (!poly.empty() && poly.back() == 0)
        poly.pop_back();
    const auto first = std::find_if(poly.begin(), poly.end(), [](std::uint64_t c) { return c != 0; });
    poly.erase(poly.begin(), first);
    std::vector<std::uint64_t> neg(poly);
    for (auto& c : neg)
        c = (kHashPrime - c) % kHashPrime;
    return std::min(poly, neg);
}

/// Cheap link hash: per split summand its component count, χ and its
/// Alexander polynomial modulo a prime. Collisions only cost search
/// completeness, never correctness: matches are confirmed exactly.
struct LinkHash {
    std::vector<std::vector<std::uint64_t>> pieces;  // sorted

    friend auto operator<=>(const LinkHash&, const LinkHash&) = default;
};

inline LinkHash link_hash(const BipartiteGraph& g) {
    const ReduceResult r = reduce(g);
    LinkHash h;
    for (const BipartiteGraph& piece : split_pieces(r.graph)) {
        const BraidWord w = piece_braid_word(piece);
        const SeifertMatrix v = seifert_matrix(w);
        std::vector<std::uint64_t> row{static_cast<std::uint64_t>(closure_components(w)),
                                       static_cast<std::uint64_t>(to_mod(euler_characteristic(piece)))};
        for (std::uint64_t c : alexander_mod(v))
            row.push_back(c);
        h.pieces.push_back(std::move(row));
    }
    for (int i = 0; i < r.unknots; ++i)
        h.pieces.push_back({1, 1, 1});
    std::sort(h.pieces.begin(), h.pieces.end());
    return h;
}

inline LinkHash link_hash(const Fingerprint& f) {
    LinkHash h;
    auto add = [&h](const Fingerprint& piece) {
        std::vector<std::uint64_t> row{static_cast<std::uint64_t>(piece.components),
                                       static_cast<std::uint64_t>(to_mod(piece.chi_max))};
        std::vector<std::uint64_t> pos, neg;
        for (std::int64_t c : piece.alexander.coefficients) {
            pos.push_back(to_mod(c));
            neg.push_back(to_mod(-c));
        }
        for (std::uint64_t c : std::min(pos, neg))
            row.push_back(c);
        h.pieces.push_back(std::move(row));
    };
    if (f.split)
        for (const Fingerprint& piece : f.per_component)
            add(piece);
    else if (f.components > 0)
        add(f);
    std::sort(h.pieces.begin(), h.pieces.end());
    return h;
}

}  // namespace detail

/// Number of split summands of the boundary link: nontrivial pieces plus
/// split unknots. Splitting never joins summands, so this never decreases.
inline std::size_t split_summands(const BipartiteGraph& g) {
    const ReduceResult r = reduce(g);
    return split_pieces(r.graph).size() + static_cast<std::size_t>(r.unknots);
}

inline SearchOutcome adjacency_search(int p, int q, const Fingerprint& target, SearchBudget budget = {},
                                      SearchOptions options = {}) {
    SearchOutcome out;
    const BipartiteGraph source = complete_graph(p, q);
    out.depth = target.chi_max - euler_characteristic(source);
    if (target.components == 0 || out.depth < 0) {
        out.status = SearchStatus::impossible;
        return out;
    }

    const std::size_t target_summands = structure_key(target).pieces.size();
    const detail::LinkHash target_hash = detail::link_hash(target);
    auto key_of = [&options](const BipartiteGraph& g) {
        if (!options.reduced_dedup)
            return options.canonical_dedup ? canonical_code(g) : encode_graph(g);
        const ReduceResult r = reduce(g);
        const std::string body = r.graph.empty() ? std::string()
                                 : options.canonical_dedup ? canonical_code(r.graph)
                                                           : encode_graph(r.graph);
        return std::string(1, static_cast<char>(r.unknots)) + body;
    };
    const auto start = std::chrono::steady_clock::now();
    auto over_budget = [&]() {
        if (out.states > budget.max_states)
            return true;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        return elapsed.count() > budget.max_seconds;
    };
    auto certificate_for = [&](const BipartiteGraph& g, std::vector<SplitMove> moves) {
        AdjacencyCertificate c{p, q, std::move(moves), g, fingerprint(g)};
        return c;
    };

    struct Node {
        std::string key;
        BipartiteGraph graph;
        std::size_t parent = 0;
        SplitMove move;
    };
    std::vector<std::vector<Node>> levels;
    levels.push_back({Node{key_of(source), source, 0, {}}});
    out.states = 1;

    auto path_to = [&levels](std::size_t level, std::size_t index) {
        std::vector<SplitMove> moves;
        for (std::size_t d = level; d > 0; --d) {
            const Node& n = levels[d][index];
            moves.push_back(n.move);
            index = n.parent;
        }
        std::reverse(moves.begin(), moves.end());
        return moves;
    };

    if (out.depth == 0) {
        if (fingerprint_matches(source, target)) {
            out.status = SearchStatus::found;
            out.certificate = certificate_for(source, {});
        }
        return out;
    }

    for (int d = 0; d < out.depth; ++d) {
        std::vector<Node>& frontier = levels.back();
        std::sort(frontier.begin(), frontier.end(), [](const Node& a, const Node& b) { return a.key < b.key; });
        const bool last = d + 1 == out.depth;
        std::unordered_set<std::string> seen;
        std::set<detail::LinkHash> seen_links;
        std::vector<Node> next;
        std::optional<Node> best;  // on the last level: smallest matching key

        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (const SplitMove& m : splitting_moves(frontier[i].graph)) {
                BipartiteGraph child = split_fork(frontier[i].graph, m);
                std::string key = key_of(child);
                if (!seen.insert(key).second)
                    continue;
                ++out.states;
                if (over_budget()) {
                    out.status = SearchStatus::budget_exhausted;
                    return out;
                }
                if (!last) {
                    if (options.summand_pruning && split_summands(child) > target_summands)
                        continue;
                    if (options.link_dedup && !seen_links.insert(detail::link_hash(child)).second)
                        continue;
                    next.push_back({std::move(key), std::move(child), i, m});
                } else if ((!best || key < best->key) && detail::link_hash(child) == target_hash &&
                           fingerprint_matches(child, target)) {
                    best = Node{std::move(key), std::move(child), i, m};
                }
            }
        }
        if (last) {
            if (!best) {
                out.status = SearchStatus::not_found;
                return out;
            }
            std::vector<SplitMove> moves = path_to(levels.size() - 1, best->parent);
            moves.push_back(best->move);
            out.status = SearchStatus::found;
            out.certificate = certificate_for(best->graph, std::move(moves));
            return out;
        }
        if (next.empty()) {
            out.status = SearchStatus::not_found;
            return out;
        }
        levels.push_back(std::move(next));
    }
    return out;  // unreachable: the loop returns on its last level
}

inline SearchOutcome adjacency_search(int p, int q, const BipartiteGraph& target, SearchBudget budget = {},
                                      SearchOptions options = {}) {
    return adjacency_search(p, q, fingerprint(target), budget, options);
}

/// χ(θ_{ab,c}) - χ(θ_{a,bc}); equals (b-1)(a-c).
inline int feller_depth(int a, int b, int c) {
    const int target = a * b + c - a * b * c;
    const int source = a + b * c - a * b * c;
    return target - source;
}

/// Searches for T(ab, c) among the splittings of T(a, bc), c <= a.
inline SearchOutcome feller_witness(int a, int b, int c, SearchBudget budget = {}) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("feller_witness needs positive a, b, c");
    if (c > a)
        throw std::invalid_argument("feller_witness needs c <= a");
    if (feller_depth(a, b, c) != (b - 1) * (a - c))
        throw std::logic_error("depth identity (b-1)(a-c) violated");
    return adjacency_search(a, b * c, complete_graph(a * b, c), budget);
}

// ---------------------------------------------------------------------------
// Ribbon cuts

namespace detail {

// Calls f(mask) for every k-subset of an n-bit universe in increasing order.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (n > 63)
        throw std::invalid_argument("at most 63 edges can be enumerated");
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        f(std::uint64_t{0});
        return;
    }
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        f(mask);
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

inline BipartiteGraph subgraph_from_mask(int p, int q, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int k = 0; k < p * q; ++k)
        if (mask >> k & 1)
            edges.push_back({k % p, k / p});
    return {p, q, std::move(edges)};
}

// A leaf whose neighbour has degree >= 2 can be retracted: a smaller frame
// holds the same link with higher density.
inline bool has_retractable_leaf(const BipartiteGraph& g) {
    const auto du = g.degrees(Side::upper), dl = g.degrees(Side::lower);
    for (const Edge& e : g.edges()) {
        const int a = du[static_cast<std::size_t>(e.u)], b = dl[static_cast<std::size_t>(e.l)];
        if ((a == 1 && b >= 2) || (b == 1 && a >= 2))
            return true;
    }
    return false;
}

}  // namespace detail

/// Edge subsets of θ_{p,q} of the given size, one per canonical class, whose
/// boundary link has fingerprint `match`. Witnesses keep the p × q frame.
inline std::vector<BipartiteGraph> subgraph_search(int p, int q, int edge_count, const Fingerprint& match) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("subgraph_search needs p, q >= 1");
    if (edge_count < 0 || edge_count > p * q)
        throw std::invalid_argument("edge count must lie in [0, pq]");
    const StructureKey want = structure_key(match);
    std::unordered_set<std::string> seen;
    std::vector<BipartiteGraph> witnesses;
    detail::for_each_subset(p * q, edge_count, [&](std::uint64_t mask) {
        BipartiteGraph g = detail::subgraph_from_mask(p, q, mask);
        if (!seen.insert(canonical_code(g)).second)
            return;
        if (structure_key(g) == want && fingerprint(g) == match)
            witnesses.push_back(std::move(g));
    });
    return witnesses;
}

struct DensityEstimate {
    Rational lower_bound{0};
    std::optional<BipartiteGraph> witness;
    int cutoff = 0;          // N with N >= |χ| and N > 3/d, from the best density found
    bool exhausted = false;  // every frame up to the cutoff was searched, or d = 1
};

/// Best density e/(pq) over reduced graphs in frames p, q <= cap whose
/// fingerprint equals `match`. The edge count in a frame is forced by χ.
inline DensityEstimate density_estimate(const Fingerprint& match, int cap) {
    if (cap < 2)
        throw std::invalid_argument("density_estimate needs cap >= 2");
    if (match.components == 0)
        throw std::invalid_argument("density_estimate needs a nonempty link");
    const StructureKey want = structure_key(match);
    DensityEstimate est;
    for (int p = 1; p <= cap; ++p) {
        for (int q = p; q <= cap; ++q) {
            const int e = p + q - match.chi_max;
            if (e < std::max(p, q) || e > p * q)
                continue;
            const Rational d(e, std::int64_t{p} * q);
            if (est.witness && d <= est.lower_bound)
                continue;
            std::unordered_set<std::string> seen;
            bool found = false;
            detail::for_each_subset(p * q, e, [&](std::uint64_t mask) {
                if (found)
                    return;
                BipartiteGraph g = detail::subgraph_from_mask(p, q, mask);
                if (g.nonisolated(Side::upper) != p || g.nonisolated(Side::lower) != q ||
                    detail::has_retractable_leaf(g))
                    return;
                if (!seen.insert(canonical_code(g)).second)
                    return;
                if (structure_key(g) == want && fingerprint(g) == match) {
                    est.lower_bound = d;
                    est.witness = std::move(g);
                    found = true;
                }
            });
        }
    }
    if (est.witness) {
        const std::int64_t chi = std::abs(static_cast<std::int64_t>(match.chi_max));
        // smallest N > 3/d = 3 q / e, written over the integers
        const std::int64_t strict = 3 * est.lower_bound.denominator() / est.lower_bound.numerator() + 1;
        est.cutoff = static_cast<int>(std::max(chi, strict));
        est.exhausted = est.lower_bound == Rational(1) || cap >= est.cutoff;
    }
    return est;
}

}  // namespace bglink
