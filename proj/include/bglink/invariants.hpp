#pragma once

// Link invariants of bipartite graph links, computed exactly from the
// Seifert matrix of the canonical surface of a closed braid.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "bglink/braid.hpp"
#include "bglink/exact.hpp"
#include "bglink/graph.hpp"

namespace bglink {

/// Bumped whenever a convention feeding the fingerprint changes; catalogs
/// written under another tag are refused.
inline constexpr const char* kPipelineVersion = "bglink-fingerprint-1";

/// Global sign ε of S = ε (V + V^T). The Seifert convention below gives
/// negative signatures to positive braids; flipping makes σ(T(2,3)) = 2.
inline constexpr int kSignatureSign = -1;

using SeifertMatrix = IntMatrix;

/// Columns 1..n-1 that carry no crossing. A nonempty result means the
/// closed-braid diagram is split.
inline std::vector<int> empty_columns(const BraidWord& w) {
    std::vector<char> used(static_cast<std::size_t>(std::max(w.strands - 1, 0)), 0);
    for (int x : w.letters)
        used[static_cast<std::size_t>(std::abs(x) - 1)] = 1;
    std::vector<int> out;
    for (std::size_t k = 0; k < used.size(); ++k)
        if (!used[k])
            out.push_back(static_cast<int>(k) + 1);
    return out;
}

/// Seifert matrix of the surface made of one disk per strand and one band
/// per crossing. A first-homology generator runs between two consecutive
/// crossings in the same column; the matrix has size c - n + 1.
inline SeifertMatrix seifert_matrix(const BraidWord& w) {
    validate(w);
    if (!empty_columns(w).empty())
        throw std::invalid_argument("seifert_matrix needs a connected closed-braid diagram");
    const auto& x = w.letters;
    const int c = static_cast<int>(x.size());

    // next[i]: following crossing in the same column, or -1
    std::vector<int> next(static_cast<std::size_t>(c), -1), gens;
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j)
            if (std::abs(x[static_cast<std::size_t>(j)]) == std::abs(x[static_cast<std::size_t>(i)])) {
                next[static_cast<std::size_t>(i)] = j;
                break;
            }
        if (next[static_cast<std::size_t>(i)] >= 0)
            gens.push_back(i);
    }

    const int n = static_cast<int>(gens.size());
    SeifertMatrix v(n);
    auto sgn = [&x](int k) { return x[static_cast<std::size_t>(k)] > 0 ? 1 : -1; };
    auto col = [&x](int k) { return std::abs(x[static_cast<std::size_t>(k)]); };
    for (int a = 0; a < n; ++a) {
        const int i = gens[static_cast<std::size_t>(a)];
        const int hi = next[static_cast<std::size_t>(i)];
        v(a, a) = -(sgn(i) + sgn(hi)) / 2;
        for (int b = a + 1; b < n; ++b) {
            const int j = gens[static_cast<std::size_t>(b)];
            const int hj = next[static_cast<std::size_t>(j)];
            if (j > hi)
                break;  // later generators start even later
            if (j == hi) {
                // consecutive loops in one column sharing crossing j
                if (sgn(j) > 0)
                    v(b, a) = 1;
                else
                    v(a, b) = -1;
            } else if (hj > hi) {
                // interlaced loops in neighbouring columns
                const int d = col(i) - col(j);
                if (d == 1)
                    v(b, a) = -1;
                else if (d == -1)
                    v(a, b) = 1;
            }
            // nested or far-apart loops do not link
        }
    }
    return v;
}

struct SignatureNullity {
    int signature = 0;
    int nullity = 0;

    friend bool operator==(const SignatureNullity&, const SignatureNullity&) = default;
};

inline IntMatrix symmetrized(const SeifertMatrix& v) {
    IntMatrix s(v.size());
    for (int i = 0; i < v.size(); ++i)
        for (int j = 0; j < v.size(); ++j)
            s(i, j) = kSignatureSign * (v(i, j) + v(j, i));
    return s;
}

inline SignatureNullity signature_and_nullity(const SeifertMatrix& v) {
    const Inertia in = inertia(symmetrized(v));
    return {in.positive - in.negative, in.zero};
}

namespace detail {

// Values of det(V - t V^T) at t = 0, 1, -1, 2, -2, ...
struct PencilSamples {
    std::vector<BigInt> points;
    std::vector<BigInt> values;
};

inline PencilSamples sample_pencil(const SeifertMatrix& v) {
    const int n = v.size();
    PencilSamples s;
    for (int k = 0; k <= n; ++k) {
        const int t = (k + 1) / 2 * (k % 2 == 1 ? 1 : -1);
        SquareMatrix<BigInt> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = BigInt(v(i, j)) - BigInt(t) * v(j, i);
        s.points.emplace_back(t);
        s.values.push_back(determinant(std::move(m)));
    }
    return s;
}

inline LaurentPolynomial pencil_polynomial(const PencilSamples& s) {
    const auto coeffs = interpolate(s.points, s.values);
    LaurentPolynomial p;
    for (const auto& c : coeffs)
        p.coefficients.push_back(to_int64(c));
    return normalized_up_to_units(std::move(p));
}

}  // namespace detail

/// det(V - t V^T), normalized up to ±t^k (see normalized_up_to_units).
inline LaurentPolynomial alexander(const SeifertMatrix& v) {
    return detail::pencil_polynomial(detail::sample_pencil(v));
}

/// |det(V + V^T)| = |Δ(-1)|.
inline std::int64_t link_determinant(const SeifertMatrix& v) {
    IntMatrix s(v.size());
    for (int i = 0; i < v.size(); ++i)
        for (int j = 0; j < v.size(); ++j)
            s(i, j) = v(i, j) + v(j, i);
    return to_int64(abs(determinant(s)));
}

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for coprime p, q, normalized.
inline LaurentPolynomial torus_alexander_oracle(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("torus parameters must be positive");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_alexander_oracle needs coprime p, q");
    auto mul = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] += a[i] * b[j];
        return out;
    };
    auto binomial = [](int d) {  // t^d - 1
        std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1, 0);
        v.front() = -1;
        v.back() = 1;
        return v;
    };
    auto num = mul(binomial(p * q), binomial(1));
    const auto den = mul(binomial(p), binomial(q));  // monic
    std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const std::int64_t c = num[k + den.size() - 1];
        quot[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= c * den[j];
    }
    if (std::any_of(num.begin(), num.end(), [](std::int64_t r) { return r != 0; }))
        throw std::logic_error("torus Alexander division left a remainder");
    return normalized_up_to_units({0, std::move(quot)});
}

// ---------------------------------------------------------------------------
// Fingerprints

struct Fingerprint {
    int components = 0;
    int chi_max = 0;
    int signature = 0;
    int nullity = 0;
    std::int64_t determinant = 0;
    LaurentPolynomial alexander;
    bool split = false;
    std::vector<Fingerprint> per_component;  // nonempty iff split

    bool is_knot() const { return components == 1 && !split; }

    auto key() const {
        return std::tie(components, chi_max, signature, nullity, determinant, alexander.low,
                        alexander.coefficients, split);
    }
};

inline bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.key() == b.key() && a.per_component == b.per_component;
}

inline bool operator<(const Fingerprint& a, const Fingerprint& b) {
    if (a.key() != b.key())
        return a.key() < b.key();
    return std::lexicographical_compare(a.per_component.begin(), a.per_component.end(),
                                        b.per_component.begin(), b.per_component.end());
}

inline Fingerprint unknot_fingerprint() {
    Fingerprint f;
    f.components = 1;
    f.chi_max = 1;
    f.determinant = 1;
    f.alexander = {0, {1}};
    return f;
}

/// Invariants of a closed braid whose diagram is connected. `chi` is carried
/// through unchanged; it comes from the graph.
inline Fingerprint braid_fingerprint(const BraidWord& w, int chi) {
    Fingerprint f;
    f.components = closure_components(w);
    f.chi_max = chi;
    const SeifertMatrix v = seifert_matrix(w);
    const SignatureNullity sn = signature_and_nullity(v);
    f.signature = sn.signature;
    f.nullity = sn.nullity;
    f.alexander = alexander(v);
    // a unit shift only changes the sign of the value at -1
    f.determinant = to_int64(abs(f.alexander.evaluate(-1)));
    return f;
}

/// Expanded, freely reduced braid word of a piece (see split_pieces). If
/// free reduction empties a column the unreduced expansion is kept, so the
/// diagram stays connected and the Seifert surface connected.
inline BraidWord piece_braid_word(const BipartiteGraph& piece) {
    BraidWord w = expand_band_word(band_word_from_graph(piece));
    BraidWord r = free_reduce(w);
    return empty_columns(r).empty() ? r : w;
}

/// Fingerprint of a piece whose diagram is not split by a line cut.
inline Fingerprint piece_fingerprint(const BipartiteGraph& piece) {
    return braid_fingerprint(piece_braid_word(piece), euler_characteristic(piece));
}

/// Combines pieces into the fingerprint of their split union.
inline Fingerprint split_union(std::vector<Fingerprint> pieces) {
    if (pieces.empty())
        return {};
    if (pieces.size() == 1)
        return std::move(pieces.front());
    std::sort(pieces.begin(), pieces.end());
    Fingerprint f;
    f.split = true;
    for (const Fingerprint& p : pieces) {
        f.components += p.components;
        f.chi_max += p.chi_max;
        f.signature += p.signature;
        f.nullity += p.nullity;
    }
    // one extra null direction per tube joining the pieces
    f.nullity += static_cast<int>(pieces.size()) - 1;
    f.determinant = 0;
    f.per_component = std::move(pieces);
    return f;
}

/// Fingerprint of the boundary link of g. The graph is reduced, collapsed
/// disks become split unknots, and the rest is decomposed along line cuts.
inline Fingerprint fingerprint(const BipartiteGraph& g) {
    const ReduceResult r = reduce(g);
    std::vector<Fingerprint> pieces;
    for (const BipartiteGraph& piece : split_pieces(r.graph))
        pieces.push_back(piece_fingerprint(piece));
    for (int k = 0; k < r.unknots; ++k)
        pieces.push_back(unknot_fingerprint());
    return split_union(std::move(pieces));
}

/// σ = 2g, i.e. signature = 1 - χ, for a knot.
inline bool signature_is_maximal(const Fingerprint& f) {
    if (!f.is_knot())
        throw std::invalid_argument("signature_is_maximal needs a knot fingerprint");
    return f.signature == 1 - f.chi_max;
}

enum class Fibredness { not_fibred, inconclusive };

/// A fibred knot has monic Alexander polynomial; the converse fails.
inline Fibredness fibredness(const Fingerprint& f) {
    if (!f.is_knot())
        throw std::invalid_argument("fibredness needs a knot fingerprint");
    return std::abs(f.alexander.coefficients.back()) == 1 ? Fibredness::inconclusive : Fibredness::not_fibred;
}

// ---------------------------------------------------------------------------
// Cheap structural key, used to reject candidates before the exact kernel runs.

struct StructureKey {
    std::vector<std::pair<int, int>> pieces;  // (components, chi) per piece, sorted

    friend bool operator==(const StructureKey&, const StructureKey&) = default;
};

inline StructureKey structure_key(const Fingerprint& f) {
    StructureKey k;
    if (f.split)
        for (const Fingerprint& p : f.per_component)
            k.pieces.emplace_back(p.components, p.chi_max);
    else if (f.components > 0)
        k.pieces.emplace_back(f.components, f.chi_max);
    std::sort(k.pieces.begin(), k.pieces.end());
    return k;
}

inline StructureKey structure_key(const BipartiteGraph& g) {
    const ReduceResult r = reduce(g);
    StructureKey k;
    for (const BipartiteGraph& piece : split_pieces(r.graph))
        k.pieces.emplace_back(closure_components(expand_band_word(band_word_from_graph(piece))),
                              euler_characteristic(piece));
    for (int i = 0; i < r.unknots; ++i)
        k.pieces.emplace_back(1, 1);
    std::sort(k.pieces.begin(), k.pieces.end());
    return k;
}

inline bool fingerprint_matches(const BipartiteGraph& g, const Fingerprint& target) {
    if (structure_key(g) != structure_key(target))
        return false;
    return fingerprint(g) == target;
}

}  // namespace bglink
