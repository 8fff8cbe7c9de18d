#pragma once

// Strongly quasipositive band words and signed Artin braid words.
//
// Strands are 1-based in words and 0-based in graphs: upper vertex u is
// strand u + 1.

#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bglink/graph.hpp"

namespace bglink {

/// σ_{i,j} = (σ_i … σ_{j-2}) σ_{j-1} (σ_i … σ_{j-2})^{-1}, 1 <= i < j <= n.
struct BandGenerator {
    int i = 1;
    int j = 2;

    friend bool operator==(const BandGenerator&, const BandGenerator&) = default;
};

struct BandWord {
    int strands = 1;
    std::vector<BandGenerator> letters;

    friend bool operator==(const BandWord&, const BandWord&) = default;
};

/// Letters are +k for σ_k and -k for σ_k^{-1}, 1 <= k <= strands - 1.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline void validate(const BandWord& w) {
    if (w.strands < 1)
        throw std::invalid_argument("band word needs at least one strand");
    for (const BandGenerator& g : w.letters)
        if (g.i < 1 || g.i >= g.j || g.j > w.strands)
            throw std::invalid_argument("band generator s[" + std::to_string(g.i) + "," + std::to_string(g.j) +
                                        "] out of range for " + std::to_string(w.strands) + " strands");
}

inline void validate(const BraidWord& w) {
    if (w.strands < 1)
        throw std::invalid_argument("braid word needs at least one strand");
    for (int x : w.letters)
        if (x == 0 || std::abs(x) >= w.strands)
            throw std::invalid_argument("Artin letter " + std::to_string(x) + " out of range for " +
                                        std::to_string(w.strands) + " strands");
}

/// Band word of a graph: each lower fork, in line order, becomes the chain
/// σ_{t1+1,t2+1} σ_{t2+1,t3+1} … over its ascending teeth. Forks with a
/// single tooth contribute nothing. The graph must have no isolated vertex
/// and no cut on the upper line (otherwise the braid diagram is split and
/// the caller decomposes first, see split_pieces).
inline BandWord band_word_from_graph(const BipartiteGraph& g) {
    if (g.empty() || g.nonisolated(Side::upper) != g.p() || g.nonisolated(Side::lower) != g.q())
        throw std::invalid_argument("band_word_from_graph needs a nonempty graph without isolated vertices");
    if (!line_cuts(g, Side::upper).empty())
        throw std::invalid_argument("band_word_from_graph: upper line has a cut, the diagram is split");
    BandWord w{g.p(), {}};
    for (const Fork& f : forks_of(g, Side::lower))
        for (std::size_t k = 1; k < f.teeth.size(); ++k)
            w.letters.push_back({f.teeth[k - 1] + 1, f.teeth[k] + 1});
    return w;
}

inline BraidWord expand_band_word(const BandWord& w) {
    validate(w);
    BraidWord out{w.strands, {}};
    for (const BandGenerator& g : w.letters) {
        for (int k = g.i; k <= g.j - 2; ++k)
            out.letters.push_back(k);
        out.letters.push_back(g.j - 1);
        for (int k = g.j - 2; k >= g.i; --k)
            out.letters.push_back(-k);
    }
    return out;
}

/// Cancels adjacent σ_k σ_k^{-1} pairs until none remain.
inline BraidWord free_reduce(const BraidWord& w) {
    BraidWord out{w.strands, {}};
    out.letters.reserve(w.letters.size());
    for (int x : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -x)
            out.letters.pop_back();
        else
            out.letters.push_back(x);
    }
    return out;
}

inline int exponent_sum(const BraidWord& w) {
    int s = 0;
    for (int x : w.letters)
        s += x > 0 ? 1 : -1;
    return s;
}

/// Permutation of the closed braid: strand position i (0-based) ends at perm[i].
inline std::vector<int> closure_permutation(const BraidWord& w) {
    std::vector<int> pos(static_cast<std::size_t>(w.strands));
    std::iota(pos.begin(), pos.end(), 0);
    // at[k] = which strand currently sits at position k
    std::vector<int> at = pos;
    for (int x : w.letters) {
        const auto k = static_cast<std::size_t>(std::abs(x) - 1);
        std::swap(at[k], at[k + 1]);
    }
    std::vector<int> perm(pos.size());
    for (std::size_t k = 0; k < at.size(); ++k)
        perm[static_cast<std::size_t>(at[k])] = static_cast<int>(k);
    return perm;
}

inline int closure_components(const BraidWord& w) {
    const auto perm = closure_permutation(w);
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i])
            continue;
        ++cycles;
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j]))
            seen[j] = 1;
    }
    return cycles;
}

// ---------------------------------------------------------------------------
// Text forms: "s[1,2] s[2,3]" and "strands=3; 1 2 -1".

inline std::string to_string(const BandWord& w) {
    std::string out;
    for (const BandGenerator& g : w.letters) {
        if (!out.empty())
            out += ' ';
        out += "s[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]";
    }
    return out;
}

inline std::string to_string(const BraidWord& w) {
    std::string out = "strands=" + std::to_string(w.strands) + ";";
    for (int x : w.letters)
        out += " " + std::to_string(x);
    return out;
}

inline BandWord parse_band_word(const std::string& text, int strands) {
    BandWord w{strands, {}};
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int i = 0, j = 0;
        char tail = 0;
        if (std::sscanf(tok.c_str(), "s[%d,%d%c", &i, &j, &tail) != 3 || tail != ']' ||
            tok.find(']') != tok.size() - 1)
            throw std::invalid_argument("bad band generator token '" + tok + "'");
        w.letters.push_back({i, j});
    }
    validate(w);
    return w;
}

inline BraidWord parse_braid_word(const std::string& text) {
    const auto semi = text.find(';');
    if (text.rfind("strands=", 0) != 0 || semi == std::string::npos)
        throw std::invalid_argument("braid word must start with 'strands=n;'");
    BraidWord w;
    try {
        std::size_t used = 0;
        w.strands = std::stoi(text.substr(8, semi - 8), &used);
        if (used != semi - 8)
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad strand count in '" + text + "'");
    }
    std::istringstream in(text.substr(semi + 1));
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw std::invalid_argument("bad Artin letter '" + tok + "'");
        w.letters.push_back(x);
    }
    validate(w);
    return w;
}

}  // namespace bglink
