#pragma once

// Catalog of torus-link fingerprints, stored as line-delimited JSON: one
// header record, then one record per pair 2 <= p <= q.

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "bglink/json_io.hpp"

namespace bglink {

inline constexpr const char* kCatalogName = "bglink-torus-catalog";

/// Missing, corrupt or stale catalog file.
class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    int p = 2;
    int q = 2;
    Fingerprint fingerprint;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct Catalog {
    std::string version;
    std::string generated;
    std::vector<CatalogEntry> entries;
};

/// Fingerprints of θ_{p,q} for 2 <= p <= q, p <= max_p, q <= max_q.
inline std::vector<CatalogEntry> catalog_entries(int max_p, int max_q) {
    if (max_p < 2 || max_q < 2)
        throw std::invalid_argument("catalog bounds must be at least 2");
    std::vector<CatalogEntry> entries;
    for (int p = 2; p <= max_p; ++p)
        for (int q = p; q <= max_q; ++q)
            entries.push_back({p, q, fingerprint(complete_graph(p, q))});
    return entries;
}

inline std::string catalog_text(const std::vector<CatalogEntry>& entries, const std::string& generated) {
    std::string out =
        Json{{"catalog", kCatalogName}, {"version", kPipelineVersion}, {"generated", generated}}.dump() + "\n";
    for (const CatalogEntry& e : entries)
        out += Json{{"p", e.p}, {"q", e.q}, {"fingerprint", to_json(e.fingerprint)}}.dump() + "\n";
    return out;
}

/// Writes the catalog and returns the number of entries. The output depends
/// only on the bounds, the pipeline version and `generated`.
inline std::size_t catalog_build(int max_p, int max_q, const std::string& out, const std::string& generated) {
    const std::vector<CatalogEntry> entries = catalog_entries(max_p, max_q);
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file)
        throw CatalogError("cannot write catalog '" + out + "'");
    file << catalog_text(entries, generated);
    file.close();
    if (!file)
        throw CatalogError("failed writing catalog '" + out + "'");
    return entries.size();
}

inline Catalog catalog_read(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw CatalogError("cannot open catalog '" + path + "'");
    Catalog cat;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(file, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const std::string where = path + ":" + std::to_string(lineno) + ": ";
        try {
            const Json j = Json::parse(line);
            if (!header) {
                if (detail::field(j, "catalog") != kCatalogName)
                    throw FormatError("not a torus-link catalog");
                const Json& v = detail::field(j, "version");
                const Json& g = detail::field(j, "generated");
                if (!v.is_string() || !g.is_string())
                    throw FormatError("'version' and 'generated' must be strings");
                cat.version = v.get<std::string>();
                cat.generated = g.get<std::string>();
                if (cat.version != kPipelineVersion)
                    throw CatalogError(where + "catalog version '" + cat.version + "' does not match pipeline '" +
                                       kPipelineVersion + "'; rebuild the catalog");
                header = true;
                continue;
            }
            CatalogEntry e;
            e.p = detail::small_int(detail::int_field(j, "p"), "p");
            e.q = detail::small_int(detail::int_field(j, "q"), "q");
            if (e.p < 2 || e.p > e.q)
                throw FormatError("entry keys must satisfy 2 <= p <= q");
            e.fingerprint = fingerprint_from_json(detail::field(j, "fingerprint"));
            cat.entries.push_back(std::move(e));
        } catch (const nlohmann::json::exception& err) {
            throw CatalogError(where + err.what());
        } catch (const FormatError& err) {
            throw CatalogError(where + err.what());
        }
    }
    if (!header)
        throw CatalogError("catalog '" + path + "' has no header record");
    return cat;
}

/// Every (p, q), p <= q, whose fingerprint equals f. Several hits mean a
/// fingerprint collision; all of them are returned.
inline std::vector<std::pair<int, int>> catalog_lookup(const Fingerprint& f, const std::string& path) {
    std::vector<std::pair<int, int>> hits;
    for (const CatalogEntry& e : catalog_read(path).entries)
        if (e.fingerprint == f)
            hits.emplace_back(e.p, e.q);
    return hits;
}

}  // namespace bglink
