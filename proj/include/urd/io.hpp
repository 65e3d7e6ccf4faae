// io.hpp — serialization of decompositions: canonical JSON (lossless,
// round-trips byte-identically), plus DOT and flat edge-list exports.
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "star_arrays.hpp"
#include "verify.hpp"

namespace urd {

inline constexpr int kFormatVersion = 1;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Decomposition& d) {
    ordered_json doc;
    doc["formatVersion"] = kFormatVersion;
    doc["v"] = d.v;
    doc["n"] = d.n;
    doc["s"] = d.star_classes.size();
    ordered_json matching = ordered_json::array();
    for (const auto& [u, x] : d.one_factor) matching.push_back({u, x});
    doc["oneFactor"] = std::move(matching);
    ordered_json classes = ordered_json::array();
    for (const StarFactor& f : d.star_classes) {
        ordered_json cls = ordered_json::array();
        for (const Star& s : f.stars) {
            ordered_json block;
            block["center"] = s.center;
            block["leaves"] = s.leaves;
            cls.push_back(std::move(block));
        }
        classes.push_back(std::move(cls));
    }
    doc["starClasses"] = std::move(classes);
    return doc;
}

inline std::string serialize(const Decomposition& d) { return to_json(d).dump(2) + "\n"; }

inline Decomposition decomposition_from_json(const ordered_json& doc) {
    auto need = [&](const char* key) -> const ordered_json& {
        if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
        return doc.at(key);
    };
    try {
        if (need("formatVersion").get<int>() != kFormatVersion)
            throw ParseError("unsupported formatVersion");
        Decomposition d;
        d.v = need("v").get<int>();
        d.n = need("n").get<int>();
        for (const auto& pair : need("oneFactor")) {
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("oneFactor entries must be [u, x] pairs");
            d.one_factor.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        const auto& classes = need("starClasses");
        const long long declared_s = need("s").get<long long>();
        if (declared_s != static_cast<long long>(classes.size()))
            throw ParseError("field 's' disagrees with the number of star classes");
        for (const auto& cls : classes) {
            StarFactor f;
            f.v = d.v;
            for (const auto& block : cls) {
                Star s;
                s.center = block.at("center").get<int>();
                s.leaves = block.at("leaves").get<std::vector<int>>();
                f.stars.push_back(std::move(s));
            }
            d.star_classes.push_back(std::move(f));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

inline Decomposition parse_decomposition(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return decomposition_from_json(doc);
}

// DOT multigraph: one subgraph per resolution class, edges repeated across
// classes as they are in the decomposition.
inline std::string to_dot(const Decomposition& d) {
    std::ostringstream out;
    out << "graph urd {\n";
    out << "  // v=" << d.v << " n=" << d.n << " s=" << d.star_classes.size() << "\n";
    out << "  subgraph cluster_matching {\n    label=\"1-factor\";\n";
    for (const auto& [u, x] : d.one_factor) out << "    " << u << " -- " << x << ";\n";
    out << "  }\n";
    for (size_t ci = 0; ci < d.star_classes.size(); ++ci) {
        out << "  subgraph cluster_class_" << (ci + 1) << " {\n    label=\"star class "
            << (ci + 1) << "\";\n";
        for (const Star& s : d.star_classes[ci].stars)
            for (int l : s.leaves)
                out << "    " << std::min(s.center, l) << " -- " << std::max(s.center, l) << ";\n";
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

// Flat edge list: one "u x class-id" line per edge, class 0 is the matching.
inline std::string to_edge_list(const Decomposition& d) {
    std::ostringstream out;
    for (const auto& [u, x] : d.one_factor) out << u << " " << x << " 0\n";
    for (size_t ci = 0; ci < d.star_classes.size(); ++ci)
        for (const Star& s : d.star_classes[ci].stars)
            for (int l : s.leaves)
                out << std::min(s.center, l) << " " << std::max(s.center, l) << " " << (ci + 1)
                    << "\n";
    return out.str();
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

// Loads and re-verifies a decomposition document. Verification can be skipped
// explicitly when the caller wants the raw structure (the CLI does its own
// verification to report witnesses with exit codes).
inline Decomposition load_decomposition(const std::string& path, bool verify = true) {
    Decomposition d = parse_decomposition(read_text_file(path));
    if (verify) {
        VerificationReport rep = verify_urd(d);
        if (!rep.ok) {
            const Violation& first = rep.violations.front();
            throw VerifyError(std::string(to_string(first.kind)) + ": " + first.witness);
        }
    }
    return d;
}

} // namespace urd
