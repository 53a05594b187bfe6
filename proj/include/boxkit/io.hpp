#ifndef BOXKIT_IO_HPP
#define BOXKIT_IO_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "boxkit/boxicity_oracle.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/realization.hpp"
#include "boxkit/split_witness.hpp"

namespace boxkit {

namespace detail {

inline bool line_is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

inline Graph parse_graph_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line_is_blank(line)) continue;
        std::istringstream iss(line);
        std::string rest;
        if (!(iss >> n >> m) || (iss >> rest))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected \"n m\" (vertex and edge counts)");
        break;
    }
    if (n < 0 && m < 0) throw std::invalid_argument("edge list document is empty");
    if (n < 0 || m < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": vertex and edge counts must be nonnegative");

    GraphBuilder gb(static_cast<int>(n));
    long long seen = 0;
    while (seen < m && std::getline(in, line)) {
        ++lineno;
        if (line_is_blank(line)) continue;
        std::istringstream iss(line);
        long long u, v;
        std::string rest;
        if (!(iss >> u >> v) || (iss >> rest))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected \"u v\" (edge endpoints)");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": vertex out of range: " +
                                        std::to_string(u < 0 || u >= n ? u : v));
        if (u == v)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": self-loop rejected at vertex " + std::to_string(u));
        gb.add_edge(int(u), int(v));
        ++seen;
    }
    if (seen < m)
        throw std::invalid_argument("edge list ends early: expected " + std::to_string(m) +
                                    " edges, found " + std::to_string(seen));
    while (std::getline(in, line)) {
        ++lineno;
        if (!line_is_blank(line))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": unexpected content after the declared edges");
    }
    return gb.build();
}

inline Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw std::invalid_argument("graph JSON must be an object with \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer())
        throw std::invalid_argument("graph JSON field \"n\" must be an integer");
    if (!doc["edges"].is_array())
        throw std::invalid_argument("graph JSON field \"edges\" must be an array of [u, v] pairs");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("graph JSON edges must be [u, v] integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return new_graph(doc["n"].get<int>(), edges);
}

}  // namespace detail

// format: "auto" (sniff: '{' opens JSON), "json", or "edgelist".
inline Graph parse_graph(const std::string& text, const std::string& format = "auto") {
    if (format == "json") return detail::parse_graph_json(text);
    if (format == "edgelist") return detail::parse_graph_edgelist(text);
    if (format != "auto")
        throw std::invalid_argument("unknown graph format: " + format +
                                    " (expected auto, json, or edgelist)");
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw std::invalid_argument("empty graph document");
    return text[i] == '{' ? detail::parse_graph_json(text) : detail::parse_graph_edgelist(text);
}

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc;
}

inline std::string emit_graph_json(const Graph& g) { return graph_to_json(g).dump(2) + "\n"; }

inline std::string emit_graph_edgelist(const Graph& g) {
    auto es = g.edges();
    std::ostringstream out;
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

inline std::string emit_graph_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::ordered_json witness_to_json(const WitnessFamily& w) {
    nlohmann::ordered_json doc;
    doc["classes"] = w.coloring.classes;
    doc["pivots"] = w.pivots;
    doc["x_sets"] = w.x_sets;
    return doc;
}

inline std::string emit_witness_json(const WitnessFamily& w) {
    return witness_to_json(w).dump(2) + "\n";
}

inline WitnessFamily parse_witness_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("witness JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("classes") || !doc.contains("pivots") ||
        !doc.contains("x_sets"))
        throw std::invalid_argument(
            "witness JSON must be an object with \"classes\", \"pivots\", and \"x_sets\"");
    WitnessFamily w;
    try {
        w.coloring.classes = doc["classes"].get<std::vector<std::vector<int>>>();
        w.pivots = doc["pivots"].get<std::vector<int>>();
        w.x_sets = doc["x_sets"].get<std::vector<std::vector<std::vector<int>>>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("witness JSON has malformed fields: ") + e.what());
    }
    return w;
}

inline nlohmann::ordered_json realization_to_json(const IntervalRealization& r) {
    nlohmann::ordered_json doc;
    doc["intervals"] = nlohmann::ordered_json::array();
    for (const auto& [l, h] : r.intervals) doc["intervals"].push_back({l, h});
    return doc;
}

inline std::string emit_realization_json(const IntervalRealization& r) {
    return realization_to_json(r).dump(2) + "\n";
}

inline nlohmann::ordered_json boxes_to_json(const BoxRepresentation& b) {
    nlohmann::ordered_json doc;
    doc["k"] = b.k;
    doc["boxes"] = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < b.boxes.size(); ++v) {
        nlohmann::ordered_json sides = nlohmann::ordered_json::array();
        for (const auto& [l, h] : b.boxes[v]) sides.push_back({l, h});
        doc["boxes"][std::to_string(v)] = std::move(sides);
    }
    return doc;
}

inline std::string emit_boxes_json(const BoxRepresentation& b) {
    return boxes_to_json(b).dump(2) + "\n";
}

inline nlohmann::ordered_json witness_report_to_json(const WitnessReport& rep) {
    nlohmann::ordered_json doc;
    doc["ok"] = rep.ok();
    doc["containment_ok"] = rep.containment_ok;
    doc["chains_ok"] = rep.chains_ok;
    doc["exclusion_ok"] = rep.exclusion_ok;
    doc["violations"] = rep.violations;
    return doc;
}

inline nlohmann::ordered_json family_to_json(const SplitIntervalFamily& fam) {
    nlohmann::ordered_json doc;
    doc["member_count"] = fam.members.size();
    doc["members"] = nlohmann::ordered_json::array();
    for (const auto& m : fam.members) {
        nlohmann::ordered_json entry;
        entry["independent_side"] = m.partition.independent_set;
        entry["clique_side"] = m.partition.clique;
        entry["graph"] = graph_to_json(m.graph);
        doc["members"].push_back(std::move(entry));
    }
    doc["notes"] = fam.notes;
    doc["intersection_equals_base"] = true;  // build_family verified it or threw
    return doc;
}

inline nlohmann::ordered_json crown_report_to_json(const CrownSearchReport& rep) {
    nlohmann::ordered_json doc;
    doc["side"] = rep.side;
    doc["non_edge_count"] = rep.non_edge_count;
    doc["exhaustive"] = rep.exhaustive;
    doc["trials"] = rep.trials;
    doc["seed"] = rep.seed;
    doc["found_cover"] = rep.found_cover;
    doc["proven_exceeds_two"] = rep.proven_exceeds_two;
    doc["best_coverage"] = rep.best_coverage;
    doc["best_trial"] = rep.best_trial;
    if (rep.uncovered_example.first >= 0)
        doc["uncovered_example"] = {rep.uncovered_example.first, rep.uncovered_example.second};
    else
        doc["uncovered_example"] = nullptr;
    doc["cover_added_first"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : rep.cover_added_first) doc["cover_added_first"].push_back({u, v});
    doc["cover_added_second"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : rep.cover_added_second) doc["cover_added_second"].push_back({u, v});
    return doc;
}

namespace detail {

inline const char* svg_palette(int i) {
    static const char* kColors[10] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                      "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    return kColors[i % 10];
}

}  // namespace detail

// SVG figure for 1- or 2-dimensional box representations: stacked segments
// for k = 1, axis-aligned rectangles for k = 2, both with vertex labels.
inline std::string emit_boxes_svg(const BoxRepresentation& b) {
    if (b.k != 1 && b.k != 2)
        throw std::invalid_argument(
            "unsupported combination: svg emission requires k in {1, 2} (got k=" +
            std::to_string(b.k) + ")");
    const int nv = int(b.boxes.size());
    const int unit = 40, margin = 50;
    std::ostringstream out;

    if (b.k == 1) {
        int lmin = 0, lmax = 1;
        for (const auto& box : b.boxes) {
            lmin = std::min(lmin, box[0].first);
            lmax = std::max(lmax, box[0].second);
        }
        int width = (lmax - lmin) * unit + 2 * margin;
        int height = 30 + nv * 26 + 16;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
            << "<style>text{font:12px sans-serif;}</style>\n";
        for (int v = 0; v < nv; ++v) {
            int y = 30 + v * 26;
            int x1 = margin + (b.boxes[std::size_t(v)][0].first - lmin) * unit;
            int x2 = margin + (b.boxes[std::size_t(v)][0].second - lmin) * unit;
            if (x2 - x1 < 3) x2 = x1 + 3;
            out << "<line x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
                << "\" stroke=\"" << detail::svg_palette(v)
                << "\" stroke-width=\"6\" stroke-linecap=\"round\" stroke-opacity=\"0.85\"/>\n"
                << "<text x=\"" << (x1 - 8) << "\" y=\"" << (y + 4)
                << "\" text-anchor=\"end\">" << v << "</text>\n";
        }
        out << "</svg>\n";
        return out.str();
    }

    int xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    for (const auto& box : b.boxes) {
        xmin = std::min(xmin, box[0].first);
        xmax = std::max(xmax, box[0].second);
        ymin = std::min(ymin, box[1].first);
        ymax = std::max(ymax, box[1].second);
    }
    int width = (xmax - xmin) * unit + 2 * margin;
    int height = (ymax - ymin) * unit + 2 * margin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<style>text{font:12px sans-serif;}</style>\n";
    for (int v = 0; v < nv; ++v) {
        const auto& box = b.boxes[std::size_t(v)];
        int x = margin + (box[0].first - xmin) * unit;
        int w = (box[0].second - box[0].first) * unit;
        int y = margin + (ymax - box[1].second) * unit;  // larger coordinate drawn higher
        int h = (box[1].second - box[1].first) * unit;
        if (w < 3) w = 3;
        if (h < 3) h = 3;
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
            << "\" fill=\"" << detail::svg_palette(v) << "\" fill-opacity=\"0.3\" stroke=\""
            << detail::svg_palette(v) << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << (x + w / 2) << "\" y=\"" << (y + h / 2 + 4)
            << "\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace boxkit

#endif
