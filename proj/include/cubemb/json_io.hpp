#pragma once

// JSON codecs for the external file formats. The embedding document is
//   {"rotation": [[d,d,d], ...], "signature": [+1/-1, ...]}
// with darts encoded as 2*edge_id + end_bit. Face sets export as a list of
// walks, each walk a list of {"edge", "from", "to"} traversal records.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "embedding.hpp"
#include "enumeration.hpp"
#include "experiments.hpp"
#include "facial_diagram.hpp"
#include "graph.hpp"
#include "reduction.hpp"
#include "twist.hpp"

namespace cubemb {

using json = nlohmann::json;

inline json embedding_to_json(const Embedding& emb) {
    json j;
    j["rotation"] = json::array();
    for (const auto& t : emb.rotation) j["rotation"].push_back({t[0], t[1], t[2]});
    j["signature"] = emb.signature;
    return j;
}

inline Embedding embedding_from_json(const CubicGraph& g, const json& j) {
    if (!j.is_object() || !j.contains("rotation") || !j.contains("signature"))
        throw std::invalid_argument(
            "embedding document must be an object with \"rotation\" and \"signature\"");
    Embedding emb;
    for (const auto& t : j.at("rotation")) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("rotation entries must be triples of dart ids");
        emb.rotation.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    emb.signature = j.at("signature").get<std::vector<int>>();
    validate_embedding(g, emb);
    canonicalize(emb);
    return emb;
}

inline json faces_to_json(const CubicGraph& g, const FaceSet& fs) {
    json walks = json::array();
    for (const auto& w : fs.walks) {
        json walk = json::array();
        for (int pos = 0; pos < w.length(); ++pos)
            walk.push_back({{"edge", w.edge_at(pos)},
                            {"from", w.tail_at(g, pos)},
                            {"to", w.head_at(g, pos)}});
        walks.push_back(std::move(walk));
    }
    return walks;
}

inline json class_counts_to_json(const ClassCounts& c) {
    return {{"bad", c.bad}, {"good", c.good}, {"regular", c.regular}};
}

inline json diagram_to_json(const FacialDiagram& fd) {
    json j;
    j["nodes"] = json::array();
    for (const auto& n : fd.nodes)
        j["nodes"].push_back(
            {{"id", n.id}, {"walk", n.walk}, {"position", n.pos}, {"edge", n.edge}});
    j["links"] = json::array();
    for (const auto& l : fd.links) {
        json link;
        link["endpoints"] = {l.a, l.b};
        switch (l.kind) {
            case LinkKind::Facial:
                link["kind"] = "facial";
                link["vertex"] = l.vertex;
                break;
            case LinkKind::Singular:
                link["kind"] = "singular";
                link["edge"] = l.edge;
                link["sign"] = l.sign > 0 ? "+" : "-";
                break;
            case LinkKind::Regular:
                link["kind"] = "regular";
                link["edge"] = l.edge;
                break;
        }
        j["links"].push_back(std::move(link));
    }
    return j;
}

inline json twist_record_to_json(const TwistRecord& r) {
    return {{"edge", r.edge},
            {"before", class_counts_to_json(r.before)},
            {"after", class_counts_to_json(r.after)},
            {"faces_before", r.faces_before},
            {"faces_after", r.faces_after}};
}

inline json twist_sequence_to_json(const TwistSequence& s) {
    json steps = json::array();
    for (const auto& r : s.steps) steps.push_back(twist_record_to_json(r));
    return {{"initial_embedding", embedding_to_json(s.initial)},
            {"final_embedding", embedding_to_json(s.final_embedding)},
            {"initial_counts", class_counts_to_json(s.initial_counts)},
            {"final_counts", class_counts_to_json(s.final_counts)},
            {"steps", std::move(steps)}};
}

inline json search_outcome_to_json(const SearchOutcome& o) {
    json j;
    j["status"] =
        o.status == SearchStatus::CircularFound ? "circular_found" : "budget_exhausted";
    j["witness"] = o.witness ? embedding_to_json(*o.witness) : json(nullptr);
    j["stats"] = {{"states_visited", o.states_visited}, {"best_singular", o.best_singular}};
    return j;
}

inline json rational_to_json(const Rational& r) {
    return {{"num", r.num}, {"den", r.den}};
}

inline json enumeration_summary_to_json(const EnumerationSummary& s) {
    return {{"graph", s.graph},
            {"n", s.n},
            {"m", s.m},
            {"total_configurations", s.total_configurations},
            {"min_singular", s.min_singular},
            {"min_config_index", s.min_config_index},
            {"min_witness", embedding_to_json(s.min_witness)},
            {"circular_count", s.circular_count},
            {"expected",
             {{"bad", rational_to_json(s.expectations.bad)},
              {"good", rational_to_json(s.expectations.good)},
              {"regular", rational_to_json(s.expectations.regular)}}},
            {"conjectured_per_class", rational_to_json(s.conjectured_per_class)}};
}

inline json experiment_report_to_json(const ExperimentReport& r) {
    auto stats = [](const ClassStats& s) {
        return json{{"mean", s.mean}, {"variance", s.variance}, {"ci99", s.ci99}};
    };
    json j = {{"graph", r.graph},  {"n", r.n},
              {"m", r.m},          {"samples", r.samples},
              {"seed", r.seed},    {"workers", r.workers},
              {"bad", stats(r.bad)}, {"good", stats(r.good)},
              {"regular", stats(r.regular)}, {"conjectured", r.conjectured}};
    if (r.exact) {
        j["exact"] = {{"bad", rational_to_json(r.exact->bad)},
                      {"good", rational_to_json(r.exact->good)},
                      {"regular", rational_to_json(r.exact->regular)},
                      {"deviation_from_conjecture",
                       {{"bad", r.exact->bad.value() - r.conjectured},
                        {"good", r.exact->good.value() - r.conjectured},
                        {"regular", r.exact->regular.value() - r.conjectured}}}};
    }
    return j;
}

inline json violations_to_json(const std::vector<PropertyViolation>& vs) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back({{"property", v.property},
                       {"walk", v.walk},
                       {"positions", v.positions},
                       {"detail", v.detail}});
    return arr;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline json read_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << text;
}

}  // namespace cubemb
