#include "cospec/serialize.hpp"

#include "cospec/graph_io.hpp"

namespace cospec {

using nlohmann::json;

json to_json(const CharPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.str());
    return coeffs;
}

json to_json(const Matching& m) {
    json edges = json::array();
    for (const auto& [u, v] : m.edges) edges.push_back(json::array({u, v}));
    return edges;
}

json to_json(const TutteViolator& t) {
    return json{{"S", t.s},
                {"size", t.s.size()},
                {"odd_components", t.odd_components},
                {"component_orders", t.component_orders},
                {"violating", t.violating()}};
}

json to_json(const SwitchingPartition& p) { return json{{"X", p.x}}; }

json to_json(const CospectralClass& c) {
    std::vector<bool> flags(c.pm_flags.begin(), c.pm_flags.end());
    return json{{"char_poly", to_json(c.poly)},
                {"members", c.members},
                {"pm_flags", flags},
                {"mixed", c.mixed()}};
}

json to_json(const ScanResult& r) {
    json per_n = json::array();
    for (const auto& s : r.per_n) {
        per_n.push_back(json{{"n", s.n},
                             {"graphs", s.graph_count},
                             {"classes", s.class_count},
                             {"nontrivial_classes", s.nontrivial_class_count}});
    }
    json discrepant = json::array();
    for (const auto& cls : r.discrepant) discrepant.push_back(to_json(cls));
    return json{{"k", r.k},
                {"n_max", r.n_max},
                {"per_n", per_n},
                {"discrepant_classes", discrepant},
                {"discrepant_count", r.discrepant.size()}};
}

json layout_sidecar(const FamilyLayout& layout, bool switched) {
    json blocks = json::array();
    for (const auto& block : layout.blocks)
        blocks.push_back(json{{"name", block.name}, {"start", block.start}, {"size", block.size}});
    json pairs = json::array();
    for (const auto& labels : layout.u_v_pairs) {
        json entry;
        if (labels.anchors.size() == 1)
            entry["u"] = labels.anchors.front();
        else
            entry["u"] = labels.anchors;
        entry["v"] = labels.v;
        pairs.push_back(entry);
    }
    return json{{"b", layout.b},
                {"parity", layout.b % 2 == 1 ? "odd" : "even"},
                {"order", layout.graph.size()},
                {"switched", switched},
                {"blocks", blocks},
                {"X", layout.partition.x},
                {"W", layout.w},
                {"u_v_pairs", pairs}};
}

SwitchingPartition partition_from_json(const Graph& g, const json& j) {
    if (!j.contains("X")) throw std::invalid_argument("partition JSON needs an \"X\" array");
    return make_partition(g, j.at("X").get<VertexSet>());
}

}  // namespace cospec
