#ifndef COSPEC_SERIALIZE_HPP
#define COSPEC_SERIALIZE_HPP

#include <json.hpp>

#include "cospec/charpoly.hpp"
#include "cospec/family.hpp"
#include "cospec/matching.hpp"
#include "cospec/search.hpp"
#include "cospec/switching.hpp"

namespace cospec {

// Big integers travel as decimal strings so no width is ever lost.
nlohmann::json to_json(const CharPoly& p);
nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const TutteViolator& t);
nlohmann::json to_json(const SwitchingPartition& p);  // {"X":[...]}, Y implied
nlohmann::json to_json(const CospectralClass& c);
nlohmann::json to_json(const ScanResult& r);

/// The construct sidecar: {b, parity, order, switched, blocks, X, W, u_v_pairs}.
nlohmann::json layout_sidecar(const FamilyLayout& layout, bool switched);

/// Reads {"X":[...]} back into a partition for the given graph.
SwitchingPartition partition_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace cospec

#endif
