#pragma once

#include "coqkit/braid.hpp"
#include "coqkit/explorer.hpp"
#include "coqkit/invariants.hpp"
#include "coqkit/proper.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coqkit {

using Json = nlohmann::ordered_json;

struct QuiverFile {
    Quiver quiver;
    std::optional<CyclicOrdering> order;
};

// {"vertices":[...],"arrows":[["a","b",3],...],"order":[...]}; ParseError on malformed input.
QuiverFile parse_quiver_json(const std::string& text);
QuiverFile load_quiver_file(const std::string& path);
Json quiver_json(const Quiver& q, const std::optional<CyclicOrdering>& order = std::nullopt);
std::string dump_quiver(const Quiver& q, const std::optional<CyclicOrdering>& order = std::nullopt);

// Integers beyond 64 bits are written as decimal strings.
Json int_json(const Int& x);
Int json_int(const Json& j);
Json poly_json(const IntPoly& p);
Json lattice_json(const PolyLattice& lat);
Json matrix_json(const IntMat& m);
Json cycle_json(const Quiver& q, const Cycle& c);

Json verdict_json(const TotallyProperVerdict& v);
Json invariant_report_json(const InvariantReport& r);
Json class_report_json(const ClassReport& r);
Json collision_json(const CollisionReport& r, const std::vector<std::string>& labels);
Json loq_json(const LinearlyOrderedQuiver& loq);

}  // namespace coqkit
