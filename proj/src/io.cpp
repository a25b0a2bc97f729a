#include "coqkit/io.hpp"

#include <fstream>
#include <sstream>

namespace coqkit {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

std::string string_value(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

Int json_int(const Json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int(std::to_string(j.get<unsigned long long>()))
                                                             : Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Int x;
        if (x.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
        return x;
    }
    throw ParseError("expected an integer");
}

Json int_json(const Int& x) {
    if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
    return Json(x.get_str());
}

QuiverFile parse_quiver_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("quiver file must be a JSON object");
    const Json& vs = field(doc, "vertices");
    if (!vs.is_array()) throw ParseError("'vertices' must be an array");
    std::vector<std::string> names;
    for (const auto& v : vs) names.push_back(string_value(v, "vertex name"));
    std::vector<Arrow> arrows;
    if (doc.contains("arrows")) {
        const Json& as = doc["arrows"];
        if (!as.is_array()) throw ParseError("'arrows' must be an array");
        for (const auto& a : as) {
            if (!a.is_array() || a.size() != 3) throw ParseError("each arrow must be [source, target, multiplicity]");
            arrows.push_back({string_value(a[0], "arrow source"), string_value(a[1], "arrow target"), json_int(a[2])});
        }
    }
    QuiverFile out;
    try {
        out.quiver = Quiver::from_arrows(names, arrows);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    if (doc.contains("order") && !doc["order"].is_null()) {
        const Json& os = doc["order"];
        if (!os.is_array()) throw ParseError("'order' must be an array");
        std::vector<std::string> order;
        for (const auto& v : os) order.push_back(string_value(v, "order entry"));
        try {
            out.order = CyclicOrdering::from_names(out.quiver, order);
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad order: ") + e.what());
        }
    }
    return out;
}

QuiverFile load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver_json(buf.str());
}

Json quiver_json(const Quiver& q, const std::optional<CyclicOrdering>& order) {
    Json j;
    j["vertices"] = q.vertices();
    Json arrows = Json::array();
    for (const auto& a : q.arrows()) arrows.push_back(Json::array({a.from, a.to, int_json(a.mult)}));
    j["arrows"] = arrows;
    if (order) j["order"] = order->names(q);
    return j;
}

std::string dump_quiver(const Quiver& q, const std::optional<CyclicOrdering>& order) {
    return quiver_json(q, order).dump(2) + "\n";
}

Json poly_json(const IntPoly& p) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(int_json(x));
    return Json{{"coeffs", c}, {"text", p.str()}};
}

Json matrix_json(const IntMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json lattice_json(const PolyLattice& lat) {
    Json rows = Json::array();
    for (const auto& r : lat.rows()) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(int_json(x));
        rows.push_back(row);
    }
    return Json{{"dim", lat.dim()}, {"hnf", rows}};
}

Json cycle_json(const Quiver& q, const Cycle& c) {
    Json j = Json::array();
    for (auto v : c.v) j.push_back(q.name(v));
    return j;
}

Json verdict_json(const TotallyProperVerdict& v) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.witness) {
        const Quiver& q = v.witness->quiver;
        Json w = quiver_json(q, v.witness->order);
        w["vertex"] = q.name(*v.witness_vertex);
        Json path = Json::array();
        for (auto k : v.path) path.push_back(q.name(k));
        w["path"] = path;
        j["witness"] = w;
    }
    j["explored"] = v.explored;
    return j;
}

Json invariant_report_json(const InvariantReport& r) {
    Json j;
    j["n"] = r.n;
    j["alexander"] = poly_json(r.alexander);
    j["markov"] = int_json(r.markov);
    j["det"] = int_json(r.det);
    j["rank"] = r.rank;
    Json g = Json::array();
    for (const auto& x : r.gcds) g.push_back(int_json(x));
    j["gcds"] = g;
    Json lats = Json::object();
    for (const auto& [k, lat] : r.lattices) lats["d" + std::to_string(k)] = lattice_json(lat);
    j["lattices"] = lats;
    Json fr = Json::array();
    for (const auto& p : r.frobenius) fr.push_back(poly_json(p));
    j["frobenius"] = fr;
    return j;
}

Json class_report_json(const ClassReport& r) {
    Json j;
    j["complete"] = r.complete;
    j["explored"] = r.explored;
    j["up_to_relabeling"] = r.up_to_relabeling;
    j["size"] = r.members.size();
    std::size_t forks = 0;
    Json members = Json::array();
    for (const auto& m : r.members) {
        Json e = quiver_json(m.quiver, m.order);
        e["depth"] = m.depth;
        if (m.fork_return) {
            e["fork_return"] = m.quiver.name(*m.fork_return);
            ++forks;
        } else {
            e["fork_return"] = nullptr;
        }
        e["det"] = int_json(m.det);
        e["rank"] = m.rank;
        if (m.alexander) e["alexander"] = m.alexander->str();
        if (m.markov) e["markov"] = int_json(*m.markov);
        members.push_back(e);
    }
    j["forks"] = forks;
    j["members"] = members;
    Json edges = Json::array();
    for (auto [a, b] : r.edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    j["notes"] = r.notes;
    return j;
}

Json collision_json(const CollisionReport& r, const std::vector<std::string>& labels) {
    Json j;
    Json fps = Json::array();
    for (std::size_t i = 0; i < r.fingerprints.size(); ++i) {
        const auto& f = r.fingerprints[i];
        Json e;
        e["label"] = labels.at(i);
        e["alexander"] = f.alexander.str();
        e["markov"] = int_json(f.markov);
        e["det"] = int_json(f.det);
        Json g = Json::array();
        for (const auto& x : f.gcds) g.push_back(int_json(x));
        e["gcds"] = g;
        fps.push_back(e);
    }
    j["members"] = fps;
    Json groups = Json::array();
    for (const auto& g : r.groups) {
        Json e;
        e["alexander"] = g.alexander.str();
        Json m = Json::array();
        for (auto i : g.members) m.push_back(labels.at(i));
        e["members"] = m;
        Json un = Json::array();
        for (const auto& u : g.unresolved) {
            Json s = Json::array();
            for (auto i : u) s.push_back(labels.at(i));
            un.push_back(s);
        }
        e["unresolved"] = un;
        e["resolved"] = g.unresolved.empty();
        groups.push_back(e);
    }
    j["collisions"] = groups;
    return j;
}

Json loq_json(const LinearlyOrderedQuiver& loq) {
    Json j = quiver_json(loq.quiver);
    Json order = Json::array();
    for (auto v : loq.order) order.push_back(loq.quiver.name(v));
    j["linear_order"] = order;
    return j;
}

}  // namespace coqkit
