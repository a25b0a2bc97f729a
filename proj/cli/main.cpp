#include "coqkit/braid.hpp"
#include "coqkit/explorer.hpp"
#include "coqkit/io.hpp"
#include "coqkit/proper.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace coqkit;

namespace {

enum Exit { ok = 0, parse_failure = 1, domain_failure = 2, resource_failure = 3, internal_failure = 4 };

struct Common {
    bool json = false;
    std::string order;
    std::size_t cap = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        auto b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(cur.substr(b, e - b + 1));
    }
    return out;
}

std::size_t cap_of(const Common& c) { return c.cap ? c.cap : cycle_cap_from_env(); }

CyclicOrdering resolve_order(const QuiverFile& f, const Common& c) {
    if (!c.order.empty()) {
        try {
            return CyclicOrdering::from_names(f.quiver, split(c.order, ','));
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad --order: ") + e.what());
        }
    }
    if (f.order) return *f.order;
    std::cerr << "warning: no cyclic ordering given; using the file's vertex order "
                 "(ordering-dependent results may change with the ordering)\n";
    return CyclicOrdering::standard(f.quiver);
}

std::size_t vertex_of(const Quiver& q, const std::string& name) {
    if (!q.has_vertex(name)) throw ParseError("unknown vertex '" + name + "'");
    return q.index(name);
}

std::vector<std::size_t> parse_ks(const std::string& s) {
    std::vector<std::size_t> ks;
    for (const auto& t : split(s, ',')) {
        try {
            std::size_t pos = 0;
            long v = std::stol(t, &pos);
            if (pos != t.size() || v < 1) throw std::invalid_argument(t);
            ks.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ParseError("bad --k value '" + t + "'");
        }
    }
    return ks;
}

ExplorationLimits parse_limits(const std::string& s) {
    ExplorationLimits l;
    for (const auto& item : split(s, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("bad --limits entry '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        long v;
        try {
            std::size_t pos = 0;
            v = std::stol(val, &pos);
            if (pos != val.size()) throw std::invalid_argument(val);
        } catch (const std::exception&) {
            throw ParseError("bad --limits value '" + item + "'");
        }
        if (v <= 0) throw ParseError("--limits values must be positive");
        if (key == "depth") l.max_depth = static_cast<std::size_t>(v);
        else if (key == "size") l.max_quivers = static_cast<std::size_t>(v);
        else if (key == "entry") l.max_entry = v;
        else throw ParseError("unknown --limits key '" + key + "'");
    }
    return l;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string names_of(const Quiver& q, const std::vector<std::size_t>& vs) {
    std::string s;
    for (auto v : vs) s += (s.empty() ? "" : ",") + q.name(v);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coqkit: cyclically ordered quivers, proper mutations and their invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_flag("--json", c.json, "Emit JSON");
    app.add_option("--order", c.order, "Cyclic ordering \"a,b,c\" (overrides the file)");
    app.add_option("--cap", c.cap, "Chordless-cycle cap (default 10000 or $COQKIT_CAP)");

    std::string file, at, vertex, k_list = "2", limits, word, to;
    std::vector<std::string> files;
    std::size_t budget = 10000;
    bool proper = false, dot = false, no_prune = false;

    auto file_arg = [&](CLI::App* sub) { sub->add_option("file", file, "Quiver JSON file")->required(); };

    auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at the given vertices, left to right");
    file_arg(mutate_cmd);
    mutate_cmd->add_option("--at", at, "Vertex or comma-separated sequence")->required();

    auto* inv_cmd = app.add_subcommand("invariants", "Full invariant report");
    file_arg(inv_cmd);
    inv_cmd->add_option("--k", k_list, "Lattice indices, e.g. 2,3");

    auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial");
    file_arg(alex_cmd);

    auto* lat_cmd = app.add_subcommand("lattice", "Alexander lattice d_k in Hermite normal form");
    file_arg(lat_cmd);
    lat_cmd->add_option("--k", k_list, "Lattice index");

    auto* check_cmd = app.add_subcommand("check-proper", "Properness of a vertex or of the COQ");
    file_arg(check_cmd);
    check_cmd->add_option("--vertex", vertex, "Vertex to test in the given ordering");

    auto* pm_cmd = app.add_subcommand("proper-mutate", "Proper mutation of a COQ");
    file_arg(pm_cmd);
    pm_cmd->add_option("--at", at, "Vertex or comma-separated sequence")->required();

    auto* find_cmd = app.add_subcommand("find-order", "Search all cyclic orderings for a proper one");
    file_arg(find_cmd);

    auto* cand_cmd = app.add_subcommand("candidate-order", "Ordering with winding +-1 on oriented and 0 on other chordless cycles");
    file_arg(cand_cmd);

    auto* wp_cmd = app.add_subcommand("wiggle-path", "Wiggles taking the file ordering to --to");
    file_arg(wp_cmd);
    wp_cmd->add_option("--to", to, "Target ordering \"a,b,c\"")->required();

    auto* braid_cmd = app.add_subcommand("braid", "Apply a signed braid word to the linearly ordered quiver");
    file_arg(braid_cmd);
    braid_cmd->add_option("--word", word, "Word such as \"s2 S1 r3\"")->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit under the sign flips");
    file_arg(orbit_cmd);

    auto* explore_cmd = app.add_subcommand("explore", "Mutation class (or proper mutation class with --proper)");
    file_arg(explore_cmd);
    explore_cmd->add_option("--limits", limits, "depth=,size=,entry=");
    explore_cmd->add_flag("--proper", proper, "Explore proper mutations of the COQ");
    explore_cmd->add_flag("--dot", dot, "Print the exchange graph in GraphViz format");

    auto* forkless_cmd = app.add_subcommand("forkless", "Forkless part of the mutation class");
    file_arg(forkless_cmd);
    forkless_cmd->add_option("--limits", limits, "depth=,size=,entry=");
    forkless_cmd->add_flag("--dot", dot, "Print the exchange graph in GraphViz format");

    auto* collide_cmd = app.add_subcommand("collide", "Group quivers by invariants");
    collide_cmd->add_option("files", files, "Quiver JSON files")->required();
    collide_cmd->add_option("--k", k_list, "Lattice indices");

    auto* tp_cmd = app.add_subcommand("verify-tp", "Search the proper mutation class for improper COQs");
    file_arg(tp_cmd);
    tp_cmd->add_option("--budget", budget, "Maximum wiggle classes to visit");
    tp_cmd->add_flag("--no-fork-pruning", no_prune, "Expand forks at every vertex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failure;
    }

    try {
        const std::size_t cap = cap_of(c);
        if (mutate_cmd->parsed()) {
            auto f = load_quiver_file(file);
            Quiver q = f.quiver;
            for (const auto& v : split(at, ',')) q = mutate(q, vertex_of(q, v));
            std::cout << dump_quiver(q);
        } else if (inv_cmd->parsed()) {
            auto f = load_quiver_file(file);
            auto ord = resolve_order(f, c);
            auto r = invariant_report(f.quiver, ord.seq(), parse_ks(k_list));
            if (c.json) {
                print(invariant_report_json(r));
            } else {
                std::cout << "alexander: " << r.alexander.str() << "\n"
                          << "markov: " << r.markov.get_str() << "\n"
                          << "det: " << r.det.get_str() << "\nrank: " << r.rank << "\ngcds:";
                for (auto& g : r.gcds) std::cout << " " << g.get_str();
                std::cout << "\nfrobenius:";
                for (auto& p : r.frobenius) std::cout << " [" << p.str() << "]";
                std::cout << "\n";
                for (auto& [k, lat] : r.lattices) std::cout << "d" << k << ": " << lat.rows().size() << " HNF rows\n";
            }
        } else if (alex_cmd->parsed()) {
            auto f = load_quiver_file(file);
            auto p = alexander_polynomial(f.quiver, resolve_order(f, c).seq());
            if (c.json) print(poly_json(p));
            else std::cout << p.str() << "\n";
        } else if (lat_cmd->parsed()) {
            auto f = load_quiver_file(file);
            auto ks = parse_ks(k_list);
            if (ks.size() != 1) throw ParseError("lattice takes a single --k");
            auto lat = alexander_lattice(unipotent_companion(f.quiver, resolve_order(f, c).seq()).u, ks[0]);
            if (c.json) {
                print(lattice_json(lat));
            } else {
                for (const auto& row : lat.rows()) {
                    for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i].get_str();
                    std::cout << "\n";
                }
            }
        } else if (check_cmd->parsed()) {
            auto f = load_quiver_file(file);
            COQ coq{f.quiver, resolve_order(f, c)};
            if (!vertex.empty()) {
                std::size_t j = vertex_of(f.quiver, vertex);
                bool here = is_proper_vertex(coq, j);
                bool somewhere = is_proper_in_wiggle_class(coq, j, cap);
                if (c.json) print(Json{{"vertex", vertex}, {"proper", here}, {"proper_in_wiggle_class", somewhere}});
                else std::cout << (here ? "true" : "false") << "\n";
            } else {
                auto bad = first_improper_vertex(coq, cap);
                if (c.json) {
                    Json j{{"proper", !bad.has_value()}};
                    j["improper_vertex"] = bad ? Json(f.quiver.name(*bad)) : Json(nullptr);
                    print(j);
                } else {
                    std::cout << (bad ? "false" : "true") << "\n";
                }
            }
        } else if (pm_cmd->parsed()) {
            auto f = load_quiver_file(file);
            COQ coq{f.quiver, resolve_order(f, c)};
            for (const auto& v : split(at, ',')) coq = proper_mutate(coq, vertex_of(coq.quiver, v), cap);
            std::cout << dump_quiver(coq.quiver, coq.order);
        } else if (find_cmd->parsed() || cand_cmd->parsed()) {
            auto f = load_quiver_file(file);
            auto ord = find_cmd->parsed() ? find_proper_ordering(f.quiver, cap) : candidate_ordering(f.quiver, cap);
            if (c.json) print(Json{{"order", ord ? Json(ord->names(f.quiver)) : Json(nullptr)}});
            else if (ord) std::cout << names_of(f.quiver, ord->seq()) << "\n";
            else std::cout << "none\n";
        } else if (wp_cmd->parsed()) {
            auto f = load_quiver_file(file);
            auto from = resolve_order(f, c);
            CyclicOrdering target;
            try {
                target = CyclicOrdering::from_names(f.quiver, split(to, ','));
            } catch (const DomainError& e) {
                throw ParseError(std::string("bad --to: ") + e.what());
            }
            auto path = wiggle_path(f.quiver, from, target);
            Json j = Json::array();
            for (auto [u, v] : path) j.push_back(Json::array({f.quiver.name(u), f.quiver.name(v)}));
            if (c.json) {
                print(j);
            } else {
                for (auto [u, v] : path) std::cout << f.quiver.name(u) << " " << f.quiver.name(v) << "\n";
            }
        } else if (braid_cmd->parsed()) {
            auto f = load_quiver_file(file);
            LinearlyOrderedQuiver loq{f.quiver, resolve_order(f, c).seq()};
            auto w = parse_braid_word(word);
            auto r = act_word(loq, w);
            Json j = loq_json(r.loq);
            j["u"] = matrix_json(unipotent_companion(r.loq.quiver, r.loq.order).u);
            j["g"] = matrix_json(r.g);
            if (c.json) {
                print(j);
            } else {
                std::cout << "order: " << names_of(r.loq.quiver, r.loq.order) << "\n";
                for (const auto& a : r.loq.quiver.arrows())
                    std::cout << a.from << " -> " << a.to << " x" << a.mult.get_str() << "\n";
            }
        } else if (orbit_cmd->parsed()) {
            auto f = load_quiver_file(file);
            LinearlyOrderedQuiver loq{f.quiver, resolve_order(f, c).seq()};
            auto orbit = reversal_orbit(loq);
            Json j = Json::array();
            for (const auto& o : orbit) j.push_back(loq_json(o));
            if (c.json) print(j);
            else std::cout << orbit.size() << " quivers in the orbit\n";
        } else if (explore_cmd->parsed() || forkless_cmd->parsed()) {
            auto f = load_quiver_file(file);
            auto lim = limits.empty() ? ExplorationLimits{} : parse_limits(limits);
            ClassReport r;
            if (forkless_cmd->parsed()) r = forkless_part(f.quiver, lim);
            else if (proper) r = proper_mutation_class(COQ{f.quiver, resolve_order(f, c)}, lim, cap);
            else r = mutation_class(f.quiver, lim);
            if (dot) {
                std::cout << to_dot(r);
            } else if (c.json) {
                print(class_report_json(r));
            } else {
                std::size_t forks = 0;
                for (auto& m : r.members) forks += m.fork_return.has_value();
                std::cout << "members: " << r.members.size() << "\nforks: " << forks
                          << "\ncomplete: " << (r.complete ? "true" : "false") << "\n";
                for (auto& n : r.notes) std::cout << "note: " << n << "\n";
            }
        } else if (collide_cmd->parsed()) {
            std::vector<COQ> family;
            for (const auto& path : files) {
                auto f = load_quiver_file(path);
                family.push_back(COQ{f.quiver, f.order ? *f.order : CyclicOrdering::standard(f.quiver)});
            }
            auto r = collision_scan(family, parse_ks(k_list));
            if (c.json) {
                print(collision_json(r, files));
            } else {
                if (r.groups.empty()) std::cout << "no collisions\n";
                for (const auto& g : r.groups) {
                    std::cout << "alexander " << g.alexander.str() << ":";
                    for (auto i : g.members) std::cout << " " << files[i];
                    std::cout << (g.unresolved.empty() ? " (separated by further invariants)" : " (unresolved)") << "\n";
                }
            }
        } else if (tp_cmd->parsed()) {
            auto f = load_quiver_file(file);
            TotallyProperOptions opts;
            opts.budget = budget;
            opts.cap = cap;
            opts.prune_forks = !no_prune;
            auto v = verify_totally_proper(COQ{f.quiver, resolve_order(f, c)}, opts);
            if (c.json) {
                print(verdict_json(v));
            } else {
                std::cout << to_string(v.status) << " (explored " << v.explored << ")\n";
                if (v.witness)
                    std::cout << "improper vertex " << v.witness->quiver.name(*v.witness_vertex) << " in ordering "
                              << names_of(v.witness->quiver, v.witness->order.seq()) << "\n";
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_failure;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return domain_failure;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return resource_failure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_failure;
    }
    return ok;
}
