#pragma once

#include "coqkit/io.hpp"

#include <string>

#ifndef COQKIT_DATA_DIR
#define COQKIT_DATA_DIR "data/quivers"
#endif

namespace fixture {

inline coqkit::QuiverFile load(const std::string& name) {
    return coqkit::load_quiver_file(std::string(COQKIT_DATA_DIR) + "/" + name + ".json");
}

inline coqkit::COQ coq(const std::string& name) {
    auto f = load(name);
    return {f.quiver, f.order ? *f.order : coqkit::CyclicOrdering::standard(f.quiver)};
}

inline coqkit::COQ with_order(const coqkit::Quiver& q, const std::vector<std::string>& names) {
    return {q, coqkit::CyclicOrdering::from_names(q, names)};
}

}  // namespace fixture
