#pragma once

#include <memory>
#include <string>

#include "symdg/parse.hpp"
#include "symdg/poisson.hpp"
#include "symdg/render.hpp"

namespace th {

inline symdg::Polynomial P(int dim, const std::string& s) { return symdg::parse_polynomial(s, dim); }
inline symdg::DifferentialForm F(int dim, const std::string& s) { return symdg::parse_form(s, dim); }
inline symdg::Polyvector V(int dim, const std::string& s) { return symdg::parse_polyvector(s, dim); }

inline std::string fixture(const std::string& name) {
    return std::string(SYMDG_FIXTURE_DIR) + "/" + name;
}

inline std::shared_ptr<const symdg::PoissonStructure> load(const std::string& name) {
    return std::make_shared<const symdg::PoissonStructure>(
        symdg::load_poisson_json(fixture(name)));
}

}  // namespace th
