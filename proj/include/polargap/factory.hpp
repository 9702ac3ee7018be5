#pragma once

#include <string>
#include <vector>

#include "polargap/density.hpp"

namespace polargap {

/// Density families by CLI name.
const std::vector<std::string>& density_families();

/// Builds a density by family name and branch label:
///   onegap 1..3, onegap-cusp 1..2, twogap-pm plus|minus, twogap-alpha 1..3,
///   backlund-onegap 1..3 (hat densities), backlund-twogap plus|minus|1..3
///   (closed forms), soliton (branch ignored, parameter gamma).
Density make_density(const std::string& family, const std::string& branch, const elliptic::LatticeParams& L,
                     double gamma = 1.0 / 3.0);

}  // namespace polargap
