// Generators for the studied state families, plus seeded random samplers
// for property tests. Basis labels run 0..d-1 left to right; each family's
// parameter range is validated at construction.

#pragma once

#include <cstdint>
#include <string>

#include "entmom/density.hpp"

namespace entmom {

struct FamilyParam {
    std::string family;
    double value;
    FamilyParam(std::string family, double value);  // OutOfRange on bad ranges
};

// w |phi><phi| + (1-w)/4 I4 with phi = (|00> + |11>)/sqrt(2); dims (2,2);
// entangled iff w > 1/3
DensityMatrix werner(double w);

// the 2x4 bound entangled family, 0 < b < 1; dims (2,4); PPT for all b
DensityMatrix sigma_b(double b);

// 2/7 |Psi><Psi| + alpha/7 sigma_plus + (5-alpha)/7 sigma_minus on two
// qutrits, 2 <= alpha <= 5; separable below 3, PPT-entangled on [3,4],
// NPT above 4
DensityMatrix rho_alpha(double alpha);

// the 3x3 bound entangled family, 0 < a < 1; dims (3,3); PPT for all a
DensityMatrix sigma_a(double a);

// normalized projector onto the complement of the five-vector Tiles
// unextendible product basis; dims (3,3); rank 4, PPT, entangled
DensityMatrix upb_tiles();

// gamma I/8 + (1-gamma)|GHZ><GHZ|, dims (2,2,2)
DensityMatrix ghz_noise(double gamma);

// kappa I/8 + (1-kappa)|W><W|, dims (2,2,2)
DensityMatrix w_noise(double kappa);

// Convex mixture of `terms` random product states: Haar-random pure local
// factors, Dirichlet-uniform weights via normalized exponentials.
// Deterministic per seed (see README for the sampling recipe).
DensityMatrix random_separable(const Dims& dims, std::size_t terms, std::uint64_t seed);

// Random full-rank mixed state: G G^dagger / Tr(G G^dagger) with G a matrix
// of standard complex normals. Deterministic per seed.
DensityMatrix random_density(const Dims& dims, std::uint64_t seed);

DensityMatrix make_state(const FamilyParam& param);

// String ids: werner:<w> | sigma_b:<b> | rho_alpha:<alpha> | sigma_a:<a> |
// upb_tiles | ghz:<gamma> | w:<kappa> | sep:<d1xd2[xd3]>:<terms>:<seed> |
// file:<path> (plain-text matrix format)
DensityMatrix make_state(const std::string& id);

}  // namespace entmom
