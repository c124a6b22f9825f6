#pragma once

#include "quatcong/hecke.hpp"

#include <vector>

namespace quatcong {

// Everything the verifiers need at one level.
struct LevelData {
    long level = 0;
    long bound = 0;
    ClassSet classes;
    std::vector<Involution> involutions;  // one per p | N, ascending
    std::vector<BrandtMatrix> brandt;     // p <= bound, p not dividing N

    const BrandtMatrix& brandt_for(long p) const;
};

// bound <= 0 selects the Sturm bound; smaller explicit bounds are raised to it.
LevelData compute_level(long n, long bound = 0);
LevelData assemble_level(ClassSet cs, long bound = 0);

}  // namespace quatcong
