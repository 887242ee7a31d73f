#pragma once

// Dense rational Gaussian elimination for the small systems that appear in
// classifier branches and structure-constant extraction.

#include <optional>
#include <vector>

#include "magb/numeric.hpp"

namespace magb {

// kernel basis of {x : row . x = 0 for every row}
std::vector<std::vector<Rat>> rat_kernel(std::vector<std::vector<Rat>> rows, int ncols);

// any x with A x = b (rows of A given), or nullopt
std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> rows, std::vector<Rat> b);

}  // namespace magb
