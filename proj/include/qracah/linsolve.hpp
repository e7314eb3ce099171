#pragma once

#include <vector>

#include "qracah/scalar.hpp"

namespace qracah {

// Unique solution of an (over)determined system rows * x = rhs. Throws
// NoSolution when the system is inconsistent or the solution is not unique.
// Exact backends test consistency literally.
std::vector<Scalar> solve_unique(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs);

}  // namespace qracah
