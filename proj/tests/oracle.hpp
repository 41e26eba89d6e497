// Test-only oracles, deliberately independent of the library's
// Householder/QL eigensolver and of the Graph adjacency construction.
#pragma once

#include <string>
#include <vector>

#include "threshold/matrix.hpp"

namespace oracle {

// Number of eigenvalues of a strictly below x, via the inertia of a - x*I
// computed by an LDL^T factorization (Sylvester's law).
int count_below(const threshold::SymmetricMatrix& a, double x);

// All eigenvalues, ascending, each bracketed by bisection on count_below to
// within width_tol.
std::vector<double> bisect_eigenvalues(const threshold::SymmetricMatrix& a,
                                       double width_tol = 1e-11);

// Adjacency built straight from the recursive definition: start with one
// vertex, then per character add an isolated vertex (0) or a vertex joined
// to everything so far (1).
threshold::SymmetricMatrix adjacency_by_construction(const std::string& creation);

int edge_count(const threshold::SymmetricMatrix& a);
int triangle_count(const threshold::SymmetricMatrix& a);

}  // namespace oracle
