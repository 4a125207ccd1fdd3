#pragma once

#include <Eigen/Dense>
#include <vector>

namespace dnr {

struct NullspaceResult {
    int rank = 0;
    std::vector<Eigen::VectorXcd> basis;       // unit-norm kernel vectors
    std::vector<double> singular_values;       // descending
};

// Rank-revealing kernel of a dense complex matrix via SVD. A singular value
// counts toward the rank when it exceeds tol times the largest one.
NullspaceResult nullspace(const Eigen::MatrixXcd& m, double tol);

}  // namespace dnr
