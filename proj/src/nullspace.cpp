#include "dnr/nullspace.hpp"

#include <stdexcept>

namespace dnr {

NullspaceResult nullspace(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("nullspace: empty matrix");
    if (!(tol > 0)) throw std::invalid_argument("nullspace: tol must be positive");

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();

    NullspaceResult out;
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    out.rank = rank;
    for (int c = rank; c < m.cols(); ++c) {
        Eigen::VectorXcd v = svd.matrixV().col(c);
        // columns beyond the numerical rank; V is unitary so they are unit norm
        out.basis.push_back(v);
    }
    return out;
}

}  // namespace dnr
