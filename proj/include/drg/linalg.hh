#ifndef DRG_LINALG_HH
#define DRG_LINALG_HH

#include <Eigen/Dense>

#include <cstdint>

namespace drg
{
    // Row-major so that Map<VectorXd>(m.data(), m.size()) is the row-major
    // flattening used for the trace inner product.
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using Vector = Eigen::VectorXd;

    /// Real trace inner product <R, S> = tr(R^t S) = sum of entrywise products.
    inline auto inner(const Matrix & r, const Matrix & s) -> double
    {
        return r.cwiseProduct(s).sum();
    }

    inline auto norm(const Matrix & r) -> double
    {
        return r.norm();
    }

    inline auto max_abs(const Matrix & r) -> double
    {
        return r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
    }

    inline auto to_real(const IntMatrix & m) -> Matrix
    {
        return m.cast<double>();
    }

    /// Diagonal matrix from its diagonal.
    inline auto diagonal_matrix(const Vector & d) -> Matrix
    {
        Matrix result = Matrix::Zero(d.size(), d.size());
        result.diagonal() = d;
        return result;
    }
}

#endif
