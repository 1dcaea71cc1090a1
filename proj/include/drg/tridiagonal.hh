#ifndef DRG_TRIDIAGONAL_HH
#define DRG_TRIDIAGONAL_HH

#include <vector>

namespace drg
{
    /**
     * Eigenvalues of the real symmetric tridiagonal matrix with the given
     * diagonal (length n) and off-diagonal (length n-1), by the implicit QL
     * method with Wilkinson-style shifts. Returned in ascending order.
     *
     * Throws VerificationError if an eigenvalue fails to converge within 60
     * sweeps.
     */
    auto symmetric_tridiagonal_eigenvalues(std::vector<double> diagonal,
            std::vector<double> off_diagonal) -> std::vector<double>;
}

#endif
