#include <drg/tridiagonal.hh>
#include <drg/errors.hh>

#include <algorithm>
#include <cmath>
#include <limits>

using std::vector;

namespace drg
{
    auto symmetric_tridiagonal_eigenvalues(vector<double> d, vector<double> e) -> vector<double>
    {
        const auto n = d.size();
        if (n == 0)
            return d;
        if (e.size() + 1 != n)
            throw VerificationError{ "tridiagonal: off-diagonal length must be one less than the diagonal" };

        constexpr int max_sweeps = 60;
        const double eps = std::numeric_limits<double>::epsilon();
        // e[i] couples rows i and i+1; pad so e[n-1] == 0 terminates the split search
        e.push_back(0.0);

        for (std::size_t l = 0 ; l < n ; ++l) {
            int sweeps = 0;
            while (true) {
                std::size_t m = l;
                for ( ; m + 1 < n ; ++m) {
                    double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                    if (std::abs(e[m]) <= eps * dd)
                        break;
                }
                if (m == l)
                    break;
                if (++sweeps > max_sweeps)
                    throw VerificationError{ "tridiagonal: QL iteration did not converge" };

                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;

                bool deflated = false;
                for (std::size_t i = m ; i-- > l ; ) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        // underflow: the matrix has split, restart on the smaller block
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        deflated = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (deflated)
                    continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        }

        std::sort(d.begin(), d.end());
        return d;
    }
}
