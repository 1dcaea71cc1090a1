#include <drg/bose_mesner.hh>
#include <drg/errors.hh>
#include <drg/tridiagonal.hh>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

using std::int64_t;
using std::span;
using std::string;
using std::vector;

namespace drg
{
    namespace
    {
        auto fail(const string & what, double residual, double threshold) -> VerificationError
        {
            std::ostringstream out;
            out << what << ": residual " << residual << " exceeds " << threshold;
            return VerificationError{ out.str() };
        }
    }

    auto spectrum(const IntersectionArray & array, int vertex_count, Tolerance tol) -> Spectrum
    {
        const int diameter = array.diameter;
        const int size = diameter + 1;
        const double k = static_cast<double>(array.valency());

        vector<double> diagonal(size), off(diameter);
        for (int i = 0 ; i < size ; ++i)
            diagonal[i] = static_cast<double>(array.a[i]);
        for (int i = 0 ; i < diameter ; ++i)
            off[i] = std::sqrt(static_cast<double>(array.b_at(i) * array.c_at(i + 1)));

        auto theta = symmetric_tridiagonal_eigenvalues(diagonal, off);
        std::reverse(theta.begin(), theta.end());

        for (int j = 0 ; j + 1 < size ; ++j)
            if (theta[j] - theta[j + 1] <= tol.scaled(k))
                throw fail("repeated eigenvalue " + std::to_string(theta[j]), theta[j] - theta[j + 1], tol.scaled(k));
        if (std::abs(theta[0] - k) > tol.scaled(k))
            throw fail("largest eigenvalue differs from the valency", std::abs(theta[0] - k), tol.scaled(k));

        Spectrum result;
        result.theta = theta;
        result.u = Matrix::Zero(size, size);
        for (int j = 0 ; j < size ; ++j) {
            double lambda = theta[j];
            result.u(0, j) = 1.0;
            if (diameter >= 1)
                result.u(1, j) = lambda / k;
            for (int i = 1 ; i + 1 < size ; ++i)
                result.u(i + 1, j) = ((lambda - array.a[i]) * result.u(i, j) - array.c_at(i) * result.u(i - 1, j))
                    / static_cast<double>(array.b_at(i));

            // θ_j is a root of the characteristic polynomial exactly when the
            // recurrence also closes at i = D
            if (diameter >= 1) {
                double closing = lambda * result.u(diameter, j) - array.c_at(diameter) * result.u(diameter - 1, j)
                    - array.a[diameter] * result.u(diameter, j);
                if (std::abs(closing) > tol.scaled(k))
                    throw fail("three-term recurrence at θ_" + std::to_string(j), std::abs(closing), tol.scaled(k));
            }
        }

        const double n = vertex_count;
        for (int j = 0 ; j < size ; ++j) {
            double weight = 0.0;
            for (int i = 0 ; i < size ; ++i)
                weight += array.k[i] * result.u(i, j) * result.u(i, j);
            double m = n / weight;
            double rounded = std::round(m);
            if (rounded < 1.0 || std::abs(m - rounded) >= 1e-6 * m)
                throw VerificationError{ "multiplicity of θ_" + std::to_string(j) + " is not an integer: "
                    + std::to_string(m) };
            result.multiplicities.push_back(static_cast<int64_t>(rounded));
        }

        int64_t total = 0;
        for (auto m : result.multiplicities)
            total += m;
        if (total != vertex_count)
            throw VerificationError{ "multiplicities sum to " + std::to_string(total) + ", not "
                + std::to_string(vertex_count) };

        for (int r = 0 ; r < size ; ++r)
            for (int s = 0 ; s < size ; ++s) {
                double by_vertex = 0.0, by_eigen = 0.0;
                for (int i = 0 ; i < size ; ++i) {
                    by_vertex += result.u(i, r) * result.u(i, s) * array.k[i];
                    by_eigen += result.u(r, i) * result.u(s, i) * result.multiplicities[i];
                }
                double want_vertex = r == s ? n / result.multiplicities[r] : 0.0;
                double want_eigen = r == s ? n / array.k[r] : 0.0;
                if (std::abs(by_vertex - want_vertex) > tol.scaled(n))
                    throw fail("orthogonality over distances", std::abs(by_vertex - want_vertex), tol.scaled(n));
                if (std::abs(by_eigen - want_eigen) > tol.scaled(n))
                    throw fail("orthogonality over eigenvalues", std::abs(by_eigen - want_eigen), tol.scaled(n));
            }

        return result;
    }

    auto distance_matrices(const Graph & graph) -> vector<IntMatrix>
    {
        const int n = graph.size();
        vector<IntMatrix> result(graph.diameter() + 1, IntMatrix::Zero(n, n));
        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y)
                result[graph.distance(x, y)](x, y) = 1;
        return result;
    }

    auto product_law_error(span<const IntMatrix> distance, const IntersectionArray & array) -> int64_t
    {
        const int size = static_cast<int>(distance.size());
        int64_t worst = 0;
        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j) {
                IntMatrix difference = distance[i] * distance[j];
                for (int h = 0 ; h < size ; ++h)
                    difference -= array.p(h, i, j) * distance[h];
                worst = std::max(worst, difference.cwiseAbs().maxCoeff());
            }
        return worst;
    }

    auto primitive_idempotents(span<const IntMatrix> distance, const Spectrum & spec, Tolerance tol) -> vector<Matrix>
    {
        const int size = static_cast<int>(distance.size());
        const auto n = distance.front().rows();

        vector<Matrix> result;
        for (int j = 0 ; j < size ; ++j) {
            Matrix e = Matrix::Zero(n, n);
            for (int i = 0 ; i < size ; ++i)
                e += spec.u(i, j) * distance[i].cast<double>();
            e *= static_cast<double>(spec.multiplicities[j]) / static_cast<double>(n);
            result.push_back(std::move(e));
        }

        Matrix total = Matrix::Zero(n, n);
        for (int i = 0 ; i < size ; ++i) {
            total += result[i];
            if (double asym = max_abs(result[i] - result[i].transpose()) ; asym > tol.scaled(1.0))
                throw fail("E_" + std::to_string(i) + " is not symmetric", asym, tol.scaled(1.0));
            double trace_error = std::abs(result[i].trace() - static_cast<double>(spec.multiplicities[i]));
            if (trace_error > tol.scaled(spec.multiplicities[i]))
                throw fail("tr(E_" + std::to_string(i) + ") differs from m_" + std::to_string(i), trace_error,
                        tol.scaled(spec.multiplicities[i]));
            for (int j = i ; j < size ; ++j) {
                Matrix residual = result[i] * result[j];
                if (i == j)
                    residual -= result[i];
                if (double r = max_abs(residual) ; r > tol.scaled(1.0))
                    throw fail("E_" + std::to_string(i) + " E_" + std::to_string(j) + " idempotent law", r, tol.scaled(1.0));
            }
        }
        if (double r = max_abs(total - Matrix::Identity(n, n)) ; r > tol.scaled(1.0))
            throw fail("sum of primitive idempotents", r, tol.scaled(1.0));
        if (double r = max_abs(result[0] - Matrix::Constant(n, n, 1.0 / n)) ; r > tol.scaled(1.0))
            throw fail("E_0 differs from J / |X|", r, tol.scaled(1.0));

        return result;
    }

    auto krein_parameters(span<const Matrix> idempotents, const Spectrum & spec, Tolerance tol) -> KreinParameters
    {
        const int size = static_cast<int>(idempotents.size());
        const double n = static_cast<double>(idempotents.front().rows());

        KreinParameters result;
        result.diameter = size - 1;
        result.tensor.assign(static_cast<std::size_t>(size) * size * size, 0.0);

        for (int i = 0 ; i < size ; ++i)
            for (int j = 0 ; j < size ; ++j) {
                Matrix hadamard = idempotents[i].cwiseProduct(idempotents[j]);
                Matrix reconstruction = Matrix::Zero(hadamard.rows(), hadamard.cols());
                for (int h = 0 ; h < size ; ++h) {
                    double q = n / static_cast<double>(spec.multiplicities[h]) * inner(hadamard, idempotents[h]);
                    if (q < -tol.scaled(n))
                        throw fail("Krein parameter q^" + std::to_string(h) + "_" + std::to_string(i) + std::to_string(j)
                                + " is negative", -q, tol.scaled(n));
                    result.tensor[(h * size + i) * size + j] = q;
                    reconstruction += (q / n) * idempotents[h];
                }
                if (double r = max_abs(hadamard - reconstruction) ; r > tol.scaled(1.0))
                    throw fail("reconstruction of E_" + std::to_string(i) + " ∘ E_" + std::to_string(j), r, tol.scaled(1.0));
            }

        return result;
    }

    auto bose_mesner(const Graph & graph, const Spectrum & spec, Tolerance tol) -> BoseMesner
    {
        BoseMesner result;
        result.distance = distance_matrices(graph);
        for (auto & a : result.distance)
            result.distance_real.push_back(a.cast<double>());
        result.idempotents = primitive_idempotents(result.distance, spec, tol);
        result.krein = krein_parameters(result.idempotents, spec, tol);
        return result;
    }
}
