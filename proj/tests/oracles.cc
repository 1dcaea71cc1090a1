#include "oracles.hh"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <limits>
#include <stdexcept>

using drg::Matrix;
using std::vector;

namespace oracle
{
    auto hamming_distances(int d, int q) -> vector<vector<int>>
    {
        int n = 1;
        for (int r = 0 ; r < d ; ++r)
            n *= q;
        vector<vector<int>> dist(n, vector<int>(n, 0));
        for (int x = 0 ; x < n ; ++x)
            for (int y = 0 ; y < n ; ++y) {
                int a = x, b = y, differ = 0;
                for (int r = 0 ; r < d ; ++r, a /= q, b /= q)
                    differ += (a % q) != (b % q);
                dist[x][y] = differ;
            }
        return dist;
    }

    auto floyd_distances(const drg::Graph & graph) -> vector<vector<int>>
    {
        const int n = graph.size();
        const int far = std::numeric_limits<int>::max() / 4;
        vector<vector<int>> dist(n, vector<int>(n, far));
        for (int x = 0 ; x < n ; ++x) {
            dist[x][x] = 0;
            for (int y : graph.neighbours(x))
                dist[x][y] = 1;
        }
        for (int z = 0 ; z < n ; ++z)
            for (int x = 0 ; x < n ; ++x)
                for (int y = 0 ; y < n ; ++y)
                    dist[x][y] = std::min(dist[x][y], dist[x][z] + dist[z][y]);
        return dist;
    }

    auto count(const vector<vector<int>> & dist, int x, int y, int i, int j) -> long long
    {
        long long total = 0;
        for (size_t z = 0 ; z < dist.size() ; ++z)
            total += dist[x][z] == i && dist[y][z] == j;
        return total;
    }

    auto adjacency(const drg::Graph & graph) -> Matrix
    {
        Matrix a = Matrix::Zero(graph.size(), graph.size());
        for (int x = 0 ; x < graph.size() ; ++x)
            for (int y : graph.neighbours(x))
                a(x, y) = 1.0;
        return a;
    }

    auto eigenspaces(const drg::Graph & graph, double gap) -> Eigenspaces
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency(graph));
        const auto & values = solver.eigenvalues();
        const auto & vectors = solver.eigenvectors();
        const int n = graph.size();

        Eigenspaces out;
        int r = n - 1;
        while (r >= 0) {
            int s = r;
            while (s - 1 >= 0 && values(r) - values(s - 1) < gap)
                --s;
            Eigen::MatrixXd block = vectors.middleCols(s, r - s + 1);
            double mean = values.segment(s, r - s + 1).mean();
            out.theta.push_back(mean);
            out.multiplicity.push_back(r - s + 1);
            out.projector.push_back(block * block.transpose());
            r = s - 1;
        }
        return out;
    }

    auto cosine(const drg::Graph & graph, const Eigenspaces & spaces, int i, int j, int x) -> double
    {
        for (int y = 0 ; y < graph.size() ; ++y)
            if (graph.distance(x, y) == i)
                return graph.size() * spaces.projector[j](x, y) / spaces.multiplicity[j];
        throw std::logic_error("no vertex at that distance");
    }

    auto krein(const drg::Graph & graph, const Eigenspaces & spaces, int h, int i, int j) -> double
    {
        const int n = graph.size();
        double total = 0.0;
        for (int l = 0 ; l <= graph.diameter() ; ++l) {
            long long k = 0;
            for (int y = 0 ; y < n ; ++y)
                k += graph.distance(0, y) == l;
            total += k * cosine(graph, spaces, l, i) * cosine(graph, spaces, l, j) * cosine(graph, spaces, l, h);
        }
        return static_cast<double>(spaces.multiplicity[i]) * spaces.multiplicity[j] / n * total;
    }

    auto svd_rank(const vector<Matrix> & generators, double relative) -> int
    {
        if (generators.empty())
            return 0;
        const auto entries = generators.front().size();
        Eigen::MatrixXd stacked(entries, static_cast<Eigen::Index>(generators.size()));
        for (size_t c = 0 ; c < generators.size() ; ++c)
            stacked.col(static_cast<Eigen::Index>(c)) = Eigen::Map<const Eigen::VectorXd>(generators[c].data(), entries);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
        const auto & sigma = svd.singularValues();
        if (sigma.size() == 0 || sigma(0) == 0.0)
            return 0;
        int rank = 0;
        for (Eigen::Index r = 0 ; r < sigma.size() ; ++r)
            rank += sigma(r) > relative * sigma(0);
        return rank;
    }

    auto svd_intersection_dim(const vector<Matrix> & u, const vector<Matrix> & w) -> int
    {
        vector<Matrix> both = u;
        both.insert(both.end(), w.begin(), w.end());
        return svd_rank(u) + svd_rank(w) - svd_rank(both);
    }

    auto distance_matrix(const drg::Graph & graph, int i) -> Matrix
    {
        Matrix a = Matrix::Zero(graph.size(), graph.size());
        for (int x = 0 ; x < graph.size() ; ++x)
            for (int y = 0 ; y < graph.size() ; ++y)
                a(x, y) = graph.distance(x, y) == i;
        return a;
    }

    auto dual_distance(const drg::Graph & graph, const Eigenspaces & spaces, int j, int x) -> Matrix
    {
        Matrix a = Matrix::Zero(graph.size(), graph.size());
        for (int y = 0 ; y < graph.size() ; ++y)
            a(y, y) = graph.size() * spaces.projector[j](x, y);
        return a;
    }
}
