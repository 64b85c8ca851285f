#include "nichols/cartan.hpp"

namespace nichols {

CartanMatrix cartan_A(int theta)
{
    CartanMatrix A;
    A.theta = theta;
    A.a.assign(static_cast<size_t>(theta) * theta, 0);
    for (int i = 0; i < theta; ++i) {
        A.a[static_cast<size_t>(i) * theta + i] = 2;
        if (i + 1 < theta) {
            A.a[static_cast<size_t>(i) * theta + i + 1] = -1;
            A.a[static_cast<size_t>(i + 1) * theta + i] = -1;
        }
    }
    return A;
}

int cartan_entry(const GDDiagram& D, int i, int j, int m_max)
{
    if (i == j) return 2;
    const int N = D.ambient().N;
    const int p = D.ambient().p;
    const int vi = D.vertex_exp(i);
    const int eij = D.edge_exp(i, j);
    for (int m = 0; m <= m_max; ++m) {
        if (q_integer_is_zero_exp(m + 1, vi, N, p)) return -m;
        if ((static_cast<long long>(m) * vi + eij) % N == 0) return -m;
    }
    throw NotIFinite(i, j);
}

std::vector<int> cartan_row(const GDDiagram& D, int i, int m_max)
{
    std::vector<int> row(D.theta());
    for (int j = 0; j < D.theta(); ++j)
        row[j] = (j == i) ? 2 : cartan_entry(D, i, j, m_max);
    return row;
}

CartanMatrix cartan_matrix(const GDDiagram& D, int m_max)
{
    const int theta = D.theta();
    CartanMatrix A;
    A.theta = theta;
    A.a.reserve(static_cast<size_t>(theta) * theta);
    for (int i = 0; i < theta; ++i) {
        auto row = cartan_row(D, i, m_max);
        A.a.insert(A.a.end(), row.begin(), row.end());
    }
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j) {
            if (i == j) continue;
            if (A.at(i, j) > 0) throw InvalidCartan("positive off-diagonal entry");
            if ((A.at(i, j) == 0) != (A.at(j, i) == 0))
                throw InvalidCartan("zero pattern is not symmetric");
        }
    return A;
}

} // namespace nichols
