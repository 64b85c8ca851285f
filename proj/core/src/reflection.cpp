#include "nichols/reflection.hpp"

#include <string>

namespace nichols {

Root s_map(const CartanMatrix& A, int i, const Root& v)
{
    if (static_cast<int>(v.size()) != A.theta) throw SizeMismatch("root length differs from theta");
    Root w = v;
    long long c = -static_cast<long long>(v[i]);
    for (int j = 0; j < A.theta; ++j)
        if (j != i) c -= static_cast<long long>(A.at(i, j)) * v[j];
    w[i] = static_cast<int>(c);
    return w;
}

namespace {

int reduce_exp(long long e, int N)
{
    long long r = e % N;
    if (r < 0) r += N;
    return static_cast<int>(r);
}

struct Agree {
    int value = -1;
    bool set = false;

    void push(long long e, int N, const char* what)
    {
        int r = reduce_exp(e, N);
        if (!set) {
            value = r;
            set = true;
        } else if (value != r) {
            throw CaseGap(std::string("applicable cases disagree at ") + what);
        }
    }
};

} // namespace

GDDiagram reflect_diagram(const GDDiagram& D, int i, int m_max)
{
    const int theta = D.theta();
    const int N = D.ambient().N;
    const std::vector<int> a = cartan_row(D, i, m_max);
    const int vi = D.vertex_exp(i);
    const int ord_vi = order_of_exp(vi, N);

    std::vector<int> out = D.grid();
    auto set_edge = [&](int x, int y, int e) {
        out[static_cast<size_t>(x) * theta + y] = e;
        out[static_cast<size_t>(y) * theta + x] = e;
    };

    // q_ij q_ji = q_ii^{a_ij} / q_ii primitive (1 - a_ij)-th root / q_ii = 1
    auto case_a = [&](int j) {
        return reduce_exp(static_cast<long long>(D.edge_exp(i, j)) -
                          static_cast<long long>(a[j]) * vi, N) == 0;
    };
    auto case_b = [&](int j) { return ord_vi == 1 - a[j]; };
    const bool case_c = vi % N == 0;

    for (int j = 0; j < theta; ++j) {
        if (j == i) continue;
        const long long e = D.edge_exp(i, j);
        const long long vj = D.vertex_exp(j);
        Agree vt, et;
        if (case_a(j)) {
            vt.push(vj, N, "vertex");
            et.push(e, N, "edge");
        }
        if (case_b(j)) {
            vt.push(vi + vj - static_cast<long long>(a[j]) * e, N, "vertex");
            et.push(2LL * vi - e, N, "edge");
        }
        if (case_c) {
            vt.push(vj - static_cast<long long>(a[j]) * e, N, "vertex");
            et.push(-e, N, "edge");
        }
        if (!vt.set)
            throw CaseGap("no case applies at vertex " + std::to_string(j + 1) +
                          ", pivot " + std::to_string(i + 1));
        out[static_cast<size_t>(j) * theta + j] = vt.value;
        set_edge(i, j, et.value);
    }

    for (int j = 0; j < theta; ++j) {
        for (int k = j + 1; k < theta; ++k) {
            if (j == i || k == i) continue;
            const long long ej = D.edge_exp(i, j);
            const long long ek = D.edge_exp(i, k);
            const long long ejk = D.edge_exp(j, k);
            if (ej == 0 && ek == 0) continue; // both non-adjacent to i: unchanged
            Agree et;
            if (case_a(j) && case_a(k)) et.push(ejk, N, "pair");
            if (case_a(j) && case_b(k))
                et.push(ejk - static_cast<long long>(a[j]) * (ek - vi), N, "pair");
            if (case_a(k) && case_b(j))
                et.push(ejk - static_cast<long long>(a[k]) * (ej - vi), N, "pair");
            if (case_c)
                et.push(ejk - static_cast<long long>(a[k]) * ej -
                        static_cast<long long>(a[j]) * ek, N, "pair");
            if (case_b(j) && case_b(k))
                et.push(ejk + 2LL * vi - static_cast<long long>(a[j]) * (ej + ek), N, "pair");
            if (!et.set)
                throw CaseGap("no case applies at pair (" + std::to_string(j + 1) + "," +
                              std::to_string(k + 1) + "), pivot " + std::to_string(i + 1));
            set_edge(j, k, et.value);
        }
    }

    return GDDiagram::from_grid(D.ambient(), theta, std::move(out));
}

BraidingMatrix reflect_matrix(const BraidingMatrix& M, int i, int m_max)
{
    const int theta = M.theta();
    std::vector<int> a = cartan_row(diagram_of(M), i, m_max);
    BraidingMatrix out = M;
    for (int j = 0; j < theta; ++j)
        for (int k = 0; k < theta; ++k) {
            long long e = M.exp(j, k);
            e -= static_cast<long long>(a[j]) * M.exp(i, k);
            e -= static_cast<long long>(a[k]) * M.exp(j, i);
            e += static_cast<long long>(a[j]) * a[k] * M.exp(i, i);
            out.set_exp(j, k, e);
        }
    return out;
}

} // namespace nichols
