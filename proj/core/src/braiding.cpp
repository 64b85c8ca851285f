#include "nichols/braiding.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace nichols {

Permutation::Permutation(std::vector<int> sigma) : s_(std::move(sigma))
{
    std::vector<char> seen(s_.size(), 0);
    for (int v : s_) {
        if (v < 0 || v >= static_cast<int>(s_.size()) || seen[v])
            throw BadParameter("not a permutation");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int theta)
{
    std::vector<int> s(theta);
    std::iota(s.begin(), s.end(), 0);
    return Permutation(std::move(s));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(s_.size());
    for (int i = 0; i < size(); ++i) inv[s_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& b) const
{
    if (size() != b.size()) throw SizeMismatch("permutation sizes differ");
    std::vector<int> c(s_.size());
    for (int i = 0; i < size(); ++i) c[i] = s_[b(i)];
    return Permutation(std::move(c));
}

static int reduce_exp(long long e, int N)
{
    long long r = e % N;
    if (r < 0) r += N;
    return static_cast<int>(r);
}

BraidingMatrix::BraidingMatrix(Ambient amb, int theta, std::vector<int> exps)
    : amb_(amb), theta_(theta), q_(std::move(exps))
{
    if (theta_ < 1) throw BadParameter("theta must be >= 1");
    if (q_.size() != static_cast<size_t>(theta_) * theta_)
        throw SizeMismatch("braiding matrix needs theta^2 entries");
    for (int& e : q_) e = reduce_exp(e, amb_.N);
}

void BraidingMatrix::set_exp(int i, int j, long long e)
{
    q_[static_cast<size_t>(i) * theta_ + j] = reduce_exp(e, amb_.N);
}

GDDiagram::GDDiagram(Ambient amb, int theta, std::vector<int> vertex_exps,
                     const std::vector<std::tuple<int, int, int>>& edge_exps)
    : GDDiagram(amb, theta)
{
    if (theta < 1) throw BadParameter("theta must be >= 1");
    if (vertex_exps.size() != static_cast<size_t>(theta))
        throw SizeMismatch("need one vertex label per index");
    for (int i = 0; i < theta; ++i)
        m_[static_cast<size_t>(i) * theta + i] = reduce_exp(vertex_exps[i], amb.N);
    for (const auto& [i, j, e] : edge_exps) {
        if (i < 0 || j < 0 || i >= theta || j >= theta || i == j)
            throw BadParameter("edge endpoints out of range");
        int r = reduce_exp(e, amb.N);
        m_[static_cast<size_t>(i) * theta + j] = r;
        m_[static_cast<size_t>(j) * theta + i] = r;
    }
}

GDDiagram GDDiagram::from_grid(Ambient amb, int theta, std::vector<int> grid)
{
    GDDiagram D(amb, theta);
    D.m_ = std::move(grid);
    return D;
}

GDDiagram diagram_of(const BraidingMatrix& M)
{
    const int theta = M.theta();
    const int N = M.ambient().N;
    std::vector<int> grid(static_cast<size_t>(theta) * theta, 0);
    for (int i = 0; i < theta; ++i) {
        grid[static_cast<size_t>(i) * theta + i] = M.exp(i, i);
        for (int j = i + 1; j < theta; ++j) {
            int e = reduce_exp(M.exp(i, j) + M.exp(j, i), N);
            grid[static_cast<size_t>(i) * theta + j] = e;
            grid[static_cast<size_t>(j) * theta + i] = e;
        }
    }
    return GDDiagram::from_grid(M.ambient(), theta, std::move(grid));
}

bool is_indecomposable(const GDDiagram& D)
{
    const int theta = D.theta();
    std::vector<char> seen(theta, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < theta; ++w) {
            if (w == v || seen[w] || !D.has_edge(v, w)) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == theta;
}

bool is_indecomposable(const BraidingMatrix& M)
{
    return is_indecomposable(diagram_of(M));
}

GDDiagram apply_permutation(const GDDiagram& D, const Permutation& sigma)
{
    const int theta = D.theta();
    if (sigma.size() != theta) throw SizeMismatch("permutation size differs from theta");
    std::vector<int> grid(static_cast<size_t>(theta) * theta, 0);
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j)
            grid[static_cast<size_t>(sigma(i)) * theta + sigma(j)] =
                D.grid()[static_cast<size_t>(i) * theta + j];
    return GDDiagram::from_grid(D.ambient(), theta, std::move(grid));
}

bool diagrams_equal(const GDDiagram& D1, const GDDiagram& D2)
{
    return D1 == D2;
}

std::optional<Permutation> diagram_iso(const GDDiagram& D1, const GDDiagram& D2)
{
    if (D1.theta() != D2.theta()) return std::nullopt;
    if (!(D1.ambient() == D2.ambient())) return std::nullopt;
    const int theta = D1.theta();

    std::vector<int> v1(theta), v2(theta);
    for (int i = 0; i < theta; ++i) {
        v1[i] = D1.vertex_exp(i);
        v2[i] = D2.vertex_exp(i);
    }
    {
        auto s1 = v1, s2 = v2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }

    std::vector<int> s(theta);
    std::iota(s.begin(), s.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < theta && ok; ++i) {
            if (v2[s[i]] != v1[i]) { ok = false; break; }
            for (int j = i + 1; j < theta; ++j)
                if (D2.edge_exp(s[i], s[j]) != D1.edge_exp(i, j)) { ok = false; break; }
        }
        if (ok) return Permutation(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return std::nullopt;
}

} // namespace nichols
