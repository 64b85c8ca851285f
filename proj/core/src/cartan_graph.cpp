#include "nichols/cartan_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace nichols {

CartanGraph build_graph(const GDDiagram& D0, int max_points)
{
    if (max_points < 1) throw BadParameter("max_points must be >= 1");
    const int theta = D0.theta();

    CartanGraph G;
    G.theta_ = theta;
    G.base_ = 0;

    std::map<std::vector<int>, int> index;
    auto add_point = [&](const GDDiagram& D) {
        if (G.size() >= max_points) throw PointBudgetExceeded(max_points);
        int id = G.size();
        index.emplace(D.grid(), id);
        G.points_.push_back(Point{id, D, CartanMatrix{}});
        G.edges_.emplace_back(theta, -1);
        return id;
    };

    add_point(D0);
    for (int x = 0; x < G.size(); ++x) {
        // copy: points_ may reallocate while reflecting
        const GDDiagram D = G.points_[x].diagram;
        try {
            G.points_[x].cartan = cartan_matrix(D);
            for (int i = 0; i < theta; ++i) {
                GDDiagram E = reflect_diagram(D, i);
                auto it = index.find(E.grid());
                int y = (it != index.end()) ? it->second : add_point(E);
                G.edges_[x][i] = y;
            }
        } catch (const NotIFinite& e) {
            throw AdmitsAllReflectionsFailure(x, e.i);
        }
    }
    return G;
}

bool root_positive(const Root& v)
{
    bool any = false;
    for (int c : v) {
        if (c < 0) return false;
        if (c > 0) any = true;
    }
    return any;
}

bool root_negative(const Root& v)
{
    bool any = false;
    for (int c : v) {
        if (c > 0) return false;
        if (c < 0) any = true;
    }
    return any;
}

static long long height(const Root& v)
{
    return std::accumulate(v.begin(), v.end(), 0LL);
}

RootSystemData enumerate_roots(const CartanGraph& G, int max_roots)
{
    const int theta = G.theta();
    if (max_roots < theta) throw BadParameter("max_roots must be >= theta");

    RootSystemData R;
    R.delta.resize(G.size());
    for (int x = 0; x < G.size(); ++x)
        for (int i = 0; i < theta; ++i) {
            Root e(theta, 0);
            e[i] = 1;
            R.delta[x].insert(e);
            e[i] = -1;
            R.delta[x].insert(e);
        }

    const size_t cap = 2 * static_cast<size_t>(max_roots);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < G.size(); ++x) {
            const CartanMatrix& A = G.point(x).cartan;
            for (int i = 0; i < theta; ++i) {
                int y = G.edge(x, i);
                auto& target = R.delta[y];
                for (const Root& v : R.delta[x]) {
                    Root w = s_map(A, i, v);
                    if (target.insert(std::move(w)).second) {
                        changed = true;
                        if (target.size() > cap) throw RootBudgetExceeded(max_roots);
                    }
                }
            }
        }
    }

    R.positive.resize(G.size());
    R.m.assign(G.size(), std::vector<int>(static_cast<size_t>(theta) * theta, 0));
    for (int x = 0; x < G.size(); ++x) {
        for (const Root& v : R.delta[x])
            if (root_positive(v)) R.positive[x].push_back(v);
        std::sort(R.positive[x].begin(), R.positive[x].end(), [](const Root& a, const Root& b) {
            long long ha = height(a), hb = height(b);
            if (ha != hb) return ha < hb;
            return a < b;
        });
        for (int i = 0; i < theta; ++i)
            for (int j = 0; j < theta; ++j) {
                if (i == j) continue;
                int count = 0;
                for (const Root& v : R.positive[x]) {
                    bool in_span = true;
                    for (int t = 0; t < theta && in_span; ++t)
                        if (t != i && t != j && v[t] != 0) in_span = false;
                    if (in_span) ++count;
                }
                R.m[x][static_cast<size_t>(i) * theta + j] = count;
            }
    }
    return R;
}

AxiomReport verify_axioms(const CartanGraph& G, const RootSystemData& R)
{
    const int theta = G.theta();
    AxiomReport rep;

    rep.sign_split = true;
    for (const auto& s : R.delta)
        for (const Root& v : s)
            if (!root_positive(v) && !root_negative(v)) rep.sign_split = false;

    rep.simple_multiples = true;
    for (int x = 0; x < G.size(); ++x)
        for (int i = 0; i < theta; ++i) {
            int hits = 0;
            bool clean = true;
            for (const Root& v : R.delta[x]) {
                bool axis = true;
                for (int t = 0; t < theta; ++t)
                    if (t != i && v[t] != 0) axis = false;
                if (!axis) continue;
                ++hits;
                if (v[i] != 1 && v[i] != -1) clean = false;
            }
            if (hits != 2 || !clean) rep.simple_multiples = false;
        }

    rep.reflection_bijects = true;
    for (int x = 0; x < G.size(); ++x) {
        const CartanMatrix& A = G.point(x).cartan;
        for (int i = 0; i < theta; ++i) {
            std::set<Root> image;
            for (const Root& v : R.delta[x]) image.insert(s_map(A, i, v));
            if (image != R.delta[G.edge(x, i)]) rep.reflection_bijects = false;
        }
    }

    rep.rank_two_order = true;
    for (int x = 0; x < G.size(); ++x)
        for (int i = 0; i < theta; ++i)
            for (int j = 0; j < theta; ++j) {
                if (i == j) continue;
                int mij = R.m[x][static_cast<size_t>(i) * theta + j];
                int cur = x;
                for (int t = 0; t < mij; ++t) cur = G.edge(G.edge(cur, j), i);
                if (cur != x) rep.rank_two_order = false;
            }

    rep.root_strings = true;
    for (int x = 0; x < G.size(); ++x) {
        const CartanMatrix& A = G.point(x).cartan;
        for (int i = 0; i < theta; ++i)
            for (int j = 0; j < theta; ++j) {
                if (i == j) continue;
                std::set<int> ks;
                for (const Root& v : R.delta[x]) {
                    if (v[j] != 1) continue;
                    bool string = true;
                    for (int t = 0; t < theta; ++t)
                        if (t != i && t != j && v[t] != 0) string = false;
                    if (string) ks.insert(v[i]);
                }
                std::set<int> want;
                for (int k = 0; k <= -A.at(i, j); ++k) want.insert(k);
                if (ks != want) rep.root_strings = false;
            }
    }

    rep.count_constant = true;
    for (int x = 1; x < G.size(); ++x)
        if (R.positive[x].size() != R.positive[0].size()) rep.count_constant = false;

    return rep;
}

ExchangeGraph exchange_graph(const CartanGraph& G)
{
    ExchangeGraph X;
    X.vertices = G.size();
    std::map<std::pair<int, int>, std::vector<int>> acc;
    for (int x = 0; x < G.size(); ++x)
        for (int i = 0; i < G.theta(); ++i) {
            int y = G.edge(x, i);
            if (y == x) continue; // self-edges are not displayed
            if (x < y) acc[{x, y}].push_back(i);
        }
    for (auto& [key, labels] : acc) {
        std::sort(labels.begin(), labels.end());
        X.edges.push_back(ExchangeGraph::Edge{key.first, key.second, labels});
    }
    return X;
}

} // namespace nichols
