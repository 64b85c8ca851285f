#include "nichols/neighborhoods.hpp"

#include <algorithm>
#include <array>

#include "nichols/cartan.hpp"
#include "nichols/errors.hpp"
#include "nichols/reflection.hpp"

namespace nichols {

const char* to_string(NeighborhoodVariant v) {
    switch (v) {
        case NeighborhoodVariant::A5a: return "A5a";
        case NeighborhoodVariant::A5b: return "A5b";
        case NeighborhoodVariant::A5c: return "A5c";
        case NeighborhoodVariant::A6a: return "A6a";
        case NeighborhoodVariant::A6b: return "A6b";
        case NeighborhoodVariant::A7:  return "A7";
    }
    return "?";
}

namespace {

std::optional<GDDiagram> refl_or_none(const GDDiagram& D, int i) {
    try {
        return reflect_diagram(D, i);
    } catch (const NotIFinite&) {
        return std::nullopt;
    }
}

std::optional<CartanMatrix> cm_or_none(const GDDiagram& D) {
    try {
        return cartan_matrix(D);
    } catch (const NotIFinite&) {
        return std::nullopt;
    }
}

// a_{jk} of r_{i1}(r_{i2}(...(Y))), indices 1-based; nullopt if any step
// is not i-finite.
std::optional<int> chain_entry(const GDDiagram& Y, std::vector<int> idxs, int j, int k) {
    GDDiagram cur = Y;
    for (auto it = idxs.rbegin(); it != idxs.rend(); ++it) {
        auto next = refl_or_none(cur, *it - 1);
        if (!next) return std::nullopt;
        cur = *next;
    }
    if (j == k) return 2;
    try {
        return cartan_entry(cur, j - 1, k - 1);
    } catch (const NotIFinite&) {
        return std::nullopt;
    }
}

bool mat_eq(const std::optional<CartanMatrix>& A, const CartanMatrix& B) {
    return A && A->theta == B.theta && A->a == B.a;
}

// A equals base away from the slots; at each slot require -A[slot] >= 0 and
// collect it as a parameter (in slot order).
std::optional<std::vector<int>> match_shape(const std::optional<CartanMatrix>& A,
                                            const CartanMatrix& base,
                                            const std::vector<std::pair<int, int>>& slots) {
    if (!A || A->theta != base.theta) return std::nullopt;
    std::vector<int> params;
    for (auto [r, c] : slots) {
        int v = -A->at(r, c);
        if (v < 0) return std::nullopt;
        params.push_back(v);
    }
    for (int r = 0; r < base.theta; ++r)
        for (int c = 0; c < base.theta; ++c) {
            if (std::find(slots.begin(), slots.end(), std::make_pair(r, c)) != slots.end())
                continue;
            if (A->at(r, c) != base.at(r, c)) return std::nullopt;
        }
    return params;
}

using CheckResult = std::optional<std::pair<NeighborhoodVariant, std::vector<int>>>;

CheckResult check_A5_at(const GDDiagram& Y) {
    const CartanMatrix A5 = cartan_A(5);
    std::vector<std::optional<CartanMatrix>> Ar;
    for (int i = 0; i < 5; ++i) {
        auto r = refl_or_none(Y, i);
        if (!r) return std::nullopt;
        Ar.push_back(cm_or_none(*r));
        if (!Ar.back()) return std::nullopt;
    }
    if (!mat_eq(Ar[0], A5) || !mat_eq(Ar[1], A5)) return std::nullopt;
    auto p3 = match_shape(Ar[2], A5, {{1, 3}, {3, 1}});
    auto p4 = match_shape(Ar[3], A5, {{2, 4}, {4, 2}});
    auto p5 = match_shape(Ar[4], A5, {{3, 2}});
    if (!p3 || !p4 || !p5) return std::nullopt;
    const int a = (*p3)[0], b = (*p3)[1], c = (*p4)[0], d = (*p4)[1], e = (*p5)[0];
    const std::vector<int> params{a, b, c, d, e};
    if (chain_entry(Y, {2, 3, 4}, 1, 5) != 0) return std::nullopt;
    auto v = chain_entry(Y, {3, 2, 1}, 4, 5);
    if (!v || *v == -3) return std::nullopt;
    if (params == std::vector<int>{1, 1, 0, 0, 1}) {
        auto u1 = chain_entry(Y, {4, 5}, 3, 2);
        auto u2 = chain_entry(Y, {2, 1}, 3, 4);
        if (chain_entry(Y, {2, 3}, 4, 1) == 0 && chain_entry(Y, {2, 3}, 4, 5) == -1 &&
            !(u1 == -2 && u2 == -2))
            return std::make_pair(NeighborhoodVariant::A5a, params);
    }
    if (params == std::vector<int>{0, 0, 1, 1, 2}) {
        auto w = chain_entry(Y, {3, 4}, 2, 5);
        auto u1 = chain_entry(Y, {3, 2, 1}, 4, 5);
        auto u2 = chain_entry(Y, {3, 2}, 4, 5);
        if ((w == 0 || w == -1) && !(u1 == -2 && u2 == -2))
            return std::make_pair(NeighborhoodVariant::A5b, params);
    }
    if (params == std::vector<int>{0, 0, 1, 1, 1}) {
        if (chain_entry(Y, {3, 4}, 5, 2) == -1 && chain_entry(Y, {5, 4}, 3, 2) == -1)
            return std::make_pair(NeighborhoodVariant::A5c, params);
    }
    return std::nullopt;
}

CheckResult check_A6_at(const GDDiagram& Y) {
    const CartanMatrix A6 = cartan_A(6);
    std::vector<std::optional<CartanMatrix>> Ar;
    for (int i = 0; i < 6; ++i) {
        auto r = refl_or_none(Y, i);
        if (!r) return std::nullopt;
        Ar.push_back(cm_or_none(*r));
        if (!Ar.back()) return std::nullopt;
    }
    if (!mat_eq(Ar[0], A6) || !mat_eq(Ar[1], A6) || !mat_eq(Ar[2], A6) || !mat_eq(Ar[5], A6))
        return std::nullopt;
    auto p4 = match_shape(Ar[3], A6, {{2, 4}, {4, 2}});
    if (!p4 || *p4 != std::vector<int>{1, 1}) return std::nullopt;
    auto p5 = match_shape(Ar[4], A6, {{3, 5}, {5, 3}});
    if (!p5 || (*p5)[0] != (*p5)[1]) return std::nullopt;
    const int a = (*p5)[0];
    if (chain_entry(Y, {5, 4}, 3, 6) != 0) return std::nullopt;
    if (chain_entry(Y, {3, 4}, 2, 5) != 0) return std::nullopt;
    if (a == 0) {
        auto u1 = chain_entry(Y, {3, 2, 1}, 4, 5);
        auto u2 = chain_entry(Y, {3, 2}, 4, 5);
        if (chain_entry(Y, {5, 4}, 3, 2) == -1 && chain_entry(Y, {5, 6}, 4, 3) == -1 &&
            !(u1 == -2 && u2 == -2))
            return std::make_pair(NeighborhoodVariant::A6a, std::vector<int>{a});
    }
    if (a == 1) {
        if (chain_entry(Y, {3, 2}, 4, 5) == -1 && chain_entry(Y, {3, 2, 1}, 4, 5) == -1)
            return std::make_pair(NeighborhoodVariant::A6b, std::vector<int>{a});
    }
    return std::nullopt;
}

CheckResult check_A7_at(const GDDiagram& Y) {
    const CartanMatrix A7 = cartan_A(7);
    std::vector<std::optional<CartanMatrix>> Ar;
    for (int i = 0; i < 7; ++i) {
        auto r = refl_or_none(Y, i);
        if (!r) return std::nullopt;
        Ar.push_back(cm_or_none(*r));
        if (!Ar.back()) return std::nullopt;
    }
    for (int t : {0, 1, 3, 4, 5, 6})
        if (!mat_eq(Ar[t], A7)) return std::nullopt;
    auto p3 = match_shape(Ar[2], A7, {{1, 3}, {3, 1}});
    if (!p3 || *p3 != std::vector<int>{1, 1}) return std::nullopt;
    if (chain_entry(Y, {4, 3}, 2, 5) != 0) return std::nullopt;
    if (chain_entry(Y, {4, 3}, 2, 1) != -1) return std::nullopt;
    if (chain_entry(Y, {2, 3}, 4, 5) != -1) return std::nullopt;
    if (chain_entry(Y, {2, 1}, 3, 4) != -1) return std::nullopt;
    if (chain_entry(Y, {4, 5}, 3, 2) != -1) return std::nullopt;
    if (chain_entry(Y, {4, 5, 6}, 3, 2) != -1) return std::nullopt;
    if (chain_entry(Y, {4, 5, 6, 7}, 3, 2) != -1) return std::nullopt;
    return std::make_pair(NeighborhoodVariant::A7, std::vector<int>{});
}

std::optional<NeighborhoodWitness> scan(const GDDiagram& X, int rank,
                                        CheckResult (*check)(const GDDiagram&)) {
    if (X.theta() != rank) throw RankMismatch(X.theta(), rank);
    const CartanMatrix base = cartan_A(rank);
    auto AX = cm_or_none(X);
    if (!AX) return std::nullopt;
    std::vector<int> pi(rank);
    for (int i = 0; i < rank; ++i) pi[i] = i;
    do {
        // pi = sigma^{-1}: require A^X[pi[a]][pi[b]] == base[a][b] before
        // paying for the relabeled reflections.
        bool ok = true;
        for (int a = 0; a < rank && ok; ++a)
            for (int b = 0; b < rank; ++b)
                if (AX->at(pi[a], pi[b]) != base.at(a, b)) { ok = false; break; }
        if (!ok) continue;
        std::vector<int> sig(rank);
        for (int j = 0; j < rank; ++j) sig[pi[j]] = j;
        Permutation sigma(sig);
        GDDiagram Y = apply_permutation(X, sigma);
        auto w = check(Y);
        if (w) return NeighborhoodWitness{sigma, w->first, w->second};
    } while (std::next_permutation(pi.begin(), pi.end()));
    return std::nullopt;
}

const GDDiagram& graph_point(const CartanGraph& G, int point_id, int rank) {
    if (G.theta() != rank) throw RankMismatch(G.theta(), rank);
    if (point_id < 0 || point_id >= static_cast<int>(G.size()))
        throw BadParameter("point id out of range");
    return G.point(point_id).diagram;
}

} // namespace

std::optional<NeighborhoodWitness> good_A5(const GDDiagram& X) { return scan(X, 5, check_A5_at); }
std::optional<NeighborhoodWitness> good_A6(const GDDiagram& X) { return scan(X, 6, check_A6_at); }
std::optional<NeighborhoodWitness> good_A7(const GDDiagram& X) { return scan(X, 7, check_A7_at); }

std::optional<NeighborhoodWitness> good_A5(const CartanGraph& G, int point_id) {
    return good_A5(graph_point(G, point_id, 5));
}
std::optional<NeighborhoodWitness> good_A6(const CartanGraph& G, int point_id) {
    return good_A6(graph_point(G, point_id, 6));
}
std::optional<NeighborhoodWitness> good_A7(const CartanGraph& G, int point_id) {
    return good_A7(graph_point(G, point_id, 7));
}

std::optional<NeighborhoodWitness> good_neighborhood(const GDDiagram& X) {
    switch (X.theta()) {
        case 5: return good_A5(X);
        case 6: return good_A6(X);
        case 7: return good_A7(X);
        default:
            throw RankMismatch("no good-neighborhood detector for rank " +
                               std::to_string(X.theta()));
    }
}

std::optional<std::pair<int, NeighborhoodWitness>> goodnei_exists(const CartanGraph& G) {
    if (G.theta() < 5 || G.theta() > 7)
        throw RankMismatch("no good-neighborhood detector for rank " +
                           std::to_string(G.theta()));
    for (int x = 0; x < static_cast<int>(G.size()); ++x) {
        auto w = good_neighborhood(G.point(x).diagram);
        if (w) return std::make_pair(x, *w);
    }
    return std::nullopt;
}

} // namespace nichols
