#pragma once

#include <set>

#include "nichols/reflection.hpp"

namespace nichols {

inline constexpr int kDefaultPointBudget = 10000;
inline constexpr int kDefaultRootBudget = 10000;

struct Point {
    int id = 0;
    GDDiagram diagram;
    CartanMatrix cartan;
};

// Semi-Cartan graph attached to a seed diagram: BFS closure under all
// reflections, points keyed by literal diagram equality.
class CartanGraph {
public:
    int theta() const { return theta_; }
    int size() const { return static_cast<int>(points_.size()); }
    int base() const { return base_; }
    const Point& point(int id) const { return points_[id]; }
    const std::vector<Point>& points() const { return points_; }

    // Target of the reflection edge r_i at point x.
    int edge(int x, int i) const { return edges_[x][i]; }

    friend CartanGraph build_graph(const GDDiagram& D0, int max_points);

private:
    int theta_ = 0;
    int base_ = 0;
    std::vector<Point> points_;
    std::vector<std::vector<int>> edges_;
};

// Throws AdmitsAllReflectionsFailure if any reached point is not i-finite
// for some i, PointBudgetExceeded past max_points.
CartanGraph build_graph(const GDDiagram& D0, int max_points = kDefaultPointBudget);

struct RootSystemData {
    // Full root set Delta^X per point (positive and negative).
    std::vector<std::set<Root>> delta;
    // Positive roots per point, sorted by height then lexicographically.
    std::vector<std::vector<Root>> positive;
    // m_ij^X = |Delta^X_+ cap (N0 a_i + N0 a_j)| per point, row-major theta x theta.
    std::vector<std::vector<int>> m;
};

bool root_positive(const Root& v);
bool root_negative(const Root& v);

// Fixpoint closure: seed every point with {±alpha_i}, push s_map images
// along every edge until stable. Throws RootBudgetExceeded when a point's
// set grows past 2 * max_roots (infinite root system).
RootSystemData enumerate_roots(const CartanGraph& G, int max_roots = kDefaultRootBudget);

struct AxiomReport {
    bool sign_split = false;       // every root is positive or negative
    bool simple_multiples = false; // Delta^X cap Z alpha_i = {±alpha_i}
    bool reflection_bijects = false; // s_i^X(Delta^X) = Delta^{r_i(X)}
    bool rank_two_order = false;   // (r_i r_j)^{m_ij^X}(X) = X
    bool root_strings = false;     // alpha_j + k alpha_i root iff 0 <= k <= -a_ij
    bool count_constant = false;   // |Delta^X_+| identical across points

    bool all() const
    {
        return sign_split && simple_multiples && reflection_bijects && rank_two_order &&
               root_strings && count_constant;
    }
};

AxiomReport verify_axioms(const CartanGraph& G, const RootSystemData& R);

struct ExchangeGraph {
    struct Edge {
        int a = 0;
        int b = 0;                  // a < b
        std::vector<int> labels;    // sorted reflection indices (0-based)
    };
    int vertices = 0;               // vertex ids are the point ids
    std::vector<Edge> edges;        // sorted by (a, b)
};

// Self-edges r_i(X) = X are omitted; parallel edges merge their labels.
ExchangeGraph exchange_graph(const CartanGraph& G);

} // namespace nichols
