#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "nichols/cyclotomic.hpp"

namespace nichols {

// Bijection of {0, ..., theta-1}. Serialized forms are 1-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> sigma);
    static Permutation identity(int theta);

    int size() const noexcept { return static_cast<int>(s_.size()); }
    int operator()(int i) const { return s_[i]; }
    const std::vector<int>& vec() const noexcept { return s_; }

    Permutation inverse() const;
    // (a.compose(b))(i) = a(b(i))
    Permutation compose(const Permutation& b) const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> s_;
};

// Full braiding matrix (q_ij), entries in one ambient, stored as exponents.
class BraidingMatrix {
public:
    BraidingMatrix(Ambient amb, int theta, std::vector<int> exps);

    int theta() const noexcept { return theta_; }
    const Ambient& ambient() const noexcept { return amb_; }
    int exp(int i, int j) const { return q_[static_cast<size_t>(i) * theta_ + j]; }
    RootOfUnity at(int i, int j) const { return RootOfUnity(amb_, exp(i, j)); }
    void set_exp(int i, int j, long long e);

    bool operator==(const BraidingMatrix&) const = default;

private:
    Ambient amb_;
    int theta_;
    std::vector<int> q_; // row-major exponents, reduced mod N
};

// Generalized Dynkin diagram: vertex labels q_ii, symmetric edge labels
// q_ij q_ji. Stored as a theta x theta exponent grid; an absent edge has
// exponent 0 (label 1). Two diagrams are equal iff ambients and all labels
// coincide literally.
class GDDiagram {
public:
    GDDiagram(Ambient amb, int theta, std::vector<int> vertex_exps,
              const std::vector<std::tuple<int, int, int>>& edge_exps); // (i, j, exp), i != j

    int theta() const noexcept { return theta_; }
    const Ambient& ambient() const noexcept { return amb_; }

    int vertex_exp(int i) const { return m_[static_cast<size_t>(i) * theta_ + i]; }
    int edge_exp(int i, int j) const { return m_[static_cast<size_t>(i) * theta_ + j]; }
    RootOfUnity vertex(int i) const { return RootOfUnity(amb_, vertex_exp(i)); }
    RootOfUnity edge(int i, int j) const { return RootOfUnity(amb_, edge_exp(i, j)); }
    bool has_edge(int i, int j) const { return edge_exp(i, j) != 0; }

    const std::vector<int>& grid() const noexcept { return m_; }

    bool operator==(const GDDiagram&) const = default;

    // Raw constructor for engine internals; grid must already be reduced
    // and symmetric.
    static GDDiagram from_grid(Ambient amb, int theta, std::vector<int> grid);

private:
    GDDiagram(Ambient amb, int theta) : amb_(amb), theta_(theta),
        m_(static_cast<size_t>(theta) * theta, 0) {}

    Ambient amb_;
    int theta_;
    std::vector<int> m_;
};

GDDiagram diagram_of(const BraidingMatrix& M);

bool is_indecomposable(const GDDiagram& D);
bool is_indecomposable(const BraidingMatrix& M);

// Relabeling: vertex'[sigma(i)] = vertex[i], edge'(sigma(i), sigma(j)) = edge(i, j).
GDDiagram apply_permutation(const GDDiagram& D, const Permutation& sigma); // throws SizeMismatch

bool diagrams_equal(const GDDiagram& D1, const GDDiagram& D2);

// Witness sigma with apply_permutation(D1, sigma) = D2, found by full
// theta! scan (theta <= 7 keeps this trivial).
std::optional<Permutation> diagram_iso(const GDDiagram& D1, const GDDiagram& D2);

} // namespace nichols
