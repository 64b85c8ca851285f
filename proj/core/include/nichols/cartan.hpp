#pragma once

#include <vector>

#include "nichols/braiding.hpp"

namespace nichols {

inline constexpr int kDefaultEntryBound = 1000;

// Generalized Cartan matrix: a_ii = 2, a_ij <= 0 off the diagonal,
// a_ij = 0 iff a_ji = 0.
struct CartanMatrix {
    int theta = 0;
    std::vector<int> a; // row-major

    int at(int i, int j) const { return a[static_cast<size_t>(i) * theta + j]; }

    bool operator==(const CartanMatrix&) const = default;
};

// Standard A_theta Cartan matrix (the tridiagonal chain).
CartanMatrix cartan_A(int theta);

// -m for the smallest m >= 0 with (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0;
// 2 when i = j. Throws NotIFinite when no m <= m_max works.
int cartan_entry(const GDDiagram& D, int i, int j, int m_max = kDefaultEntryBound);

// Row i of the Cartan matrix (cheaper than the full matrix during reflection).
std::vector<int> cartan_row(const GDDiagram& D, int i, int m_max = kDefaultEntryBound);

// Assembles every entry and validates the Cartan-matrix axioms.
// Axiom failure throws InvalidCartan (internal error, unreachable by design).
CartanMatrix cartan_matrix(const GDDiagram& D, int m_max = kDefaultEntryBound);

} // namespace nichols
