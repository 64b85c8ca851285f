#pragma once

#include "nichols/cartan.hpp"

namespace nichols {

// Linear simple reflection on Z^theta: component i of the image becomes
// -v_i - sum_{j != i} a_ij v_j, all other components are unchanged.
using Root = std::vector<int>;

Root s_map(const CartanMatrix& A, int i, const Root& v);

// Reflected generalized Dynkin diagram R_i(D). The three vertex/edge cases
// and the four pair cases are all evaluated wherever applicable and must
// agree; labels of pairs not adjacent to i are unchanged. "Adjacent" means
// diagram adjacency (edge label != 1), not index distance.
// Throws NotIFinite when the Cartan row at i does not exist, CaseGap if no
// case applies or applicable cases disagree (unreachable for i-finite input).
GDDiagram reflect_diagram(const GDDiagram& D, int i, int m_max = kDefaultEntryBound);

// Matrix-level reflection, constrained to reproduce reflect_diagram at the
// diagram level: q'_jk = q_jk q_ik^{-a_ij} q_ji^{-a_ik} q_ii^{a_ij a_ik},
// with a_ii = 2.
BraidingMatrix reflect_matrix(const BraidingMatrix& M, int i, int m_max = kDefaultEntryBound);

} // namespace nichols
