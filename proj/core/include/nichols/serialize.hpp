#pragma once

#include <iosfwd>
#include <string>

#include "nichols/cartan_graph.hpp"

namespace nichols {

// Diagram document: {"theta": t, "ambient": {"N": n, "p": p},
// "vertices": [exp, ...], "edges": [{"i": i, "j": j, "exp": e}, ...]}
// with 1 <= i < j <= theta. Exponents are accepted unreduced and stored
// mod N; emission is deterministic (fixed key order, sorted edges).
GDDiagram load_diagram_json(std::istream& in);
GDDiagram load_diagram_json(const std::string& text);
std::string emit_diagram_json(const GDDiagram& D);

// Row-major integer matrix, one row per line.
std::string emit_cartan_text(const CartanMatrix& A);

// One root per line in coefficient notation ("1^{2}234"), input order.
std::string emit_roots_text(const std::vector<Root>& roots);

// 16-hex-digit FNV-1a over ambient + labels; stable across runs.
std::string diagram_hash(const GDDiagram& D);

// Vertices P0..Pn ordered by point id and annotated with diagram hashes;
// merged labels are displayed on a single edge, comma-joined, 1-based.
std::string emit_exchange_dot(const CartanGraph& G, const ExchangeGraph& X);
std::string emit_exchange_text(const CartanGraph& G, const ExchangeGraph& X);

} // namespace nichols
