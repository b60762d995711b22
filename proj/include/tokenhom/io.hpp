#ifndef TOKENHOM_IO_HPP
#define TOKENHOM_IO_HPP

#include <iosfwd>
#include <string>

#include "tokenhom/complex.hpp"
#include "tokenhom/homology.hpp"
#include "tokenhom/power.hpp"
#include "tokenhom/presentation.hpp"
#include "tokenhom/snf.hpp"

namespace tokenhom {

/// Edge-list text format: one "u v" pair per line, '#' comments, blank lines
/// ignored; vertex count = 1 + max id (or explicit "# vertices: n" header).
/// Rejects loops and duplicate edges.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

std::string to_dot(const Graph& g);
/// DOT with monomial labels such as "0^2·3".
std::string to_dot(const PowerGraph& p);

/// Sidecar JSON table: config index -> token multiset.
std::string power_index_json(const PowerGraph& p);

/// {"vertices": n, "edges": [[u,v],...], "faces": [[walk],...]}
std::string to_json(const TwoComplex& x);
/// {"rank": r, "torsion": [d1, ...]}
std::string to_json(const AbelianGroupDesc& g);
/// {"generators": n, "relators": [[+1,-2,...],...]}
std::string to_json(const Presentation& p);

/// Triplet text format: "rows cols" header then "r c value" lines.
void write_triplets(const IntMatrix& m, std::ostream& out);
IntMatrix read_triplets(std::istream& in);

}  // namespace tokenhom

#endif
