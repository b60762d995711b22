#ifndef TOKENHOM_PRESENTATION_HPP
#define TOKENHOM_PRESENTATION_HPP

#include <string>
#include <vector>

#include "tokenhom/complex.hpp"
#include "tokenhom/homology.hpp"

namespace tokenhom {

/// Finite group presentation. Relator words are lists of signed 1-based
/// generator indices (+g / -g), kept freely reduced.
struct Presentation {
    int n_generators = 0;
    std::vector<std::vector<int>> relators;

    std::string to_string() const;  // letters a, b, c, ...
};

/// Freely reduces a word (cancels g g^-1 pairs).
std::vector<int> free_reduce(std::vector<int> word);

/// Edge-path presentation of pi_1(X): generators are the non-tree edges of a
/// BFS spanning tree rooted at vertex 0, one relator per face. Requires X
/// connected.
Presentation presentation_from_complex(const TwoComplex& x);

/// Free reduction, removal of empty and duplicate relators, elimination of
/// generators that occur exactly once in exactly one relator, and bounded
/// substitution passes. Preserves the isomorphism type.
Presentation tietze_simplify(Presentation p, int budget = 1000);

/// SNF of the relator exponent-sum matrix.
AbelianGroupDesc abelianize(const Presentation& p);

}  // namespace tokenhom

#endif
