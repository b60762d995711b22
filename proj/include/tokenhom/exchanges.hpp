#ifndef TOKENHOM_EXCHANGES_HPP
#define TOKENHOM_EXCHANGES_HPP

#include <string>
#include <vector>

#include "tokenhom/homology.hpp"
#include "tokenhom/power.hpp"

namespace tokenhom {

/// A 3-cycle or chordless 4-cycle of T_n(G) that is not a Cartesian square.
/// Kinds, by (support length, tokens on support): (3,1)=a, (3,2)=a_prime,
/// (4,1)=b, (4,3)=b_prime; (4,2) splits into c (the two support tokens sit on
/// adjacent support vertices at the cycle's canonical initial configuration)
/// and c_prime (they sit on opposite vertices).
enum class ExchangeKind { a, a_prime, b, b_prime, c, c_prime };

std::string to_string(ExchangeKind kind);

struct LocalExchange {
    ExchangeKind kind;
    std::vector<int> support;     // the 3-cycle or chordless 4-cycle of G, walk order
    TokenConfig stationary;       // tokens off the support
    std::vector<int> cycle;       // config indices in T_n(G), canonical walk order
};

/// All local exchanges of T_n(G): 3-cycles and chordless 4-cycles that are
/// not Cartesian squares, classified. The six-kind taxonomy requires every
/// such cycle to be supported on a chordless 3- or 4-cycle of G with all
/// other tokens stationary; graphs whose short cycles overlap or carry
/// chords can fall outside it, in which case this throws std::domain_error.
std::vector<LocalExchange> enumerate_local_exchanges(
    const Graph& g, int n, long long vertex_cap = kDefaultVertexCap);

/// Closed-form count for n >= 3 and N >= n+3 (N = vertex count):
/// k3*(C(N-3,n-1) + C(N-3,n-2)) + k4*(C(N-4,n-1) + 4C(N-4,n-2) + C(N-4,n-3)).
/// Outside that range enumeration is the ground truth and this throws.
long long count_local_exchanges(int n_vertices, int n, long long kappa3, long long kappa4);

// --- closed-form ranks ----------------------------------------------------

/// Rank of the 2-strand braid group of a wedge of k cycles: 3*C(k,2) + 1.
long long rank_wedge_braid2(long long k);
/// Rank of H_1 of the n-strand configuration space of a wedge of k cycles:
/// (2n-1)*C(n+k-2, n) + 1.
long long rank_wedge_h1(long long n, long long k);
/// Conjectured free rank of A_1(T_n(S_m)): (n-1)*C(m,n) - C(m,n-1) + 1.
long long rank_star_conjecture(long long m, long long n);
/// Rank of the n-strand braid group of S_m:
/// (m-2)*C(n+m-2, n-1) - C(n+m-2, n) + 1.
long long rank_star_braid(long long m, long long n);

struct StarConjectureReport {
    bool ok = false;
    AbelianGroupDesc computed;
    long long expected_rank = 0;
    explicit operator bool() const { return ok; }
};

/// Computes H_1(X(T_n(S_m))) and checks it is free of the conjectured rank.
StarConjectureReport verify_star_conjecture(int m, int n,
                                            long long vertex_cap = kDefaultVertexCap);

}  // namespace tokenhom

#endif
