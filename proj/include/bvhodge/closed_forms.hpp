#pragma once

// Closed formulas for (h^{1,1}, h^{2,1}) and the Euler characteristic of
// Borcea-Voisin threefolds of order 2, 3, 4 and 6, in terms of named invariants.

#include <span>
#include <vector>

#include "bvhodge/fixed_locus.hpp"
#include "bvhodge/hodge_algebra.hpp"

namespace bvhodge {

struct HodgePair {
    Count h11 = 0;
    Count h21 = 0;
    friend bool operator==(const HodgePair&, const HodgePair&) = default;
};

/// (r+1+4N, m-1+4N') where N curves of total genus N' are fixed. Needs r+m = 22, r,m >= 1.
HodgePair hodge_order2(Count r, Count m, Count N, Count N_prime);

/// (11+5N-N', 11+5N'-N): the order-2 formula with r = 10+N-N'.
HodgePair classic_bv(Count N, Count N_prime);

/// (r+1+3n+6k, m-1+6g(C)). Needs r+2m = 22.
HodgePair hodge_order3(Count r, Count m, Count k, Count n_points, Count g_C);

/// h11 = 1+r+7k+3b+2(n1+n2)+4a; h21 = m-1+7g(D) (first type) or m+2g(D)-n2/2 (second type).
HodgePair hodge_order4(const Order4Invariants& inv);

struct LatticeDims {
    Count r = 0;
    Count m = 0;
    friend bool operator==(const LatticeDims&, const LatticeDims&) = default;
};

/// r = (12+k+2a+b-g(D)+4h)/2, m = (12-k-2a-b+g(D))/2, h = sum over curves C fixed by
/// alpha_S of (1-g(C)). Throws on odd numerators or negative results.
LatticeDims aas_relations_order4(Count k, Count a, Count b, Count g_D, Count h);

/// h11 = r+1+2l+2N-2b+4k-2a+3n'+3p25+p34;
/// h21 = m-1+8g(D)+g(F2)+g(F2/gamma) if g(D) = 1, otherwise
///       m-1+2g(G)+2g(G/gamma)+g(F1)+g(F1/gamma)+g(F2)+g(F2/gamma).
HodgePair hodge_order6(const Order6Invariants& inv);

/// Pair-sum Euler characteristic from Euler numbers of fixed sets. fixed_euler[i] is
/// e(Fix(alpha_S^k)) for the i-th proper divisor k of n (k = 1, 2, ...; k < n):
/// order 2: 6e; order 3: 8e; order 4: 6e1+3e2; order 6: 4e1+4e2+2e3.
Count euler_formula(int order, std::span<const Count> fixed_euler);

/// h21 = h11 - e/2. Throws on odd e.
Count cy_euler_relation(Count h11, Count e);

/// Left-hand side of -m+r+2-2l-2b-2a+3n'+p25-p34-2n+4g(D) = 0, evaluated as printed.
Count corollary_order6(Count r, Count m, Count l, Count b, Count a, Count n_prime, Count p25, Count p34, Count n,
                       Count g_D);
Count corollary_order6(const Order6Invariants& inv);

/// Dispatches on the order. Throws ValidationError if the formula's hypotheses fail.
HodgePair closed_form_hodge(const NamedInvariants& inv);

}  // namespace bvhodge
