#pragma once

// Chen-Ruan orbifold Hodge numbers of (S x E)/C_n and the pair-sum orbifold Euler
// characteristic.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bvhodge/closed_forms.hpp"
#include "bvhodge/cyclic_action.hpp"
#include "bvhodge/fixed_locus.hpp"
#include "bvhodge/hodge_algebra.hpp"

namespace bvhodge {

enum class ComponentKind { curve, point };

/// Identical S-side components of Fix(alpha^j) times the fixed points of alpha_E^j.
struct ComponentClass {
    ComponentKind kind = ComponentKind::point;
    int count = 0;       ///< identical S-orbits in the class
    int orbit_size = 1;  ///< size of each S-orbit
    int genus = 0;       ///< curves only
    /// Local exponents of alpha^j: two on S, then one on E.
    std::array<int, 3> exponents{};
    Rational age;
    CharacterVector s_character{1};  ///< C_n on H^0 of the S-side components
    CharacterVector e_character{1};  ///< C_n on H^0 of the E-side fixed points
    HodgeDiamond increment{3};
};

struct SectorContribution {
    GroupElement element{1, 0};
    int subgroup_order = 1;  ///< order of alpha^j
    std::vector<ComponentClass> components;
    HodgeDiamond total{3};
};

/// H^*(S) with characters: H^0, H^4 trivial; H^{2,0} char 1; H^{0,2} char n-1;
/// H^{1,1} char j of dimension d[j] - [j=1] - [j=n-1].
BigradedCharacterTable k3_character_table(const EigenspaceDims& dims);

/// H^*(E) with characters of alpha_E^{n-1}: H^0, H^{1,1} trivial; H^{1,0} char n-1; H^{0,1} char 1.
BigradedCharacterTable elliptic_character_table(int n);

/// Invariant part of H^*(S x E).
HodgeDiamond untwisted_diamond(const K3Config& cfg);

/// Twisted sector of alpha^j, j != 0.
SectorContribution sector_contribution(const K3Config& cfg, const GroupElement& j);

/// Untwisted diamond plus every twisted sector. Throws ConsistencyError if the
/// result is not a Calabi-Yau diamond.
HodgeDiamond orbifold_hodge_diamond(const K3Config& cfg);

/// (1/n) sum over pairs (j,k) of e(Fix(alpha^j) cap Fix(alpha^k)).
Count orbifold_euler_pairsum(const K3Config& cfg);

/// e(Fix(alpha_S^k)) for each proper divisor k of n, as consumed by euler_formula.
std::vector<Count> fixed_euler_numbers(const K3Config& cfg);

struct Check {
    std::string name;
    bool passed = false;
    bool skipped = false;
    Count lhs = 0;
    Count rhs = 0;
    std::string note;
    friend bool operator==(const Check&, const Check&) = default;
};

struct CrosscheckReport {
    HodgeDiamond diamond{3};
    Count euler_pairsum = 0;
    std::optional<HodgePair> closed_form;
    std::vector<Check> checks;

    bool all_passed() const;
};

/// Diamond Euler vs pair-sum, h21 vs h11 - e/2, Euler reduction vs pair-sum, and
/// engine vs closed form when the configuration carries named invariants that
/// satisfy the closed-form hypotheses.
CrosscheckReport crosscheck(const K3Config& cfg);

}  // namespace bvhodge
