#pragma once

// Combinatorial description of (S, alpha_S) and (E, alpha_E).
//
// Fixed-locus data is keyed by subgroup: the record for the subgroup of order d
// describes Fix(alpha_S^{n/d}), which equals Fix(alpha_S^j) for every j with
// n/gcd(j,n) = d. Point types are the exponents of that subgroup's generator
// alpha_S^{n/d}, written over modulus n (so an order-3 point inside C_6 is (4,4)).

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bvhodge/cyclic_action.hpp"
#include "bvhodge/hodge_algebra.hpp"

namespace bvhodge {

enum class Strictness { engine, closed_form };

/// d[j] = dim H^2(S)_{zeta_n^j}. r = d[0], m = d[1].
struct EigenspaceDims {
    int modulus = 0;
    std::vector<Count> dims;

    Count r() const { return dims.at(0); }
    Count m() const { return dims.at(1); }
    friend bool operator==(const EigenspaceDims&, const EigenspaceDims&) = default;
};

/// `count` identical orbits of curves. Every member has genus `genus`; the stabilizer
/// of a member acts on it through a cyclic group of order `residual_order` whose
/// quotient has genus `quotient_genus`.
struct CurveOrbit {
    int orbit_size = 1;
    int genus = 0;
    int residual_order = 1;
    int quotient_genus = 0;
    /// H^{1,0} of one member under the residual action, in C_n characters.
    std::optional<CharacterVector> char_dims;
    int count = 1;

    /// Order of the subgroup fixing each member pointwise.
    int pointwise_stabilizer_order(int n) const { return n / (orbit_size * residual_order); }
    friend bool operator==(const CurveOrbit&, const CurveOrbit&) = default;
};

/// `count` identical orbits of isolated fixed points with local type (T1, T2).
struct PointOrbit {
    int orbit_size = 1;
    std::array<int, 2> type{};
    int count = 1;
    friend bool operator==(const PointOrbit&, const PointOrbit&) = default;
};

struct SubgroupFixedRecord {
    int subgroup_order = 0;
    std::vector<CurveOrbit> curves;
    std::vector<PointOrbit> points;
    friend bool operator==(const SubgroupFixedRecord&, const SubgroupFixedRecord&) = default;
};

// Named invariants, one struct per order, as used by the closed formulas.

struct Order2Invariants {
    int r = 0;
    std::vector<int> curve_genera;

    int curve_count() const { return static_cast<int>(curve_genera.size()); }
    int genus_sum() const;
};

struct Order3Invariants {
    int r = 0;
    int m = 0;
    int k = 0;  ///< curves in Fix(alpha_S), including C
    int n_points = 0;
    int g_C = 0;
};

enum class DType { first, second };

struct Order4Invariants {
    int r = 0, m = 0, k = 0, a = 0, b = 0, n1 = 0, n2 = 0, g_D = 0;
    DType d_type = DType::first;
    std::optional<int> g_D_quot;  ///< genus of D/alpha_S (second type only)
    std::optional<int> N;         ///< curves in Fix(alpha_S^2); derived as k+b+2a when absent

    int curve_count_fixed_by_square() const { return N.value_or(k + b + 2 * a); }
};

struct Order6Invariants {
    int r = 0, m = 0, l = 0, k = 0, N = 0, a = 0, b = 0, n_prime = 0, p25 = 0, p34 = 0;
    int g_D = 0, g_G = 0, g_G_quot = 0, g_F1 = 0, g_F1_quot = 0, g_F2 = 0, g_F2_quot = 0;
    std::optional<int> n;  ///< isolated points of gamma_S^2; derived as p25+2n' when absent

    int isolated_points_of_square() const { return n.value_or(p25 + 2 * n_prime); }
};

using NamedInvariants = std::variant<Order2Invariants, Order3Invariants, Order4Invariants, Order6Invariants>;

struct K3Config {
    int order = 0;
    EigenspaceDims eigenspace;
    std::vector<SubgroupFixedRecord> records;
    /// Present when the configuration was built from named invariants.
    std::optional<NamedInvariants> invariants;

    /// Record for the subgroup of the given order; an empty record if absent.
    const SubgroupFixedRecord& record(int subgroup_order) const;
};

/// Divisors d > 1 of n, ascending.
std::vector<int> nontrivial_divisors(int n);

/// Fixed points of the subgroups of <alpha_E>, grouped into orbits of alpha_E.
struct EllipticFixture {
    struct Locus {
        int subgroup_order;
        std::vector<int> orbit_sizes;
    };

    int order = 0;
    std::vector<Locus> loci;

    const std::vector<int>& orbit_sizes(int subgroup_order) const;
    int fixed_point_count(int subgroup_order) const;
    /// Character of C_n on H^0 of the fixed-point set of the given subgroup.
    CharacterVector permutation_character(int subgroup_order) const;
    /// Local cotangent exponent at every fixed point in the sector of alpha^j.
    int exponent(int j) const { return elliptic_exponent(order, j); }
};

/// Hardcoded fixtures for y^2=x^3+x (n=4), y^2=x^3+1 (n=3,6) and any curve (n=2).
EllipticFixture elliptic_fixture(int n);

enum class Severity { error, warning };

struct Violation {
    Severity severity = Severity::error;
    std::string path;
    std::string message;
    friend bool operator==(const Violation&, const Violation&) = default;
};

bool has_errors(const std::vector<Violation>& violations);
std::string to_string(const Violation& v);

/// Engine strictness checks the type invariants only; closed_form strictness
/// additionally checks the order-specific shape relations on the named invariants.
std::vector<Violation> validate(const K3Config& cfg, Strictness strictness);

/// Order-specific relations the closed formulas are proved under.
std::vector<Violation> closed_form_violations(const NamedInvariants& invariants);

/// Topological Euler characteristic of Fix(alpha_S^j); 24 for the identity.
Count euler_fixed_set(const K3Config& cfg, const GroupElement& j);

/// Characters of H^{1,0} of one orbit member under its residual cyclic action.
/// Residual order 3 splits g - g_q evenly between zeta_3 and zeta_3^2 unless
/// explicit dims are given; an odd difference without override is an error.
CharacterVector curve_character_dims(const CurveOrbit& curve, int modulus);

K3Config from_invariants_order2(const Order2Invariants& inv, Strictness strictness = Strictness::engine);
K3Config from_invariants_order3(const Order3Invariants& inv, Strictness strictness = Strictness::engine);
K3Config from_invariants_order4(const Order4Invariants& inv, Strictness strictness = Strictness::engine);
K3Config from_invariants_order6(const Order6Invariants& inv, Strictness strictness = Strictness::engine);
K3Config from_invariants(const NamedInvariants& inv, Strictness strictness = Strictness::engine);

int order_of(const NamedInvariants& inv);

}  // namespace bvhodge
