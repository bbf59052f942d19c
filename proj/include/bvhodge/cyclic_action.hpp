#pragma once

// Elements of C_n = <alpha>, linearized local actions and their ages.
//
// A LocalAction stores exponents e_i with eigenvalues zeta_n^{e_i} (cotangent
// convention: the eigenvalue on a top form is the product of the eigenvalues).
// In the sector of alpha^j the elliptic-curve direction carries exponent
// j(n-1) mod n, and a curve pointwise fixed by alpha_S^j carries (0, j).

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace bvhodge {

using Rational = boost::rational<std::int64_t>;

/// Orders of non-symplectic automorphisms of elliptic curves.
bool is_supported_order(int n) noexcept;

/// alpha^residue in C_modulus.
class GroupElement {
public:
    /// Reduces residue mod modulus. Throws ValidationError if modulus < 1.
    GroupElement(int modulus, int residue);

    int modulus() const noexcept { return n_; }
    int residue() const noexcept { return j_; }
    bool is_identity() const noexcept { return j_ == 0; }
    /// Order of the element in C_n.
    int order() const noexcept;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    int n_;
    int j_;
};

class LocalAction {
public:
    /// Exponents are reduced mod modulus.
    LocalAction(int modulus, std::vector<int> exponents);

    int modulus() const noexcept { return n_; }
    const std::vector<int>& exponents() const noexcept { return e_; }
    int nonzero_count() const noexcept;

    friend bool operator==(const LocalAction&, const LocalAction&) = default;

private:
    int n_;
    std::vector<int> e_;
};

/// sum e_i / n, exact.
Rational age(const LocalAction& action);

struct IntegralityCheck {
    bool age_is_integral;
    bool determinant_is_one;
};

/// Both sides of "age is an integer iff det = 1"; the two flags always agree.
IntegralityCheck age_is_integral_iff_unimodular(const LocalAction& action);

/// Exponents u*e_i mod n: the linearization of g^u when action linearizes g.
LocalAction power_transport(const LocalAction& action, int u);

/// Generator of <alpha^j, alpha^k>, i.e. alpha^{gcd(j,k,n)}; the fixed locus of the
/// pair is the fixed locus of this element.
GroupElement intersection_class(const GroupElement& j, const GroupElement& k);

/// Exponent of the elliptic-curve direction in the sector of alpha^j.
int elliptic_exponent(int modulus, int j);

/// Order of the subgroup generated by alpha^j in C_n (1 for the identity).
int generated_subgroup_order(int modulus, int j);

}  // namespace bvhodge
