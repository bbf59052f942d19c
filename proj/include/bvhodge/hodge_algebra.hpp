#pragma once

// Exact bigraded dimension tables and characters of cyclic-group representations.
//
// A character index j always refers to the character sending the fixed generator
// of C_n to zeta_n^j. All arithmetic is on 64-bit integers.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bvhodge {

using Count = std::int64_t;

/// Table h[p][q], 0 <= p,q <= dim, of nonnegative integers.
class HodgeDiamond {
public:
    explicit HodgeDiamond(int dim);

    int dim() const noexcept { return dim_; }
    Count at(int p, int q) const;
    void set(int p, int q, Count value);
    void add(int p, int q, Count value);

    /// h[p][q] == h[q][p] for every entry.
    bool is_symmetric() const;
    /// h[p][q] == h[d-p][d-q] for every entry.
    bool is_serre_dual() const;

    friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

private:
    std::size_t index(int p, int q) const;

    int dim_;
    std::vector<Count> h_;
};

/// Multiplicities of the characters zeta_n^j, j mod n, in a C_n-representation.
class CharacterVector {
public:
    explicit CharacterVector(int modulus);
    CharacterVector(int modulus, std::vector<Count> multiplicities);

    int modulus() const noexcept { return static_cast<int>(c_.size()); }
    /// Multiplicity of character j; j is reduced mod n, negative values allowed.
    Count operator[](int j) const;
    void add(int j, Count count);

    Count total() const;
    bool is_zero() const;
    /// Character j -> -j (complex conjugate representation).
    CharacterVector conjugate() const;
    std::span<const Count> multiplicities() const noexcept { return c_; }

    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;

private:
    std::vector<Count> c_;
};

/// Permutation representation of C_n on one orbit of the given size: every
/// character trivial on the stabilizer (j a multiple of n/size), once each.
CharacterVector permutation_character(int modulus, int orbit_size);

/// Character of the tensor product.
CharacterVector tensor(const CharacterVector& a, const CharacterVector& b);

/// dim (A (x) B)^{C_n} = sum_j a[j] * b[-j].
Count invariant_pairing(const CharacterVector& a, const CharacterVector& b);

/// Eigenspace-refined cohomology: a CharacterVector at every (p,q).
class BigradedCharacterTable {
public:
    BigradedCharacterTable(int dim, int modulus);

    /// Cohomology of a point: trivial character at (0,0). Unit for the Kunneth product.
    static BigradedCharacterTable point(int modulus);

    int dim() const noexcept { return dim_; }
    int modulus() const noexcept { return modulus_; }
    const CharacterVector& at(int p, int q) const;
    CharacterVector& at(int p, int q);

    Count total_dimension() const;
    /// Dimensions with the group action forgotten.
    HodgeDiamond total_diamond() const;

    friend bool operator==(const BigradedCharacterTable&, const BigradedCharacterTable&) = default;

private:
    std::size_t index(int p, int q) const;

    int dim_;
    int modulus_;
    std::vector<CharacterVector> cells_;
};

/// Kunneth formula with characters matched: (p,q,j) collects A(p1,q1)[j1] * B(p2,q2)[j2]
/// over p1+p2=p, q1+q2=q, j1+j2=j (mod n).
BigradedCharacterTable kunneth_character_product(const BigradedCharacterTable& a,
                                                 const BigradedCharacterTable& b);

/// Trivial-character slice of every cell.
HodgeDiamond invariant_diamond(const BigradedCharacterTable& table);

/// sum (-1)^{p+q} h[p][q]
Count euler_characteristic(const HodgeDiamond& d);

/// Adds contribution(p,q) into d(p+shift, q+shift). Throws ValidationError if a
/// nonzero entry would land outside the table or shift is negative.
HodgeDiamond add_shifted(const HodgeDiamond& d, const HodgeDiamond& contribution, int shift);

std::string to_string(const CharacterVector& c);

}  // namespace bvhodge
