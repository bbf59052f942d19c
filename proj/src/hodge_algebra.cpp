#include "bvhodge/hodge_algebra.hpp"

#include <numeric>
#include <sstream>

#include "bvhodge/error.hpp"

namespace bvhodge {

namespace {

int reduce(int j, int n) {
    const int r = j % n;
    return r < 0 ? r + n : r;
}

void require_nonnegative(Count value, const char* what) {
    if (value < 0) {
        throw ValidationError(std::string(what) + ": negative dimension " + std::to_string(value));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// HodgeDiamond

HodgeDiamond::HodgeDiamond(int dim) : dim_(dim) {
    if (dim < 0) {
        throw ValidationError("HodgeDiamond: negative dimension");
    }
    h_.assign(static_cast<std::size_t>((dim + 1) * (dim + 1)), 0);
}

std::size_t HodgeDiamond::index(int p, int q) const {
    if (p < 0 || q < 0 || p > dim_ || q > dim_) {
        throw ValidationError("HodgeDiamond: index (" + std::to_string(p) + "," + std::to_string(q) +
                              ") outside 0.." + std::to_string(dim_));
    }
    return static_cast<std::size_t>(p * (dim_ + 1) + q);
}

Count HodgeDiamond::at(int p, int q) const { return h_[index(p, q)]; }

void HodgeDiamond::set(int p, int q, Count value) {
    require_nonnegative(value, "HodgeDiamond::set");
    h_[index(p, q)] = value;
}

void HodgeDiamond::add(int p, int q, Count value) {
    auto& cell = h_[index(p, q)];
    require_nonnegative(cell + value, "HodgeDiamond::add");
    cell += value;
}

bool HodgeDiamond::is_symmetric() const {
    for (int p = 0; p <= dim_; ++p)
        for (int q = 0; q < p; ++q)
            if (at(p, q) != at(q, p)) return false;
    return true;
}

bool HodgeDiamond::is_serre_dual() const {
    for (int p = 0; p <= dim_; ++p)
        for (int q = 0; q <= dim_; ++q)
            if (at(p, q) != at(dim_ - p, dim_ - q)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// CharacterVector

CharacterVector::CharacterVector(int modulus) {
    if (modulus < 1) {
        throw ValidationError("CharacterVector: modulus must be >= 1");
    }
    c_.assign(static_cast<std::size_t>(modulus), 0);
}

CharacterVector::CharacterVector(int modulus, std::vector<Count> multiplicities)
    : c_(std::move(multiplicities)) {
    if (modulus < 1 || static_cast<int>(c_.size()) != modulus) {
        throw ValidationError("CharacterVector: expected " + std::to_string(modulus) +
                              " multiplicities, got " + std::to_string(c_.size()));
    }
    for (Count c : c_) require_nonnegative(c, "CharacterVector");
}

Count CharacterVector::operator[](int j) const { return c_[static_cast<std::size_t>(reduce(j, modulus()))]; }

void CharacterVector::add(int j, Count count) {
    auto& cell = c_[static_cast<std::size_t>(reduce(j, modulus()))];
    require_nonnegative(cell + count, "CharacterVector::add");
    cell += count;
}

Count CharacterVector::total() const { return std::accumulate(c_.begin(), c_.end(), Count{0}); }

bool CharacterVector::is_zero() const { return total() == 0; }

CharacterVector CharacterVector::conjugate() const {
    CharacterVector out(modulus());
    for (int j = 0; j < modulus(); ++j) out.add(-j, (*this)[j]);
    return out;
}

CharacterVector permutation_character(int modulus, int orbit_size) {
    if (orbit_size < 1 || modulus % orbit_size != 0) {
        throw ValidationError("permutation_character: orbit size " + std::to_string(orbit_size) +
                              " does not divide " + std::to_string(modulus));
    }
    CharacterVector out(modulus);
    const int step = modulus / orbit_size;
    for (int t = 0; t < orbit_size; ++t) out.add(t * step, 1);
    return out;
}

CharacterVector tensor(const CharacterVector& a, const CharacterVector& b) {
    if (a.modulus() != b.modulus()) {
        throw ValidationError("tensor: modulus mismatch");
    }
    const int n = a.modulus();
    CharacterVector out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.add(i + j, a[i] * b[j]);
    return out;
}

Count invariant_pairing(const CharacterVector& a, const CharacterVector& b) {
    if (a.modulus() != b.modulus()) {
        throw ValidationError("invariant_pairing: modulus mismatch (" + std::to_string(a.modulus()) + " vs " +
                              std::to_string(b.modulus()) + ")");
    }
    Count sum = 0;
    for (int j = 0; j < a.modulus(); ++j) sum += a[j] * b[-j];
    return sum;
}

std::string to_string(const CharacterVector& c) {
    std::ostringstream os;
    os << '(';
    for (int j = 0; j < c.modulus(); ++j) os << (j ? "," : "") << c[j];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// BigradedCharacterTable

BigradedCharacterTable::BigradedCharacterTable(int dim, int modulus) : dim_(dim), modulus_(modulus) {
    if (dim < 0) throw ValidationError("BigradedCharacterTable: negative dimension");
    cells_.assign(static_cast<std::size_t>((dim + 1) * (dim + 1)), CharacterVector(modulus));
}

BigradedCharacterTable BigradedCharacterTable::point(int modulus) {
    BigradedCharacterTable t(0, modulus);
    t.at(0, 0).add(0, 1);
    return t;
}

std::size_t BigradedCharacterTable::index(int p, int q) const {
    if (p < 0 || q < 0 || p > dim_ || q > dim_) {
        throw ValidationError("BigradedCharacterTable: index outside table");
    }
    return static_cast<std::size_t>(p * (dim_ + 1) + q);
}

const CharacterVector& BigradedCharacterTable::at(int p, int q) const { return cells_[index(p, q)]; }
CharacterVector& BigradedCharacterTable::at(int p, int q) { return cells_[index(p, q)]; }

Count BigradedCharacterTable::total_dimension() const {
    Count sum = 0;
    for (const auto& c : cells_) sum += c.total();
    return sum;
}

HodgeDiamond BigradedCharacterTable::total_diamond() const {
    HodgeDiamond d(dim_);
    for (int p = 0; p <= dim_; ++p)
        for (int q = 0; q <= dim_; ++q) d.set(p, q, at(p, q).total());
    return d;
}

BigradedCharacterTable kunneth_character_product(const BigradedCharacterTable& a,
                                                 const BigradedCharacterTable& b) {
    if (a.modulus() != b.modulus()) {
        throw ValidationError("kunneth_character_product: modulus mismatch");
    }
    BigradedCharacterTable out(a.dim() + b.dim(), a.modulus());
    for (int p1 = 0; p1 <= a.dim(); ++p1)
        for (int q1 = 0; q1 <= a.dim(); ++q1) {
            const auto& left = a.at(p1, q1);
            if (left.is_zero()) continue;
            for (int p2 = 0; p2 <= b.dim(); ++p2)
                for (int q2 = 0; q2 <= b.dim(); ++q2) {
                    const auto product = tensor(left, b.at(p2, q2));
                    auto& cell = out.at(p1 + p2, q1 + q2);
                    for (int j = 0; j < out.modulus(); ++j) cell.add(j, product[j]);
                }
        }
    return out;
}

HodgeDiamond invariant_diamond(const BigradedCharacterTable& table) {
    HodgeDiamond d(table.dim());
    for (int p = 0; p <= table.dim(); ++p)
        for (int q = 0; q <= table.dim(); ++q) d.set(p, q, table.at(p, q)[0]);
    return d;
}

Count euler_characteristic(const HodgeDiamond& d) {
    Count e = 0;
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q) e += ((p + q) % 2 == 0 ? 1 : -1) * d.at(p, q);
    return e;
}

HodgeDiamond add_shifted(const HodgeDiamond& d, const HodgeDiamond& contribution, int shift) {
    if (shift < 0) {
        throw ValidationError("add_shifted: negative shift " + std::to_string(shift));
    }
    HodgeDiamond out = d;
    for (int p = 0; p <= contribution.dim(); ++p)
        for (int q = 0; q <= contribution.dim(); ++q) {
            const Count v = contribution.at(p, q);
            if (v == 0) continue;
            if (p + shift > d.dim() || q + shift > d.dim()) {
                throw ValidationError("add_shifted: entry (" + std::to_string(p) + "," + std::to_string(q) +
                                      ") shifted by " + std::to_string(shift) +
                                      " leaves the table (non-crepant local data)");
            }
            out.add(p + shift, q + shift, v);
        }
    return out;
}

}  // namespace bvhodge
