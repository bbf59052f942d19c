#include "bvhodge/cyclic_action.hpp"

#include <numeric>
#include <string>

#include "bvhodge/error.hpp"

namespace bvhodge {

namespace {

int reduce(std::int64_t j, int n) {
    const auto r = static_cast<int>(j % n);
    return r < 0 ? r + n : r;
}

}  // namespace

bool is_supported_order(int n) noexcept { return n == 2 || n == 3 || n == 4 || n == 6; }

GroupElement::GroupElement(int modulus, int residue) : n_(modulus), j_(0) {
    if (modulus < 1) throw ValidationError("GroupElement: modulus must be >= 1");
    j_ = reduce(residue, modulus);
}

int GroupElement::order() const noexcept { return n_ / std::gcd(j_, n_); }

LocalAction::LocalAction(int modulus, std::vector<int> exponents) : n_(modulus), e_(std::move(exponents)) {
    if (modulus < 1) throw ValidationError("LocalAction: modulus must be >= 1");
    for (int& e : e_) e = reduce(e, modulus);
}

int LocalAction::nonzero_count() const noexcept {
    int count = 0;
    for (int e : e_) count += e != 0;
    return count;
}

Rational age(const LocalAction& action) {
    std::int64_t sum = 0;
    for (int e : action.exponents()) sum += e;
    return Rational(sum, action.modulus());
}

IntegralityCheck age_is_integral_iff_unimodular(const LocalAction& action) {
    // det = prod zeta^{e_i}; track it as an exponent of zeta_n.
    int det_exponent = 0;
    for (int e : action.exponents()) det_exponent = (det_exponent + e) % action.modulus();
    return {age(action).denominator() == 1, det_exponent == 0};
}

LocalAction power_transport(const LocalAction& action, int u) {
    std::vector<int> out;
    out.reserve(action.exponents().size());
    for (int e : action.exponents()) out.push_back(reduce(static_cast<std::int64_t>(u) * e, action.modulus()));
    return LocalAction(action.modulus(), std::move(out));
}

GroupElement intersection_class(const GroupElement& j, const GroupElement& k) {
    if (j.modulus() != k.modulus()) {
        throw ValidationError("intersection_class: modulus mismatch (" + std::to_string(j.modulus()) + " vs " +
                              std::to_string(k.modulus()) + ")");
    }
    const int n = j.modulus();
    return GroupElement(n, std::gcd(std::gcd(j.residue(), k.residue()), n));
}

int elliptic_exponent(int modulus, int j) {
    return reduce(static_cast<std::int64_t>(j) * (modulus - 1), modulus);
}

int generated_subgroup_order(int modulus, int j) { return GroupElement(modulus, j).order(); }

}  // namespace bvhodge
