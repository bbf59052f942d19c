#include "bvhodge/orbifold_engine.hpp"

#include <numeric>
#include <string>

#include "bvhodge/error.hpp"

namespace bvhodge {

namespace {

void require_valid(const K3Config& cfg) {
    const auto violations = validate(cfg, Strictness::engine);
    if (!has_errors(violations)) return;
    std::vector<std::string> details;
    for (const auto& v : violations)
        if (v.severity == Severity::error) details.push_back(to_string(v));
    throw ValidationError("invalid configuration", details);
}

CharacterVector scaled(const CharacterVector& v, Count factor) {
    CharacterVector out(v.modulus());
    for (int j = 0; j < v.modulus(); ++j) out.add(j, v[j] * factor);
    return out;
}

HodgeDiamond untwisted_unchecked(const K3Config& cfg) {
    return invariant_diamond(
        kunneth_character_product(k3_character_table(cfg.eigenspace), elliptic_character_table(cfg.order)));
}

SectorContribution sector_unchecked(const K3Config& cfg, const GroupElement& j) {
    if (j.is_identity()) throw ValidationError("sector_contribution: the identity has no twisted sector");
    const int n = cfg.order;
    if (j.modulus() != n) throw ValidationError("sector_contribution: element of the wrong group");

    const int g = std::gcd(j.residue(), n);
    const int d = n / g;
    const int u = j.residue() / g;
    const auto fixture = elliptic_fixture(n);
    const CharacterVector e_char = fixture.permutation_character(d);
    const int e_exp = fixture.exponent(j.residue());

    SectorContribution sector;
    sector.element = j;
    sector.subgroup_order = d;
    const auto& rec = cfg.record(d);

    for (const auto& c : rec.curves) {
        if (c.count == 0) continue;
        ComponentClass cls;
        cls.kind = ComponentKind::curve;
        cls.count = c.count;
        cls.orbit_size = c.orbit_size;
        cls.genus = c.genus;
        // alpha_S^g is trivial along the curve and acts on the normal direction like on omega_S.
        const auto s = power_transport(LocalAction(n, {0, g}), u).exponents();
        cls.exponents = {s[0], s[1], e_exp};
        cls.age = age(LocalAction(n, {s[0], s[1], e_exp}));
        if (cls.age != Rational(1)) throw ConsistencyError("sector_contribution: curve component with age != 1");

        const auto perm = scaled(permutation_character(n, c.orbit_size), c.count);
        const auto h10 = tensor(curve_character_dims(c, n), perm);
        cls.s_character = perm;
        cls.e_character = e_char;
        const Count h00 = invariant_pairing(perm, e_char);
        cls.increment.add(1, 1, h00);
        cls.increment.add(2, 2, h00);
        cls.increment.add(2, 1, invariant_pairing(h10, e_char));
        cls.increment.add(1, 2, invariant_pairing(h10.conjugate(), e_char));
        sector.components.push_back(std::move(cls));
    }

    for (const auto& p : rec.points) {
        if (p.count == 0) continue;
        ComponentClass cls;
        cls.kind = ComponentKind::point;
        cls.count = p.count;
        cls.orbit_size = p.orbit_size;
        const auto s = power_transport(LocalAction(n, {p.type[0], p.type[1]}), u).exponents();
        cls.exponents = {s[0], s[1], e_exp};
        const LocalAction local(n, {s[0], s[1], e_exp});
        cls.age = age(local);
        if (!age_is_integral_iff_unimodular(local).age_is_integral) {
            throw ValidationError("sector_contribution: point of type (" + std::to_string(p.type[0]) + "," +
                                  std::to_string(p.type[1]) + ") has non-integral age in the sector of alpha^" +
                                  std::to_string(j.residue()) + " (non-crepant local data)");
        }
        const auto perm = scaled(permutation_character(n, p.orbit_size), p.count);
        cls.s_character = perm;
        cls.e_character = e_char;
        const int shift = static_cast<int>(cls.age.numerator());
        cls.increment = add_shifted(cls.increment, [&] {
            HodgeDiamond point(0);
            point.set(0, 0, invariant_pairing(perm, e_char));
            return point;
        }(), shift);
        sector.components.push_back(std::move(cls));
    }

    for (const auto& cls : sector.components)
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; q <= 3; ++q) sector.total.add(p, q, cls.increment.at(p, q));
    return sector;
}

Count pairsum_unchecked(const K3Config& cfg) {
    const int n = cfg.order;
    const auto fixture = elliptic_fixture(n);
    Count sum = 0;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const auto c = intersection_class(GroupElement(n, j), GroupElement(n, k));
            if (c.is_identity()) continue;  // e(S x E) = 24 * 0
            sum += euler_fixed_set(cfg, c) * fixture.fixed_point_count(c.order());
        }
    if (sum % n != 0) {
        throw ConsistencyError("orbifold_euler_pairsum: " + std::to_string(sum) + " is not divisible by " +
                               std::to_string(n));
    }
    return sum / n;
}

void require_calabi_yau(const HodgeDiamond& h) {
    std::vector<std::string> problems;
    if (!h.is_symmetric()) problems.push_back("h^{p,q} != h^{q,p}");
    if (!h.is_serre_dual()) problems.push_back("h^{p,q} != h^{3-p,3-q}");
    if (h.at(0, 0) != 1 || h.at(3, 0) != 1) problems.push_back("h^{0,0} or h^{3,0} != 1");
    if (h.at(1, 0) != 0 || h.at(2, 0) != 0) problems.push_back("h^{1,0} or h^{2,0} != 0");
    if (!problems.empty()) {
        std::string what = "orbifold_hodge_diamond: result is not a Calabi-Yau diamond:";
        for (const auto& p : problems) what += " " + p + ";";
        throw ConsistencyError(what);
    }
}

Check compare(std::string name, Count lhs, Count rhs) {
    Check c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.passed = lhs == rhs;
    return c;
}

Check skipped(std::string name, std::string note) {
    Check c;
    c.name = std::move(name);
    c.skipped = true;
    c.passed = true;
    c.note = std::move(note);
    return c;
}

}  // namespace

BigradedCharacterTable k3_character_table(const EigenspaceDims& dims) {
    const int n = dims.modulus;
    BigradedCharacterTable t(2, n);
    t.at(0, 0).add(0, 1);
    t.at(2, 2).add(0, 1);
    t.at(2, 0).add(1, 1);
    t.at(0, 2).add(n - 1, 1);
    for (int j = 0; j < n; ++j) {
        Count dim = dims.dims.at(static_cast<std::size_t>(j));
        if (j == 1 % n) --dim;
        if (j == (n - 1) % n) --dim;
        t.at(1, 1).add(j, dim);
    }
    return t;
}

BigradedCharacterTable elliptic_character_table(int n) {
    BigradedCharacterTable t(1, n);
    t.at(0, 0).add(0, 1);
    t.at(1, 1).add(0, 1);
    t.at(1, 0).add(n - 1, 1);
    t.at(0, 1).add(1, 1);
    return t;
}

HodgeDiamond untwisted_diamond(const K3Config& cfg) {
    require_valid(cfg);
    return untwisted_unchecked(cfg);
}

SectorContribution sector_contribution(const K3Config& cfg, const GroupElement& j) {
    require_valid(cfg);
    return sector_unchecked(cfg, j);
}

HodgeDiamond orbifold_hodge_diamond(const K3Config& cfg) {
    require_valid(cfg);
    HodgeDiamond h = untwisted_unchecked(cfg);
    for (int j = 1; j < cfg.order; ++j) {
        const auto sector = sector_unchecked(cfg, GroupElement(cfg.order, j));
        h = add_shifted(h, sector.total, 0);
    }
    require_calabi_yau(h);
    return h;
}

Count orbifold_euler_pairsum(const K3Config& cfg) {
    require_valid(cfg);
    return pairsum_unchecked(cfg);
}

std::vector<Count> fixed_euler_numbers(const K3Config& cfg) {
    std::vector<Count> out;
    for (int k = 1; k < cfg.order; ++k)
        if (cfg.order % k == 0) out.push_back(euler_fixed_set(cfg, GroupElement(cfg.order, k)));
    return out;
}

bool CrosscheckReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

CrosscheckReport crosscheck(const K3Config& cfg) {
    CrosscheckReport report;
    report.diamond = orbifold_hodge_diamond(cfg);
    report.euler_pairsum = pairsum_unchecked(cfg);
    const Count h11 = report.diamond.at(1, 1);
    const Count h21 = report.diamond.at(2, 1);
    const Count e = report.euler_pairsum;

    report.checks.push_back(compare("euler_diamond_vs_pairsum", euler_characteristic(report.diamond), e));
    if (e % 2 == 0) {
        report.checks.push_back(compare("h21_vs_h11_minus_half_euler", h21, cy_euler_relation(h11, e)));
    } else {
        auto c = compare("h21_vs_h11_minus_half_euler", h21, h11);
        c.passed = false;
        c.note = "pair-sum Euler characteristic is odd";
        report.checks.push_back(c);
    }
    const auto fixed = fixed_euler_numbers(cfg);
    report.checks.push_back(compare("euler_formula_vs_pairsum", euler_formula(cfg.order, fixed), e));

    std::string reason;
    if (!cfg.invariants) {
        reason = "no named invariants";
    } else if (has_errors(closed_form_violations(*cfg.invariants))) {
        reason = "closed-form hypotheses do not hold";
    } else {
        try {
            report.closed_form = closed_form_hodge(*cfg.invariants);
        } catch (const ValidationError& ex) {
            reason = ex.what();
        }
    }
    if (report.closed_form) {
        report.checks.push_back(compare("closed_form_h11", h11, report.closed_form->h11));
        report.checks.push_back(compare("closed_form_h21", h21, report.closed_form->h21));
    } else {
        report.checks.push_back(skipped("closed_form_h11", reason));
        report.checks.push_back(skipped("closed_form_h21", reason));
    }
    return report;
}

}  // namespace bvhodge
