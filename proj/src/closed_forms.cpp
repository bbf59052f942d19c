#include "bvhodge/closed_forms.hpp"

#include <string>

#include "bvhodge/error.hpp"

namespace bvhodge {

namespace {

void require_no_violations(const NamedInvariants& inv, const char* what) {
    std::vector<std::string> details;
    for (const auto& v : closed_form_violations(inv))
        if (v.severity == Severity::error) details.push_back(to_string(v));
    if (!details.empty()) throw ValidationError(std::string(what) + ": hypotheses do not hold", details);
}

}  // namespace

HodgePair hodge_order2(Count r, Count m, Count N, Count N_prime) {
    if (r + m != 22 || r < 1 || m < 1) {
        throw ValidationError("hodge_order2: needs r + m = 22 with r, m >= 1 (got r=" + std::to_string(r) +
                              ", m=" + std::to_string(m) + ")");
    }
    if (N < 0 || N_prime < 0) throw ValidationError("hodge_order2: N and N' must be nonnegative");
    return {r + 1 + 4 * N, m - 1 + 4 * N_prime};
}

HodgePair classic_bv(Count N, Count N_prime) { return {11 + 5 * N - N_prime, 11 + 5 * N_prime - N}; }

HodgePair hodge_order3(Count r, Count m, Count k, Count n_points, Count g_C) {
    if (r + 2 * m != 22) {
        throw ValidationError("hodge_order3: needs r + 2m = 22 (got r=" + std::to_string(r) + ", m=" +
                              std::to_string(m) + ")");
    }
    return {r + 1 + 3 * n_points + 6 * k, m - 1 + 6 * g_C};
}

HodgePair hodge_order4(const Order4Invariants& inv) {
    if (inv.d_type == DType::second && inv.n2 % 2 != 0) {
        throw ValidationError("hodge_order4: n2 must be even for a curve D of the second type");
    }
    require_no_violations(inv, "hodge_order4");
    const Count h11 = 1 + inv.r + 7 * inv.k + 3 * inv.b + 2 * (inv.n1 + inv.n2) + 4 * inv.a;
    const Count h21 = inv.d_type == DType::first ? inv.m - 1 + 7 * inv.g_D : inv.m + 2 * inv.g_D - inv.n2 / 2;
    return {h11, h21};
}

LatticeDims aas_relations_order4(Count k, Count a, Count b, Count g_D, Count h) {
    const Count r2 = 12 + k + 2 * a + b - g_D + 4 * h;
    const Count m2 = 12 - k - 2 * a - b + g_D;
    if (r2 % 2 != 0 || m2 % 2 != 0) {
        throw ValidationError("aas_relations_order4: odd numerator (" + std::to_string(r2) + ", " +
                              std::to_string(m2) + ")");
    }
    if (r2 < 0 || m2 < 0) throw ValidationError("aas_relations_order4: negative dimension");
    return {r2 / 2, m2 / 2};
}

HodgePair hodge_order6(const Order6Invariants& inv) {
    require_no_violations(inv, "hodge_order6");
    const Count h11 = inv.r + 1 + 2 * inv.l + 2 * inv.N - 2 * inv.b + 4 * inv.k - 2 * inv.a + 3 * inv.n_prime +
                      3 * inv.p25 + inv.p34;
    const Count f2 = inv.g_F2 + inv.g_F2_quot;
    const Count h21 = inv.g_D >= 1
                          ? inv.m - 1 + 8 * inv.g_D + f2
                          : inv.m - 1 + 2 * inv.g_G + 2 * inv.g_G_quot + inv.g_F1 + inv.g_F1_quot + f2;
    return {h11, h21};
}

Count euler_formula(int order, std::span<const Count> fixed_euler) {
    auto need = [&](std::size_t count) {
        if (fixed_euler.size() != count) {
            throw ValidationError("euler_formula: order " + std::to_string(order) + " needs " +
                                  std::to_string(count) + " fixed-set Euler numbers");
        }
    };
    switch (order) {
        case 2: need(1); return 6 * fixed_euler[0];
        case 3: need(1); return 8 * fixed_euler[0];
        case 4: need(2); return 6 * fixed_euler[0] + 3 * fixed_euler[1];
        case 6: need(3); return 4 * fixed_euler[0] + 4 * fixed_euler[1] + 2 * fixed_euler[2];
        default: throw ValidationError("euler_formula: unsupported order " + std::to_string(order));
    }
}

Count cy_euler_relation(Count h11, Count e) {
    if (e % 2 != 0) throw ValidationError("cy_euler_relation: odd Euler characteristic " + std::to_string(e));
    return h11 - e / 2;
}

Count corollary_order6(Count r, Count m, Count l, Count b, Count a, Count n_prime, Count p25, Count p34, Count n,
                       Count g_D) {
    return -m + r + 2 - 2 * l - 2 * b - 2 * a + 3 * n_prime + p25 - p34 - 2 * n + 4 * g_D;
}

Count corollary_order6(const Order6Invariants& inv) {
    return corollary_order6(inv.r, inv.m, inv.l, inv.b, inv.a, inv.n_prime, inv.p25, inv.p34,
                            inv.isolated_points_of_square(), inv.g_D);
}

HodgePair closed_form_hodge(const NamedInvariants& inv) {
    return std::visit(
        [](const auto& x) -> HodgePair {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Order2Invariants>) {
                return hodge_order2(x.r, 22 - x.r, x.curve_count(), x.genus_sum());
            } else if constexpr (std::is_same_v<T, Order3Invariants>) {
                return hodge_order3(x.r, x.m, x.k, x.n_points, x.g_C);
            } else if constexpr (std::is_same_v<T, Order4Invariants>) {
                return hodge_order4(x);
            } else {
                return hodge_order6(x);
            }
        },
        inv);
}

}  // namespace bvhodge
