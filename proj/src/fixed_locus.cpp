#include "bvhodge/fixed_locus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "bvhodge/error.hpp"

namespace bvhodge {

namespace {

int reduce(int j, int n) {
    const int r = j % n;
    return r < 0 ? r + n : r;
}

std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Violation error(std::string path, std::string message) {
    return {Severity::error, std::move(path), std::move(message)};
}

Violation warning(std::string path, std::string message) {
    return {Severity::warning, std::move(path), std::move(message)};
}

// ---------------------------------------------------------------------------
// Type-level checks

void check_eigenspace(const K3Config& cfg, std::vector<Violation>& out) {
    const auto& e = cfg.eigenspace;
    const int n = cfg.order;
    if (e.modulus != n || static_cast<int>(e.dims.size()) != n) {
        out.push_back(error("eigenspace_dims", "expected " + std::to_string(n) + " eigenspace dims, got " +
                                                   std::to_string(e.dims.size())));
        return;
    }
    Count sum = 0;
    for (std::size_t j = 0; j < e.dims.size(); ++j) {
        if (e.dims[j] < 0) out.push_back(error(idx("eigenspace_dims", j), "eigenspace dims must be nonnegative"));
        sum += e.dims[j];
    }
    if (sum != 22) {
        out.push_back(error("eigenspace_dims", "eigenspace dims must sum to 22 (got " + std::to_string(sum) + ")"));
    }
    for (int j = 1; j < n; ++j) {
        if (e.dims[j] != e.dims[n - j]) {
            out.push_back(error(idx("eigenspace_dims", j), "eigenspace dims must satisfy d[j] = d[n-j]"));
        }
    }
    if (e.dims[0] < 1) out.push_back(error("eigenspace_dims[0]", "invariant part of H^2 must be nonzero"));
    if (e.dims[1] < 1) out.push_back(error("eigenspace_dims[1]", "the eigenspace containing omega_S must be nonzero"));
    // H^{1,1} of S meets the zeta_2 eigenspace in d[1] - 2 dimensions.
    if (n == 2 && e.dims[1] < 2) {
        out.push_back(error("eigenspace_dims[1]", "for order 2 the anti-invariant part must have dimension >= 2"));
    }
}

void check_curve(const CurveOrbit& c, int n, int d, const std::string& path, std::vector<Violation>& out) {
    if (c.orbit_size < 1) out.push_back(error(path + ".orbit_size", "orbit size must be >= 1"));
    if (c.genus < 0) out.push_back(error(path + ".genus", "genus must be nonnegative"));
    if (c.quotient_genus < 0) out.push_back(error(path + ".quotient_genus", "quotient genus must be nonnegative"));
    if (c.count < 0) out.push_back(error(path + ".count", "count must be nonnegative"));
    if (c.residual_order < 1 || c.residual_order > 3) {
        out.push_back(error(path + ".residual_order", "residual order must be 1, 2 or 3"));
        return;
    }
    if (c.orbit_size < 1) return;
    const int sr = c.orbit_size * c.residual_order;
    if (n % sr != 0 || (n / sr) % d != 0) {
        out.push_back(error(path, "orbit size times residual order must divide n/" + std::to_string(d) +
                                      " (the subgroup of order " + std::to_string(d) + " must fix the curve pointwise)"));
        return;
    }
    if (c.quotient_genus > c.genus) {
        out.push_back(error(path + ".quotient_genus", "quotient genus exceeds genus"));
    }
    if (c.residual_order == 1 && c.quotient_genus != c.genus) {
        out.push_back(error(path + ".quotient_genus", "residual order 1 requires quotient genus = genus"));
    }
    // Riemann-Hurwitz for a cyclic cover of prime degree: 2g-2 = rho(2gq-2) + (rho-1)F, F >= 0.
    const int rho = c.residual_order;
    if (rho > 1) {
        const int ramification = 2 * c.genus - 2 - rho * (2 * c.quotient_genus - 2);
        if (ramification < 0 || ramification % (rho - 1) != 0) {
            out.push_back(error(path + ".quotient_genus", "genus and quotient genus violate Riemann-Hurwitz"));
        }
    }
    if (c.char_dims) {
        const auto& v = *c.char_dims;
        if (v.modulus() != n) {
            out.push_back(error(path + ".char_dims", "character dims must have " + std::to_string(n) + " entries"));
            return;
        }
        if (v.total() != c.genus) out.push_back(error(path + ".char_dims", "character dims must sum to the genus"));
        if (v[0] != c.quotient_genus) {
            out.push_back(error(path + ".char_dims", "trivial-character entry must equal the quotient genus"));
        }
        const int step = n / c.residual_order;
        for (int j = 0; j < n; ++j) {
            if (v[j] != 0 && j % step != 0) {
                out.push_back(error(path + ".char_dims", "character " + std::to_string(j) +
                                                             " is not a character of the residual group"));
            }
        }
    } else if (c.residual_order == 3 && (c.genus - c.quotient_genus) % 2 != 0) {
        out.push_back(error(path + ".char_dims",
                            "odd genus difference for residual order 3 needs explicit character dims"));
    }
}

void check_point(const PointOrbit& p, int n, int d, const std::string& path, std::vector<Violation>& out) {
    if (p.count < 0) out.push_back(error(path + ".count", "count must be nonnegative"));
    if (p.orbit_size < 1 || n % p.orbit_size != 0 || (n / p.orbit_size) % d != 0) {
        out.push_back(error(path + ".orbit_size", "orbit size must divide n/" + std::to_string(d)));
    }
    const int step = n / d;
    for (int i = 0; i < 2; ++i) {
        const int t = reduce(p.type[i], n);
        if (t == 0) out.push_back(error(idx(path + ".type", i), "point type exponents must be nonzero"));
        if (t % step != 0) {
            out.push_back(error(idx(path + ".type", i), "point type exponents must be multiples of " +
                                                            std::to_string(step)));
        }
    }
    if (reduce(p.type[0] + p.type[1], n) != step) {
        out.push_back(error(path + ".type", "point type must satisfy T1 + T2 = " + std::to_string(step) + " mod " +
                                                std::to_string(n)));
    }
}

// A curve with pointwise stabilizer K appears in the record of every subgroup of K.
void check_nesting(const K3Config& cfg, std::vector<Violation>& out) {
    const int n = cfg.order;
    using Key = std::tuple<int, int, int, int>;
    const auto divisors = nontrivial_divisors(n);
    for (int d : divisors) {
        for (int e : divisors) {
            if (e <= d || e % d != 0) continue;
            std::map<Key, Count> lower, upper;
            for (const auto& c : cfg.record(d).curves) {
                if (c.orbit_size < 1 || c.residual_order < 1 || n % (c.orbit_size * c.residual_order) != 0) continue;
                if (c.pointwise_stabilizer_order(n) % e == 0) {
                    lower[{c.orbit_size, c.genus, c.residual_order, c.quotient_genus}] += c.count;
                }
            }
            for (const auto& c : cfg.record(e).curves) {
                upper[{c.orbit_size, c.genus, c.residual_order, c.quotient_genus}] += c.count;
            }
            std::erase_if(lower, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(upper, [](const auto& kv) { return kv.second == 0; });
            if (lower != upper) {
                out.push_back(warning("subgroups", "curves fixed by the subgroup of order " + std::to_string(e) +
                                                       " do not reappear identically in the record for order " +
                                                       std::to_string(d)));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Construction helpers

void add_curves(SubgroupFixedRecord& rec, int count, int genus, int rho = 1, int quotient_genus = -1,
                int orbit_size = 1) {
    if (count <= 0) return;
    CurveOrbit c;
    c.orbit_size = orbit_size;
    c.genus = genus;
    c.residual_order = rho;
    c.quotient_genus = quotient_genus < 0 ? genus : quotient_genus;
    c.count = count;
    rec.curves.push_back(c);
}

void add_points(SubgroupFixedRecord& rec, int count, int t1, int t2, int orbit_size = 1) {
    if (count <= 0) return;
    rec.points.push_back(PointOrbit{orbit_size, {t1, t2}, count});
}

void require_nonnegative(std::initializer_list<std::pair<const char*, int>> fields) {
    std::vector<std::string> bad;
    for (const auto& [name, value] : fields)
        if (value < 0) bad.push_back(std::string(name) + " must be nonnegative");
    if (!bad.empty()) throw ValidationError("invalid invariants", bad);
}

K3Config finish(K3Config cfg, NamedInvariants inv, Strictness strictness) {
    cfg.invariants = std::move(inv);
    auto violations = validate(cfg, strictness);
    if (has_errors(violations)) {
        std::vector<std::string> details;
        for (const auto& v : violations)
            if (v.severity == Severity::error) details.push_back(to_string(v));
        throw ValidationError("configuration violates " + std::to_string(details.size()) + " constraint(s)",
                              details);
    }
    return cfg;
}

}  // namespace

int Order2Invariants::genus_sum() const { return std::accumulate(curve_genera.begin(), curve_genera.end(), 0); }

const SubgroupFixedRecord& K3Config::record(int subgroup_order) const {
    static const SubgroupFixedRecord empty{};
    for (const auto& rec : records)
        if (rec.subgroup_order == subgroup_order) return rec;
    return empty;
}

std::vector<int> nontrivial_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------
// Elliptic fixtures

const std::vector<int>& EllipticFixture::orbit_sizes(int subgroup_order) const {
    for (const auto& locus : loci)
        if (locus.subgroup_order == subgroup_order) return locus.orbit_sizes;
    throw ValidationError("elliptic fixture for order " + std::to_string(order) + " has no subgroup of order " +
                          std::to_string(subgroup_order));
}

int EllipticFixture::fixed_point_count(int subgroup_order) const {
    const auto& sizes = orbit_sizes(subgroup_order);
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

CharacterVector EllipticFixture::permutation_character(int subgroup_order) const {
    CharacterVector out(order);
    for (int s : orbit_sizes(subgroup_order)) {
        const auto orbit = bvhodge::permutation_character(order, s);
        for (int j = 0; j < order; ++j) out.add(j, orbit[j]);
    }
    return out;
}

EllipticFixture elliptic_fixture(int n) {
    switch (n) {
        case 2: return {2, {{2, {1, 1, 1, 1}}}};
        case 3: return {3, {{3, {1, 1, 1}}}};
        // y^2 = x^3 + x, (x,y) -> (-x, iy): P and (0,0) are fixed; (i,0), (-i,0) are swapped.
        case 4: return {4, {{2, {1, 1, 2}}, {4, {1, 1}}}};
        // y^2 = x^3 + 1, (x,y) -> (zeta_3 x, -y): P alone; cube fixes three points, square four.
        case 6: return {6, {{2, {1, 3}}, {3, {1, 2}}, {6, {1}}}};
        default:
            throw ValidationError("unsupported order " + std::to_string(n) + " (expected 2, 3, 4 or 6)");
    }
}

// ---------------------------------------------------------------------------
// Validation

bool has_errors(const std::vector<Violation>& violations) {
    return std::any_of(violations.begin(), violations.end(),
                       [](const Violation& v) { return v.severity == Severity::error; });
}

std::string to_string(const Violation& v) {
    return std::string(v.severity == Severity::error ? "error" : "warning") + ": " + v.path + ": " + v.message;
}

std::vector<Violation> validate(const K3Config& cfg, Strictness strictness) {
    std::vector<Violation> out;
    const int n = cfg.order;
    if (!is_supported_order(n)) {
        out.push_back(error("order", "unsupported order " + std::to_string(n) + " (expected 2, 3, 4 or 6)"));
        return out;
    }
    check_eigenspace(cfg, out);

    std::vector<int> seen;
    for (std::size_t i = 0; i < cfg.records.size(); ++i) {
        const auto& rec = cfg.records[i];
        const std::string path = idx("subgroups", i);
        const int d = rec.subgroup_order;
        if (d <= 1 || n % d != 0) {
            out.push_back(error(path + ".order", "subgroup order must be a divisor of " + std::to_string(n) +
                                                     " greater than 1"));
            continue;
        }
        if (std::find(seen.begin(), seen.end(), d) != seen.end()) {
            out.push_back(error(path + ".order", "duplicate record for subgroup of order " + std::to_string(d)));
        }
        seen.push_back(d);
        for (std::size_t c = 0; c < rec.curves.size(); ++c) check_curve(rec.curves[c], n, d, idx(path + ".curves", c), out);
        for (std::size_t p = 0; p < rec.points.size(); ++p) check_point(rec.points[p], n, d, idx(path + ".points", p), out);
    }
    if (!has_errors(out)) check_nesting(cfg, out);

    if (strictness == Strictness::closed_form) {
        if (!cfg.invariants) {
            out.push_back(error("invariants", "closed forms need the named invariants of the configuration"));
        } else if (order_of(*cfg.invariants) != n) {
            out.push_back(error("invariants", "named invariants are for a different order"));
        } else {
            auto extra = closed_form_violations(*cfg.invariants);
            out.insert(out.end(), extra.begin(), extra.end());
        }
        if (n == 3) {
            Count positive = 0;
            for (const auto& c : cfg.record(3).curves)
                if (c.genus > 0) positive += c.count * c.orbit_size;
            if (positive > 1) {
                out.push_back(warning("subgroups", "more than one curve of positive genus is fixed by alpha_S"));
            }
        }
    }
    return out;
}

std::vector<Violation> closed_form_violations(const NamedInvariants& invariants) {
    std::vector<Violation> out;
    std::visit(
        [&out](const auto& inv) {
            using T = std::decay_t<decltype(inv)>;
            if constexpr (std::is_same_v<T, Order2Invariants>) {
                for (std::size_t i = 0; i < inv.curve_genera.size(); ++i)
                    if (inv.curve_genera[i] < 0) out.push_back(error(idx("curve_genera", i), "genus must be nonnegative"));
            } else if constexpr (std::is_same_v<T, Order3Invariants>) {
                if (inv.r + 2 * inv.m != 22) out.push_back(error("r", "r + 2m must equal 22"));
                if (inv.k == 0 && inv.n_points == 0) {
                    out.push_back(error("k", "the fixed locus of an order-3 automorphism is nonempty"));
                }
                if (inv.k == 0 && inv.g_C != 0) out.push_back(error("g_C", "g_C must be 0 when k = 0"));
            } else if constexpr (std::is_same_v<T, Order4Invariants>) {
                if (inv.N && *inv.N != inv.k + inv.b + 2 * inv.a) out.push_back(error("N", "N must equal k + b + 2a"));
                if (inv.d_type == DType::first) {
                    const int h = inv.k - inv.g_D;
                    if (inv.k < 1) out.push_back(error("k", "first type needs D among the k curves"));
                    if (inv.n2 != 0) out.push_back(error("n2", "first type requires n2 = 0"));
                    if (inv.n1 != 2 * h + 4) out.push_back(error("n1", "first type requires n1 = 2h + 4 with h = k - g(D)"));
                    if (2 * inv.b != inv.n1) out.push_back(error("b", "first type requires b = n1/2"));
                } else {
                    const int h = inv.k;
                    if (inv.b < 1) out.push_back(error("b", "second type needs D among the b curves"));
                    if (inv.n1 + inv.n2 != 2 * h + 4) out.push_back(error("n1", "second type requires n1 + n2 = 2h + 4 with h = k"));
                    if (2 * (inv.b - 1) != inv.n1) out.push_back(error("b", "second type requires b = n1/2 + 1"));
                    if (inv.g_D_quot && inv.n2 != 2 + 2 * inv.g_D - 4 * *inv.g_D_quot) {
                        out.push_back(error("g_D_quot", "n2 must equal the number of fixed points of alpha_S on D"));
                    }
                }
            } else {
                if (inv.n && *inv.n != inv.p25 + 2 * inv.n_prime) out.push_back(error("n", "n must equal p25 + 2n'"));
                if (inv.g_D != 0 && inv.g_D != 1) out.push_back(error("g_D", "g(D) must be 0 or 1"));
                if (inv.r + 5 * inv.m != 22) out.push_back(error("r", "r + 5m must equal 22"));
                if (inv.g_D == 1 && (inv.g_G != 1 || inv.g_G_quot != 1 || inv.g_F1 != 1 || inv.g_F1_quot != 1)) {
                    out.push_back(error("g_G", "g(D) = 1 forces G = F1 = D, so their genera and quotient genera are 1"));
                }
                if (inv.g_G_quot > inv.g_G) out.push_back(error("g_G_quot", "quotient genus exceeds genus"));
                if (inv.g_F1_quot > inv.g_F1) out.push_back(error("g_F1_quot", "quotient genus exceeds genus"));
                if (inv.g_F2_quot > inv.g_F2) out.push_back(error("g_F2_quot", "quotient genus exceeds genus"));
            }
        },
        invariants);
    return out;
}

Count euler_fixed_set(const K3Config& cfg, const GroupElement& j) {
    if (j.is_identity()) return 24;
    Count e = 0;
    const auto& rec = cfg.record(j.order());
    for (const auto& c : rec.curves) e += static_cast<Count>(c.count) * c.orbit_size * (2 - 2 * c.genus);
    for (const auto& p : rec.points) e += static_cast<Count>(p.count) * p.orbit_size;
    return e;
}

CharacterVector curve_character_dims(const CurveOrbit& curve, int modulus) {
    if (curve.char_dims) {
        if (curve.char_dims->modulus() != modulus) throw ValidationError("curve_character_dims: modulus mismatch");
        return *curve.char_dims;
    }
    CharacterVector out(modulus);
    const int g = curve.genus;
    const int gq = curve.quotient_genus;
    switch (curve.residual_order) {
        case 1:
            out.add(0, g);
            return out;
        case 2:
            if (modulus % 2 != 0) throw ValidationError("curve_character_dims: residual order 2 needs even n");
            out.add(0, gq);
            out.add(modulus / 2, g - gq);
            return out;
        case 3:
            if (modulus % 3 != 0) throw ValidationError("curve_character_dims: residual order 3 needs 3 | n");
            if ((g - gq) % 2 != 0) {
                throw ValidationError("curve_character_dims: odd genus difference " + std::to_string(g - gq) +
                                      " for residual order 3 without explicit character dims");
            }
            out.add(0, gq);
            out.add(modulus / 3, (g - gq) / 2);
            out.add(2 * modulus / 3, (g - gq) / 2);
            return out;
        default:
            throw ValidationError("curve_character_dims: unsupported residual order " +
                                  std::to_string(curve.residual_order));
    }
}

// ---------------------------------------------------------------------------
// Constructors from named invariants

K3Config from_invariants_order2(const Order2Invariants& inv, Strictness strictness) {
    require_nonnegative({{"r", inv.r}});
    K3Config cfg;
    cfg.order = 2;
    cfg.eigenspace = {2, {inv.r, 22 - inv.r}};
    SubgroupFixedRecord rec{2, {}, {}};
    std::map<int, int> by_genus;
    for (int g : inv.curve_genera) {
        if (g < 0) throw ValidationError("invalid invariants", {"curve genera must be nonnegative"});
        ++by_genus[g];
    }
    for (const auto& [g, count] : by_genus) add_curves(rec, count, g);
    cfg.records.push_back(rec);
    return finish(cfg, inv, strictness);
}

K3Config from_invariants_order3(const Order3Invariants& inv, Strictness strictness) {
    require_nonnegative({{"r", inv.r}, {"m", inv.m}, {"k", inv.k}, {"n_points", inv.n_points}, {"g_C", inv.g_C}});
    if (inv.k == 0 && inv.g_C > 0) {
        throw ValidationError("invalid invariants", {"g_C: a curve C needs k >= 1"});
    }
    K3Config cfg;
    cfg.order = 3;
    cfg.eigenspace = {3, {inv.r, inv.m, inv.m}};
    SubgroupFixedRecord rec{3, {}, {}};
    if (inv.k >= 1) {
        add_curves(rec, 1, inv.g_C);
        add_curves(rec, inv.k - 1, 0);
    }
    add_points(rec, inv.n_points, 2, 2);
    cfg.records.push_back(rec);
    return finish(cfg, inv, strictness);
}

K3Config from_invariants_order4(const Order4Invariants& inv, Strictness strictness) {
    require_nonnegative({{"r", inv.r}, {"m", inv.m}, {"k", inv.k}, {"a", inv.a}, {"b", inv.b}, {"n1", inv.n1},
                         {"n2", inv.n2}, {"g_D", inv.g_D}});
    K3Config cfg;
    cfg.order = 4;
    cfg.eigenspace = {4, {inv.r, inv.m, 22 - inv.r - 2 * inv.m, inv.m}};
    SubgroupFixedRecord fix4{4, {}, {}};
    SubgroupFixedRecord fix2{2, {}, {}};
    if (inv.d_type == DType::first) {
        if (inv.k < 1) throw ValidationError("invalid invariants", {"k: first type needs D among the k curves"});
        for (auto* rec : {&fix4, &fix2}) {
            add_curves(*rec, 1, inv.g_D);
            add_curves(*rec, inv.k - 1, 0);
        }
        add_curves(fix2, inv.b, 0, 2, 0);
    } else {
        if (inv.b < 1) throw ValidationError("invalid invariants", {"b: second type needs D among the b curves"});
        int quot = 0;
        if (inv.g_D_quot) {
            quot = *inv.g_D_quot;
        } else {
            // Riemann-Hurwitz for D -> D/alpha_S with n2 branch points.
            const int twice = 2 + 2 * inv.g_D - inv.n2;
            if (twice < 0 || twice % 4 != 0) {
                throw ValidationError("invalid invariants",
                                      {"g_D_quot: cannot be derived from g_D and n2 (give it explicitly)"});
            }
            quot = twice / 4;
        }
        for (auto* rec : {&fix4, &fix2}) add_curves(*rec, inv.k, 0);
        add_curves(fix2, 1, inv.g_D, 2, quot);
        add_curves(fix2, inv.b - 1, 0, 2, 0);
    }
    add_points(fix4, inv.n1 + inv.n2, 2, 3);
    add_curves(fix2, inv.a, 0, 1, 0, 2);
    cfg.records = {fix2, fix4};
    return finish(cfg, inv, strictness);
}

K3Config from_invariants_order6(const Order6Invariants& inv, Strictness strictness) {
    require_nonnegative({{"r", inv.r}, {"m", inv.m}, {"l", inv.l}, {"k", inv.k}, {"N", inv.N}, {"a", inv.a},
                         {"b", inv.b}, {"n_prime", inv.n_prime}, {"p25", inv.p25}, {"p34", inv.p34},
                         {"g_D", inv.g_D}, {"g_G", inv.g_G}, {"g_G_quot", inv.g_G_quot}, {"g_F1", inv.g_F1},
                         {"g_F1_quot", inv.g_F1_quot}, {"g_F2", inv.g_F2}, {"g_F2_quot", inv.g_F2_quot}});
    std::vector<std::string> problems;
    if (inv.g_D > 0 && inv.l < 1) problems.push_back("l: a curve D of positive genus needs l >= 1");

    // Fix(gamma^2) beyond the l curves: c2 curves with residual order 2, G among them when D is rational.
    const bool has_G = inv.g_D == 0 && inv.g_G > 0;
    const int c2 = inv.k - inv.l - 2 * inv.b;
    if (c2 < (has_G ? 1 : 0)) problems.push_back("k: k - l - 2b leaves no room for the curves fixed by gamma^2 only");

    // Fix(gamma^3) beyond the l curves: c3 curves with residual order 3 carrying the positive-genus F's.
    struct Positive { int g, gq; };
    std::vector<Positive> fs;
    if (inv.g_D == 0 && inv.g_F1 > 0) fs.push_back({inv.g_F1, inv.g_F1_quot});
    if (inv.g_F2 > 0) fs.push_back({inv.g_F2, inv.g_F2_quot});
    const int c3 = inv.N - inv.l - 3 * inv.a;
    if (c3 < static_cast<int>(fs.size())) {
        problems.push_back("N: N - l - 3a leaves no room for the curves fixed by gamma^3 only");
    }
    if (!problems.empty()) throw ValidationError("invalid invariants", problems);

    K3Config cfg;
    cfg.order = 6;
    cfg.eigenspace = {6, {inv.r, inv.m, inv.m, inv.m, inv.m, inv.m}};
    SubgroupFixedRecord fix6{6, {}, {}};
    SubgroupFixedRecord fix3{3, {}, {}};
    SubgroupFixedRecord fix2{2, {}, {}};
    for (auto* rec : {&fix6, &fix3, &fix2}) {
        if (inv.l >= 1) {
            add_curves(*rec, 1, inv.g_D);
            add_curves(*rec, inv.l - 1, 0);
        }
    }
    add_points(fix6, inv.p25, 2, 5);
    add_points(fix6, inv.p34, 3, 4);

    if (has_G) add_curves(fix3, 1, inv.g_G, 2, inv.g_G_quot);
    add_curves(fix3, c2 - (has_G ? 1 : 0), 0, 2, 0);
    add_curves(fix3, inv.b, 0, 1, 0, 2);
    add_points(fix3, inv.p25, 4, 4);
    add_points(fix3, inv.n_prime, 4, 4, 2);

    for (const auto& f : fs) {
        CurveOrbit c{1, f.g, 3, f.gq, std::nullopt, 1};
        if ((f.g - f.gq) % 2 != 0 && f.gq <= f.g) {
            // Any split is output-neutral; pick ceil/floor so the constructor stays total.
            CharacterVector dims(6);
            dims.add(0, f.gq);
            dims.add(2, (f.g - f.gq + 1) / 2);
            dims.add(4, (f.g - f.gq) / 2);
            c.char_dims = dims;
        }
        fix2.curves.push_back(c);
    }
    add_curves(fix2, c3 - static_cast<int>(fs.size()), 0, 3, 0);
    add_curves(fix2, inv.a, 0, 1, 0, 3);

    cfg.records = {fix2, fix3, fix6};
    return finish(cfg, inv, strictness);
}

K3Config from_invariants(const NamedInvariants& inv, Strictness strictness) {
    return std::visit(
        [strictness](const auto& x) -> K3Config {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Order2Invariants>) return from_invariants_order2(x, strictness);
            else if constexpr (std::is_same_v<T, Order3Invariants>) return from_invariants_order3(x, strictness);
            else if constexpr (std::is_same_v<T, Order4Invariants>) return from_invariants_order4(x, strictness);
            else return from_invariants_order6(x, strictness);
        },
        inv);
}

int order_of(const NamedInvariants& inv) {
    static constexpr int orders[] = {2, 3, 4, 6};
    return orders[inv.index()];
}

}  // namespace bvhodge
