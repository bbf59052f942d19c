#include "bvhodge/report.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

#include "bvhodge/error.hpp"

namespace bvhodge {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Schema helpers

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    return j;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items())
        if (!ok.count(key)) throw ParseError(path + "." + key + ": unknown field");
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < INT_MIN || x > INT_MAX) throw ParseError(path + ": integer out of range");
    return static_cast<int>(x);
}

int get_int(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key)) throw ParseError(path + "." + key + ": missing required field");
    return as_int(obj.at(key), path + "." + key);
}

int get_int(const json& obj, const char* key, const std::string& path, int fallback) {
    return obj.contains(key) ? as_int(obj.at(key), path + "." + key) : fallback;
}

std::optional<int> get_optional_int(const json& obj, const char* key, const std::string& path) {
    if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
    return as_int(obj.at(key), path + "." + key);
}

std::vector<int> get_int_array(const json& obj, const char* key, const std::string& path) {
    const std::string p = path + "." + key;
    const auto& arr = obj.at(key);
    if (!arr.is_array()) throw ParseError(p + ": expected an array");
    std::vector<int> out;
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr[i], p + "[" + std::to_string(i) + "]"));
    return out;
}

const json& get_array(const json& obj, const char* key, const std::string& path) {
    const auto& arr = obj.at(key);
    if (!arr.is_array()) throw ParseError(path + "." + key + ": expected an array");
    return arr;
}

int parse_order(const json& doc) {
    require_object(doc, "$");
    const int n = get_int(doc, "order", "$");
    if (!is_supported_order(n)) {
        throw ParseError("$.order: unsupported order " + std::to_string(n) + " (expected 2, 3, 4 or 6)");
    }
    return n;
}

std::string parse_source(const json& doc) {
    check_keys(doc, {"order", "invariants", "raw", "description"}, "$");
    const bool inv = doc.contains("invariants");
    const bool raw = doc.contains("raw");
    if (inv == raw) throw ParseError("$: exactly one of \"invariants\" and \"raw\" is required");
    return inv ? "invariants" : "raw";
}

// ---------------------------------------------------------------------------
// Named invariants

NamedInvariants parse_invariants(int n, const json& j) {
    const std::string path = "$.invariants";
    require_object(j, path);
    switch (n) {
        case 2: {
            check_keys(j, {"r", "curve_genera"}, path);
            Order2Invariants inv;
            inv.r = get_int(j, "r", path);
            if (j.contains("curve_genera")) inv.curve_genera = get_int_array(j, "curve_genera", path);
            return inv;
        }
        case 3: {
            check_keys(j, {"r", "m", "k", "n_points", "g_C"}, path);
            Order3Invariants inv;
            inv.r = get_int(j, "r", path);
            inv.m = get_int(j, "m", path);
            inv.k = get_int(j, "k", path);
            inv.n_points = get_int(j, "n_points", path);
            inv.g_C = get_int(j, "g_C", path, 0);
            return inv;
        }
        case 4: {
            check_keys(j, {"r", "m", "k", "a", "b", "n1", "n2", "g_D", "D_type", "g_D_quot", "N"}, path);
            Order4Invariants inv;
            inv.r = get_int(j, "r", path);
            inv.m = get_int(j, "m", path);
            inv.k = get_int(j, "k", path);
            inv.a = get_int(j, "a", path);
            inv.b = get_int(j, "b", path);
            inv.n1 = get_int(j, "n1", path);
            inv.n2 = get_int(j, "n2", path);
            inv.g_D = get_int(j, "g_D", path, 0);
            if (!j.contains("D_type")) throw ParseError(path + ".D_type: missing required field");
            const auto& t = j.at("D_type");
            if (t == "first") {
                inv.d_type = DType::first;
            } else if (t == "second") {
                inv.d_type = DType::second;
            } else {
                throw ParseError(path + ".D_type: expected \"first\" or \"second\"");
            }
            inv.g_D_quot = get_optional_int(j, "g_D_quot", path);
            inv.N = get_optional_int(j, "N", path);
            return inv;
        }
        default: {
            check_keys(j, {"r", "m", "l", "k", "N", "a", "b", "n_prime", "p25", "p34", "n", "g_D", "g_G", "g_G_quot",
                           "g_F1", "g_F1_quot", "g_F2", "g_F2_quot"},
                       path);
            Order6Invariants inv;
            inv.r = get_int(j, "r", path);
            inv.m = get_int(j, "m", path);
            inv.l = get_int(j, "l", path);
            inv.k = get_int(j, "k", path);
            inv.N = get_int(j, "N", path);
            inv.a = get_int(j, "a", path);
            inv.b = get_int(j, "b", path);
            inv.n_prime = get_int(j, "n_prime", path);
            inv.p25 = get_int(j, "p25", path);
            inv.p34 = get_int(j, "p34", path);
            inv.n = get_optional_int(j, "n", path);
            inv.g_D = get_int(j, "g_D", path, 0);
            inv.g_G = get_int(j, "g_G", path, 0);
            inv.g_G_quot = get_int(j, "g_G_quot", path, 0);
            inv.g_F1 = get_int(j, "g_F1", path, 0);
            inv.g_F1_quot = get_int(j, "g_F1_quot", path, 0);
            inv.g_F2 = get_int(j, "g_F2", path, 0);
            inv.g_F2_quot = get_int(j, "g_F2_quot", path, 0);
            return inv;
        }
    }
}

// ---------------------------------------------------------------------------
// Raw records

CurveOrbit parse_curve(int n, const json& j, const std::string& path) {
    require_object(j, path);
    check_keys(j, {"orbit_size", "genus", "residual_order", "quotient_genus", "char_dims", "count"}, path);
    CurveOrbit c;
    c.orbit_size = get_int(j, "orbit_size", path, 1);
    c.genus = get_int(j, "genus", path);
    c.residual_order = get_int(j, "residual_order", path, 1);
    c.quotient_genus = c.residual_order == 1 ? get_int(j, "quotient_genus", path, c.genus)
                                             : get_int(j, "quotient_genus", path);
    c.count = get_int(j, "count", path, 1);
    if (j.contains("char_dims")) {
        const auto dims = get_int_array(j, "char_dims", path);
        if (static_cast<int>(dims.size()) != n) {
            throw ParseError(path + ".char_dims: expected " + std::to_string(n) + " entries");
        }
        std::vector<Count> counts;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (dims[i] < 0) throw ParseError(path + ".char_dims[" + std::to_string(i) + "]: must be nonnegative");
            counts.push_back(dims[i]);
        }
        c.char_dims = CharacterVector(n, counts);
    }
    return c;
}

PointOrbit parse_point(const json& j, const std::string& path) {
    require_object(j, path);
    check_keys(j, {"orbit_size", "type", "count"}, path);
    PointOrbit p;
    p.orbit_size = get_int(j, "orbit_size", path, 1);
    if (!j.contains("type")) throw ParseError(path + ".type: missing required field");
    const auto type = get_int_array(j, "type", path);
    if (type.size() != 2) throw ParseError(path + ".type: expected two exponents");
    p.type = {type[0], type[1]};
    p.count = get_int(j, "count", path, 1);
    return p;
}

K3Config parse_raw(int n, const json& j) {
    const std::string path = "$.raw";
    require_object(j, path);
    check_keys(j, {"eigenspace_dims", "subgroups"}, path);
    if (!j.contains("eigenspace_dims")) throw ParseError(path + ".eigenspace_dims: missing required field");
    K3Config cfg;
    cfg.order = n;
    const auto dims = get_int_array(j, "eigenspace_dims", path);
    cfg.eigenspace = {n, std::vector<Count>(dims.begin(), dims.end())};
    if (j.contains("subgroups")) {
        const auto& subgroups = get_array(j, "subgroups", path);
        for (std::size_t i = 0; i < subgroups.size(); ++i) {
            const std::string sp = path + ".subgroups[" + std::to_string(i) + "]";
            const auto& s = require_object(subgroups[i], sp);
            check_keys(s, {"order", "curves", "points"}, sp);
            SubgroupFixedRecord rec;
            rec.subgroup_order = get_int(s, "order", sp);
            if (s.contains("curves")) {
                const auto& curves = get_array(s, "curves", sp);
                for (std::size_t c = 0; c < curves.size(); ++c)
                    rec.curves.push_back(parse_curve(n, curves[c], sp + ".curves[" + std::to_string(c) + "]"));
            }
            if (s.contains("points")) {
                const auto& points = get_array(s, "points", sp);
                for (std::size_t p = 0; p < points.size(); ++p)
                    rec.points.push_back(parse_point(points[p], sp + ".points[" + std::to_string(p) + "]"));
            }
            cfg.records.push_back(std::move(rec));
        }
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Report serialization

json diamond_json(const HodgeDiamond& h) {
    json rows = json::array();
    for (int p = 0; p <= h.dim(); ++p) {
        json row = json::array();
        for (int q = 0; q <= h.dim(); ++q) row.push_back(h.at(p, q));
        rows.push_back(row);
    }
    return rows;
}

HodgeDiamond diamond_from_json(const json& rows) {
    HodgeDiamond h(static_cast<int>(rows.size()) - 1);
    for (int p = 0; p <= h.dim(); ++p)
        for (int q = 0; q <= h.dim(); ++q) h.set(p, q, rows.at(p).at(q).get<Count>());
    return h;
}

const char* check_status(const Check& c) { return c.skipped ? "skipped" : c.passed ? "pass" : "fail"; }

std::string signed_count(Count v) { return (v >= 0 ? "+" : "") + std::to_string(v); }

}  // namespace

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
}

K3Config parse_config(const json& doc) {
    const int n = parse_order(doc);
    if (parse_source(doc) == "invariants") return from_invariants(parse_invariants(n, doc.at("invariants")));
    return parse_raw(n, doc.at("raw"));
}

K3Config parse_config_text(std::string_view text) { return parse_config(parse_document(text)); }

RunReport run(const json& doc, const RunOptions& options) {
    RunReport rep;
    rep.config = doc;
    rep.checks_enabled = options.checks;
    rep.order = parse_order(doc);
    rep.source = parse_source(doc);

    K3Config cfg;
    try {
        cfg = parse_config(doc);
    } catch (const ValidationError& ex) {
        rep.violations.push_back({Severity::error, "$." + rep.source, ex.what()});
        for (const auto& d : ex.details()) rep.violations.push_back({Severity::error, "$." + rep.source, d});
        rep.exit_code = 2;
        return rep;
    }

    rep.violations = validate(cfg, Strictness::engine);
    std::vector<Violation> closed_form_issues;
    if (cfg.invariants) closed_form_issues = closed_form_violations(*cfg.invariants);
    for (const auto& v : closed_form_issues) rep.violations.push_back({Severity::warning, "$.invariants." + v.path, v.message});
    if (has_errors(rep.violations)) {
        rep.exit_code = 2;
        return rep;
    }

    try {
        rep.diamond = orbifold_hodge_diamond(cfg);
        rep.h11 = rep.diamond->at(1, 1);
        rep.h21 = rep.diamond->at(2, 1);
        rep.euler = orbifold_euler_pairsum(cfg);
        rep.fixed_euler = fixed_euler_numbers(cfg);
        for (int j = 1; j < cfg.order; ++j) {
            const auto s = sector_contribution(cfg, GroupElement(cfg.order, j));
            rep.sectors.push_back({j, s.subgroup_order, s.total});
        }

        if (!cfg.invariants) {
            rep.closed_form_status = "not applicable: raw configuration";
        } else if (has_errors(closed_form_issues)) {
            rep.closed_form_status = "not applicable: closed-form hypotheses do not hold";
        } else {
            rep.closed_form = closed_form_hodge(*cfg.invariants);
            rep.closed_form_euler = euler_formula(cfg.order, rep.fixed_euler);
            rep.closed_form_status = "applicable";
        }
        if (cfg.invariants && cfg.order == 6) {
            rep.corollary = corollary_order6(std::get<Order6Invariants>(*cfg.invariants));
        }

        if (options.checks) {
            rep.checks = crosscheck(cfg).checks;
            if (std::any_of(rep.checks.begin(), rep.checks.end(), [](const Check& c) { return !c.passed; })) {
                rep.exit_code = 3;
            }
        }
    } catch (const ValidationError& ex) {
        rep.diamond.reset();
        rep.violations.push_back({Severity::error, "$", ex.what()});
        rep.exit_code = 2;
    } catch (const ConsistencyError& ex) {
        rep.diamond.reset();
        rep.error = std::string("internal consistency failure: ") + ex.what();
        rep.exit_code = 3;
    }
    return rep;
}

json to_json(const RunReport& r) {
    json j;
    j["order"] = r.order;
    j["source"] = r.source;
    j["config"] = r.config;
    j["violations"] = json::array();
    for (const auto& v : r.violations) {
        j["violations"].push_back({{"severity", v.severity == Severity::error ? "error" : "warning"},
                                   {"path", v.path},
                                   {"message", v.message}});
    }
    if (r.diamond) {
        json sectors = json::array();
        for (const auto& s : r.sectors) {
            sectors.push_back({{"element", s.element},
                               {"subgroup_order", s.subgroup_order},
                               {"increment", diamond_json(s.increment)}});
        }
        j["engine"] = {{"diamond", diamond_json(*r.diamond)},
                       {"h11", r.h11},
                       {"h21", r.h21},
                       {"euler", r.euler},
                       {"fixed_set_euler", r.fixed_euler},
                       {"sectors", sectors}};
    } else {
        j["engine"] = nullptr;
    }
    j["closed_form"] = {{"status", r.closed_form_status}};
    if (r.closed_form) {
        j["closed_form"]["h11"] = r.closed_form->h11;
        j["closed_form"]["h21"] = r.closed_form->h21;
    }
    if (r.closed_form_euler) j["closed_form"]["euler"] = *r.closed_form_euler;
    j["checks_enabled"] = r.checks_enabled;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back(
            {{"name", c.name}, {"status", check_status(c)}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"note", c.note}});
    }
    if (r.corollary) j["corollary_order6"] = *r.corollary;
    if (!r.error.empty()) j["error"] = r.error;
    j["exit_code"] = r.exit_code;
    return j;
}

RunReport report_from_json(const json& j) {
    RunReport r;
    r.order = j.at("order").get<int>();
    r.source = j.at("source").get<std::string>();
    r.config = j.at("config");
    for (const auto& v : j.at("violations")) {
        r.violations.push_back({v.at("severity") == "error" ? Severity::error : Severity::warning,
                                v.at("path").get<std::string>(), v.at("message").get<std::string>()});
    }
    if (!j.at("engine").is_null()) {
        const auto& e = j.at("engine");
        r.diamond = diamond_from_json(e.at("diamond"));
        r.h11 = e.at("h11").get<Count>();
        r.h21 = e.at("h21").get<Count>();
        r.euler = e.at("euler").get<Count>();
        r.fixed_euler = e.at("fixed_set_euler").get<std::vector<Count>>();
        for (const auto& s : e.at("sectors")) {
            r.sectors.push_back(
                {s.at("element").get<int>(), s.at("subgroup_order").get<int>(), diamond_from_json(s.at("increment"))});
        }
    }
    const auto& cf = j.at("closed_form");
    r.closed_form_status = cf.at("status").get<std::string>();
    if (cf.contains("h11")) r.closed_form = HodgePair{cf.at("h11").get<Count>(), cf.at("h21").get<Count>()};
    if (cf.contains("euler")) r.closed_form_euler = cf.at("euler").get<Count>();
    r.checks_enabled = j.at("checks_enabled").get<bool>();
    for (const auto& c : j.at("checks")) {
        Check check;
        check.name = c.at("name").get<std::string>();
        const auto status = c.at("status").get<std::string>();
        check.skipped = status == "skipped";
        check.passed = status != "fail";
        check.lhs = c.at("lhs").get<Count>();
        check.rhs = c.at("rhs").get<Count>();
        check.note = c.at("note").get<std::string>();
        r.checks.push_back(check);
    }
    if (j.contains("corollary_order6")) r.corollary = j.at("corollary_order6").get<Count>();
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    r.exit_code = j.at("exit_code").get<int>();
    return r;
}

std::string diamond_pictogram(const HodgeDiamond& h) {
    const int d = h.dim();
    std::size_t width = 1;
    for (int p = 0; p <= d; ++p)
        for (int q = 0; q <= d; ++q) width = std::max(width, std::to_string(h.at(p, q)).size());
    const std::size_t unit = width + 1;

    std::ostringstream os;
    for (int s = 2 * d; s >= 0; --s) {
        const int hi = std::min(s, d);
        const int lo = std::max(0, s - d);
        const int entries = hi - lo + 1;
        std::string line(unit * static_cast<std::size_t>(d + 1 - entries), ' ');
        for (int p = hi, i = 0; p >= lo; --p, ++i) {
            const auto v = std::to_string(h.at(p, s - p));
            if (i > 0) line += std::string(unit, ' ');
            line += std::string(width - v.size(), ' ') + v;
        }
        os << line << '\n';
    }
    return os.str();
}

std::string emit(const RunReport& r, Format format) {
    if (format == Format::json) return to_json(r).dump(2) + "\n";

    std::ostringstream os;
    os << "Borcea-Voisin quotient of order " << r.order << " (" << r.source << ")\n";
    if (!r.violations.empty()) {
        os << "\nviolations:\n";
        for (const auto& v : r.violations) os << "  " << to_string(v) << '\n';
    }
    if (r.diamond) {
        os << "\nHodge diamond:\n\n" << diamond_pictogram(*r.diamond) << '\n';
        os << "engine:       h11 = " << r.h11 << "  h21 = " << r.h21 << "  e = " << r.euler << '\n';
        if (r.closed_form) {
            os << "closed form:  h11 = " << r.closed_form->h11 << "  h21 = " << r.closed_form->h21;
            if (r.closed_form_euler) os << "  e = " << *r.closed_form_euler;
            os << '\n';
        } else {
            os << "closed form:  " << r.closed_form_status << '\n';
        }
        os << "fixed-set Euler numbers:";
        int i = 0;
        for (int k = 1; k < r.order; ++k) {
            if (r.order % k != 0) continue;
            os << (i ? "," : "") << " e(Fix a^" << k << ") = " << r.fixed_euler.at(static_cast<std::size_t>(i));
            ++i;
        }
        os << '\n';
        os << "\nsectors:\n";
        for (const auto& s : r.sectors) {
            const auto& inc = s.increment;
            os << "  a^" << s.element << " (order " << s.subgroup_order << "):  h11 " << signed_count(inc.at(1, 1))
               << "  h21 " << signed_count(inc.at(2, 1)) << "  h12 " << signed_count(inc.at(1, 2)) << "  h22 "
               << signed_count(inc.at(2, 2)) << '\n';
        }
        if (r.corollary) os << "\ncorollary expression (order 6): " << *r.corollary << '\n';
    }
    if (!r.checks.empty()) {
        os << "\nchecks:\n";
        for (const auto& c : r.checks) {
            os << "  " << (c.skipped ? "skip" : c.passed ? "pass" : "FAIL") << "  " << c.name;
            if (c.skipped) {
                os << "  (" << c.note << ")";
            } else {
                os << "  " << c.lhs << (c.passed ? " == " : " != ") << c.rhs;
                if (!c.note.empty()) os << "  (" << c.note << ")";
            }
            os << '\n';
        }
    } else if (!r.checks_enabled && r.diamond) {
        os << "\nchecks: disabled\n";
    }
    if (!r.error.empty()) os << "\nerror: " << r.error << '\n';
    os << "\nstatus: "
       << (r.exit_code == 0   ? "ok"
           : r.exit_code == 2 ? "validation failed"
                              : "check mismatch")
       << '\n';
    return os.str();
}

}  // namespace bvhodge
