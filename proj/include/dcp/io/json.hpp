#pragma once

/**
 * @file json.hpp
 * @brief JSON artifacts: polynomials, series, operators, recurrences, modular images and analysis reports.
 *
 * Exact numbers are written as decimal strings and objects use sorted keys, so identical inputs give
 * byte-identical documents.
 */

#include "dcp/algebra/number.hpp"
#include "dcp/algebra/poly.hpp"
#include "dcp/algebra/series.hpp"
#include "dcp/factory/verify.hpp"
#include "dcp/ode/guess.hpp"
#include "dcp/ode/operator.hpp"
#include "dcp/ode/recurrence.hpp"
#include "dcp/series/generator.hpp"
#include "dcp/singularity/gamma.hpp"
#include "dcp/singularity/indicial.hpp"
#include "dcp/singularity/pade_scan.hpp"
#include "dcp/singularity/points.hpp"
#include "dcp/singularity/structural.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcp::io {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline Int parse_int(const json& j) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (!j.is_string()) throw FormatError("expected a decimal integer string");
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw FormatError("malformed integer '" + j.get<std::string>() + "'");
    return v;
}

inline std::uint64_t parse_u64(const json& j) {
    if (!j.is_number_unsigned() && !j.is_number_integer()) throw FormatError("expected an unsigned integer");
    return j.get<std::uint64_t>();
}

inline json complex_json(const Complex& z) {
    return json{{"re", z.re.convert_to<double>()}, {"im", z.im.convert_to<double>()}};
}

}  // namespace detail

// Polynomials: array of decimal strings, index = degree.
inline json to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

inline json to_json(const RatPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

inline IntPoly int_poly_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("polynomial must be an array");
    std::vector<Int> c;
    for (const auto& x : j) c.push_back(detail::parse_int(x));
    return IntPoly(std::move(c));
}

// Series documents.
inline json to_json(const BivariateSeries& s) {
    json terms = json::array();
    for (int n = 0; n <= s.order; ++n) {
        const IntPoly& row = s.rows[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < row.size(); ++k)
            if (sgn(row[k]) != 0) terms.push_back({{"n", n}, {"k", k}, {"c", row[k].get_str()}});
    }
    return json{{"kind", "bivariate"}, {"order", s.order}, {"terms", terms}};
}

inline json to_json(const RatSeries& s) {
    json c = json::array();
    for (const auto& x : s.coeffs) c.push_back({x.get_num().get_str(), x.get_den().get_str()});
    return json{{"kind", "rational"}, {"order", s.order()}, {"coeffs", c}};
}

inline json to_json(const ModSeries& s) {
    return json{{"kind", "mod"}, {"prime", s.prime}, {"order", s.order()}, {"coeffs", s.coeffs}};
}

inline BivariateSeries bivariate_from_json(const json& j) {
    if (detail::field(j, "kind") != "bivariate") throw FormatError("expected a bivariate series");
    BivariateSeries s;
    s.order = detail::field(j, "order").get<int>();
    if (s.order < 0) throw FormatError("negative series order");
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(s.order + 1));
    for (const auto& t : detail::field(j, "terms")) {
        int n = detail::field(t, "n").get<int>(), k = detail::field(t, "k").get<int>();
        if (n < 0 || n > s.order || k < 0) throw FormatError("term index out of range");
        auto& row = rows[static_cast<std::size_t>(n)];
        if (row.size() <= static_cast<std::size_t>(k)) row.resize(static_cast<std::size_t>(k) + 1, Int(0));
        row[static_cast<std::size_t>(k)] = detail::parse_int(detail::field(t, "c"));
    }
    for (auto& r : rows) s.rows.emplace_back(std::move(r));
    return s;
}

inline RatSeries rat_series_from_json(const json& j) {
    if (detail::field(j, "kind") != "rational") throw FormatError("expected a rational series");
    std::vector<Rat> c;
    for (const auto& x : detail::field(j, "coeffs")) {
        if (!x.is_array() || x.size() != 2) throw FormatError("rational coefficient must be [num, den]");
        Int d = detail::parse_int(x[1]);
        if (sgn(d) == 0) throw FormatError("zero denominator");
        c.push_back(make_rat(detail::parse_int(x[0]), d));
    }
    RatSeries s(std::move(c));
    if (s.order() != detail::field(j, "order").get<int>()) throw FormatError("order does not match coefficient count");
    return s;
}

inline ModSeries mod_series_from_json(const json& j) {
    if (detail::field(j, "kind") != "mod") throw FormatError("expected a modular series");
    ModSeries s;
    s.prime = detail::parse_u64(detail::field(j, "prime"));
    if (!is_prime_u64(s.prime) || s.prime < 3 || s.prime >= (1ull << 31)) throw FormatError("modulus must be an odd prime below 2^31");
    for (const auto& x : detail::field(j, "coeffs")) {
        std::uint64_t v = detail::parse_u64(x);
        if (v >= s.prime) throw FormatError("residue out of range");
        s.coeffs.push_back(v);
    }
    if (s.order() != detail::field(j, "order").get<int>()) throw FormatError("order does not match coefficient count");
    return s;
}

// ODE document.
inline json to_json(const DiffOperator& op, int verified_order = -1, const std::vector<std::uint64_t>& primes = {}) {
    json c = json::array();
    for (const auto& q : op.coeffs) c.push_back(to_json(q));
    json rhs = op.rhs ? to_json(*op.rhs) : json(nullptr);
    return json{{"order", op.order()}, {"coeffs", c}, {"rhs", rhs}, {"verified_order", verified_order}, {"primes", primes}};
}

inline DiffOperator ode_from_json(const json& j) {
    DiffOperator op;
    for (const auto& q : detail::field(j, "coeffs")) op.coeffs.push_back(int_poly_from_json(q));
    const json& rhs = detail::field(j, "rhs");
    if (!rhs.is_null()) op.rhs = int_poly_from_json(rhs);
    if (op.order() != detail::field(j, "order").get<int>()) throw FormatError("order does not match coefficient count");
    op.validate();
    return op;
}

// Recurrence document: sum_j c_j(n) a_{n-j} = 0 for n >= valid_from.
inline json to_json(const PRecurrence& r, const std::vector<std::uint64_t>& primes = {}) {
    json c = json::array();
    for (const auto& q : r.coeffs) c.push_back(to_json(q));
    return json{{"kind", "recurrence"}, {"order", r.order()}, {"coeffs", c}, {"valid_from", r.start()}, {"primes", primes}};
}

inline PRecurrence recurrence_from_json(const json& j) {
    PRecurrence r;
    for (const auto& q : detail::field(j, "coeffs")) r.coeffs.push_back(int_poly_from_json(q));
    if (j.contains("valid_from")) r.valid_from = j.at("valid_from").get<int>();
    r.validate();
    return r;
}

// Images of a theta-form operator modulo several primes, as consumed by exact reconstruction.
inline json to_json(const std::vector<ModThetaOperator>& images) {
    if (images.empty()) throw std::invalid_argument("no images");
    json list = json::array();
    for (const auto& im : images) list.push_back({{"prime", im.prime}, {"v", im.v}});
    const auto& f = images[0];
    return json{{"kind", "theta_images"}, {"order", f.order}, {"degree", f.degree}, {"rhs_degree", f.rhs_degree}, {"images", list}};
}

inline json to_json(const std::vector<ModRecurrence>& images) {
    if (images.empty()) throw std::invalid_argument("no images");
    json list = json::array();
    for (const auto& im : images) list.push_back({{"prime", im.prime}, {"v", im.v}});
    return json{{"kind", "recurrence_images"}, {"order", images[0].order}, {"degree", images[0].degree}, {"images", list}};
}

inline std::vector<ModThetaOperator> theta_images_from_json(const json& j) {
    if (detail::field(j, "kind") != "theta_images") throw FormatError("expected theta_images");
    std::vector<ModThetaOperator> out;
    const int k = detail::field(j, "order").get<int>(), d = detail::field(j, "degree").get<int>();
    const int e = detail::field(j, "rhs_degree").get<int>();
    const auto width = static_cast<std::size_t>(theta_unknowns(k, d, e));
    for (const auto& im : detail::field(j, "images")) {
        ModThetaOperator op{detail::parse_u64(detail::field(im, "prime")), k, d, e, {}};
        for (const auto& x : detail::field(im, "v")) op.v.push_back(detail::parse_u64(x));
        if (op.v.size() != width) throw FormatError("image has the wrong number of entries");
        out.push_back(std::move(op));
    }
    if (out.empty()) throw FormatError("no images");
    return out;
}

inline std::vector<ModRecurrence> recurrence_images_from_json(const json& j) {
    if (detail::field(j, "kind") != "recurrence_images") throw FormatError("expected recurrence_images");
    std::vector<ModRecurrence> out;
    const int s = detail::field(j, "order").get<int>(), d = detail::field(j, "degree").get<int>();
    for (const auto& im : detail::field(j, "images")) {
        ModRecurrence r{detail::parse_u64(detail::field(im, "prime")), s, d, {}};
        for (const auto& x : detail::field(im, "v")) r.v.push_back(detail::parse_u64(x));
        if (r.v.size() != static_cast<std::size_t>((s + 1) * (d + 1))) throw FormatError("image has the wrong number of entries");
        out.push_back(std::move(r));
    }
    if (out.empty()) throw FormatError("no images");
    return out;
}

// Singularity reports: exact strings plus float fields.
inline json to_json(const SingularPoint& p) {
    json j{{"label", p.label}, {"kind", p.kind == SingularPoint::kRational    ? "rational"
                                        : p.kind == SingularPoint::kAlgebraic ? "algebraic"
                                                                              : "infinity"}};
    if (p.kind == SingularPoint::kRational) j["value"] = p.value.get_str();
    if (p.kind != SingularPoint::kInfinity) {
        j["minimal_polynomial"] = to_json(p.minimal_polynomial);
        j["approx"] = detail::complex_json(p.approx);
    }
    return j;
}

inline json to_json(const ExponentSet& e) {
    json list = json::array();
    for (const auto& x : e.exponents) {
        json item{{"approx", detail::complex_json(x.approx)}, {"exact", x.exact}};
        if (x.exact) item["value"] = x.value.get_str();
        list.push_back(item);
    }
    json j{{"point", to_json(e.point)}, {"regular", e.regular}, {"ordinary", e.ordinary}, {"exponents", list}};
    if (!e.indicial.is_zero()) j["indicial"] = to_json(e.indicial);
    return j;
}

inline json to_json(const SingularitySet& s) {
    json pts = json::array();
    for (const auto& p : s.points) pts.push_back(to_json(p));
    json j{{"points", pts}, {"coalesced", s.coalesced}};
    j["nearest_origin"] = s.nearest_origin ? json(s.points[*s.nearest_origin].label) : json(nullptr);
    j["nearest_positive_real"] = s.nearest_positive_real ? json(s.points[*s.nearest_positive_real].label) : json(nullptr);
    return j;
}

inline json to_json(const StructuralReport& rep) {
    json factors = json::array();
    for (const auto& f : rep.factors)
        factors.push_back({{"name", f.name}, {"factor", to_json(f.factor)}, {"expected", f.expected}, {"found", f.found},
                           {"coalesced", f.coalesced}});
    return json{{"origin_power", rep.origin_power}, {"factors", factors}, {"cofactor", to_json(rep.cofactor)},
                {"cofactor_degree", rep.cofactor.degree()}, {"missing", rep.missing}, {"all_divide", rep.all_divide()}};
}

inline json to_json(const GammaEstimate& g) {
    json probes = json::array();
    for (const auto& p : g.probes) probes.push_back({{"L", p.L}, {"M", p.M}, {"pc", p.pc}, {"gamma", p.gamma}, {"imag", p.imag}});
    return json{{"ok", g.ok}, {"pc", g.pc}, {"gamma", g.gamma}, {"pc_spread", g.pc_spread}, {"gamma_spread", g.gamma_spread},
                {"probes", probes}, {"degenerate", g.degenerate}};
}

inline json to_json(const PadeScanReport& rep) {
    json roots = json::array();
    for (const auto& z : rep.denominator_roots) roots.push_back(detail::complex_json(z));
    return json{{"requested_degree", rep.requested_degree}, {"L", rep.L}, {"M", rep.M},
                {"degenerate_degrees", rep.degenerate_degrees}, {"lo", rep.lo}, {"hi", rep.hi},
                {"real_poles", rep.real_poles}, {"denominator_roots", roots}};
}

// Verification report: list of {check, verified_order, pass}.
inline json to_json(const FactorizationReport& rep) {
    json list = json::array();
    for (const auto& c : rep.checks) {
        json item{{"check", c.name}, {"verified_order", c.verified_order}, {"pass", c.passed}};
        if (!c.note.empty()) item["note"] = c.note;
        list.push_back(item);
    }
    return list;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dcp::io
