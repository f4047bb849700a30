/**
 * @file dcp_cli.cpp
 * @brief Batch front end: series generation, guessing, reconstruction, singularity analysis and the
 *        reproduction bundles.
 *
 * Exit status: 0 success, 1 a check was falsified (or a computation found nothing), 2 usage error.
 * Artifacts go to --out (default stdout); progress goes to stderr.
 */

#include "dcp/algebra/pade.hpp"
#include "dcp/factory/closed_form.hpp"
#include "dcp/factory/cr_search.hpp"
#include "dcp/factory/verify.hpp"
#include "dcp/io/json.hpp"
#include "dcp/known_results.hpp"
#include "dcp/pipeline.hpp"
#include "dcp/series/reference.hpp"
#include "dcp/singularity/gamma.hpp"
#include "dcp/singularity/pade_scan.hpp"
#include "dcp/singularity/report.hpp"
#include "dcp/singularity/structural.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dcp;
using io::json;

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string out;
    std::string format;
    bool quiet = false;
};

std::ostream* progress(const Common& c) { return c.quiet ? nullptr : &std::cerr; }

void emit(const std::string& content, const Common& c) {
    if (c.out.empty() || c.out == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << content;
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (c.format == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("--format " + c.format + " is not supported here (expected " + list + ")");
}

Rat rational_arg(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + " must be an exact rational num/den, got '" + text + "'");
    }
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string fixed(double x, int digits = 6) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << x;
    return os.str();
}

std::map<const CLI::App*, std::string> default_formats;

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
    default_formats[sub] = default_format;
    sub->add_option("--out,-o", c.out, "Output path (default: stdout)");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--quiet,-q", c.quiet, "Suppress progress on stderr");
}

struct SeedArgs {
    int m = 1;
    int y = 1;
    Seed seed() const {
        try {
            return Seed(m, y);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
};

void add_seed(CLI::App* sub, SeedArgs& s) {
    sub->add_option("--m", s.m, "Seed width")->capture_default_str();
    sub->add_option("--y", s.y, "Seed midpoint distance from the wall")->capture_default_str();
}

// Operator from --ode, or the minimal exact ODE of the physical series for r.
DiffOperator operator_for(const std::string& ode_path, const Seed& seed, const Rat& r, const Common& c,
                          int* verified = nullptr) {
    if (!ode_path.empty()) {
        DiffOperator op = io::ode_from_json(read_json(ode_path));
        if (verified) *verified = -1;
        return op;
    }
    OdeJob job;
    job.seed = seed;
    job.r = r;
    auto res = minimal_exact_ode(job, progress(c));
    if (!res) throw std::runtime_error("no ODE found for r = " + r.get_str());
    if (verified) *verified = res->verified_order;
    return res->op;
}

// series

int cmd_series(const SeedArgs& sa, int order, const Common& c) {
    require_format(c, {"json", "text"});
    if (order < 0) throw UsageError("--order must be >= 0");
    BivariateSeries s = mean_size_series(sa.seed(), order);
    if (c.format == "text") {
        std::ostringstream os;
        for (int n = 0; n <= order; ++n) os << "p^" << n << ": " << s.rows[static_cast<std::size_t>(n)].str("pw") << "\n";
        emit(os.str(), c);
    } else {
        emit(io::dump(io::to_json(s)), c);
    }
    return kOk;
}

// specialize

int cmd_specialize(const SeedArgs& sa, const std::string& r_text, int order, std::uint64_t prime,
                   const std::string& in, const Common& c) {
    require_format(c, {"json", "text"});
    Rat r = rational_arg(r_text, "--r");
    if (order < 0) throw UsageError("--order must be >= 0");
    std::string text;
    if (prime != 0) {
        if (!in.empty()) throw UsageError("--prime works from the seed, not from --in");
        ModSeries s;
        try {
            s = specialize_mod(sa.seed(), r, order, prime);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (c.format == "json") return emit(io::dump(io::to_json(s)), c), kOk;
        for (auto v : s.coeffs) text += std::to_string(v) + "\n";
        return emit(text, c), kOk;
    }
    RatSeries s = in.empty() ? mean_size_specialized(sa.seed(), r, order)
                             : specialize(io::bivariate_from_json(read_json(in)), r).truncate(order);
    if (c.format == "json") return emit(io::dump(io::to_json(s)), c), kOk;
    for (const auto& v : s.coeffs) text += v.get_str() + "\n";
    emit(text, c);
    return kOk;
}

// guess-rec

struct RecArgs {
    std::string r = "2";
    int terms = 50;
    int max_order = 6;
    int max_degree = 3;
    int primes = 2;
};

int cmd_guess_rec(const SeedArgs& sa, const RecArgs& a, const Common& c) {
    require_format(c, {"json", "text"});
    Rat r = rational_arg(a.r, "--r");
    if (a.terms < 2 || a.primes < 1) throw UsageError("--terms >= 2 and --primes >= 1 required");
    RatSeries s = mean_size_specialized(sa.seed(), r, a.terms - 1);
    if (auto* p = progress(c)) *p << "generated " << a.terms << " terms\n";
    std::optional<RecurrenceResult> res;
    try {
        res = recurrence_from_series(s, a.max_order, a.max_degree, a.primes);
    } catch (const InsufficientTerms& e) {
        throw UsageError(e.what());
    }
    if (!res) {
        std::cerr << "no recurrence with order <= " << a.max_order << " and degree <= " << a.max_degree << "\n";
        return kFalsified;
    }
    auto residual = recurrence_residual(res->rec, s.coeffs);
    bool zero = std::all_of(residual.begin(), residual.end(), [](const Rat& v) { return sgn(v) == 0; });
    if (auto* p = progress(c))
        *p << "order " << res->rec.order() << ", degree " << res->rec.degree() << ", holdout " << res->holdout
           << ", annihilates terms " << res->rec.start() << ".." << a.terms - 1 << ": " << (zero ? "yes" : "no") << "\n";
    std::vector<std::uint64_t> primes;
    for (const auto& im : res->images) primes.push_back(im.prime);
    if (c.format == "json") {
        emit(io::dump(io::to_json(res->rec, primes)), c);
    } else {
        std::ostringstream os;
        for (int j = 0; j <= res->rec.order(); ++j)
            os << "c_" << j << "(n) = " << res->rec.coeffs[static_cast<std::size_t>(j)].str("n") << "\n";
        emit(os.str(), c);
    }
    return zero ? kOk : kFalsified;
}

// guess-ode

struct OdeArgs {
    std::string r = "3";
    int k = -1;
    int degree = -1;
    int rhs_degree = -1;
    int primes = 1;
    int holdout = kDefaultHoldout;
    int max_primes = 30;
    int verify_order = kCertificationOrder;
    bool exact = false;
};

int cmd_guess_ode(const SeedArgs& sa, const OdeArgs& a, const Common& c) {
    require_format(c, {"json", "text"});
    Rat r = rational_arg(a.r, "--r");
    const Seed seed = sa.seed();
    if ((a.k < 0) != (a.degree < 0)) throw UsageError("--k and --degree go together");
    if (a.k < 0) {
        // minimal search over the default schedule
        OdeJob job;
        job.seed = seed;
        job.r = r;
        job.certification_order = a.verify_order;
        job.max_primes = a.max_primes;
        job.schedule.holdout = a.holdout;
        job.schedule.rhs_degree = a.rhs_degree;
        if (!a.exact) {
            PrimeSequence primes;
            SearchResult sr = minimal_ode_search(specialized_source(seed, r), a.primes, job.schedule, primes, progress(c));
            if (!sr.found) return std::cerr << "no ODE within the search schedule\n", kFalsified;
            emit(io::dump(io::to_json(sr.images)), c);
            return kOk;
        }
        auto res = minimal_exact_ode(job, progress(c));
        if (!res) return std::cerr << "no certified ODE within the search schedule\n", kFalsified;
        if (c.format == "text") {
            std::ostringstream os;
            os << "order " << res->op.order() << ", degree " << res->report.degree << ", terms " << res->report.terms
               << ", primes " << res->report.primes.size() << ", verified to p^" << res->verified_order << "\n";
            emit(os.str(), c);
        } else {
            emit(io::dump(io::to_json(res->op, res->verified_order, res->report.primes)), c);
        }
        return kOk;
    }
    const int terms = theta_unknowns(a.k, a.degree, a.rhs_degree) + a.holdout;
    PrimeSequence primes;
    std::vector<ModThetaOperator> images;
    std::vector<std::uint64_t> used;
    for (int guard = 0; static_cast<int>(images.size()) < (a.exact ? a.max_primes : a.primes) && guard < 4 * a.max_primes;
         ++guard) {
        std::uint64_t q = primes.next();
        ModGuess g = guess_ode_mod(specialize_mod(seed, r, terms - 1, q), a.k, a.degree, a.rhs_degree, a.holdout);
        if (g.status != ModGuess::kFound) {
            if (images.empty()) {
                std::cerr << "no operator at (k, d) = (" << a.k << ", " << a.degree << "): kernel dimension "
                          << g.kernel_dim << "\n";
                return kFalsified;
            }
            continue;
        }
        if (!images.empty() && g.op.support() != images[0].support()) continue;
        images.push_back(g.op);
        used.push_back(q);
        if (auto* p = progress(c)) *p << "image mod " << q << "\n";
        if (!a.exact) continue;
        try {
            DiffOperator op = reconstruct_ode(images);
            RatSeries ex = mean_size_specialized(seed, r, a.verify_order);
            Residual res = apply_operator(op, ex);
            if (res.zero()) {
                if (c.format == "text")
                    emit("order " + std::to_string(op.order()) + ", verified to p^" + std::to_string(res.verified_order) + "\n", c);
                else
                    emit(io::dump(io::to_json(op, res.verified_order, used)), c);
                return kOk;
            }
        } catch (const ReconstructionFailure& e) {
            if (auto* p = progress(c)) *p << e.what() << "\n";
        }
    }
    if (a.exact) return std::cerr << "reconstruction did not certify within " << a.max_primes << " primes\n", kFalsified;
    emit(io::dump(io::to_json(images)), c);
    return kOk;
}

// reconstruct

int cmd_reconstruct(const std::string& in, const std::string& series_path, const Common& c) {
    require_format(c, {"json", "text"});
    json j = read_json(in);
    std::optional<RatSeries> exact;
    if (!series_path.empty()) exact = io::rat_series_from_json(read_json(series_path));
    const std::string kind = j.value("kind", "");
    try {
        if (kind == "recurrence_images") {
            auto images = io::recurrence_images_from_json(j);
            PRecurrence rec = reconstruct_precurrence(images);
            std::vector<std::uint64_t> primes;
            for (const auto& im : images) primes.push_back(im.prime);
            emit(io::dump(io::to_json(rec, primes)), c);
            if (!exact) return kOk;
            auto res = recurrence_residual(rec, exact->coeffs);
            return std::all_of(res.begin(), res.end(), [](const Rat& v) { return sgn(v) == 0; }) ? kOk : kFalsified;
        }
        auto images = io::theta_images_from_json(j);
        DiffOperator op = reconstruct_ode(images);
        std::vector<std::uint64_t> primes;
        for (const auto& im : images) primes.push_back(im.prime);
        int verified = -1;
        bool ok = true;
        if (exact) {
            Residual res = apply_operator(op, *exact);
            ok = res.zero();
            verified = ok ? res.verified_order : -1;
        }
        emit(io::dump(io::to_json(op, verified, primes)), c);
        return ok ? kOk : kFalsified;
    } catch (const ReconstructionFailure& e) {
        std::cerr << e.what() << "\n";
        return kFalsified;
    }
}

// singularities

int cmd_singularities(const SeedArgs& sa, const std::string& r_text, bool structural, const std::string& ode,
                      const Common& c) {
    require_format(c, {"json", "text"});
    Rat r = rational_arg(r_text, "--r");
    SingularitySet set;
    try {
        set = singular_points(r);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    json j = io::to_json(set);
    std::ostringstream os;
    for (std::size_t i = 0; i < set.points.size(); ++i) {
        os << set.points[i].label << "\t" << set.points[i].numeric_str(12);
        if (set.nearest_origin == i) os << "\tnearest to origin";
        if (set.nearest_positive_real == i) os << "\tnearest positive real";
        os << "\n";
    }
    for (const auto& s : set.coalesced) os << "coalesced: " << s << "\n";
    bool ok = true;
    if (structural || !ode.empty()) {
        DiffOperator op = operator_for(ode, sa.seed(), r, c);
        StructuralReport rep = structural_factors(head_polynomial(op), r);
        j["structural"] = io::to_json(rep);
        os << "head = p^" << rep.origin_power;
        for (const auto& f : rep.factors) os << " * " << f.name << "^" << f.found << "/" << f.expected;
        os << " * cofactor(deg " << rep.cofactor.degree() << ")\n";
        if (!rep.all_divide()) os << "missing: " << join(rep.missing, ", ") << "\n";
        ok = rep.all_divide();
    }
    emit(c.format == "json" ? io::dump(j) : os.str(), c);
    return ok ? kOk : kFalsified;
}

// exponents

int cmd_exponents(const SeedArgs& sa, const std::string& r_text, const std::string& point, const std::string& ode,
                  const Common& c) {
    require_format(c, {"json", "text"});
    Rat r = rational_arg(r_text, "--r");
    std::vector<SingularPoint> pts;
    try {
        pts = resolve_points(point, r);
    } catch (const std::invalid_argument& e) {
        throw UsageError("--point: " + std::string(e.what()));
    }
    DiffOperator op = operator_for(ode, sa.seed(), r, c);
    json list = json::array();
    std::ostringstream os;
    for (const auto& pt : pts) {
        ExponentSet e = indicial_exponents(op, pt);
        list.push_back(io::to_json(e));
        if (pts.size() > 1) os << pt.label << " (" << pt.numeric_str(10) << "): ";
        os << exponent_list(e) << "\n";
    }
    emit(c.format == "json" ? io::dump(list) : os.str(), c);
    return kOk;
}

// pade

struct PadeArgs {
    std::string r = "3/2";
    std::string in;
    int degree = 50;
    int order = -1;
    double lo = 0.0;
    double hi = 0.49;
    double step = 0.005;
};

int cmd_pade(const SeedArgs& sa, const PadeArgs& a, const Common& c) {
    require_format(c, {"csv", "json"});
    RatSeries s;
    if (!a.in.empty()) {
        s = io::rat_series_from_json(read_json(a.in));
    } else {
        Rat r = rational_arg(a.r, "--r");
        s = mean_size_specialized(sa.seed(), r, a.order < 0 ? 2 * a.degree : a.order);
    }
    if (s.order() < 2 * a.degree) throw UsageError("series order must be at least 2 * --degree");
    if (!(a.step > 0) || a.hi < a.lo) throw UsageError("need --step > 0 and --lo <= --hi");
    PadeScanReport rep = pade_scan(s, a.lo, a.hi, a.step, a.degree);
    if (auto* p = progress(c)) {
        *p << "[" << rep.L << "/" << rep.M << "] Pade";
        if (!rep.degenerate_degrees.empty()) *p << " (degenerate degrees skipped: " << rep.degenerate_degrees.size() << ")";
        *p << "; real poles in window: " << rep.real_poles.size() << "\n";
    }
    emit(c.format == "csv" ? to_csv(rep) : io::dump(io::to_json(rep)), c);
    return kOk;
}

// estimate-gamma

struct GammaArgs {
    std::string series = "physical";
    std::string r = "1/2";
    std::string pc = "1/2";
    int order = 120;
    int m = 1;
    int y = 1;
};

RatSeries gamma_series(const GammaArgs& a) {
    if (a.series == "physical") return mean_size_specialized(Seed(a.m, a.y), rational_arg(a.r, "--r"), a.order);
    ReferenceCase which;
    try {
        which = parse_reference_case(a.series);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return reference_mean_size(which, a.m, which == ReferenceCase::kWet ? a.m - 1 : a.y).series(a.order);
}

int cmd_estimate_gamma(const GammaArgs& a, const Common& c) {
    require_format(c, {"json", "text"});
    Rat pc = rational_arg(a.pc, "--pc");
    if (a.order < 40) throw UsageError("--order must be >= 40");
    RatSeries s = gamma_series(a);
    GammaEstimate g = critical_exponent_estimate(s, pc);
    if (c.format == "json") {
        emit(io::dump(io::to_json(g)), c);
    } else if (g.ok) {
        emit("gamma = " + fixed(g.gamma) + " +- " + fixed(g.gamma_spread) + " at pc = " + fixed(g.pc) + "\n", c);
    } else {
        emit("no stable pole near " + pc.get_str() + "\n", c);
    }
    return g.ok ? kOk : kFalsified;
}

// verify-factorization

int cmd_verify(const SeedArgs& sa, const std::string& r_text, const std::string& c_text, const std::string& ode,
               int order, const Common& c) {
    require_format(c, {"json", "text"});
    Rat r = rational_arg(r_text, "--r");
    if (sgn(r) == 0 || r == 1 || r == 2) throw UsageError("the decomposition needs r not in {0, 1, 2}");
    DiffOperator L4 = operator_for(ode, sa.seed(), r, c);
    RatSeries physical = mean_size_specialized(sa.seed(), r, order);
    std::optional<Rat> cr;
    if (!c_text.empty()) {
        cr = rational_arg(c_text, "--c");
    } else {
        if (auto* p = progress(c)) *p << "searching c_r modulo small primes\n";
        CrResult res = cr_search(physical, closed_form_R(r));
        if (auto* p = progress(c)) *p << "c_r search: " << res.status_str() << (res.c ? " " + res.c->get_str() : "") << "\n";
        cr = res.c;
    }
    FactorizationReport rep = verify_factorization(r, L4, physical, cr);
    if (c.format == "json") {
        emit(io::dump(io::to_json(rep)), c);
    } else {
        std::ostringstream os;
        os << "c_r = " << (rep.c ? rep.c->get_str() : "none") << "\n";
        for (const auto& ch : rep.checks)
            os << (ch.passed ? "PASS " : "FAIL ") << ch.name << " (verified to p^" << ch.verified_order << ")"
               << (ch.note.empty() ? "" : " " + ch.note) << "\n";
        emit(os.str(), c);
    }
    return rep.all_passed() ? kOk : kFalsified;
}

// repro bundles

int repro_table2(const Common& c) {
    require_format(c, {"text", "json"});
    bool all = true;
    json doc = json::object();
    std::ostringstream os;
    for (const Rat& r : {Rat(3), Rat(3, 2)}) {
        OdeJob job;
        job.r = r;
        auto res = minimal_exact_ode(job, progress(c));
        if (!res) throw std::runtime_error("no ODE for r = " + r.get_str());
        os << "r = " << r.get_str() << " (order " << res->op.order() << ", degree " << res->report.degree << ")\n";
        json rows = json::array();
        for (const auto& row : compare_exponent_table(res->op, r)) {
            all = all && row.match;
            std::vector<std::string> exp, got;
            for (const auto& e : row.expected) exp.push_back(e.get_str());
            for (const auto& e : row.computed) got.push_back(exponent_list(e));
            os << "  " << (row.match ? "ok  " : "DIFF") << " " << row.point << ": expected " << join(exp, ", ")
               << " | computed " << join(got, " ; ") << "\n";
            rows.push_back({{"point", row.point}, {"expected", exp}, {"computed", got}, {"match", row.match}});
        }
        doc[r.get_str()] = rows;
    }
    emit(c.format == "json" ? io::dump(doc) : os.str(), c);
    return all ? kOk : kFalsified;
}

int repro_table3(const Common& c) {
    require_format(c, {"text", "json"});
    bool all = true;
    json rows = json::array();
    std::ostringstream os;
    for (const auto& row : known::gamma_table()) {
        RatSeries s = row.wall == "wet" ? wet_mean_size(1).series(120) : mean_size_specialized(Seed(1, 1), row.r, 120);
        GammaEstimate g = critical_exponent_estimate(s, Rat(1, 2));
        bool ok = g.ok && std::abs(g.gamma - row.gamma) <= 0.05 && std::abs(g.pc - 0.5) <= 0.005;
        all = all && ok;
        os << (ok ? "ok   " : "DIFF ") << row.wall << ": gamma " << fixed(g.gamma, 4) << " (expected " << row.gamma
           << "), pc " << fixed(g.pc, 5) << "\n";
        rows.push_back({{"wall", row.wall}, {"expected", row.gamma}, {"estimate", io::to_json(g)}, {"match", ok}});
    }
    emit(c.format == "json" ? io::dump(rows) : os.str(), c);
    return all ? kOk : kFalsified;
}

int repro_fig2(const Common& c) {
    require_format(c, {"csv", "json"});
    RatSeries s = mean_size_specialized(Seed(1, 1), Rat(3, 2), 100);
    PadeScanReport rep = pade_scan(s, 0.0, 0.49, 0.005, 50);
    auto near_third = rep.nearest_pole_distance(1.0 / 3.0);
    auto near_half = rep.nearest_pole_distance(0.5);
    bool no_third = !rep.has_real_pole_in(1e-9, 0.45) && (!near_third || *near_third > 1e-3);
    bool half = near_half && *near_half < 0.01;
    std::cerr << "[" << rep.L << "/" << rep.M << "] Pade of S(p, 3p/2): no pole near 1/3: " << (no_third ? "yes" : "NO")
              << ", pole near 1/2: " << (half ? "yes" : "NO") << "\n";
    emit(c.format == "csv" ? to_csv(rep) : io::dump(io::to_json(rep)), c);
    return no_third && half ? kOk : kFalsified;
}

int repro_eq_recurrence(const Common& c) {
    require_format(c, {"text", "json"});
    RatSeries s = mean_size_specialized(Seed(1, 1), Rat(2), 49);
    auto res = recurrence_from_series(s, 6, 3, 2);
    bool rec_ok = res && (res->rec == normalize(known::r2_recurrence()));
    std::vector<ModThetaOperator> images;
    for (auto q : primes_below(prime_sequence_start(), 2)) {
        ModGuess g = guess_ode_mod(specialize_mod(Seed(1, 1), Rat(2), 60, q), 2, 6, 5);
        if (g.status == ModGuess::kFound) images.push_back(g.op);
    }
    bool ode_ok = false, head_ok = false, exp_ok = false;
    DiffOperator ode;
    if (!images.empty()) {
        ode = reconstruct_ode(images);
        ode_ok = ode == normalize(known::r2_ode());
        head_ok = ode.head() == known::r2_head();
        ExponentSet e = indicial_exponents(ode, SingularPoint::rational(Rat(1, 2)));
        exp_ok = exponents_match(e, known::r2_exponents_at_half(), 0);
    }
    std::ostringstream os;
    os << (rec_ok ? "ok   " : "DIFF ") << "recurrence of order 6, degree 2 from 50 terms\n";
    if (res)
        for (int j = 0; j <= res->rec.order(); ++j)
            os << "       c_" << j << "(n) = " << res->rec.coeffs[static_cast<std::size_t>(j)].str("n") << "\n";
    os << (ode_ok ? "ok   " : "DIFF ") << "inhomogeneous ODE (k=2, d=6, rhs degree 5)\n";
    os << (head_ok ? "ok   " : "DIFF ") << "head p^2(1-p)(1-2p)^3(1+4p-4p^2)\n";
    os << (exp_ok ? "ok   " : "DIFF ") << "exponents at 1/2: -2, 2\n";
    json doc{{"recurrence", res ? io::to_json(res->rec) : json(nullptr)},
             {"ode", images.empty() ? json(nullptr) : io::to_json(ode)},
             {"checks", {{"recurrence", rec_ok}, {"ode", ode_ok}, {"head", head_ok}, {"exponents", exp_ok}}}};
    emit(c.format == "json" ? io::dump(doc) : os.str(), c);
    return rec_ok && ode_ok && head_ok && exp_ok ? kOk : kFalsified;
}

int cmd_repro(const std::string& which, Common c) {
    if (which == "table2") return repro_table2(c);
    if (which == "table3") return repro_table3(c);
    if (which == "fig2") return repro_fig2(c);
    return repro_eq_recurrence(c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Directed compact percolation near a damp wall: series, guessing and singularity analysis"};
    app.require_subcommand(1);
    std::function<int()> run;

    SeedArgs seed;
    Common common;
    int order = 20;

    auto* series = app.add_subcommand("series", "Bivariate mean-size series S_{m,y}(p, p_w)");
    add_seed(series, seed);
    series->add_option("--order,-N", order, "Truncation order in p")->capture_default_str();
    add_common(series, common, "json");
    series->callback([&] { run = [&] { return cmd_series(seed, order, common); }; });

    std::string r_text = "2", in;
    std::uint64_t prime = 0;
    auto* spec = app.add_subcommand("specialize", "Series in p with p_w = r p");
    add_seed(spec, seed);
    spec->add_option("--r", r_text, "Exact rational r = p_w / p")->capture_default_str();
    spec->add_option("--order,-N", order, "Truncation order")->capture_default_str();
    spec->add_option("--prime", prime, "Work modulo this prime");
    spec->add_option("--in", in, "Bivariate series JSON to specialize instead of generating");
    add_common(spec, common, "json");
    spec->callback([&] { run = [&] { return cmd_specialize(seed, r_text, order, prime, in, common); }; });

    RecArgs rec;
    auto* grec = app.add_subcommand("guess-rec", "Guess a P-recurrence for the coefficients of S(p, r p)");
    add_seed(grec, seed);
    grec->add_option("--r", rec.r, "Exact rational r")->capture_default_str();
    grec->add_option("--terms", rec.terms, "Series terms to use")->capture_default_str();
    grec->add_option("--max-order", rec.max_order)->capture_default_str();
    grec->add_option("--max-degree", rec.max_degree)->capture_default_str();
    grec->add_option("--primes", rec.primes, "Number of primes")->capture_default_str();
    add_common(grec, common, "json");
    grec->callback([&] { run = [&] { return cmd_guess_rec(seed, rec, common); }; });

    OdeArgs oa;
    auto* gode = app.add_subcommand("guess-ode", "Guess a linear ODE for S(p, r p) modulo primes");
    add_seed(gode, seed);
    gode->add_option("--r", oa.r, "Exact rational r")->capture_default_str();
    gode->add_option("--k", oa.k, "ODE order (omit with --degree for a minimal search)");
    gode->add_option("--degree,-d", oa.degree, "Theta-degree of the coefficients");
    gode->add_option("--rhs-degree", oa.rhs_degree, "Degree of a polynomial right-hand side (-1: homogeneous)")
        ->capture_default_str();
    gode->add_option("--primes", oa.primes, "Images to emit without --exact")->capture_default_str();
    gode->add_option("--holdout", oa.holdout)->capture_default_str();
    gode->add_option("--max-primes", oa.max_primes, "Prime budget for --exact")->capture_default_str();
    gode->add_option("--verify-order", oa.verify_order, "Exact terms used to certify")->capture_default_str();
    gode->add_flag("--exact", oa.exact, "Reconstruct and certify the exact operator");
    add_common(gode, common, "json");
    gode->callback([&] { run = [&] { return cmd_guess_ode(seed, oa, common); }; });

    std::string series_path;
    auto* recon = app.add_subcommand("reconstruct", "Exact operator or recurrence from modular images");
    recon->add_option("--in", in, "Images JSON (theta_images or recurrence_images)")->required();
    recon->add_option("--series", series_path, "Rational series JSON to verify against");
    add_common(recon, common, "json");
    recon->callback([&] { run = [&] { return cmd_reconstruct(in, series_path, common); }; });

    std::string ode_path;
    bool structural = false;
    auto* sing = app.add_subcommand("singularities", "Candidate singular points for p_w = r p");
    add_seed(sing, seed);
    sing->add_option("--r", r_text, "Exact rational r")->required();
    sing->add_flag("--structural", structural, "Also factor the head polynomial of the minimal ODE");
    sing->add_option("--ode", ode_path, "ODE JSON to use instead of computing one");
    add_common(sing, common, "json");
    sing->callback([&] { run = [&] { return cmd_singularities(seed, r_text, structural, ode_path, common); }; });

    std::string point;
    auto* expo = app.add_subcommand("exponents", "Local exponents of the minimal ODE at a point");
    add_seed(expo, seed);
    expo->add_option("--r", r_text, "Exact rational r")->required();
    expo->add_option("--point", point, "0, 1/2, 1/r, 1-1/r, sqrt2, P4, inf or an exact rational")->required();
    expo->add_option("--ode", ode_path, "ODE JSON to use instead of computing one");
    add_common(expo, common, "text");
    expo->callback([&] { run = [&] { return cmd_exponents(seed, r_text, point, ode_path, common); }; });

    PadeArgs pa;
    auto* pade = app.add_subcommand("pade", "Diagonal Pade approximant sampled on a grid (CSV)");
    add_seed(pade, seed);
    pade->add_option("--r", pa.r, "Exact rational r")->capture_default_str();
    pade->add_option("--in", pa.in, "Rational series JSON instead of generating");
    pade->add_option("--degree", pa.degree, "Diagonal degree")->capture_default_str();
    pade->add_option("--order,-N", pa.order, "Series order (default 2 * degree)");
    pade->add_option("--lo", pa.lo)->capture_default_str();
    pade->add_option("--hi", pa.hi)->capture_default_str();
    pade->add_option("--step", pa.step)->capture_default_str();
    add_common(pade, common, "csv");
    pade->callback([&] { run = [&] { return cmd_pade(seed, pa, common); }; });

    GammaArgs ga;
    auto* gam = app.add_subcommand("estimate-gamma", "Dlog-Pade estimate of the critical exponent");
    gam->add_option("--series", ga.series, "physical, wet, dry or bulk")
        ->check(CLI::IsMember({"physical", "wet", "dry", "bulk"}))
        ->capture_default_str();
    gam->add_option("--r", ga.r, "Exact rational r for the physical series")->capture_default_str();
    gam->add_option("--pc", ga.pc, "Expected critical point")->capture_default_str();
    gam->add_option("--order,-N", ga.order, "Series order")->capture_default_str();
    gam->add_option("--m", ga.m)->capture_default_str();
    gam->add_option("--y", ga.y)->capture_default_str();
    add_common(gam, common, "text");
    gam->callback([&] { run = [&] { return cmd_estimate_gamma(ga, common); }; });

    std::string c_text;
    int verify_order = kCertificationOrder;
    auto* ver = app.add_subcommand("verify-factorization", "Check L4 = L2 LS + LR against S, R and the series");
    add_seed(ver, seed);
    ver->add_option("--r", r_text, "Exact rational r")->required();
    ver->add_option("--c", c_text, "Multiple of R to remove (default: search for it)");
    ver->add_option("--ode", ode_path, "ODE JSON to use instead of computing one");
    ver->add_option("--order,-N", verify_order, "Series order")->capture_default_str();
    add_common(ver, common, "json");
    ver->callback([&] { run = [&] { return cmd_verify(seed, r_text, c_text, ode_path, verify_order, common); }; });

    std::string bundle;
    auto* repro = app.add_subcommand("repro", "Reproduction bundles");
    repro->add_option("bundle", bundle, "table2, table3, fig2 or eq-recurrence")
        ->required()
        ->check(CLI::IsMember({"table2", "table3", "fig2", "eq-recurrence"}));
    add_common(repro, common, "");
    repro->callback([&] {
        if (common.format.empty()) common.format = bundle == "fig2" ? "csv" : "text";
        run = [&] { return cmd_repro(bundle, common); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        return kUsage;
    }
    if (common.format.empty()) common.format = default_formats[app.get_subcommands().front()];
    try {
        return run();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const io::FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFalsified;
    }
}
