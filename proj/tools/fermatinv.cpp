// Command-line front end: one subcommand per pipeline, JSON or text output.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fermatinv/errors.hpp"
#include "fermatinv/json.hpp"

using namespace fermatinv;

namespace {

struct Table
{
    std::vector<std::pair<std::string, std::string>> rows;

    void add(std::string k, std::string v) { rows.emplace_back(std::move(k), std::move(v)); }
    void print(std::ostream & os) const
    {
        std::size_t w = 0;
        for (auto const & r : rows)
            w = std::max(w, r.first.size());
        for (auto const & [k, v] : rows)
            os << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string join(std::vector<T> const & v, std::string const & sep = ", ")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        if constexpr (std::is_same_v<T, Integer>)
            os << v[i].get_str();
        else if constexpr (std::is_same_v<T, std::string>)
            os << v[i];
        else if constexpr (requires { v[i].to_string(); })
            os << v[i].to_string();
        else
            os << v[i];
    }
    return os.str();
}

std::vector<Integer> parse_list(std::string const & s)
{
    std::vector<Integer> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_integer(item));
    if (out.empty())
        throw input_error("empty coefficient list");
    return out;
}

std::vector<Rat> parse_rat_list(std::string const & s)
{
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(Rat::parse(item));
    if (out.empty())
        throw input_error("empty coefficient list");
    return out;
}

std::uint64_t factor_bound_from_env()
{
    char const * e = std::getenv("FERMATINV_FACTOR_BOUND");
    if (!e || !*e)
        return default_factor_bound;
    Integer b = parse_integer(e);
    if (b < 2 || !b.fits_ulong_p())
        throw input_error("FERMATINV_FACTOR_BOUND must be an integer >= 2");
    return b.get_ui();
}

int small_prime_arg(Integer const & p, int min, char const * what)
{
    if (p < min || p > 1000000 || !is_prime(p))
        throw input_error(std::string(what) + " must be a prime in [" + std::to_string(min) + ", 10^6], got " +
                          p.get_str());
    return static_cast<int>(p.get_si());
}

/* Output of one subcommand: the JSON result plus its text rendering. */
struct Outcome
{
    Json result;
    Table table;
    std::string text; // free-form text, printed after the table
};

struct Context
{
    std::string command;
    Json inputs = Json::object();
    bool json = false;
};

// ---- subcommands

Outcome run_wieferich(Integer const & base, Integer const & bound)
{
    if (!is_prime(base))
        throw input_error("--base must be prime");
    if (bound < 3 || bound > Integer("10000000000"))
        throw input_error("--bound must be in [3, 10^10]");
    auto found = wieferich_scan(base.get_ui(), bound.get_ui());
    Outcome o;
    Json arr = Json::array();
    for (auto q : found)
        arr.push_back(std::to_string(q));
    o.result = {{"base", base.get_str()}, {"bound", bound.get_str()}, {"primes", arr}};
    o.table.add("base", base.get_str());
    o.table.add("bound", bound.get_str());
    o.table.add("count", std::to_string(found.size()));
    std::ostringstream os;
    os << "p\n";
    for (auto q : found)
        os << q << '\n';
    o.text = os.str();
    return o;
}

Outcome run_ramification(Integer const & p, Integer const & l)
{
    auto r = ramification_report(p, l);
    Outcome o;
    o.result = ramification_json(r);
    o.table.add("p", r.p.get_str());
    o.table.add("l", r.l.get_str());
    o.table.add("wieferich", yes_no(r.wieferich));
    o.table.add("p unramified in N", yes_no(r.p_unramified_in_N));
    o.table.add("shape in L", to_string(r.shape_in_L));
    o.table.add("primes above p in N", r.num_primes_above_p_in_N.get_str());
    return o;
}

Outcome run_good_reduction(Integer const & p)
{
    auto f = good_reduction_field(p);
    Outcome o;
    o.result = {{"p", p.get_str()}, {"field", to_string(f)}};
    o.table.add("p", p.get_str());
    o.table.add("good reduction field", to_string(f));
    return o;
}

Outcome run_hensel(Integer const & p, std::string const & coeffs, std::optional<Integer> l, std::optional<Integer> x0,
                   unsigned x0_precision, unsigned target)
{
    if (!is_prime(p))
        throw input_error("--p must be prime");
    IntPoly f;
    Integer seed;
    if (!coeffs.empty()) {
        f.coeffs = parse_list(coeffs);
        if (!x0)
            throw input_error("--x0 is required with --coeffs");
        seed = *x0;
    } else {
        if (!l)
            throw input_error("give either --coeffs or --l");
        if (!p.fits_ulong_p() || p > 100000)
            throw input_error("--p too large for X^p - l");
        f.coeffs.assign(p.get_ui() + 1, Integer(0));
        f.coeffs[0] = -*l;
        f.coeffs.back() = 1;
        // seed x0 = l mod p, since x = x^p = l mod p
        seed = x0 ? *x0 : *l;
    }
    PadicApprox y = hensel_lift(f, PadicApprox(p, x0_precision, seed), target);
    Outcome o;
    o.result = {{"p", p.get_str()}, {"precision", y.precision}, {"value", y.value.get_str()},
                {"modulus", y.modulus().get_str()}};
    o.table.add("p", p.get_str());
    o.table.add("root", y.value.get_str() + " mod " + y.modulus().get_str());
    return o;
}

Outcome run_curve(std::optional<Integer> p, std::string const & fq)
{
    Outcome o;
    if (p) {
        int pp = small_prime_arg(*p, 5, "--p");
        auto m = fermat_model(pp);
        o.result = {{"p", pp},
                    {"original", "y^" + std::to_string(pp) + " = x(1-x)"},
                    {"genus", m.genus()},
                    {"hyper", curve_json(m.hyper, "Q")},
                    {"cleared", curve_json(m.cleared, "Q")}};
        o.table.add("model", "y^" + std::to_string(pp) + " = x(1-x)");
        o.table.add("hyperelliptic", "v^2 = " + m.hyper.f().to_string());
        o.table.add("cleared", "w^2 = " + m.cleared.f().to_string());
        o.table.add("genus", std::to_string(m.genus()));
        auto div = fermat_divisor_of_x(m);
        std::vector<std::string> terms;
        for (auto const & [pt, n] : div.terms)
            terms.push_back(std::to_string(n) + "*" + (pt.at_infinity ? std::string("P_inf") : pt.to_string()));
        std::string shown;
        for (auto const & t : terms)
            shown += shown.empty() ? t : t[0] == '-' ? " - " + t.substr(1) : " + " + t;
        o.table.add("div(x)", shown);
        o.result["divisor_of_x"] = terms;
        return o;
    }
    Rat z;
    HyperellipticCurve<Rat> c(Poly<Rat>(z, parse_rat_list(fq)));
    auto ws = weierstrass_points(c);
    std::vector<std::string> pts;
    for (auto const & w : ws)
        pts.push_back(w.to_string());
    o.result = curve_json(c, "Q");
    o.result["genus"] = c.genus();
    o.result["weierstrass_points"] = pts;
    o.table.add("curve", "y^2 = " + c.f().to_string());
    o.table.add("genus", std::to_string(c.genus()));
    o.table.add("rational Weierstrass points", join(pts));
    return o;
}

Outcome run_two_torsion(std::string const & fq)
{
    Rat z;
    HyperellipticCurve<Rat> c(Poly<Rat>(z, parse_rat_list(fq)));
    auto b = two_torsion_basis(c);
    auto id = MumfordDivisor<Rat>::identity(z);
    bool all_order_two = true;
    MumfordDivisor<Rat> total = id;
    for (auto const & D : b.points) {
        all_order_two = all_order_two && cantor_add(c, D, D).is_identity() && !D.is_identity();
        total = cantor_add(c, total, D);
    }
    std::size_t n = static_cast<std::size_t>(2 * c.genus());
    std::vector<MumfordDivisor<Rat>> sums;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        MumfordDivisor<Rat> s = id;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s = cantor_add(c, s, b.points[i]);
        sums.push_back(s);
    }
    bool distinct = true;
    for (std::size_t i = 0; i < sums.size(); ++i)
        for (std::size_t j = i + 1; j < sums.size(); ++j)
            distinct = distinct && !(sums[i] == sums[j]);

    Outcome o;
    Json pts = Json::array();
    for (auto const & D : b.points)
        pts.push_back(mumford_json(D));
    o.result = {{"curve", curve_json(c, "Q")},
                {"roots", join(b.roots)},
                {"points", pts},
                {"all_order_two", all_order_two},
                {"sum_is_zero", total.is_identity()},
                {"distinct_subset_sums", sums.size()},
                {"subset_sums_distinct", distinct}};
    o.table.add("roots", join(b.roots));
    for (std::size_t i = 0; i < b.points.size(); ++i)
        o.table.add("D" + std::to_string(i + 1),
                    "(" + b.points[i].U.to_string() + ", " + b.points[i].V.to_string() + ")");
    o.table.add("2 D_i = 0", yes_no(all_order_two));
    o.table.add("sum D_i = 0", yes_no(total.is_identity()));
    o.table.add("subset sums of D_1..D_" + std::to_string(n) + " distinct",
                yes_no(distinct) + " (" + std::to_string(sums.size()) + ")");
    return o;
}

Outcome run_order(Integer const & p, std::string const & point, std::optional<Integer> u, long bound)
{
    int pp = small_prime_arg(p, 5, "--p");
    Outcome o;
    std::optional<long> n;
    std::string desc;
    if (u) {
        PointCandidate c = make_candidate(pp, *u, factor_bound_from_env());
        auto curve = fermat_hyper_over(pp, c.x0);
        auto D = c.divisor();
        desc = "(" + D.U.to_string() + ", " + D.V.to_string() + ")";
        // multiples of a non-torsion point blow up in height; settle that first
        auto cert = find_certificate(c);
        if (cert && cert->verdict == OrderVerdict::proven_infinite) {
            o.result = {{"p", pp}, {"point", desc}, {"bound", bound}, {"order", nullptr},
                        {"certificate", certificate_json(*cert)}};
            o.table.add("point", desc);
            o.table.add("order", "infinite (q = " + cert->first.q.get_str() + ", " + cert->second.q.get_str() +
                                     "; orders " + cert->first.point_order.get_str() + ", " +
                                     cert->second.point_order.get_str() + ")");
            return o;
        }
        n = order_of(curve, D, bound);
    } else {
        if (point != "Q")
            throw input_error("--point must be Q (or use --u)");
        auto curve = fermat_hyper_over(pp, Rat());
        auto Q = fermat_torsion_point(Rat());
        n = order_of(curve, Q, bound);
        desc = "(" + Q.U.to_string() + ", " + Q.V.to_string() + ")";
    }
    o.result = {{"p", pp}, {"point", desc}, {"bound", bound}};
    o.result["order"] = n ? Json(*n) : Json(nullptr);
    o.table.add("point", desc);
    o.table.add("order", n ? std::to_string(*n) : "none <= " + std::to_string(bound));
    return o;
}

Outcome run_jacobian_count(std::optional<Integer> p, std::string const & fq, Integer const & q, bool brute)
{
    if (q < 3 || q > Integer(1L << 30) || !is_prime(q))
        throw input_error("--q must be an odd prime below 2^30");
    std::int64_t qs = q.get_si();
    ModInt z(0, qs);
    std::vector<ModInt> c;
    if (p) {
        auto const model = fermat_model(small_prime_arg(*p, 5, "--p"));
        for (auto const & a : model.hyper.f().coeffs())
            c.push_back(reduce_rat(a, qs));
    } else {
        for (auto const & a : parse_rat_list(fq))
            c.push_back(reduce_rat(a, qs));
    }
    Poly<ModInt> f(z, std::move(c));
    HyperellipticCurve<ModInt> curve = [&] {
        try {
            return HyperellipticCurve<ModInt>(f);
        } catch (input_error const & e) {
            throw bad_reduction(std::string("bad reduction mod ") + q.get_str() + ": " + e.what());
        }
    }();
    Integer n = brute ? jacobian_order_brute_force(curve) : jacobian_order_finite_field(curve);
    Outcome o;
    o.result = {{"q", q.get_str()}, {"curve", curve_json(curve, "F_" + q.get_str())}, {"jacobian_order", n.get_str()}};
    o.table.add("curve", "y^2 = " + curve.f().to_string() + " over F_" + q.get_str());
    o.table.add("#J", n.get_str());
    return o;
}

Outcome run_classgroup(Integer const & D)
{
    auto cg = class_group(D);
    Outcome o;
    o.result = class_group_json(cg);
    o.table.add("d", D.get_str());
    o.table.add("h", cg.h.get_str());
    o.table.add("structure", cg.structure_computed ? "[" + join(cg.structure) + "]" : "not computed (h too large)");
    if (cg.forms.size() <= 50)
        o.table.add("forms", join(cg.forms, " "));
    return o;
}

Outcome run_cyclotomic_units(Integer const & p)
{
    int pp = small_prime_arg(p, 5, "--p");
    if (pp > 97)
        throw input_error("--p must be at most 97");
    auto gens = cyclotomic_unit_generators(pp);
    Outcome o;
    Json arr = Json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Json g;
        g["a"] = i + 2;
        g["expvec"] = Json::array();
        for (auto const & e : gens[i].expvec)
            g["expvec"].push_back(e.get_str());
        g["element"] = gens[i].element.to_string();
        g["norm"] = cyc_norm(gens[i].element).to_string();
        g["real"] = gens[i].element.conj() == gens[i].element;
        o.table.add("xi_" + std::to_string(i + 2), gens[i].element.to_string() + "  (norm " + g["norm"].get<std::string>() + ")");
        arr.push_back(g);
    }
    o.result = {{"p", pp}, {"generators", arr}};
    return o;
}

Outcome run_kummer_count(Integer const & p, bool vandiver)
{
    int pp = small_prime_arg(p, 5, "--p");
    auto k = subextension_count(pp, vandiver);
    Outcome o;
    o.result = {{"p", k.p}, {"t", k.t}, {"n_p", k.n_p.get_str()}};
    o.table.add("p", std::to_string(k.p));
    o.table.add("t", std::to_string(k.t));
    o.table.add("n_p", k.n_p.get_str());
    return o;
}

Outcome run_irregular(std::optional<Integer> p, std::optional<Integer> below)
{
    Outcome o;
    if (p) {
        auto r = irregularity(small_prime_arg(*p, 5, "--p"));
        o.result = irregularity_json(r);
        o.table.add("p", std::to_string(r.p));
        o.table.add("irregular", yes_no(r.irregular));
        o.table.add("witnesses k", join(r.witnesses));
        return o;
    }
    if (!below || *below < 5 || *below > 201)
        throw input_error("give --p, or --below in [5, 201]");
    Json arr = Json::array();
    std::vector<int> irr;
    for (auto q : primes_up_to(below->get_ui() - 1)) {
        if (q < 5)
            continue;
        auto r = irregularity(static_cast<int>(q));
        if (r.irregular) {
            irr.push_back(r.p);
            arr.push_back(irregularity_json(r));
        }
    }
    o.result = {{"below", below->get_str()}, {"irregular", arr}};
    o.table.add("irregular primes below " + below->get_str(), join(irr));
    return o;
}

void add_invariant_rows(Table & t, InvariantReport const & r)
{
    auto const & c = r.candidate;
    t.add("p", std::to_string(c.p));
    t.add("u", c.u.get_str());
    t.add("4u^p + 1", c.d_raw.get_str() + " = " + c.m.get_str() + "^2 * " + c.d.get_str());
    t.add("x0", c.x0.to_string());
    t.add("h", r.class_group.h.get_str());
    if (r.class_group.structure_computed)
        t.add("Cl structure", "[" + join(r.class_group.structure) + "]");
    t.add("a", r.a.to_string() + "  (norm " + r.a.norm().get_str() + ")");
    t.add("a^p = (x0)", yes_no(r.a_power_verified));
    t.add("class of a", r.class_of_a.to_string());
    t.add("p in L", to_string(r.p_splitting));
    t.add("S-quotient order", r.s_quotient_order.get_str());
    t.add("c order", r.c_order.get_str());
    t.add("psi tuple orders", "(" + join(r.psi_tuple_orders) + ")");
    t.add("nonvanishing", yes_no(r.nonvanishing));
    std::string cert = to_string(r.infinite_order());
    if (r.certificate)
        cert += " (q = " + r.certificate->first.q.get_str() + ", " + r.certificate->second.q.get_str() +
                "; orders " + r.certificate->first.point_order.get_str() + ", " +
                r.certificate->second.point_order.get_str() + ")";
    t.add("infinite order", cert);
    if (c.degenerate)
        t.add("note", "d = -3: L has extra roots of unity");
}

Outcome run_invariant(Integer const & p, Integer const & u)
{
    int pp = small_prime_arg(p, 5, "--p");
    PointCandidate c = make_candidate(pp, u, factor_bound_from_env());
    InvariantReport r = psi(c);
    Outcome o;
    o.result = invariant_json(r);
    add_invariant_rows(o.table, r);
    return o;
}

int run_search(Integer const & p, Integer const & umin, Integer const & umax, unsigned workers,
               std::optional<Integer> resume, bool json)
{
    SearchOptions opt;
    opt.p = small_prime_arg(p, 5, "--p");
    opt.umin = umin;
    opt.umax = umax;
    opt.workers = workers;
    opt.resume_from = resume;
    opt.factor_bound = factor_bound_from_env();
    if (!json)
        std::cout << "u        d                h        c_order  infinite_order\n";
    auto sum = search_nonvanishing(opt, [&](SearchOutcome const & s) {
        if (!s.report) {
            if (json)
                std::cout << Json{{"u", s.u.get_str()}, {"skipped", s.skipped}}.dump() << '\n';
            else
                std::cout << s.u.get_str() << "  skipped: " << s.skipped << '\n';
        } else if (s.report->nonvanishing) {
            auto const & r = *s.report;
            if (json) {
                std::cout << invariant_json(r).dump() << '\n';
            } else {
                auto pad = [](std::string x, std::size_t w) { return x + std::string(x.size() < w ? w - x.size() : 1, ' '); };
                std::cout << pad(r.candidate.u.get_str(), 9) << pad(r.candidate.d.get_str(), 17)
                          << pad(r.class_group.h.get_str(), 9) << pad(r.c_order.get_str(), 9)
                          << to_string(r.infinite_order()) << '\n';
            }
        }
        std::cout.flush();
    });
    Json footer = {{"tested", sum.tested}, {"witnesses", sum.witnesses}, {"skipped", sum.skipped}};
    if (json)
        std::cout << footer.dump() << '\n';
    else
        std::cout << "tested " << sum.tested << ", witnesses " << sum.witnesses << ", skipped " << sum.skipped
                  << ", distinct d " << sum.distinct_d.size() << '\n';
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Fermat quotient Jacobians, class invariants and related number theory"};
    app.require_subcommand(1);
    bool json = false;
    auto json_flag = [&](CLI::App * s) { s->add_flag("--json", json, "JSON output"); };
    std::string command;
    std::function<Outcome()> action;
    Context ctx;

    // string-typed options so big integers parse exactly
    auto int_opt = [](CLI::App * s, std::string const & name, std::string & var, std::string const & help,
                      bool required) {
        auto o = s->add_option(name, var, help);
        if (required)
            o->required();
        return o;
    };

    std::string base = "2", bound = "100000";
    auto * wief = app.add_subcommand("wieferich", "primes p <= bound with base^(p-1) = 1 mod p^2");
    int_opt(wief, "--base", base, "prime base l", false);
    int_opt(wief, "--bound", bound, "search bound", false);
    json_flag(wief);

    std::string p_s, l_s;
    auto * ram = app.add_subcommand("ramification", "ramification of p in the splitting field of X^p - l");
    int_opt(ram, "--p", p_s, "prime p >= 5", true);
    int_opt(ram, "--l", l_s, "prime l != p", true);
    json_flag(ram);

    auto * grf = app.add_subcommand("good-reduction-field", "field F over which the Jacobian has good reduction");
    int_opt(grf, "--p", p_s, "prime p >= 5", true);
    json_flag(grf);

    std::string coeffs, x0_s;
    unsigned x0_prec = 1, target = 2;
    auto * hen = app.add_subcommand("hensel", "p-adic root of f by Newton iteration");
    int_opt(hen, "--p", p_s, "prime", true);
    hen->add_option("--coeffs", coeffs, "integer coefficients, lowest degree first, comma separated");
    int_opt(hen, "--l", l_s, "use f = X^p - l with seed l mod p", false);
    int_opt(hen, "--x0", x0_s, "starting value", false);
    hen->add_option("--x0-precision", x0_prec, "precision of the starting value");
    hen->add_option("--target", target, "target precision");
    json_flag(hen);

    std::string f_s;
    auto * cur = app.add_subcommand("curve", "Fermat quotient model (--p) or a curve y^2 = f over Q (--f)");
    int_opt(cur, "--p", p_s, "prime p >= 5", false);
    cur->add_option("--f", f_s, "rational coefficients of f, lowest degree first");
    json_flag(cur);

    auto * tt = app.add_subcommand("two-torsion", "2-torsion basis of y^2 = f with f split over Q");
    tt->add_option("--f", f_s, "rational coefficients of f, lowest degree first")->required();
    json_flag(tt);

    std::string point = "Q", u_s;
    long order_bound = 100;
    auto * ord = app.add_subcommand("order", "order of a divisor class on the Fermat model");
    int_opt(ord, "--p", p_s, "prime p >= 5", true);
    ord->add_option("--point", point, "Q, the point (0, -1/2) - P_inf");
    int_opt(ord, "--u", u_s, "use the point with u-coordinate u < 0 over Q(sqrt d)", false);
    ord->add_option("--bound", order_bound, "search bound");
    json_flag(ord);

    std::string q_s;
    bool brute = false;
    auto * jc = app.add_subcommand("jacobian-count", "#J over F_q");
    int_opt(jc, "--p", p_s, "Fermat model for prime p", false);
    jc->add_option("--f", f_s, "rational coefficients of f, lowest degree first");
    int_opt(jc, "--q", q_s, "odd prime q", true);
    jc->add_flag("--brute-force", brute, "enumerate Mumford pairs directly");
    json_flag(jc);

    std::string d_s;
    auto * cg = app.add_subcommand("classgroup", "form class group of discriminant d < 0");
    int_opt(cg, "--d", d_s, "negative discriminant", true);
    json_flag(cg);

    auto * cu = app.add_subcommand("cyclotomic-units", "generators xi_a of the cyclotomic units of Q(zeta_p)^+");
    int_opt(cu, "--p", p_s, "prime p >= 5", true);
    json_flag(cu);

    bool no_vandiver = false;
    auto * kc = app.add_subcommand("kummer-count", "t and n_p = (p^t - 1)/(p - 1)");
    int_opt(kc, "--p", p_s, "prime p >= 5", true);
    kc->add_flag("--no-vandiver", no_vandiver, "do not assume Vandiver's conjecture");
    json_flag(kc);

    std::string below_s;
    auto * irr = app.add_subcommand("irregular", "Kummer's criterion via Bernoulli numbers");
    int_opt(irr, "--p", p_s, "prime 5 <= p <= 200", false);
    int_opt(irr, "--below", below_s, "list irregular primes below this bound", false);
    json_flag(irr);

    auto * inv = app.add_subcommand("invariant", "class invariant of the point with u-coordinate u");
    int_opt(inv, "--p", p_s, "prime p >= 5", true);
    int_opt(inv, "--u", u_s, "negative integer u", true);
    json_flag(inv);

    std::string umin_s, umax_s, resume_s;
    unsigned workers = 1;
    auto * srch = app.add_subcommand("search", "nonvanishing invariants for u in [umin, umax]");
    int_opt(srch, "--p", p_s, "prime p >= 5", true);
    int_opt(srch, "--umin", umin_s, "lower end of the u range", true);
    int_opt(srch, "--umax", umax_s, "upper end of the u range (<= -1)", true);
    srch->add_option("--workers", workers, "worker threads");
    int_opt(srch, "--resume-from", resume_s, "restart at this u", false);
    json_flag(srch);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return 2;
    }

    auto opt_int = [](std::string const & s) -> std::optional<Integer> {
        if (s.empty())
            return std::nullopt;
        return parse_integer(s);
    };

    auto * sub = app.get_subcommands().front();
    ctx.command = sub->get_name();
    for (auto const * o : sub->get_options()) {
        if (o->get_name() == "--help" || o->get_name() == "--json" || o->count() == 0)
            continue;
        auto r = o->results();
        ctx.inputs[o->get_name().substr(2)] = r.empty() ? std::string("true") : r.front();
    }

    auto start = std::chrono::steady_clock::now();
    try {
        Outcome o;
        if (sub == wief)
            o = run_wieferich(parse_integer(base), parse_integer(bound));
        else if (sub == ram)
            o = run_ramification(parse_integer(p_s), parse_integer(l_s));
        else if (sub == grf)
            o = run_good_reduction(parse_integer(p_s));
        else if (sub == hen)
            o = run_hensel(parse_integer(p_s), coeffs, opt_int(l_s), opt_int(x0_s), x0_prec, target);
        else if (sub == cur) {
            if (p_s.empty() == f_s.empty())
                throw input_error("give exactly one of --p and --f");
            o = run_curve(opt_int(p_s), f_s);
        } else if (sub == tt)
            o = run_two_torsion(f_s);
        else if (sub == ord)
            o = run_order(parse_integer(p_s), point, opt_int(u_s), order_bound);
        else if (sub == jc) {
            if (p_s.empty() == f_s.empty())
                throw input_error("give exactly one of --p and --f");
            o = run_jacobian_count(opt_int(p_s), f_s, parse_integer(q_s), brute);
        } else if (sub == cg)
            o = run_classgroup(parse_integer(d_s));
        else if (sub == cu)
            o = run_cyclotomic_units(parse_integer(p_s));
        else if (sub == kc)
            o = run_kummer_count(parse_integer(p_s), !no_vandiver);
        else if (sub == irr)
            o = run_irregular(opt_int(p_s), opt_int(below_s));
        else if (sub == inv)
            o = run_invariant(parse_integer(p_s), parse_integer(u_s));
        else if (sub == srch)
            return run_search(parse_integer(p_s), parse_integer(umin_s), parse_integer(umax_s), workers,
                              opt_int(resume_s), json);

        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        if (json) {
            Json report;
            report["command"] = ctx.command;
            report["inputs"] = ctx.inputs;
            report["result"] = o.result;
            report["elapsed_ms"] = ms.count();
            std::cout << report.dump(2) << '\n';
        } else {
            o.table.print(std::cout);
            std::cout << o.text;
        }
        return 0;
    } catch (input_error const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (computation_error const & e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return 3;
    }
}
