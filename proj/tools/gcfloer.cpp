#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "acceptance/acceptance.hpp"
#include "gcfloer/errors.hpp"
#include "gcfloer/report.hpp"

using namespace gcfloer;

namespace {

constexpr const char* kCsvHelp = R"(CSV columns (--format csv):
  polytope   row,upper,lower,facet,active
             upper/lower are u<j> (pattern coordinate j, 1-based) or an exact constant;
             active is 1/0 when --at is given, empty otherwise
  potential  term,coeff_re,coeff_im,t_exp,y_exp   (y_exp space separated)
  critical   kind,label,residual,value_re,value_im,hessian_re,hessian_im,interior,nondegenerate,valuations
             kind is point (solver output) or candidate (--verify-paper closed forms)
  qh         index,eigen_re,eigen_im
  match      index,critical_re,critical_im,eigen_re,eigen_im,distance,within_tol
             critical values are padded with zeros up to the eigenvalue count
  floer      kind,row,col,exponent,re,im
             kind d: one Novikov term of the differential (row, col are basis names)
             kind hf_free: re holds the free rank; kind hf_torsion: exponent holds T^e
  verify-all id,name,pass
Numbers are printed with %.17g; rationals as p/q.)";

struct Options {
    std::string space;
    std::string l1 = "1", l2 = "1", lam = "1";
    std::vector<int> steps;
    int n = 0;
    std::vector<std::string> profile;
    std::string format = "json";
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Rational rational_flag(const std::string& flag, const std::string& text) {
    auto p = parse_rational(text);
    if (p.approximated)
        std::cerr << "warning: " << flag << " '" << text << "' is not an exact rational, read as "
                  << to_string(p.value) << "\n";
    return p.value;
}

SpaceSpec space_spec(const Options& o) {
    SpaceSpec s;
    s.name = o.space;
    if (o.space == "Fl3") {
        s.lambda = {rational_flag("--l1", o.l1), rational_flag("--l2", o.l2)};
    } else if (o.space == "Gr24" || o.space == "Gr25") {
        s.lambda = {rational_flag("--lam", o.lam)};
    } else {
        if (o.steps.empty() || o.n <= 0 || o.profile.empty())
            throw InvalidInput("custom needs --steps, --n and --profile");
        s.shape = FlagShape{o.steps, o.n};
        for (const auto& v : o.profile) s.lambda.push_back(rational_flag("--profile", v));
    }
    return s;
}

void add_space(CLI::App* sub, Options& o, bool custom) {
    std::vector<std::string> names{"Fl3", "Gr24", "Gr25"};
    if (custom) names.push_back("custom");
    sub->add_option("space", o.space, "Fl3, Gr24, Gr25" + std::string(custom ? " or custom" : ""))
        ->required()
        ->check(CLI::IsMember(names));
    sub->add_option("--l1", o.l1, "Fl3 lambda_1 (p/q)");
    sub->add_option("--l2", o.l2, "Fl3 lambda_2 (p/q)");
    sub->add_option("--lam", o.lam, "Grassmannian lambda (p/q)");
    if (custom) {
        sub->add_option("--steps", o.steps, "custom flag steps, e.g. 1,2")->delimiter(',');
        sub->add_option("--n", o.n, "custom ambient dimension");
        sub->add_option("--profile", o.profile, "custom eigenvalues, descending, e.g. 2,1,0")->delimiter(',');
    }
}

void add_format(CLI::App* sub, std::string& f, std::vector<std::string> allowed = {"json", "csv"}) {
    sub->add_option("--format", f, "output format")->check(CLI::IsMember(allowed));
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string entry_text(const GCEntry& e) { return e.constant() ? to_string(e.value) : "u" + std::to_string(e.var + 1); }

void polytope_csv(const PolytopeReport& r) {
    std::cout << "row,upper,lower,facet,active\n";
    const auto& q = r.polytope.inequalities;
    for (size_t i = 0; i < q.size(); ++i) {
        std::string active;
        if (r.point) {
            const auto& a = r.point->active;
            active = std::find(a.begin(), a.end(), static_cast<int>(i)) != a.end() ? "1" : "0";
        }
        std::cout << i << "," << entry_text(q[i].upper) << "," << entry_text(q[i].lower) << ","
                  << (q[i].facet ? 1 : 0) << "," << active << "\n";
    }
}

void potential_csv(const PotentialReport& r) {
    std::cout << "term,coeff_re,coeff_im,t_exp,y_exp\n";
    for (size_t i = 0; i < r.potential.terms.size(); ++i) {
        const auto& t = r.potential.terms[i];
        std::string ys;
        for (size_t j = 0; j < t.y_exp.size(); ++j) ys += (j ? " " : "") + std::to_string(t.y_exp[j]);
        std::cout << i << "," << num(t.coeff.real()) << "," << num(t.coeff.imag()) << "," << to_string(t.t_exp)
                  << "," << ys << "\n";
    }
}

void critical_csv(const CriticalReport& r) {
    std::cout << "kind,label,residual,value_re,value_im,hessian_re,hessian_im,interior,nondegenerate,valuations\n";
    for (size_t i = 0; i < r.points.size(); ++i) {
        const auto& p = r.points[i];
        std::cout << "point," << i << "," << num(p.residual) << "," << num(p.value.real()) << ","
                  << num(p.value.imag()) << "," << num(p.hessian_det.real()) << "," << num(p.hessian_det.imag())
                  << ",,,\n";
    }
    for (const auto& c : r.candidates) {
        std::string v;
        for (size_t j = 0; j < c.valuations.size(); ++j) v += (j ? " " : "") + to_string(c.valuations[j]);
        std::cout << "candidate," << c.label << "," << num(c.residual) << ",,,,," << (c.interior ? 1 : 0) << ","
                  << (c.nondegenerate ? 1 : 0) << "," << v << "\n";
    }
}

void qh_csv(const QHReport& r) {
    if (!r.matched) {
        std::cout << "index,eigen_re,eigen_im\n";
        for (size_t i = 0; i < r.eigenvalues.size(); ++i)
            std::cout << i << "," << num(r.eigenvalues[i].real()) << "," << num(r.eigenvalues[i].imag()) << "\n";
        return;
    }
    std::cout << "index,critical_re,critical_im,eigen_re,eigen_im,distance,within_tol\n";
    for (size_t i = 0; i < r.pairing.size(); ++i) {
        cplx c = i < r.critical_values.size() ? r.critical_values[i] : cplx(0);
        std::cout << i << "," << num(c.real()) << "," << num(c.imag()) << ",";
        if (r.pairing[i] < 0) {
            std::cout << ",,,0\n";
            continue;
        }
        cplx e = r.eigenvalues[static_cast<size_t>(r.pairing[i])];
        double d = std::abs(c - e);
        std::cout << num(e.real()) << "," << num(e.imag()) << "," << num(d) << "," << (d < r.tol ? 1 : 0) << "\n";
    }
}

void floer_csv(const FloerReport& r) {
    std::cout << "kind,row,col,exponent,re,im\n";
    const auto& d = r.complex.d;
    const auto& b = r.complex.basis;
    for (int i = 0; i < d.rows(); ++i)
        for (int k = 0; k < d.cols(); ++k)
            for (const auto& t : d(i, k).terms())
                std::cout << "d," << b[i] << "," << b[k] << "," << to_string(t.exponent) << "," << num(t.coeff.real())
                          << "," << num(t.coeff.imag()) << "\n";
    std::cout << "hf_free," << r.ring << ",,," << r.hf.free_rank << ",\n";
    for (const auto& e : r.hf.torsion) std::cout << "hf_torsion," << r.ring << ",," << to_string(e) << ",,\n";
}

std::vector<double> parse_doubles(const std::string& flag, const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidInput(flag + ": not a number: '" + item + "'");
        }
    }
    if (out.empty()) throw InvalidInput(flag + " is empty");
    return out;
}

int verify_all(const std::string& format, bool serial) {
    auto results = acceptance::run_all(!serial);
    bool ok = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
        print_json(arr);
    } else if (format == "csv") {
        std::cout << "id,name,pass\n";
        for (const auto& r : results) std::cout << r.id << "," << r.name << "," << (r.pass ? 1 : 0) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << acceptance::summary_line(r) << "\n";
            for (const auto& d : r.details) std::cout << "      " << d << "\n";
        }
    }
    for (const auto& r : results) ok = ok && r.pass;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gelfand-Cetlin fibers: polytopes, potentials, quantum cohomology and Floer modules"};
    app.footer(kCsvHelp);
    app.require_subcommand(1);

    Options o;
    double T0 = 0.5, tol = 1e-9, match_tol = 1e-7, x_re = 0, x_im = 0;
    std::uint64_t seed = 0;
    int starts = SolverConfig{}.starts;
    std::string at, q, t = "0", ring = "Lambda0", rule = "facet", table_format = "table";
    bool verify_closed_form = false, pair = false, serial = false;

    auto* poly = app.add_subcommand("polytope", "GC pattern inequalities; with --at, containment and diamonds");
    add_space(poly, o, true);
    add_format(poly, o.format);
    poly->add_option("--at", at, "pattern point u1,u2,...");
    poly->add_option("--tol", tol, "containment tolerance");

    auto* pot = app.add_subcommand("potential", "potential function terms");
    add_space(pot, o, true);
    add_format(pot, o.format);
    pot->add_option("--rule", rule, "facet or literal")->check(CLI::IsMember({"facet", "literal"}));

    auto* crit = app.add_subcommand("critical", "critical points of the potential at T = T0");
    add_space(crit, o, true);
    add_format(crit, o.format);
    crit->add_option("--T0", T0, "value substituted for T, 0 < T0 < 1");
    crit->add_option("--seed", seed, "multistart seed");
    crit->add_option("--starts", starts, "number of Newton starts");
    crit->add_flag("--verify-paper", verify_closed_form, "also check the closed-form critical points");

    auto* qh = app.add_subcommand("qh", "eigenvalues of quantum multiplication by c1");
    qh->add_option("space", o.space, "Fl3, Gr24 or Gr25")->required()->check(CLI::IsMember({"Fl3", "Gr24", "Gr25"}));
    qh->add_option("--q", q, "Gr24/Gr25: re[,im]; Fl3: q1,q2")->required();
    add_format(qh, o.format);

    auto* match = app.add_subcommand("match", "pair critical values with c1 eigenvalues");
    add_space(match, o, false);
    add_format(match, o.format);
    match->add_option("--T0", T0, "value substituted for T, 0 < T0 < 1");
    match->add_option("--seed", seed, "multistart seed");
    match->add_option("--starts", starts, "number of Newton starts");
    match->add_option("--tol", match_tol, "pairing tolerance");

    auto* floer = app.add_subcommand("floer", "deformed Floer differential and its cohomology");
    add_space(floer, o, false);
    add_format(floer, o.format);
    floer->add_option("--t", t, "Gr24 fiber parameter, -lam < t < lam (p/q)");
    floer->add_option("--x-re", x_re, "real part of the bounding cochain coefficient");
    floer->add_option("--x-im", x_im, "imaginary part; within 1e-7 of +-pi/2 it is snapped");
    floer->add_option("--ring", ring, "Lambda0 or Lambda")->check(CLI::IsMember({"Lambda0", "Lambda"}));
    floer->add_flag("--pair", pair, "Gr24: the pair (L0, b) against (L0, -b) at t = 0");

    auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
    verify->add_option("--format", table_format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    verify->add_flag("--serial", serial, "run the checks one after another");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const bool csv = o.format == "csv";
        if (poly->parsed()) {
            std::optional<GCPoint> point;
            if (!at.empty()) point = GCPoint{parse_doubles("--at", at)};
            auto r = polytope_report(space_spec(o), point, tol);
            csv ? polytope_csv(r) : print_json(to_json(r));
        } else if (pot->parsed()) {
            auto r = potential_report(space_spec(o), rule == "literal" ? TermRule::Literal : TermRule::Facet);
            csv ? potential_csv(r) : print_json(to_json(r));
        } else if (crit->parsed()) {
            SolverConfig cfg;
            cfg.T0 = T0;
            cfg.seed = seed;
            cfg.starts = starts;
            auto r = critical_report(space_spec(o), cfg, verify_closed_form);
            csv ? critical_csv(r) : print_json(to_json(r));
        } else if (qh->parsed()) {
            auto v = parse_doubles("--q", q);
            std::vector<cplx> qs;
            if (o.space == "Fl3") {
                for (double d : v) qs.push_back(d);
            } else {
                if (v.size() > 2) throw InvalidInput("--q takes re[,im] for " + o.space);
                qs.push_back({v[0], v.size() > 1 ? v[1] : 0.0});
            }
            auto r = qh_report(o.space, qs);
            csv ? qh_csv(r) : print_json(to_json(r));
        } else if (match->parsed()) {
            SolverConfig cfg;
            cfg.seed = seed;
            cfg.starts = starts;
            auto r = match_report(space_spec(o), T0, match_tol, cfg);
            csv ? qh_csv(r) : print_json(to_json(r));
        } else if (floer->parsed()) {
            bool snapped = false;
            for (double s : {1.0, -1.0}) {
                if (x_im != s * std::numbers::pi / 2 && std::abs(x_im - s * std::numbers::pi / 2) < 1e-7) {
                    x_im = s * std::numbers::pi / 2;
                    snapped = true;
                }
            }
            if (snapped) std::cerr << "note: --x-im snapped to " << (x_im > 0 ? "" : "-") << "pi/2\n";
            auto r = floer_report(space_spec(o), rational_flag("--t", t), {x_re, x_im}, pair, ring);
            if (csv) {
                floer_csv(r);
            } else {
                json j = to_json(r);
                j["x_im_snapped"] = snapped;
                print_json(j);
            }
        } else if (verify->parsed()) {
            return verify_all(table_format, serial);
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
