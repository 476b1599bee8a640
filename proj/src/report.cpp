#include "gcfloer/report.hpp"

#include <cmath>
#include <numbers>

#include "gcfloer/errors.hpp"
#include "gcfloer/qh.hpp"

namespace gcfloer {

namespace {

const Rational& param(const SpaceSpec& s, size_t i) {
    if (s.lambda.size() <= i) throw InvalidInput("space " + s.name + " is missing a parameter");
    return s.lambda[i];
}

void require_named(const SpaceSpec& s) {
    if (s.name != "Fl3" && s.name != "Gr24" && s.name != "Gr25")
        throw InvalidInput("this operation needs Fl3, Gr24 or Gr25, got " + s.name);
}

}  // namespace

Space fiber_space(const SpaceSpec& s) {
    if (s.name == "Fl3") return fl3_space(param(s, 0), param(s, 1));
    if (s.name == "Gr24") return gr24_fiber_space(param(s, 0));
    if (s.name == "Gr25") return gr25_space(param(s, 0));
    if (s.name == "custom") {
        s.shape.validate();
        Space out{s.shape, {s.lambda}};
        require_profile_matches(out.shape, out.profile);
        return out;
    }
    throw InvalidInput("unknown space '" + s.name + "'");
}

Space potential_space(const SpaceSpec& s) {
    if (s.name == "Gr24") return gr24_space(param(s, 0));
    return fiber_space(s);
}

bool PointReport::operator==(const PointReport& o) const {
    auto fiber_eq = [](const std::optional<FiberDescriptor>& a, const std::optional<FiberDescriptor>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        return a->kind == b->kind && a->real_dimension == b->real_dimension && a->lagrangian == b->lagrangian &&
               a->annotations == b->annotations;
    };
    return u.u == o.u.u && inside == o.inside && active == o.active && diamonds == o.diamonds && fiber_eq(fiber, o.fiber);
}

PolytopeReport polytope_report(const SpaceSpec& s, const std::optional<GCPoint>& at, double tol) {
    Space sp = fiber_space(s);
    PolytopeReport r{s.name, build_polytope(sp.shape, sp.profile), std::nullopt};
    if (at) {
        if (static_cast<int>(at->u.size()) != r.polytope.dimension())
            throw InvalidInput("--at needs " + std::to_string(r.polytope.dimension()) + " coordinates");
        PointReport pr;
        pr.u = *at;
        auto c = contains(r.polytope, *at, tol);
        pr.inside = c.inside;
        pr.active = c.active;
        if (c.inside) {
            pr.diamonds = detect_diamonds(sp.shape, sp.profile, *at, tol);
            if (s.name != "custom") pr.fiber = classify_fiber(parse_space(s.name), r.polytope, *at, tol);
        }
        r.point = pr;
    }
    return r;
}

PotentialReport potential_report(const SpaceSpec& s, TermRule rule) {
    Space sp = potential_space(s);
    auto po = build_potential(sp.shape, sp.profile, rule);
    return {s.name, s.lambda, po, to_string(po)};
}

CriticalReport critical_report(const SpaceSpec& s, const SolverConfig& cfg, bool verify_closed_form) {
    cfg.validate();
    Space sp = potential_space(s);
    auto p = build_polytope(sp.shape, sp.profile);
    auto po = build_potential(p);
    CriticalReport r{s.name, s.lambda, cfg.T0, cfg.seed, cfg.starts, {}, {}};
    for (const auto& pt : find_critical_points(po, cfg)) r.points.push_back({pt.y, pt.residual, pt.value, pt.hessian_det});
    if (!verify_closed_form) return r;
    require_named(s);
    std::vector<std::pair<std::string, CriticalCandidate>> cands;
    if (s.name == "Fl3") {
        for (auto& c : fl3_closed_form_candidates(to_double(param(s, 0)), to_double(param(s, 1)))) cands.emplace_back("", c);
    } else if (s.name == "Gr24") {
        for (auto& c : gr24_closed_form_candidates(param(s, 0))) cands.emplace_back("", c);
    } else {
        for (auto& c : gr25_closed_form_candidates(param(s, 0), Gr25Relation::Literal)) cands.emplace_back("literal ", c);
        for (auto& c : gr25_closed_form_candidates(param(s, 0), Gr25Relation::Corrected)) cands.emplace_back("corrected ", c);
    }
    const double T1 = cfg.T0 == 0.3 ? 0.5 : 0.3;
    for (const auto& [prefix, c] : cands) {
        auto rep = verify_candidate(po, p, c, {cfg.T0, T1});
        std::vector<cplx> x;
        for (auto y : c.at(cfg.T0)) x.push_back(std::log(y));
        auto h = hessian_check_unchecked(po, x, cfg.T0);
        r.candidates.push_back({prefix + c.label, rep.max_residual, rep.valuations, rep.interior, h.nondegenerate});
    }
    return r;
}

QHReport qh_report(const std::string& space, const std::vector<cplx>& q) {
    QHReport r;
    r.space = space;
    r.q = q;
    if (space == "Fl3") {
        if (q.size() != 2) throw InvalidInput("Fl3 needs two quantum parameters q1, q2");
        r.eigenvalues = fl3_c1_eigenvalues(q[0], q[1]);
    } else if (space == "Gr24" || space == "Gr25") {
        if (q.size() != 1) throw InvalidInput(space + " needs one quantum parameter q");
        r.eigenvalues = c1_eigenvalues_grassmannian(2, space == "Gr24" ? 4 : 5, q[0]);
    } else {
        throw InvalidInput("qh supports Fl3, Gr24 and Gr25");
    }
    return r;
}

QHReport match_report(const SpaceSpec& s, double T0, double tol, const SolverConfig& base) {
    require_named(s);
    if (!(tol > 0)) throw InvalidInput("tolerance must be positive");
    SolverConfig cfg = base;
    cfg.T0 = T0;
    auto cr = critical_report(s, cfg, false);
    std::vector<cplx> q;
    if (s.name == "Fl3") {
        auto [q1, q2] = fl3_q_parameters(std::pow(T0, to_double(param(s, 0))), 1.0, std::pow(T0, -to_double(param(s, 1))));
        q = {q1, q2};
    } else if (s.name == "Gr24") {
        q = {std::pow(T0, 2 * to_double(param(s, 0)))};
    } else {
        q = {std::pow(T0, to_double(param(s, 0)))};
    }
    QHReport r = qh_report(s.name, q);
    r.lambda = s.lambda;
    r.T0 = T0;
    r.tol = tol;
    for (const auto& p : cr.points) r.critical_values.push_back(p.value);
    auto m = multiset_match(r.critical_values, r.eigenvalues, tol, true);
    r.matched = m.matched;
    r.pairing = m.pairing;
    r.worst = m.worst;
    return r;
}

FloerReport floer_report(const SpaceSpec& s, Rational t, cplx x, bool pair, const std::string& ring) {
    if (ring != "Lambda0" && ring != "Lambda") throw InvalidInput("ring must be Lambda0 or Lambda");
    FloerReport r;
    r.space = s.name;
    r.lambda = s.lambda;
    r.pair = pair;
    r.ring = ring;
    if (s.name == "Fl3") {
        if (pair) throw InvalidInput("--pair is defined for Gr24 only");
        r.complex = m1_fl3(param(s, 0), param(s, 1));
    } else if (s.name == "Gr24") {
        if (pair) {
            if (t != Rational(0)) throw InvalidInput("the pair differential is computed at t = 0");
            r.b = {0, std::numbers::pi / 2};
            r.complex = delta_pair_gr24(param(s, 0));
        } else {
            BoundingCochain b(x);
            r.t = t;
            r.b = b.x;
            r.complex = m1b_gr24(param(s, 0), t, b);
        }
    } else {
        throw InvalidInput("Floer differentials are implemented for Fl3 and Gr24");
    }
    r.hf = ring == "Lambda" ? module_presentation_field(r.complex.d) : module_presentation(r.complex.d);
    return r;
}

// ---- JSON ----

namespace {

json cj(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }
cplx jc(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json cvec(const std::vector<cplx>& v) {
    json a = json::array();
    for (auto z : v) a.push_back(cj(z));
    return a;
}
std::vector<cplx> jcvec(const json& j) {
    std::vector<cplx> out;
    for (const auto& e : j) out.push_back(jc(e));
    return out;
}

json rj(const Rational& r) { return to_string(r); }
Rational jr(const json& j) { return parse_rational(j.get<std::string>()).value; }

json rvec(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rj(r));
    return a;
}
std::vector<Rational> jrvec(const json& j) {
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(jr(e));
    return out;
}

json entry_json(const GCEntry& e) { return {{"i", e.i}, {"k", e.k}, {"var", e.var}, {"value", rj(e.value)}}; }
GCEntry json_entry(const json& j) {
    return {j.at("i").get<int>(), j.at("k").get<int>(), j.at("var").get<int>(), jr(j.at("value"))};
}

FiberKind parse_kind(const std::string& s) {
    for (auto k : {FiberKind::Torus, FiberKind::S3, FiberKind::U2, FiberKind::U2xT2, FiberKind::UnknownNonsmooth})
        if (to_string(k) == s) return k;
    throw InvalidInput("unknown fiber kind '" + s + "'");
}

json series_json(const NovikovSeries& s) {
    json terms = json::array();
    for (const auto& t : s.terms())
        terms.push_back({t.exponent.numerator(), t.exponent.denominator(), t.coeff.real(), t.coeff.imag()});
    return terms;
}

NovikovSeries json_series(const json& j, const Rational& cutoff) {
    NovikovSeries s(cutoff);
    for (const auto& t : j)
        s.add_term(Rational(t.at(0).get<std::int64_t>(), t.at(1).get<std::int64_t>()),
                   {t.at(2).get<double>(), t.at(3).get<double>()});
    return s;
}

}  // namespace

json to_json(const PolytopeReport& r) {
    const auto& p = r.polytope;
    json ineq = json::array();
    for (const auto& q : p.inequalities)
        ineq.push_back({{"upper", entry_json(q.upper)}, {"lower", entry_json(q.lower)}, {"facet", q.facet}});
    json j = {{"space", r.space},
              {"shape", {{"steps", p.shape.steps}, {"n", p.shape.n}}},
              {"profile", rvec(p.profile.values)},
              {"dimension", p.dimension()},
              {"facet_count", p.facet_count()},
              {"inequalities", ineq}};
    if (r.point) {
        json d = json::array();
        for (const auto& di : r.point->diamonds) d.push_back({{"level", di.level}, {"pos", di.pos}});
        j["point"] = {{"u", r.point->u.u}, {"inside", r.point->inside}, {"active", r.point->active}, {"diamonds", d}};
        if (r.point->fiber) {
            const auto& f = *r.point->fiber;
            j["fiber"] = {{"kind", to_string(f.kind)},
                          {"real_dimension", f.real_dimension},
                          {"lagrangian", f.lagrangian},
                          {"annotations", f.annotations}};
        }
    }
    return j;
}

PolytopeReport polytope_report_from_json(const json& j) {
    PolytopeReport r;
    r.space = j.at("space");
    auto& p = r.polytope;
    p.shape.steps = j.at("shape").at("steps").get<std::vector<int>>();
    p.shape.n = j.at("shape").at("n");
    p.profile.values = jrvec(j.at("profile"));
    p.index = index_set(p.shape, p.profile);
    for (const auto& q : j.at("inequalities"))
        p.inequalities.push_back({json_entry(q.at("upper")), json_entry(q.at("lower")), q.at("facet").get<bool>()});
    if (j.contains("point")) {
        const auto& pj = j.at("point");
        PointReport pr;
        pr.u.u = pj.at("u").get<std::vector<double>>();
        pr.inside = pj.at("inside");
        pr.active = pj.at("active").get<std::vector<int>>();
        for (const auto& d : pj.at("diamonds")) pr.diamonds.push_back({d.at("level").get<int>(), d.at("pos").get<int>()});
        if (j.contains("fiber")) {
            const auto& f = j.at("fiber");
            pr.fiber = FiberDescriptor{parse_kind(f.at("kind").get<std::string>()), f.at("real_dimension").get<int>(),
                                       f.at("lagrangian").get<bool>(),
                                       f.at("annotations").get<std::vector<std::string>>()};
        }
        r.point = pr;
    }
    return r;
}

json to_json(const PotentialReport& r) {
    json labels = json::array();
    for (const auto& l : r.potential.labels) labels.push_back({l.i, l.k});
    json terms = json::array();
    for (const auto& t : r.potential.terms)
        terms.push_back({{"coeff", cj(t.coeff)}, {"t_exp", rj(t.t_exp)}, {"y_exp", t.y_exp}});
    return {{"space", r.space}, {"lambda", rvec(r.lambda)}, {"text", r.text}, {"labels", labels}, {"terms", terms}};
}

PotentialReport potential_report_from_json(const json& j) {
    PotentialReport r;
    r.space = j.at("space");
    r.lambda = jrvec(j.at("lambda"));
    r.text = j.at("text");
    for (const auto& l : j.at("labels")) r.potential.labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
    for (const auto& t : j.at("terms"))
        r.potential.terms.push_back({jc(t.at("coeff")), jr(t.at("t_exp")), t.at("y_exp").get<std::vector<int>>()});
    return r;
}

json to_json(const CriticalReport& r) {
    json pts = json::array(), vals = json::array(), dets = json::array();
    for (const auto& p : r.points) {
        pts.push_back({{"y", cvec(p.y)}, {"residual", p.residual}});
        vals.push_back(cj(p.value));
        dets.push_back(cj(p.hessian_det));
    }
    json j = {{"space", r.space}, {"lambda", rvec(r.lambda)}, {"T0", r.T0},          {"seed", r.seed},
              {"starts", r.starts}, {"critical_points", pts},  {"critical_values", vals}, {"hessian_dets", dets}};
    if (!r.candidates.empty()) {
        json c = json::array();
        for (const auto& p : r.candidates)
            c.push_back({{"label", p.label},
                         {"residual", p.residual},
                         {"valuations", rvec(p.valuations)},
                         {"interior", p.interior},
                         {"nondegenerate", p.nondegenerate}});
        j["closed_form_candidates"] = c;
    }
    return j;
}

CriticalReport critical_report_from_json(const json& j) {
    CriticalReport r;
    r.space = j.at("space");
    r.lambda = jrvec(j.at("lambda"));
    r.T0 = j.at("T0");
    r.seed = j.at("seed");
    r.starts = j.at("starts");
    const auto& pts = j.at("critical_points");
    const auto& vals = j.at("critical_values");
    const auto& dets = j.at("hessian_dets");
    if (pts.size() != vals.size() || pts.size() != dets.size()) throw InvalidInput("critical report arrays disagree");
    for (size_t i = 0; i < pts.size(); ++i)
        r.points.push_back({jcvec(pts[i].at("y")), pts[i].at("residual").get<double>(), jc(vals[i]), jc(dets[i])});
    if (j.contains("closed_form_candidates"))
        for (const auto& c : j.at("closed_form_candidates"))
            r.candidates.push_back({c.at("label").get<std::string>(), c.at("residual").get<double>(),
                               jrvec(c.at("valuations")), c.at("interior").get<bool>(),
                               c.at("nondegenerate").get<bool>()});
    return r;
}

json to_json(const QHReport& r) {
    json j = {{"space", r.space}, {"q", cvec(r.q)}, {"eigenvalues", cvec(r.eigenvalues)}};
    if (r.matched) {
        j["lambda"] = rvec(r.lambda);
        j["T0"] = r.T0;
        j["tol"] = r.tol;
        j["critical_values"] = cvec(r.critical_values);
        j["matched_to_critical_values"] = *r.matched;
        j["pairing"] = r.pairing;
        j["worst"] = r.worst;
    }
    return j;
}

QHReport qh_report_from_json(const json& j) {
    QHReport r;
    r.space = j.at("space");
    r.q = jcvec(j.at("q"));
    r.eigenvalues = jcvec(j.at("eigenvalues"));
    if (j.contains("matched_to_critical_values")) {
        r.lambda = jrvec(j.at("lambda"));
        r.T0 = j.at("T0");
        r.tol = j.at("tol");
        r.critical_values = jcvec(j.at("critical_values"));
        r.matched = j.at("matched_to_critical_values").get<bool>();
        r.pairing = j.at("pairing").get<std::vector<int>>();
        r.worst = j.at("worst");
    }
    return r;
}

json to_json(const FloerReport& r) {
    const auto& d = r.complex.d;
    json rows = json::array();
    for (int i = 0; i < d.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < d.cols(); ++k) row.push_back(series_json(d(i, k)));
        rows.push_back(row);
    }
    json tors = json::array();
    for (const auto& e : r.hf.torsion) tors.push_back({e.numerator(), e.denominator()});
    return {{"space", r.space},
            {"lambda", rvec(r.lambda)},
            {"t", rj(r.t)},
            {"b", cj(r.b)},
            {"pair", r.pair},
            {"differential", {{"basis", r.complex.basis}, {"cutoff", rj(d.cutoff())}, {"entries", rows}}},
            {"hf",
             {{"ring", r.ring}, {"free_rank", r.hf.free_rank}, {"torsion", tors}, {"warnings", r.hf.warnings}}}};
}

FloerReport floer_report_from_json(const json& j) {
    FloerReport r;
    r.space = j.at("space");
    r.lambda = jrvec(j.at("lambda"));
    r.t = jr(j.at("t"));
    r.b = jc(j.at("b"));
    r.pair = j.at("pair");
    const auto& dj = j.at("differential");
    r.complex.basis = dj.at("basis").get<std::vector<std::string>>();
    const Rational cutoff = jr(dj.at("cutoff"));
    const auto& rows = dj.at("entries");
    const int n = static_cast<int>(rows.size());
    const int m = n ? static_cast<int>(rows.at(0).size()) : 0;
    r.complex.d = NovikovMatrix(n, m, cutoff);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) r.complex.d(i, k) = json_series(rows.at(i).at(k), cutoff);
    const auto& hj = j.at("hf");
    r.ring = hj.at("ring");
    r.hf.free_rank = hj.at("free_rank");
    for (const auto& e : hj.at("torsion")) r.hf.torsion.emplace_back(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>());
    r.hf.warnings = hj.at("warnings").get<std::vector<std::string>>();
    return r;
}

bool same(const NovikovSeries& a, const NovikovSeries& b) {
    if (a.cutoff() != b.cutoff() || a.terms().size() != b.terms().size()) return false;
    for (size_t i = 0; i < a.terms().size(); ++i)
        if (a.terms()[i].exponent != b.terms()[i].exponent || a.terms()[i].coeff != b.terms()[i].coeff) return false;
    return true;
}

bool same(const PolytopeReport& a, const PolytopeReport& b) {
    const auto &p = a.polytope, &q = b.polytope;
    if (a.space != b.space || p.shape.steps != q.shape.steps || p.shape.n != q.shape.n ||
        p.profile.values != q.profile.values || p.inequalities.size() != q.inequalities.size() || a.point != b.point)
        return false;
    auto eq = [](const GCEntry& x, const GCEntry& y) {
        return x.i == y.i && x.k == y.k && x.var == y.var && x.value == y.value;
    };
    for (size_t i = 0; i < p.inequalities.size(); ++i) {
        const auto &x = p.inequalities[i], &y = q.inequalities[i];
        if (!eq(x.upper, y.upper) || !eq(x.lower, y.lower) || x.facet != y.facet) return false;
    }
    return true;
}

bool same(const PotentialReport& a, const PotentialReport& b) {
    if (a.space != b.space || a.lambda != b.lambda || a.text != b.text ||
        a.potential.terms.size() != b.potential.terms.size() || a.potential.labels != b.potential.labels)
        return false;
    for (size_t i = 0; i < a.potential.terms.size(); ++i) {
        const auto &x = a.potential.terms[i], &y = b.potential.terms[i];
        if (x.coeff != y.coeff || x.t_exp != y.t_exp || x.y_exp != y.y_exp) return false;
    }
    return true;
}

bool same(const FloerReport& a, const FloerReport& b) {
    if (a.space != b.space || a.lambda != b.lambda || a.t != b.t || a.b != b.b || a.pair != b.pair ||
        a.ring != b.ring || a.complex.basis != b.complex.basis || a.hf.free_rank != b.hf.free_rank ||
        a.hf.torsion != b.hf.torsion || a.hf.warnings != b.hf.warnings)
        return false;
    const auto &d = a.complex.d, &e = b.complex.d;
    if (d.rows() != e.rows() || d.cols() != e.cols() || d.cutoff() != e.cutoff()) return false;
    for (int i = 0; i < d.rows(); ++i)
        for (int k = 0; k < d.cols(); ++k)
            if (!same(d(i, k), e(i, k))) return false;
    return true;
}

}  // namespace gcfloer
