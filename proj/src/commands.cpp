#include "cotilt/commands.hpp"

#include <optional>

#include "cotilt/expr.hpp"
#include "cotilt/parse.hpp"
#include "cotilt/registry.hpp"
#include "cotilt/theorems.hpp"

namespace cotilt {

namespace {

struct Session {
    AlgebraPresentation pres;
    AlgebraPtr alg;
    std::string u_expr;
    std::vector<std::string> s_names;
    std::string module_expr;
    std::string complex_text;
    int cap = 10;
    std::optional<DualityContext> ctx_;

    const DualityContext& ctx()
    {
        if (!ctx_) ctx_.emplace(alg, summands_from_expr(alg, u_expr), s_names, cap);
        return *ctx_;
    }
    FinModule module() const
    {
        if (module_expr.empty()) fail(Errc::InvalidArgument, "--module is required");
        return module_from_expr(alg, module_expr);
    }
    bool has_complex() const { return !complex_text.empty(); }
    Complex complex() const { return build_complex(alg, parse_complex(complex_text)); }
};

Session open_session(const Options& o)
{
    Session s;
    s.cap = o.cap_res;
    if (s.cap <= 0) fail(Errc::InvalidArgument, "--cap-res must be positive");
    if (!o.example.empty()) {
        const ExampleRecord& e = find_example(o.example);
        s.pres = parse_algebra(e.algebra);
        s.u_expr = e.u;
        s.s_names = e.s_names;
        s.module_expr = e.module;
        s.complex_text = e.complex;
    } else {
        if (o.algebra_file.empty()) fail(Errc::InvalidArgument, "--algebra or --example is required");
        s.pres = load_algebra(o.algebra_file);
        s.u_expr = "R";
    }
    s.alg = to_basis_algebra(s.pres);
    if (!o.u.empty()) {
        s.u_expr = o.u;
        s.s_names.clear();
    }
    if (!o.module.empty()) {
        s.module_expr = o.module;
        if (o.complex_file.empty()) s.complex_text.clear();
    }
    if (!o.complex_file.empty()) s.complex_text = read_file(o.complex_file);
    return s;
}

void header(Report& r, Session& s, bool with_ctx)
{
    r.set("algebra.vertices", s.alg->vertex_count());
    r.set("algebra.dim", s.alg->dim());
    if (with_ctx) {
        r.set("U", s.u_expr);
        r.set("S.dim", s.ctx().s()->dim());
    }
}

void add_complex(Report& r, const std::string& key, const Complex& c)
{
    for (int k = c.lo; k <= c.hi(); ++k) r.set(key + ".term." + std::to_string(k), module_name(c.term(k)));
}

int cmd_resolve(Session& s, Report& r)
{
    header(r, s, false);
    FinModule m = s.module();
    r.set("module", module_name(m));
    Resolution res = free_resolution(m, s.cap);
    for (int i = 0; i < static_cast<int>(res.terms.size()); ++i) r.set("resolution.term." + std::to_string(i), module_name(res.terms[i]));
    r.set("resolution.complete", res.complete);
    if (!res.complete) fail(Errc::CapExceeded, "resolution longer than " + std::to_string(s.cap));
    r.set("projdim", res.length());
    return 0;
}

int cmd_ext(Session& s, Report& r)
{
    header(r, s, true);
    const DualityContext& ctx = s.ctx();
    FinModule m = s.module();
    r.set("module", module_name(m));
    r.set("n_phi", ctx.n_phi());
    r.set("n_psi", ctx.n_psi());
    for (int i = 0; i <= ctx.n_phi(); ++i) r.set("ext." + std::to_string(i), module_name(ctx.r_phi(m, i)));
    return 0;
}

int cmd_dual(Session& s, Report& r)
{
    header(r, s, true);
    const DualityContext& ctx = s.ctx();
    if (s.has_complex() && s.module_expr.empty()) {
        Complex x = s.complex();
        Complex y = r_phi_complex(ctx, x);
        add_complex(r, "rphi", y);
        for (int k = y.lo; k <= y.hi(); ++k) r.set("rphi.H." + std::to_string(k), module_name(cohomology(y, k)));
        return 0;
    }
    FinModule m = s.module();
    FinModule p = ctx.phi(m);
    r.set("module", module_name(m));
    r.set("phi", module_name(p));
    r.set("psi_phi", module_name(ctx.psi(p)));
    return 0;
}

int cmd_eta(Session& s, Report& r)
{
    header(r, s, true);
    const DualityContext& ctx = s.ctx();
    FinModule m = s.module();
    ModuleMap e = ctx.eta(m);
    r.set("module", module_name(m));
    r.set("psi_phi", module_name(e.tgt));
    r.set("eta.rank", static_cast<long long>(rank(e.m)));
    r.set("eta.kernel", module_name(kernel(e).module));
    r.set("eta.cokernel", module_name(cokernel(e).module));
    r.set("eta.iso", is_invertible(e.m));
    return 0;
}

int cmd_reflexive(Session& s, Report& r)
{
    header(r, s, true);
    const DualityContext& ctx = s.ctx();
    FinModule m = s.module();
    bool refl = ctx.is_reflexive(m);
    r.set("module", module_name(m));
    r.set("reflexive", refl);
    r.set("psi_phi_acyclic", ctx.is_psi_phi_acyclic(m));
    return refl ? 0 : 1;
}

int cmd_dreflexive(Session& s, Report& r)
{
    header(r, s, true);
    const DualityContext& ctx = s.ctx();
    Complex x = s.has_complex() && s.module_expr.empty() ? s.complex() : stalk(s.module());
    add_complex(r, "input", x);
    DerivedUnit u = derived_unit(ctx, x);
    add_complex(r, "G", u.second.complex);
    auto degs = g_cohomology_degrees(u);
    r.set("G.degrees", degrees_string(degs));
    for (int k : degs) r.set("G.H." + std::to_string(k), module_name(cohomology(u.second.complex, k)));
    bool d = is_d_reflexive(ctx, x);
    r.set("dreflexive", d);
    return d ? 0 : 1;
}

int cmd_spectral(Session& s, Report& r)
{
    header(r, s, true);
    const DualityContext& ctx = s.ctx();
    FinModule a = s.module();
    r.set("module", module_name(a));
    SecondSpectral sp = second_spectral(ctx, a);
    add_spectral(r, sp);
    bool oracle = true;
    for (int j = 0; j <= sp.n_first; ++j) {
        FinModule rj = ctx.r_phi(a, j);
        for (int p = 0; p <= sp.n_second; ++p) oracle = oracle && is_isomorphic(sp.page(2).cell(p, -j), ctx.r_psi(rj, p));
    }
    r.set("E2.oracle", oracle ? "pass" : "fail");
    return oracle ? 0 : 1;
}

void add_lines(Report& r, const std::string& key, const std::vector<CheckLine>& v)
{
    for (const auto& l : v) {
        r.set(key + "." + l.name, l.ok);
        if (!l.detail.empty()) r.set(key + "." + l.name + ".detail", l.detail);
    }
}

void add_sequence(Report& r, const std::string& key, const ExactSequence& e)
{
    for (std::size_t k = 0; k < e.modules.size(); ++k) r.set(key + "." + std::to_string(k), module_name(e.modules[k]));
    for (std::size_t k = 0; k < e.maps.size(); ++k) r.set(key + ".rank." + std::to_string(k), static_cast<long long>(rank(e.maps[k])));
    r.set(key + ".exact", e.exact);
}

int cmd_verify(Session& s, const std::string& thm, Report& r)
{
    header(r, s, true);
    const DualityContext& ctx = s.ctx();
    r.set("theorem", thm);
    bool ok = false;
    if (thm == "cotilting") {
        CotiltingReport c = ctx.partial_cotilting();
        r.set("injdim_left", c.injdim_left ? std::to_string(*c.injdim_left) : "inf");
        r.set("injdim_right", c.injdim_right ? std::to_string(*c.injdim_right) : "inf");
        r.set("ext_left", c.ext_left);
        r.set("ext_right", c.ext_right);
        r.set("psi_acyclic_free", c.psi_acyclic_free);
        for (std::size_t k = 0; k < c.failures.size(); ++k) r.set("failure." + std::to_string(k), c.failures[k]);
        ok = c.ok();
    } else if (thm == "lemma") {
        Complex x = s.has_complex() && s.module_expr.empty() ? s.complex() : stalk(s.module());
        LemmaReport l = lemma_lastt_check(ctx, x);
        r.set("applicable", l.applicable);
        if (l.applicable) {
            for (std::size_t k = 0; k < l.rho.size(); ++k) r.set("rho." + std::to_string(x.lo + static_cast<int>(k)), l.rho[k]);
            r.set("cohomology_dreflexive", l.cohomology_d_reflexive);
            r.set("condition", l.condition);
        }
        ok = l.agree();
    } else if (thm == "classes") {
        ModExpr e = parse_module_expr(s.module_expr);
        std::vector<ModExpr> terms = e.kind == ModExpr::Kind::Sum ? e.args : std::vector<ModExpr>{e};
        std::vector<FinModule> ms;
        for (const auto& t : terms) ms.push_back(evaluate(s.alg, t));
        auto cls = cotilting_classes(ctx, ms);
        ok = true;
        for (std::size_t k = 0; k < ms.size(); ++k) {
            std::string key = "class." + format_module_expr(terms[k]);
            r.set(key, torsion_class_name(cls[k].cls));
            r.set(key + ".round_trip", cls[k].round_trip);
            ok = ok && (cls[k].round_trip || cls[k].cls == TorsionClass::NotDReflexive);
        }
    } else {
        FinModule a = s.module();
        r.set("module", module_name(a));
        if (thm == "legame") {
            ok = verify_legame(ctx, a);
            r.set("eta_factors", ok);
        } else if (thm == "driflessivi") {
            DriflessiviReport d = verify_driflessivi(ctx, a);
            r.set("dreflexive", d.d_reflexive);
            r.set("psi_r1phi_zero", d.psi_r1phi_zero);
            r.set("h0_unit_iso", d.h0_unit_iso);
            ok = d.agree();
        } else if (thm == "bb" || thm == "last") {
            TheoremReport t = thm == "bb" ? bb_check(ctx, a) : thm_last_check(ctx, a);
            r.set("dreflexive", t.d_reflexive);
            add_lines(r, "condition", t.conditions);
            add_lines(r, "consequence", t.consequences);
            r.set("forward", t.forward());
            r.set("converse", t.converse());
            ok = t.ok();
        } else if (thm == "gamma") {
            ModuleMap g = gamma_map(ctx, a);
            ModuleMap e = ctx.eta(a);
            r.set("gamma.source", module_name(g.src));
            r.set("gamma.rank", static_cast<long long>(rank(g.m)));
            r.set("psi_phi", module_name(e.tgt));
            ok = is_exact_sequence({g.src, a, e.tgt}, {g.m, e.m});
            r.set("sequence_exact", ok);
        } else if (thm == "adjoint") {
            FinModule b = ctx.r_phi(a, 1);
            r.set("b", module_name(b));
            AdjointReport ad = verify_adjoint_r1(ctx, a, b);
            r.set("left", ad.left);
            r.set("right", ad.right);
            ok = ad.left && ad.right;
        } else if (thm == "lastt") {
            auto viol = lastt_violations(ctx, a);
            for (const auto& v : viol)
                r.set(std::string(v.kind == 0 ? "violation.RPsiRPhi." : "violation.RPhiRPsiRPhi.") + std::to_string(v.i) + "." +
                          std::to_string(v.j),
                      module_name(v.module));
            if (!viol.empty()) {
                r.set("hypothesis", "violated");
                for (int i = 0; i <= std::min(ctx.n_phi(), ctx.n_psi()); ++i)
                    r.set("RiPsiRiPhi." + std::to_string(i), module_name(ctx.r_psi(ctx.r_phi(a, i), i)));
                return 1;
            }
            FiltrationReport f = thm_lastt_filtration(ctx, a);
            r.set("dreflexive", f.d_reflexive);
            r.set("r_phi_dreflexive", f.r_phi_d_reflexive);
            for (const auto& ff : f.factors) {
                std::string k = "factor." + std::to_string(ff.i);
                r.set(k, module_name(ff.factor));
                r.set(k + ".expected", module_name(ff.expected));
                r.set(k + ".iso", ff.iso);
            }
            ok = f.ok();
        } else if (thm == "n2") {
            N2Report n = n2_sequences(ctx, a);
            r.set("vanishing", n.vanishing);
            add_sequence(r, "sequence1", n.first);
            add_sequence(r, "sequence2", n.second);
            ok = n.first.exact && n.second.exact;
        } else {
            fail(Errc::InvalidArgument, "unknown theorem " + thm +
                                            " (cotilting, legame, driflessivi, bb, last, gamma, adjoint, classes, lastt, n2, lemma)");
        }
    }
    r.set("verified", ok);
    return ok ? 0 : 1;
}

int cmd_paper_example(const Options& o, Report& r)
{
    if (o.args.empty()) fail(Errc::InvalidArgument, "paper-example needs an id or all");
    std::vector<const ExampleRecord*> todo;
    if (o.args[0] == "all")
        for (const auto& e : registry()) todo.push_back(&e);
    else
        for (const auto& id : o.args) todo.push_back(&find_example(id));
    int passed = 0;
    for (const auto* e : todo) {
        Report one;
        passed += run_example(*e, one, o.seed, o.cap_res);
        r.append(one, e->id + ".");
    }
    r.set("examples.run", static_cast<int>(todo.size()));
    r.set("examples.passed", passed);
    return passed == static_cast<int>(todo.size()) ? 0 : 1;
}

int cmd_print(Session& s, Report& r)
{
    r.text(format_algebra(s.pres));
    if (!s.module_expr.empty()) r.set("module", format_module_expr(parse_module_expr(s.module_expr)));
    if (s.has_complex()) r.text(format_complex(parse_complex(s.complex_text)));
    return 0;
}

}  // namespace

bool is_input_error(Errc c)
{
    switch (c) {
    case Errc::SyntaxError:
    case Errc::SemanticError:
    case Errc::UnknownExample:
    case Errc::InvalidArgument:
    case Errc::NonAdmissible:
    case Errc::InfiniteDimensional:
        return true;
    default:
        return false;
    }
}

int run_command(const Options& o, std::ostream& out)
{
    Report r;
    int code = 0;
    try {
        if (o.command == "paper-example") {
            code = cmd_paper_example(o, r);
        } else {
            Session s = open_session(o);
            if (o.command == "resolve") code = cmd_resolve(s, r);
            else if (o.command == "ext") code = cmd_ext(s, r);
            else if (o.command == "dual") code = cmd_dual(s, r);
            else if (o.command == "eta") code = cmd_eta(s, r);
            else if (o.command == "reflexive") code = cmd_reflexive(s, r);
            else if (o.command == "dreflexive") code = cmd_dreflexive(s, r);
            else if (o.command == "spectral") code = cmd_spectral(s, r);
            else if (o.command == "print") code = cmd_print(s, r);
            else if (o.command == "verify") {
                if (o.args.empty()) fail(Errc::InvalidArgument, "verify needs a theorem name");
                code = cmd_verify(s, o.args[0], r);
            } else {
                fail(Errc::InvalidArgument, "unknown subcommand " + o.command);
            }
        }
    } catch (const Error& e) {
        r.set("error", errc_name(e.code()));
        r.set("message", e.what());
        code = is_input_error(e.code()) ? 2 : 1;
    }
    r.set("exit", code);
    out << r.render(o.format);
    return code;
}

}  // namespace cotilt
