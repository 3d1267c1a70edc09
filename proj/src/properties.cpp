#include "cotilt/properties.hpp"

namespace cotilt {

namespace {

Vector random_coeffs(Rng& rng, int n, const Field& f)
{
    Vector c(n);
    for (int k = 0; k < n; ++k) c(k) = f(static_cast<long>(rng() % 7) - 3);
    return c;
}

FinModule random_projective(const AlgebraPtr& a, Rng& rng, Side side)
{
    std::vector<int> verts;
    int count = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < count; ++k) verts.push_back(static_cast<int>(rng() % a->vertex_count()));
    return projective_sum(a, verts, side);
}

}  // namespace

ModuleMap random_map(const FinModule& m, const FinModule& n, Rng& rng)
{
    HomSpace h = hom_space(m, n);
    if (h.dim() == 0) return zero_map(m, n);
    return {m, n, h.combine(random_coeffs(rng, h.dim(), m.algebra()->field()), n.dim(), m.dim())};
}

FinModule random_module(const AlgebraPtr& a, Rng& rng, Side side)
{
    FinModule p = random_projective(a, rng, side);
    FinModule q = random_projective(a, rng, side);
    ModuleMap f = random_map(q, p, rng);
    // keep the image in the radical so the cokernel keeps the whole top
    Matrix rad_part = radical_span(p);
    Matrix img = f.m;
    if (rad_part.cols() > 0 && rank(Matrix(img)) > 0) {
        Matrix both(p.dim(), img.cols() + rad_part.cols());
        both << img, rad_part;
        if (rank(both) > rank(rad_part)) img = zeros(p.dim(), 0);
    }
    FinModule c = quotient(p, img).module;
    return side == Side::Right ? c.with_side(Side::Right) : c;
}

ShortExact random_ses(const AlgebraPtr& a, Rng& rng)
{
    FinModule m = random_module(a, rng);
    FinModule n = random_module(a, rng);
    ModuleMap f = random_map(m, n, rng);
    return {kernel(f).module, m, image(f).module};
}

Complex random_complex(const AlgebraPtr& a, Rng& rng, int lo)
{
    FinModule m0 = random_module(a, rng), m1 = random_module(a, rng), m2 = random_module(a, rng);
    ModuleMap f = random_map(m0, m1, rng);
    Quot c = cokernel(f);
    ModuleMap h = random_map(c.module, m2, rng);
    Matrix g = h.m * c.proj;
    return make_complex(a, Side::Left, lo, {m0, m1, m2}, {f.m, g});
}

void PropertyResult::record(bool pass, const std::string& what)
{
    ++cases;
    if (!pass) {
        if (failures == 0) first_failure = what;
        ++failures;
    }
}

PropertyResult prop_adjunction(const std::vector<const DualityContext*>& ctxs, int draws, Rng& rng)
{
    PropertyResult res{"adjunction"};
    for (const DualityContext* ctx : ctxs) {
        const AlgebraPtr& a = ctx->lambda();
        for (int t = 0; t < draws; ++t) {
            FinModule m = random_module(a, rng);
            FinModule n = random_module(a, rng);
            DualImage pm = dualize(ctx->phi_side(), m);
            DualImage spm = dualize(ctx->psi_side(), pm.module);
            DualImage pspm = dualize(ctx->phi_side(), spm.module);
            ModuleMap eta = evaluation(pm, spm);
            ModuleMap xi = evaluation(spm, pspm);
            ModuleMap phi_eta = dualize_map(ctx->phi_side(), eta, pspm, pm);
            bool tri = Matrix(phi_eta.m * xi.m) == identity(pm.module.dim());
            // the other identity on B = Φ(n)
            DualImage b = dualize(ctx->phi_side(), n);
            DualImage sb = dualize(ctx->psi_side(), b.module);
            DualImage psb = dualize(ctx->phi_side(), sb.module);
            DualImage spsb = dualize(ctx->psi_side(), psb.module);
            ModuleMap xi_b = evaluation(sb, psb);
            ModuleMap eta_sb = evaluation(psb, spsb);
            ModuleMap psi_xi = dualize_map(ctx->psi_side(), xi_b, spsb, sb);
            bool tri2 = Matrix(psi_xi.m * eta_sb.m) == identity(sb.module.dim());
            ModuleMap f = random_map(m, n, rng);
            ModuleMap gf = ctx->psi_map(ctx->phi_map(f));
            bool nat = Matrix(gf.m * ctx->eta(m).m) == Matrix(ctx->eta(n).m * f.m);
            res.record(tri && tri2 && nat, dim_vector_string(m));
        }
    }
    return res;
}

PropertyResult prop_thickness(const DualityContext& ctx, int sequences, Rng& rng)
{
    PropertyResult res{"thickness"};
    const AlgebraPtr& a = ctx.lambda();
    for (int t = 0; res.cases < sequences && t < 20 * sequences; ++t) {
        ShortExact e = random_ses(a, rng);
        bool l = is_d_reflexive_object(ctx, e.left);
        bool m = is_d_reflexive_object(ctx, e.mid);
        bool r = is_d_reflexive_object(ctx, e.right);
        if (l + m + r < 2) continue;
        res.record(l && m && r, dim_vector_string(e.left) + " " + dim_vector_string(e.mid) + " " + dim_vector_string(e.right));
    }
    return res;
}

PropertyResult prop_spectral(const DualityContext& ctx, const std::vector<FinModule>& modules)
{
    PropertyResult res{"spectral"};
    for (const auto& a : modules) {
        SecondSpectral sp = second_spectral(ctx, a);
        const RowSpectral& ss = *sp.ss;
        bool ok = true;
        for (int j = 0; j <= sp.n_first; ++j) {
            FinModule rj = ctx.r_phi(a, j);
            for (int p = 0; p <= sp.n_second; ++p) ok = ok && is_isomorphic(sp.page(2).cell(p, -j), ctx.r_psi(rj, p));
        }
        for (int s = ss.q_lo(); s <= ss.p_hi(); ++s) {
            Index sum = 0;
            for (int p = ss.p_lo(); p <= ss.p_hi(); ++p)
                if (s - p >= ss.q_lo() && s - p <= ss.q_hi()) sum += sp.lim.cell(p, s - p).dim();
            ok = ok && sum == ss.cohomology(s).module.dim();
        }
        res.record(ok, dim_vector_string(a));
    }
    return res;
}

PropertyResult prop_low_dimension(const DualityContext& ctx, int complexes, Rng& rng)
{
    PropertyResult res{"low_dimension"};
    for (int t = 0; t < complexes; ++t) {
        Complex x = random_complex(ctx.lambda(), rng);
        bool all = true;
        for (int i = x.lo; i <= x.hi(); ++i) all = all && is_d_reflexive_object(ctx, cohomology(x, i));
        res.record(is_d_reflexive(ctx, x) == all, "complex " + std::to_string(t));
    }
    return res;
}

PropertyResult prop_adjoint_r1(const DualityContext& ctx, int pairs, Rng& rng)
{
    PropertyResult res{"adjoint_r1"};
    for (int t = 0; res.cases < pairs && t < 10 * pairs; ++t) {
        FinModule a = random_module(ctx.lambda(), rng);
        FinModule b = random_module(ctx.s(), rng, Side::Right);
        if (!is_d_reflexive_object(ctx, a) || !is_d_reflexive_right(ctx, stalk(b))) continue;
        AdjointReport r = verify_adjoint_r1(ctx, a, b);
        res.record(r.left && r.right, dim_vector_string(a) + " " + dim_vector_string(b));
    }
    return res;
}

}  // namespace cotilt
