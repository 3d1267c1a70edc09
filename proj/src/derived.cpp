#include "cotilt/derived.hpp"

#include <algorithm>

namespace cotilt {

FinModule Complex::term(int k) const
{
    if (!in_range(k)) return FinModule::zero(alg, side);
    return terms[k - lo];
}

Matrix Complex::diff(int k) const
{
    if (in_range(k) && in_range(k + 1)) return diffs[k - lo];
    return zeros(term(k + 1).dim(), term(k).dim());
}

Complex make_complex(AlgebraPtr alg, Side side, int lo, std::vector<FinModule> terms, std::vector<Matrix> diffs)
{
    if (!terms.empty() && diffs.size() + 1 != terms.size()) fail(Errc::InvalidArgument, "complex needs one differential between consecutive terms");
    Complex c{std::move(alg), side, lo, std::move(terms), std::move(diffs)};
    if (!is_complex(c)) fail(Errc::InvalidArgument, "differentials do not form a complex");
    return c;
}

Complex stalk(const FinModule& m, int degree) { return {m.algebra(), m.side(), degree, {m}, {}}; }

bool is_complex(const Complex& c)
{
    for (const auto& t : c.terms)
        if (t.algebra() != c.alg) return false;
    for (int k = c.lo; k < c.hi(); ++k) {
        ModuleMap d = c.diff_map(k);
        if (d.m.rows() != d.tgt.dim() || d.m.cols() != d.src.dim()) return false;
        if (!is_homomorphism(d)) return false;
        if (k + 1 < c.hi() && !is_zero(Matrix(c.diff(k + 1) * d.m))) return false;
    }
    return true;
}

SubQuot cohomology_sq(const Complex& c, int i)
{
    FinModule t = c.term(i);
    Matrix cyc = kernel(c.diff_map(i)).incl;
    return subquotient(t, cyc, c.diff(i - 1));
}

FinModule cohomology(const Complex& c, int i) { return cohomology_sq(c, i).module; }

ModuleMap induced_on_cohomology(const ComplexMap& f, int i)
{
    SubQuot hs = cohomology_sq(f.src, i), ht = cohomology_sq(f.tgt, i);
    return {hs.module, ht.module, ht.to_quot * f.at(i) * hs.lift};
}

Index graded_rank(const ModuleMap& f)
{
    Index r = 0;
    for (int v = 0; v < f.src.algebra()->vertex_count(); ++v) {
        auto rows = f.tgt.block(v), cols = f.src.block(v);
        if (rows.empty() || cols.empty()) continue;
        Matrix b(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) b(static_cast<Index>(i), static_cast<Index>(j)) = f.m(rows[i], cols[j]);
        r += rank(b);
    }
    return r;
}

bool is_exact_at(const Complex& c, int i)
{
    return graded_rank(c.diff_map(i - 1)) + graded_rank(c.diff_map(i)) == c.term(i).dim();
}

Matrix ComplexMap::at(int k) const
{
    auto it = comp.find(k);
    if (it != comp.end()) return it->second;
    return zeros(tgt.term(k).dim(), src.term(k).dim());
}

bool is_chain_map(const ComplexMap& f)
{
    const int lo = std::min(f.src.lo, f.tgt.lo) - 1, hi = std::max(f.src.hi(), f.tgt.hi()) + 1;
    for (int k = lo; k <= hi; ++k) {
        if (!is_homomorphism({f.src.term(k), f.tgt.term(k), f.at(k)})) return false;
        if (f.at(k + 1) * f.src.diff(k) != f.tgt.diff(k) * f.at(k)) return false;
    }
    return true;
}

ComplexMap identity_map(const Complex& c)
{
    ComplexMap f{c, c, {}};
    for (int k = c.lo; k <= c.hi(); ++k) f.comp[k] = identity(c.term(k).dim());
    return f;
}

Complex cone(const ComplexMap& f)
{
    const Complex& a = f.src;
    const Complex& b = f.tgt;
    const int lo = std::min(a.lo - 1, b.lo), hi = std::max(a.hi() - 1, b.hi());
    Complex c{b.alg, b.side, lo, {}, {}};
    for (int k = lo; k <= hi; ++k) c.terms.push_back(direct_sum({a.term(k + 1), b.term(k)}).module);
    for (int k = lo; k < hi; ++k) {
        const Index a1 = a.term(k + 1).dim(), b0 = b.term(k).dim();
        const Index a2 = a.term(k + 2).dim(), b1 = b.term(k + 1).dim();
        Matrix d = Matrix::Zero(a2 + b1, a1 + b0);
        d.topLeftCorner(a2, a1) = -a.diff(k + 1);
        d.bottomLeftCorner(b1, a1) = f.at(k + 1);
        d.bottomRightCorner(b1, b0) = b.diff(k);
        c.diffs.push_back(std::move(d));
    }
    return c;
}

bool is_quasi_iso(const ComplexMap& f, int from, int to)
{
    Complex c = cone(f);
    for (int k = from; k <= to; ++k)
        if (!is_exact_at(c, k)) return false;
    return true;
}

bool is_quasi_iso(const ComplexMap& f)
{
    return is_quasi_iso(f, std::min(f.src.lo - 1, f.tgt.lo) - 1, std::max(f.src.hi(), f.tgt.hi()) + 1);
}

Truncation truncate(const Complex& x, int n, Trunc kind)
{
    Truncation t;
    Complex& c = t.complex;
    c.alg = x.alg;
    c.side = x.side;
    switch (kind) {
    case Trunc::TauGt:
    case Trunc::TauLe: {
        const bool upper = kind == Trunc::TauGt;
        int lo = upper ? std::max(x.lo, n + 1) : x.lo;
        int hi = upper ? x.hi() : std::min(x.hi(), n);
        c.lo = lo;
        for (int k = lo; k <= hi; ++k) c.terms.push_back(x.term(k));
        for (int k = lo; k < hi; ++k) c.diffs.push_back(x.diff(k));
        if (c.terms.empty()) c.lo = upper ? n + 1 : n;
        t.map = upper ? ComplexMap{c, x, {}} : ComplexMap{x, c, {}};
        for (int k = lo; k <= hi; ++k) t.map.comp[k] = identity(x.term(k).dim());
        break;
    }
    case Trunc::SigmaLe: {
        Sub z = kernel(x.diff_map(n));
        c.lo = std::min(x.lo, n);
        for (int k = c.lo; k < n; ++k) c.terms.push_back(x.term(k));
        c.terms.push_back(z.module);
        for (int k = c.lo; k < n - 1; ++k) c.diffs.push_back(x.diff(k));
        if (n > c.lo) c.diffs.push_back(z.retract * x.diff(n - 1));
        t.map = {c, x, {}};
        for (int k = c.lo; k < n; ++k) t.map.comp[k] = identity(x.term(k).dim());
        t.map.comp[n] = z.incl;
        break;
    }
    case Trunc::SigmaGt: {
        Quot q = quotient(x.term(n), kernel(x.diff_map(n)).incl);
        c.lo = n;
        c.terms.push_back(q.module);
        for (int k = n + 1; k <= x.hi(); ++k) c.terms.push_back(x.term(k));
        if (x.hi() > n) c.diffs.push_back(x.diff(n) * q.section);
        for (int k = n + 1; k < x.hi(); ++k) c.diffs.push_back(x.diff(k));
        t.map = {x, c, {}};
        t.map.comp[n] = q.proj;
        for (int k = n + 1; k <= x.hi(); ++k) t.map.comp[k] = identity(x.term(k).dim());
        break;
    }
    }
    if (!is_complex(c)) fail(Errc::InvalidArgument, "truncation failed to produce a complex");
    return t;
}

Replacement projective_replacement(const Complex& x, int depth)
{
    bool free = true;
    for (const auto& t : x.terms) free = free && t.projective().has_value();
    if (free) return {x, identity_map(x), true};

    std::map<int, FinModule> p;
    std::map<int, Matrix> d, q;  // d[k]: P^k -> P^{k+1}
    const AlgebraPtr& a = x.alg;
    FinModule p1 = FinModule::zero(a, x.side), p2 = FinModule::zero(a, x.side);
    Matrix d1 = zeros(0, 0), q1 = zeros(x.term(x.hi() + 1).dim(), 0);
    bool complete = false;
    int k = x.hi();
    for (; k >= x.lo - depth; --k) {
        Sub z = kernel({p1, p2, d1});
        FinModule xk = x.term(k);
        DirectSum s = direct_sum({z.module, xk});
        const Index dz = z.module.dim();
        Matrix h(x.term(k + 1).dim(), dz + xk.dim());
        h.leftCols(dz) = q1 * z.incl;
        h.rightCols(xk.dim()) = -x.diff(k);
        Sub t = kernel({s.module, x.term(k + 1), h});
        if (t.module.dim() == 0 && k < x.lo) {
            complete = true;
            break;
        }
        ModuleMap c = free_cover(t.module);
        Matrix into = t.incl * c.m;
        p[k] = c.src;
        d[k] = z.incl * into.topRows(dz);
        q[k] = into.bottomRows(xk.dim());
        p2 = p1;
        p1 = c.src;
        d1 = d[k];
        q1 = q[k];
    }
    Replacement r;
    r.complete = complete;
    Complex& pc = r.p;
    pc.alg = a;
    pc.side = x.side;
    if (p.empty()) {
        pc.lo = x.lo;
    } else {
        pc.lo = p.begin()->first;
        for (auto& [deg, m] : p) pc.terms.push_back(m);
        for (int j = pc.lo; j < pc.hi(); ++j) pc.diffs.push_back(d[j]);
    }
    r.q = {pc, x, q};
    return r;
}

DualComplex dual_complex(const HomDual& d, const Complex& x)
{
    DualComplex out;
    Complex& c = out.complex;
    c.alg = d.u_dst.algebra();
    c.side = d.dst_side;
    c.lo = -x.hi();
    for (int k = x.lo; k <= x.hi(); ++k) out.images.emplace(k, dualize(d, x.term(k)));
    for (int j = c.lo; j <= -x.lo; ++j) c.terms.push_back(out.images.at(-j).module);
    // degree j -> j+1 is Hom(d_x^{-j-1}, U)
    for (int j = c.lo; j < -x.lo; ++j) {
        int k = -j - 1;
        c.diffs.push_back(dualize_map(d, x.diff_map(k), out.images.at(k + 1), out.images.at(k)).m);
    }
    if (x.terms.empty()) c.lo = -x.lo;
    return out;
}

DerivedUnit derived_unit(const HomDual& first, const HomDual& second, const Complex& x, int n_first)
{
    DerivedUnit u;
    const int depth = n_first + 2;
    u.rep = projective_replacement(x, depth);
    u.first = dual_complex(first, u.rep.p);
    u.second = dual_complex(second, u.first.complex);
    const Complex& p = u.rep.p;
    u.eta_hat = {p, u.second.complex, {}};
    for (int k = p.lo; k <= p.hi(); ++k)
        u.eta_hat.comp[k] = evaluation(u.first.images.at(k), u.second.images.at(-k)).m;
    u.valid_lo = u.rep.complete ? std::min(p.lo, x.lo) - 2 : x.lo - depth + 1;
    u.valid_hi = x.hi() + 1;
    return u;
}

namespace {

void require_acyclic(const DualityContext& ctx)
{
    if (!ctx.projectives_acyclic())
        fail(Errc::AcyclicityUnavailable, "Hom(P, U) is not acyclic for Hom(-, U) on some projective P");
}

void require_acyclic_right(const DualityContext& ctx)
{
    require_acyclic(ctx);
    for (int v = 0; v < ctx.s()->vertex_count(); ++v)
        if (!ctx.is_phi_acyclic(ctx.psi(projective(ctx.s(), v, Side::Right))))
            fail(Errc::AcyclicityUnavailable, "Hom(Q, U) is not acyclic for Hom(-, U) on some projective Q over End(U)");
}

}  // namespace

DerivedUnit derived_unit(const DualityContext& ctx, const Complex& x)
{
    require_acyclic(ctx);
    return derived_unit(ctx.phi_side(), ctx.psi_side(), x, ctx.n_phi());
}

DerivedUnit derived_unit_right(const DualityContext& ctx, const Complex& y)
{
    require_acyclic_right(ctx);
    return derived_unit(ctx.psi_side(), ctx.phi_side(), y, ctx.n_psi());
}

Complex r_phi_complex(const DualityContext& ctx, const Complex& x)
{
    require_acyclic(ctx);
    return dual_complex(ctx.phi_side(), projective_replacement(x, ctx.n_phi() + 2).p).complex;
}

Complex r_psi_complex(const DualityContext& ctx, const Complex& y)
{
    require_acyclic_right(ctx);
    return dual_complex(ctx.psi_side(), projective_replacement(y, ctx.n_psi() + 2).p).complex;
}

bool is_d_reflexive(const DualityContext& ctx, const Complex& x)
{
    DerivedUnit u = derived_unit(ctx, x);
    return is_quasi_iso(u.eta_hat, u.valid_lo, u.valid_hi);
}

bool is_d_reflexive_object(const DualityContext& ctx, const FinModule& m) { return is_d_reflexive(ctx, stalk(m)); }

bool is_d_reflexive_right(const DualityContext& ctx, const Complex& y)
{
    DerivedUnit u = derived_unit_right(ctx, y);
    return is_quasi_iso(u.eta_hat, u.valid_lo, u.valid_hi);
}

std::vector<int> g_cohomology_degrees(const DerivedUnit& u)
{
    std::vector<int> out;
    const Complex& g = u.second.complex;
    for (int k = std::max(g.lo, u.valid_lo); k <= std::min(g.hi(), u.valid_hi); ++k)
        if (!is_exact_at(g, k)) out.push_back(k);
    return out;
}

std::optional<std::vector<Matrix>> auto_differentials(const std::vector<FinModule>& terms, const std::vector<bool>& automatic,
                                                      const std::vector<std::optional<Vector>>& coeffs, int* failed_at)
{
    std::vector<Matrix> out;
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        const FinModule& s = terms[k];
        const FinModule& t = terms[k + 1];
        HomSpace h = hom_space(s, t);
        if (!automatic[k]) {
            const Vector& c = *coeffs[k];
            if (c.size() != h.dim()) fail(Errc::SemanticError, "differential " + std::to_string(k) + " needs " + std::to_string(h.dim()) + " coefficients");
            out.push_back(h.combine(c, t.dim(), s.dim()));
            continue;
        }
        Matrix v = identity(h.dim());
        if (k > 0 && h.dim() > 0) {
            Matrix cond(terms[k + 1].dim() * terms[k - 1].dim(), h.dim());
            for (int i = 0; i < h.dim(); ++i) cond.col(i) = vectorize(Matrix(h.basis[i] * out.back()));
            v = kernel_basis(cond);
        }
        if (v.cols() > 1 && t.algebra()->field().is_rational()) {
            Quot top = quotient(t, radical_span(t, 1));
            Matrix cond(top.module.dim() * s.dim(), v.cols());
            for (Index i = 0; i < v.cols(); ++i)
                cond.col(i) = vectorize(Matrix(top.proj * h.combine(v.col(i), t.dim(), s.dim())));
            v = v * kernel_basis(cond);
        }
        if (v.cols() > 1) {
            if (failed_at) *failed_at = static_cast<int>(k);
            return std::nullopt;
        }
        out.push_back(v.cols() == 0 ? zeros(t.dim(), s.dim()) : h.combine(v.col(0), t.dim(), s.dim()));
    }
    return out;
}

}  // namespace cotilt
