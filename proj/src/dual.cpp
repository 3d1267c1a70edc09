#include "cotilt/dual.hpp"

#include <algorithm>

namespace cotilt {

namespace {

// Entry (r, c) of a * b.
Scalar product_entry(const Matrix& a, const Matrix& b, Index r, Index c)
{
    Scalar acc(0);
    for (Index j = 0; j < a.cols(); ++j)
        if (!a(r, j).is_zero() && !b(j, c).is_zero()) acc += a(r, j) * b(j, c);
    return acc;
}

// Coordinates of a * f in a hom space, reading only the free entries.
Vector coords_of_product(const HomSpace& h, const Matrix& a, const Matrix& f)
{
    Vector out(h.dim());
    for (int t = 0; t < h.dim(); ++t) out(t) = product_entry(a, f, h.free[t].first, h.free[t].second);
    return out;
}

}  // namespace

DualImage dualize(const HomDual& d, const FinModule& m)
{
    DualImage out{m, {}, hom_space(m, d.u_src)};
    const HomSpace& h = out.space;
    const FinModule& uy = d.u_dst;
    const AlgebraPtr& y = uy.algebra();
    std::vector<int> vert(h.dim());
    for (int k = 0; k < h.dim(); ++k) vert[k] = uy.vertex(h.free[k].first);
    std::vector<Matrix> acts;
    for (std::size_t g = 0; g < y->gens().size(); ++g) {
        const Matrix& a = uy.gen_action(static_cast<int>(g));
        Matrix r(h.dim(), h.dim());
        for (int k = 0; k < h.dim(); ++k) r.col(k) = coords_of_product(h, a, h.basis[k]);
        acts.push_back(std::move(r));
    }
    out.module = FinModule(y, std::move(vert), std::move(acts), d.dst_side);
    return out;
}

ModuleMap dualize_map(const HomDual& d, const ModuleMap& f, const DualImage& of_tgt, const DualImage& of_src)
{
    (void)d;
    const HomSpace& ht = of_tgt.space;
    const HomSpace& hs = of_src.space;
    Matrix m(hs.dim(), ht.dim());
    for (int k = 0; k < ht.dim(); ++k)
        for (int t = 0; t < hs.dim(); ++t) m(t, k) = product_entry(ht.basis[k], f.m, hs.free[t].first, hs.free[t].second);
    return {of_tgt.module, of_src.module, m};
}

ModuleMap evaluation(const DualImage& dm, const DualImage& ddm)
{
    const HomSpace& h2 = ddm.space;
    const FinModule& m = dm.source;
    Matrix e(h2.dim(), m.dim());
    for (int t = 0; t < h2.dim(); ++t) {
        auto [r, k] = h2.free[t];
        for (Index j = 0; j < m.dim(); ++j) e(t, j) = dm.space.basis[k](r, j);
    }
    return {m, ddm.module, e};
}

ModuleMap unit_map(const HomDual& first, const HomDual& second, const FinModule& m)
{
    DualImage dm = dualize(first, m);
    DualImage ddm = dualize(second, dm.module);
    return evaluation(dm, ddm);
}

DerivedDualTerm derived_dual_term(const HomDual& d, const Resolution& r, int i)
{
    const int terms = static_cast<int>(r.terms.size());
    if (i < 0) fail(Errc::InvalidArgument, "negative degree");
    if (i >= terms) {
        if (!r.complete) fail(Errc::CapExceeded, "resolution too short for degree " + std::to_string(i));
        DualImage z = dualize(d, FinModule::zero(r.module.algebra(), r.module.side()));
        return {z, subquotient(z.module, zeros(0, 0), zeros(0, 0))};
    }
    if (i + 1 >= terms && !r.complete) fail(Errc::CapExceeded, "resolution too short for degree " + std::to_string(i));
    DualImage di = dualize(d, r.terms[i]);
    Matrix cyc = identity(di.module.dim());
    if (i + 1 < terms) {
        DualImage dn = dualize(d, r.terms[i + 1]);
        cyc = kernel(dualize_map(d, r.maps[i + 1], di, dn)).incl;
    }
    Matrix bnd(di.module.dim(), 0);
    if (i > 0) {
        DualImage dp = dualize(d, r.terms[i - 1]);
        bnd = dualize_map(d, r.maps[i], dp, di).m;
    }
    SubQuot h = subquotient(di.module, cyc, bnd);
    return {std::move(di), std::move(h)};
}

FinModule derived_dual(const HomDual& d, const Resolution& r, int i) { return derived_dual_term(d, r, i).h.module; }

ModuleMap derived_dual_map(const HomDual& d, const ModuleMap& f, const Resolution& rx, const Resolution& ry, int i)
{
    DerivedDualTerm tx = derived_dual_term(d, rx, i);
    DerivedDualTerm ty = derived_dual_term(d, ry, i);
    const FinModule& hx = tx.h.module;
    const FinModule& hy = ty.h.module;
    if (hx.dim() == 0 || hy.dim() == 0) return zero_map(hy, hx);
    std::vector<Matrix> c = lift_to_resolutions(f, rx, ry);
    ModuleMap ci{rx.terms[i], ty.term.source, c[i]};
    Matrix m = tx.h.to_quot * dualize_map(d, ci, ty.term, tx.term).m * ty.h.lift;
    return {hy, hx, m};
}

EndAlgebra endomorphism_algebra(const std::vector<FinModule>& summands, const std::vector<std::string>& names)
{
    if (summands.empty()) fail(Errc::InvalidArgument, "U has no summands");
    const int k = static_cast<int>(summands.size());
    EndAlgebra out;
    Index n = 0;
    for (const auto& s : summands) {
        out.offsets.push_back(n);
        n += s.dim();
    }
    const Field field = summands[0].algebra()->field();

    struct Block {
        int src, tgt;
        HomSpace h;
        std::vector<int> index;  // E basis index of new basis element q
        Matrix to_new;           // new coords = to_new * old coords
    };
    std::vector<Block> blocks;
    std::vector<std::vector<int>> block_of(k, std::vector<int>(k, -1));
    BasisAlgebra::Spec spec;
    spec.field = field;
    spec.name = "End(U)";
    spec.idem.assign(k, -1);
    std::vector<Matrix> local;
    // diagonal blocks first so the idempotents lead the basis
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < k; ++i) order.push_back({i, i});
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i)
            if (i != j) order.push_back({i, j});
    for (auto [i, j] : order) {
        Block b{i, j, hom_space(summands[i], summands[j]), {}, {}};
        const int d = b.h.dim();
        std::vector<Matrix> nb;
        if (i == j) {
            Matrix id = identity(summands[i].dim());
            Vector c = b.h.coords(id);
            int p = 0;
            while (p < d && c(p).is_zero()) ++p;
            if (p == d) fail(Errc::InvalidArgument, "identity missing from End(U_i)");
            Matrix t = identity(d);  // old coords of the new basis
            t.col(0) = c;
            nb.push_back(id);
            int q = 1;
            for (int m = 0; m < d; ++m)
                if (m != p) {
                    t.col(q) = identity(d).col(m);
                    ++q;
                    nb.push_back(b.h.basis[m]);
                }
            b.to_new = inverse(t);
        } else {
            nb = b.h.basis;
            b.to_new = identity(d);
        }
        for (int q = 0; q < d; ++q) {
            int idx = static_cast<int>(local.size());
            b.index.push_back(idx);
            Matrix full = Matrix::Zero(n, n);
            full.block(out.offsets[j], out.offsets[i], summands[j].dim(), summands[i].dim()) = nb[q];
            out.elements.push_back(full);
            local.push_back(nb[q]);
            spec.lvert.push_back(j);
            spec.rvert.push_back(i);
            if (i == j && q == 0) {
                spec.idem[i] = idx;
                spec.labels.push_back("id" + std::to_string(i + 1));
                spec.words.push_back({});
            } else {
                spec.labels.push_back("h" + std::to_string(j + 1) + "_" + std::to_string(i + 1) + "_" + std::to_string(q));
                spec.words.push_back({idx});
            }
        }
        block_of[i][j] = static_cast<int>(blocks.size());
        blocks.push_back(std::move(b));
    }
    const int dim = static_cast<int>(local.size());
    spec.table.assign(dim, std::vector<SparseVec>(dim));
    for (int a = 0; a < dim; ++a)
        for (int c = 0; c < dim; ++c) {
            if (spec.rvert[a] != spec.lvert[c]) continue;
            const Block& b = blocks[block_of[spec.rvert[c]][spec.lvert[a]]];
            Matrix prod = local[a] * local[c];
            Vector nc = b.to_new * b.h.coords(prod);
            for (Index q = 0; q < nc.size(); ++q)
                if (!nc(q).is_zero()) spec.table[a][c].push_back({b.index[q], nc(q)});
        }
    for (int i = 0; i < k; ++i)
        spec.vertex_names.push_back(i < static_cast<int>(names.size()) ? names[i] : std::to_string(i + 1));
    out.alg = std::make_shared<const BasisAlgebra>(std::move(spec));
    return out;
}

DualityContext::DualityContext(AlgebraPtr lambda, const std::vector<FinModule>& summands,
                               const std::vector<std::string>& s_names, int cap)
    : lambda_(std::move(lambda)), cap_(cap)
{
    for (const auto& s : summands)
        if (s.algebra() != lambda_) fail(Errc::InvalidArgument, "summand of U over a different algebra");
    if (!lambda_->field().is_rational()) fail(Errc::CharNotZero, "duality context needs characteristic 0");
    end_ = endomorphism_algebra(summands, s_names);
    const BasisAlgebra& e = *end_.alg;
    if (!check_split(e)) fail(Errc::SplitFailure, "End(U) does not split over " + e.field().name());
    // each summand must be indecomposable: its corner of End(U) is local
    const Matrix& j = e.radical();
    for (int v = 0; v < e.vertex_count(); ++v) {
        int corner = 0, rad = 0;
        for (int i = 0; i < e.dim(); ++i)
            if (e.lvert(i) == v && e.rvert(i) == v) ++corner;
        for (Index c = 0; c < j.cols(); ++c)
            for (Index i = 0; i < j.rows(); ++i)
                if (!j(i, c).is_zero()) {
                    if (e.lvert(static_cast<int>(i)) == v && e.rvert(static_cast<int>(i)) == v) ++rad;
                    break;
                }
        if (corner - rad != 1) fail(Errc::InvalidArgument, "summand " + std::to_string(v + 1) + " of U is decomposable");
    }
    FinModule u = direct_sum(summands).module;
    std::vector<int> vert;
    for (int i = 0; i < static_cast<int>(summands.size()); ++i) vert.insert(vert.end(), summands[i].dim(), i);
    std::vector<Matrix> acts;
    for (int g : e.gens()) acts.push_back(end_.elements[g]);
    FinModule ue(end_.alg, std::move(vert), std::move(acts), Side::Right);
    phi_ = {u, ue, Side::Right};
    psi_ = {ue, u, Side::Left};
    try {
        n_phi_ = injective_dimension(u, cap_);
    } catch (const Error& err) {
        if (err.code() != Errc::CapExceeded) throw;
    }
    try {
        n_psi_ = injective_dimension(ue, cap_);
    } catch (const Error& err) {
        if (err.code() != Errc::CapExceeded) throw;
    }
    acyclic_ = static_cast<bool>(n_psi_);
    for (int v = 0; v < lambda_->vertex_count() && acyclic_; ++v) acyclic_ = is_psi_acyclic(phi(projective(lambda_, v)));
}

int DualityContext::n_phi() const
{
    if (!n_phi_) fail(Errc::CapExceeded, "injective dimension of U over the base algebra exceeds " + std::to_string(cap_));
    return *n_phi_;
}

int DualityContext::n_psi() const
{
    if (!n_psi_) fail(Errc::CapExceeded, "injective dimension of U over End(U) exceeds " + std::to_string(cap_));
    return *n_psi_;
}

ModuleMap DualityContext::phi_map(const ModuleMap& f) const
{
    return dualize_map(phi_, f, dualize(phi_, f.tgt), dualize(phi_, f.src));
}

ModuleMap DualityContext::psi_map(const ModuleMap& f) const
{
    return dualize_map(psi_, f, dualize(psi_, f.tgt), dualize(psi_, f.src));
}

FinModule DualityContext::r_phi(const FinModule& m, int i) const
{
    return derived_dual(phi_, free_resolution(m, i + 1), i);
}

FinModule DualityContext::r_psi(const FinModule& n, int i) const
{
    return derived_dual(psi_, free_resolution(n, i + 1), i);
}

ModuleMap DualityContext::r_phi_map(const ModuleMap& f, int i) const
{
    return derived_dual_map(phi_, f, free_resolution(f.src, i + 1), free_resolution(f.tgt, i + 1), i);
}

ModuleMap DualityContext::r_psi_map(const ModuleMap& f, int i) const
{
    return derived_dual_map(psi_, f, free_resolution(f.src, i + 1), free_resolution(f.tgt, i + 1), i);
}

ModuleMap DualityContext::eta(const FinModule& m) const { return unit_map(phi_, psi_, m); }
ModuleMap DualityContext::xi(const FinModule& n) const { return unit_map(psi_, phi_, n); }

bool DualityContext::is_reflexive(const FinModule& m) const { return is_invertible(eta(m).m); }

bool DualityContext::is_phi_acyclic(const FinModule& m) const
{
    Resolution r = free_resolution(m, n_phi() + 1);
    for (int i = 1; i <= n_phi(); ++i)
        if (ext_space(r, u(), i).dim != 0) return false;
    return true;
}

bool DualityContext::is_psi_acyclic(const FinModule& n) const
{
    Resolution r = free_resolution(n, n_psi() + 1);
    for (int i = 1; i <= n_psi(); ++i)
        if (ext_space(r, u_right(), i).dim != 0) return false;
    return true;
}

bool DualityContext::is_psi_phi_acyclic(const FinModule& m) const { return is_phi_acyclic(m) && is_psi_acyclic(phi(m)); }

CotiltingReport DualityContext::partial_cotilting(const std::vector<int>& powers) const
{
    CotiltingReport rep;
    rep.injdim_left = n_phi_;
    rep.injdim_right = n_psi_;
    if (!n_phi_) rep.failures.push_back("injdim of U over the base algebra exceeds the cap");
    if (!n_psi_) rep.failures.push_back("injdim of U over End(U) exceeds the cap");
    for (int t : powers) {
        if (n_phi_) {
            FinModule ut = direct_sum(std::vector<FinModule>(t, u())).module;
            Resolution r = free_resolution(ut, *n_phi_ + 1);
            for (int i = 1; i <= *n_phi_; ++i)
                if (ext_space(r, u(), i).dim != 0) {
                    rep.ext_left = false;
                    rep.failures.push_back("Ext^" + std::to_string(i) + "(U^" + std::to_string(t) + ", U) != 0 over the base algebra");
                    break;
                }
        }
        if (n_psi_) {
            FinModule ut = direct_sum(std::vector<FinModule>(t, u_right())).module;
            Resolution r = free_resolution(ut, *n_psi_ + 1);
            for (int i = 1; i <= *n_psi_; ++i)
                if (ext_space(r, u_right(), i).dim != 0) {
                    rep.ext_right = false;
                    rep.failures.push_back("Ext^" + std::to_string(i) + "(U^" + std::to_string(t) + ", U) != 0 over End(U)");
                    break;
                }
        }
    }
    rep.psi_acyclic_free = acyclic_;
    if (!acyclic_) rep.failures.push_back("Hom(P, U) is not Hom(-, U)-acyclic for some projective P");
    return rep;
}

}  // namespace cotilt
