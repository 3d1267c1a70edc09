#include "cotilt/module.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "cotilt/sparse.hpp"

namespace cotilt {

namespace {

int gen_position(const BasisAlgebra& a, int basis_index)
{
    const auto& g = a.gens();
    auto it = std::lower_bound(g.begin(), g.end(), basis_index);
    if (it == g.end() || *it != basis_index) fail(Errc::InvalidArgument, "not a generator");
    return static_cast<int>(it - g.begin());
}

const std::vector<Matrix>& all_actions(const FinModule& m) { return m.actions(); }

// Vertex of a homogeneous column (first nonzero entry).
int column_vertex(const FinModule& m, const Matrix& k, Index c)
{
    for (Index i = 0; i < k.rows(); ++i)
        if (!k(i, c).is_zero()) return m.vertex(i);
    fail(Errc::InvalidArgument, "zero column has no vertex");
}

Matrix select_rows(const Matrix& m, const std::vector<Index>& rows)
{
    Matrix out(static_cast<Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(rows[i]);
    return out;
}

Matrix select_cols(const Matrix& m, const std::vector<Index>& cols)
{
    Matrix out(m.rows(), static_cast<Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
    return out;
}

// Build the submodule on homogeneous, independent columns k.
Sub make_sub(const FinModule& m, const Matrix& k)
{
    const Index d = k.cols();
    std::vector<int> cv(d);
    for (Index c = 0; c < d; ++c) cv[c] = column_vertex(m, k, c);
    Matrix l = Matrix::Zero(d, m.dim());
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        std::vector<Index> rows = m.block(v), cols;
        for (Index c = 0; c < d; ++c)
            if (cv[c] == v) cols.push_back(c);
        if (cols.empty()) continue;
        Matrix blk = select_cols(select_rows(k, rows), cols);
        Matrix li = left_inverse(blk);
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) l(cols[i], rows[j]) = li(static_cast<Index>(i), static_cast<Index>(j));
    }
    std::vector<Matrix> acts;
    for (const auto& g : m.gen_actions()) acts.push_back(l * (g * k));
    return {FinModule(m.algebra(), cv, std::move(acts), m.side()), k, l};
}

}  // namespace

FinModule::FinModule(AlgebraPtr alg, std::vector<int> vert, std::vector<Matrix> gen_act, Side side,
                     std::optional<std::vector<ProjSummand>> proj)
{
    if (!alg) fail(Errc::InvalidArgument, "module without algebra");
    const Index n = static_cast<Index>(vert.size());
    if (gen_act.size() != alg->gens().size()) fail(Errc::InvalidArgument, "wrong number of generator actions");
    for (const auto& g : gen_act)
        if (g.rows() != n || g.cols() != n) fail(Errc::InvalidArgument, "generator action has wrong size");
    for (int v : vert)
        if (v < 0 || v >= alg->vertex_count()) fail(Errc::InvalidArgument, "vertex label out of range");
    auto d = std::make_shared<Data>();
    d->alg = std::move(alg);
    d->side = side;
    d->vert = std::move(vert);
    d->gen_act = std::move(gen_act);
    d->proj = std::move(proj);
    d_ = std::move(d);
}

FinModule FinModule::zero(AlgebraPtr alg, Side side)
{
    std::vector<Matrix> acts(alg->gens().size(), Matrix(0, 0));
    return FinModule(std::move(alg), {}, std::move(acts), side, std::vector<ProjSummand>{});
}

FinModule FinModule::with_side(Side s) const
{
    return FinModule(d_->alg, d_->vert, d_->gen_act, s, d_->proj);
}

const std::vector<Matrix>& FinModule::actions() const
{
    std::call_once(d_->acts_once, [this] {
        const BasisAlgebra& a = *d_->alg;
        d_->acts.reserve(a.dim());
        for (int i = 0; i < a.dim(); ++i) {
            const auto& w = a.word(i);
            if (w.empty()) {
                Matrix m = Matrix::Zero(dim(), dim());
                for (Index k = 0; k < dim(); ++k)
                    if (d_->vert[k] == a.lvert(i)) m(k, k) = a.field().one();
                d_->acts.push_back(std::move(m));
                continue;
            }
            Matrix m = d_->gen_act[gen_position(a, w[0])];
            for (std::size_t k = 1; k < w.size(); ++k) m = d_->gen_act[gen_position(a, w[k])] * m;
            d_->acts.push_back(std::move(m));
        }
    });
    return d_->acts;
}

Matrix FinModule::action(const Vector& x) const
{
    Matrix m = Matrix::Zero(dim(), dim());
    for (Index i = 0; i < x.size(); ++i)
        if (!x(i).is_zero()) m += x(i) * action(static_cast<int>(i));
    return m;
}

std::vector<int> FinModule::dim_vector() const
{
    std::vector<int> dv(d_->alg->vertex_count(), 0);
    for (int v : d_->vert) ++dv[v];
    return dv;
}

std::vector<Index> FinModule::block(int v) const
{
    std::vector<Index> out;
    for (Index i = 0; i < dim(); ++i)
        if (d_->vert[i] == v) out.push_back(i);
    return out;
}

Index FinModule::generator(std::size_t summand) const
{
    const auto& s = d_->proj->at(summand);
    auto col = column_of(*d_->alg, s.vertex);
    auto it = std::find(col.begin(), col.end(), d_->alg->idem(s.vertex));
    return s.offset + static_cast<Index>(it - col.begin());
}

std::vector<int> column_of(const BasisAlgebra& a, int v)
{
    std::vector<int> out;
    for (int i = 0; i < a.dim(); ++i)
        if (a.rvert(i) == v) out.push_back(i);
    return out;
}

bool is_module(const FinModule& m)
{
    const BasisAlgebra& a = *m.algebra();
    for (std::size_t k = 0; k < a.gens().size(); ++k) {
        int g = a.gens()[k];
        const Matrix& r = m.gen_action(static_cast<int>(k));
        for (Index i = 0; i < m.dim(); ++i)
            for (Index j = 0; j < m.dim(); ++j)
                if (!r(i, j).is_zero() && (m.vertex(i) != a.lvert(g) || m.vertex(j) != a.rvert(g))) return false;
    }
    const auto& acts = all_actions(m);
    for (int g : a.gens())
        for (int j = 0; j < a.dim(); ++j) {
            Matrix rhs = Matrix::Zero(m.dim(), m.dim());
            for (const auto& [k, c] : a.mul(g, j)) rhs += c * acts[k];
            if (acts[g] * acts[j] != rhs) return false;
        }
    return true;
}

bool is_homomorphism(const ModuleMap& f)
{
    if (f.src.algebra() != f.tgt.algebra()) return false;
    if (f.m.rows() != f.tgt.dim() || f.m.cols() != f.src.dim()) return false;
    for (Index i = 0; i < f.m.rows(); ++i)
        for (Index j = 0; j < f.m.cols(); ++j)
            if (!f.m(i, j).is_zero() && f.tgt.vertex(i) != f.src.vertex(j)) return false;
    for (std::size_t k = 0; k < f.src.gen_actions().size(); ++k)
        if (f.m * f.src.gen_action(static_cast<int>(k)) != f.tgt.gen_action(static_cast<int>(k)) * f.m) return false;
    return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) { return {f.src, g.tgt, g.m * f.m}; }
ModuleMap identity_map(const FinModule& m) { return {m, m, identity(m.dim())}; }
ModuleMap zero_map(const FinModule& s, const FinModule& t) { return {s, t, zeros(t.dim(), s.dim())}; }

Vector HomSpace::coords(const Matrix& f) const
{
    Vector c(static_cast<Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) c(static_cast<Index>(k)) = f(free[k].first, free[k].second);
    return c;
}

Matrix HomSpace::combine(const Vector& c, Index rows, Index cols) const
{
    Matrix f = Matrix::Zero(rows, cols);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!c(static_cast<Index>(k)).is_zero()) f += c(static_cast<Index>(k)) * basis[k];
    return f;
}

HomSpace hom_space_generic(const FinModule& m, const FinModule& n)
{
    if (m.algebra() != n.algebra()) fail(Errc::InvalidArgument, "Hom between modules over different algebras");
    const BasisAlgebra& a = *m.algebra();
    const Index dm = m.dim(), dn = n.dim();
    std::vector<int> uid(static_cast<std::size_t>(dn * dm), -1);
    std::vector<std::pair<Index, Index>> pos;
    for (Index c = 0; c < dm; ++c)
        for (Index r = 0; r < dn; ++r)
            if (n.vertex(r) == m.vertex(c)) {
                uid[r * dm + c] = static_cast<int>(pos.size());
                pos.push_back({r, c});
            }
    SparseEliminator el(static_cast<int>(pos.size()));
    for (std::size_t k = 0; k < a.gens().size(); ++k) {
        int g = a.gens()[k];
        const Matrix& rm = m.gen_action(static_cast<int>(k));
        const Matrix& rn = n.gen_action(static_cast<int>(k));
        auto mrows = m.block(a.lvert(g)), mcols = m.block(a.rvert(g));
        auto nrows = n.block(a.lvert(g)), ncols = n.block(a.rvert(g));
        // column c of rho_M(g): nonzero rows j
        for (Index c : mcols) {
            std::vector<std::pair<Index, Scalar>> mc;
            for (Index j : mrows)
                if (!rm(j, c).is_zero()) mc.push_back({j, rm(j, c)});
            for (Index r : nrows) {
                std::map<int, Scalar> eq;
                for (const auto& [j, v] : mc) eq[uid[r * dm + j]] += v;
                for (Index i : ncols)
                    if (!rn(r, i).is_zero()) eq[uid[i * dm + c]] -= rn(r, i);
                SparseRow row;
                for (const auto& [u, v] : eq)
                    if (!v.is_zero()) row.push_back({u, v});
                if (!row.empty()) el.add(std::move(row));
            }
        }
    }
    HomSpace h;
    for (int f : el.free_columns()) {
        Matrix b = Matrix::Zero(dn, dm);
        for (const auto& [u, v] : el.null_vector(f)) b(pos[u].first, pos[u].second) = v;
        h.basis.push_back(std::move(b));
        h.free.push_back(pos[f]);
    }
    return h;
}

HomSpace hom_space(const FinModule& m, const FinModule& n)
{
    if (!m.projective()) return hom_space_generic(m, n);
    if (m.algebra() != n.algebra()) fail(Errc::InvalidArgument, "Hom between modules over different algebras");
    const BasisAlgebra& a = *m.algebra();
    // Hom(A e_v, N) ≅ e_v N: the generator may go anywhere in e_v N.
    const std::vector<Matrix>& acts = n.actions();
    HomSpace h;
    const auto& summands = *m.projective();
    for (std::size_t s = 0; s < summands.size(); ++s) {
        int v = summands[s].vertex;
        auto col = column_of(a, v);
        Index gen = m.generator(s);
        for (Index r : n.block(v)) {
            Matrix b = Matrix::Zero(n.dim(), m.dim());
            for (std::size_t p = 0; p < col.size(); ++p) b.col(summands[s].offset + static_cast<Index>(p)) = acts[col[p]].col(r);
            h.basis.push_back(std::move(b));
            h.free.push_back({r, gen});
        }
    }
    return h;
}

std::vector<ModuleMap> hom_basis(const FinModule& m, const FinModule& n)
{
    std::vector<ModuleMap> out;
    for (auto& b : hom_space(m, n).basis) out.push_back({m, n, std::move(b)});
    return out;
}

FinModule projective_sum(const AlgebraPtr& a, const std::vector<int>& verts, Side side)
{
    std::vector<ProjSummand> summ;
    std::vector<int> vert;
    std::vector<std::vector<int>> cols;
    Index off = 0;
    for (int v : verts) {
        if (v < 0 || v >= a->vertex_count()) fail(Errc::SemanticError, "vertex out of range");
        summ.push_back({v, off});
        cols.push_back(column_of(*a, v));
        for (int b : cols.back()) vert.push_back(a->lvert(b));
        off += static_cast<Index>(cols.back().size());
    }
    std::vector<Matrix> acts;
    for (int g : a->gens()) {
        Matrix r = Matrix::Zero(off, off);
        for (std::size_t s = 0; s < verts.size(); ++s) {
            const auto& col = cols[s];
            for (std::size_t p = 0; p < col.size(); ++p)
                for (const auto& [k, c] : a->mul(g, col[p])) {
                    auto q = std::lower_bound(col.begin(), col.end(), k) - col.begin();
                    r(summ[s].offset + q, summ[s].offset + static_cast<Index>(p)) += c;
                }
        }
        acts.push_back(std::move(r));
    }
    return FinModule(a, std::move(vert), std::move(acts), side, std::move(summ));
}

FinModule projective(const AlgebraPtr& a, int v, Side side) { return projective_sum(a, {v}, side); }

FinModule regular_module(const AlgebraPtr& a, Side side)
{
    std::vector<int> all(a->vertex_count());
    for (int v = 0; v < a->vertex_count(); ++v) all[v] = v;
    return projective_sum(a, all, side);
}

FinModule injective(const AlgebraPtr& a, int v, Side side)
{
    if (v < 0 || v >= a->vertex_count()) fail(Errc::SemanticError, "vertex out of range");
    std::vector<int> row;  // basis of e_v A
    for (int i = 0; i < a->dim(); ++i)
        if (a->lvert(i) == v) row.push_back(i);
    const Index n = static_cast<Index>(row.size());
    std::vector<int> vert;
    for (int x : row) vert.push_back(a->rvert(x));
    std::vector<Matrix> acts;
    for (int g : a->gens()) {
        Matrix r = Matrix::Zero(n, n);
        // (g·f_k)(x_j) = f_k(x_j g)
        for (Index j = 0; j < n; ++j)
            for (const auto& [m, c] : a->mul(row[j], g)) {
                auto k = std::lower_bound(row.begin(), row.end(), m) - row.begin();
                r(j, k) += c;
            }
        acts.push_back(std::move(r));
    }
    return FinModule(a, std::move(vert), std::move(acts), side);
}

FinModule simple(const AlgebraPtr& a, int v, Side side)
{
    if (v < 0 || v >= a->vertex_count()) fail(Errc::SemanticError, "vertex out of range");
    if (a->quiver()) {
        std::vector<Matrix> acts(a->gens().size(), Matrix::Zero(1, 1));
        return FinModule(a, {v}, std::move(acts), side);
    }
    return top(projective(a, v, side));
}

FinModule from_representation(const AlgebraPtr& a, const std::vector<int>& dims, const std::vector<Matrix>& arrows,
                              Side side)
{
    if (!a->quiver()) fail(Errc::InvalidArgument, "algebra has no quiver");
    const Quiver& q = *a->quiver();
    if (static_cast<int>(dims.size()) != q.vertex_count() || arrows.size() != q.arrows().size())
        fail(Errc::InvalidArgument, "representation does not match the quiver");
    std::vector<Index> off(dims.size() + 1, 0);
    std::vector<int> vert;
    for (std::size_t v = 0; v < dims.size(); ++v) {
        off[v + 1] = off[v] + dims[v];
        vert.insert(vert.end(), dims[v], static_cast<int>(v));
    }
    const Index n = off.back();
    std::vector<Matrix> acts(a->gens().size(), Matrix::Zero(n, n));
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        const Arrow& ar = q.arrows()[k];
        if (arrows[k].rows() != dims[ar.target] || arrows[k].cols() != dims[ar.source])
            fail(Errc::InvalidArgument, "arrow matrix " + ar.name + " has wrong size");
        acts[gen_position(*a, a->arrow_basis()[k])].block(off[ar.target], off[ar.source], dims[ar.target], dims[ar.source]) =
            arrows[k];
    }
    FinModule m(a, std::move(vert), std::move(acts), side);
    if (!is_module(m)) fail(Errc::InvalidArgument, "representation violates the relations");
    return m;
}

DirectSum direct_sum(const std::vector<FinModule>& parts)
{
    if (parts.empty()) fail(Errc::InvalidArgument, "empty direct sum");
    const AlgebraPtr& a = parts[0].algebra();
    DirectSum out;
    std::vector<int> vert;
    Index n = 0;
    bool proj = true;
    std::vector<ProjSummand> summ;
    for (const auto& p : parts) {
        if (p.algebra() != a) fail(Errc::InvalidArgument, "direct sum over different algebras");
        out.offsets.push_back(n);
        vert.insert(vert.end(), p.vertices().begin(), p.vertices().end());
        if (p.projective())
            for (auto s : *p.projective()) summ.push_back({s.vertex, s.offset + n});
        else proj = false;
        n += p.dim();
    }
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < a->gens().size(); ++k) {
        Matrix r = Matrix::Zero(n, n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            r.block(out.offsets[i], out.offsets[i], parts[i].dim(), parts[i].dim()) = parts[i].gen_action(static_cast<int>(k));
        acts.push_back(std::move(r));
    }
    std::optional<std::vector<ProjSummand>> ps;
    if (proj) ps = std::move(summ);
    out.module = FinModule(a, std::move(vert), std::move(acts), parts[0].side(), std::move(ps));
    return out;
}

Matrix homogenize(const FinModule& m, const Matrix& cols)
{
    std::vector<Matrix> pieces;
    Index total = 0;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        Matrix p = Matrix::Zero(m.dim(), cols.cols());
        bool any = false;
        for (Index i : m.block(v)) {
            p.row(i) = cols.row(i);
            any = true;
        }
        if (!any || cols.cols() == 0) continue;
        Matrix b = column_basis(p);
        total += b.cols();
        pieces.push_back(std::move(b));
    }
    Matrix out(m.dim(), total);
    Index c = 0;
    for (const auto& p : pieces) {
        out.middleCols(c, p.cols()) = p;
        c += p.cols();
    }
    return out;
}

Sub submodule(const FinModule& m, const Matrix& span) { return make_sub(m, homogenize(m, span)); }

Sub submodule_generated(const FinModule& m, const Matrix& gens)
{
    Matrix cur = homogenize(m, gens);
    for (;;) {
        Matrix all(m.dim(), cur.cols() * static_cast<Index>(1 + m.gen_actions().size()));
        all.leftCols(cur.cols()) = cur;
        Index c = cur.cols();
        for (const auto& g : m.gen_actions()) {
            all.middleCols(c, cur.cols()) = g * cur;
            c += cur.cols();
        }
        Matrix next = homogenize(m, all);
        if (next.cols() == cur.cols()) break;
        cur = std::move(next);
    }
    return make_sub(m, cur);
}

Quot quotient(const FinModule& m, const Matrix& span)
{
    Matrix k = homogenize(m, span);
    std::vector<Index> comp;
    Matrix proj = Matrix::Zero(m.dim() - k.cols(), m.dim());
    // per vertex: complete k's block by unit vectors and invert
    std::vector<std::pair<std::vector<Index>, Matrix>> blocks;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        auto rows = m.block(v);
        if (rows.empty()) continue;
        std::vector<Index> kc;
        for (Index c = 0; c < k.cols(); ++c)
            if (column_vertex(m, k, c) == v) kc.push_back(c);
        Matrix kb = select_cols(select_rows(k, rows), kc);
        auto cc = complement_coordinates(kb);
        Matrix full(static_cast<Index>(rows.size()), static_cast<Index>(rows.size()));
        full.leftCols(kb.cols()) = kb;
        for (std::size_t i = 0; i < cc.size(); ++i) {
            full.col(kb.cols() + static_cast<Index>(i)).setZero();
            full(cc[i], kb.cols() + static_cast<Index>(i)) = Scalar(1);
        }
        Matrix inv = inverse(full);
        for (std::size_t i = 0; i < cc.size(); ++i) {
            Index q = static_cast<Index>(comp.size());
            comp.push_back(rows[cc[i]]);
            for (std::size_t j = 0; j < rows.size(); ++j)
                proj(q, rows[j]) = inv(kb.cols() + static_cast<Index>(i), static_cast<Index>(j));
        }
    }
    const Index q = static_cast<Index>(comp.size());
    Matrix section = Matrix::Zero(m.dim(), q);
    std::vector<int> vert;
    for (Index i = 0; i < q; ++i) {
        section(comp[i], i) = Scalar(1);
        vert.push_back(m.vertex(comp[i]));
    }
    std::vector<Matrix> acts;
    for (const auto& g : m.gen_actions()) acts.push_back(proj * (g * section));
    return {FinModule(m.algebra(), std::move(vert), std::move(acts), m.side()), proj, section};
}

SubQuot subquotient(const FinModule& m, const Matrix& n, const Matrix& d)
{
    Sub s = submodule(m, n);
    Quot q = quotient(s.module, s.retract * d);
    return {q.module, q.proj * s.retract, s.incl * q.section};
}

Sub kernel(const ModuleMap& f)
{
    const FinModule& m = f.src;
    std::vector<Vector> cols;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        auto src = m.block(v), tgt = f.tgt.block(v);
        if (src.empty()) continue;
        Matrix blk = select_cols(select_rows(f.m, tgt), src);
        Matrix kb = tgt.empty() ? identity(static_cast<Index>(src.size())) : kernel_basis(blk);
        for (Index c = 0; c < kb.cols(); ++c) {
            Vector x = Vector::Zero(m.dim());
            for (std::size_t i = 0; i < src.size(); ++i) x(src[i]) = kb(static_cast<Index>(i), c);
            cols.push_back(std::move(x));
        }
    }
    Matrix k(m.dim(), static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) k.col(static_cast<Index>(c)) = cols[c];
    return make_sub(m, k);
}

Sub image(const ModuleMap& f) { return make_sub(f.tgt, homogenize(f.tgt, f.m)); }

Quot cokernel(const ModuleMap& f) { return quotient(f.tgt, f.m); }

namespace {

std::vector<Matrix> radical_actions(const FinModule& m)
{
    const Matrix& j = m.algebra()->radical();
    const auto& acts = all_actions(m);
    std::vector<Matrix> out;
    for (Index c = 0; c < j.cols(); ++c) {
        Matrix r = Matrix::Zero(m.dim(), m.dim());
        for (Index i = 0; i < j.rows(); ++i)
            if (!j(i, c).is_zero()) r += j(i, c) * acts[i];
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

Matrix radical_span(const FinModule& m, int k)
{
    if (k < 1) fail(Errc::InvalidArgument, "radical power must be at least 1");
    auto rj = radical_actions(m);
    Matrix cur = identity(m.dim());
    for (int step = 0; step < k && cur.cols() > 0; ++step) {
        Matrix all(m.dim(), cur.cols() * static_cast<Index>(rj.size()));
        Index c = 0;
        for (const auto& r : rj) {
            all.middleCols(c, cur.cols()) = r * cur;
            c += cur.cols();
        }
        cur = homogenize(m, all);
    }
    return cur;
}

Matrix socle_span(const FinModule& m, int k)
{
    if (k < 1) fail(Errc::InvalidArgument, "socle power must be at least 1");
    auto rj = radical_actions(m);
    Matrix cur(m.dim(), 0);
    for (int step = 0; step < k; ++step) {
        Quot q = quotient(m, cur);
        if (rj.empty()) return identity(m.dim());
        Matrix stacked(q.proj.rows() * static_cast<Index>(rj.size()), m.dim());
        Index r0 = 0;
        for (const auto& r : rj) {
            stacked.middleRows(r0, q.proj.rows()) = q.proj * r;
            r0 += q.proj.rows();
        }
        cur = homogenize(m, stacked.rows() ? kernel_basis(stacked) : identity(m.dim()));
    }
    return cur;
}

FinModule rad(const FinModule& m, int k) { return submodule(m, radical_span(m, k)).module; }
FinModule soc(const FinModule& m, int k) { return submodule(m, socle_span(m, k)).module; }
FinModule top(const FinModule& m) { return quotient(m, radical_span(m, 1)).module; }
FinModule radq(const FinModule& m, int k) { return quotient(m, radical_span(m, k)).module; }
FinModule socq(const FinModule& m, int k) { return quotient(m, socle_span(m, k)).module; }

ModuleMap free_cover(const FinModule& m)
{
    const AlgebraPtr& a = m.algebra();
    std::vector<int> verts;
    std::vector<Index> gens;
    if (a->field().is_rational()) {
        Matrix r = radical_span(m, 1);
        for (int v = 0; v < a->vertex_count(); ++v) {
            auto rows = m.block(v);
            if (rows.empty()) continue;
            std::vector<Index> rc;
            for (Index c = 0; c < r.cols(); ++c)
                if (column_vertex(m, r, c) == v) rc.push_back(c);
            for (Index i : complement_coordinates(select_cols(select_rows(r, rows), rc))) {
                verts.push_back(v);
                gens.push_back(rows[i]);
            }
        }
    } else {
        for (int v = 0; v < a->vertex_count(); ++v)
            for (Index i : m.block(v)) {
                verts.push_back(v);
                gens.push_back(i);
            }
    }
    FinModule f = projective_sum(a, verts, m.side());
    Matrix phi = Matrix::Zero(m.dim(), f.dim());
    if (!verts.empty()) {
        const auto& acts = all_actions(m);
        const auto& summ = *f.projective();
        for (std::size_t s = 0; s < summ.size(); ++s) {
            auto col = column_of(*a, summ[s].vertex);
            for (std::size_t p = 0; p < col.size(); ++p)
                phi.col(summ[s].offset + static_cast<Index>(p)) = acts[col[p]].col(gens[s]);
        }
    }
    return {f, m, phi};
}

Resolution free_resolution(const FinModule& m, int len)
{
    Resolution res;
    res.module = m;
    FinModule cur = m;
    Matrix incl = identity(m.dim());  // cur -> previous term (or M)
    FinModule prev = m;
    for (int i = 0;; ++i) {
        ModuleMap cover = free_cover(cur);
        res.terms.push_back(cover.src);
        res.maps.push_back({cover.src, prev, incl * cover.m});
        Sub k = kernel(cover);
        if (k.module.dim() == 0) {
            res.complete = true;
            break;
        }
        if (i == len) break;
        cur = k.module;
        incl = k.incl;
        prev = cover.src;
    }
    return res;
}

ModuleMap lift_through(const ModuleMap& g, const ModuleMap& s)
{
    const FinModule& f = g.src;
    const FinModule& m = s.src;
    if (f.dim() == 0) return {f, m, zeros(m.dim(), 0)};
    if (!f.projective()) fail(Errc::InvalidArgument, "lift_through needs a free source");
    const BasisAlgebra& a = *f.algebra();
    Matrix h = Matrix::Zero(m.dim(), f.dim());
    const auto& summ = *f.projective();
    for (std::size_t k = 0; k < summ.size(); ++k) {
        const int v = summ[k].vertex;
        auto cols = m.block(v);
        Vector x = Vector::Zero(m.dim());
        Vector y = g.m.col(f.generator(k));
        if (!cols.empty()) {
            auto sol = solve(select_cols(s.m, cols), y);
            if (!sol) fail(Errc::InvalidArgument, "map does not factor through the given map");
            for (std::size_t i = 0; i < cols.size(); ++i) x(cols[i]) = (*sol)(static_cast<Index>(i), 0);
        } else if (!is_zero(y)) {
            fail(Errc::InvalidArgument, "map does not factor through the given map");
        }
        auto col = column_of(a, v);
        for (std::size_t j = 0; j < col.size(); ++j) h.col(summ[k].offset + static_cast<Index>(j)) = m.action(col[j]) * x;
    }
    return {f, m, h};
}

std::vector<Matrix> lift_to_resolutions(const ModuleMap& f, const Resolution& rx, const Resolution& ry)
{
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < rx.terms.size(); ++i) {
        if (i >= ry.terms.size()) {
            if (!ry.complete) fail(Errc::CapExceeded, "target resolution too short for the comparison map");
            out.push_back(zeros(0, rx.terms[i].dim()));
            continue;
        }
        Matrix g = i == 0 ? Matrix(f.m * rx.maps[0].m) : Matrix(out.back() * rx.maps[i].m);
        out.push_back(lift_through({rx.terms[i], ry.maps[i].tgt, g}, ry.maps[i]).m);
    }
    return out;
}

Matrix hom_precompose(const ModuleMap& d, const FinModule& n, const HomSpace& src_space, const HomSpace& tgt_space)
{
    (void)n;
    Matrix out = Matrix::Zero(tgt_space.dim(), src_space.dim());
    for (int k = 0; k < src_space.dim(); ++k) {
        const Matrix& f = src_space.basis[k];
        for (int t = 0; t < tgt_space.dim(); ++t) {
            auto [r, c] = tgt_space.free[t];
            Scalar acc(0);
            for (Index j = 0; j < f.cols(); ++j)
                if (!f(r, j).is_zero() && !d.m(j, c).is_zero()) acc += f(r, j) * d.m(j, c);
            out(t, k) = acc;
        }
    }
    return out;
}

ExtResult ext_space(const Resolution& r, const FinModule& n, int i)
{
    if (i < 0) fail(Errc::InvalidArgument, "negative Ext degree");
    ExtResult out;
    const int terms = static_cast<int>(r.terms.size());
    if (i >= terms) {
        if (r.complete) {
            out.cocycles = Matrix(0, 0);
            out.coboundaries = Matrix(0, 0);
            return out;
        }
        fail(Errc::CapExceeded, "resolution too short for Ext^" + std::to_string(i));
    }
    if (i + 1 >= terms && !r.complete) fail(Errc::CapExceeded, "resolution too short for Ext^" + std::to_string(i));
    HomSpace hi = hom_space(r.terms[i], n);
    if (i + 1 < terms) {
        HomSpace hn = hom_space(r.terms[i + 1], n);
        Matrix delta = hom_precompose(r.maps[i + 1], n, hi, hn);
        out.cocycles = delta.rows() ? kernel_basis(delta) : identity(hi.dim());
    } else {
        out.cocycles = identity(hi.dim());
    }
    if (i > 0) {
        HomSpace hp = hom_space(r.terms[i - 1], n);
        out.coboundaries = column_basis(hom_precompose(r.maps[i], n, hp, hi));
    } else {
        out.coboundaries = Matrix(hi.dim(), 0);
    }
    out.dim = static_cast<int>(out.cocycles.cols() - out.coboundaries.cols());
    return out;
}

ExtResult ext_space(const FinModule& m, const FinModule& n, int i) { return ext_space(free_resolution(m, i + 1), n, i); }

namespace {

bool block_invertible(const FinModule& m, const FinModule& n, const Matrix& f)
{
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        auto r = n.block(v), c = m.block(v);
        if (r.size() != c.size()) return false;
        if (r.empty()) continue;
        if (!is_invertible(select_cols(select_rows(f, r), c))) return false;
    }
    return true;
}

std::vector<int> layer_dims(const FinModule& m)
{
    std::vector<int> out;
    if (!m.algebra()->field().is_rational()) return out;
    for (int k = 1;; ++k) {
        Matrix r = radical_span(m, k);
        Matrix s = socle_span(m, k);
        auto add = [&](const Matrix& x) {
            std::vector<int> dv(m.algebra()->vertex_count(), 0);
            for (Index c = 0; c < x.cols(); ++c) ++dv[column_vertex(m, x, c)];
            out.insert(out.end(), dv.begin(), dv.end());
        };
        add(r);
        add(s);
        if (r.cols() == 0) break;
    }
    return out;
}

}  // namespace

std::optional<Matrix> find_isomorphism(const FinModule& m, const FinModule& n, std::uint64_t seed)
{
    if (m.algebra() != n.algebra()) return std::nullopt;
    if (m.dim_vector() != n.dim_vector()) return std::nullopt;
    if (m.dim() == 0) return Matrix(0, 0);
    if (layer_dims(m) != layer_dims(n)) return std::nullopt;
    HomSpace h = hom_space(m, n);
    if (h.dim() == 0) return std::nullopt;
    if (hom_space(n, m).dim() != h.dim() || hom_space(m, m).dim() != h.dim() || hom_space(n, n).dim() != h.dim())
        return std::nullopt;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-1000, 1000);
    for (int t = 0; t < 32; ++t) {
        Vector c(h.dim());
        for (int k = 0; k < h.dim(); ++k) c(k) = Scalar(coef(rng));
        Matrix f = h.combine(c, n.dim(), m.dim());
        if (block_invertible(m, n, f)) return f;
    }
    // deterministic lattice over {-1, 0, 1, 2}
    const int budget = 4096;
    std::vector<int> digits(h.dim(), 0);
    for (int t = 0; t < budget; ++t) {
        int x = t;
        for (int k = 0; k < h.dim(); ++k) {
            digits[k] = x % 4 - 1;
            x /= 4;
        }
        Vector c(h.dim());
        for (int k = 0; k < h.dim(); ++k) c(k) = Scalar(digits[k]);
        Matrix f = h.combine(c, n.dim(), m.dim());
        if (block_invertible(m, n, f)) return f;
    }
    fail(Errc::Inconclusive, "isomorphism search budget exhausted");
}

bool is_isomorphic(const FinModule& m, const FinModule& n, std::uint64_t seed)
{
    return find_isomorphism(m, n, seed).has_value();
}

int injective_dimension(const FinModule& m, int cap)
{
    const AlgebraPtr& a = m.algebra();
    (void)a->radical();  // characteristic check
    int best = 0;
    for (int v = 0; v < a->vertex_count(); ++v) {
        Resolution r = free_resolution(simple(a, v, m.side()), cap + 1);
        for (int i = 0; i <= cap + 1; ++i) {
            if (i >= static_cast<int>(r.terms.size()) && r.complete) break;
            if (ext_space(r, m, i).dim > 0) {
                if (i == cap + 1) fail(Errc::CapExceeded, "injective dimension exceeds " + std::to_string(cap));
                best = std::max(best, i);
            }
        }
    }
    return best;
}

std::string dim_vector_string(const FinModule& m)
{
    std::ostringstream os;
    os << "(";
    auto dv = m.dim_vector();
    for (std::size_t i = 0; i < dv.size(); ++i) os << (i ? "," : "") << dv[i];
    os << ")";
    return os.str();
}

std::string composition_string(const FinModule& m)
{
    std::ostringstream os;
    auto dv = m.dim_vector();
    bool first = true;
    for (std::size_t v = 0; v < dv.size(); ++v) {
        if (!dv[v]) continue;
        if (!first) os << "+";
        first = false;
        if (dv[v] > 1) os << dv[v] << "*";
        os << "S(" << m.algebra()->vertex_name(static_cast<int>(v)) << ")";
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cotilt
