#include "cotilt/spectral.hpp"

#include <algorithm>

namespace cotilt {

namespace {

// A resolution cut or padded to rows 0..depth; m[0] is the augmentation.
struct Res {
    std::vector<FinModule> t;
    std::vector<Matrix> m;
};

Res cut(const Resolution& r, int depth)
{
    Res out;
    const AlgebraPtr& alg = r.module.algebra();
    for (int k = 0; k <= depth; ++k) {
        if (k < static_cast<int>(r.terms.size())) {
            out.t.push_back(r.terms[k]);
            out.m.push_back(r.maps[k].m);
            continue;
        }
        if (!r.complete) fail(Errc::CapExceeded, "resolution shorter than the requested depth");
        out.t.push_back(FinModule::zero(alg, r.module.side()));
        Index prev = k == 0 ? r.module.dim() : out.t[k - 1].dim();
        out.m.push_back(zeros(prev, 0));
    }
    return out;
}

Matrix stack2(const Matrix& a11, const Matrix& a12, const Matrix& a21, const Matrix& a22)
{
    Matrix out(a11.rows() + a21.rows(), a11.cols() + a12.cols());
    out.setZero();
    out.block(0, 0, a11.rows(), a11.cols()) = a11;
    out.block(0, a11.cols(), a12.rows(), a12.cols()) = a12;
    out.block(a11.rows(), 0, a21.rows(), a21.cols()) = a21;
    out.block(a11.rows(), a11.cols(), a22.rows(), a22.cols()) = a22;
    return out;
}

Matrix hcat(const Matrix& a, const Matrix& b)
{
    Matrix out(std::max(a.rows(), b.rows()), a.cols() + b.cols());
    out << a, b;
    return out;
}

// Resolution of the middle of 0 -> A' -i-> A -pi-> A'' -> 0 from those of the ends.
Res horseshoe(const FinModule& mid, const Matrix& i, const Matrix& pi, const Res& r1, const Res& r2)
{
    const int depth = static_cast<int>(r1.t.size()) - 1;
    Res out;
    for (int k = 0; k <= depth; ++k) out.t.push_back(direct_sum({r1.t[k], r2.t[k]}).module);
    // lambda: F''_0 -> A over the augmentation of A'' (lift_through reads only sources)
    FinModule any = FinModule::zero(mid.algebra(), mid.side());
    Matrix lambda = lift_through({r2.t[0], any, r2.m[0]}, {mid, any, pi}).m;
    Matrix a0 = i * r1.m[0];
    out.m.push_back(hcat(a0, lambda));
    Matrix sigma;
    for (int k = 1; k <= depth; ++k) {
        if (k == 1) {
            sigma = lift_through({r2.t[1], mid, Matrix(-lambda * r2.m[1])}, {r1.t[0], mid, a0}).m;
        } else {
            sigma = lift_through({r2.t[k], r1.t[k - 2], Matrix(-sigma * r2.m[k])}, {r1.t[k - 1], r1.t[k - 2], r1.m[k - 1]}).m;
        }
        out.m.push_back(stack2(r1.m[k], sigma, zeros(r2.m[k].rows(), r1.m[k].cols()), r2.m[k]));
    }
    return out;
}

Sub zero_sub(const FinModule& m)
{
    return {FinModule::zero(m.algebra(), m.side()), zeros(m.dim(), 0), zeros(0, m.dim())};
}

Matrix select_rows(const Matrix& m, Index from, Index to) { return m.block(from, 0, to - from, m.cols()); }

}  // namespace

CEResolution cartan_eilenberg(const Complex& c, int depth, std::vector<SubQuot> coh)
{
    CEResolution ce;
    ce.c = c;
    ce.depth = depth;
    const int cols = static_cast<int>(c.terms.size());
    const bool given = !coh.empty();
    if (given && static_cast<int>(coh.size()) != cols) fail(Errc::InvalidArgument, "one cohomology model per degree");
    std::vector<Sub> z(cols), b(cols + 1);
    for (int a = 0; a < cols; ++a) {
        const int deg = c.lo + a;
        z[a] = kernel(c.diff_map(deg));
        b[a] = a == 0 ? zero_sub(c.term(deg)) : image(c.diff_map(deg - 1));
    }
    b[cols] = zero_sub(c.term(c.hi() + 1));
    for (int a = 0; a < cols; ++a) {
        if (!given) coh.push_back(subquotient(c.term(c.lo + a), z[a].incl, b[a].incl));
        ce.coh.push_back(coh[a]);
    }
    for (int a = 0; a <= cols; ++a) ce.res_b.push_back(free_resolution(b[a].module, depth));
    for (int a = 0; a < cols; ++a) ce.res_h.push_back(free_resolution(ce.coh[a].module, depth));
    std::vector<Res> rb;
    for (const auto& r : ce.res_b) rb.push_back(cut(r, depth));
    for (int a = 0; a < cols; ++a) {
        const int deg = c.lo + a;
        Res rh = cut(ce.res_h[a], depth);
        Matrix i_bz = z[a].retract * b[a].incl;
        Matrix pi_zh = ce.coh[a].to_quot * z[a].incl;
        Res rz = horseshoe(z[a].module, i_bz, pi_zh, rb[a], rh);
        Matrix pi = b[a + 1].retract * c.diff(deg);
        Res rc = horseshoe(c.term(deg), z[a].incl, pi, rz, rb[a + 1]);
        ce.q.push_back(rc.t);
        ce.vert.push_back(rc.m);
        std::vector<std::array<Index, 3>> parts;
        for (int k = 0; k <= depth; ++k) parts.push_back({rb[a].t[k].dim(), rh.t[k].dim(), rb[a + 1].t[k].dim()});
        ce.parts.push_back(std::move(parts));
    }
    for (int a = 0; a + 1 < cols; ++a) {
        std::vector<Matrix> row;
        for (int k = 0; k <= depth; ++k) {
            const auto& p = ce.parts[a][k];
            Matrix h = zeros(ce.q[a + 1][k].dim(), ce.q[a][k].dim());
            h.block(0, p[0] + p[1], p[2], p[2]) = identity(p[2]);
            row.push_back(std::move(h));
        }
        ce.horiz.push_back(std::move(row));
    }
    return ce;
}

bool check_cartan_eilenberg(const CEResolution& ce, std::string* why)
{
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Complex& c = ce.c;
    for (int a = 0; a < ce.columns(); ++a) {
        const int deg = c.lo + a;
        const auto& q = ce.q[a];
        const auto& v = ce.vert[a];
        if (rank(v[0]) != c.term(deg).dim()) return bad("augmentation of column " + std::to_string(deg) + " not onto");
        for (int k = 0; k <= ce.depth; ++k) {
            if (!is_homomorphism({q[k], k == 0 ? c.term(deg) : q[k - 1], v[k]}))
                return bad("vertical map not a homomorphism");
            if (k < ce.depth) {
                Matrix prod = v[k] * v[k + 1];
                if (!is_zero(prod)) return bad("column " + std::to_string(deg) + " is not a complex");
                if (rank(v[k + 1]) != q[k].dim() - rank(v[k])) return bad("column " + std::to_string(deg) + " not exact");
            }
        }
        if (a + 1 < ce.columns())
            for (int k = 0; k <= ce.depth; ++k) {
                const Matrix& h = ce.horiz[a][k];
                Matrix lhs = k == 0 ? Matrix(ce.vert[a + 1][0] * h) : Matrix(ce.vert[a + 1][k] * h);
                Matrix rhs = k == 0 ? Matrix(c.diff(deg) * v[0]) : Matrix(ce.horiz[a][k - 1] * v[k]);
                if (lhs != rhs) return bad("square at column " + std::to_string(deg) + " row " + std::to_string(k));
                if (a + 2 < ce.columns() && !is_zero(Matrix(ce.horiz[a + 1][k] * h))) return bad("rows are not complexes");
            }
        // horizontal cohomology of row k is RH_k, boundaries RB_k
        for (int k = 0; k <= ce.depth; ++k) {
            const auto& p = ce.parts[a][k];
            Index ker = q[k].dim() - (a + 1 < ce.columns() ? rank(ce.horiz[a][k]) : 0);
            Index im = a > 0 ? rank(ce.horiz[a - 1][k]) : 0;
            if (im != p[0] || ker - im != p[1]) return bad("row splitting fails at column " + std::to_string(deg));
        }
    }
    return true;
}

FinModule DoubleComplex::cell(int x, int y) const
{
    auto it = cells.find({x, y});
    return it == cells.end() ? FinModule::zero(alg, side) : it->second;
}

Matrix DoubleComplex::h(int x, int y) const
{
    auto it = dh.find({x, y});
    return it == dh.end() ? zeros(cell(x + 1, y).dim(), cell(x, y).dim()) : it->second;
}

Matrix DoubleComplex::v(int x, int y) const
{
    auto it = dv.find({x, y});
    return it == dv.end() ? zeros(cell(x, y + 1).dim(), cell(x, y).dim()) : it->second;
}

bool check_double_complex(const DoubleComplex& k, std::string* why)
{
    auto bad = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int x = k.x_lo; x <= k.x_hi; ++x)
        for (int y = 0; y <= k.y_hi; ++y) {
            std::string at = " at (" + std::to_string(x) + "," + std::to_string(y) + ")";
            if (!is_homomorphism({k.cell(x, y), k.cell(x + 1, y), k.h(x, y)})) return bad("d_h not a homomorphism" + at);
            if (!is_homomorphism({k.cell(x, y), k.cell(x, y + 1), k.v(x, y)})) return bad("d_v not a homomorphism" + at);
            if (!is_zero(Matrix(k.h(x + 1, y) * k.h(x, y)))) return bad("d_h squared" + at);
            if (!is_zero(Matrix(k.v(x, y + 1) * k.v(x, y)))) return bad("d_v squared" + at);
            if (!is_zero(Matrix(k.h(x, y + 1) * k.v(x, y) + k.v(x + 1, y) * k.h(x, y)))) return bad("anticommutation" + at);
        }
    return true;
}

DualCE dual_double_complex(const HomDual& d, const CEResolution& ce)
{
    DualCE out;
    DoubleComplex& k = out.k;
    k.alg = d.u_dst.algebra();
    k.side = d.dst_side;
    const int cols = ce.columns();
    k.x_lo = -(ce.c.lo + cols - 1);
    k.x_hi = -ce.c.lo;
    k.y_hi = ce.depth;
    auto xof = [&](int a) { return -(ce.c.lo + a); };
    for (int a = 0; a < cols; ++a)
        for (int y = 0; y <= ce.depth; ++y) {
            out.images.emplace(std::make_pair(xof(a), y), dualize(d, ce.q[a][y]));
            k.cells[{xof(a), y}] = out.images.at({xof(a), y}).module;
        }
    for (int a = 0; a < cols; ++a)
        for (int y = 0; y < ce.depth; ++y) {
            const int x = xof(a);
            const DualImage& src = out.images.at({x, y});
            const DualImage& tgt = out.images.at({x, y + 1});
            Matrix m = dualize_map(d, {ce.q[a][y + 1], ce.q[a][y], ce.vert[a][y + 1]}, src, tgt).m;
            if (x % 2 != 0) m = -m;
            k.dv[{x, y}] = std::move(m);
        }
    for (int a = 0; a + 1 < cols; ++a)
        for (int y = 0; y <= ce.depth; ++y) {
            // Hom(Q^{a+1}) at x-1 -> Hom(Q^a) at x
            const int x = xof(a + 1);
            k.dh[{x, y}] = dualize_map(d, {ce.q[a][y], ce.q[a + 1][y], ce.horiz[a][y]}, out.images.at({x, y}),
                                       out.images.at({x + 1, y}))
                               .m;
        }
    return out;
}

Index TotalComplex::start(int s, int p) const
{
    auto it = blocks.find(s);
    if (it == blocks.end()) return 0;
    Index off = 0;
    for (const auto& b : it->second) {
        if (b.y >= p) return b.offset;
        off = b.offset + b.size;
    }
    return off;
}

Vector TotalComplex::embed(int s, int x, int y, const Vector& v) const
{
    Vector out = Vector::Zero(complex.term(s).dim());
    for (const auto& b : blocks.at(s))
        if (b.x == x && b.y == y) out.segment(b.offset, b.size) = v;
    return out;
}

Vector TotalComplex::component(int s, int x, int y, const Vector& v) const
{
    for (const auto& b : blocks.at(s))
        if (b.x == x && b.y == y) return v.segment(b.offset, b.size);
    return Vector(0);
}

TotalComplex total_complex(const DoubleComplex& k)
{
    TotalComplex t;
    Complex& c = t.complex;
    c.alg = k.alg;
    c.side = k.side;
    c.lo = k.x_lo;
    const int hi = k.x_hi + k.y_hi;
    for (int s = c.lo; s <= hi; ++s) {
        std::vector<FinModule> parts;
        Index off = 0;
        auto& bl = t.blocks[s];
        for (int y = 0; y <= k.y_hi; ++y) {
            const int x = s - y;
            if (x < k.x_lo || x > k.x_hi) continue;
            FinModule m = k.cell(x, y);
            bl.push_back({x, y, off, m.dim()});
            off += m.dim();
            parts.push_back(m);
        }
        c.terms.push_back(parts.empty() ? FinModule::zero(k.alg, k.side) : direct_sum(parts).module);
    }
    for (int s = c.lo; s < hi; ++s) {
        Matrix d = zeros(c.terms[s + 1 - c.lo].dim(), c.terms[s - c.lo].dim());
        for (const auto& b : t.blocks[s]) {
            for (const auto& b2 : t.blocks[s + 1]) {
                if (b2.x == b.x + 1 && b2.y == b.y) d.block(b2.offset, b.offset, b2.size, b.size) = k.h(b.x, b.y);
                if (b2.x == b.x && b2.y == b.y + 1) d.block(b2.offset, b.offset, b2.size, b.size) = k.v(b.x, b.y);
            }
        }
        c.diffs.push_back(std::move(d));
    }
    return t;
}

RowSpectral::RowSpectral(TotalComplex t, int p_lo, int p_hi, int q_lo, int q_hi)
    : t_(std::move(t)), p_lo_(p_lo), p_hi_(p_hi), q_lo_(q_lo), q_hi_(q_hi)
{
}

const Matrix& RowSpectral::z(int s, int p, int r) const
{
    std::array<int, 3> key{s, p, r};
    auto it = zc_.find(key);
    if (it != zc_.end()) return it->second;
    const Complex& c = t_.complex;
    const Index n = c.term(s).dim();
    const Index from = t_.start(s, p);
    Matrix out;
    if (r == 0) {
        out = zeros(n, n - from);
        out.block(from, 0, n - from, n - from) = identity(n - from);
    } else {
        Matrix d = c.diff(s);
        const Index upto = r < 0 ? d.rows() : t_.start(s + 1, p + r);
        Matrix sub = d.block(0, from, upto, n - from);
        Matrix kb = upto == 0 ? identity(n - from) : kernel_basis(sub);
        out = zeros(n, kb.cols());
        out.block(from, 0, n - from, kb.cols()) = kb;
    }
    return zc_.emplace(key, std::move(out)).first->second;
}

Matrix RowSpectral::b(int s, int p, int r) const
{
    const Complex& c = t_.complex;
    if (r < 0) {
        Matrix im = c.diff(s - 1);
        const Index n = c.term(s).dim();
        const Index from = t_.start(s, p);
        Matrix fp = zeros(n, n - from);
        fp.block(from, 0, n - from, n - from) = identity(n - from);
        return intersect(im, fp);
    }
    return c.diff(s - 1) * z(s - 1, p - r + 1, r - 1);
}

Page RowSpectral::page(int r) const
{
    Page pg;
    pg.r = r;
    const Complex& c = t_.complex;
    for (int p = p_lo_; p <= p_hi_; ++p)
        for (int q = q_lo_; q <= q_hi_; ++q) {
            const int s = p + q;
            Matrix num = z(s, p, r);
            Matrix den = span_sum(z(s, p + 1, r - 1), b(s, p, r));
            pg.cells.emplace(std::make_pair(p, q), subquotient(c.term(s), num, den));
        }
    for (int p = p_lo_; p <= p_hi_; ++p)
        for (int q = q_lo_; q <= q_hi_; ++q) {
            auto tgt = pg.cells.find({p + r, q - r + 1});
            if (tgt == pg.cells.end()) continue;
            const SubQuot& src = pg.cells.at({p, q});
            pg.diffs[{p, q}] = tgt->second.to_quot * c.diff(p + q) * src.lift;
        }
    return pg;
}

Page RowSpectral::limit() const
{
    Page pg;
    pg.r = 0;
    const Complex& c = t_.complex;
    for (int p = p_lo_; p <= p_hi_; ++p)
        for (int q = q_lo_; q <= q_hi_; ++q) {
            const int s = p + q;
            Matrix den = span_sum(z(s, p + 1, -1), b(s, p, -1));
            pg.cells.emplace(std::make_pair(p, q), subquotient(c.term(s), z(s, p, -1), den));
        }
    return pg;
}

const SubQuot& RowSpectral::cohomology(int s) const
{
    auto it = hc_.find(s);
    if (it != hc_.end()) return it->second;
    return hc_.emplace(s, cohomology_sq(t_.complex, s)).first->second;
}

Matrix RowSpectral::filtration(int s, int p) const
{
    const SubQuot& h = cohomology(s);
    Matrix img = h.to_quot * z(s, p, -1);
    return img.cols() == 0 ? zeros(h.module.dim(), 0) : column_basis(img);
}

Vector RowSpectral::page_class(const Page& pg, int p, int q, const Vector& x) const
{
    const int s = p + q;
    const int r = pg.r == 0 ? -1 : pg.r;
    const Matrix& zr = z(s, p, r);
    const Index from = t_.start(s, p), to = t_.start(s, p + 1);
    Matrix lead = select_rows(zr, from, to);
    Matrix rhs = x.segment(from, to - from);
    if (!is_zero(x.head(from))) fail(Errc::InvalidArgument, "element outside F^p");
    auto sol = solve(lead, rhs);
    if (!sol) fail(Errc::InvalidArgument, "element does not define a class on this page");
    Vector zv = zr * sol->col(0);
    return pg.cells.at({p, q}).to_quot * zv;
}

Vector RowSpectral::cycle_rep(int r, int p, int q, const Vector& zv) const
{
    const int s = p + q;
    const Matrix& zinf = z(s, p, -1);
    Matrix both = hcat(zinf, z(s, p + 1, r - 1));
    auto sol = solve(both, Matrix(zv));
    if (!sol) fail(Errc::InvalidArgument, "class does not survive to the limit");
    return zinf * sol->col(0).head(zinf.cols());
}

const Page& SecondSpectral::page(int r) const
{
    if (r < 2 || r - 2 >= static_cast<int>(pages.size())) return lim;
    return pages[r - 2];
}

ModuleMap SecondSpectral::e2_witness(int p, int j) const
{
    const Page& e2 = pages.at(0);
    const SubQuot& tgt = e2.cells.at({p, -j});
    const int a = j - ce.c.lo;
    DerivedDualTerm src = derived_dual_term(second, ce.res_h[a], p);
    const Index n = src.h.module.dim();
    Matrix m = zeros(tgt.module.dim(), n);
    if (n == 0) return {src.h.module, tgt.module, m};
    const FinModule& qk = ce.q[a][p];
    const auto& parts = ce.parts[a][p];
    Matrix proj = zeros(parts[1], qk.dim());
    proj.block(0, parts[0], parts[1], parts[1]) = identity(parts[1]);
    const int x = -j;
    const DualImage& cell = dual.images.at({x, p});
    Matrix pull = dualize_map(second, {qk, src.term.source, proj}, src.term, cell).m;
    for (Index t = 0; t < n; ++t) {
        Vector g = pull * src.h.lift.col(t);
        m.col(t) = ss->page_class(e2, p, -j, ss->total().embed(p - j, x, p, g));
    }
    return {src.h.module, tgt.module, m};
}

Matrix SecondSpectral::to_abutment(int r, int p, int q, const Matrix& classes) const
{
    const Page& pg = page(r);
    const SubQuot& cell = pg.cells.at({p, q});
    const SubQuot& h = ss->cohomology(p + q);
    const int rr = pg.r == 0 ? -1 : pg.r;
    Matrix out(h.module.dim(), classes.cols());
    for (Index t = 0; t < classes.cols(); ++t) {
        Vector zv = cell.lift * classes.col(t);
        Vector cyc = rr < 0 ? zv : ss->cycle_rep(rr, p, q, zv);
        out.col(t) = h.to_quot * cyc;
    }
    return out;
}

Matrix SecondSpectral::filtration_of_a(int p) const
{
    if (!unit_invertible()) fail(Errc::NotDReflexive, "the unit a -> H^0 is not invertible");
    Matrix f = ss->filtration(0, p);
    if (f.cols() == 0) return zeros(a.dim(), 0);
    return inverse(unit.m) * f;
}

namespace {

Complex resolution_complex(const Resolution& r)
{
    Complex p;
    p.alg = r.module.algebra();
    p.side = r.module.side();
    const int len = static_cast<int>(r.terms.size());
    p.lo = -(len - 1);
    for (int k = p.lo; k <= 0; ++k) p.terms.push_back(r.terms[-k]);
    for (int k = p.lo; k < 0; ++k) p.diffs.push_back(r.maps[-k].m);
    return p;
}

Matrix right_inverse(const Matrix& e)
{
    if (e.rows() == 0) return zeros(e.cols(), 0);
    Matrix et = e.transpose();
    return et * inverse(Matrix(e * et));
}

}  // namespace

SecondSpectral second_spectral(const HomDual& first, const HomDual& second, const FinModule& a, int n_first, int n_second,
                               int window)
{
    SecondSpectral out;
    out.n_first = n_first;
    out.n_second = n_second;
    out.first = first;
    out.second = second;
    out.a = a;
    const int n = n_first;
    out.res = free_resolution(a, n + 1);
    out.d = dual_complex(first, resolution_complex(out.res));
    out.trunc = truncate(out.d.complex, n, Trunc::SigmaLe);
    const Complex& c = out.trunc.complex;
    std::vector<SubQuot> coh;
    for (int j = 0; j <= n; ++j) {
        out.r_first.push_back(derived_dual_term(first, out.res, j));
        SubQuot h = out.r_first.back().h;
        if (j == n) {
            Matrix incl = out.trunc.map.at(n);
            h.to_quot = h.to_quot * incl;
            h.lift = left_inverse(incl) * h.lift;
        }
        coh.push_back(std::move(h));
    }
    if (c.lo != 0 || c.hi() != n) fail(Errc::InvalidArgument, "unexpected truncation range");
    const int p_hi = std::max(n_second, window), q_depth = std::max(n, window);
    const int depth = p_hi + 2 * q_depth + 2;
    out.ce = cartan_eilenberg(c, depth, coh);
    out.dual = dual_double_complex(second, out.ce);
    out.ss = std::make_shared<RowSpectral>(total_complex(out.dual.k), 0, p_hi, -q_depth, 0);
    const int r_max = std::max(2, std::min(n + 2, n_second + 1));
    for (int r = 2; r <= r_max; ++r) out.pages.push_back(out.ss->page(r));
    out.lim = out.ss->limit();
    out.stable = r_max;
    for (int r = r_max; r >= 2; --r) {
        bool zero = true;
        for (const auto& [k, m] : out.pages[r - 2].diffs) zero = zero && is_zero(m);
        if (!zero) break;
        out.stable = r;
    }

    // a -> P_0 -> second(first(P_0)) -> second(Q^0_0) -> H^0(Tot)
    const SubQuot& h0 = out.ss->cohomology(0);
    Matrix unit = zeros(h0.module.dim(), a.dim());
    if (a.dim() > 0) {
        Matrix sect = right_inverse(out.res.maps[0].m);
        const DualImage& fp0 = out.d.images.at(0);
        DualImage sfp0 = dualize(second, fp0.module);
        Matrix eta = evaluation(fp0, sfp0).m;
        Matrix e = out.trunc.map.at(0) * out.ce.vert[0][0];
        const DualImage& cell = out.dual.images.at({0, 0});
        Matrix pull = dualize_map(second, {out.ce.q[0][0], fp0.module, e}, sfp0, cell).m;
        Matrix img = pull * eta * sect;
        const TotalComplex& t = out.ss->total();
        Matrix d0 = t.complex.diff(0);
        for (Index k = 0; k < a.dim(); ++k) {
            Vector v = t.embed(0, 0, 0, img.col(k));
            if (!is_zero(Matrix(d0 * v))) fail(Errc::InvalidArgument, "unit does not land in cycles");
            unit.col(k) = h0.to_quot * v;
        }
    }
    out.unit = {a, h0.module, unit};
    return out;
}

SecondSpectral second_spectral(const DualityContext& ctx, const FinModule& a)
{
    if (!ctx.projectives_acyclic()) fail(Errc::AcyclicityUnavailable, "Φ(P) is not Ψ-acyclic for some projective P");
    return second_spectral(ctx.phi_side(), ctx.psi_side(), a, ctx.n_phi(), ctx.n_psi());
}

SecondSpectral second_spectral_right(const DualityContext& ctx, const FinModule& b)
{
    return second_spectral(ctx.psi_side(), ctx.phi_side(), b, ctx.n_psi(), ctx.n_phi());
}

}  // namespace cotilt
