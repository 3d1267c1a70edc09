#include "cotilt/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cotilt {

Quiver::Quiver(int vertex_count, int first_label) : n_(vertex_count), first_(first_label)
{
    if (vertex_count < 0) fail(Errc::InvalidArgument, "negative vertex count");
}

int Quiver::index_of(int label) const
{
    if (!has_label(label)) fail(Errc::SemanticError, "vertex " + std::to_string(label) + " out of range");
    return label - first_;
}

int Quiver::add_arrow(const std::string& name, int source_label, int target_label)
{
    if (arrow_index(name) >= 0) fail(Errc::SemanticError, "duplicate arrow " + name);
    arrows_.push_back({name, index_of(source_label), index_of(target_label)});
    return static_cast<int>(arrows_.size()) - 1;
}

int Quiver::arrow_index(const std::string& name) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return static_cast<int>(i);
    return -1;
}

std::string path_name(const Quiver& q, const BasisPath& p)
{
    if (p.arrows.empty()) return "e" + std::to_string(q.label(p.source));
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows()[p.arrows[i]].name;
    }
    return s;
}

namespace {

using PathKey = std::pair<int, Path>;  // (source, arrows)

bool canonical_less(const Quiver& q, const BasisPath& a, const BasisPath& b)
{
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.length() == 0) return a.source < b.source;
    for (int i = 0; i < a.length(); ++i) {
        const auto& na = q.arrows()[a.arrows[i]].name;
        const auto& nb = q.arrows()[b.arrows[i]].name;
        if (na != nb) return na < nb;
    }
    return false;
}

// All paths of length ≤ maxlen, in canonical order.
std::vector<BasisPath> enumerate_paths(const Quiver& q, int maxlen, std::size_t budget)
{
    std::vector<BasisPath> out, layer;
    for (int v = 0; v < q.vertex_count(); ++v) layer.push_back({v, v, {}});
    for (int len = 0;; ++len) {
        std::sort(layer.begin(), layer.end(), [&](const auto& a, const auto& b) { return canonical_less(q, a, b); });
        out.insert(out.end(), layer.begin(), layer.end());
        if (out.size() > budget) fail(Errc::InfiniteDimensional, "path enumeration exceeded budget");
        if (len == maxlen) break;
        std::vector<BasisPath> next;
        for (const auto& p : layer)
            for (std::size_t a = 0; a < q.arrows().size(); ++a)
                if (q.arrows()[a].source == p.target) {
                    BasisPath n = p;
                    n.arrows.push_back(static_cast<int>(a));
                    n.target = q.arrows()[a].target;
                    next.push_back(std::move(n));
                }
        layer = std::move(next);
    }
    return out;
}

void validate(const AlgebraPresentation& p)
{
    const Quiver& q = p.quiver;
    for (const auto& r : p.relations) {
        if (r.terms.empty()) fail(Errc::NonAdmissible, "empty relation");
        int s = -1, t = -1;
        for (const auto& term : r.terms) {
            if (term.path.size() < 2) fail(Errc::NonAdmissible, "relation term of length < 2");
            for (std::size_t i = 0; i + 1 < term.path.size(); ++i)
                if (q.arrows()[term.path[i]].target != q.arrows()[term.path[i + 1]].source)
                    fail(Errc::NonAdmissible, "relation path not composable");
            int ts = q.arrows()[term.path.front()].source, tt = q.arrows()[term.path.back()].target;
            if (s < 0) { s = ts; t = tt; }
            else if (s != ts || t != tt) fail(Errc::NonAdmissible, "relation terms do not share source and target");
        }
    }
}

struct Reduction {
    int nil = 0;                         // J^nil ⊆ I
    std::vector<BasisPath> paths;        // all paths of length < nil, canonical order
    std::map<PathKey, int> index;        // path -> position in paths
    std::vector<int> basis;              // positions of basis paths
    std::vector<SparseVec> normal;       // normal form of each path over basis indices
};

// Rows spanning the image of the ideal in kQ/J^{cut}: paths x·r·y with total length < cut.
Matrix ideal_rows(const AlgebraPresentation& p, const std::vector<BasisPath>& paths,
                  const std::map<PathKey, int>& index, int cut)
{
    const Quiver& q = p.quiver;
    const Index ncols = static_cast<Index>(paths.size());
    std::vector<std::vector<std::pair<int, Scalar>>> rows;
    for (const auto& r : p.relations) {
        int minlen = 1 << 30;
        for (const auto& t : r.terms) minlen = std::min<int>(minlen, static_cast<int>(t.path.size()));
        int s = q.arrows()[r.terms[0].path.front()].source;
        int t = q.arrows()[r.terms[0].path.back()].target;
        for (const auto& x : paths) {
            if (x.target != s || x.length() + minlen >= cut) continue;
            for (const auto& y : paths) {
                if (y.source != t || x.length() + y.length() + minlen >= cut) continue;
                std::vector<std::pair<int, Scalar>> row;
                for (const auto& term : r.terms) {
                    Path full = x.arrows;
                    full.insert(full.end(), term.path.begin(), term.path.end());
                    full.insert(full.end(), y.arrows.begin(), y.arrows.end());
                    if (static_cast<int>(full.size()) >= cut) continue;
                    int src = q.arrows()[full.front()].source;
                    row.push_back({index.at({src, full}), term.coeff});
                }
                if (!row.empty()) rows.push_back(std::move(row));
            }
        }
    }
    // Columns run from the largest path to the smallest, so pivots land on large paths.
    Matrix m = Matrix::Zero(static_cast<Index>(rows.size()), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) m(static_cast<Index>(i), ncols - 1 - c) += v;
    return m;
}

Reduction reduce_presentation(const AlgebraPresentation& p)
{
    validate(p);
    const Quiver& q = p.quiver;
    const std::size_t budget = 20000;
    for (int n = 1; n <= p.path_bound; ++n) {
        auto upto = enumerate_paths(q, n, budget);
        std::map<PathKey, int> idx;
        for (std::size_t i = 0; i < upto.size(); ++i) idx[{upto[i].source, upto[i].arrows}] = static_cast<int>(i);
        const Index ncols = static_cast<Index>(upto.size());
        Matrix m = ideal_rows(p, upto, idx, n + 1);
        auto e = rref(m);
        std::map<Index, std::size_t> row_of;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) row_of[e.pivots[i]] = i;
        bool closes = true;
        for (std::size_t i = 0; i < upto.size() && closes; ++i) {
            if (upto[i].length() != n) continue;
            Index col = ncols - 1 - static_cast<Index>(i);
            auto it = row_of.find(col);
            if (it == row_of.end()) { closes = false; break; }
            for (Index j = 0; j < ncols; ++j)
                if (j != col && !e.r(static_cast<Index>(it->second), j).is_zero()) { closes = false; break; }
        }
        if (!closes) continue;

        Reduction red;
        red.nil = n;
        for (const auto& path : upto)
            if (path.length() < n) red.paths.push_back(path);
        for (std::size_t i = 0; i < red.paths.size(); ++i)
            red.index[{red.paths[i].source, red.paths[i].arrows}] = static_cast<int>(i);
        const Index nc = static_cast<Index>(red.paths.size());
        Matrix mi = ideal_rows(p, red.paths, red.index, n);
        auto ei = rref(mi);
        std::vector<int> pivot_row(red.paths.size(), -1);
        for (std::size_t i = 0; i < ei.pivots.size(); ++i)
            pivot_row[nc - 1 - ei.pivots[i]] = static_cast<int>(i);
        std::vector<int> basis_pos(red.paths.size(), -1);
        for (std::size_t i = 0; i < red.paths.size(); ++i)
            if (pivot_row[i] < 0) {
                basis_pos[i] = static_cast<int>(red.basis.size());
                red.basis.push_back(static_cast<int>(i));
            }
        red.normal.resize(red.paths.size());
        for (std::size_t i = 0; i < red.paths.size(); ++i) {
            if (basis_pos[i] >= 0) {
                red.normal[i].push_back({basis_pos[i], Scalar(1)});
                continue;
            }
            Index row = pivot_row[i];
            for (std::size_t j = 0; j < red.paths.size(); ++j) {
                if (basis_pos[j] < 0) continue;
                const Scalar& c = ei.r(row, nc - 1 - static_cast<Index>(j));
                if (!c.is_zero()) red.normal[i].push_back({basis_pos[j], -c});
            }
        }
        return red;
    }
    fail(Errc::InfiniteDimensional, "no nilpotency index within path bound " + std::to_string(p.path_bound));
}

}  // namespace

PathBasis path_basis(const AlgebraPresentation& p)
{
    auto red = reduce_presentation(p);
    PathBasis b;
    for (int i : red.basis) b.paths.push_back(red.paths[i]);
    return b;
}

AlgebraPtr to_basis_algebra(const AlgebraPresentation& p)
{
    auto red = reduce_presentation(p);
    const Quiver& q = p.quiver;
    BasisAlgebra::Spec s;
    s.field = p.field;
    s.quiver = q;
    const int d = static_cast<int>(red.basis.size());
    std::vector<BasisPath> bp;
    for (int i : red.basis) bp.push_back(red.paths[i]);
    for (int v = 0; v < q.vertex_count(); ++v) s.vertex_names.push_back(std::to_string(q.label(v)));
    s.idem.assign(q.vertex_count(), -1);
    for (int i = 0; i < d; ++i) {
        s.labels.push_back(path_name(q, bp[i]));
        s.lvert.push_back(bp[i].target);
        s.rvert.push_back(bp[i].source);
        if (bp[i].length() == 0) s.idem[bp[i].source] = i;
    }
    std::map<Path, int> arrow_pos;
    for (int i = 0; i < d; ++i)
        if (bp[i].length() == 1) arrow_pos[bp[i].arrows] = i;
    for (int i = 0; i < d; ++i) {
        std::vector<int> w;
        for (int a : bp[i].arrows) w.push_back(arrow_pos.at({a}));
        s.words.push_back(w);
    }
    s.table.assign(d, std::vector<SparseVec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // b_i · b_j is "b_j, then b_i"
            if (bp[j].target != bp[i].source) continue;
            Path full = bp[j].arrows;
            full.insert(full.end(), bp[i].arrows.begin(), bp[i].arrows.end());
            if (static_cast<int>(full.size()) >= red.nil) continue;
            for (auto c : red.normal[red.index.at({bp[j].source, full})]) s.table[i][j].push_back(c);
            for (auto& c : s.table[i][j]) c.second = Scalar(c.second.value(), p.field.p);
        }
    return std::make_shared<const BasisAlgebra>(std::move(s));
}

BasisAlgebra::BasisAlgebra(Spec s) : s_(std::move(s))
{
    const int d = dim();
    if (static_cast<int>(s_.lvert.size()) != d || static_cast<int>(s_.rvert.size()) != d ||
        static_cast<int>(s_.table.size()) != d || static_cast<int>(s_.words.size()) != d)
        fail(Errc::InvalidArgument, "inconsistent algebra data");
    if (s_.vertex_names.size() != s_.idem.size()) fail(Errc::InvalidArgument, "vertex names do not match idempotents");
    for (int v = 0; v < vertex_count(); ++v) {
        int e = s_.idem[v];
        if (e < 0 || e >= d || !s_.words[e].empty() || s_.lvert[e] != v || s_.rvert[e] != v)
            fail(Errc::InvalidArgument, "bad vertex idempotent");
    }
    std::set<int> g;
    for (int i = 0; i < d; ++i) {
        if (s_.words[i].empty() && s_.idem[s_.lvert[i]] != i)
            fail(Errc::InvalidArgument, "empty word on a non-idempotent basis element");
        for (int x : s_.words[i]) g.insert(x);
    }
    gens_.assign(g.begin(), g.end());
    // Homogeneity and the unit: e_v b = [v = lvert(b)] b, b e_v = [v = rvert(b)] b.
    for (int i = 0; i < d; ++i)
        for (int v = 0; v < vertex_count(); ++v) {
            const auto& l = s_.table[s_.idem[v]][i];
            const auto& r = s_.table[i][s_.idem[v]];
            bool lok = (v == s_.lvert[i]) ? (l.size() == 1 && l[0].first == i && l[0].second.is_one()) : l.empty();
            bool rok = (v == s_.rvert[i]) ? (r.size() == 1 && r[0].first == i && r[0].second.is_one()) : r.empty();
            if (!lok || !rok) fail(Errc::InvalidArgument, "basis element not homogeneous for the idempotents");
        }
    if (!is_associative(*this)) fail(Errc::InvalidArgument, "structure constants are not associative");
    // Words must multiply out to their basis element.
    for (int i = 0; i < d; ++i) {
        const auto& w = s_.words[i];
        if (w.size() <= 1) {
            if (w.size() == 1 && w[0] != i) fail(Errc::InvalidArgument, "bad generator word");
            continue;
        }
        Vector acc = basis_vector(w[0]);
        for (std::size_t k = 1; k < w.size(); ++k) acc = mul(basis_vector(w[k]), acc);
        if (acc != basis_vector(i)) fail(Errc::InvalidArgument, "word does not reproduce basis element");
    }
    if (s_.quiver)
        for (const auto& a : s_.quiver->arrows()) {
            auto it = std::find(s_.labels.begin(), s_.labels.end(), a.name);
            arrow_basis_.push_back(it == s_.labels.end() ? -1 : static_cast<int>(it - s_.labels.begin()));
        }
    if (s_.field.is_rational()) radical_ = cotilt::radical(*this);
}

Vector BasisAlgebra::mul(const Vector& x, const Vector& y) const
{
    Vector out = Vector::Zero(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x(i).is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y(j).is_zero()) continue;
            Scalar c = x(i) * y(j);
            for (const auto& [k, v] : s_.table[i][j]) out(k) += c * v;
        }
    }
    return out;
}

Vector BasisAlgebra::unit() const
{
    Vector u = Vector::Zero(dim());
    for (int e : s_.idem) u(e) = s_.field.one();
    return u;
}

Vector BasisAlgebra::basis_vector(int i) const
{
    Vector u = Vector::Zero(dim());
    u(i) = s_.field.one();
    return u;
}

const Matrix& BasisAlgebra::radical() const
{
    if (!radical_) fail(Errc::CharNotZero, "radical needs characteristic 0 (field " + s_.field.name() + ")");
    return *radical_;
}

Matrix BasisAlgebra::left_matrix(int i) const
{
    Matrix m = Matrix::Zero(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [k, v] : s_.table[i][j]) m(k, j) += v;
    return m;
}

Matrix BasisAlgebra::left_matrix(const Vector& x) const
{
    Matrix m = Matrix::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i)
        if (!x(i).is_zero())
            for (int j = 0; j < dim(); ++j)
                for (const auto& [k, v] : s_.table[i][j]) m(k, j) += x(i) * v;
    return m;
}

bool is_associative(const BasisAlgebra& a)
{
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const auto& ij = a.mul(i, j);
            for (int k = 0; k < d; ++k) {
                std::map<int, Scalar> lhs, rhs;
                for (const auto& [m, c] : ij)
                    for (const auto& [n, e] : a.mul(m, k)) lhs[n] += c * e;
                for (const auto& [m, c] : a.mul(j, k))
                    for (const auto& [n, e] : a.mul(i, m)) rhs[n] += c * e;
                std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
                std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
                if (lhs != rhs) return false;
            }
        }
    return true;
}

Matrix radical(const BasisAlgebra& a)
{
    if (!a.field().is_rational()) fail(Errc::CharNotZero, "radical needs characteristic 0");
    const int d = a.dim();
    std::vector<Scalar> tr(d);
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
            for (const auto& [m, c] : a.mul(k, j))
                if (m == j) tr[k] += c;
    Matrix t = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (const auto& [k, c] : a.mul(i, j)) t(i, j) += c * tr[k];
    Matrix k = kernel_basis(t);
    // The radical is a two-sided ideal, so it splits along the blocks e_v A e_w.
    std::vector<Vector> cols;
    for (int v = 0; v < a.vertex_count(); ++v)
        for (int w = 0; w < a.vertex_count(); ++w) {
            Matrix block = Matrix::Zero(d, k.cols());
            for (int i = 0; i < d; ++i)
                if (a.lvert(i) == v && a.rvert(i) == w) block.row(i) = k.row(i);
            Matrix b = column_basis(block);
            for (Index c = 0; c < b.cols(); ++c) cols.push_back(b.col(c));
        }
    Matrix out(d, static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Index>(c)) = cols[c];
    return out;
}

namespace {

// A semisimple algebra given densely: basis columns of an ambient space with a product.
struct DenseAlg {
    int dim = 0;
    std::vector<std::vector<Vector>> table;  // table[i][j] = coordinates of b_i b_j
    Vector one;

    Vector mul(const Vector& x, const Vector& y) const
    {
        Vector out = Vector::Zero(dim);
        for (int i = 0; i < dim; ++i) {
            if (x(i).is_zero()) continue;
            for (int j = 0; j < dim; ++j)
                if (!y(j).is_zero()) out += (x(i) * y(j)) * table[i][j];
        }
        return out;
    }

    // The subalgebra e·A·e for an idempotent e.
    DenseAlg corner(const Vector& e) const
    {
        Matrix span(dim, dim);
        for (int i = 0; i < dim; ++i) {
            Vector b = Vector::Zero(dim);
            b(i) = Scalar(1);
            span.col(i) = mul(mul(e, b), e);
        }
        Matrix k = column_basis(span);
        Matrix l = left_inverse(k);
        DenseAlg c;
        c.dim = static_cast<int>(k.cols());
        c.table.assign(c.dim, std::vector<Vector>(c.dim));
        for (int i = 0; i < c.dim; ++i)
            for (int j = 0; j < c.dim; ++j) c.table[i][j] = l * mul(k.col(i), k.col(j));
        c.one = l * e;
        return c;
    }
};

using Poly = std::vector<Scalar>;  // low degree first

Poly minimal_poly(const DenseAlg& a, const Vector& x)
{
    std::vector<Vector> pw{a.one};
    for (;;) {
        Vector next = a.mul(x, pw.back());
        Matrix m(a.dim, static_cast<Index>(pw.size()));
        for (std::size_t i = 0; i < pw.size(); ++i) m.col(static_cast<Index>(i)) = pw[i];
        if (auto c = solve(m, Matrix(next)); c && rank(m) == m.cols()) {
            Poly p(pw.size() + 1);
            for (std::size_t i = 0; i < pw.size(); ++i) p[i] = -(*c)(static_cast<Index>(i), 0);
            p.back() = Scalar(1);
            return p;
        }
        pw.push_back(next);
    }
}

Vector eval(const DenseAlg& a, const Poly& p, const Vector& x)
{
    Vector acc = Vector::Zero(a.dim);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = a.mul(x, acc) + (*it) * a.one;
    return acc;
}

Scalar eval(const Poly& p, const Scalar& t)
{
    Scalar acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly divide_linear(const Poly& p, const Scalar& r)
{
    Poly q(p.size() - 1);
    Scalar carry(0);
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        carry = carry * r + p[i + 1];
        q[i] = carry;
    }
    return q;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    std::vector<mpz_class> out;
    if (n < 0) n = -n;
    if (n > mpz_class("1000000000000")) return out;
    for (mpz_class i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            out.push_back(i);
            if (i * i != n) out.push_back(n / i);
        }
    return out;
}

struct Roots {
    std::vector<std::pair<Scalar, int>> roots;  // with multiplicity
    bool splits = false;
};

// Rational roots; nullopt if the search gives up on large coefficients.
std::optional<Roots> rational_roots(Poly p)
{
    Roots out;
    auto& roots = out.roots;
    auto add = [&](const Scalar& r) {
        for (auto& [x, m] : roots)
            if (x == r) { ++m; return; }
        roots.push_back({r, 1});
    };
    while (p.size() > 1 && p[0].is_zero()) {
        p.erase(p.begin());
        add(Scalar(0));
    }
    while (p.size() > 1) {
        mpz_class l = 1;
        for (const auto& c : p) l = lcm(l, c.value().get_den());
        std::vector<mpz_class> ic;
        for (const auto& c : p) ic.push_back(mpz_class(c.value() * l));
        auto ps = divisors(ic.front()), qs = divisors(ic.back());
        if (ps.empty() || qs.empty()) return std::nullopt;
        bool found = false;
        for (const auto& a : ps) {
            for (const auto& b : qs) {
                for (int sg : {1, -1}) {
                    mpq_class cand(sg * a, b);
                    cand.canonicalize();
                    Scalar r(cand);
                    if (eval(p, r).is_zero()) {
                        p = divide_linear(p, r);
                        add(r);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.splits = p.size() <= 1;
    return out;
}

bool split_ss(const DenseAlg& a, int depth);

// Candidate elements: basis vectors, then deterministic small combinations.
std::vector<Vector> candidates(int dim, const Matrix* within, int count)
{
    std::vector<Vector> out;
    const int n = within ? static_cast<int>(within->cols()) : dim;
    auto lift = [&](const Vector& c) { return within ? Vector(*within * c) : c; };
    unsigned long long s = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < count; ++t) {
        Vector c = Vector::Zero(n);
        if (t < n) c(t) = Scalar(1);
        else
            for (int i = 0; i < n; ++i) {
                s = s * 6364136223846793005ull + 1442695040888963407ull;
                c(i) = Scalar(static_cast<long>((s >> 33) % 19) - 9);
            }
        out.push_back(lift(c));
    }
    return out;
}

bool split_by_center(const DenseAlg& a, const Matrix& z, int depth)
{
    const int zd = static_cast<int>(z.cols());
    for (const Vector& x : candidates(a.dim, &z, zd + 16)) {
        Poly m = minimal_poly(a, x);
        if (static_cast<int>(m.size()) - 1 != zd) continue;
        auto roots = rational_roots(m);
        if (!roots) continue;
        if (!roots->splits) return false;  // a field extension sits in the center
        for (const auto& r : roots->roots)
            if (r.second != 1) return false;
        for (const auto& [lam, mult] : roots->roots) {
            Poly g = divide_linear(m, lam);
            Vector f = eval(a, g, x) * eval(g, lam).inverse();
            if (!split_ss(a.corner(f), depth + 1)) return false;
        }
        return true;
    }
    return false;
}

bool split_ss(const DenseAlg& a, int depth)
{
    if (a.dim <= 1) return true;
    if (depth > 32) return false;
    // Center: z with z b_i = b_i z for every basis element.
    Matrix eq = Matrix::Zero(static_cast<Index>(a.dim) * a.dim * a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k)
            for (int r = 0; r < a.dim; ++r)
                eq(static_cast<Index>(i) * a.dim * a.dim + static_cast<Index>(r) * a.dim + k, k) =
                    a.table[k][i](r) - a.table[i][k](r);
    Matrix z = kernel_basis(eq);
    if (z.cols() > 1) return split_by_center(a, z, depth);
    // Simple algebra: look for a proper idempotent from a simple rational root.
    for (const Vector& x : candidates(a.dim, nullptr, a.dim + 24)) {
        Poly m = minimal_poly(a, x);
        if (m.size() <= 2) continue;
        auto roots = rational_roots(m);
        if (!roots) continue;
        for (const auto& [lam, mult] : roots->roots) {
            if (mult != 1) continue;
            Poly g = divide_linear(m, lam);
            Vector e = eval(a, g, x) * eval(g, lam).inverse();
            return split_ss(a.corner(e), depth + 1) && split_ss(a.corner(a.one - e), depth + 1);
        }
    }
    return false;
}

}  // namespace

bool check_split(const BasisAlgebra& a)
{
    const Matrix& j = a.radical();
    const int d = a.dim();
    auto comp = complement_coordinates(j);
    const Index q = static_cast<Index>(comp.size());
    Matrix full(d, j.cols() + q);
    full.leftCols(j.cols()) = j;
    for (Index c = 0; c < q; ++c) {
        full.col(j.cols() + c).setZero();
        full(comp[c], j.cols() + c) = Scalar(1);
    }
    Matrix proj = inverse(full).bottomRows(q);
    DenseAlg b;
    b.dim = static_cast<int>(q);
    b.table.assign(q, std::vector<Vector>(q));
    for (Index x = 0; x < q; ++x)
        for (Index y = 0; y < q; ++y) {
            Vector v = Vector::Zero(d);
            for (const auto& [k, c] : a.mul(static_cast<int>(comp[x]), static_cast<int>(comp[y]))) v(k) += c;
            b.table[x][y] = proj * v;
        }
    b.one = proj * a.unit();
    for (int v = 0; v < a.vertex_count(); ++v) {
        Vector e = proj * a.basis_vector(a.idem(v));
        if (is_zero(e)) continue;
        DenseAlg c = b.corner(e);
        if (c.dim > 1 && !split_ss(c, 0)) return false;
    }
    return true;
}

}  // namespace cotilt
