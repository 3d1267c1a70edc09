#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cotilt/module.hpp"
#include "cotilt/parse.hpp"

using namespace cotilt;

static const char* kA4 = R"([algebra]
vertices = 4
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
relation a*b
relation b*c
)";

static const char* kA4h = R"([algebra]
vertices = 4
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
)";

static const char* kD4 = R"([algebra]
vertices = 4
arrow a: 1 -> 4
arrow b: 2 -> 4
arrow c: 3 -> 4
)";

static const char* kSquare = R"([algebra]
vertices = 4
arrow a: 1 -> 2
arrow b: 1 -> 3
arrow c: 2 -> 4
arrow d: 3 -> 4
relation a*c - b*d
)";

static AlgebraPtr load(const char* t) { return to_basis_algebra(parse_algebra(t)); }

static Matrix random_matrix(std::mt19937_64& rng, Index r, Index c, int lo = -2, int hi = 2)
{
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = Scalar(d(rng));
    return m;
}

// Random representation of a quiver without relations.
static FinModule random_rep(const AlgebraPtr& a, std::mt19937_64& rng, int maxdim = 2)
{
    const Quiver& q = *a->quiver();
    std::uniform_int_distribution<int> dd(0, maxdim);
    std::vector<int> dims(q.vertex_count());
    for (auto& d : dims) d = dd(rng);
    std::vector<Matrix> arrows;
    for (const auto& ar : q.arrows()) arrows.push_back(random_matrix(rng, dims[ar.target], dims[ar.source]));
    return from_representation(a, dims, arrows);
}

// Random module isomorphic to m: conjugate by a graded invertible matrix.
static FinModule scramble(const FinModule& m, std::mt19937_64& rng)
{
    Matrix t = Matrix::Zero(m.dim(), m.dim());
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
        auto b = m.block(v);
        Matrix blk;
        do blk = random_matrix(rng, static_cast<Index>(b.size()), static_cast<Index>(b.size()));
        while (!is_invertible(blk));
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) t(b[i], b[j]) = blk(static_cast<Index>(i), static_cast<Index>(j));
    }
    Matrix ti = inverse(t);
    std::vector<Matrix> acts;
    for (const auto& g : m.gen_actions()) acts.push_back(t * g * ti);
    return FinModule(m.algebra(), m.vertices(), acts, m.side());
}

static int euler_hereditary(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y)
{
    int s = 0;
    for (int v = 0; v < q.vertex_count(); ++v) s += x[v] * y[v];
    for (const auto& ar : q.arrows()) s -= x[ar.source] * y[ar.target];
    return s;
}

static void check_exact(const Resolution& r)
{
    for (std::size_t i = 0; i < r.maps.size(); ++i) CHECK(is_homomorphism(r.maps[i]));
    CHECK(rank(r.maps[0].m) == r.module.dim());
    for (std::size_t i = 1; i < r.maps.size(); ++i) {
        CHECK(is_zero(Matrix(r.maps[i - 1].m * r.maps[i].m)));
        CHECK(rank(r.maps[i].m) == r.maps[i - 1].m.cols() - rank(r.maps[i - 1].m));
    }
    if (r.complete) CHECK(rank(r.maps.back().m) == r.maps.back().m.cols());
}

TEST_CASE("standard modules over A4 with relations ab, bc")
{
    auto a = load(kA4);
    auto p1 = projective(a, 0), i2 = injective(a, 1), s1 = simple(a, 0), s2 = simple(a, 1);
    CHECK(is_module(p1));
    CHECK(is_module(i2));
    CHECK(is_module(regular_module(a)));
    CHECK(p1.dim_vector() == std::vector<int>{1, 1, 0, 0});
    CHECK(i2.dim_vector() == std::vector<int>{1, 1, 0, 0});
    CHECK(is_isomorphic(p1, i2));
    CHECK(is_isomorphic(top(p1), s1));
    CHECK(is_isomorphic(soc(p1), s2));
    CHECK(is_isomorphic(rad(p1), s2));
    CHECK_FALSE(is_isomorphic(p1, direct_sum({s1, s2}).module));
    CHECK(is_isomorphic(injective(a, 3), projective(a, 2)));
    CHECK(is_isomorphic(radq(p1, 1), s1));
    CHECK(is_isomorphic(socq(p1, 1), s1));
    CHECK(regular_module(a).dim() == a->dim());
    CHECK(composition_string(p1) == "S(1)+S(2)");
    CHECK(dim_vector_string(p1) == "(1,1,0,0)");
}

TEST_CASE("minimal projective resolution of S(1) over A4 with relations ab, bc")
{
    auto a = load(kA4);
    auto r = free_resolution(simple(a, 0), 10);
    REQUIRE(r.complete);
    REQUIRE(r.length() == 3);
    for (int i = 0; i <= 3; ++i) {
        REQUIRE(r.terms[i].projective()->size() == 1);
        CHECK(r.terms[i].projective()->front().vertex == i);
    }
    check_exact(r);
    CHECK(ext_space(simple(a, 0), simple(a, 1), 1).dim == 1);
    CHECK(ext_space(simple(a, 0), simple(a, 2), 2).dim == 1);
    CHECK(ext_space(simple(a, 0), simple(a, 3), 3).dim == 1);
    CHECK(ext_space(simple(a, 0), simple(a, 2), 1).dim == 0);
    CHECK(ext_space(simple(a, 0), simple(a, 0), 0).dim == 1);
    CHECK(ext_space(simple(a, 0), simple(a, 1), 5).dim == 0);
}

TEST_CASE("injective dimensions over A4 with relations ab, bc")
{
    auto a = load(kA4);
    for (int v = 0; v < 4; ++v) CHECK(injective_dimension(injective(a, v)) == 0);
    CHECK(injective_dimension(simple(a, 3)) == 3);
    CHECK(injective_dimension(simple(a, 2)) == 2);
    CHECK_THROWS_AS(injective_dimension(simple(a, 3), 2), Error);
    try {
        injective_dimension(simple(a, 3), 2);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CapExceeded);
    }
}

TEST_CASE("Hom from projectives agrees with vertex spaces and with the generic solver")
{
    std::mt19937_64 rng(7);
    for (const char* t : {kA4, kSquare, kA4h}) {
        auto a = load(t);
        std::vector<FinModule> ms = {regular_module(a), injective(a, 0), injective(a, 3), simple(a, 1),
                                     top(regular_module(a)), soc(regular_module(a))};
        for (const auto& m : ms)
            for (int v = 0; v < a->vertex_count(); ++v) {
                auto p = projective(a, v);
                auto h = hom_space(p, m);
                CHECK(h.dim() == m.dim_vector()[v]);
                CHECK(hom_space_generic(p, m).dim() == h.dim());
                for (const auto& f : hom_basis(p, m)) CHECK(is_homomorphism(f));
            }
    }
}

TEST_CASE("Euler form on hereditary quivers")
{
    std::mt19937_64 rng(11);
    for (const char* t : {kA4h, kD4}) {
        auto a = load(t);
        for (int trial = 0; trial < 15; ++trial) {
            auto m = random_rep(a, rng), n = random_rep(a, rng);
            int h0 = ext_space(m, n, 0).dim, h1 = ext_space(m, n, 1).dim;
            CHECK(h0 == hom_space(m, n).dim());
            CHECK(h0 - h1 == euler_hereditary(*a->quiver(), m.dim_vector(), n.dim_vector()));
            CHECK(ext_space(m, n, 2).dim == 0);
            auto r = free_resolution(m, 4);
            CHECK(r.complete);
            CHECK(r.length() <= 1);
            check_exact(r);
        }
    }
}

TEST_CASE("kernels, images and cokernels of random homomorphisms")
{
    std::mt19937_64 rng(3);
    auto a = load(kD4);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_rep(a, rng), n = random_rep(a, rng);
        auto h = hom_space(m, n);
        Vector c(h.dim());
        for (int k = 0; k < h.dim(); ++k) c(k) = Scalar(static_cast<long>(rng() % 5) - 2);
        ModuleMap f{m, n, h.combine(c, n.dim(), m.dim())};
        REQUIRE(is_homomorphism(f));
        auto k = kernel(f);
        auto im = image(f);
        auto q = cokernel(f);
        CHECK(is_module(k.module));
        CHECK(is_module(im.module));
        CHECK(is_module(q.module));
        CHECK(is_homomorphism({k.module, m, k.incl}));
        CHECK(is_homomorphism({n, q.module, q.proj}));
        CHECK(is_zero(Matrix(f.m * k.incl)));
        CHECK(is_zero(Matrix(q.proj * f.m)));
        CHECK(k.module.dim() + im.module.dim() == m.dim());
        CHECK(q.module.dim() + im.module.dim() == n.dim());
        CHECK(k.retract * k.incl == identity(k.module.dim()));
        CHECK(q.proj * q.section == identity(q.module.dim()));
    }
}

TEST_CASE("isomorphism tests survive a change of basis")
{
    std::mt19937_64 rng(5);
    auto a = load(kSquare);
    std::vector<FinModule> ms = {regular_module(a), injective(a, 3), rad(projective(a, 0)), socq(injective(a, 3), 1)};
    for (const auto& m : ms) {
        auto m2 = scramble(m, rng);
        CHECK(is_module(m2));
        auto f = find_isomorphism(m, m2, 1);
        REQUIRE(f);
        CHECK(is_homomorphism({m, m2, *f}));
        CHECK(is_invertible(*f));
    }
    CHECK_FALSE(is_isomorphic(direct_sum({simple(a, 0), simple(a, 1), simple(a, 2), simple(a, 3)}).module, projective(a, 0)));
    CHECK_FALSE(is_isomorphic(direct_sum({projective(a, 1), simple(a, 2)}).module,
                              direct_sum({projective(a, 2), simple(a, 1)}).module));
}

TEST_CASE("radical and socle series of the square with commutativity")
{
    auto a = load(kSquare);
    auto p1 = projective(a, 0);
    CHECK(p1.dim_vector() == std::vector<int>{1, 1, 1, 1});
    CHECK(rad(p1).dim_vector() == std::vector<int>{0, 1, 1, 1});
    CHECK(rad(p1, 2).dim_vector() == std::vector<int>{0, 0, 0, 1});
    CHECK(rad(p1, 3).dim() == 0);
    CHECK(soc(p1).dim_vector() == std::vector<int>{0, 0, 0, 1});
    CHECK(soc(p1, 2).dim_vector() == std::vector<int>{0, 1, 1, 1});
    CHECK(is_isomorphic(p1, injective(a, 3)));
    auto sq = subquotient(p1, radical_span(p1, 1), radical_span(p1, 2));
    CHECK(sq.module.dim_vector() == std::vector<int>{0, 1, 1, 0});
    CHECK(is_module(sq.module));
}

TEST_CASE("submodule generated by an element")
{
    auto a = load(kSquare);
    auto r = regular_module(a);
    auto p1 = projective(a, 0);
    Matrix g = Matrix::Zero(p1.dim(), 1);
    g(p1.generator(0), 0) = Scalar(1);
    CHECK(submodule_generated(p1, g).module.dim() == p1.dim());
    CHECK(r.projective()->size() == 4);
}

TEST_CASE("prime field modules")
{
    auto p = parse_algebra(kSquare);
    p.field = Field{5};
    auto a = to_basis_algebra(p);
    auto p1 = projective(a, 0);
    CHECK(is_module(p1));
    CHECK(hom_space(p1, injective(a, 3)).dim() == 1);
    auto r = free_resolution(injective(a, 1), 5);
    CHECK(r.complete);
    check_exact(r);
}
