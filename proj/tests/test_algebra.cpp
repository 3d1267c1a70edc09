#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotilt/parse.hpp"

using namespace cotilt;

static const char* kA4 = R"([algebra]
field = Q
vertices = 4
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
relation a*b
relation b*c
)";

static const char* kA5 = R"([algebra]
vertices = 0..4
arrow a: 0 -> 1
arrow b: 1 -> 2
arrow c: 2 -> 3
arrow d: 3 -> 4
relation a*b*c
relation b*c*d
)";

TEST_CASE("path basis of A4 with two zero relations")
{
    auto p = parse_algebra(kA4);
    auto b = path_basis(p);
    REQUIRE(b.paths.size() == 7);
    std::vector<std::string> names;
    for (const auto& x : b.paths) names.push_back(path_name(p.quiver, x));
    CHECK(names == std::vector<std::string>{"e1", "e2", "e3", "e4", "a", "b", "c"});
    auto alg = to_basis_algebra(p);
    CHECK(alg->dim() == 7);
    int a = alg->arrow_basis()[0], bb = alg->arrow_basis()[1];
    CHECK(alg->mul(a, bb).empty());
    CHECK(alg->mul(bb, a).empty());  // a then b vanishes
    CHECK(alg->radical().cols() == 3);
    CHECK(check_split(*alg));
}

TEST_CASE("quiver without arrows")
{
    AlgebraPresentation p;
    p.quiver = Quiver(3);
    CHECK(path_basis(p).paths.size() == 3);
    AlgebraPresentation one;
    one.quiver = Quiver(1);
    auto k = to_basis_algebra(one);
    CHECK(k->dim() == 1);
    CHECK(k->radical().cols() == 0);
    CHECK(check_split(*k));
}

TEST_CASE("A5 with length-three relations")
{
    auto p = parse_algebra(kA5);
    auto alg = to_basis_algebra(p);
    CHECK(alg->dim() == 12);
    CHECK(is_associative(*alg));
    CHECK(alg->radical().cols() == 7);
    CHECK(alg->vertex_name(0) == "0");
}

TEST_CASE("commutativity relation")
{
    auto p = parse_algebra(R"([algebra]
vertices = 4
arrow x: 1 -> 2
arrow y: 1 -> 3
arrow u: 2 -> 4
arrow v: 3 -> 4
relation x*u - y*v
)");
    auto alg = to_basis_algebra(p);
    CHECK(alg->dim() == 4 + 4 + 1);
    CHECK(is_associative(*alg));
}

TEST_CASE("radical is the arrow ideal")
{
    for (const char* t : {kA4, kA5}) {
        auto alg = to_basis_algebra(parse_algebra(t));
        Matrix arrows = Matrix::Zero(alg->dim(), alg->dim() - alg->vertex_count());
        Index c = 0;
        for (int i = 0; i < alg->dim(); ++i)
            if (!alg->is_idempotent_basis(i)) arrows(i, c++) = Scalar(1);
        const Matrix& r = alg->radical();
        CHECK(r.cols() == arrows.cols());
        CHECK(in_span(arrows, r));
    }
}

TEST_CASE("errors")
{
    try {
        to_basis_algebra(parse_algebra("[algebra]\nvertices = 2\narrow a: 1 -> 2\nrelation a\n"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonAdmissible);
    }
    AlgebraPresentation loop;
    loop.quiver = Quiver(1);
    loop.quiver.add_arrow("x", 1, 1);
    loop.path_bound = 10;
    try {
        path_basis(loop);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InfiniteDimensional);
    }
    CHECK_THROWS_AS(parse_algebra("[algebra]\nvertices = 2\narrow a: 1 -> 3\n"), Error);
    CHECK_THROWS_AS(parse_algebra("vertices = 2\n"), Error);
    auto fp = to_basis_algebra(parse_algebra("[algebra]\nfield = Fp(5)\nvertices = 2\narrow a: 1 -> 2\n"));
    try {
        (void)fp->radical();
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CharNotZero);
    }
}

TEST_CASE("loop with nilpotent relation")
{
    auto alg = to_basis_algebra(parse_algebra("[algebra]\nvertices = 1\narrow x: 1 -> 1\nrelation x*x*x\n"));
    CHECK(alg->dim() == 3);
    CHECK(alg->radical().cols() == 2);
    CHECK(check_split(*alg));
}

static AlgebraPtr gaussian_like(long c)
{
    // Q[x]/(x^2 + c)
    BasisAlgebra::Spec s;
    s.vertex_names = {"1"};
    s.labels = {"1", "x"};
    s.lvert = {0, 0};
    s.rvert = {0, 0};
    s.idem = {0};
    s.words = {{}, {1}};
    s.table = {{{{0, Scalar(1)}}, {{1, Scalar(1)}}}, {{{1, Scalar(1)}}, {{0, Scalar(-c)}}}};
    return std::make_shared<const BasisAlgebra>(s);
}

TEST_CASE("splitting")
{
    CHECK(!check_split(*gaussian_like(1)));   // Q(i)
    CHECK(check_split(*gaussian_like(-1)));   // Q x Q
    CHECK(check_split(*gaussian_like(0)));    // dual numbers
    CHECK(!check_split(*gaussian_like(-2)));  // Q(sqrt 2)
}

TEST_CASE("format round trip")
{
    for (const char* t : {kA4, kA5}) {
        auto p = parse_algebra(t);
        auto q = parse_algebra(format_algebra(p));
        CHECK(format_algebra(q) == format_algebra(p));
    }
    auto p = parse_algebra("[algebra]\nvertices = 4\narrow x: 1 -> 2\narrow y: 1 -> 3\narrow u: 2 -> 4\narrow v: 3 -> 4\nrelation 2*x*u - 3/2*y*v\n");
    CHECK(format_algebra(parse_algebra(format_algebra(p))) == format_algebra(p));
}
