#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotilt/parse.hpp"
#include "cotilt/spectral.hpp"

using namespace cotilt;

static const char* kEx51 = R"([algebra]
vertices = 4
arrow a: 1 -> 2
arrow b: 1 -> 3
arrow c: 2 -> 4
arrow d: 3 -> 4
relation a*c
relation b*d
)";

static AlgebraPtr load(const char* t) { return to_basis_algebra(parse_algebra(t)); }

static std::vector<FinModule> projectives(const AlgebraPtr& a)
{
    std::vector<FinModule> out;
    for (int v = 0; v < a->vertex_count(); ++v) out.push_back(projective(a, v));
    return out;
}

static FinModule sum(std::vector<FinModule> parts) { return direct_sum(parts).module; }

TEST_CASE("Ex 5.1 pages")
{
    auto a = load(kEx51);
    DualityContext ctx(a, projectives(a));
    CHECK(ctx.n_phi() == 2);
    CHECK(ctx.n_psi() == 2);
    FinModule x = sum({simple(a, 0), injective(a, 3)});
    auto sp = second_spectral(ctx, x);
    std::string why;
    CHECK_MESSAGE(check_cartan_eilenberg(sp.ce, &why), why);
    CHECK_MESSAGE(check_double_complex(sp.dual.k, &why), why);
    for (int q = 0; q >= -2; --q) {
        std::string row;
        for (int p = 0; p <= 2; ++p) row += composition_string(sp.page(2).cell(p, q)) + " | ";
        MESSAGE("E2 q=" << q << ": " << row);
    }
    for (int q = 0; q >= -2; --q) {
        std::string row;
        for (int p = 0; p <= 2; ++p) row += composition_string(sp.lim.cell(p, q)) + " | ";
        MESSAGE("Einf q=" << q << ": " << row);
    }
    CHECK(sp.unit_invertible());
}

TEST_CASE("Ex 5.1 witnesses")
{
    auto a = load(kEx51);
    DualityContext ctx(a, projectives(a));
    FinModule x = sum({simple(a, 0), injective(a, 3)});
    auto sp = second_spectral(ctx, x);
    for (int p = 0; p <= 2; ++p)
        for (int j = 0; j <= 2; ++j) {
            auto w = sp.e2_witness(p, j);
            CHECK(is_homomorphism(w));
            CHECK(is_invertible(w.m));
            CHECK(is_isomorphic(w.src, ctx.r_psi(ctx.r_phi(x, j), p)));
        }
    for (int s = -2; s <= 3; ++s) {
        Index tot = 0;
        for (int p = 0; p <= 2; ++p)
            if (s - p >= -2 && s - p <= 0) tot += sp.lim.cell(p, s - p).dim();
        CHECK(tot == sp.ss->cohomology(s).module.dim());
    }
    CHECK(sp.stable == 3);
}
