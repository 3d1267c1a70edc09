#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cotilt/expr.hpp"
#include "cotilt/parse.hpp"
#include "cotilt/properties.hpp"
#include "cotilt/registry.hpp"

using namespace cotilt;

static const char* kA3 = "[algebra]\nvertices = 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n";
static const char* kH4 = "[algebra]\nvertices = 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n";
static const char* kW4 = "[algebra]\nvertices = 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\nrelation a*b\nrelation b*c\n";

static DualityContext context(const std::string& alg, const std::string& u)
{
    AlgebraPtr a = to_basis_algebra(parse_algebra(alg));
    return DualityContext(a, summands_from_expr(a, u));
}

static void require_ok(const PropertyResult& p)
{
    INFO(p.name << " first failure: " << p.first_failure);
    CHECK(p.cases > 0);
    CHECK(p.failures == 0);
}

TEST_CASE("property suites on small draws")
{
    Rng rng(7);
    auto h4 = context(kH4, "R");
    auto w4 = context(kW4, "S(1)+S(3)");
    auto a3 = context(kA3, "S(3)");
    require_ok(prop_adjunction({&h4, &w4, &a3}, 8, rng));
    require_ok(prop_thickness(context(kW4, "R"), 10, rng));
    require_ok(prop_low_dimension(a3, 10, rng));
    require_ok(prop_adjoint_r1(h4, 5, rng));
    auto w4r = context(kW4, "R");
    std::vector<FinModule> ms;
    for (int t = 0; t < 4; ++t) ms.push_back(random_module(w4r.lambda(), rng));
    require_ok(prop_spectral(w4r, ms));
}

TEST_CASE("the n <= 1 biconditional sees both answers")
{
    Rng rng(11);
    int yes = 0, no = 0;
    for (auto ctx : {context(kA3, "S(3)"), context(kA3, "P(1)+S(2)"), context(kH4, "P(1)+P(2)+S(2)+P(4)")}) {
        REQUIRE(ctx.n_phi() <= 1);
        REQUIRE(ctx.n_psi() <= 1);
        for (int t = 0; t < 10; ++t) {
            Complex x = random_complex(ctx.lambda(), rng);
            bool d = is_d_reflexive(ctx, x);
            bool all = true;
            for (int i = x.lo; i <= x.hi(); ++i) all = all && is_d_reflexive_object(ctx, cohomology(x, i));
            CHECK(d == all);
            (d ? yes : no) += 1;
        }
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}

TEST_CASE("image of Phi is Psi-acyclic when n <= 1")
{
    Rng rng(3);
    for (auto ctx : {context(kA3, "S(3)"), context(kH4, "P(1)+P(2)+S(2)+P(4)")}) {
        REQUIRE(ctx.n_phi() <= 1);
        for (int t = 0; t < 20; ++t) CHECK(ctx.is_psi_acyclic(ctx.phi(random_module(ctx.lambda(), rng))));
    }
}

TEST_CASE("submodules of Phi-acyclic modules are Phi-acyclic when n_Phi = 1")
{
    Rng rng(5);
    auto ctx = context(kA3, "S(3)");
    REQUIRE(ctx.n_phi() == 1);
    int tested = 0;
    for (int t = 0; t < 200 && tested < 20; ++t) {
        FinModule m = random_module(ctx.lambda(), rng);
        if (!ctx.is_phi_acyclic(m)) continue;
        FinModule n = random_module(ctx.lambda(), rng);
        FinModule sub = image(random_map(n, m, rng)).module;
        CHECK(ctx.is_phi_acyclic(sub));
        ++tested;
    }
    CHECK(tested == 20);
}

TEST_CASE("R^i Phi vanishes above n_Phi on random modules")
{
    Rng rng(13);
    for (auto ctx : {context(kW4, "S(1)+S(3)"), context(find_example("ex-a5").algebra, find_example("ex-a5").u)}) {
        for (int t = 0; t < 20; ++t) {
            FinModule m = random_module(ctx.lambda(), rng);
            CHECK(ctx.r_phi(m, ctx.n_phi() + 1).dim() == 0);
            CHECK(ctx.r_phi(m, ctx.n_phi() + 2).dim() == 0);
        }
    }
}

TEST_CASE("cohomology of RPhi on a stalk is R^i Phi")
{
    Rng rng(17);
    auto ctx = context(find_example("ex-a5").algebra, find_example("ex-a5").u);
    for (int t = 0; t < 20; ++t) {
        FinModule m = random_module(ctx.lambda(), rng);
        Complex y = r_phi_complex(ctx, stalk(m));
        for (int i = 0; i <= ctx.n_phi(); ++i) CHECK(is_isomorphic(cohomology(y, i), ctx.r_phi(m, i)));
    }
}

TEST_CASE("G of a stalk lives in degrees -n_Phi..0")
{
    Rng rng(19);
    for (auto ctx : {context(kW4, "R"), context(kW4, "S(1)+S(3)"), context(find_example("ex-a5").algebra, find_example("ex-a5").u)}) {
        REQUIRE(ctx.projectives_acyclic());
        for (int t = 0; t < 10; ++t) {
            FinModule m = random_module(ctx.lambda(), rng);
            for (int d : g_cohomology_degrees(derived_unit(ctx, stalk(m)))) {
                CHECK(d <= 0);
                CHECK(d >= -ctx.n_phi());
            }
        }
    }
}

TEST_CASE("complexes of projectives are D-reflexive, and so are their duals")
{
    Rng rng(23);
    auto ctx = context(kW4, "R");
    const AlgebraPtr& a = ctx.lambda();
    for (int t = 0; t < 10; ++t) {
        std::vector<FinModule> terms;
        for (int k = 0; k < 3; ++k) {
            std::vector<int> v{static_cast<int>(rng() % 4)};
            if (rng() % 2) v.push_back(static_cast<int>(rng() % 4));
            terms.push_back(projective_sum(a, v));
        }
        ModuleMap f = random_map(terms[0], terms[1], rng);
        Quot c = cokernel(f);
        Matrix g = random_map(c.module, terms[2], rng).m * c.proj;
        Complex x = make_complex(a, Side::Left, -1, terms, {f.m, g});
        CHECK(is_d_reflexive(ctx, x));
        CHECK(is_d_reflexive_right(ctx, r_phi_complex(ctx, x)));
    }
    auto w = context(kW4, "S(1)+S(3)");
    for (int t = 0; t < 10; ++t) {
        FinModule m = random_module(w.lambda(), rng);
        if (is_d_reflexive_object(w, m)) CHECK(is_d_reflexive_right(w, r_phi_complex(w, stalk(m))));
    }
}

TEST_CASE("truncations split cohomology and terms")
{
    Rng rng(29);
    auto a = to_basis_algebra(parse_algebra(kW4));
    for (int t = 0; t < 20; ++t) {
        Complex x = random_complex(a, rng);
        for (int n = x.lo - 1; n <= x.hi(); ++n) {
            auto le = truncate(x, n, Trunc::SigmaLe);
            auto gt = truncate(x, n, Trunc::SigmaGt);
            auto ble = truncate(x, n, Trunc::TauLe);
            auto bgt = truncate(x, n, Trunc::TauGt);
            CHECK(is_chain_map(ble.map));
            CHECK(is_chain_map(bgt.map));
            CHECK(is_chain_map(le.map));
            CHECK(is_chain_map(gt.map));
            for (int i = x.lo; i <= x.hi(); ++i) {
                FinModule h = cohomology(x, i);
                CHECK(is_isomorphic(cohomology(le.complex, i), i <= n ? h : FinModule::zero(a)));
                CHECK(is_isomorphic(cohomology(gt.complex, i), i > n ? h : FinModule::zero(a)));
                if (i <= n) CHECK(is_invertible(induced_on_cohomology(le.map, i).m));
                if (i > n) CHECK(is_invertible(induced_on_cohomology(gt.map, i).m));
                CHECK(is_isomorphic(i <= n ? ble.complex.term(i) : bgt.complex.term(i), x.term(i)));
            }
        }
    }
}

TEST_CASE("upper truncation of RPhi(1/2) over A5 is the stalk 8 in degree 1")
{
    const auto& e = find_example("ex-a5");
    AlgebraPtr a = to_basis_algebra(parse_algebra(e.algebra));
    DualityContext ctx(a, summands_from_expr(a, e.u), e.s_names);
    Complex y = r_phi_complex(ctx, stalk(module_from_expr(a, "radq(P(1),2)")));
    auto gt = truncate(y, 0, Trunc::SigmaGt);
    for (int i = gt.complex.lo; i <= gt.complex.hi(); ++i) {
        FinModule h = cohomology(gt.complex, i);
        if (i == 1)
            CHECK(composition_string(h) == "S(8)");
        else
            CHECK(h.dim() == 0);
    }
}

TEST_CASE("bb agrees with D-reflexivity on random modules")
{
    Rng rng(31);
    for (auto ctx : {context(kH4, "R"), context(kA3, "S(3)"), context(kH4, "P(1)+P(2)+S(2)+P(4)")}) {
        for (int t = 0; t < 10; ++t) {
            FinModule m = random_module(ctx.lambda(), rng);
            TheoremReport r = bb_check(ctx, m);
            CHECK(r.d_reflexive == is_d_reflexive_object(ctx, m));
            CHECK(r.forward());
            CHECK(r.converse());
        }
    }
}
