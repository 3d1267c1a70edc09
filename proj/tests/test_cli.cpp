#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cotilt/commands.hpp"
#include "cotilt/expr.hpp"
#include "cotilt/parse.hpp"
#include "cotilt/registry.hpp"

using namespace cotilt;

static const char* kA5 = "[algebra]\nvertices = 0..4\narrow a: 0 -> 1\narrow b: 1 -> 2\narrow c: 2 -> 3\narrow d: 3 -> 4\n"
                         "relation a*b*c\nrelation b*c*d\n";

static std::string error_text(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

TEST_CASE("module expressions over A5")
{
    auto a = to_basis_algebra(parse_algebra(kA5));
    CHECK(module_from_expr(a, "P(1)").dim() == 3);
    CHECK(module_from_expr(a, "radq(P(1),2)").dim() == 2);
    CHECK(is_isomorphic(module_from_expr(a, "radq(P(1),2)"), module_from_expr(a, "socq(P(1),1)")));
    CHECK(module_from_expr(a, "radq(P(1),1)").dim() == 1);
    CHECK(module_from_expr(a, "S(0)+S(2)").dim_vector() == std::vector<int>{1, 0, 1, 0, 0});
    CHECK(module_from_expr(a, "R").dim() == a->dim());
    CHECK(module_from_expr(a, "0").dim() == 0);
    CHECK(module_from_expr(a, "rad(P(0),2)").dim() == 1);
    CHECK(module_from_expr(a, "top(I(3))").dim() == 1);
    CHECK(summands_from_expr(a, "R+S(4)").size() == 6);
}

TEST_CASE("printing and re-parsing gives the same objects")
{
    auto a = to_basis_algebra(parse_algebra(kA5));
    for (const char* t : {"P(1)", " S(0) +  S(2)", "radq(P(1),2)+I(3)", "rad(soc(R,2),1)", "top(P(0))+socq(I(4),1)", "0", "R"}) {
        ModExpr e = parse_module_expr(t);
        std::string s = format_module_expr(e);
        CHECK(format_module_expr(parse_module_expr(s)) == s);
        CHECK(is_isomorphic(evaluate(a, e), module_from_expr(a, s)));
    }
    const std::string cpx = "[complex]\n# three copies\ndegrees = -1..1\nterm -1 = P(0)\nterm 0 = P(0)\nterm 1 = P(0)\n"
                            "diff -1 = auto\ndiff 0 = coeffs 0\n";
    ComplexSpec c = parse_complex(cpx);
    std::string s = format_complex(c);
    CHECK(format_complex(parse_complex(s)) == s);
    Complex x = build_complex(a, c), y = build_complex(a, parse_complex(s));
    CHECK(x.lo == y.lo);
    for (int k = x.lo; k < x.hi(); ++k) CHECK(x.diff(k) == y.diff(k));
    AlgebraPresentation p = parse_algebra(kA5);
    CHECK(format_algebra(parse_algebra(format_algebra(p))) == format_algebra(p));
}

TEST_CASE("errors carry positions")
{
    auto a = to_basis_algebra(parse_algebra(kA5));
    CHECK(error_text([] { parse_module_expr("P(1)+"); }) == "SyntaxError: line 1, column 6: expected a module term");
    CHECK(error_text([] { parse_module_expr("radq(P(1))"); }).find("column 10") != std::string::npos);
    CHECK(error_text([] { parse_module_expr("Q(1)"); }).find("column 1") != std::string::npos);
    CHECK(error_text([&] { module_from_expr(a, "S(5)"); }).rfind("SemanticError", 0) == 0);
    std::string bad = "[complex]\ndegrees = 0..1\nterm 0 = P(1\nterm 1 = P(1)\n";
    CHECK(error_text([&] { parse_complex(bad); }).find("line 3") != std::string::npos);
    CHECK(error_text([&] { parse_complex("[complex]\nterm 0 = P(1)\n"); }).rfind("SyntaxError", 0) == 0);
    CHECK(error_text([&] { parse_complex("[complex]\ndegrees = 0..1\nterm 0 = P(1)\n"); }).find("missing term 1") != std::string::npos);
}

static int run(Options o, std::string& out)
{
    std::ostringstream s;
    o.format = Format::Machine;
    int code = run_command(o, s);
    out = s.str();
    return code;
}

TEST_CASE("exit codes")
{
    std::string out;
    Options o;
    o.command = "reflexive";
    o.example = "ex-2-2a";
    o.module = "S(1)";
    CHECK(run(o, out) == 0);
    CHECK(out.find("reflexive=true\n") != std::string::npos);
    o.command = "dreflexive";
    CHECK(run(o, out) == 1);
    CHECK(out.find("dreflexive=false\n") != std::string::npos);
    CHECK(out.find("G.H.-2=(0,0,1,0)[S(3)]\n") != std::string::npos);
    CHECK(out.find("G.H.0=(1,0,0,0)[S(1)]\n") != std::string::npos);
    o.module = "S(1";
    CHECK(run(o, out) == 2);
    CHECK(out.find("error=SyntaxError\n") != std::string::npos);
    o.module = "S(7)";
    CHECK(run(o, out) == 2);
    Options p;
    p.command = "paper-example";
    p.args = {"ex-0"};
    CHECK(run(p, out) == 2);
    CHECK(out.find("error=UnknownExample\n") != std::string::npos);
    Options q;
    q.command = "ext";
    q.algebra_file = "/nonexistent/file.alg";
    q.module = "S(1)";
    CHECK(run(q, out) == 2);
    Options v;
    v.command = "verify";
    v.args = {"lastt"};
    v.example = "ex-a8";
    CHECK(run(v, out) == 0);
    CHECK(out.find("factor.2=(0,0,1,0,0,0,0,0)[S(3)]\n") != std::string::npos);
    v.module = "S(4)";
    CHECK(run(v, out) == 1);
    CHECK(out.find("violation.RPsiRPhi.2.1=(0,0,1,0,0,0,0,0)[S(3)]\n") != std::string::npos);
    v.args = {"nonsense"};
    CHECK(run(v, out) == 2);
}

TEST_CASE("spectral report lists cells, ranks and filtration factors")
{
    std::string out;
    Options o;
    o.command = "spectral";
    o.example = "ex-5-1";
    CHECK(run(o, out) == 0);
    CHECK(out.find("spectral.stable=3\n") != std::string::npos);
    CHECK(out.find("E2.cell.1.-1=") != std::string::npos);
    CHECK(out.find("E2.d.0.-1=") != std::string::npos);
    CHECK(out.find("Einf.cell.2.-2=") != std::string::npos);
    CHECK(out.find("filtration.0.2=") != std::string::npos);
    CHECK(out.find("E2.oracle=pass\n") != std::string::npos);
}

TEST_CASE("full registry passes and is byte-stable")
{
    Options o;
    o.command = "paper-example";
    o.args = {"all"};
    std::string first, second;
    CHECK(run(o, first) == 0);
    CHECK(first.find("examples.passed=" + std::to_string(registry().size()) + "\n") != std::string::npos);
    CHECK(first.find("result=FAIL") == std::string::npos);
    CHECK(run(o, second) == 0);
    CHECK(first == second);
}
