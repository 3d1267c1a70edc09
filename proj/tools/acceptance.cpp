// One pass/fail line per acceptance criterion.
#include <iostream>
#include <sstream>

#include "cotilt/expr.hpp"
#include "cotilt/parse.hpp"
#include "cotilt/properties.hpp"
#include "cotilt/registry.hpp"

using namespace cotilt;

namespace {

const char* kA4 = "[algebra]\nvertices = 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n";
const char* kA3 = "[algebra]\nvertices = 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n";
const char* kW4 = "[algebra]\nvertices = 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\nrelation a*b\nrelation b*c\n";

std::shared_ptr<DualityContext> context(const char* alg, const std::string& u)
{
    AlgebraPtr a = to_basis_algebra(parse_algebra(alg));
    return std::make_shared<DualityContext>(a, summands_from_expr(a, u));
}

int failures = 0;

void line(int n, bool ok, const std::string& what)
{
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << "\n";
    failures += !ok;
}

std::string summary(const PropertyResult& p)
{
    std::string s = p.name + " " + std::to_string(p.cases - p.failures) + "/" + std::to_string(p.cases);
    if (p.failures) s += " (first failure: " + p.first_failure + ")";
    return s;
}

}  // namespace

int main()
{
    std::ostringstream first_run;
    const std::vector<std::pair<std::string, std::string>> examples = {
        {"ex-2-2a", "W = S(1)+S(3): S(1) reflexive, not D-reflexive, G cohomology S(3)@-2 and S(1)@0"},
        {"ex-2-2b", "regular bimodule: S(2) D-reflexive, not reflexive"},
        {"ex-3-1", "5-term projective complex D-reflexive, terms P(5) and P(4) not"},
        {"ex-3-2", "P(1)-complex D-reflexive, H^0 = S(2) not; G(S(2)) cohomology in {-3,-1,0}"},
        {"ex-a5", "A5: R^iPhi(1/2) = 5, 8, 0; conditions hold; non D-reflexive set {P(0), 0/1, 0}"},
        {"ex-5-1", "second spectral sequence grids E2 and E3 = Einf, both exact sequences"},
        {"ex-a8", "A8: filtration factors 3, 2, 1; S(4) violates with witness 3 and 3/4"},
    };
    for (std::size_t k = 0; k < examples.size(); ++k) {
        Report r;
        bool ok = run_example(find_example(examples[k].first), r);
        first_run << r.render(Format::Machine);
        line(static_cast<int>(k) + 1, ok, examples[k].first + ": " + examples[k].second);
    }

    Rng rng(2024);
    auto h4 = context(kA4, "R");
    auto w4 = context(kW4, "S(1)+S(3)");
    auto a5 = context(find_example("ex-a5").algebra.c_str(), find_example("ex-a5").u);
    auto a4r = context(kW4, "R");
    auto a3 = context(kA3, "S(3)");
    std::vector<PropertyResult> props;
    props.push_back(prop_adjunction({h4.get(), w4.get(), a5.get()}, 34, rng));
    PropertyResult thick = prop_thickness(*a4r, 25, rng);
    PropertyResult thick2 = prop_thickness(*a5, 25, rng);
    thick.cases += thick2.cases;
    thick.failures += thick2.failures;
    if (thick.first_failure.empty()) thick.first_failure = thick2.first_failure;
    props.push_back(thick);
    std::vector<FinModule> runs;
    for (int t = 0; t < 6; ++t) runs.push_back(random_module(a4r->lambda(), rng));
    props.push_back(prop_spectral(*a4r, runs));
    PropertyResult low = prop_low_dimension(*h4, 10, rng);
    PropertyResult low2 = prop_low_dimension(*a3, 10, rng);
    low.cases += low2.cases;
    low.failures += low2.failures;
    if (low.first_failure.empty()) low.first_failure = low2.first_failure;
    props.push_back(low);
    props.push_back(prop_adjoint_r1(*h4, 20, rng));
    bool all = true;
    std::string what;
    for (const auto& p : props) {
        all = all && p.ok();
        what += (what.empty() ? "" : ", ") + summary(p);
    }
    line(8, all, what);

    std::ostringstream second_run;
    for (const auto& e : examples) {
        Report r;
        run_example(find_example(e.first), r);
        second_run << r.render(Format::Machine);
    }
    line(9, first_run.str() == second_run.str(),
         "two registry runs give byte-identical machine reports (" + std::to_string(first_run.str().size()) + " bytes)");
    return failures == 0 ? 0 : 1;
}
