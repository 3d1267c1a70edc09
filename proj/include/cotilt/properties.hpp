// Random inputs and the property suites shared by the tests and the acceptance run.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cotilt/theorems.hpp"

namespace cotilt {

using Rng = std::mt19937_64;

ModuleMap random_map(const FinModule& m, const FinModule& n, Rng& rng);
// Cokernel of a random map between sums of one or two projectives.
FinModule random_module(const AlgebraPtr& a, Rng& rng, Side side = Side::Left);
// 0 -> ker f -> m -> im f -> 0 for a random f out of m.
struct ShortExact {
    FinModule left, mid, right;
};
ShortExact random_ses(const AlgebraPtr& a, Rng& rng);
// Three-term complex in degrees lo..lo+2 with random differentials.
Complex random_complex(const AlgebraPtr& a, Rng& rng, int lo = -1);

struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0 && cases > 0; }
    void record(bool pass, const std::string& what);
};

// Triangle identities and η-naturality, draws per context.
PropertyResult prop_adjunction(const std::vector<const DualityContext*>& ctxs, int draws, Rng& rng);
// If two terms of a short exact sequence are D-reflexive, so is the third.
PropertyResult prop_thickness(const DualityContext& ctx, int sequences, Rng& rng);
// E_2 against R^pΨR^jΦ computed directly, and Σ dim E∞ = dim H^s.
PropertyResult prop_spectral(const DualityContext& ctx, const std::vector<FinModule>& modules);
// n ≤ 1: a complex is D-reflexive iff its cohomologies are.
PropertyResult prop_low_dimension(const DualityContext& ctx, int complexes, Rng& rng);
// θ∘R¹Φ(γ) = 1 and γ∘R¹Ψ(θ) = 1.
PropertyResult prop_adjoint_r1(const DualityContext& ctx, int pairs, Rng& rng);

}  // namespace cotilt
