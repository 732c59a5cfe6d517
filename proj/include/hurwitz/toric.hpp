#ifndef HURWITZ_TORIC_HPP
#define HURWITZ_TORIC_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/chow_ring.hpp"
#include "hurwitz/ci.hpp"
#include "hurwitz/polytope.hpp"

namespace hurwitz {

// Structurally well-formed input that fails a semantic requirement, e.g. the
// support lattice is a proper sublattice of Z^d.  Callers map this to its own
// exit code, distinct from plain validation errors.
class SpecRejection : public std::runtime_error {
public:
    explicit SpecRejection(const std::string& msg) : std::runtime_error(msg) {}
};

// Projective toric variety of dimension d presented by support sets A_1..A_l
// in Z^d, embedded in P^{n_1} x ... x P^{n_l} with n_i = |A_i| - 1.
struct ToricSpec {
    int dim = 0;
    std::vector<SupportSet> supports;
};

// invalid_argument for malformed input; SpecRejection when the difference
// vectors of the supports fail to generate all of Z^d.
void validate_toric(const ToricSpec& spec);

Ambient toric_ambient(const ToricSpec& spec);
int toric_codim(const ToricSpec& spec);

// Evaluates multidegree, sectional genus and Hurwitz bounds for one spec,
// caching the Newton polytopes, their weighted Minkowski sums and interior
// lattice point counts across queries.
class ToricCalculator {
public:
    explicit ToricCalculator(ToricSpec spec);

    const ToricSpec& spec() const { return spec_; }
    const Ambient& ambient() const { return amb_; }
    int codim() const { return codim_; }
    const Polytope& newton_polytope(int i) const { return hulls_[i]; }

    // sum_i lambda_i P_i, lambda >= 0 componentwise.
    const Polytope& weighted_sum(const Exp& lambda);
    Int interior_count(const Exp& lambda);

    // delta_alpha = MV(P_1^{n_1-a_1}, ..., P_l^{n_l-a_l}) summed over |alpha| = c.
    const ChowClass& multidegree();
    bool is_curve_section(const Exp& beta);
    // Genus of the curve cut by n_i - beta_i equations with Newton polytope
    // P_i, as the alternating interior point sum with binomial multiplicities.
    Int genus(const Exp& beta, GenusMode mode = GenusMode::Gated);
    ChowClass genus_polynomial(GenusMode mode = GenusMode::Gated);
    // Bound 2(g_i + delta - 1); always flagged bound_only since exactness
    // needs a genericity property this input does not certify.
    DegreeReport hurwitz_degree(const Exp& alpha);

private:
    ToricSpec spec_;
    Ambient amb_;
    int codim_ = 0;
    std::vector<Polytope> hulls_;
    std::map<Exp, Polytope> sums_;
    std::map<Exp, Int> interior_;
    std::optional<ChowClass> md_;
};

// One-shot wrappers over a fresh calculator.
ChowClass toric_multidegree(const ToricSpec& spec);
bool is_curve_section_toric(const ToricSpec& spec, const Exp& beta);
Int toric_genus(const ToricSpec& spec, const Exp& beta, GenusMode mode = GenusMode::Gated);
ChowClass toric_genus_polynomial(const ToricSpec& spec, GenusMode mode = GenusMode::Gated);
DegreeReport toric_hurwitz_degree(const ToricSpec& spec, const Exp& alpha);

}  // namespace hurwitz

#endif
