#ifndef HURWITZ_CI_HPP
#define HURWITZ_CI_HPP

#include <string>
#include <vector>

#include "hurwitz/chow_ring.hpp"

namespace hurwitz {

// Rows are the multidegrees of the defining divisors on P^{n_1} x ... x P^{n_l};
// entries are nonnegative and no row is zero.
using DegreeMatrix = std::vector<ZVec>;

enum class GenusMode { Raw, Gated };

void validate_ci(const std::vector<int>& n, const DegreeMatrix& B);

// [X] = D_1 ... D_c as a class of codimension c.
ChowClass multidegree_ci(const std::vector<int>& n, const DegreeMatrix& B);

// True when the section class [X] . T^{n-beta} is nonzero, i.e. some

// delta_{beta - e_j} is positive; |beta| = c+1.
bool is_curve_section(const std::vector<int>& n, const DegreeMatrix& B, const Exp& beta);

// Multisectional genus in direction beta (|beta| = c+1, beta inside the box)
// by adjunction on the curve section.  Raw mode reports the formal value (1
// when the section class vanishes); gated mode returns 0 for non-curve
// directions.
Int genus_ci(const std::vector<int>& n, const DegreeMatrix& B, const Exp& beta,
             GenusMode mode = GenusMode::Raw);

// Sum of g_beta T^beta over all directions |beta| = c+1 inside the box.
ChowClass genus_polynomial_ci(const std::vector<int>& n, const DegreeMatrix& B,
                              GenusMode mode = GenusMode::Raw);

// u_i = 2 (g_i + delta - 1) componentwise.
std::vector<Int> hurwitz_bound(const Int& delta, const std::vector<Int>& genus);

// Degrees (delta_{alpha + e_i})_i of the Chow form; |alpha| = codim(md) - 1.
std::vector<Int> chow_degrees(const ChowClass& md, const Exp& alpha);

struct ReportFlags {
    bool bound_only = false;       // value is an upper bound, exact iff polynodal
    bool delta_below_two = false;  // delta < 2: bound hypotheses not met
    std::vector<int> non_curve_directions;  // 1-based indices

    bool any() const { return bound_only || delta_below_two || !non_curve_directions.empty(); }
    std::string to_string() const;  // comma list, "-" when empty
};

struct DegreeReport {
    Exp alpha;
    Int delta;
    std::vector<Int> genus;   // sectional genus per direction (raw here, gated
                              // on the bound-only routes)
    std::vector<Int> degree;  // Hurwitz degree (or bound) per direction
    ReportFlags flags;
    std::string note;  // caveat attached by a front-end, empty otherwise
};

// Hurwitz degree vector of the alpha-projection of a generic complete
// intersection, |alpha| = c, alpha inside the box.
DegreeReport hurwitz_degree_ci(const std::vector<int>& n, const DegreeMatrix& B, const Exp& alpha);

}  // namespace hurwitz

#endif
