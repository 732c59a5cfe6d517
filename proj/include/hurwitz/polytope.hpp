#ifndef HURWITZ_POLYTOPE_HPP
#define HURWITZ_POLYTOPE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/chow_ring.hpp"
#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Outward facet inequality normal . x <= offset, normal primitive integer.
struct Facet {
    ZVec normal;
    Rat offset;
};

// Rational convex polytope.  Vertices are exactly the extreme points, sorted
// lexicographically; the facet list is populated only when affine_dim equals
// the ambient dimension.  Volume is the d-dimensional Lebesgue volume (0 for
// lower-dimensional polytopes).
class Polytope {
public:
    Polytope() = default;  // empty, affine_dim -1

    int ambient_dim() const { return ambient_; }
    int affine_dim() const { return affine_; }
    bool empty() const { return affine_ < 0; }
    bool full_dim() const { return affine_ == ambient_ && ambient_ > 0; }
    const std::vector<QVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const Rat& volume() const { return volume_; }

    bool contains(const QVec& p) const;  // requires full_dim()

    friend bool operator==(const Polytope& p, const Polytope& q) {
        return p.ambient_ == q.ambient_ && p.vertices_ == q.vertices_;
    }

    friend Polytope convex_hull(int dim, const std::vector<QVec>& points);
    friend Polytope dilate(const Polytope& p, const Int& k);

private:
    int ambient_ = 0;
    int affine_ = -1;
    std::vector<QVec> vertices_;
    std::vector<Facet> facets_;
    Rat volume_ = 0;
};

// Finite set of lattice points with its ambient dimension.
struct SupportSet {
    int dim = 0;
    std::vector<ZVec> points;
};

// Checks dimensions match and points are distinct and nonempty.
void validate_support(const SupportSet& s);

Polytope convex_hull(int dim, const std::vector<QVec>& points);
Polytope convex_hull(const SupportSet& s);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope dilate(const Polytope& p, const Int& k);  // k >= 0
// sum_i w_i P_i with integer weights w_i >= 0; all weights zero gives {0}.
Polytope weighted_minkowski(const std::vector<Polytope>& ps, const std::vector<Int>& w);

// Number of lattice points strictly inside; 0 when affine_dim < ambient_dim.
Int interior_lattice_points(const Polytope& p);

// Mixed volume of the multiset with the given multiplicities (summing to the
// ambient dimension d), normalized so that MV(P,...,P) = d! vol(P).
Rat mixed_volume(const std::vector<std::pair<Polytope, int>>& summands);

// vol(T_1 P_1 + ... + T_l P_l) as a homogeneous form of degree d.
struct VolumeForm {
    int ell = 0;
    int degree = 0;
    std::map<Exp, Rat, LexDesc> terms;  // zero coefficients dropped

    Rat coefficient(const Exp& g) const;
};

VolumeForm volume_polynomial(const std::vector<Polytope>& ps);
// Same form recovered from exact interpolation of volumes at integer weights;
// independent of the mixed-volume path.
VolumeForm volume_polynomial_by_interpolation(const std::vector<Polytope>& ps);

std::string to_string(const VolumeForm& f);

}  // namespace hurwitz

#endif
