#include "hurwitz/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hurwitz/linalg.hpp"

namespace hurwitz {

namespace {

QVec vec_sub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec vec_add(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Rat rat_pow(const Rat& x, int k) {
    Rat r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

Int int_dot(const ZVec& a, const ZVec& z) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * z[i];
    return s;
}

struct SFacet {
    std::vector<int> verts;  // sorted point indices, size d
    ZVec a;
    Rat b;
    bool alive = true;
};

// Hyperplane through the d affinely independent points verts, oriented so the
// reference point lies strictly on the <= side.
void facet_plane(const std::vector<QVec>& pts, const std::vector<int>& verts, const QVec& ref,
                 ZVec& a_out, Rat& b_out) {
    int d = static_cast<int>(ref.size());
    QMat rows;
    for (size_t j = 1; j < verts.size(); ++j)
        rows.push_back(vec_sub(pts[verts[j]], pts[verts[0]]));
    QVec n = mat_nullvector(rows, d);
    ZVec a = primitive_vector(n);
    Rat b = dot(a, pts[verts[0]]);
    Rat side = dot(a, ref);
    if (side == b) throw std::logic_error("convex_hull: reference point on facet plane");
    if (side > b) {
        for (auto& e : a) e = -e;
        b = -b;
    }
    a_out = std::move(a);
    b_out = std::move(b);
}

// Runs f over all integer vectors lo <= z <= hi (componentwise).
template <typename F>
void box_scan(const std::vector<int>& lo, const std::vector<int>& hi, F&& f) {
    size_t n = lo.size();
    std::vector<int> z(lo.begin(), lo.end());
    for (size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i]) return;
    while (true) {
        f(z);
        size_t i = 0;
        while (i < n && z[i] == hi[i]) {
            z[i] = lo[i];
            ++i;
        }
        if (i == n) return;
        ++z[i];
    }
}

}  // namespace

bool Polytope::contains(const QVec& p) const {
    if (!full_dim()) throw std::logic_error("Polytope::contains: needs a full-dimensional polytope");
    if (static_cast<int>(p.size()) != ambient_) throw std::invalid_argument("contains: dimension mismatch");
    for (const Facet& f : facets_)
        if (dot(f.normal, p) > f.offset) return false;
    return true;
}

void validate_support(const SupportSet& s) {
    if (s.dim < 1) throw std::invalid_argument("support: dimension must be >= 1");
    if (s.points.empty()) throw std::invalid_argument("support: empty point set");
    std::set<ZVec> seen;
    for (const ZVec& p : s.points) {
        if (static_cast<int>(p.size()) != s.dim)
            throw std::invalid_argument("support: point dimension mismatch");
        if (!seen.insert(p).second) throw std::invalid_argument("support: duplicate point");
    }
}

Polytope convex_hull(const SupportSet& s) {
    validate_support(s);
    std::vector<QVec> pts;
    pts.reserve(s.points.size());
    for (const ZVec& p : s.points) pts.emplace_back(p.begin(), p.end());
    return convex_hull(s.dim, pts);
}

Polytope convex_hull(int dim, const std::vector<QVec>& points) {
    if (dim < 1) throw std::invalid_argument("convex_hull: dimension must be >= 1");
    if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
    for (const QVec& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("convex_hull: point dimension mismatch");

    std::vector<QVec> pts;
    {
        std::set<QVec> seen;
        for (const QVec& p : points)
            if (seen.insert(p).second) pts.push_back(p);
    }

    // Affinely independent subset through pts[0].
    RowReducer rr(dim);
    std::vector<int> simplex = {0};
    for (int i = 1; i < static_cast<int>(pts.size()); ++i)
        if (rr.add(vec_sub(pts[i], pts[0]))) simplex.push_back(i);
    int k = rr.rank();

    Polytope out;
    out.ambient_ = dim;

    if (k == 0) {
        out.affine_ = 0;
        out.vertices_ = {pts[0]};
        return out;
    }

    if (k < dim) {
        // Work in coordinates of the affine hull and recurse.
        QMat bmat(dim, QVec(k, Rat(0)));
        for (int j = 0; j < k; ++j) {
            QVec bv = vec_sub(pts[simplex[j + 1]], pts[0]);
            for (int r = 0; r < dim; ++r) bmat[r][j] = bv[r];
        }
        std::vector<QVec> coords;
        std::map<QVec, int> where;
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            auto c = mat_solve(bmat, vec_sub(pts[i], pts[0]));
            if (!c) throw std::logic_error("convex_hull: affine coordinates failed");
            where[*c] = i;
            coords.push_back(std::move(*c));
        }
        Polytope low = convex_hull(k, coords);
        for (const QVec& v : low.vertices()) out.vertices_.push_back(pts[where.at(v)]);
        std::sort(out.vertices_.begin(), out.vertices_.end());
        out.affine_ = k;
        return out;
    }

    // Full-dimensional incremental hull with simplicial boundary facets.
    QVec ref(dim, Rat(0));
    for (int idx : simplex) ref = vec_add(ref, pts[idx]);
    for (auto& c : ref) c /= dim + 1;

    std::vector<SFacet> facets;
    for (int omit = 0; omit <= dim; ++omit) {
        SFacet f;
        for (int j = 0; j <= dim; ++j)
            if (j != omit) f.verts.push_back(simplex[j]);
        std::sort(f.verts.begin(), f.verts.end());
        facet_plane(pts, f.verts, ref, f.a, f.b);
        facets.push_back(std::move(f));
    }

    std::set<int> in_simplex(simplex.begin(), simplex.end());
    for (int pi = 0; pi < static_cast<int>(pts.size()); ++pi) {
        if (in_simplex.count(pi)) continue;
        const QVec& p = pts[pi];

        std::vector<int> visible;
        for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi)
            if (dot(facets[fi].a, p) > facets[fi].b) visible.push_back(fi);
        if (visible.empty()) continue;  // p already in the hull

        // A ridge of exactly one visible facet lies on the horizon (its other
        // side is invisible); a ridge of two is interior to the visible patch.
        std::map<std::vector<int>, int> ridge_count;
        for (int fi : visible) {
            for (int j = 0; j < dim; ++j) {
                std::vector<int> key = facets[fi].verts;
                key.erase(key.begin() + j);
                ++ridge_count[key];
            }
        }
        std::vector<SFacet> created;
        for (const auto& [key, count] : ridge_count) {
            if (count > 2) throw std::logic_error("convex_hull: boundary is not ridge-regular");
            if (count != 1) continue;
            SFacet nf;
            nf.verts = key;
            nf.verts.insert(std::lower_bound(nf.verts.begin(), nf.verts.end(), pi), pi);
            facet_plane(pts, nf.verts, ref, nf.a, nf.b);
            created.push_back(std::move(nf));
        }
        if (created.empty()) throw std::logic_error("convex_hull: empty horizon");
        for (int fi : visible) facets[fi].alive = false;
        facets.erase(std::remove_if(facets.begin(), facets.end(),
                                    [](const SFacet& f) { return !f.alive; }),
                     facets.end());
        for (auto& f : created) facets.push_back(std::move(f));
    }

    // The finished boundary complex must pair every ridge between two facets.
    {
        std::map<std::vector<int>, int> ridge_count;
        for (const SFacet& f : facets) {
            for (int j = 0; j < dim; ++j) {
                std::vector<int> key = f.verts;
                key.erase(key.begin() + j);
                ++ridge_count[key];
            }
        }
        for (const auto& [key, count] : ridge_count)
            if (count != 2) throw std::logic_error("convex_hull: boundary is not ridge-regular");
    }

    // Volume by coning from a fixed hull point over the simplicial boundary.
    const QVec& v0 = pts[simplex[0]];
    Rat vol = 0;
    for (const SFacet& f : facets) {
        if (!f.alive) continue;
        QMat m;
        for (int vi : f.verts) m.push_back(vec_sub(pts[vi], v0));
        vol += abs(mat_det(std::move(m)));
    }
    vol /= Rat(factorial(dim));

    // Merge coplanar simplicial facets into true facets.
    std::map<std::pair<ZVec, Rat>, char> planes;
    std::set<int> candidates;
    for (const SFacet& f : facets) {
        if (!f.alive) continue;
        planes.emplace(std::make_pair(f.a, f.b), 1);
        candidates.insert(f.verts.begin(), f.verts.end());
    }

    for (int vi : candidates) {
        RowReducer active(dim);
        for (const auto& [plane, unused] : planes) {
            if (dot(plane.first, pts[vi]) != plane.second) continue;
            QVec row(plane.first.begin(), plane.first.end());
            active.add(std::move(row));
            if (active.rank() == dim) break;
        }
        if (active.rank() == dim) out.vertices_.push_back(pts[vi]);
    }
    std::sort(out.vertices_.begin(), out.vertices_.end());

    out.affine_ = dim;
    out.volume_ = vol;
    for (const auto& [plane, unused] : planes) out.facets_.push_back(Facet{plane.first, plane.second});
    return out;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
    if (p.empty() || q.empty()) return Polytope();
    std::vector<QVec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const QVec& v : p.vertices())
        for (const QVec& w : q.vertices()) sums.push_back(vec_add(v, w));
    return convex_hull(p.ambient_dim(), sums);
}

Polytope dilate(const Polytope& p, const Int& k) {
    if (k < 0) throw std::invalid_argument("dilate: negative factor");
    if (p.empty()) return p;
    if (k == 0) return convex_hull(p.ambient_dim(), {QVec(p.ambient_dim(), Rat(0))});
    Polytope r;
    r.ambient_ = p.ambient_dim();
    r.affine_ = p.affine_dim();
    Rat kk(k);
    for (const QVec& v : p.vertices()) {
        QVec s(v.size());
        for (size_t i = 0; i < v.size(); ++i) s[i] = v[i] * kk;
        r.vertices_.push_back(std::move(s));
    }
    for (const Facet& f : p.facets()) r.facets_.push_back(Facet{f.normal, f.offset * kk});
    r.volume_ = p.volume() * rat_pow(kk, p.ambient_dim());
    return r;
}

Polytope weighted_minkowski(const std::vector<Polytope>& ps, const std::vector<Int>& w) {
    if (ps.empty()) throw std::invalid_argument("weighted_minkowski: no polytopes");
    if (ps.size() != w.size()) throw std::invalid_argument("weighted_minkowski: weight count mismatch");
    int d = ps[0].ambient_dim();
    for (const Polytope& p : ps)
        if (p.ambient_dim() != d) throw std::invalid_argument("weighted_minkowski: mixed ambients");
    Polytope acc = convex_hull(d, {QVec(d, Rat(0))});
    for (size_t i = 0; i < ps.size(); ++i) {
        if (w[i] < 0) throw std::invalid_argument("weighted_minkowski: negative weight");
        if (w[i] == 0) continue;
        acc = minkowski_sum(acc, dilate(ps[i], w[i]));
    }
    return acc;
}

Int interior_lattice_points(const Polytope& p) {
    if (p.empty() || p.affine_dim() < p.ambient_dim()) return 0;
    int d = p.ambient_dim();
    std::vector<int> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        Rat mn = p.vertices()[0][i], mx = mn;
        for (const QVec& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = static_cast<int>(ceil_rat(mn));
        hi[i] = static_cast<int>(floor_rat(mx));
    }
    Int count = 0;
    box_scan(lo, hi, [&](const std::vector<int>& z) {
        ZVec zz(z.begin(), z.end());
        for (const Facet& f : p.facets())
            if (Rat(int_dot(f.normal, zz)) >= f.offset) return;
        ++count;
    });
    return count;
}

Rat mixed_volume(const std::vector<std::pair<Polytope, int>>& summands) {
    if (summands.empty()) throw std::invalid_argument("mixed_volume: no summands");
    int d = summands[0].first.ambient_dim();
    int total = 0;
    std::vector<Polytope> ps;
    std::vector<int> mult;
    for (const auto& [p, m] : summands) {
        if (p.ambient_dim() != d) throw std::invalid_argument("mixed_volume: mixed ambients");
        if (p.empty()) throw std::invalid_argument("mixed_volume: empty summand");
        if (m < 0) throw std::invalid_argument("mixed_volume: negative multiplicity");
        ps.push_back(p);
        mult.push_back(m);
        total += m;
    }
    if (total != d) throw std::invalid_argument("mixed_volume: multiplicities must sum to the dimension");

    std::map<std::vector<int>, Rat> vols;
    Rat mv = 0;
    std::vector<int> zero(ps.size(), 0);
    box_scan(zero, mult, [&](const std::vector<int>& lam) {
        int tot = 0;
        for (int v : lam) tot += v;
        if (tot == 0) return;
        Int coef = 1;
        for (size_t i = 0; i < lam.size(); ++i) coef *= binomial(mult[i], lam[i]);
        auto it = vols.find(lam);
        if (it == vols.end()) {
            ZVec w(lam.begin(), lam.end());
            it = vols.emplace(lam, weighted_minkowski(ps, w).volume()).first;
        }
        Rat term = Rat(coef) * it->second;
        if ((d - tot) % 2 != 0) term = -term;
        mv += term;
    });
    return mv;
}

Rat VolumeForm::coefficient(const Exp& g) const {
    if (static_cast<int>(g.size()) != ell)
        throw std::invalid_argument("VolumeForm::coefficient: arity mismatch");
    auto it = terms.find(g);
    return it == terms.end() ? Rat(0) : it->second;
}

VolumeForm volume_polynomial(const std::vector<Polytope>& ps) {
    if (ps.empty()) throw std::invalid_argument("volume_polynomial: no polytopes");
    int d = ps[0].ambient_dim();
    for (const Polytope& p : ps) {
        if (p.ambient_dim() != d) throw std::invalid_argument("volume_polynomial: mixed ambients");
        if (p.empty()) throw std::invalid_argument("volume_polynomial: empty polytope");
    }
    int l = static_cast<int>(ps.size());
    VolumeForm f;
    f.ell = l;
    f.degree = d;

    std::map<std::vector<int>, Rat> vols;
    auto vol_at = [&](const std::vector<int>& lam) -> const Rat& {
        auto it = vols.find(lam);
        if (it == vols.end()) {
            ZVec w(lam.begin(), lam.end());
            it = vols.emplace(lam, weighted_minkowski(ps, w).volume()).first;
        }
        return it->second;
    };

    for (const Exp& g : exponents_of_degree(d, std::vector<int>(l, d))) {
        Rat mv = 0;
        std::vector<int> zero(l, 0);
        box_scan(zero, g, [&](const std::vector<int>& lam) {
            int tot = 0;
            for (int v : lam) tot += v;
            if (tot == 0) return;
            Int coef = 1;
            for (int i = 0; i < l; ++i) coef *= binomial(g[i], lam[i]);
            Rat term = Rat(coef) * vol_at(lam);
            if ((d - tot) % 2 != 0) term = -term;
            mv += term;
        });
        Int gfact = 1;
        for (int v : g) gfact *= factorial(v);
        Rat mu = mv / Rat(gfact);
        if (mu != 0) f.terms.emplace(g, std::move(mu));
    }
    return f;
}

VolumeForm volume_polynomial_by_interpolation(const std::vector<Polytope>& ps) {
    if (ps.empty()) throw std::invalid_argument("volume_polynomial: no polytopes");
    int d = ps[0].ambient_dim();
    for (const Polytope& p : ps) {
        if (p.ambient_dim() != d) throw std::invalid_argument("volume_polynomial: mixed ambients");
        if (p.empty()) throw std::invalid_argument("volume_polynomial: empty polytope");
    }
    int l = static_cast<int>(ps.size());
    std::vector<Exp> mons = exponents_of_degree(d, std::vector<int>(l, d));

    // Homogeneity lets us pin the last weight to 1; the remaining weights run
    // over the principal lattice of d*Simplex, a unisolvent set for degree d.
    std::vector<ZVec> samples;
    for (int t = 0; t <= d; ++t)
        for (const Exp& w : exponents_of_degree(t, std::vector<int>(l - 1, d))) {
            ZVec s(w.begin(), w.end());
            s.push_back(1);
            samples.push_back(std::move(s));
        }
    if (samples.size() != mons.size())
        throw std::logic_error("volume_polynomial interpolation: sample count mismatch");

    size_t m = mons.size();
    QMat a(m, QVec(m, Rat(0)));
    QVec rhs(m);
    for (size_t s = 0; s < m; ++s) {
        for (size_t j = 0; j < m; ++j) {
            Rat v = 1;
            for (int i = 0; i < l; ++i)
                for (int e = 0; e < mons[j][i]; ++e) v *= Rat(samples[s][i]);
            a[s][j] = std::move(v);
        }
        rhs[s] = weighted_minkowski(ps, samples[s]).volume();
    }
    auto x = mat_solve(std::move(a), std::move(rhs));
    if (!x) throw std::logic_error("volume_polynomial interpolation: singular system");

    VolumeForm f;
    f.ell = l;
    f.degree = d;
    for (size_t j = 0; j < m; ++j)
        if ((*x)[j] != 0) f.terms.emplace(mons[j], (*x)[j]);
    return f;
}

std::string to_string(const VolumeForm& f) {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : f.terms) {
        if (!first) os << " + ";
        os << c.str();
        std::string mon = monomial_string(g);
        if (mon != "1") os << "*" << mon;
        first = false;
    }
    return os.str();
}

}  // namespace hurwitz
