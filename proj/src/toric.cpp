#include "hurwitz/toric.hpp"

#include <utility>

#include "hurwitz/linalg.hpp"

namespace hurwitz {

namespace {

void check_index(const Ambient& amb, const Exp& a, int expected_total, const char* what) {
    if (static_cast<int>(a.size()) != amb.ell())
        throw std::invalid_argument(std::string(what) + ": arity mismatch");
    if (!amb.in_box(a)) throw std::invalid_argument(std::string(what) + ": index outside the box");
    if (exp_total(a) != expected_total)
        throw std::invalid_argument(std::string(what) + ": wrong total degree");
}

}  // namespace

void validate_toric(const ToricSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("toric spec: dimension must be positive");
    if (spec.supports.empty()) throw std::invalid_argument("toric spec: needs at least one support");
    int total = 0;
    std::vector<ZVec> diffs;
    for (const SupportSet& s : spec.supports) {
        if (s.dim != spec.dim) throw std::invalid_argument("toric spec: support dimension mismatch");
        validate_support(s);
        if (s.points.size() < 2)
            throw std::invalid_argument("toric spec: each support needs at least two points");
        total += static_cast<int>(s.points.size()) - 1;
        for (size_t k = 1; k < s.points.size(); ++k) {
            ZVec row(spec.dim);
            for (int j = 0; j < spec.dim; ++j) row[j] = s.points[k][j] - s.points[0][j];
            diffs.push_back(std::move(row));
        }
    }
    if (total < spec.dim)
        throw std::invalid_argument("toric spec: supports are too small for the dimension");
    LatticeForm lf = row_lattice_form(diffs, spec.dim);
    if (lf.rank < spec.dim)
        throw SpecRejection("toric spec: support directions span a proper subspace");
    if (lf.index != 1)
        throw SpecRejection("toric spec: support lattice is a proper sublattice of Z^d");
}

Ambient toric_ambient(const ToricSpec& spec) {
    std::vector<int> dims;
    dims.reserve(spec.supports.size());
    for (const SupportSet& s : spec.supports) dims.push_back(static_cast<int>(s.points.size()) - 1);
    return Ambient(dims);
}

int toric_codim(const ToricSpec& spec) {
    int c = -spec.dim;
    for (const SupportSet& s : spec.supports) c += static_cast<int>(s.points.size()) - 1;
    return c;
}

namespace {

ToricSpec validated(ToricSpec spec) {
    validate_toric(spec);
    return spec;
}

}  // namespace

ToricCalculator::ToricCalculator(ToricSpec spec)
    : spec_(validated(std::move(spec))), amb_(toric_ambient(spec_)), codim_(toric_codim(spec_)) {
    hulls_.reserve(spec_.supports.size());
    for (const SupportSet& s : spec_.supports) hulls_.push_back(convex_hull(s));
}

const Polytope& ToricCalculator::weighted_sum(const Exp& lambda) {
    int l = amb_.ell();
    if (static_cast<int>(lambda.size()) != l)
        throw std::invalid_argument("weighted_sum: arity mismatch");
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument("weighted_sum: negative weight");
    auto it = sums_.find(lambda);
    if (it != sums_.end()) return it->second;

    int j = -1;
    for (int i = 0; i < l; ++i)
        if (lambda[i] > 0) j = i;
    Polytope p;
    if (j < 0) {
        p = convex_hull(spec_.dim, {QVec(spec_.dim, Rat(0))});
    } else {
        Exp prev = lambda;
        --prev[j];
        p = minkowski_sum(weighted_sum(prev), hulls_[j]);
    }
    return sums_.emplace(lambda, std::move(p)).first->second;
}

Int ToricCalculator::interior_count(const Exp& lambda) {
    auto it = interior_.find(lambda);
    if (it != interior_.end()) return it->second;
    Int n = interior_lattice_points(weighted_sum(lambda));
    interior_.emplace(lambda, n);
    return n;
}

const ChowClass& ToricCalculator::multidegree() {
    if (md_) return *md_;
    VolumeForm vf = volume_polynomial(hulls_);
    ChowClass md(amb_);
    for (const auto& [gamma, mu] : vf.terms) {
        Rat scaled = mu;
        for (int gi : gamma) scaled *= Rat(factorial(gi));
        if (!is_integer(scaled))
            throw std::logic_error("toric multidegree: non-integer coefficient");
        Int coeff = numerator(scaled);
        if (coeff < 0) throw std::logic_error("toric multidegree: negative coefficient");
        if (coeff == 0) continue;
        Exp alpha(amb_.ell());
        for (int i = 0; i < amb_.ell(); ++i) {
            alpha[i] = amb_.dim(i) - gamma[i];
            if (alpha[i] < 0)
                throw std::logic_error("toric multidegree: volume term exceeds the box");
        }
        md.add_term(alpha, coeff);
    }
    md_ = std::move(md);
    return *md_;
}

bool ToricCalculator::is_curve_section(const Exp& beta) {
    check_index(amb_, beta, codim_ + 1, "is_curve_section");
    const ChowClass& md = multidegree();
    for (size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] == 0) continue;
        if (md.coefficient(exp_minus(beta, static_cast<int>(j))) > 0) return true;
    }
    return false;
}

Int ToricCalculator::genus(const Exp& beta, GenusMode mode) {
    check_index(amb_, beta, codim_ + 1, "toric_genus");
    if (mode == GenusMode::Gated && !is_curve_section(beta)) return 0;

    int l = amb_.ell();
    Exp m(l);
    for (int i = 0; i < l; ++i) m[i] = amb_.dim(i) - beta[i];

    Int g = 0;
    Exp gamma(l, 0);
    for (;;) {
        Int w = 1;
        for (int i = 0; i < l; ++i) w *= binomial(m[i], gamma[i]);
        Int term = w * interior_count(gamma);
        g += ((exp_total(m) - exp_total(gamma)) % 2 == 0) ? term : -term;

        int i = 0;
        while (i < l && gamma[i] == m[i]) gamma[i++] = 0;
        if (i == l) break;
        ++gamma[i];
    }
    return g;
}

ChowClass ToricCalculator::genus_polynomial(GenusMode mode) {
    ChowClass out(amb_);
    for (const Exp& beta : exponents_of_degree(codim_ + 1, amb_.dims()))
        out.add_term(beta, genus(beta, mode));
    return out;
}

DegreeReport ToricCalculator::hurwitz_degree(const Exp& alpha) {
    check_index(amb_, alpha, codim_, "toric_hurwitz_degree");
    const ChowClass& md = multidegree();

    DegreeReport rep;
    rep.alpha = alpha;
    rep.delta = md.coefficient(alpha);
    rep.flags.bound_only = true;
    rep.flags.delta_below_two = rep.delta < 2;

    for (int i = 0; i < amb_.ell(); ++i) {
        Exp beta = exp_plus(alpha, i);
        Int g = 0;
        if (amb_.in_box(beta) && is_curve_section(beta)) {
            g = genus(beta, GenusMode::Gated);
        } else {
            rep.flags.non_curve_directions.push_back(i + 1);
        }
        rep.genus.push_back(g);
    }
    rep.degree = hurwitz_bound(rep.delta, rep.genus);
    return rep;
}

ChowClass toric_multidegree(const ToricSpec& spec) {
    ToricCalculator calc(spec);
    return calc.multidegree();
}

bool is_curve_section_toric(const ToricSpec& spec, const Exp& beta) {
    ToricCalculator calc(spec);
    return calc.is_curve_section(beta);
}

Int toric_genus(const ToricSpec& spec, const Exp& beta, GenusMode mode) {
    ToricCalculator calc(spec);
    return calc.genus(beta, mode);
}

ChowClass toric_genus_polynomial(const ToricSpec& spec, GenusMode mode) {
    ToricCalculator calc(spec);
    return calc.genus_polynomial(mode);
}

DegreeReport toric_hurwitz_degree(const ToricSpec& spec, const Exp& alpha) {
    ToricCalculator calc(spec);
    return calc.hurwitz_degree(alpha);
}

}  // namespace hurwitz
