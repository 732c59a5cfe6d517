#include "hurwitz/ci.hpp"

#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

int codim(const DegreeMatrix& b) { return static_cast<int>(b.size()); }

void check_direction(const Ambient& amb, const Exp& beta, int expected_total, const char* what) {
    if (static_cast<int>(beta.size()) != amb.ell())
        throw std::invalid_argument(std::string(what) + ": arity mismatch");
    if (!amb.in_box(beta)) throw std::invalid_argument(std::string(what) + ": index outside the box");
    if (exp_total(beta) != expected_total)
        throw std::invalid_argument(std::string(what) + ": wrong total degree");
}

bool curve_section(const ChowClass& md, const Exp& beta) {
    for (size_t j = 0; j < beta.size(); ++j) {
        if (beta[j] == 0) continue;
        if (md.coefficient(exp_minus(beta, static_cast<int>(j))) > 0) return true;
    }
    return false;
}

// 2g - 2 of the curve section in direction beta, by adjunction.
Int adjunction_integral(const Ambient& amb, const ChowClass& md, const DegreeMatrix& b,
                        const Exp& beta) {
    int l = amb.ell();
    Exp rest(l);
    for (int j = 0; j < l; ++j) rest[j] = amb.dim(j) - beta[j];
    ChowClass section = chow_mul(md, chow_monomial(amb, rest));

    ChowClass s(amb);
    for (int j = 0; j < l; ++j) {
        Int coeff = -Int(beta[j]) - 1;
        for (const ZVec& row : b) coeff += row[j];
        Exp ej(l, 0);
        ej[j] = 1;
        s.add_term(ej, coeff);
    }
    Int integral = chow_integral(chow_mul(section, s));
    if (integral % 2 != 0) throw std::logic_error("genus_ci: adjunction integral is odd");
    return integral;
}

Int genus_from_md(const Ambient& amb, const ChowClass& md, const DegreeMatrix& b, const Exp& beta,
                  GenusMode mode) {
    if (mode == GenusMode::Gated && !curve_section(md, beta)) return 0;
    return adjunction_integral(amb, md, b, beta) / 2 + 1;
}

}  // namespace

void validate_ci(const std::vector<int>& n, const DegreeMatrix& b) {
    Ambient amb(n);  // validates n
    if (b.empty()) throw std::invalid_argument("degree matrix: needs at least one row");
    if (codim(b) > amb.total_dim())
        throw std::invalid_argument("degree matrix: codimension exceeds the ambient dimension");
    for (const ZVec& row : b) {
        if (static_cast<int>(row.size()) != amb.ell())
            throw std::invalid_argument("degree matrix: row width mismatch");
        bool nonzero = false;
        for (const Int& e : row) {
            if (e < 0) throw std::invalid_argument("degree matrix: negative entry");
            if (e > 0) nonzero = true;
        }
        if (!nonzero) throw std::invalid_argument("degree matrix: zero row");
    }
}

ChowClass multidegree_ci(const std::vector<int>& n, const DegreeMatrix& b) {
    validate_ci(n, b);
    Ambient amb(n);
    ChowClass prod = chow_one(amb);
    for (const ZVec& row : b) {
        ChowClass div(amb);
        for (int j = 0; j < amb.ell(); ++j) {
            Exp ej(amb.ell(), 0);
            ej[j] = 1;
            div.add_term(ej, row[j]);
        }
        prod = chow_mul(prod, div);
    }
    return prod;
}

bool is_curve_section(const std::vector<int>& n, const DegreeMatrix& b, const Exp& beta) {
    validate_ci(n, b);
    Ambient amb(n);
    check_direction(amb, beta, codim(b) + 1, "is_curve_section");
    return curve_section(multidegree_ci(n, b), beta);
}

Int genus_ci(const std::vector<int>& n, const DegreeMatrix& b, const Exp& beta, GenusMode mode) {
    validate_ci(n, b);
    Ambient amb(n);
    check_direction(amb, beta, codim(b) + 1, "genus_ci");
    return genus_from_md(amb, multidegree_ci(n, b), b, beta, mode);
}

ChowClass genus_polynomial_ci(const std::vector<int>& n, const DegreeMatrix& b, GenusMode mode) {
    validate_ci(n, b);
    Ambient amb(n);
    ChowClass md = multidegree_ci(n, b);
    ChowClass out(amb);
    for (const Exp& beta : exponents_of_degree(codim(b) + 1, n))
        out.add_term(beta, genus_from_md(amb, md, b, beta, mode));
    return out;
}

std::vector<Int> hurwitz_bound(const Int& delta, const std::vector<Int>& genus) {
    std::vector<Int> u;
    u.reserve(genus.size());
    for (const Int& g : genus) u.push_back(2 * (g + delta - 1));
    return u;
}

std::vector<Int> chow_degrees(const ChowClass& md, const Exp& alpha) {
    const Ambient& amb = md.ambient();
    if (static_cast<int>(alpha.size()) != amb.ell())
        throw std::invalid_argument("chow_degrees: arity mismatch");
    for (int v : alpha)
        if (v < 0) throw std::invalid_argument("chow_degrees: negative index");
    if (!md.is_zero() && exp_total(alpha) != homogeneous_degree(md) - 1)
        throw std::invalid_argument("chow_degrees: alpha must have degree codim - 1");
    std::vector<Int> out;
    for (int i = 0; i < amb.ell(); ++i) out.push_back(md.coefficient(exp_plus(alpha, i)));
    return out;
}

std::string ReportFlags::to_string() const {
    if (!any()) return "-";
    std::ostringstream os;
    bool first = true;
    auto put = [&](const std::string& s) {
        if (!first) os << ",";
        os << s;
        first = false;
    };
    if (bound_only) put("bound_only");
    if (delta_below_two) put("delta<2");
    for (int i : non_curve_directions) put("non_curve(" + std::to_string(i) + ")");
    return os.str();
}

DegreeReport hurwitz_degree_ci(const std::vector<int>& n, const DegreeMatrix& b, const Exp& alpha) {
    validate_ci(n, b);
    Ambient amb(n);
    int c = codim(b);
    check_direction(amb, alpha, c, "hurwitz_degree_ci");

    ChowClass md = multidegree_ci(n, b);
    Int delta = md.coefficient(alpha);
    int l = amb.ell();

    std::vector<Int> colsum(l, Int(0));
    for (const ZVec& row : b)
        for (int j = 0; j < l; ++j) colsum[j] += row[j];

    DegreeReport rep;
    rep.alpha = alpha;
    rep.delta = delta;
    rep.flags.delta_below_two = delta < 2;

    for (int i = 0; i < l; ++i) {
        Int u = 2 * delta;
        for (int j = 0; j < l; ++j) {
            int aij = alpha[j] + (i == j ? 1 : 0);
            if (aij <= 0) continue;
            Exp e = exp_minus(exp_plus(alpha, i), j);
            Int factor = colsum[j] - Int(alpha[j]) - 1 - (i == j ? 1 : 0);
            u += md.coefficient(e) * factor;
        }
        rep.degree.push_back(u);

        Exp beta = exp_plus(alpha, i);
        if (amb.in_box(beta)) {
            Int g = genus_from_md(amb, md, b, beta, GenusMode::Raw);
            // the closed form above must match the adjunction route
            if (u != 2 * (g + delta - 1))
                throw std::logic_error("hurwitz_degree_ci: adjunction cross-check failed");
            rep.genus.push_back(g);
            if (!curve_section(md, beta)) rep.flags.non_curve_directions.push_back(i + 1);
        } else {
            rep.genus.push_back(0);
            rep.flags.non_curve_directions.push_back(i + 1);
        }
    }
    return rep;
}

}  // namespace hurwitz
