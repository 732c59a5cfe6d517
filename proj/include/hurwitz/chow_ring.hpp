#ifndef HURWITZ_CHOW_RING_HPP
#define HURWITZ_CHOW_RING_HPP

#include <map>
#include <string>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Multi-exponent of the generators T_1..T_l.
using Exp = std::vector<int>;

int exp_total(const Exp& a);
Exp exp_plus(const Exp& a, int i);   // a + e_i
Exp exp_minus(const Exp& a, int i);  // a - e_i; entries may go negative, callers treat
                                     // negative exponents as "no such term"
bool exp_nonneg(const Exp& a);

// All a with |a| = deg and 0 <= a_i <= bounds_i, in descending lexicographic order.
std::vector<Exp> exponents_of_degree(int deg, const std::vector<int>& bounds);

// Product of projective spaces P^{n_1} x ... x P^{n_l}.  The Chow ring is
// Z[T_1..T_l] / (T_i^{n_i+1}).
class Ambient {
public:
    explicit Ambient(std::vector<int> dims);

    int ell() const { return static_cast<int>(dims_.size()); }
    int dim(int i) const { return dims_[i]; }  // zero-based index
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    bool in_box(const Exp& a) const;  // 0 <= a_i <= n_i
    Exp top() const { return Exp(dims_.begin(), dims_.end()); }

    friend bool operator==(const Ambient& x, const Ambient& y) { return x.dims_ == y.dims_; }

private:
    std::vector<int> dims_;
};

// Descending lexicographic term order; matches the canonical rendering.
struct LexDesc {
    bool operator()(const Exp& a, const Exp& b) const { return b < a; }
};

using TermMap = std::map<Exp, Int, LexDesc>;

// Element of the Chow ring, sparse integer combination of monomials inside
// the truncation box.  Zero coefficients are never stored.
class ChowClass {
public:
    explicit ChowClass(Ambient amb) : amb_(std::move(amb)) {}

    const Ambient& ambient() const { return amb_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // 0 for exponents outside the box (including negative entries).
    Int coefficient(const Exp& a) const;

    // Accumulate c * T^a; a must lie in the box.
    void add_term(const Exp& a, const Int& c);

    friend bool operator==(const ChowClass& x, const ChowClass& y) {
        return x.amb_ == y.amb_ && x.terms_ == y.terms_;
    }

private:
    Ambient amb_;
    TermMap terms_;
};

ChowClass chow_zero(const Ambient& amb);
ChowClass chow_one(const Ambient& amb);
ChowClass chow_monomial(const Ambient& amb, const Exp& a, const Int& c = 1);
ChowClass chow_add(const ChowClass& x, const ChowClass& y);
ChowClass chow_sub(const ChowClass& x, const ChowClass& y);
ChowClass chow_scale(const ChowClass& x, const Int& c);
// Product in the truncated ring: monomials exceeding the box are dropped.
ChowClass chow_mul(const ChowClass& x, const ChowClass& y);
ChowClass chow_pow(const ChowClass& x, int k);

// Coefficient of the top monomial T_1^{n_1} ... T_l^{n_l}.
Int chow_integral(const ChowClass& x);

// Common total degree of all terms; -1 for the zero class; throws when mixed.
int homogeneous_degree(const ChowClass& x);

// Canonical text: terms in descending lexicographic order, each printed as
// coeff with "*Ti^ai" factors for the positive exponents; "0" for zero.
std::string to_string(const ChowClass& x);
std::string monomial_string(const Exp& a);

}  // namespace hurwitz

#endif
