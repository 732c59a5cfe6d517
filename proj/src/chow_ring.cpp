#include "hurwitz/chow_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

int exp_total(const Exp& a) {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

Exp exp_plus(const Exp& a, int i) {
    Exp r = a;
    r.at(i) += 1;
    return r;
}

Exp exp_minus(const Exp& a, int i) {
    Exp r = a;
    r.at(i) -= 1;
    return r;
}

bool exp_nonneg(const Exp& a) {
    return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

namespace {

void enumerate_rec(int pos, int remaining, const std::vector<int>& bounds, Exp& cur,
                   std::vector<Exp>& out) {
    int l = static_cast<int>(bounds.size());
    if (pos == l) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int hi = std::min(bounds[pos], remaining);
    for (int v = hi; v >= 0; --v) {  // descending lex
        cur[pos] = v;
        enumerate_rec(pos + 1, remaining - v, bounds, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<Exp> exponents_of_degree(int deg, const std::vector<int>& bounds) {
    std::vector<Exp> out;
    if (deg < 0) return out;
    Exp cur(bounds.size(), 0);
    enumerate_rec(0, deg, bounds, cur, out);
    return out;
}

Ambient::Ambient(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("Ambient: needs at least one factor");
    for (int n : dims_)
        if (n < 1) throw std::invalid_argument("Ambient: factor dimensions must be >= 1");
}

int Ambient::total_dim() const {
    int s = 0;
    for (int n : dims_) s += n;
    return s;
}

bool Ambient::in_box(const Exp& a) const {
    if (static_cast<int>(a.size()) != ell()) return false;
    for (int i = 0; i < ell(); ++i)
        if (a[i] < 0 || a[i] > dims_[i]) return false;
    return true;
}

Int ChowClass::coefficient(const Exp& a) const {
    if (!amb_.in_box(a)) return 0;
    auto it = terms_.find(a);
    return it == terms_.end() ? Int(0) : it->second;
}

void ChowClass::add_term(const Exp& a, const Int& c) {
    if (!amb_.in_box(a)) throw std::invalid_argument("ChowClass::add_term: exponent outside ring");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ChowClass chow_zero(const Ambient& amb) { return ChowClass(amb); }

ChowClass chow_one(const Ambient& amb) {
    ChowClass r(amb);
    r.add_term(Exp(amb.ell(), 0), 1);
    return r;
}

ChowClass chow_monomial(const Ambient& amb, const Exp& a, const Int& c) {
    ChowClass r(amb);
    r.add_term(a, c);
    return r;
}

namespace {

void require_same_ring(const ChowClass& x, const ChowClass& y) {
    if (!(x.ambient() == y.ambient()))
        throw std::invalid_argument("chow ring operation on mismatched ambients");
}

}  // namespace

ChowClass chow_add(const ChowClass& x, const ChowClass& y) {
    require_same_ring(x, y);
    ChowClass r = x;
    for (const auto& [a, c] : y.terms()) r.add_term(a, c);
    return r;
}

ChowClass chow_sub(const ChowClass& x, const ChowClass& y) {
    require_same_ring(x, y);
    ChowClass r = x;
    for (const auto& [a, c] : y.terms()) r.add_term(a, -c);
    return r;
}

ChowClass chow_scale(const ChowClass& x, const Int& c) {
    ChowClass r(x.ambient());
    if (c == 0) return r;
    for (const auto& [a, k] : x.terms()) r.add_term(a, k * c);
    return r;
}

ChowClass chow_mul(const ChowClass& x, const ChowClass& y) {
    require_same_ring(x, y);
    const Ambient& amb = x.ambient();
    ChowClass r(amb);
    for (const auto& [a, ca] : x.terms()) {
        for (const auto& [b, cb] : y.terms()) {
            Exp s(a.size());
            bool keep = true;
            for (size_t i = 0; i < a.size(); ++i) {
                s[i] = a[i] + b[i];
                if (s[i] > amb.dim(static_cast<int>(i))) {
                    keep = false;  // truncated by T_i^{n_i+1} = 0
                    break;
                }
            }
            if (keep) r.add_term(s, ca * cb);
        }
    }
    return r;
}

ChowClass chow_pow(const ChowClass& x, int k) {
    if (k < 0) throw std::invalid_argument("chow_pow: negative exponent");
    ChowClass r = chow_one(x.ambient());
    for (int i = 0; i < k; ++i) r = chow_mul(r, x);
    return r;
}

Int chow_integral(const ChowClass& x) { return x.coefficient(x.ambient().top()); }

int homogeneous_degree(const ChowClass& x) {
    if (x.is_zero()) return -1;
    int deg = exp_total(x.terms().begin()->first);
    for (const auto& [a, c] : x.terms())
        if (exp_total(a) != deg)
            throw std::invalid_argument("homogeneous_degree: class has mixed degrees");
    return deg;
}

std::string monomial_string(const Exp& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!first) os << "*";
        os << "T" << (i + 1) << "^" << a[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

std::string to_string(const ChowClass& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : x.terms()) {
        if (!first) os << " + ";
        os << c.str();
        std::string mon = monomial_string(a);
        if (mon != "1") os << "*" << mon;
        first = false;
    }
    return os.str();
}

}  // namespace hurwitz
