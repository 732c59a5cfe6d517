#include "hurwitz/apps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hurwitz {

namespace {

ChowClass hyperplane(const Ambient& amb, int i) {
    Exp e(amb.ell(), 0);
    e[i] = 1;
    return chow_monomial(amb, e);
}

// Hhat_i = sum_{j != i} H_j
ChowClass hhat(const Ambient& amb, int i) {
    ChowClass s(amb);
    for (int j = 0; j < amb.ell(); ++j) {
        if (j == i) continue;
        Exp e(amb.ell(), 0);
        e[j] = 1;
        s.add_term(e, 1);
    }
    return s;
}

// prod_j Hhat_j^{e_j}
ChowClass hhat_product(const Ambient& sig, const std::vector<int>& exps) {
    ChowClass p = chow_one(sig);
    for (int j = 0; j < sig.ell(); ++j) p = chow_mul(p, chow_pow(hhat(sig, j), exps[j]));
    return p;
}

// -Hhat_i + sum_j [k_j Hhat_j - (k_j+1) H_j]
ChowClass adjunction_bracket(const Ambient& sig, const std::vector<int>& k, int i) {
    ChowClass b = chow_scale(hhat(sig, i), -1);
    for (int j = 0; j < sig.ell(); ++j) {
        b = chow_add(b, chow_scale(hhat(sig, j), k[j]));
        b = chow_add(b, chow_scale(hyperplane(sig, j), -(k[j] + 1)));
    }
    return b;
}

std::vector<int> sections_through(const std::vector<int>& k, int skip) {
    std::vector<int> m = k;
    if (skip >= 0) --m[skip];
    return m;
}

}  // namespace

void validate_game(const GameSpec& g) {
    if (g.k.size() < 2) throw std::invalid_argument("game: needs at least two players");
    long long prod = 1;
    for (int ki : g.k) {
        if (ki < 1) throw std::invalid_argument("game: each player needs at least two strategies");
        prod *= ki + 1;
        if (prod > (1LL << 31)) throw std::invalid_argument("game: format too large");
    }
}

Ambient game_ambient(const GameSpec& g) {
    validate_game(g);
    int l = static_cast<int>(g.k.size());
    std::vector<int> n(l);
    for (int i = 0; i < l; ++i) {
        long long prod = 1;
        for (int j = 0; j < l; ++j)
            if (j != i) prod *= g.k[j] + 1;
        n[i] = static_cast<int>(prod - 1);
    }
    return Ambient(n);
}

Ambient sigma_ambient(const GameSpec& g) {
    validate_game(g);
    return Ambient(g.k);
}

int game_codim(const GameSpec& g) {
    Ambient amb = game_ambient(g);
    int c = 0;
    for (int i = 0; i < amb.ell(); ++i) c += amb.dim(i) - g.k[i];
    return c;
}

Exp game_alpha(const GameSpec& g) {
    Ambient amb = game_ambient(g);
    Exp a(amb.ell());
    for (int i = 0; i < amb.ell(); ++i) a[i] = amb.dim(i) - g.k[i];
    return a;
}

Int nash_delta(const GameSpec& g) {
    Ambient sig = sigma_ambient(g);
    return chow_integral(hhat_product(sig, g.k));
}

ChowClass game_multidegree(const GameSpec& g) {
    Ambient amb = game_ambient(g);
    Ambient sig = sigma_ambient(g);
    ChowClass md(amb);
    std::vector<int> sections(amb.ell());
    for (const Exp& alpha : exponents_of_degree(game_codim(g), amb.dims())) {
        for (int j = 0; j < amb.ell(); ++j) sections[j] = amb.dim(j) - alpha[j];
        Int coeff = chow_integral(hhat_product(sig, sections));
        if (coeff < 0) throw std::logic_error("game_multidegree: negative coefficient");
        if (coeff != 0) md.add_term(alpha, coeff);
    }
    return md;
}

Int nash_genus_sigma(const GameSpec& g, int i) {
    Ambient sig = sigma_ambient(g);
    if (i < 0 || i >= sig.ell()) throw std::invalid_argument("nash_genus_sigma: bad direction");
    ChowClass curve = hhat_product(sig, sections_through(g.k, i));
    Int t = chow_integral(chow_mul(curve, adjunction_bracket(sig, g.k, i)));
    if (t % 2 != 0) throw std::logic_error("nash_genus_sigma: adjunction integral is odd");
    return t / 2 + 1;
}

std::vector<Int> nash_hurwitz_bound(const GameSpec& g) {
    Ambient sig = sigma_ambient(g);
    ChowClass h2 = chow_scale(hhat_product(sig, g.k), 2);
    std::vector<Int> u;
    for (int i = 0; i < sig.ell(); ++i) {
        ChowClass hi = hhat_product(sig, sections_through(g.k, i));
        ChowClass total = chow_add(h2, chow_mul(hi, adjunction_bracket(sig, g.k, i)));
        u.push_back(chow_integral(total));
    }
    return u;
}

DegreeReport game_degree_report(const GameSpec& g) {
    Ambient sig = sigma_ambient(g);
    Ambient amb = game_ambient(g);
    int l = sig.ell();

    DegreeReport rep;
    rep.alpha = game_alpha(g);
    rep.delta = nash_delta(g);
    rep.flags.bound_only = true;
    rep.flags.delta_below_two = rep.delta < 2;

    for (int i = 0; i < l; ++i) {
        Exp beta = exp_plus(rep.alpha, i);
        // curve direction iff some neighbour coefficient delta_{beta - e_j} is
        // positive; on Sigma that is the integral of prod Hhat^{k - e_i + e_j}
        bool curve = false;
        for (int j = 0; j < l && !curve; ++j) {
            if (beta[j] < 1) continue;
            Exp prev = exp_minus(beta, j);
            if (!exp_nonneg(prev) || !amb.in_box(prev)) continue;
            std::vector<int> exps = g.k;
            --exps[i];
            ++exps[j];
            if (chow_integral(hhat_product(sig, exps)) > 0) curve = true;
        }
        if (curve) {
            rep.genus.push_back(nash_genus_sigma(g, i));
        } else {
            rep.genus.push_back(0);
            rep.flags.non_curve_directions.push_back(i + 1);
        }
    }
    rep.degree = hurwitz_bound(rep.delta, rep.genus);
    return rep;
}

Int binary_game_bound(int ell) {
    if (ell < 3) throw std::invalid_argument("binary_game_bound: needs at least three players");
    Rat sum = 0;
    for (int j = 0; j <= ell; ++j) {
        Rat term = Rat(Int(ell - 3) * (ell - j) + ell) / Rat(factorial(j));
        sum += (j % 2 == 0) ? term : -term;
    }
    Rat value = Rat(factorial(ell - 1)) * sum;
    if (!is_integer(value)) throw std::logic_error("binary_game_bound: non-integer value");
    return numerator(value);
}

ToricSpec game_to_toric(const GameSpec& g) {
    validate_game(g);
    int l = static_cast<int>(g.k.size());
    int d = 0;
    std::vector<int> offset(l);
    for (int j = 0; j < l; ++j) {
        offset[j] = d;
        d += g.k[j];
    }

    ToricSpec t;
    t.dim = d;
    for (int i = 0; i < l; ++i) {
        SupportSet s;
        s.dim = d;
        // odometer over one vertex choice per simplex block j != i;
        // choice 0 is the block origin, choice v >= 1 the v-th unit vector
        std::vector<int> choice(l, 0);
        for (;;) {
            ZVec p(d, 0);
            for (int j = 0; j < l; ++j)
                if (j != i && choice[j] > 0) p[offset[j] + choice[j] - 1] = 1;
            s.points.push_back(std::move(p));

            int j = 0;
            while (j < l && (j == i || choice[j] == g.k[j])) {
                if (j != i) choice[j] = 0;
                ++j;
            }
            if (j == l) break;
            ++choice[j];
        }
        t.supports.push_back(std::move(s));
    }
    return t;
}

void validate_graph(const GraphSpec& g) {
    if (g.ell < 1) throw std::invalid_argument("graph: needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : g.edges) {
        if (a < 1 || b < 1 || a > g.ell || b > g.ell)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("graph: loops are not allowed");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw std::invalid_argument("graph: repeated edge");
    }
}

std::pair<std::vector<int>, DegreeMatrix> graph_degree_matrix(const GraphSpec& g) {
    validate_graph(g);
    std::vector<int> n(g.ell, 5);
    DegreeMatrix b;
    for (int i = 0; i < g.ell; ++i) {
        ZVec row(g.ell, Int(0));
        row[i] = 2;
        b.push_back(std::move(row));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (const auto& [a, c] : g.edges) edges.push_back({std::min(a, c), std::max(a, c)});
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, c] : edges) {
        ZVec row(g.ell, Int(0));
        row[a - 1] = 1;
        row[c - 1] = 1;
        b.push_back(std::move(row));
    }
    return {std::move(n), std::move(b)};
}

ChowClass graph_multidegree(const GraphSpec& g) {
    validate_graph(g);
    Ambient amb(std::vector<int>(g.ell, 5));
    ChowClass md = chow_monomial(amb, Exp(g.ell, 1), Int(1) << g.ell);
    for (const auto& [a, c] : g.edges) {
        ChowClass f(amb);
        Exp ea(g.ell, 0), ec(g.ell, 0);
        ea[a - 1] = 1;
        ec[c - 1] = 1;
        f.add_term(ea, 1);
        f.add_term(ec, 1);
        md = chow_mul(md, f);
    }
    return md;
}

DegreeReport graph_hurwitz_degree(const GraphSpec& g, const Exp& alpha) {
    auto [n, b] = graph_degree_matrix(g);
    DegreeReport rep = hurwitz_degree_ci(n, b, alpha);
    rep.note =
        "values for a generic complete intersection of these degrees; the incidence variety "
        "itself attains at most this (extraneous factors possible)";
    return rep;
}

}  // namespace hurwitz
