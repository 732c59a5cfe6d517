#ifndef HURWITZ_APPS_HPP
#define HURWITZ_APPS_HPP

#include <utility>
#include <vector>

#include "hurwitz/chow_ring.hpp"
#include "hurwitz/ci.hpp"
#include "hurwitz/toric.hpp"

namespace hurwitz {

// l players, player i mixing k_i + 1 pure strategies.  The equilibrium
// variety sits in P^{n_1} x ... x P^{n_l} with n_i = prod_{j != i}(k_j+1) - 1
// and is dominated by Sigma = P^{k_1} x ... x P^{k_l}; computations happen in
// A*(Sigma) with H_i the i-th hyperplane and Hhat_i = sum_{j != i} H_j.
struct GameSpec {
    std::vector<int> k;
};

void validate_game(const GameSpec& g);

Ambient game_ambient(const GameSpec& g);   // the n_i above
Ambient sigma_ambient(const GameSpec& g);  // the k_i
int game_codim(const GameSpec& g);
Exp game_alpha(const GameSpec& g);  // distinguished direction n - k

// Count of totally mixed equilibria: integral of prod_i Hhat_i^{k_i}.
Int nash_delta(const GameSpec& g);

// Multidegree of the equilibrium model in P^{n_1} x ... x P^{n_l}:
// delta_alpha = integral of prod_j Hhat_j^{n_j - alpha_j}; the coefficient at
// n - k is nash_delta.
ChowClass game_multidegree(const GameSpec& g);

// Genus of the curve cut on Sigma by k_j - (j==i) generic sections of the
// classes Hhat_j, by adjunction; i is zero-based.
Int nash_genus_sigma(const GameSpec& g, int i);

// Expected Hurwitz degrees: u_i = integral of
//   2 H + (prod_j Hhat_j^{k_j - (j==i)}) (-Hhat_i + sum_j [k_j Hhat_j - (k_j+1) H_j])
// with H = prod_j Hhat_j^{k_j}, evaluated as a single integral per direction.
std::vector<Int> nash_hurwitz_bound(const GameSpec& g);

// Report at alpha*: delta, gated per-direction genus, bound flagged bound_only.
DegreeReport game_degree_report(const GameSpec& g);

// Closed form for l binary players: (l-1)! sum_{j=0..l} (-1)^j/j! [(l-3)(l-j)+l].
Int binary_game_bound(int ell);

// Support sets A_i = lattice points of prod_{j != i} Delta_{k_j} with block i
// pinned to zero; lowers a game to the toric machinery.
ToricSpec game_to_toric(const GameSpec& g);

// Lines in P^3 meeting one general fixed line per edge: a complete
// intersection of vertex quadrics and edge incidence divisors on (P^5)^l.
struct GraphSpec {
    int ell = 0;
    std::vector<std::pair<int, int>> edges;  // unordered pairs of 1-based vertices
};

void validate_graph(const GraphSpec& g);

// n = (5,...,5); rows 2 e_i for every vertex, then e_i + e_j per edge in
// lexicographic order.
std::pair<std::vector<int>, DegreeMatrix> graph_degree_matrix(const GraphSpec& g);

// 2^l T_1...T_l prod_{ij in G} (T_i + T_j), expanded directly; agrees with
// multidegree_ci on graph_degree_matrix by a separate code path.
ChowClass graph_multidegree(const GraphSpec& g);

// Delegates to hurwitz_degree_ci on the graph's degree matrix; the note warns
// that the special incidence geometry may only attain these as upper bounds.
DegreeReport graph_hurwitz_degree(const GraphSpec& g, const Exp& alpha);

}  // namespace hurwitz

#endif
