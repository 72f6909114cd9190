#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "k3lattice/matrix.hpp"
#include "k3lattice/niemeier.hpp"
#include "k3lattice/numbers.hpp"

namespace k3l {

/// Exact character table of A5 over Q(sqrt 5). Rows are the irreducible
/// characters chi_1..chi_5 of dimensions 1, 3, 3, 4, 5; columns the classes
/// 1A, 2A, 3A, 5A, 5B of sizes 1, 15, 20, 12, 12.
struct CharacterTable {
    std::array<std::string, 5> class_names;
    std::array<int, 5> class_sizes;
    std::array<int, 5> dimensions;
    std::array<std::array<Sqrt5Number, 5>, 5> values;

    /// sum over classes of |class| * chi_i * chi_j (the characters are real)
    Sqrt5Number inner(int i, int j) const;
};

/// Table with column orthogonality self-checked; throws on failure.
CharacterTable a5_character_table();

/// Fixed-point counts |X^d| for a symplectic automorphism of order 2..8.
const std::map<int, int>& symplectic_fixed_points();

struct LefschetzSummary {
    Int total;                 // sum over A5 of chi_top(X^a)
    int rank_hstar_invariant;  // total / |A5|
    int rank_k3_invariant;     // rank of the invariant part of the K3 lattice
    int rank_picard_invariant; // rank of the invariant part of the Picard lattice
};
LefschetzSummary lefschetz_sum_check();

/// Nonnegative multiplicities (a2, a3, a4, a5) in 2 chi_1 + sum a_i chi_i
/// solving the five trace equations; brute force over [0, bound]^4.
std::vector<std::array<int, 4>> solve_picard_decomposition(int bound = 6);

struct TwistBranch {
    std::array<int, 4> exponents;  // (b, c, d, e), canonical under b<->c, d<->e
    int chi_top;                   // chi_top(X^g)
    int chi_2a;                    // chi_top(X^{g.2A})
    int chi_3a;                    // chi_top(X^{g.3A})
    std::pair<int, int> profile;   // (n_g, m_g)
    std::string note;
};

/// All exponent tuples (b,c,d,e) in {0,1,2}^4 with chi_top(X^{g.5A}) = 4 and
/// chi_top(X^{g.3A}) rational, merged under the character-swap symmetry.
std::vector<TwistBranch> solve_zeta3_twist();

/// n_h = chi/3 - 1, m_h = n_h + 3. Requires 3 | chi and -3 <= n_h <= 6.
std::pair<int, int> fixed_locus_profile(int chi);

/// [[2m, -m], [-m, 2m]]; throws for m < 1.
ExactMatrix transcendental_form(int m);
/// g^T T g = T for the order-3 action t1 -> t2, t2 -> -(t1 + t2).
bool transcendental_form_invariant(int m);

/// Sizes of transitive A5-orbits: r | 60 with r in {5, 6, 10, 12, 15, 20, 30}.
const std::set<int>& allowed_orbit_sizes();

struct ExclusionVerdict {
    RootSystem label;
    bool admissible;
    std::string reason;
};

/// 6A4 fails the stabilizer-order bound, 6D4 the orbit count; 24A1 and 12A2
/// are admissible.
ExclusionVerdict exclude_root_system(RootSystem label);

}  // namespace k3l
