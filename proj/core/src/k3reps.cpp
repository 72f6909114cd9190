#include "k3lattice/k3reps.hpp"

#include <stdexcept>

namespace k3l {

Sqrt5Number CharacterTable::inner(int i, int j) const {
    Sqrt5Number s{Rational(0)};
    for (int z = 0; z < 5; ++z)
        s = s + Sqrt5Number{Rational(class_sizes[z])} * values[i][z] * values[j][z];
    return s;
}

CharacterTable a5_character_table() {
    CharacterTable t;
    t.class_names = {"1A", "2A", "3A", "5A", "5B"};
    t.class_sizes = {1, 15, 20, 12, 12};
    t.dimensions = {1, 3, 3, 4, 5};

    const Sqrt5Number golden{Rational(1, 2), Rational(-1, 2)};       // (1 - sqrt5)/2
    const Sqrt5Number golden_bar{Rational(1, 2), Rational(1, 2)};    // (1 + sqrt5)/2
    auto row = [](int a, int b, int c, int d, int e) {
        return std::array<Sqrt5Number, 5>{Sqrt5Number{Rational(a)}, Sqrt5Number{Rational(b)},
                                          Sqrt5Number{Rational(c)}, Sqrt5Number{Rational(d)},
                                          Sqrt5Number{Rational(e)}};
    };
    t.values[0] = row(1, 1, 1, 1, 1);
    t.values[1] = {Sqrt5Number{Rational(3)}, Sqrt5Number{Rational(-1)}, Sqrt5Number{Rational(0)},
                   golden, golden_bar};
    t.values[2] = {Sqrt5Number{Rational(3)}, Sqrt5Number{Rational(-1)}, Sqrt5Number{Rational(0)},
                   golden_bar, golden};
    t.values[3] = row(4, 0, 1, -1, -1);
    t.values[4] = row(5, 1, -1, 0, 0);

    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Sqrt5Number want{Rational(i == j ? 60 : 0)};
            if (t.inner(i, j) != want)
                throw std::runtime_error("a5_character_table: orthogonality self-check failed");
        }
    for (int i = 0; i < 5; ++i)
        if (t.values[i][0] != Sqrt5Number{Rational(t.dimensions[i])})
            throw std::runtime_error("a5_character_table: dimension column mismatch");
    return t;
}

const std::map<int, int>& symplectic_fixed_points() {
    static const std::map<int, int> table = {{2, 8}, {3, 6}, {4, 4}, {5, 4}, {6, 2}, {7, 3}, {8, 2}};
    return table;
}

LefschetzSummary lefschetz_sum_check() {
    const CharacterTable t = a5_character_table();
    const auto& fp = symplectic_fixed_points();
    const int chi_top_k3 = 24;  // 2 + b2

    Int total(0);
    std::array<int, 5> class_orders = {1, 2, 3, 5, 5};
    for (int z = 0; z < 5; ++z) {
        int chi = class_orders[z] == 1 ? chi_top_k3 : fp.at(class_orders[z]);
        total += Int(t.class_sizes[z]) * chi;
    }

    LefschetzSummary s;
    s.total = total;
    Int rank = total / 60;
    s.rank_hstar_invariant = static_cast<int>(rank.get_si());
    // 2 + rank T + rank S^inv = rank H*^inv with rank T = 2
    s.rank_picard_invariant = s.rank_hstar_invariant - 4;
    s.rank_k3_invariant = s.rank_picard_invariant + 2;
    return s;
}

std::vector<std::array<int, 4>> solve_picard_decomposition(int bound) {
    const CharacterTable t = a5_character_table();
    std::vector<std::array<int, 4>> sols;
    // Left-hand sides: Tr(a | S_X) = chi_top(X^a) - 2 - rank T_X with
    // rank T_X = 2, i.e. 20, 4, 2, 0, 0 over the classes 1A, 2A, 3A, 5A, 5B.
    const auto& fp = symplectic_fixed_points();
    const std::array<int, 5> class_orders = {1, 2, 3, 5, 5};
    std::array<Rational, 5> trace;
    trace[0] = Rational(20);
    for (int z = 1; z < 5; ++z) trace[z] = Rational(fp.at(class_orders[z]) - 4);
    for (int a2 = 0; a2 <= bound; ++a2)
        for (int a3 = 0; a3 <= bound; ++a3)
            for (int a4 = 0; a4 <= bound; ++a4)
                for (int a5 = 0; a5 <= bound; ++a5) {
                    const std::array<int, 4> a = {a2, a3, a4, a5};
                    bool ok = true;
                    for (int z = 0; z < 5 && ok; ++z) {
                        Sqrt5Number lhs{trace[z]};
                        Sqrt5Number rhs = Sqrt5Number{Rational(2)} * t.values[0][z];
                        for (int i = 0; i < 4; ++i)
                            rhs = rhs + Sqrt5Number{Rational(a[i])} * t.values[i + 1][z];
                        ok = lhs == rhs;
                    }
                    if (ok) sols.push_back(a);
                }
    return sols;
}

namespace {

// chi_top(X^{g a}) as an element of Z[zeta3] for class a, given exponents.
Zeta3Number twist_chi(const std::array<int, 4>& e, int cls) {
    Zeta3Number zb = zeta3_power(e[0]), zc = zeta3_power(e[1]);
    Zeta3Number zd = zeta3_power(e[2]), ze = zeta3_power(e[3]);
    Zeta3Number three{Rational(3)};
    switch (cls) {
        case 0:  // identity
            return three + Zeta3Number{Rational(4)} * (zb + zc) + Zeta3Number{Rational(5)} * (zd + ze);
        case 1:  // 2A
            return three + zd + ze;
        case 2:  // 3A
            return three + zb + zc - zd - ze;
        default:  // 5A
            return three - zb - zc;
    }
}

int rational_int(const Zeta3Number& z) {
    if (!z.is_rational() || !z.a.is_integer())
        throw std::logic_error("twist value is not a rational integer");
    return static_cast<int>(z.a.numerator().get_si());
}

}  // namespace

std::vector<TwistBranch> solve_zeta3_twist() {
    std::vector<TwistBranch> out;
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d)
                for (int e = 0; e < 3; ++e) {
                    const std::array<int, 4> ex = {b, c, d, e};
                    if (twist_chi(ex, 3) != Zeta3Number{Rational(4)}) continue;  // |X^{g.5A}| = 4
                    if (!twist_chi(ex, 2).is_rational()) continue;
                    // canonical under the chi4<->chi4', chi5<->chi5' swaps
                    if (b > c || d > e) continue;
                    TwistBranch br;
                    br.exponents = ex;
                    br.chi_top = rational_int(twist_chi(ex, 0));
                    br.chi_2a = rational_int(twist_chi(ex, 1));
                    br.chi_3a = rational_int(twist_chi(ex, 2));
                    br.profile = fixed_locus_profile(br.chi_top);
                    br.note = br.chi_top == 9 ? "excluded geometrically (sec. 3)" : "";
                    out.push_back(br);
                }
    return out;
}

std::pair<int, int> fixed_locus_profile(int chi) {
    if (chi % 3 != 0) throw std::invalid_argument("fixed_locus_profile: chi must be divisible by 3");
    int n = chi / 3 - 1;
    if (n < -3 || n > 6) throw std::invalid_argument("fixed_locus_profile: n out of range [-3, 6]");
    return {n, n + 3};
}

ExactMatrix transcendental_form(int m) {
    if (m < 1) throw std::invalid_argument("transcendental_form: m >= 1 required");
    return ExactMatrix{{Rational(2 * m), Rational(-m)}, {Rational(-m), Rational(2 * m)}};
}

bool transcendental_form_invariant(int m) {
    ExactMatrix t = transcendental_form(m);
    ExactMatrix g = {{Rational(0), Rational(-1)}, {Rational(1), Rational(-1)}};
    return g.transpose() * t * g == t;
}

const std::set<int>& allowed_orbit_sizes() {
    static const std::set<int> sizes = {5, 6, 10, 12, 15, 20, 30};
    return sizes;
}

ExclusionVerdict exclude_root_system(RootSystem label) {
    switch (label) {
        case RootSystem::A4x6: {
            // A5 would have to lie in the PGL2(5)-stabilizer of the fixed
            // component, of order |PGL2(5)| / 6.
            const int stab = 120 / 6;
            return {label, false,
                    "stabilizer order " + std::to_string(stab) + " < 60"};
        }
        case RootSystem::D4x6: {
            // Componentwise-fixed D4 gives 4 singleton root orbits; the five
            // permuted components give 4 orbits of size 5.
            const int orbits = 4 + 4;
            return {label, false, std::to_string(orbits) + " orbits != 6"};
        }
        default:
            return {label, true, "admissible"};
    }
}

}  // namespace k3l
