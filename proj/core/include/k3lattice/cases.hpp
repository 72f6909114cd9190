#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "k3lattice/niemeier.hpp"

namespace k3l {

/// The six invariant-sublattice cases, 2i-2iv over 24A1 and 2v-2vi over 12A2.
enum class CaseId { c2i, c2ii, c2iii, c2iv, c2v, c2vi };

std::string to_string(CaseId c);
CaseId case_from_string(const std::string& s);
RootSystem case_root_system(CaseId c);
std::vector<int> case_orbit_sizes(CaseId c);
std::vector<CaseId> all_cases();

/// Admissible orbit-size multisets (six orbits covering the 24 roots) for the
/// given root system, with parts drawn from `parts`. 24A1: [1,a,b,c,d,e] with
/// the remaining five parts summing to 23; 12A2: [1,1,a,a,b,b] with a+b = 11.
std::vector<std::vector<int>> orbit_size_multisets(RootSystem rs, const std::set<int>& parts);

/// Default part set: transitive orbit sizes that fit in 24, plus fixed points.
const std::set<int>& default_orbit_parts();

/// Cases for a root system, derived from the partition enumeration.
std::vector<CaseId> enumerate_cases(RootSystem rs);

/// Named orbits of the 24 simple roots. For the ternary cases the root labels
/// are already sign-normalized: the glue summand of every chosen codeword
/// reads +(first + 2*second)/3 over the orbit labeled with first roots.
struct OrbitLabeling {
    CaseId case_id;
    std::map<std::string, std::vector<int>> orbits;
    // incidence data the basis formulas consume
    std::vector<int> octad_a, octad_b;  // binary cases (octad_b unused for 2iii)
    TernaryWord12 word_a, word_b;       // 2v: word_a is the weight-12 word
};

OrbitLabeling build_labeling(CaseId c, const GolayCode& code);

struct CaseBasis {
    CaseId case_id;
    std::array<LatticeVector, 6> e;
};

/// Basis per the case formulas; every vector is membership-checked.
CaseBasis build_basis(const OrbitLabeling& lab, const NiemeierLattice& n);

ExactMatrix gram(const CaseBasis& basis, const NiemeierLattice& n);

/// Reference intersection matrices M1..M6 and their inverses.
ExactMatrix reference_gram(CaseId c);
ExactMatrix reference_gram_inverse(CaseId c);

/// If gram(basis) differs from the reference by basis labeling, search signed
/// permutations of (e1..e6) for an exact match and apply it. Returns false
/// when no signed permutation aligns.
bool align_to_reference(CaseBasis& basis, const NiemeierLattice& n);

}  // namespace k3l
