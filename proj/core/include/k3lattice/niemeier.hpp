#pragma once

#include <array>
#include <memory>
#include <string>

#include "k3lattice/golay.hpp"
#include "k3lattice/matrix.hpp"

namespace k3l {

enum class RootSystem { A1x24, A2x12, A4x6, D4x6 };

std::string to_string(RootSystem rs);
RootSystem root_system_from_string(const std::string& s);

/// Coordinates over the fixed simple-root basis r_0..r_23.
using LatticeVector = std::array<Rational, 24>;

LatticeVector root_vector(int i);
Rational inner(const LatticeVector& v, const LatticeVector& w, const ExactMatrix& gram);

/// N(24A1) or N(12A2): negative-definite root lattice glued by the matching
/// Golay code. Roots square to -2; for 12A2 component k consists of the
/// simple roots r_{2k}, r_{2k+1} with r_{2k} . r_{2k+1} = 1.
class NiemeierLattice {
public:
    /// Only 24A1 and 12A2 support construction; 6A4 and 6D4 throw.
    static NiemeierLattice build(RootSystem label);

    RootSystem label() const { return label_; }
    const GolayCode& glue() const { return *glue_; }
    const ExactMatrix& root_gram() const { return root_gram_; }

    /// Integral basis extracted by HNF from the 24 roots and the 12 (binary)
    /// or 6 (ternary) glue generators; |det(basis Gram)| = 1 is checked.
    const ExactMatrix& basis() const { return basis_; }
    Rational basis_gram_det() const;

    bool contains(const LatticeVector& v) const;
    Rational inner_product(const LatticeVector& v, const LatticeVector& w) const;

    /// Index of span_Z(vs) inside its saturation Q-span(vs) ∩ N. The inputs
    /// must be independent lattice members; computed from the SNF invariant
    /// factors of the coordinate matrix over the integral basis.
    Int saturation_index(const std::vector<LatticeVector>& vs) const;

    /// Glue vector of a binary codeword: half the sum of the roots on its support.
    LatticeVector glue_vector(const BinaryWord24& w) const;
    /// Glue vector of a ternary codeword, canonical representative per
    /// component: digit 1 -> (1/3, 2/3), digit 2 -> (2/3, 1/3).
    LatticeVector glue_vector(const TernaryWord12& w) const;

private:
    RootSystem label_;
    std::shared_ptr<const GolayCode> glue_;
    ExactMatrix root_gram_;
    ExactMatrix basis_;
    ExactMatrix basis_inv_;
};

}  // namespace k3l
