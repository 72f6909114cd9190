#include "k3lattice/niemeier.hpp"

#include <stdexcept>

#include "k3lattice/normal_forms.hpp"

namespace k3l {

std::string to_string(RootSystem rs) {
    switch (rs) {
        case RootSystem::A1x24: return "24A1";
        case RootSystem::A2x12: return "12A2";
        case RootSystem::A4x6: return "6A4";
        case RootSystem::D4x6: return "6D4";
    }
    throw std::logic_error("unreachable");
}

RootSystem root_system_from_string(const std::string& s) {
    if (s == "24A1") return RootSystem::A1x24;
    if (s == "12A2") return RootSystem::A2x12;
    if (s == "6A4") return RootSystem::A4x6;
    if (s == "6D4") return RootSystem::D4x6;
    throw std::invalid_argument("unknown root system: " + s);
}

LatticeVector root_vector(int i) {
    LatticeVector v{};
    v[i] = Rational(1);
    return v;
}

Rational inner(const LatticeVector& v, const LatticeVector& w, const ExactMatrix& gram) {
    Rational s(0);
    for (int i = 0; i < 24; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < 24; ++j) {
            if (gram.at(i, j).is_zero() || w[j].is_zero()) continue;
            s += v[i] * gram.at(i, j) * w[j];
        }
    }
    return s;
}

NiemeierLattice NiemeierLattice::build(RootSystem label) {
    if (label == RootSystem::A4x6 || label == RootSystem::D4x6)
        throw std::invalid_argument("NiemeierLattice: no construction for " + to_string(label));

    NiemeierLattice n;
    n.label_ = label;
    n.root_gram_ = ExactMatrix(24, 24);

    const bool binary = label == RootSystem::A1x24;
    if (binary) {
        n.glue_ = std::make_shared<const GolayCode>(GolayCode::binary());
        for (int i = 0; i < 24; ++i) n.root_gram_.at(i, i) = Rational(-2);
    } else {
        n.glue_ = std::make_shared<const GolayCode>(GolayCode::ternary());
        for (int k = 0; k < 12; ++k) {
            n.root_gram_.at(2 * k, 2 * k) = Rational(-2);
            n.root_gram_.at(2 * k + 1, 2 * k + 1) = Rational(-2);
            n.root_gram_.at(2 * k, 2 * k + 1) = Rational(1);
            n.root_gram_.at(2 * k + 1, 2 * k) = Rational(1);
        }
    }

    // Generator collection: 24 roots plus one glue vector per generator row of
    // the code, scaled to integers, reduced by HNF to a 24-column basis.
    const int scale = binary ? 2 : 3;
    const int nglue = binary ? 12 : 6;
    ExactMatrix gens(24, 24 + nglue);
    for (int i = 0; i < 24; ++i) gens.at(i, i) = Rational(scale);
    for (int g = 0; g < nglue; ++g) {
        LatticeVector gv;
        if (binary) {
            BinaryWord24 w;
            for (int j = 0; j < 24; ++j)
                if (n.glue_->generator().at(g, j) == Rational(1)) w.bits |= 1u << j;
            gv = n.glue_vector(w);
        } else {
            TernaryWord12 w{};
            for (int j = 0; j < 12; ++j)
                w.digits[j] = static_cast<std::uint8_t>(n.glue_->generator().at(g, j).numerator().get_si());
            gv = n.glue_vector(w);
        }
        for (int i = 0; i < 24; ++i) gens.at(i, 24 + g) = gv[i] * Rational(scale);
    }

    ExactMatrix h = hermite_normal_form(gens);
    if (h.cols() != 24) throw std::runtime_error("NiemeierLattice: generator collection not full rank");
    n.basis_ = ExactMatrix(24, 24);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) n.basis_.at(i, j) = h.at(i, j) / Rational(scale);
    n.basis_inv_ = inverse(n.basis_);

    Rational det = n.basis_gram_det();
    if (det != Rational(1) && det != Rational(-1))
        throw std::runtime_error("NiemeierLattice: basis Gram determinant is not unimodular");
    return n;
}

Rational NiemeierLattice::basis_gram_det() const {
    return determinant(basis_.transpose() * root_gram_ * basis_);
}

LatticeVector NiemeierLattice::glue_vector(const BinaryWord24& w) const {
    LatticeVector v{};
    for (int i = 0; i < 24; ++i)
        if (w.bits >> i & 1u) v[i] = Rational(1, 2);
    return v;
}

LatticeVector NiemeierLattice::glue_vector(const TernaryWord12& w) const {
    LatticeVector v{};
    for (int k = 0; k < 12; ++k) {
        if (w.digits[k] == 1) {
            v[2 * k] = Rational(1, 3);
            v[2 * k + 1] = Rational(2, 3);
        } else if (w.digits[k] == 2) {
            v[2 * k] = Rational(2, 3);
            v[2 * k + 1] = Rational(1, 3);
        }
    }
    return v;
}

bool NiemeierLattice::contains(const LatticeVector& v) const {
    if (label_ == RootSystem::A1x24) {
        // coefficients in (1/2)Z whose doubled parity pattern is a codeword
        BinaryWord24 w;
        for (int i = 0; i < 24; ++i) {
            Rational t = v[i] * Rational(2);
            if (!t.is_integer()) return false;
            Int r;
            Int num = t.numerator();
            mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), 2);
            if (r == 1) w.bits |= 1u << i;
        }
        return glue_->contains(w);
    }
    // 12A2: per-component fractional pattern in {(0,0), (1/3,2/3), (2/3,1/3)},
    // and the digit string must be a ternary codeword.
    TernaryWord12 w{};
    for (int k = 0; k < 12; ++k) {
        Rational ta = v[2 * k] * Rational(3);
        Rational tb = v[2 * k + 1] * Rational(3);
        if (!ta.is_integer() || !tb.is_integer()) return false;
        Int ra, rb;
        Int na = ta.numerator(), nb = tb.numerator();
        mpz_fdiv_r_ui(ra.get_mpz_t(), na.get_mpz_t(), 3);
        mpz_fdiv_r_ui(rb.get_mpz_t(), nb.get_mpz_t(), 3);
        long a = ra.get_si(), b = rb.get_si();
        if (a == 0 && b == 0)
            w.digits[k] = 0;
        else if (a == 1 && b == 2)
            w.digits[k] = 1;
        else if (a == 2 && b == 1)
            w.digits[k] = 2;
        else
            return false;
    }
    return glue_->contains(w);
}

Rational NiemeierLattice::inner_product(const LatticeVector& v, const LatticeVector& w) const {
    return inner(v, w, root_gram_);
}

Int NiemeierLattice::saturation_index(const std::vector<LatticeVector>& vs) const {
    if (vs.empty()) throw std::invalid_argument("saturation_index: empty input");
    for (const auto& v : vs)
        if (!contains(v)) throw std::invalid_argument("saturation_index: vector not in the lattice");

    ExactMatrix coords(24, vs.size());
    for (std::size_t c = 0; c < vs.size(); ++c) {
        std::vector<Rational> col(24);
        for (int i = 0; i < 24; ++i) col[i] = vs[c][i];
        std::vector<Rational> x(24, Rational(0));
        for (int i = 0; i < 24; ++i) {
            Rational s(0);
            for (int j = 0; j < 24; ++j) s += basis_inv_.at(i, j) * col[j];
            x[i] = s;
        }
        for (int i = 0; i < 24; ++i) {
            if (!x[i].is_integer())
                throw std::logic_error("saturation_index: member with non-integral coordinates");
            coords.at(i, c) = x[i];
        }
    }

    SmithDecomposition snf = smith_normal_form(coords);
    Int idx(1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Int d = snf.d.at(i, i).numerator();
        if (d == 0) throw std::invalid_argument("saturation_index: dependent input");
        idx *= d;
    }
    return idx;
}

}  // namespace k3l
