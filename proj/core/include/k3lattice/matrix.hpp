#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "k3lattice/rational.hpp"

namespace k3l {

/// Dense matrix of exact rationals. All arithmetic is exact; nothing is rounded.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_integer_matrix() const;
    ExactMatrix transpose() const;

    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);
    friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> a_;
};

/// One row per line, entries space separated, each entry "p/q" or "p".
std::string to_text(const ExactMatrix& m);
ExactMatrix matrix_from_text(const std::string& text);

}  // namespace k3l
