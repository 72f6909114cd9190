#include "k3lattice/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace k3l {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged initializer");
        for (const auto& x : r) a_.push_back(x);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool ExactMatrix::is_integer_matrix() const {
    for (const auto& x : a_)
        if (!x.is_integer()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("ExactMatrix: size mismatch in product");
    ExactMatrix z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Rational& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("ExactMatrix: size mismatch in sum");
    ExactMatrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
    return z;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("ExactMatrix: size mismatch in difference");
    ExactMatrix z = x;
    for (std::size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
    return z;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

std::string to_text(const ExactMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

ExactMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<Rational>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) row.push_back(Rational::parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix_from_text: empty input");
    ExactMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("matrix_from_text: ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

}  // namespace k3l
