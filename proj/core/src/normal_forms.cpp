#include "k3lattice/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3l {

namespace {

// Integer grid with the deterministic pivoting used throughout: the pivot is
// always the first usable entry in row-major scan order, so every
// decomposition is reproducible byte for byte.
using Grid = std::vector<std::vector<Int>>;

Grid to_integer_grid(const ExactMatrix& m) {
    Grid g(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j).numerator();
    return g;
}

ExactMatrix from_integer_grid(const Grid& g, std::size_t cols) {
    ExactMatrix m(g.size(), cols);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(g[i][j]);
    return m;
}

void require_integer(const ExactMatrix& m, const char* who) {
    if (!m.is_integer_matrix())
        throw std::invalid_argument(std::string(who) + ": integer entries required");
}

}  // namespace

Rational determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: non-square input");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear each row to integers, tracking the scale factors.
    Grid a(n, std::vector<Int>(n));
    Int scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l(1);
        for (std::size_t j = 0; j < n; ++j) {
            Int den = m.at(i, j).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = m.at(i, j) * Rational(l);
            a[i][j] = scaled.numerator();
        }
        scale *= l;
    }

    // Bareiss fraction-free elimination; every division is exact.
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return Rational(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Int det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square input");
    const std::size_t n = m.rows();
    ExactMatrix a = m;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a.at(p, k).is_zero()) ++p;
        if (p == n) throw std::invalid_argument("inverse: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rational piv = a.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(k, j) = a.at(k, j) / piv;
            inv.at(k, j) = inv.at(k, j) / piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rational>> solve_exact(const ExactMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_exact: size mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    ExactMatrix a(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = m.at(i, j);
        a.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j <= cols; ++j) std::swap(a.at(r, j), a.at(p, j));
        Rational piv = a.at(r, c);
        for (std::size_t j = 0; j <= cols; ++j) a.at(r, j) = a.at(r, j) / piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Rational f = a.at(i, c);
            for (std::size_t j = 0; j <= cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!a.at(i, cols).is_zero()) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a.at(i, cols);
    return x;
}

ExactMatrix hermite_normal_form(const ExactMatrix& m) {
    require_integer(m, "hermite_normal_form");
    const std::size_t rows = m.rows(), cols = m.cols();
    Grid h = to_integer_grid(m);

    std::size_t c = 0;  // next column to receive a pivot
    for (std::size_t r = 0; r < rows && c < cols; ++r) {
        if (h[r][c] == 0) {
            std::size_t j = c + 1;
            while (j < cols && h[r][j] == 0) ++j;
            if (j == cols) continue;  // row has no pivot in the remaining columns
            for (std::size_t i = 0; i < rows; ++i) std::swap(h[i][c], h[i][j]);
        }
        // Fold every later nonzero in this row into column c via a unimodular
        // two-column transform built from the extended gcd.
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (h[r][j] == 0) continue;
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), h[r][c].get_mpz_t(), h[r][j].get_mpz_t());
            Int ac, bc;
            mpz_divexact(ac.get_mpz_t(), h[r][c].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(bc.get_mpz_t(), h[r][j].get_mpz_t(), g.get_mpz_t());
            for (std::size_t i = 0; i < rows; ++i) {
                Int ci = h[i][c], cj = h[i][j];
                h[i][c] = p * ci + q * cj;
                h[i][j] = ac * cj - bc * ci;
            }
        }
        if (h[r][c] < 0)
            for (std::size_t i = 0; i < rows; ++i) h[i][c] = -h[i][c];
        // Reduce earlier columns at the pivot row into [0, pivot).
        for (std::size_t j = 0; j < c; ++j) {
            Int f;
            mpz_fdiv_q(f.get_mpz_t(), h[r][j].get_mpz_t(), h[r][c].get_mpz_t());
            if (f == 0) continue;
            for (std::size_t i = 0; i < rows; ++i) h[i][j] -= f * h[i][c];
        }
        ++c;
    }

    ExactMatrix out(rows, c);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < c; ++j) out.at(i, j) = Rational(h[i][j]);
    return out;
}

bool in_integer_column_span(const ExactMatrix& basis_cols, const std::vector<Rational>& v) {
    auto x = solve_exact(basis_cols, v);
    if (!x) return false;
    for (const auto& xi : *x)
        if (!xi.is_integer()) return false;
    return true;
}

namespace {

struct SnfState {
    Grid a, u, v;
    std::size_t rows, cols;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
        for (std::size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
    }
    // rows (r, i) <- [[p, q], [x, y]] * rows (r, i); the 2x2 block has det +-1
    void row_transform(std::size_t r, std::size_t i, const Int& p, const Int& q, const Int& x, const Int& y) {
        for (std::size_t j = 0; j < cols; ++j) {
            Int tr = a[r][j], ti = a[i][j];
            a[r][j] = p * tr + q * ti;
            a[i][j] = x * tr + y * ti;
        }
        for (std::size_t j = 0; j < rows; ++j) {
            Int tr = u[r][j], ti = u[i][j];
            u[r][j] = p * tr + q * ti;
            u[i][j] = x * tr + y * ti;
        }
    }
    void col_transform(std::size_t c, std::size_t j, const Int& p, const Int& q, const Int& x, const Int& y) {
        for (std::size_t i = 0; i < rows; ++i) {
            Int tc = a[i][c], tj = a[i][j];
            a[i][c] = p * tc + q * tj;
            a[i][j] = x * tc + y * tj;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            Int tc = v[i][c], tj = v[i][j];
            v[i][c] = p * tc + q * tj;
            v[i][j] = x * tc + y * tj;
        }
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        for (std::size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const ExactMatrix& m) {
    require_integer(m, "smith_normal_form");
    SnfState s;
    s.rows = m.rows();
    s.cols = m.cols();
    s.a = to_integer_grid(m);
    s.u = to_integer_grid(ExactMatrix::identity(s.rows));
    s.v = to_integer_grid(ExactMatrix::identity(s.cols));

    const std::size_t steps = std::min(s.rows, s.cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // first nonzero in the trailing block, row-major
        std::size_t pi = s.rows, pj = s.cols;
        for (std::size_t i = t; i < s.rows && pi == s.rows; ++i)
            for (std::size_t j = t; j < s.cols; ++j)
                if (s.a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == s.rows) break;  // trailing block is zero
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        // When the pivot divides the target a plain elimination is used (it
        // leaves the pivot row and column untouched); otherwise a gcd
        // transform strictly shrinks |pivot|, which bounds the iteration.
        for (;;) {
            for (std::size_t i = t + 1; i < s.rows; ++i) {
                if (s.a[i][t] == 0) continue;
                if (s.a[i][t] % s.a[t][t] == 0) {
                    Int f;
                    mpz_divexact(f.get_mpz_t(), s.a[i][t].get_mpz_t(), s.a[t][t].get_mpz_t());
                    s.add_row(i, t, -f);
                } else {
                    Int g, p, q;
                    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), s.a[t][t].get_mpz_t(), s.a[i][t].get_mpz_t());
                    Int ar, br;
                    mpz_divexact(ar.get_mpz_t(), s.a[t][t].get_mpz_t(), g.get_mpz_t());
                    mpz_divexact(br.get_mpz_t(), s.a[i][t].get_mpz_t(), g.get_mpz_t());
                    s.row_transform(t, i, p, q, -br, ar);
                }
            }
            for (std::size_t j = t + 1; j < s.cols; ++j) {
                if (s.a[t][j] == 0) continue;
                if (s.a[t][j] % s.a[t][t] == 0) {
                    Int f;
                    mpz_divexact(f.get_mpz_t(), s.a[t][j].get_mpz_t(), s.a[t][t].get_mpz_t());
                    s.add_col(j, t, -f);
                } else {
                    Int g, p, q;
                    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), s.a[t][t].get_mpz_t(), s.a[t][j].get_mpz_t());
                    Int ac, bc;
                    mpz_divexact(ac.get_mpz_t(), s.a[t][t].get_mpz_t(), g.get_mpz_t());
                    mpz_divexact(bc.get_mpz_t(), s.a[t][j].get_mpz_t(), g.get_mpz_t());
                    s.col_transform(t, j, p, q, -bc, ac);
                }
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows && clean; ++i)
                if (s.a[i][t] != 0) clean = false;
            for (std::size_t j = t + 1; j < s.cols && clean; ++j)
                if (s.a[t][j] != 0) clean = false;
            if (!clean) continue;
            // divisibility: the pivot must divide every entry of the trailing block
            bool fixed = false;
            for (std::size_t i = t + 1; i < s.rows && !fixed; ++i)
                for (std::size_t j = t + 1; j < s.cols && !fixed; ++j)
                    if (s.a[i][j] % s.a[t][t] != 0) {
                        s.add_row(t, i, Int(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (s.a[t][t] < 0) s.negate_row(t);
    }

    SmithDecomposition out;
    out.u = from_integer_grid(s.u, s.rows);
    out.d = from_integer_grid(s.a, s.cols);
    out.v = from_integer_grid(s.v, s.cols);
    return out;
}

std::vector<Int> invariant_factors(const ExactMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    std::vector<Int> out;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n; ++i) {
        Int d = snf.d.at(i, i).numerator();
        if (d > 1) out.push_back(d);
    }
    return out;
}

std::vector<Int> cyclic_invariant_factors(const std::vector<Int>& orders) {
    ExactMatrix m(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) m.at(i, i) = Rational(orders[i]);
    return invariant_factors(m);
}

}  // namespace k3l
