#include "crl_atlas/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace crl_atlas {

namespace {

struct ScaledRows {
    std::vector<std::vector<Integer>> rows;
    Integer scale_product = 1;  // product of the per-row multipliers
};

// Multiplies every row by the lcm of its denominators.
ScaledRows integer_rows(const RationalMatrix& m) {
    ScaledRows out;
    out.rows.resize(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
        out.scale_product *= l;
    }
    return out;
}

struct Elimination {
    IntegerEchelon echelon;
    int swap_sign = 1;
};

Elimination eliminate(std::vector<std::vector<Integer>> a, std::size_t cols) {
    Elimination out;
    const std::size_t nrows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c] == 0) ++p;
        if (p == nrows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            out.swap_sign = -out.swap_sign;
        }
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.echelon.pivot_cols.push_back(c);
        ++r;
    }
    out.echelon.rows = std::move(a);
    out.echelon.cols = cols;
    return out;
}

}  // namespace

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntegerEchelon bareiss_echelon(const RationalMatrix& m) {
    return eliminate(integer_rows(m).rows, m.cols()).echelon;
}

std::size_t matrix_rank(const RationalMatrix& m) { return bareiss_echelon(m).rank(); }

std::vector<Rational> make_primitive(std::vector<Rational> v) {
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& x : v) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    if (num_gcd == 0) return v;
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    for (auto& x : v) x *= factor;
    return v;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    const IntegerEchelon e = bareiss_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(n);
        x[free] = 1;
        for (std::size_t k = e.rank(); k-- > 0;) {
            const std::size_t pc = e.pivot_cols[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < n; ++j)
                if (x[j] != 0) s += Rational(e.rows[k][j]) * x[j];
            x[pc] = -s / Rational(e.rows[k][pc]);
        }
        basis.push_back(make_primitive(std::move(x)));
    }
    return basis;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    ScaledRows scaled = integer_rows(m);
    Elimination el = eliminate(std::move(scaled.rows), n);
    if (el.echelon.rank() < n) return 0;
    Rational det(el.echelon.rows[n - 1][n - 1] * el.swap_sign, scaled.scale_product);
    det.canonicalize();
    return det;
}

}  // namespace crl_atlas
