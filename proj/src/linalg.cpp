#include "surfrig/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace surfrig {

/*
 * Fraction-free elimination keeps every intermediate entry an exact integer
 * (each is a minor of the starting matrix), so the only divisions performed
 * are exact. Pivots are chosen by smallest absolute value within the column
 * to slow coefficient growth; row swaps do not affect rank or nullspace.
 */
RankResult rank_exact(const QMatrix& m) {
    const int rows = m.rows, cols = m.cols;

    // Clear denominators row by row and strip row content; both are row
    // scalings, which preserve rank and nullspace.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < cols; ++j) {
            const mpz_class& den = m.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        mpz_class content = 0;
        for (int j = 0; j < cols; ++j) {
            Rat scaled = m.at(i, j) * Rat(lcm);
            a[i][j] = scaled.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a[i][j].get_mpz_t());
        }
        if (content > 1)
            for (int j = 0; j < cols; ++j) mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                                                        content.get_mpz_t());
    }

    std::vector<int> pivot_cols;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (pivot < 0 || mpz_cmpabs(a[i][c].get_mpz_t(), a[pivot][c].get_mpz_t()) < 0) pivot = i;
        }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }

    RankResult result;
    result.rank = r;

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (int i = r - 1; i >= 0; --i) {
            const int pc = pivot_cols[i];
            Rat sum = 0;
            for (int j = pc + 1; j < cols; ++j)
                if (x[j] != 0) sum += Rat(a[i][j]) * x[j];
            x[pc] = -sum / Rat(a[i][pc]);
        }
        // Scale to a primitive integer vector with positive leading entry.
        mpz_class lcm = 1;
        for (const Rat& q : x)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_class content = 0;
        std::vector<mpz_class> scaled(cols);
        for (int j = 0; j < cols; ++j) {
            Rat q = x[j] * Rat(lcm);
            scaled[j] = q.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled[j].get_mpz_t());
        }
        int lead = 0;
        while (lead < cols && scaled[lead] == 0) ++lead;
        bool flip = lead < cols && scaled[lead] < 0;
        for (int j = 0; j < cols; ++j) {
            if (content > 1) mpz_divexact(scaled[j].get_mpz_t(), scaled[j].get_mpz_t(), content.get_mpz_t());
            if (flip) scaled[j] = -scaled[j];
            x[j] = Rat(scaled[j]);
        }
        result.nullspace.push_back(std::move(x));
    }
    return result;
}

int rank_float(const std::vector<double>& data, int rows, int cols, double tol_factor) {
    if (static_cast<int>(data.size()) != rows * cols)
        throw std::invalid_argument("rank_float: data size mismatch");
    for (double v : data)
        if (!std::isfinite(v)) throw std::invalid_argument("rank_float: non-finite entry");
    if (rows == 0 || cols == 0) return 0;
    Eigen::MatrixXd a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = data[static_cast<size_t>(i) * cols + j];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double tol = tol_factor * std::max(rows, cols) *
                       std::numeric_limits<double>::epsilon() * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++rank;
    return rank;
}

std::vector<Rat> matvec(const QMatrix& m, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<Rat> out(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i) {
        Rat sum = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && v[j] != 0) sum += m.at(i, j) * v[j];
        out[i] = sum;
    }
    return out;
}

} // namespace surfrig
