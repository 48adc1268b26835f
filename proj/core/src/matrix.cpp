#include "hplus/matrix.hpp"

#include <numeric>
#include <utility>

namespace hplus {

namespace {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators. Returns the integer rows and the scale factors.
std::pair<IntegerMatrix, std::vector<mpz_class>> clear_denominators(const RationalMatrix& m) {
    IntegerMatrix rows(m.rows(), std::vector<mpz_class>(m.cols()));
    std::vector<mpz_class> scale(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).value().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rows[i][j] = m(i, j).value().get_num() * (l / m(i, j).value().get_den());
        }
        scale[i] = l;
    }
    return {std::move(rows), std::move(scale)};
}

void divexact(mpz_class& x, const mpz_class& d) { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t()); }

}  // namespace

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return RationalMatrix();

    auto [b, scale] = clear_denominators(m);
    // Augment with the identity: [B | I].
    for (std::size_t i = 0; i < n; ++i) {
        b[i].resize(2 * n, 0);
        b[i][n + i] = 1;
    }

    mpz_class previous = 1;
    mpz_class factor;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && b[pivot][k] == 0) ++pivot;
        if (pivot == n) throw SingularMatrixError(k, n);
        std::swap(b[pivot], b[k]);

        const mpz_class& p = b[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            factor = b[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) {
                b[i][j] = p * b[i][j] - factor * b[k][j];
                divexact(b[i][j], previous);
            }
        }
        previous = p;
    }

    // Left block is now det(B)·I up to row sign; right block is the matching multiple of B^{-1}.
    // A^{-1} = B^{-1} D where D = diag(scale).
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = Rational(b[i][n + j] * scale[j], b[i][i]);
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    auto [b, scale] = clear_denominators(m);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    mpz_class previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && b[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(b[pivot], b[r]);
        const mpz_class& p = b[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class factor = b[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                b[i][j] = p * b[i][j] - factor * b[r][j];
                divexact(b[i][j], previous);
            }
        }
        previous = p;
        ++r;
    }
    return r;
}

Rational determinant(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    auto [b, scale] = clear_denominators(m);
    mpz_class previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && b[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(b[pivot], b[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_class factor = b[i][k];
            for (std::size_t j = k; j < n; ++j) {
                b[i][j] = b[k][k] * b[i][j] - factor * b[k][j];
                divexact(b[i][j], previous);
            }
        }
        previous = b[k][k];
    }
    mpz_class total_scale = 1;
    for (const auto& s : scale) total_scale *= s;
    return Rational(sign * b[n - 1][n - 1], total_scale);
}

namespace {

bool extend_permutation(const RationalMatrix& a, const RationalMatrix& b, std::vector<std::size_t>& perm,
                        std::vector<bool>& used) {
    const std::size_t i = perm.size();
    if (i == a.rows()) return true;
    for (std::size_t c = 0; c < b.rows(); ++c) {
        if (used[c] || a(i, i) != b(c, c)) continue;
        bool consistent = true;
        for (std::size_t j = 0; j < i && consistent; ++j) {
            consistent = a(i, j) == b(c, perm[j]) && a(j, i) == b(perm[j], c);
        }
        if (!consistent) continue;
        perm.push_back(c);
        used[c] = true;
        if (extend_permutation(a, b, perm, used)) return true;
        used[c] = false;
        perm.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_simultaneous_permutation(const RationalMatrix& a,
                                                                     const RationalMatrix& b) {
    if (!a.square() || !b.square() || a.rows() != b.rows()) return std::nullopt;
    std::vector<std::size_t> perm;
    std::vector<bool> used(b.rows(), false);
    perm.reserve(a.rows());
    if (!extend_permutation(a, b, perm, used)) return std::nullopt;
    return perm;
}

}  // namespace hplus
