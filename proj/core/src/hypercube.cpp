#include "hplus/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hplus/parallel.hpp"

namespace hplus {

CubeGraph::CubeGraph(int n) : n_(n) {
    if (n < 1 || n > 20) throw std::invalid_argument("CubeGraph: dimension must lie in 1..20");
    const std::size_t size = vertex_count();
    adjacency_ = Matrix<std::int64_t>(size, size, 0);
    for (std::size_t v = 0; v < size; ++v)
        for (int b = 0; b < n; ++b) adjacency_(v, v ^ (std::size_t{1} << b)) = 1;
    neighbors_.resize(size);
    for (std::size_t v = 0; v < size; ++v)
        for (std::size_t w = 0; w < size; ++w)
            if (adjacency_(v, w) != 0) neighbors_[v].push_back(static_cast<std::uint32_t>(w));
}

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

SpectrumReport spectrum_check(int n) {
    if (n < 1 || n > kMaxSpectrumDimension) {
        throw std::invalid_argument("spectrum_check: n must lie in 1.." + std::to_string(kMaxSpectrumDimension));
    }
    const CubeGraph cube(n);
    const std::size_t size = cube.vertex_count();

    SpectrumReport report;
    report.n = n;
    report.regular = true;
    report.bipartite = true;
    for (std::size_t v = 0; v < size; ++v) {
        report.regular = report.regular && static_cast<int>(cube.neighbors(v).size()) == n;
        for (auto w : cube.neighbors(v))
            report.bipartite = report.bipartite && (std::popcount(v) % 2) != (std::popcount(std::size_t{w}) % 2);
    }

    // v_i(j) = (-1)^{<i, j>}, lambda_i = sum_b (-1)^{i_b} = n - 2|i|.
    std::vector<char> holds(size, 0);
    parallel_for(size, [&](std::size_t i) {
        const std::int64_t lambda = n - 2 * std::popcount(i);
        auto component = [i](std::size_t j) -> std::int64_t { return std::popcount(i & j) % 2 ? -1 : 1; };
        bool ok = true;
        for (std::size_t x = 0; x < size && ok; ++x) {
            std::int64_t acc = 0;
            for (auto y : cube.neighbors(x)) acc += component(y);
            ok = acc == lambda * component(x);
        }
        holds[i] = ok;
    });
    report.vectors_checked = size;
    report.eigen_equations_hold = std::all_of(holds.begin(), holds.end(), [](char c) { return c != 0; });

    for (std::size_t i = 0; i < size; ++i) ++report.multiplicities[n - 2 * std::popcount(i)];
    report.multiplicities_binomial = static_cast<int>(report.multiplicities.size()) == n + 1;
    std::int64_t total = 0;
    for (int j = 0; j <= n; ++j) {
        auto it = report.multiplicities.find(n - 2 * j);
        const std::int64_t m = it == report.multiplicities.end() ? 0 : it->second;
        report.multiplicities_binomial = report.multiplicities_binomial && m == binomial(n, j);
        total += m;
    }
    report.multiplicities_binomial = report.multiplicities_binomial && total == static_cast<std::int64_t>(size);
    return report;
}

namespace {

using IntMatrix = Matrix<std::int64_t>;

RationalMatrix vectorize(const std::vector<IntMatrix>& mats) {
    RationalMatrix out(mats.size(), mats.front().rows() * mats.front().cols());
    for (std::size_t r = 0; r < mats.size(); ++r)
        for (std::size_t e = 0; e < mats[r].data().size(); ++e) out(r, e) = Rational(static_cast<long>(mats[r].data()[e]));
    return out;
}

}  // namespace

DistanceAlgebraReport distance_algebra_check(int n) {
    if (n < 2 || n > kMaxDistanceAlgebraDimension) {
        throw std::invalid_argument("distance_algebra_check: n must lie in 2.." +
                                    std::to_string(kMaxDistanceAlgebraDimension));
    }
    const CubeGraph cube(n);
    const std::size_t size = cube.vertex_count();

    // d_l joins vertices at squared Euclidean (= Hamming) distance l; d_0 is the identity.
    std::vector<IntMatrix> classes(static_cast<std::size_t>(n) + 1, IntMatrix(size, size, 0));
    for (std::size_t v = 0; v < size; ++v)
        for (std::size_t w = 0; w < size; ++w) classes[static_cast<std::size_t>(std::popcount(v ^ w))](v, w) = 1;

    DistanceAlgebraReport report;
    report.n = n;
    report.expansions_exact = true;
    report.coefficients_nonnegative = true;
    report.triangular = true;

    const IntMatrix& d1 = cube.adjacency();
    std::vector<IntMatrix> powers;
    powers.push_back(IntMatrix::identity(size));
    IntMatrix power = IntMatrix::identity(size);
    for (int m = 1; m <= n; ++m) {
        power = power * d1;
        powers.push_back(power);
        // The classes have disjoint supports, so the coefficient of d_l is the
        // entry of the power at any pair at distance l; all other pairs at that
        // distance must agree.
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
        for (int l = 0; l <= n; ++l) coeffs[static_cast<std::size_t>(l)] = power(0, (std::size_t{1} << l) - 1);
        IntMatrix expansion(size, size, 0);
        for (int l = 0; l <= n; ++l) expansion = expansion + coeffs[static_cast<std::size_t>(l)] * classes[static_cast<std::size_t>(l)];
        report.expansions_exact = report.expansions_exact && expansion == power;
        for (int l = 0; l <= n; ++l) {
            const auto c = coeffs[static_cast<std::size_t>(l)];
            report.coefficients_nonnegative = report.coefficients_nonnegative && c >= 0;
            if (l > m) report.triangular = report.triangular && c == 0;
        }
        report.triangular = report.triangular && coeffs[static_cast<std::size_t>(m)] > 0;
        report.coefficients.push_back(std::move(coeffs));
    }

    report.classes_commute = true;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const auto& x = classes[static_cast<std::size_t>(a)];
            const auto& y = classes[static_cast<std::size_t>(b)];
            report.classes_commute = report.classes_commute && x * y == y * x;
        }

    std::vector<IntMatrix> joint = powers;
    joint.insert(joint.end(), classes.begin(), classes.end());
    report.power_span_rank = rank(vectorize(powers));
    report.class_span_rank = rank(vectorize(classes));
    report.joint_rank = rank(vectorize(joint));
    report.spans_equal = report.power_span_rank == report.joint_rank && report.class_span_rank == report.joint_rank;

    // On the eigenspace of characters of weight j, d_l acts by the Krawtchouk
    // value K_l(j) = sum_i (-1)^i C(j, i) C(n-j, l-i).
    for (int j = 0; j <= n; ++j) {
        double value = 0.0;
        for (int l = 1; l <= n; ++l) {
            std::int64_t kraw = 0;
            for (int i = 0; i <= l; ++i) kraw += (i % 2 ? -1 : 1) * binomial(j, i) * binomial(n - j, l - i);
            value += std::sqrt(static_cast<double>(l)) * static_cast<double>(kraw);
        }
        report.distance_eigenvalues.push_back(value);
    }
    std::vector<double> sorted = report.distance_eigenvalues;
    std::sort(sorted.begin(), sorted.end());
    report.distance_eigenvalues_distinct = true;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        report.distance_eigenvalues_distinct = report.distance_eigenvalues_distinct && sorted[i] - sorted[i - 1] > 1e-6;
    return report;
}

}  // namespace hplus
