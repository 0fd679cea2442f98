#include "tfd/exceptional.hpp"

#include <algorithm>
#include <stdexcept>

#include "tfd/errors.hpp"

namespace tfd {

namespace {

std::vector<i64> solve_unimodular(const Matrix& a, const std::vector<i64>& rhs) {
    // Exact Gaussian elimination over Q; result must be integral.
    std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
        m[i][n] = Rational(rhs[i]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].sign() == 0) ++p;
        if (p == n) throw std::domain_error("singular basis change");
        std::swap(m[k], m[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].sign() == 0) continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j <= n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    std::vector<i64> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational v = m[i][n] / m[i][i];
        if (!v.is_integer()) throw std::domain_error("non-integral preimage");
        x[i] = v.num;
    }
    return x;
}

}  // namespace

CohClass BasisChange::apply(const CohClass& c) const {
    if (c.size() != source.rank()) throw std::invalid_argument("invalid class: rank mismatch");
    CohClass r(target.rank());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = add(r[i], mul(matrix[i][j], c[j]));
    return r;
}

CohClass BasisChange::apply_inverse(const CohClass& c) const {
    return CohClass(solve_unimodular(matrix, c.coeffs));
}

std::vector<CohClass> exceptional_classes(const SurfaceModel& m) {
    if (m.base != BaseKind::P2) {
        BasisChange b = identify_ruled_basis(m);
        std::vector<CohClass> out;
        for (const auto& e : exceptional_classes(b.source)) out.push_back(b.apply(e));
        std::sort(out.begin(), out.end());
        return out;
    }
    int k = m.blowups;
    if (k > 8) throw TfdError("unsupported-rank", "X_k with k > 8 has infinitely many exceptional classes");
    // E = d u - sum m_i E_i. Cauchy-Schwarz on the negative definite part gives
    // (3d-1)^2 <= k (d^2+1), so d <= 6 for k <= 8; and m_i^2 <= d^2 + 1 - (other terms).
    std::vector<CohClass> out;
    std::vector<i64> mi(k, 0);
    for (i64 d = 0; d <= 6; ++d) {
        std::fill(mi.begin(), mi.end(), -1);
        while (true) {
            i64 s = 0, sq = 0;
            for (i64 v : mi) { s += v; sq += v * v; }
            if (3 * d - s == 1 && d * d - sq == -1) {
                CohClass c(m.rank());
                c[0] = d;
                // coefficient on E_i is -m_i
                for (int i = 0; i < k; ++i) c[1 + i] = -mi[i];
                out.push_back(c);
            }
            int i = 0;
            while (i < k && mi[i] == 3) mi[i++] = -1;
            if (i == k) break;
            ++mi[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BasisChange identity_change(const SurfaceModel& m) {
    BasisChange b{m, m, Matrix(m.rank(), std::vector<i64>(m.rank(), 0))};
    for (std::size_t i = 0; i < m.rank(); ++i) b.matrix[i][i] = 1;
    return b;
}

BasisChange identify_ruled_basis(const SurfaceModel& m) {
    if (m.base == BaseKind::P2) return identity_change(m);
    if (m.base == BaseKind::S2xS2 && m.blowups == 0)
        throw std::domain_error("S^2 x S^2 is not a blow-up of P2");
    std::size_t n = m.rank();
    BasisChange b{make_model(BaseKind::P2, static_cast<int>(n) - 1), m, Matrix(n, std::vector<i64>(n, 0))};
    auto set_col = [&](std::size_t col, const CohClass& img) {
        for (std::size_t i = 0; i < n; ++i) b.matrix[i][col] = img[i];
    };
    const std::size_t X = 0, Y = 1;
    if (m.base == BaseKind::Hirzebruch) {
        // u -> x+y, E1 -> y, E_{i+1} -> E_i
        CohClass u = m.unit(X) + m.unit(Y);
        set_col(0, u);
        set_col(1, m.unit(Y));
        for (std::size_t j = 2; j < n; ++j) set_col(j, m.unit(j));
    } else {
        // u -> x+y-E1', E1 -> x-E1', E2 -> y-E1', E_{i+1} -> E_i' for i >= 2
        CohClass e1 = m.unit(2);
        set_col(0, m.unit(X) + m.unit(Y) - e1);
        set_col(1, m.unit(X) - e1);
        set_col(2, m.unit(Y) - e1);
        for (std::size_t j = 3; j < n; ++j) set_col(j, m.unit(j));
    }
    verify_isometry(b);
    return b;
}

void verify_isometry(const BasisChange& b) {
    std::size_t n = b.source.rank();
    if (b.target.rank() != n) throw std::logic_error("basis change between different ranks");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (pair(b.target, b.apply(b.source.unit(i)), b.apply(b.source.unit(j))) != b.source.gram[i][j])
                throw std::logic_error("basis change is not an isometry");
    if (b.apply(b.source.c1) != b.target.c1) throw std::logic_error("basis change does not preserve c1");
}

}  // namespace tfd
