#include "tfd/lattice.hpp"

#include <cctype>
#include <stdexcept>

namespace tfd {

std::string BasisLabel::str() const {
    switch (tag) {
        case Tag::u: return "u";
        case Tag::x: return "x";
        case Tag::y: return "y";
        case Tag::E: return "E" + std::to_string(index);
    }
    return "?";
}

bool CohClass::is_zero() const {
    for (i64 v : coeffs)
        if (v != 0) return false;
    return true;
}

CohClass& CohClass::operator+=(const CohClass& o) {
    if (o.size() != size()) throw std::invalid_argument("invalid class: rank mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] = add(coeffs[i], o.coeffs[i]);
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    if (o.size() != size()) throw std::invalid_argument("invalid class: rank mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] = sub(coeffs[i], o.coeffs[i]);
    return *this;
}

CohClass operator*(i64 k, const CohClass& a) {
    CohClass r = a;
    for (auto& v : r.coeffs) v = mul(k, v);
    return r;
}

CohClass SurfaceModel::unit(std::size_t i) const {
    CohClass c(rank());
    c[i] = 1;
    return c;
}

std::string SurfaceModel::name() const {
    std::string s;
    switch (base) {
        case BaseKind::P2: s = "P2"; break;
        case BaseKind::S2xS2: s = "S^2 x S^2"; break;
        case BaseKind::Hirzebruch: s = "E_{S^2}"; break;
    }
    if (blowups == 1) s += " # P2bar";
    if (blowups > 1) s += " # " + std::to_string(blowups) + " P2bar";
    return s;
}

SurfaceModel make_model(BaseKind base, int blowups) {
    if (blowups < 0) throw std::invalid_argument("negative blow-up count");
    SurfaceModel m;
    m.base = base;
    using T = BasisLabel::Tag;
    switch (base) {
        case BaseKind::P2:
            m.basis = {{T::u}};
            m.gram = {{1}};
            m.c1 = CohClass{3};
            break;
        case BaseKind::S2xS2:
            m.basis = {{T::x}, {T::y}};
            m.gram = {{0, 1}, {1, 0}};
            m.c1 = CohClass{2, 2};
            break;
        case BaseKind::Hirzebruch:
            m.basis = {{T::x}, {T::y}};
            m.gram = {{0, 1}, {1, -1}};
            m.c1 = CohClass{3, 2};
            break;
    }
    for (int i = 0; i < blowups; ++i) m = blow_up(m);
    return m;
}

SurfaceModel blow_up(const SurfaceModel& m) {
    SurfaceModel r = m;
    std::size_t n = m.rank();
    r.blowups = m.blowups + 1;
    r.basis.push_back({BasisLabel::Tag::E, r.blowups});
    for (auto& row : r.gram) row.push_back(0);
    r.gram.emplace_back(n + 1, 0);
    r.gram[n][n] = -1;
    r.c1 = pullback(m.c1, n + 1);
    r.c1[n] = -1;
    return r;
}

CohClass pullback(const CohClass& c, std::size_t new_rank) {
    if (new_rank < c.size()) throw std::invalid_argument("pullback to smaller rank");
    CohClass r = c;
    r.coeffs.resize(new_rank, 0);
    return r;
}

i64 pair(const SurfaceModel& m, const CohClass& a, const CohClass& b) {
    std::size_t n = m.rank();
    if (a.size() != n || b.size() != n) throw std::invalid_argument("invalid class: rank mismatch");
    i64 s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (m.gram[i][j] != 0 && b[j] != 0) s = add(s, mul(a[i], mul(m.gram[i][j], b[j])));
    }
    return s;
}

i64 symplectic_area(const SurfaceModel& m, const CohClass& omega, const CohClass& z) {
    return pair(m, omega, z);
}

i64 self_pair(const SurfaceModel& m, const CohClass& a) { return pair(m, a, a); }

i64 determinant(const Matrix& g) {
    // Bareiss fraction-free elimination
    std::size_t n = g.size();
    if (n == 0) return 1;
    Matrix a = g;
    i64 sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])) / prev;
        prev = a[k][k];
    }
    return mul(sign, a[n - 1][n - 1]);
}

std::pair<int, int> signature(const Matrix& g) {
    // Symmetric Gaussian elimination over the rationals (congruence diagonalization).
    std::size_t n = g.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(g[i][j]);
    int pos = 0, neg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].sign() == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][p].sign() == 0) ++p;
            if (p < n) {
                std::swap(a[k], a[p]);
                for (auto& row : a) std::swap(row[k], row[p]);
            } else {
                // all remaining diagonal entries vanish: add a row/column with a[k][q] != 0
                std::size_t q = k + 1;
                while (q < n && a[k][q].sign() == 0) ++q;
                if (q == n) throw std::domain_error("degenerate form");
                for (std::size_t j = 0; j < n; ++j) a[k][j] = a[k][j] + a[q][j];
                for (std::size_t i = 0; i < n; ++i) a[i][k] = a[i][k] + a[i][q];
            }
        }
        Rational piv = a[k][k];
        (piv.sign() > 0 ? pos : neg)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / piv;
            if (f.sign() == 0) continue;
            for (std::size_t j = k; j < n; ++j) a[i][j] = a[i][j] - f * a[k][j];
        }
        for (std::size_t j = k + 1; j < n; ++j) a[k][j] = Rational(0);
        for (std::size_t i = k + 1; i < n; ++i) a[i][k] = Rational(0);
    }
    return {pos, neg};
}

void validate_model(const SurfaceModel& m) {
    std::size_t n = m.rank();
    if (m.gram.size() != n || m.c1.size() != n) throw std::logic_error("model shape mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (m.gram[i].size() != n) throw std::logic_error("gram not square");
        for (std::size_t j = 0; j < n; ++j)
            if (m.gram[i][j] != m.gram[j][i]) throw std::logic_error("gram not symmetric");
    }
    i64 d = determinant(m.gram);
    if (d != 1 && d != -1) throw std::logic_error("gram not unimodular");
    auto [p, q] = signature(m.gram);
    if (p != 1 || q != static_cast<int>(n) - 1) throw std::logic_error("gram signature is not (1, rank-1)");
    SurfaceModel ref = make_model(m.base, m.blowups);
    if (ref.gram != m.gram || ref.c1 != m.c1) throw std::logic_error("model differs from standard form");
    i64 base_c1sq = m.base == BaseKind::P2 ? 9 : 8;
    if (self_pair(m, m.c1) != base_c1sq - m.blowups) throw std::logic_error("c1^2 mismatch");
}

std::string format_class(const SurfaceModel& m, const CohClass& c) {
    if (c.size() != m.rank()) throw std::invalid_argument("invalid class: rank mismatch");
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        i64 v = c[i];
        if (v == 0) continue;
        if (v < 0) s += "-";
        else if (!s.empty()) s += "+";
        i64 a = v < 0 ? -v : v;
        if (a != 1) s += std::to_string(a);
        s += m.basis[i].str();
    }
    return s.empty() ? "0" : s;
}

CohClass parse_class(const SurfaceModel& m, const std::string& text) {
    CohClass c(m.rank());
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    if (text.substr(i) == "0") return c;
    bool any = false;
    while (i < text.size()) {
        i64 sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (any) {
            throw std::invalid_argument("bad class text: " + text);
        }
        i64 coef = 1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coef = add(mul(coef, 10), text[i++] - '0');
        }
        if (i >= text.size()) throw std::invalid_argument("bad class text: " + text);
        std::string label(1, text[i++]);
        if (label == "E")
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) label += text[i++];
        std::size_t k = 0;
        while (k < m.rank() && m.basis[k].str() != label) ++k;
        if (k == m.rank()) throw std::invalid_argument("unknown basis label '" + label + "' in " + text);
        c[k] = add(c[k], mul(sign, coef));
        any = true;
        skip();
    }
    return c;
}

}  // namespace tfd
