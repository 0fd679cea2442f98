#pragma once
// Second-cohomology lattices of the reduced spaces and their blow-ups.
#include <string>
#include <vector>

#include "tfd/checked.hpp"

namespace tfd {

enum class BaseKind { P2, S2xS2, Hirzebruch };

struct BasisLabel {
    enum class Tag { u, x, y, E };
    Tag tag;
    int index = 0;  // only meaningful for E

    std::string str() const;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct CohClass {
    std::vector<i64> coeffs;

    CohClass() = default;
    explicit CohClass(std::size_t rank) : coeffs(rank, 0) {}
    CohClass(std::initializer_list<i64> c) : coeffs(c) {}
    explicit CohClass(std::vector<i64> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    i64& operator[](std::size_t i) { return coeffs[i]; }
    i64 operator[](std::size_t i) const { return coeffs[i]; }
    bool is_zero() const;

    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(i64 k, const CohClass& a);
    CohClass operator-() const { return (-1) * *this; }

    friend bool operator==(const CohClass&, const CohClass&) = default;
    friend auto operator<=>(const CohClass& a, const CohClass& b) { return a.coeffs <=> b.coeffs; }
};

using Matrix = std::vector<std::vector<i64>>;

struct SurfaceModel {
    BaseKind base = BaseKind::P2;
    int blowups = 0;
    std::vector<BasisLabel> basis;
    Matrix gram;
    CohClass c1;

    std::size_t rank() const { return basis.size(); }
    // index of the first E label (0 for P2 models, 2 for ruled ones)
    std::size_t first_e() const { return base == BaseKind::P2 ? 1 : 2; }
    CohClass zero() const { return CohClass(rank()); }
    CohClass unit(std::size_t i) const;
    std::string name() const;  // e.g. "E_{S^2} # 2 P2bar"
    friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
        return a.base == b.base && a.blowups == b.blowups;
    }
};

SurfaceModel make_model(BaseKind base, int blowups = 0);
SurfaceModel blow_up(const SurfaceModel& m);
// Embeds a class of m into blow_up^k(m) by appending zero coefficients.
CohClass pullback(const CohClass& c, std::size_t new_rank);

i64 pair(const SurfaceModel& m, const CohClass& a, const CohClass& b);
i64 symplectic_area(const SurfaceModel& m, const CohClass& omega, const CohClass& z);
i64 self_pair(const SurfaceModel& m, const CohClass& a);

i64 determinant(const Matrix& g);
// (positive, negative) counts of a nondegenerate symmetric form
std::pair<int, int> signature(const Matrix& g);
// Throws if the gram is not symmetric, unimodular, of signature (1, rank-1),
// or if c1 disagrees with the standard formula.
void validate_model(const SurfaceModel& m);

std::string format_class(const SurfaceModel& m, const CohClass& c);
CohClass parse_class(const SurfaceModel& m, const std::string& text);

}  // namespace tfd
