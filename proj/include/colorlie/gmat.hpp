#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colorlie/cyclotomic.hpp"
#include "colorlie/grading.hpp"

namespace colorlie::gmat {

using grading::GroupElement;

// Dense square matrix over Q(zeta) with an optional homogeneous grade label.
// Grades are stored, not inferred: composite constructions assign the label
// that defines the sector, since a block pattern alone does not determine it.
class GradedMatrix {
  public:
    GradedMatrix() : dim_(0) {}
    explicit GradedMatrix(long dim)
        : dim_(dim), entries_(static_cast<size_t>(dim * dim), Cyclotomic(0)) {}

    static GradedMatrix identity(long dim) {
        GradedMatrix m(dim);
        for (long i = 0; i < dim; ++i) m.set(i, i, Cyclotomic(1));
        return m;
    }

    long dim() const { return dim_; }
    const Cyclotomic& at(long r, long c) const {
        return entries_[static_cast<size_t>(r * dim_ + c)];
    }
    void set(long r, long c, Cyclotomic v) {
        entries_[static_cast<size_t>(r * dim_ + c)] = std::move(v);
    }

    const std::optional<GroupElement>& grade() const { return grade_; }
    GradedMatrix with_grade(GroupElement g) const {
        GradedMatrix m = *this;
        m.grade_ = std::move(g);
        return m;
    }
    GradedMatrix without_grade() const {
        GradedMatrix m = *this;
        m.grade_.reset();
        return m;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend GradedMatrix operator+(const GradedMatrix& a, const GradedMatrix& b) {
        if (a.dim_ != b.dim_) throw std::domain_error("matrix dimension mismatch in +");
        GradedMatrix r(a.dim_);
        for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
        // Mixed-sector sums carry no grade label.
        if (a.grade_ && b.grade_ && *a.grade_ == *b.grade_) r.grade_ = a.grade_;
        return r;
    }

    friend GradedMatrix operator-(const GradedMatrix& a, const GradedMatrix& b) {
        return a + (b * Cyclotomic(-1));
    }

    friend GradedMatrix operator*(const GradedMatrix& a, const Cyclotomic& s) {
        GradedMatrix r = a;
        for (auto& e : r.entries_) e = e * s;
        return r;
    }
    friend GradedMatrix operator*(const Cyclotomic& s, const GradedMatrix& a) { return a * s; }

    friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
        if (a.dim_ != b.dim_) throw std::domain_error("matrix dimension mismatch in *");
        GradedMatrix r(a.dim_);
        for (long i = 0; i < a.dim_; ++i)
            for (long k = 0; k < a.dim_; ++k) {
                const Cyclotomic& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (long j = 0; j < a.dim_; ++j) {
                    const Cyclotomic& bkj = b.at(k, j);
                    if (bkj.is_zero()) continue;
                    r.set(i, j, r.at(i, j) + aik * bkj);
                }
            }
        if (a.grade_ && b.grade_ && a.grade_->bits.size() == b.grade_->bits.size() &&
            a.grade_->trits.size() == b.grade_->trits.size())
            r.grade_ = *a.grade_ + *b.grade_;
        return r;
    }

    GradedMatrix dagger() const {
        GradedMatrix r(dim_);
        for (long i = 0; i < dim_; ++i)
            for (long k = 0; k < dim_; ++k) r.set(k, i, at(i, k).conjugate());
        if (grade_) r.grade_ = -*grade_;
        return r;
    }

    GradedMatrix power(long e) const {
        if (e < 0) throw std::domain_error("negative matrix power");
        GradedMatrix acc = identity(dim_);
        if (grade_) acc.grade_ = GroupElement::identity(static_cast<int>(grade_->bits.size()),
                                                        static_cast<int>(grade_->trits.size()));
        GradedMatrix base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const GradedMatrix& a, const GradedMatrix& b) { return !(a == b); }

    // Apply to the standard basis column c: the list of (row, value) nonzeros.
    std::vector<std::pair<long, Cyclotomic>> column(long c) const {
        std::vector<std::pair<long, Cyclotomic>> out;
        for (long r = 0; r < dim_; ++r)
            if (!at(r, c).is_zero()) out.emplace_back(r, at(r, c));
        return out;
    }

  private:
    long dim_;
    std::vector<Cyclotomic> entries_;
    std::optional<GroupElement> grade_;
};

// Kronecker product; the grade is the concatenation when both labels exist.
inline GradedMatrix tensor(const GradedMatrix& a, const GradedMatrix& b) {
    GradedMatrix r(a.dim() * b.dim());
    for (long i = 0; i < a.dim(); ++i)
        for (long k = 0; k < a.dim(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (long x = 0; x < b.dim(); ++x)
                for (long y = 0; y < b.dim(); ++y) {
                    if (b.at(x, y).is_zero()) continue;
                    r.set(i * b.dim() + x, k * b.dim() + y, a.at(i, k) * b.at(x, y));
                }
        }
    if (a.grade() && b.grade()) return r.with_grade(grading::concat(*a.grade(), *b.grade()));
    return r;
}

namespace detail {
inline GradedMatrix from_rows(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
    GradedMatrix m(static_cast<long>(rows.size()));
    long r = 0;
    for (const auto& row : rows) {
        long c = 0;
        for (const auto& v : row) m.set(r, c++, v);
        ++r;
    }
    return m;
}
inline GroupElement trit_grade(int t) { return GroupElement{{}, {t}}; }
inline GroupElement bit_grade(int b) { return GroupElement{{b}, {}}; }
}  // namespace detail

// The Z3-graded 3x3 building blocks and the Z2-graded 2x2 matrices.
// Names: N0, N0p, N0pp, N1, N2, Q+1..Q+3, Q-1..Q-3, I2, Y, X, beta, gamma.
inline GradedMatrix building_block(const std::string& name, const Cyclotomic& j) {
    using detail::bit_grade;
    using detail::from_rows;
    using detail::trit_grade;
    const Cyclotomic o(1), z(0);
    const Cyclotomic j2 = j * j;
    if (name == "N0") return GradedMatrix::identity(3).with_grade(trit_grade(0));
    if (name == "N0p")
        return from_rows({{o, z, z}, {z, j, z}, {z, z, j2}}).with_grade(trit_grade(0));
    if (name == "N0pp")
        return from_rows({{o, z, z}, {z, j2, z}, {z, z, j}}).with_grade(trit_grade(0));
    if (name == "N1")
        return from_rows({{z, o, z}, {z, z, o}, {o, z, z}}).with_grade(trit_grade(1));
    if (name == "N2")
        return from_rows({{z, z, o}, {o, z, z}, {z, o, z}}).with_grade(trit_grade(2));
    if (name == "Q+1")
        return from_rows({{z, o, z}, {z, z, j}, {j2, z, z}}).with_grade(trit_grade(1));
    if (name == "Q+2")
        return from_rows({{z, j, z}, {z, z, o}, {j2, z, z}}).with_grade(trit_grade(1));
    if (name == "Q+3")
        return from_rows({{z, o, z}, {z, z, o}, {o, z, z}}).with_grade(trit_grade(1));
    if (name == "Q-1")
        return from_rows({{z, z, j}, {o, z, z}, {z, j2, z}}).with_grade(trit_grade(2));
    if (name == "Q-2")
        return from_rows({{z, z, j}, {j2, z, z}, {z, o, z}}).with_grade(trit_grade(2));
    if (name == "Q-3")
        return from_rows({{z, z, o}, {o, z, z}, {z, o, z}}).with_grade(trit_grade(2));
    if (name == "I2") return GradedMatrix::identity(2).with_grade(bit_grade(0));
    if (name == "Y") return from_rows({{z, o}, {o, z}}).with_grade(bit_grade(1));
    if (name == "X") return from_rows({{o, z}, {z, -o}}).with_grade(bit_grade(0));
    if (name == "beta") return from_rows({{z, o}, {z, z}}).with_grade(bit_grade(1));
    if (name == "gamma") return from_rows({{z, z}, {o, z}}).with_grade(bit_grade(1));
    throw std::domain_error("unknown building block '" + name + "'");
}

inline GradedMatrix building_block(const std::string& name) {
    return building_block(name, root_of_unity(3, 1));
}

// Checks a 3x3 trit-graded (cyclic block) or 2x2 bit-graded (diagonal /
// antidiagonal) pattern. Composite matrices are not pattern-checked.
inline bool matches_grade_pattern(const GradedMatrix& m) {
    if (!m.grade()) return true;
    const auto& g = *m.grade();
    if (m.dim() == 3 && g.bits.empty() && g.trits.size() == 1) {
        int k = g.trits[0];
        for (long r = 0; r < 3; ++r)
            for (long c = 0; c < 3; ++c)
                if (!m.at(r, c).is_zero() && (c - r - k) % 3 != 0) return false;
        return true;
    }
    if (m.dim() == 2 && g.bits.size() == 1 && g.trits.empty()) {
        for (long r = 0; r < 2; ++r)
            for (long c = 0; c < 2; ++c)
                if (!m.at(r, c).is_zero() && (r + c) % 2 != g.bits[0]) return false;
        return true;
    }
    return true;
}

// Second tensor factor of C_02. The printed equation pairs N0'' with N0,
// but the Heisenberg brackets close on the central charge only with N2
// (which is also what C_01^dagger gives); "paired" is therefore the default.
enum class C02Convention { paired, printed };

// The 9x9 graded-commutative generators C_ij of the Z3xZ3 algebra,
// with the grade (i, j) assigned from the suffix.
inline GradedMatrix c_matrix(int i, int j, const Cyclotomic& jroot,
                             C02Convention conv = C02Convention::paired) {
    if (i < 0 || i > 2 || j < 0 || j > 2) throw std::domain_error("c_matrix needs trits");
    static const char* kFirst[3][3] = {
        {"N0", "N0p", "N0pp"}, {"Q+1", "Q+2", "Q+3"}, {"Q-1", "Q-3", "Q-2"}};
    static const char* kSecond[3] = {"N0", "N1", "N2"};
    std::string second = kSecond[j];
    if (i == 0 && j == 2 && conv == C02Convention::printed) second = "N0";
    GradedMatrix m = tensor(building_block(kFirst[i][j], jroot), building_block(second, jroot));
    return m.with_grade(GroupElement{{}, {i, j}});
}

inline GradedMatrix c_matrix(int i, int j, C02Convention conv = C02Convention::paired) {
    return c_matrix(i, j, root_of_unity(3, 1), conv);
}

}  // namespace colorlie::gmat
