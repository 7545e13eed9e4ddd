#pragma once

#include "pmf/eis.hpp"

#include <array>
#include <optional>
#include <vector>

namespace pmf {

enum class Model { Diag, Hyp };

using Vec4 = std::array<EisInt, 4>;

struct Mat4 {
    std::array<EisInt, 16> m;

    EisInt& operator()(int i, int j) { return m[4 * i + j]; }
    const EisInt& operator()(int i, int j) const { return m[4 * i + j]; }

    static Mat4 identity();
    static Mat4 from_rows(const std::array<std::array<EisInt, 4>, 4>& rows);
    static Mat4 from_columns(const std::array<Vec4, 4>& cols);

    Mat4 conj_transpose() const;
    Vec4 column(int j) const { return {m[j], m[4 + j], m[8 + j], m[12 + j]}; }
    EisInt det() const;
    // inverse over E, throws unless det is a unit
    Mat4 inverse() const;

    friend Mat4 operator*(const Mat4& x, const Mat4& y);
    friend Vec4 operator*(const Mat4& x, const Vec4& v);
    friend bool operator==(const Mat4& x, const Mat4& y) { return x.m == y.m; }
};

Mat4 gram(Model model);

EisInt herm(Model model, const Vec4& x, const Vec4& y);
inline mpz_class herm_norm(Model model, const Vec4& x) { return herm(model, x, x).a(); }

bool is_unitary(Model model, const Mat4& g);

// a -> a - (1-eta) <b,a>/<b,b> b; requires <b,b> = -1 and eta a sixth root of unity
Mat4 reflection_matrix(Model model, const Vec4& b, const CycRat& eta);

// multiplicative order of a matrix that is known to have finite order (<= cap)
int matrix_order(const Mat4& g, int cap = 1000);

// U with conj(U)^T H_diag U = H_hyp and unit determinant; vectors map hyp -> diag via U
Mat4 find_isometry();

// transport g from the diagonal model to the hyperbolic one: U^{-1} g U
Mat4 diag_to_hyp(const Mat4& g);

// trace pairing tr(conj(a)^T H b) mod 3, i.e. 2*reduction of <a,b> mod sqrt(-3)
int trace_pairing_mod3(Model model, const Vec4& a, const Vec4& b);

// finite quadratic form on M'/M = F_3^4, element index = x0 + 3x1 + 9x2 + 27x3
struct DiscForm {
    static constexpr int size = 81;
    std::array<int, 81> q3{};                 // qbar = q3/3 mod 1
    std::array<std::array<int, 81>, 81> b3{};  // bbar = b3/3 mod 1

    static int neg(int alpha);
    static std::array<int, 4> digits(int alpha);
    static int index(const std::array<int, 4>& d);

    int pm_class_count() const;
};

DiscForm disc_form_build();

struct ObstructionSpace {
    int support_q3 = 0;                 // C_alpha may be nonzero only when q3(alpha) = support_q3
    std::vector<std::vector<CycRat>> basis;  // each of length 81

    bool satisfies_conditions(const DiscForm& d, const std::vector<CycRat>& c) const;
    // C_alpha + C_{-alpha} vanishes for every basis vector, summed over the given classes
    bool annihilates(const std::vector<int>& alphas) const;
};

// support_q3 = 2 selects classes of norm -1/3 vectors
ObstructionSpace obstruction_space_solve(const DiscForm& d, int support_q3 = 2);

// unordered triples {i,j,k} (1-based) of pairwise trace-orthogonal vectors, sorted
std::vector<std::array<int, 3>> orthogonal_triples(Model model, const std::vector<Vec4>& mirrors);

// triples of pairwise orthogonal +-classes whose q3 equals the given value,
// each class named by its smaller element index
std::vector<std::array<int, 3>> disc_orthogonal_triples(const DiscForm& d, int q3);

}  // namespace pmf
