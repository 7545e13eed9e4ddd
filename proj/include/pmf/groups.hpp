#pragma once

#include "pmf/bsgs.hpp"
#include "pmf/eis.hpp"
#include "pmf/lattice.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace pmf {

// 4x4 matrix over E/3E, 16 entries of 4 bits (code a+3b)
struct Mat4Res3 {
    uint64_t w = 0;

    Res3 get(int i, int j) const { return Res3::decode(int((w >> (4 * (4 * i + j))) & 0xF)); }
    void set(int i, int j, Res3 x)
    {
        int sh = 4 * (4 * i + j);
        w = (w & ~(uint64_t(0xF) << sh)) | (uint64_t(x.code()) << sh);
    }

    static Mat4Res3 identity();
    static Mat4Res3 reduce(const Mat4& m);
    Mat4Res3 conj_transpose() const;
    bool is_unitary() const;  // hyperbolic Gram matrix
    friend Mat4Res3 operator*(const Mat4Res3& a, const Mat4Res3& b);
    friend bool operator==(const Mat4Res3& a, const Mat4Res3& b) { return a.w == b.w; }
};

// 4x4 matrix over F_3, 2 bits per entry
struct MatF3 {
    uint32_t w = 0;
    int get(int i, int j) const { return int((w >> (2 * (4 * i + j))) & 3u); }
    void set(int i, int j, int x)
    {
        int sh = 2 * (4 * i + j);
        w = (w & ~(3u << sh)) | (uint32_t(((x % 3) + 3) % 3) << sh);
    }
    static MatF3 identity();
    static MatF3 reduce(const Mat4Res3& m);
    friend MatF3 operator*(const MatF3& a, const MatF3& b);
    friend bool operator==(const MatF3& a, const MatF3& b) { return a.w == b.w; }
};

using Res3Vec = std::array<Res3, 4>;

// points of (E/3E)^4 minus zero are 0..6559
constexpr int kRes3Points = 6560;
int res3_point(const Res3Vec& v);
Res3Vec res3_vector(int pt);
Res3Vec apply(const Mat4Res3& g, const Res3Vec& v);
int res3_herm_norm_mod3(const Res3Vec& v);   // <v,v> mod 3 in the hyperbolic model
bool res3_primitive(const Res3Vec& v);

// points of F_3^4 minus zero are 0..79
constexpr int kF3Points = 80;
int f3_point(const std::array<int, 4>& v);
std::array<int, 4> f3_vector(int pt);
int f3_quad(const std::array<int, 4>& v);     // 2x1x2 - x3^2 - x4^2 mod 3
int f3_bilinear(const std::array<int, 4>& u, const std::array<int, 4>& v);
std::array<int, 4> reduce_sqrt3(const Vec4& v);

struct MatTraits {
    using Elem = Mat4Res3;
    static Elem identity() { return Mat4Res3::identity(); }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem inv(const Elem& a);
    static int act(const Elem& a, int pt);
    static bool is_identity(const Elem& a) { return a.w == identity().w; }
    static uint64_t key(const Elem& a) { return a.w; }
};

// an element of the big group together with its image mod sqrt(-3); acts through the image
struct Paired {
    Mat4Res3 full;
    MatF3 red;
};

struct PairedTraits {
    using Elem = Paired;
    static Elem identity() { return {Mat4Res3::identity(), MatF3::identity()}; }
    static Elem mul(const Elem& a, const Elem& b) { return {a.full * b.full, a.red * b.red}; }
    static Elem inv(const Elem& a);
    static int act(const Elem& a, int pt);
    static bool is_identity(const Elem& a) { return a.red.w == MatF3::identity().w; }
    static uint64_t key(const Elem& a) { return a.full.w; }
};

// permutation of a small point set
struct Perm {
    std::vector<uint16_t> img;
    static Perm identity(int n);
    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
};

struct PermTraits {
    using Elem = Perm;
    static int n;  // degree used by identity()
    static Elem identity() { return Perm::identity(n); }
    static Elem mul(const Elem& a, const Elem& b);
    static Elem inv(const Elem& a);
    static int act(const Elem& a, int pt) { return a.img[pt]; }
    static bool is_identity(const Elem& a);
    static uint64_t key(const Elem& a);
};

using MatGroup = Bsgs<MatTraits>;

// the five hexflections of the diagonal model transported to the hyperbolic model, and -1
std::vector<Mat4> group_generators_exact();
// generators of the cusp stabilizer in the hyperbolic model
std::vector<Mat4> stab_generators_exact();
// a -> (a1 + l a2 + conj(b1) a3 + conj(b2) a4, a2, a3 + b1 a2, a4 + b2 a2)
Mat4 transvection(const EisInt& b1, const EisInt& b2, const EisInt& lambda);

MatGroup build_group(const std::vector<Mat4>& gens, uint64_t seed = 1);

struct CuspCounts {
    uint64_t group_order = 0;
    uint64_t stab_order = 0;
    uint64_t stab_prime_order = 0;   // stabilizer of e mod 3
    uint64_t cusp_classes = 0;
    uint64_t boundary_points = 0;
    uint64_t primitive_isotropic = 0;
    uint64_t orbit_of_e = 0;
    bool orbit_is_P = false;
};

CuspCounts cusp_counts(const MatGroup& g, const MatGroup& stab);

struct LevelSqrt3 {
    int isotropic_vectors = 0, isotropic_points = 0;
    int norm_m1_vectors = 0, norm_m1_classes = 0;
    bool transitive_isotropic = false, transitive_norm_m1 = false;
    uint64_t image_order = 0;
    uint64_t kernel_index = 0;          // |G| / |image|
    int kernel_samples = 0;
    bool kernel_exponent3 = false, kernel_abelian = false;
    uint64_t projective_order = 0;      // image modulo +-1
    bool projective_center_trivial = false;
    uint64_t projective_derived_order = 0;
};

LevelSqrt3 level_sqrt3_analysis(const MatGroup& g, int samples = 1000, uint64_t seed = 1);

// +-classes of isotropic vectors of F_3^4, each given by one representative
std::vector<std::array<int, 4>> f3_isotropic_points();
// incidence[i][c] = B_i vanishes at boundary point c
std::vector<std::vector<int>> vanishing_pattern(const std::vector<Vec4>& mirrors,
                                                const std::vector<std::array<int, 3>>& triples);

}  // namespace pmf
