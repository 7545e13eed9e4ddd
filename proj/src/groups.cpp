#include "pmf/groups.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace pmf {

namespace {

struct Tables {
    uint8_t mul[9][9], add[9][9], conj[9];
    Tables()
    {
        for (int x = 0; x < 9; ++x) {
            conj[x] = Res3::decode(x).conj().code();
            for (int y = 0; y < 9; ++y) {
                mul[x][y] = (Res3::decode(x) * Res3::decode(y)).code();
                add[x][y] = (Res3::decode(x) + Res3::decode(y)).code();
            }
        }
    }
};

const Tables& tab()
{
    static const Tables t;
    return t;
}

inline int code_at(uint64_t w, int k) { return int((w >> (4 * k)) & 0xF); }

}  // namespace

Mat4Res3 Mat4Res3::identity()
{
    Mat4Res3 m;
    for (int i = 0; i < 4; ++i)
        m.set(i, i, Res3(1, 0));
    return m;
}

Mat4Res3 Mat4Res3::reduce(const Mat4& a)
{
    Mat4Res3 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m.set(i, j, Res3::from(a(i, j)));
    return m;
}

Mat4Res3 operator*(const Mat4Res3& a, const Mat4Res3& b)
{
    const Tables& t = tab();
    uint64_t w = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k)
                s = t.add[s][t.mul[code_at(a.w, 4 * i + k)][code_at(b.w, 4 * k + j)]];
            w |= uint64_t(s) << (4 * (4 * i + j));
        }
    return Mat4Res3{w};
}

Mat4Res3 Mat4Res3::conj_transpose() const
{
    const Tables& t = tab();
    Mat4Res3 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.w |= uint64_t(t.conj[code_at(w, 4 * j + i)]) << (4 * (4 * i + j));
    return r;
}

namespace {

Mat4Res3 hyp_gram3()
{
    return Mat4Res3::reduce(gram(Model::Hyp));
}

}  // namespace

bool Mat4Res3::is_unitary() const
{
    static const Mat4Res3 h = hyp_gram3();
    return conj_transpose() * h * *this == h;
}

Mat4Res3 MatTraits::inv(const Mat4Res3& a)
{
    // H^{-1} = H for the hyperbolic Gram matrix
    static const Mat4Res3 h = hyp_gram3();
    return h * a.conj_transpose() * h;
}

int res3_point(const Res3Vec& v)
{
    int p = 0, m = 1;
    for (int i = 0; i < 4; ++i, m *= 9)
        p += v[i].code() * m;
    if (p == 0)
        throw std::invalid_argument("res3_point: zero vector");
    return p - 1;
}

Res3Vec res3_vector(int pt)
{
    int p = pt + 1;
    Res3Vec v;
    for (int i = 0; i < 4; ++i, p /= 9)
        v[i] = Res3::decode(p % 9);
    return v;
}

Res3Vec apply(const Mat4Res3& g, const Res3Vec& v)
{
    Res3Vec r;
    for (int i = 0; i < 4; ++i) {
        Res3 s;
        for (int k = 0; k < 4; ++k)
            s = s + g.get(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

int MatTraits::act(const Mat4Res3& a, int pt)
{
    const Tables& t = tab();
    int p = pt + 1;
    int v[4];
    for (int i = 0; i < 4; ++i, p /= 9)
        v[i] = p % 9;
    int out = 0, m = 1;
    for (int i = 0; i < 4; ++i, m *= 9) {
        int s = 0;
        for (int k = 0; k < 4; ++k)
            s = t.add[s][t.mul[code_at(a.w, 4 * i + k)][v[k]]];
        out += s * m;
    }
    return out - 1;
}

int res3_herm_norm_mod3(const Res3Vec& v)
{
    Vec4 x;
    for (int i = 0; i < 4; ++i)
        x[i] = EisInt(v[i].a, v[i].b);
    mpz_class n = herm_norm(Model::Hyp, x) % 3;
    return int((n.get_si() + 3) % 3);
}

bool res3_primitive(const Res3Vec& v)
{
    for (auto& x : v)
        if (reduce_sqrt3(x).v != 0)
            return true;
    return false;
}

MatF3 MatF3::identity()
{
    MatF3 m;
    for (int i = 0; i < 4; ++i)
        m.set(i, i, 1);
    return m;
}

MatF3 MatF3::reduce(const Mat4Res3& a)
{
    MatF3 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m.set(i, j, reduce_sqrt3(a.get(i, j)).v);
    return m;
}

MatF3 operator*(const MatF3& a, const MatF3& b)
{
    MatF3 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k)
                s += a.get(i, k) * b.get(k, j);
            r.set(i, j, s % 3);
        }
    return r;
}

int f3_point(const std::array<int, 4>& v)
{
    int p = 0, m = 1;
    for (int i = 0; i < 4; ++i, m *= 3)
        p += (((v[i] % 3) + 3) % 3) * m;
    if (p == 0)
        throw std::invalid_argument("f3_point: zero vector");
    return p - 1;
}

std::array<int, 4> f3_vector(int pt)
{
    int p = pt + 1;
    std::array<int, 4> v;
    for (int i = 0; i < 4; ++i, p /= 3)
        v[i] = p % 3;
    return v;
}

int f3_bilinear(const std::array<int, 4>& u, const std::array<int, 4>& v)
{
    int s = u[0] * v[1] + u[1] * v[0] - u[2] * v[2] - u[3] * v[3];
    return ((s % 3) + 3) % 3;
}

int f3_quad(const std::array<int, 4>& v) { return f3_bilinear(v, v); }

std::array<int, 4> reduce_sqrt3(const Vec4& v)
{
    std::array<int, 4> r;
    for (int i = 0; i < 4; ++i)
        r[i] = reduce_sqrt3(v[i]).v;
    return r;
}

PairedTraits::Elem PairedTraits::inv(const Elem& a)
{
    MatF3 h;
    h.set(0, 1, 1);
    h.set(1, 0, 1);
    h.set(2, 2, 2);
    h.set(3, 3, 2);
    MatF3 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t.set(i, j, a.red.get(j, i));
    return {MatTraits::inv(a.full), h * t * h};
}

int PairedTraits::act(const Elem& a, int pt)
{
    auto v = f3_vector(pt);
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) {
        int s = 0;
        for (int k = 0; k < 4; ++k)
            s += a.red.get(i, k) * v[k];
        r[i] = s % 3;
    }
    return f3_point(r);
}

int PermTraits::n = 0;

Perm Perm::identity(int n)
{
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i)
        p.img[i] = uint16_t(i);
    return p;
}

Perm PermTraits::mul(const Perm& a, const Perm& b)
{
    Perm r;
    r.img.resize(b.img.size());
    for (size_t i = 0; i < b.img.size(); ++i)
        r.img[i] = a.img[b.img[i]];
    return r;
}

Perm PermTraits::inv(const Perm& a)
{
    Perm r;
    r.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i)
        r.img[a.img[i]] = uint16_t(i);
    return r;
}

bool PermTraits::is_identity(const Perm& a)
{
    for (size_t i = 0; i < a.img.size(); ++i)
        if (a.img[i] != i)
            return false;
    return true;
}

uint64_t PermTraits::key(const Perm& a)
{
    uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto x : a.img) {
        h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ull;
    }
    return h;
}

std::vector<Mat4> group_generators_exact()
{
    const EisInt z = EisInt::zeta();
    std::vector<Vec4> vs = {
        {EisInt(0), EisInt(0), EisInt(1), EisInt(0)},
        {EisInt(0), EisInt(1), EisInt(1), EisInt(0)},
        {EisInt(-1), -z, EisInt(0), EisInt(0)},
        {EisInt(0), EisInt(1), EisInt(0), EisInt(1)},
        {EisInt(0), EisInt(0), EisInt(0), EisInt(1)},
    };
    std::vector<Mat4> out;
    for (auto& b : vs)
        out.push_back(reflection_matrix(Model::Hyp, b, CycRat(-z)));
    Mat4 m = Mat4::identity();
    for (int i = 0; i < 4; ++i)
        m(i, i) = EisInt(-1);
    out.push_back(m);
    return out;
}

Mat4 transvection(const EisInt& b1, const EisInt& b2, const EisInt& lambda)
{
    Mat4 m = Mat4::identity();
    m(0, 1) = lambda;
    m(0, 2) = b1.conj();
    m(0, 3) = b2.conj();
    m(2, 1) = b1;
    m(3, 1) = b2;
    return m;
}

std::vector<Mat4> stab_generators_exact()
{
    const EisInt z = EisInt::zeta(), one(1), zero(0), l = EisInt(1, 1);
    std::vector<Mat4> out;
    Mat4 t1 = Mat4::identity();
    t1(0, 1) = EisInt::sqrt_m3();
    out.push_back(t1);
    out.push_back(transvection(one, zero, l));
    out.push_back(transvection(z, zero, l));
    out.push_back(transvection(zero, one, l));
    out.push_back(transvection(zero, z, l));
    Mat4 sw = Mat4::identity();
    sw(2, 2) = zero;
    sw(3, 3) = zero;
    sw(2, 3) = one;
    sw(3, 2) = one;
    out.push_back(sw);
    Mat4 d = Mat4::identity();
    d(2, 2) = -z;
    out.push_back(d);
    return out;
}

MatGroup build_group(const std::vector<Mat4>& gens, uint64_t seed)
{
    std::vector<Mat4Res3> g3;
    for (auto& g : gens) {
        if (!is_unitary(Model::Hyp, g))
            throw std::invalid_argument("build_group: generator is not unitary");
        g3.push_back(Mat4Res3::reduce(g));
    }
    std::vector<int> pref;
    for (int i = 0; i < 4; ++i) {
        Res3Vec e{};
        e[i] = Res3(1, 0);
        pref.push_back(res3_point(e));
    }
    return MatGroup(kRes3Points, g3, pref, seed);
}

CuspCounts cusp_counts(const MatGroup& g, const MatGroup& stab)
{
    CuspCounts c;
    c.group_order = g.order();
    c.stab_order = stab.order();
    if (c.group_order % c.stab_order)
        throw std::logic_error("cusp_counts: stabilizer order does not divide group order");
    c.cusp_classes = c.group_order / c.stab_order;
    c.boundary_points = c.cusp_classes / units().size();
    Res3Vec e{Res3(1, 0), Res3(), Res3(), Res3()};
    int ep = res3_point(e);
    std::set<int> P;
    for (int p = 0; p < kRes3Points; ++p) {
        auto v = res3_vector(p);
        if (res3_primitive(v) && res3_herm_norm_mod3(v) == 0)
            P.insert(p);
    }
    c.primitive_isotropic = P.size();
    auto orb = g.orbit_of(ep);
    c.orbit_of_e = orb.size();
    c.orbit_is_P = std::set<int>(orb.begin(), orb.end()) == P;
    c.stab_prime_order = c.group_order / c.orbit_of_e;
    return c;
}

std::vector<std::array<int, 4>> f3_isotropic_points()
{
    std::vector<std::array<int, 4>> out;
    for (int p = 0; p < kF3Points; ++p) {
        auto v = f3_vector(p);
        std::array<int, 4> n;
        for (int i = 0; i < 4; ++i)
            n[i] = (3 - v[i]) % 3;
        if (f3_quad(v) == 0 && p < f3_point(n))
            out.push_back(v);
    }
    return out;
}

namespace {

int pm_class(int pt)
{
    auto v = f3_vector(pt);
    for (auto& x : v)
        x = (3 - x) % 3;
    return std::min(pt, f3_point(v));
}

Perm projective_perm(const MatF3& m, const std::vector<int>& classes)
{
    std::map<int, int> idx;
    for (size_t i = 0; i < classes.size(); ++i)
        idx[classes[i]] = int(i);
    Perm p;
    p.img.resize(classes.size());
    Paired e{Mat4Res3::identity(), m};
    for (size_t i = 0; i < classes.size(); ++i)
        p.img[i] = uint16_t(idx.at(pm_class(PairedTraits::act(e, classes[i]))));
    return p;
}

bool covers(const std::vector<int>& orbit, const std::set<int>& classes)
{
    std::set<int> got;
    for (int p : orbit)
        got.insert(pm_class(p));
    return got == classes;
}

}  // namespace

LevelSqrt3 level_sqrt3_analysis(const MatGroup& g, int samples, uint64_t seed)
{
    LevelSqrt3 r;
    std::set<int> iso, m1;
    for (int p = 0; p < kF3Points; ++p) {
        auto v = f3_vector(p);
        int q = f3_quad(v);
        if (q == 0) {
            ++r.isotropic_vectors;
            iso.insert(pm_class(p));
        } else if (q == 2) {
            ++r.norm_m1_vectors;
            m1.insert(pm_class(p));
        }
    }
    r.isotropic_points = int(iso.size());
    r.norm_m1_classes = int(m1.size());

    std::vector<Paired> pg;
    for (auto& s : g.generators())
        pg.push_back({s, MatF3::reduce(s)});
    Bsgs<PairedTraits> img(kF3Points, pg, {}, seed);
    r.image_order = img.order();
    r.kernel_index = g.order() / r.image_order;
    r.transitive_isotropic = covers(img.orbit_of(*iso.begin()), iso);
    r.transitive_norm_m1 = covers(img.orbit_of(*m1.begin()), m1);

    std::mt19937_64 rng(seed);
    std::vector<Mat4Res3> ker;
    for (int i = 0; i < samples; ++i) {
        Mat4Res3 x = g.random_element(rng);
        auto s = img.sift({x, MatF3::reduce(x)});
        if (s.second != img.levels().size() || !PairedTraits::is_identity(s.first))
            throw std::logic_error("level_sqrt3_analysis: element outside the image chain");
        ker.push_back(s.first.full);
    }
    r.kernel_samples = int(ker.size());
    r.kernel_exponent3 = true;
    r.kernel_abelian = true;
    for (size_t i = 0; i < ker.size(); ++i) {
        if (!MatTraits::is_identity(ker[i] * ker[i] * ker[i]))
            r.kernel_exponent3 = false;
        const Mat4Res3& y = ker[(i * 7 + 3) % ker.size()];
        if (!(ker[i] * y == y * ker[i]))
            r.kernel_abelian = false;
    }

    std::vector<int> classes;
    for (int p = 0; p < kF3Points; ++p)
        if (pm_class(p) == p)
            classes.push_back(p);
    PermTraits::n = int(classes.size());
    std::vector<Perm> pp;
    for (auto& s : pg)
        pp.push_back(projective_perm(s.red, classes));
    auto elems = enumerate_group<PermTraits>(pp);
    r.projective_order = elems.size();
    int central = 0;
    for (auto& x : elems) {
        bool c = true;
        for (auto& s : pp)
            if (!(PermTraits::mul(x, s) == PermTraits::mul(s, x))) {
                c = false;
                break;
            }
        central += c;
    }
    r.projective_center_trivial = central == 1;
    std::vector<Perm> comm;
    std::set<uint64_t> seen;
    for (auto& x : elems)
        for (auto& y : elems) {
            Perm c = PermTraits::mul(PermTraits::mul(PermTraits::inv(x), PermTraits::inv(y)), PermTraits::mul(x, y));
            if (seen.insert(PermTraits::key(c)).second)
                comm.push_back(c);
        }
    r.projective_derived_order = enumerate_group<PermTraits>(comm).size();
    return r;
}

std::vector<std::vector<int>> vanishing_pattern(const std::vector<Vec4>& mirrors,
                                                const std::vector<std::array<int, 3>>& triples)
{
    auto pts = f3_isotropic_points();
    std::vector<std::vector<int>> inc;
    for (auto& t : triples) {
        std::vector<int> row;
        for (auto& c : pts) {
            int v = 0;
            for (int i : t)
                if (f3_bilinear(reduce_sqrt3(mirrors[i - 1]), c) == 0)
                    v = 1;
            row.push_back(v);
        }
        inc.push_back(row);
    }
    return inc;
}

}  // namespace pmf
