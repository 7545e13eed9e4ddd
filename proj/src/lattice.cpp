#include "pmf/lattice.hpp"
#include "pmf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pmf {

Mat4 Mat4::identity()
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        r(i, i) = EisInt(1);
    return r;
}

Mat4 Mat4::from_rows(const std::array<std::array<EisInt, 4>, 4>& rows)
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = rows[i][j];
    return r;
}

Mat4 Mat4::from_columns(const std::array<Vec4, 4>& cols)
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = cols[j][i];
    return r;
}

Mat4 Mat4::conj_transpose() const
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = (*this)(j, i).conj();
    return r;
}

Mat4 operator*(const Mat4& x, const Mat4& y)
{
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            EisInt s;
            for (int k = 0; k < 4; ++k)
                s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

Vec4 operator*(const Mat4& x, const Vec4& v)
{
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        EisInt s;
        for (int k = 0; k < 4; ++k)
            s += x(i, k) * v[k];
        r[i] = s;
    }
    return r;
}

EisInt Mat4::det() const
{
    // Laplace expansion, exact and small
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        const Mat4& a = *this;
        return a(r0, c0) * (a(r1, c1) * a(r2, c2) - a(r1, c2) * a(r2, c1))
            - a(r0, c1) * (a(r1, c0) * a(r2, c2) - a(r1, c2) * a(r2, c0))
            + a(r0, c2) * (a(r1, c0) * a(r2, c1) - a(r1, c1) * a(r2, c0));
    };
    EisInt d;
    for (int j = 0; j < 4; ++j) {
        int c[3], t = 0;
        for (int k = 0; k < 4; ++k)
            if (k != j)
                c[t++] = k;
        EisInt minor = det3(1, 2, 3, c[0], c[1], c[2]);
        EisInt term = (*this)(0, j) * minor;
        if (j % 2)
            d -= term;
        else
            d += term;
    }
    return d;
}

Mat4 Mat4::inverse() const
{
    std::vector<std::vector<CycRat>> a(4, std::vector<CycRat>(8));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            a[i][j] = CycRat((*this)(i, j));
        a[i][4 + i] = CycRat(1);
    }
    std::vector<int> piv = rref(a);
    if (piv.size() != 4 || piv[3] != 3)
        throw std::domain_error("Mat4::inverse: singular");
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (!a[i][4 + j].is_eis_int())
                throw std::domain_error("Mat4::inverse: not invertible over E");
            r(i, j) = a[i][4 + j].to_eis();
        }
    return r;
}

Mat4 gram(Model model)
{
    Mat4 h;
    if (model == Model::Diag) {
        h(0, 0) = 1;
        h(1, 1) = -1;
        h(2, 2) = -1;
        h(3, 3) = -1;
    } else {
        h(0, 1) = 1;
        h(1, 0) = 1;
        h(2, 2) = -1;
        h(3, 3) = -1;
    }
    return h;
}

EisInt herm(Model model, const Vec4& x, const Vec4& y)
{
    if (model == Model::Diag)
        return x[0].conj() * y[0] - x[1].conj() * y[1] - x[2].conj() * y[2] - x[3].conj() * y[3];
    return x[0].conj() * y[1] + x[1].conj() * y[0] - x[2].conj() * y[2] - x[3].conj() * y[3];
}

bool is_unitary(Model model, const Mat4& g)
{
    Mat4 h = gram(model);
    return g.conj_transpose() * h * g == h;
}

Mat4 reflection_matrix(Model model, const Vec4& b, const CycRat& eta)
{
    if (herm(model, b, b) != EisInt(-1))
        throw std::invalid_argument("reflection_matrix: <b,b> must be -1");
    if (root_log(eta) < 0)
        throw std::invalid_argument("reflection_matrix: eta is not a sixth root of unity");
    // <b,a>/<b,b> = -<b,a>, so a -> a + (1-eta)<b,a> b
    EisInt f = EisInt(1) - eta.to_eis();
    Mat4 h = gram(model);
    Vec4 row;  // conj(b)^T H
    for (int j = 0; j < 4; ++j) {
        EisInt s;
        for (int k = 0; k < 4; ++k)
            s += b[k].conj() * h(k, j);
        row[j] = s;
    }
    Mat4 r = Mat4::identity();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) += f * b[i] * row[j];
    return r;
}

int matrix_order(const Mat4& g, int cap)
{
    Mat4 id = Mat4::identity(), p = g;
    for (int n = 1; n <= cap; ++n) {
        if (p == id)
            return n;
        p = p * g;
    }
    return -1;
}

namespace {

bool isometry_ok(const Mat4& u)
{
    return u.conj_transpose() * gram(Model::Diag) * u == gram(Model::Hyp) && u.det().is_unit();
}

}  // namespace

Mat4 find_isometry()
{
    Vec4 e3{EisInt(0), EisInt(0), EisInt(1), EisInt(0)};
    Vec4 e4{EisInt(0), EisInt(0), EisInt(0), EisInt(1)};
    Mat4 u = Mat4::from_columns({Vec4{EisInt(1), EisInt(1), EisInt(0), EisInt(0)},
                                 Vec4{EisInt(1, 1), EisInt(0, 1), EisInt(0), EisInt(0)}, e3, e4});
    if (isometry_ok(u))
        return u;
    // fallback search over small coefficients in the first two coordinates
    std::vector<EisInt> box;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            box.emplace_back(a, b);
    for (const auto& x0 : box)
        for (const auto& x1 : box)
            for (const auto& y0 : box)
                for (const auto& y1 : box) {
                    Mat4 c = Mat4::from_columns({Vec4{x0, x1, EisInt(0), EisInt(0)},
                                                 Vec4{y0, y1, EisInt(0), EisInt(0)}, e3, e4});
                    if (isometry_ok(c))
                        return c;
                }
    throw std::runtime_error("find_isometry: search exhausted");
}

Mat4 diag_to_hyp(const Mat4& g)
{
    static const Mat4 u = find_isometry();
    static const Mat4 ui = u.inverse();
    return ui * g * u;
}

int trace_pairing_mod3(Model model, const Vec4& a, const Vec4& b)
{
    EisInt x = herm(model, a, b);
    mpz_class t = (2 * x.a() - x.b()) % 3;
    int r = int(t.get_si());
    return (r + 3) % 3;
}

int DiscForm::neg(int alpha)
{
    auto d = digits(alpha);
    for (auto& x : d)
        x = (3 - x) % 3;
    return index(d);
}

std::array<int, 4> DiscForm::digits(int alpha)
{
    return {alpha % 3, (alpha / 3) % 3, (alpha / 9) % 3, (alpha / 27) % 3};
}

int DiscForm::index(const std::array<int, 4>& d)
{
    return d[0] + 3 * d[1] + 9 * d[2] + 27 * d[3];
}

int DiscForm::pm_class_count() const
{
    int n = 0;
    for (int a = 0; a < size; ++a)
        if (a <= neg(a))
            ++n;
    return n;
}

DiscForm disc_form_build()
{
    DiscForm d;
    for (int a = 0; a < DiscForm::size; ++a) {
        auto x = DiscForm::digits(a);
        Vec4 v{EisInt(x[0]), EisInt(x[1]), EisInt(x[2]), EisInt(x[3])};
        // q(v / sqrt(-3)) = <v,v>/3
        mpz_class n = herm_norm(Model::Diag, v) % 3;
        d.q3[a] = int((n.get_si() + 3) % 3);
    }
    for (int a = 0; a < DiscForm::size; ++a)
        for (int b = 0; b < DiscForm::size; ++b) {
            auto x = DiscForm::digits(a), y = DiscForm::digits(b);
            std::array<int, 4> s;
            for (int i = 0; i < 4; ++i)
                s[i] = (x[i] + y[i]) % 3;
            d.b3[a][b] = ((d.q3[DiscForm::index(s)] - d.q3[a] - d.q3[b]) % 3 + 6) % 3;
        }
    return d;
}

namespace {

CycRat zeta_pow(int k)
{
    switch (((k % 3) + 3) % 3) {
    case 0: return CycRat(1);
    case 1: return CycRat(EisInt::zeta());
    default: return CycRat(EisInt(-1, -1));
    }
}

}  // namespace

ObstructionSpace obstruction_space_solve(const DiscForm& d, int support_q3)
{
    ObstructionSpace os;
    os.support_q3 = support_q3;
    std::vector<int> supp;
    for (int a = 0; a < DiscForm::size; ++a)
        if (d.q3[a] == support_q3)
            supp.push_back(a);
    const CycRat ninth(mpq_class(1, 9), mpq_class(0));
    std::vector<std::vector<CycRat>> eq(DiscForm::size, std::vector<CycRat>(supp.size()));
    for (int a = 0; a < DiscForm::size; ++a)
        for (size_t j = 0; j < supp.size(); ++j) {
            CycRat v = ninth * zeta_pow(d.b3[a][supp[j]]);
            if (supp[j] == a)
                v += CycRat(1);
            eq[a][j] = v;
        }
    for (auto& v : nullspace(eq, supp.size())) {
        std::vector<CycRat> c(DiscForm::size);
        for (size_t j = 0; j < supp.size(); ++j)
            c[supp[j]] = v[j];
        os.basis.push_back(std::move(c));
    }
    return os;
}

bool ObstructionSpace::satisfies_conditions(const DiscForm& d, const std::vector<CycRat>& c) const
{
    const CycRat ninth(mpq_class(-1, 9), mpq_class(0));
    for (int a = 0; a < DiscForm::size; ++a) {
        if (!c[a].is_zero() && d.q3[a] != support_q3)
            return false;
        CycRat s;
        for (int b = 0; b < DiscForm::size; ++b)
            if (!c[b].is_zero())
                s += zeta_pow(d.b3[a][b]) * c[b];
        if (ninth * s != c[a])
            return false;
    }
    return true;
}

bool ObstructionSpace::annihilates(const std::vector<int>& alphas) const
{
    for (const auto& c : basis) {
        CycRat s;
        for (int a : alphas)
            s += c[a] + c[DiscForm::neg(a)];
        if (!s.is_zero())
            return false;
    }
    return true;
}

std::vector<std::array<int, 3>> orthogonal_triples(Model model, const std::vector<Vec4>& mirrors)
{
    std::vector<std::array<int, 3>> out;
    int n = int(mirrors.size());
    auto orth = [&](int i, int j) { return trace_pairing_mod3(model, mirrors[i], mirrors[j]) == 0; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (orth(i, j))
                for (int k = j + 1; k < n; ++k)
                    if (orth(i, k) && orth(j, k))
                        out.push_back({i + 1, j + 1, k + 1});
    return out;
}

std::vector<std::array<int, 3>> disc_orthogonal_triples(const DiscForm& d, int q3)
{
    std::vector<int> reps;
    for (int a = 0; a < DiscForm::size; ++a)
        if (d.q3[a] == q3 && a < DiscForm::neg(a))
            reps.push_back(a);
    std::vector<std::array<int, 3>> out;
    size_t n = reps.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (d.b3[reps[i]][reps[j]] == 0)
                for (size_t k = j + 1; k < n; ++k)
                    if (d.b3[reps[i]][reps[k]] == 0 && d.b3[reps[j]][reps[k]] == 0)
                        out.push_back({reps[i], reps[j], reps[k]});
    return out;
}

}  // namespace pmf
