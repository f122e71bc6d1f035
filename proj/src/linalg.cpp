#include "galois/linalg.hpp"

namespace galois {

namespace {

std::vector<int> rref_rational(Matrix& m, int ncols)
{
    std::vector<std::vector<QRat>> q(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        q[i].resize(ncols);
        for (int j = 0; j < ncols; ++j)
            if (!m[i][j].is_zero()) q[i][j] = m[i][j].to_qrat();
    }
    auto weight = [&](size_t i, int col) {
        size_t w = 0;
        for (int j = col; j < ncols; ++j)
            if (sgn(q[i][j]) != 0) w += mpz_sizeinbase(q[i][j].get_num_mpz_t(), 2) + mpz_sizeinbase(q[i][j].get_den_mpz_t(), 2);
        return w;
    };
    // forward elimination with the lightest pivot row
    std::vector<int> piv;
    size_t row = 0;
    std::vector<int> nz;
    for (int col = 0; col < ncols && row < q.size(); ++col) {
        size_t sel = q.size(), best = 0;
        for (size_t i = row; i < q.size(); ++i) {
            if (sgn(q[i][col]) == 0) continue;
            size_t w = weight(i, col);
            if (sel == q.size() || w < best) {
                sel = i;
                best = w;
            }
        }
        if (sel == q.size()) continue;
        std::swap(q[sel], q[row]);
        QRat inv = 1 / q[row][col];
        nz.clear();
        for (int j = col; j < ncols; ++j)
            if (sgn(q[row][j]) != 0) {
                q[row][j] *= inv;
                nz.push_back(j);
            }
        for (size_t i = row + 1; i < q.size(); ++i) {
            if (sgn(q[i][col]) == 0) continue;
            QRat f = q[i][col];
            for (int j : nz) q[i][j] -= f * q[row][j];
        }
        piv.push_back(col);
        ++row;
    }
    // back substitution
    for (size_t r = piv.size(); r-- > 0;) {
        int col = piv[r];
        nz.clear();
        for (int j = col; j < ncols; ++j)
            if (sgn(q[r][j]) != 0) nz.push_back(j);
        for (size_t i = 0; i < r; ++i) {
            if (sgn(q[i][col]) == 0) continue;
            QRat f = q[i][col];
            for (int j : nz) q[i][j] -= f * q[r][j];
        }
    }
    for (size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < ncols; ++j) m[i][j] = Constant(q[i][j]);
    return piv;
}

}  // namespace

std::vector<int> rref(Matrix& m, int ncols)
{
    bool rational = true;
    for (auto& row : m)
        for (auto& e : row)
            if (!e.is_rational()) rational = false;
    if (rational) return rref_rational(m, ncols);
    std::vector<int> piv;
    size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = m.size(), best = 0;
        for (size_t i = row; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            size_t w = 0;
            for (int j = col; j < ncols; ++j) w += !m[i][j].is_zero();
            if (sel == m.size() || w < best) {
                sel = i;
                best = w;
            }
        }
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        Constant inv = m[row][col].inv();
        for (int j = col; j < ncols; ++j) m[row][j] *= inv;
        for (size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            Constant f = m[i][col];
            for (int j = col; j < ncols; ++j)
                if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
        }
        piv.push_back(col);
        ++row;
    }
    for (size_t r = piv.size(); r-- > 0;) {
        int col = piv[r];
        for (size_t i = 0; i < r; ++i) {
            if (m[i][col].is_zero()) continue;
            Constant f = m[i][col];
            for (int j = col; j < ncols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
    }
    return piv;
}

std::vector<Vec> nullspace(Matrix m, int ncols)
{
    auto piv = rref(m, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        Vec v(ncols);
        v[f] = Constant(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve_linear(Matrix m, const Vec& rhs, int ncols)
{
    for (size_t i = 0; i < m.size(); ++i) {
        m[i].resize(ncols);
        m[i].push_back(rhs[i]);
    }
    auto piv = rref(m, ncols + 1);
    if (!piv.empty() && piv.back() == ncols) return std::nullopt;
    Vec v(ncols);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = m[r][ncols];
    return v;
}

RatFunc combine(const std::vector<RatFunc>& basis, const Vec& c)
{
    RatFunc s;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!c[i].is_zero()) s += RatFunc(c[i]) * basis[i];
    return s;
}

namespace {

Poly common_den(const std::vector<RatFunc>& fs)
{
    Poly den(1);
    for (auto& f : fs) {
        const Poly& d = f.den();
        den = den * (d / gcd(den, d));
    }
    return den;
}

}  // namespace

std::vector<Vec> linear_ansatz_images(const std::vector<std::vector<RatFunc>>& images)
{
    int n = static_cast<int>(images.size());
    if (n == 0) return {};
    size_t K = images[0].size();
    Matrix m;
    for (size_t k = 0; k < K; ++k) {
        std::vector<RatFunc> comp;
        for (auto& im : images) comp.push_back(im[k]);
        Poly den = common_den(comp);
        std::vector<Poly> nums;
        int rows = 0;
        for (auto& f : comp) {
            nums.push_back(f.num() * (den / f.den()));
            rows = std::max(rows, nums.back().degree() + 1);
        }
        size_t base = m.size();
        m.resize(base + rows, Vec(n));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= nums[j].degree(); ++i) m[base + i][j] = nums[j].coeff(i);
    }
    return nullspace(std::move(m), n);
}

std::vector<Vec> linear_ansatz(const std::vector<RatFunc>& basis,
                               const std::function<RatFunc(const RatFunc&)>& op)
{
    std::vector<std::vector<RatFunc>> images;
    for (auto& b : basis) images.push_back({op(b)});
    return linear_ansatz_images(images);
}

std::vector<RatFunc> echelon_span(const std::vector<RatFunc>& fs)
{
    Poly den = common_den(fs);
    std::vector<Poly> nums;
    int cols = 0;
    for (auto& f : fs) {
        nums.push_back(f.num() * (den / f.den()));
        cols = std::max(cols, nums.back().degree() + 1);
    }
    Matrix m;
    for (auto& p : nums) {
        Vec row(cols);
        for (int i = 0; i <= p.degree(); ++i) row[i] = p.coeff(i);
        m.push_back(row);
    }
    auto piv = rref(m, cols);
    std::vector<RatFunc> out;
    for (size_t r = 0; r < piv.size(); ++r) out.push_back(RatFunc(Poly(m[r]), den));
    return out;
}

bool in_span(const std::vector<RatFunc>& fs, const RatFunc& f)
{
    std::vector<RatFunc> all = fs;
    all.push_back(f);
    return echelon_span(all).size() == echelon_span(fs).size();
}

}  // namespace galois
