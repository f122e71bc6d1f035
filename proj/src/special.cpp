#include "galois/special.hpp"

#include <algorithm>
#include <sstream>

#include "galois/errors.hpp"

namespace galois {

namespace {

bool odd_integer(const Surd& s)
{
    if (!s.is_rational() || !is_integer(s.rational_part)) return false;
    mpz_class n = s.rational_part.get_num();
    return mpz_odd_p(n.get_mpz_t()) != 0;
}

Surd neg(const Surd& s) { return surd_combine({{-1, s}}); }

// x - base in Z for rational x, value of the shift
std::optional<long> integer_shift(const Surd& x, const QRat& base)
{
    if (!x.is_rational()) return std::nullopt;
    QRat d = x.rational_part - base;
    if (!is_integer(d)) return std::nullopt;
    return d.get_num().get_si();
}

QRat param(const std::vector<QRat>& p, size_t i, const char* fam)
{
    if (p.size() <= i) raise(ErrorKind::InvalidArgument, std::string(fam) + ": missing parameter");
    return p[i];
}

}  // namespace

std::string KimuraWitness::describe() const
{
    static const char* sums[] = {"l+m+n", "-l+m+n", "l-m+n", "l+m-n"};
    std::ostringstream os;
    if (kind == Kind::OddSum) {
        os << "condition (i): " << sums[sum_index] << " = " << to_string(sum) << " is odd";
    } else {
        os << "condition (ii): family " << family << " (l,m,q) = (" << lmq[0] << "," << lmq[1];
        if (family == 1)
            os << ",*)";
        else
            os << "," << lmq[2] << ")";
    }
    return os.str();
}

const std::vector<KimuraFamily>& kimura_families()
{
    static const std::vector<KimuraFamily> t = [] {
        auto q = [](long a, long b) { return qrat(a, b); };
        return std::vector<KimuraFamily>{
            {1, {q(1, 2), q(1, 2), q(0, 1)}, true, false},
            {2, {q(1, 2), q(1, 3), q(1, 3)}, false, false},
            {3, {q(2, 3), q(1, 3), q(1, 3)}, false, true},
            {4, {q(1, 2), q(1, 3), q(1, 4)}, false, false},
            {5, {q(2, 3), q(1, 4), q(1, 4)}, false, true},
            {6, {q(1, 2), q(1, 3), q(1, 5)}, false, false},
            {7, {q(2, 5), q(1, 3), q(1, 3)}, false, true},
            {8, {q(2, 3), q(1, 5), q(1, 5)}, false, true},
            {9, {q(1, 2), q(2, 5), q(1, 5)}, false, true},
            {10, {q(3, 5), q(1, 3), q(1, 5)}, false, true},
            {11, {q(2, 5), q(2, 5), q(2, 5)}, false, true},
            {12, {q(2, 3), q(1, 3), q(1, 5)}, false, true},
            {13, {q(4, 5), q(1, 5), q(1, 5)}, false, true},
            {14, {q(1, 2), q(2, 5), q(1, 3)}, false, true},
            {15, {q(3, 5), q(2, 5), q(1, 3)}, false, true},
        };
    }();
    return t;
}

KimuraVerdict kimura_check(const RiemannExponents& e)
{
    const Surd& l = e.lambda_t;
    const Surd& m = e.mu_t;
    const Surd& n = e.nu_t;
    std::array<Surd, 4> sums = {
        surd_combine({{1, l}, {1, m}, {1, n}}),
        surd_combine({{-1, l}, {1, m}, {1, n}}),
        surd_combine({{1, l}, {-1, m}, {1, n}}),
        surd_combine({{1, l}, {1, m}, {-1, n}}),
    };
    for (int i = 0; i < 4; ++i) {
        if (odd_integer(sums[i])) {
            KimuraWitness w;
            w.kind = KimuraWitness::Kind::OddSum;
            w.sum_index = i;
            w.sum = sums[i];
            return {true, w};
        }
    }

    std::array<Surd, 3> d = {l, m, n};
    std::array<int, 3> perm = {0, 1, 2};
    for (const auto& fam : kimura_families()) {
        std::sort(perm.begin(), perm.end());
        do {
            for (int mask = 0; mask < 8; ++mask) {
                std::array<int, 3> sg;
                std::array<long, 3> shift{};
                bool ok = true;
                for (int j = 0; j < 3 && ok; ++j) {
                    int k = perm[j];  // difference placed in row position j
                    sg[k] = (mask >> k) & 1 ? -1 : 1;
                    if (j == 2 && fam.third_arbitrary) continue;
                    Surd v = sg[k] < 0 ? neg(d[k]) : d[k];
                    auto s = integer_shift(v, fam.base[j]);
                    if (!s) ok = false;
                    else shift[j] = *s;
                }
                if (!ok) continue;
                if (fam.parity_even && ((shift[0] + shift[1] + shift[2]) % 2 != 0)) continue;
                KimuraWitness w;
                w.kind = KimuraWitness::Kind::Family;
                w.family = fam.index;
                for (int j = 0; j < 3; ++j) w.order[perm[j]] = j;
                w.signs = sg;
                w.lmq = shift;
                return {true, w};
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {false, std::nullopt};
}

static void check_fuchs(const RiemannSymbol& s)
{
    Surd sum = surd_combine({{1, s.rho}, {1, s.rho_p}, {1, s.sigma}, {1, s.sigma_p}, {1, s.tau}, {1, s.tau_p}});
    if (!(sum == Surd(QRat(1))))
        raise(ErrorKind::FuchsViolation, "exponents sum to " + to_string(sum) + ", expected 1");
}

HypergeometricReduction riemann_to_hypergeometric(const RiemannSymbol& s)
{
    check_fuchs(s);
    HypergeometricReduction h;
    h.kappa = surd_combine({{1, s.rho}, {1, s.sigma}, {1, s.tau}});
    h.beta = surd_combine({{1, s.rho}, {1, s.sigma}, {1, s.tau_p}});
    h.gamma = surd_combine({{1, Surd(QRat(1))}, {1, s.rho}, {-1, s.rho_p}});
    h.differences.lambda_t = surd_combine({{1, Surd(QRat(1))}, {-1, h.gamma}});
    h.differences.mu_t = surd_combine({{1, h.gamma}, {-1, h.kappa}, {-1, h.beta}});
    h.differences.nu_t = surd_combine({{1, h.beta}, {-1, h.kappa}});
    return h;
}

LinODE2 riemann_equation(const RiemannSymbol& s)
{
    check_fuchs(s);
    auto C = [](const Surd& v) { return Constant::from_surd(v); };
    RatFunc x = RatFunc::x();
    RatFunc x1 = x - RatFunc(1);
    Constant rr = C(s.rho) * C(s.rho_p), ss = C(s.sigma) * C(s.sigma_p), tt = C(s.tau) * C(s.tau_p);
    LinODE2 eq;
    eq.a = RatFunc(Constant(1) - C(s.rho) - C(s.rho_p)) / x + RatFunc(Constant(1) - C(s.sigma) - C(s.sigma_p)) / x1;
    eq.b = RatFunc(rr) / (x * x) + RatFunc(ss) / (x1 * x1) + RatFunc(tt - rr - ss) / (x * x1);
    return eq;
}

LinODE2 hypergeometric_equation(const Surd& kappa, const Surd& beta, const Surd& gamma)
{
    Constant k = Constant::from_surd(kappa), b = Constant::from_surd(beta), g = Constant::from_surd(gamma);
    RatFunc x = RatFunc::x();
    RatFunc q = x * (RatFunc(1) - x);
    return LinODE2{(RatFunc(g) - RatFunc(k + b + Constant(1)) * x) / q, RatFunc(-(k * b)) / q};
}

bool whittaker_check(const QRat& kappa, const QRat& mu)
{
    for (int sk : {1, -1})
        for (int sm : {1, -1}) {
            QRat v = sk * kappa + sm * mu - qrat(1, 2);
            if (is_integer(v) && sgn(v) >= 0) return true;
        }
    return false;
}

ReducedODE whittaker_equation(const QRat& kappa, const QRat& mu)
{
    RatFunc x = RatFunc::x();
    return ReducedODE{RatFunc(Constant(qrat(1, 4))) - RatFunc(Constant(kappa)) / x +
                      RatFunc(Constant((4 * mu * mu - 1) / 4)) / (x * x)};
}

bool bessel_check(const QRat& n)
{
    return is_integer(n - qrat(1, 2));
}

LinODE2 bessel_equation(const QRat& n)
{
    RatFunc x = RatFunc::x();
    return LinODE2{RatFunc(1) / x, (x * x - RatFunc(Constant(n * n))) / (x * x)};
}

bool weber_check(const QRat& a, const QRat& b, const QRat& c)
{
    if (sgn(a) == 0) raise(ErrorKind::ZeroLeading, "Rehm form needs a != 0");
    // x -> k t with a k^4 = 1/4 gives the Weber parameter n = (b^2 - a c)/(2 a sqrt a) - 1/2
    QRat num = b * b - a * c;
    if (sgn(num) == 0 || sgn(a) < 0) return false;
    Surd r = sqrt_exact(a);
    if (!r.is_rational()) return false;
    return odd_integer(Surd(QRat(num / (a * r.rational_part))));
}

ReducedODE rehm_equation(const QRat& a, const QRat& b, const QRat& c)
{
    if (sgn(a) == 0) raise(ErrorKind::ZeroLeading, "Rehm form needs a != 0");
    RatFunc x = RatFunc::x();
    return ReducedODE{RatFunc(Constant(a)) * x * x + RatFunc(Constant(2 * b)) * x + RatFunc(Constant(c))};
}

ReducedODE weber_equation(const QRat& n)
{
    RatFunc x = RatFunc::x();
    return ReducedODE{RatFunc(Constant(qrat(1, 4))) * x * x - RatFunc(Constant(qrat(1, 2) + n))};
}

const char* ortho_family_name(OrthoFamily f)
{
    switch (f) {
    case OrthoFamily::Hermite: return "Hermite";
    case OrthoFamily::ChebyshevT: return "ChebyshevT";
    case OrthoFamily::ChebyshevU: return "ChebyshevU";
    case OrthoFamily::Legendre: return "Legendre";
    case OrthoFamily::Laguerre: return "Laguerre";
    case OrthoFamily::AssocLaguerre: return "AssocLaguerre";
    case OrthoFamily::Gegenbauer: return "Gegenbauer";
    case OrthoFamily::Jacobi: return "Jacobi";
    case OrthoFamily::Bessel: return "Bessel";
    }
    return "?";
}

OrthoFamily ortho_family_from_name(const std::string& name)
{
    std::string low;
    for (char ch : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (int i = 0; i <= static_cast<int>(OrthoFamily::Bessel); ++i) {
        auto f = static_cast<OrthoFamily>(i);
        std::string n = ortho_family_name(f);
        std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
        if (n == low) return f;
    }
    raise(ErrorKind::UnknownFamily, "unknown polynomial family '" + name + "'");
}

OrthoData orthogonal_data(OrthoFamily f, long n, const std::vector<QRat>& p)
{
    if (n < 0) raise(ErrorKind::InvalidArgument, "degree must be non-negative");
    auto C = [](const QRat& q) { return Constant(q); };
    Poly one_minus_x2(std::vector<Constant>{Constant(1), Constant(0), Constant(-1)});
    QRat N = n;
    switch (f) {
    case OrthoFamily::Hermite:
        return {Poly(1), Poly(std::vector<Constant>{Constant(0), Constant(-2)}), C(2 * N)};
    case OrthoFamily::ChebyshevT:
        return {one_minus_x2, Poly(std::vector<Constant>{Constant(0), Constant(-1)}), C(N * N)};
    case OrthoFamily::ChebyshevU:
        return {one_minus_x2, Poly(std::vector<Constant>{Constant(0), Constant(-3)}), C(N * (N + 2))};
    case OrthoFamily::Legendre:
        return {one_minus_x2, Poly(std::vector<Constant>{Constant(0), Constant(-2)}), C(N * (N + 1))};
    case OrthoFamily::Laguerre:
        return {Poly::x(), Poly(std::vector<Constant>{Constant(1), Constant(-1)}), C(N)};
    case OrthoFamily::AssocLaguerre: {
        QRat m = param(p, 0, "AssocLaguerre");
        return {Poly::x(), Poly(std::vector<Constant>{C(m + 1), Constant(-1)}), C(N)};
    }
    case OrthoFamily::Gegenbauer: {
        QRat m = param(p, 0, "Gegenbauer");
        return {one_minus_x2, Poly(std::vector<Constant>{Constant(0), C(-(2 * m + 1))}), C(N * (N + 2 * m))};
    }
    case OrthoFamily::Jacobi: {
        QRat m = param(p, 0, "Jacobi"), nu = param(p, 1, "Jacobi");
        return {one_minus_x2, Poly(std::vector<Constant>{C(nu - m), C(-(m + nu + 2))}), C(N * (N + 1 + m + nu))};
    }
    case OrthoFamily::Bessel:
        return {Poly::monomial(Constant(1), 2), Poly(std::vector<Constant>{Constant(2), Constant(2)}), C(-N * (N + 1))};
    }
    raise(ErrorKind::UnknownFamily, "unknown polynomial family");
}

LinODE2 orthogonal_equation(OrthoFamily f, long n, const std::vector<QRat>& params)
{
    OrthoData d = orthogonal_data(f, n, params);
    RatFunc Q(d.Q);
    return LinODE2{RatFunc(d.L) / Q, RatFunc(d.lambda) / Q};
}

LinODE2 orthogonal_equation(const std::string& family, long n, const std::vector<QRat>& params)
{
    return orthogonal_equation(ortho_family_from_name(family), n, params);
}

}  // namespace galois
