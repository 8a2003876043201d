#include "fingeo/gf.hpp"

#include <array>
#include <cassert>
#include <string>

namespace fingeo {

namespace {

// (q, coefficients of the fixed monic irreducible, constant term first).
// GF(4): x^2+x+1; GF(8): x^3+x+1; GF(9): x^2+1; GF(16): x^4+x+1.
struct FixedPoly {
    int q;
    std::vector<int> coeffs;
};

const std::array<FixedPoly, 4> kFixedPolys = {{
    {4, {1, 1, 1}},
    {8, {1, 1, 0, 1}},
    {9, {1, 0, 1}},
    {16, {1, 1, 0, 0, 1}},
}};

std::vector<int> digits(int code, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len && code > 0; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int code = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        code = code * p + d[i];
    return code;
}

// Multiply two polynomials over GF(p) and reduce modulo the monic poly.
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    int deg = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < deg; ++j)
            prod[i - deg + j] = ((prod[i - deg + j] - c * mod[j]) % p + p * p) % p;
    }
    prod.resize(deg);
    return prod;
}

// Value of the polynomial at x, coefficients over GF(p).
int polyeval(const std::vector<int>& poly, int x, int p) {
    int v = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
        v = (v * x + poly[i]) % p;
    return v;
}

// Irreducibility over GF(p) by trial division with all monic polynomials
// of degree 1..deg/2.
bool is_irreducible(const std::vector<int>& poly, int p) {
    int deg = static_cast<int>(poly.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int code = 0; code < count; ++code) {
            std::vector<int> div = digits(code, p, d);
            div.push_back(1);  // monic
            // long division remainder
            std::vector<int> rem(poly);
            for (int i = static_cast<int>(rem.size()) - 1; i >= d; --i) {
                int c = rem[i];
                if (c == 0) continue;
                for (int j = 0; j <= d; ++j)
                    rem[i - d + j] = ((rem[i - d + j] - c * div[j]) % p + p * p) % p;
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int q) : q_(q) {
    if (q < 2) throw NotAPrimePower("field order must be >= 2, got " + std::to_string(q));
    if (q > 16) throw UnsupportedOrder("field order " + std::to_string(q) + " > 16 unsupported");
    int n = q;
    int p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) p = n;  // q itself is prime
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1)
        throw NotAPrimePower(std::to_string(q) + " is not a prime power");
    p_ = p;
    e_ = e;

    if (e_ == 1) {
        poly_ = {0, 1};
    } else {
        for (const auto& fp : kFixedPolys)
            if (fp.q == q_) poly_ = fp.coeffs;
        assert(!poly_.empty());
        if (!is_irreducible(poly_, p_))
            throw std::logic_error("reduction polynomial is reducible");
        // no roots either
        for (int x = 0; x < p_; ++x)
            assert(polyeval(poly_, x, p_) != 0);
    }

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        std::vector<int> da = digits(a, p_, e_);
        std::vector<int> dn(e_);
        for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = from_digits(dn, p_);
        for (int b = 0; b < q_; ++b) {
            std::vector<int> db = digits(b, p_, e_);
            std::vector<int> ds(e_);
            for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = from_digits(ds, p_);
            if (e_ == 1) {
                mul_[a * q_ + b] = (a * b) % p_;
            } else {
                mul_[a * q_ + b] = from_digits(polymulmod(da, db, poly_, p_), p_);
            }
        }
    }
}

int Field::inv(int a) const {
    if (a == 0) throw DivisionByZero("inverse of 0");
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::logic_error("no inverse found");  // unreachable in a field
}

int Field::pow(int a, long long n) const {
    if (n < 0) return pow(inv(a), -n);
    int r = 1;
    int base = a;
    while (n > 0) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

}  // namespace fingeo
