#ifndef FINGEO_GF_HPP
#define FINGEO_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fingeo {

struct NotAPrimePower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact arithmetic for GF(p^e), q = p^e <= 16. Elements are integer codes
/// 0..q-1; code = sum c_i * p^i over the polynomial coefficients, constant
/// term least significant. All tables are built up front.
class Field {
public:
    /// q must be a prime power in [2, 16].
    explicit Field(int q);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }

    /// Coefficients of the monic reduction polynomial, degree e,
    /// constant term first. For e = 1 this is {0, 1} (i.e. x).
    const std::vector<int>& reduction_poly() const { return poly_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

    int pow(int a, long long n) const;
    /// Frobenius map a -> a^p.
    int frobenius(int a) const { return pow(a, p_); }

private:
    int p_ = 0, e_ = 0, q_ = 0;
    std::vector<int> poly_;
    std::vector<int> add_, mul_, neg_;
};

}  // namespace fingeo

#endif
