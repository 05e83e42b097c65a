#ifndef GSTAR_RATIONAL_HPP
#define GSTAR_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gstar {

/*
 * Exact rational number.
 *
 * Values whose reduced numerator and denominator fit in int64 are stored
 * inline; everything else lives in a heap-allocated mpq_class. All operations
 * try the inline path first (with 128-bit intermediates) and promote only on
 * overflow, so typical structure-constant arithmetic never touches GMP.
 * Results are always canonical: denominator > 0, gcd(num, den) = 1, and a big
 * value that fits inline is demoted.
 */
class Rational {
public:
    Rational() noexcept : num_(0), den_(1) {}
    Rational(std::int64_t n) noexcept : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(int n) noexcept : num_(n), den_(1) {}           // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const noexcept;
    bool is_small() const noexcept { return !big_; }

    // Exact string "p/q" or "p" when the denominator is 1.
    std::string str() const;
    mpq_class to_mpq() const;
    double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // a -= c * b, the inner loop of elimination.
    friend void sub_mul(Rational& a, const Rational& c, const Rational& b);

private:
    void assign_big(mpq_class q);
    void assign_i128(__int128 n, __int128 d);

    std::int64_t num_;
    std::int64_t den_;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial_rational(unsigned n);

}  // namespace gstar

#endif
