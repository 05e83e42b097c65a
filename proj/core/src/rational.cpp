#include "gstar/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "gstar/errors.hpp"

namespace gstar {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

mpz_class mpz_from_i128(i128 v) {
    const bool neg = v < 0;
    u128 m = abs_u128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(std::int64_t v) { return mpz_from_i128(v); }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(0), den_(1) {
    if (d == 0) fail(ErrorKind::InvalidParameter, "rational with zero denominator");
    assign_i128(n, d);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::assign_big(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
        return;
    }
    if (big_) *big_ = std::move(q);
    else big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign_i128(i128 n, i128 d) {
    if (d < 0) {
        // -kMin128 cannot occur: inputs are products of int64 values.
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd_u128(abs_u128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    assign_big(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) fail(ErrorKind::MalformedInput, "empty rational literal");
    std::size_t slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        fail(ErrorKind::MalformedInput, "invalid rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) fail(ErrorKind::MalformedInput, "zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
    Rational r(*this);
    if (r.big_) {
        *r.big_ = -*r.big_;
    } else if (r.num_ == std::numeric_limits<std::int64_t>::min()) {
        r.assign_i128(-static_cast<i128>(r.num_), r.den_);
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (rhs.num_ == 0) return *this;
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_add_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        assign_i128(n, d);
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (rhs.num_ == 0) return *this;
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_sub_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        i128 n = static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        assign_i128(n, d);
        return *this;
    }
    assign_big(to_mpq() - rhs.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (num_ == 0) return *this;
        if (rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t out;
            if (!__builtin_mul_overflow(num_, rhs.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        assign_i128(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) fail(ErrorKind::InvalidParameter, "division by zero rational");
    if (!big_ && !rhs.big_) {
        assign_i128(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
        return *this;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms: a big value never fits inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

void sub_mul(Rational& a, const Rational& c, const Rational& b) {
    if (c.is_zero() || b.is_zero()) return;
    if (a.is_small() && c.is_small() && b.is_small() && a.den_ == 1 && c.den_ == 1 && b.den_ == 1) {
        std::int64_t prod;
        std::int64_t out;
        if (!__builtin_mul_overflow(c.num_, b.num_, &prod) &&
            !__builtin_sub_overflow(a.num_, prod, &out)) {
            a.num_ = out;
            return;
        }
    }
    a -= c * b;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial_rational(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<std::int64_t>(i));
    return r;
}

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::MalformedInput: return "malformed-input";
        case ErrorKind::NotNilpotent: return "not-nilpotent";
        case ErrorKind::Capacity: return "capacity";
        case ErrorKind::IllegalSubstitution: return "illegal-substitution";
        case ErrorKind::MustBeHomogeneous: return "must-be-homogeneous";
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Structural: return "structural";
    }
    return "unknown";
}

}  // namespace gstar
