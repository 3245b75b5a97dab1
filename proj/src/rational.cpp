#include "supergrade/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace supergrade {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Inline limit: magnitudes up to 2^62 keep every intermediate product and
// cross-sum inside 128 bits.
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

bool fits_small(i128 v) { return v <= kSmallLimit && v >= -kSmallLimit; }

u128 gcd_u128(u128 a, u128 b)
{
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) {
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs(std::int64_t v)
{
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class to_mpz(i128 v)
{
    bool neg = v < 0;
    u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

bool is_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(std::int64_t value)
{
    if (fits_small(value)) {
        num_ = value;
    } else {
        assign_big(mpq_class(mpz_class(static_cast<long>(value))));
    }
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    i128 n = num;
    i128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    u128 g = gcd_u128(static_cast<u128>(n < 0 ? -n : n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    if (n == 0) d = 1;
    if (fits_small(n) && fits_small(d)) {
        set_small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    } else {
        mpq_class q(to_mpz(n), to_mpz(d));
        q.canonicalize();
        assign_big(std::move(q));
    }
}

Rational::Rational(const mpq_class& value)
{
    mpq_class q(value);
    q.canonicalize();
    assign_big(std::move(q));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr)
{
}

Rational& Rational::operator=(const Rational& other)
{
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::set_small(std::int64_t num, std::int64_t den)
{
    num_ = num;
    den_ = den;
    big_.reset();
}

void Rational::assign_big(mpq_class value)
{
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
        set_small(n.get_si(), d.get_si());
        if (num_ == 0) den_ = 1;
        return;
    }
    big_ = std::make_unique<mpq_class>(std::move(value));
    num_ = 0;
    den_ = 1;
}

Rational Rational::parse(std::string_view text, bool strict)
{
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        if (body.front() == '+' && strict) fail();
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num_text = body.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num_text) || !is_digits(den_text)) fail();
    if (strict) {
        if (num_text.size() > 1 && num_text.front() == '0') fail();
        if (den_text.size() > 1 && den_text.front() == '0') fail();
        if (neg && num_text == "0") fail();
        if (slash != std::string_view::npos && den_text == "1") fail();
    }
    mpz_class n(std::string(num_text), 10);
    mpz_class d(std::string(den_text), 10);
    if (d == 0) fail();
    if (neg) n = -n;
    mpq_class q(n, d);
    if (strict) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 1 && !(n == 0 && slash == std::string_view::npos)) fail();
    }
    q.canonicalize();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const
{
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpz_class Rational::numerator() const
{
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const
{
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const
{
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

std::string Rational::to_string() const
{
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const
{
    Rational out(*this);
    if (out.big_) {
        *out.big_ = -*out.big_;
    } else {
        out.num_ = -out.num_;
    }
    return out;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (!big_ && !rhs.big_) {
        i128 n;
        i128 d;
        if (den_ == rhs.den_) {
            n = static_cast<i128>(num_) + rhs.num_;
            d = den_;
        } else {
            n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
            d = static_cast<i128>(den_) * rhs.den_;
        }
        if (n == 0) {
            set_small(0, 1);
            return *this;
        }
        if (d != 1) {
            u128 g = gcd_u128(static_cast<u128>(n < 0 ? -n : n), static_cast<u128>(d));
            if (g > 1) {
                n /= static_cast<i128>(g);
                d /= static_cast<i128>(g);
            }
        }
        if (fits_small(n) && fits_small(d)) {
            set_small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
            return *this;
        }
        mpq_class q(to_mpz(n), to_mpz(d));
        assign_big(std::move(q));
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs)
{
    if (is_zero()) return *this;
    if (rhs.is_zero()) {
        set_small(0, 1);
        return *this;
    }
    if (!big_ && !rhs.big_) {
        std::uint64_t g1 = std::gcd(uabs(num_), static_cast<std::uint64_t>(rhs.den_));
        std::uint64_t g2 = std::gcd(uabs(rhs.num_), static_cast<std::uint64_t>(den_));
        i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (rhs.num_ / static_cast<std::int64_t>(g2));
        i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (rhs.den_ / static_cast<std::int64_t>(g1));
        if (fits_small(n) && fits_small(d)) {
            set_small(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
            return *this;
        }
        assign_big(mpq_class(to_mpz(n), to_mpz(d)));
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!rhs.big_) {
        Rational inv;
        if (rhs.num_ < 0) {
            inv.set_small(-rhs.den_, -rhs.num_);
        } else {
            inv.set_small(rhs.den_, rhs.num_);
        }
        return *this *= inv;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        i128 lhs = static_cast<i128>(a.num_) * b.den_;
        i128 rhs = static_cast<i128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace supergrade
