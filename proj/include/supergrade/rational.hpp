#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace supergrade {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits are kept inline;
/// anything larger is promoted to a GMP rational and demoted again as soon
/// as a result fits. Zero is always 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses "p" or "p/q". With `strict`, rejects anything that is not the
    /// canonical spelling (reducible fractions, "p/1", leading '+', "-0").
    static Rational parse(std::string_view text, bool strict = false);

    [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string to_string() const;

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

    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    void assign_big(mpq_class value);
    void set_small(std::int64_t num, std::int64_t den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace supergrade
