#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace linrel {

enum class FieldKind { Rationals, PrimeField };

/// Identifies the scalar field: the rationals, or the integers modulo a
/// prime. Every matrix and relation carries one of these.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    /// Prime fields GF(p) with word-sized p; primality is checked by trial
    /// division, so only small moduli are practical.
    static FieldSpec prime_field(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;  // "QQ" or "GF(p)"
    static FieldSpec parse(const std::string& text);

private:
    FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), modulus_(p) {}

    FieldKind kind_;
    std::uint64_t modulus_;
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator and residues are reduced mod p, so structural equality is
/// field equality.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long long v);
    static Scalar from_rational(mpq_class q);  // canonicalizes
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws std::invalid_argument on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar&) const = default;

    std::string to_string() const;
    /// Text forms: "a/b" or "a" over QQ, a decimal residue over GF(p).
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const mpq_class& rational() const;  // requires a rational field
    std::uint64_t residue() const;      // requires a prime field

private:
    Scalar(FieldSpec f, mpq_class q) : field_(f), value_(std::move(q)) {}
    Scalar(FieldSpec f, std::uint64_t r) : field_(f), value_(r) {}

    static void require_same_field(const Scalar& a, const Scalar& b);

    FieldSpec field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace linrel
