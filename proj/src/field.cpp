#include "linrel/field.hpp"

#include <cctype>
#include <stdexcept>

namespace linrel {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + b) % p);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) + p - b) % p);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    while (e) {
        if (e & 1) acc = mul_mod(acc, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return acc;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("GF modulus must be prime, got " + std::to_string(p));
    }
    return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
    if (kind_ == FieldKind::Rationals) return "QQ";
    return "GF(" + std::to_string(modulus_) + ")";
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "QQ") return rationals();
    if (text.size() > 4 && text.compare(0, 3, "GF(") == 0 && text.back() == ')') {
        std::string inner = text.substr(3, text.size() - 4);
        if (all_digits(inner)) {
            try {
                return prime_field(std::stoull(inner));
            } catch (const std::out_of_range&) {
                throw std::invalid_argument("GF modulus out of range: " + text);
            }
        }
    }
    throw std::invalid_argument("bad field spec '" + text + "' (expected \"QQ\" or \"GF(p)\")");
}

Scalar Scalar::zero(const FieldSpec& f) {
    if (f.is_rationals()) return Scalar(f, mpq_class(0));
    return Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& f) {
    if (f.is_rationals()) return Scalar(f, mpq_class(1));
    return Scalar(f, std::uint64_t{1 % f.modulus()});
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
    if (f.is_rationals()) return Scalar(f, mpq_class(static_cast<long>(v)));
    const std::uint64_t p = f.modulus();
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(FieldSpec::rationals(), std::move(q));
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (f.is_rationals()) throw std::invalid_argument("from_residue on QQ");
    return Scalar(f, r % f.modulus());
}

bool Scalar::is_zero() const {
    if (field_.is_rationals()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rationals()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1 % field_.modulus();
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
    return Scalar(field_, sub_mod(0, std::get<std::uint64_t>(value_), field_.modulus()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    if (field_.is_rationals()) {
        return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
    }
    const std::uint64_t p = field_.modulus();
    return Scalar(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) {
        throw std::invalid_argument("field mismatch: " + a.field_.to_string() + " vs " +
                                    b.field_.to_string());
    }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (a.field_.is_rationals()) {
        return Scalar(a.field_,
                      mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
    }
    return Scalar(a.field_, add_mod(std::get<std::uint64_t>(a.value_),
                                    std::get<std::uint64_t>(b.value_), a.field_.modulus()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (a.field_.is_rationals()) {
        return Scalar(a.field_,
                      mpq_class(std::get<mpq_class>(a.value_) - std::get<mpq_class>(b.value_)));
    }
    return Scalar(a.field_, sub_mod(std::get<std::uint64_t>(a.value_),
                                    std::get<std::uint64_t>(b.value_), a.field_.modulus()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (a.field_.is_rationals()) {
        return Scalar(a.field_,
                      mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
    }
    return Scalar(a.field_, mul_mod(std::get<std::uint64_t>(a.value_),
                                    std::get<std::uint64_t>(b.value_), a.field_.modulus()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    return a * b.inverse();
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::string_view s = text;
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    if (!all_digits(num)) throw std::invalid_argument("bad scalar '" + text + "'");

    if (f.is_rationals()) {
        mpz_class n(std::string(num), 10);
        mpz_class d(1);
        if (slash != std::string_view::npos) {
            std::string_view den = s.substr(slash + 1);
            if (!all_digits(den)) throw std::invalid_argument("bad scalar '" + text + "'");
            d = mpz_class(std::string(den), 10);
            if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        mpq_class q(n, d);
        q.canonicalize();
        if (neg) q = -q;
        return Scalar(f, std::move(q));
    }

    if (slash != std::string_view::npos) {
        throw std::invalid_argument("bad residue '" + text + "' for " + f.to_string());
    }
    mpz_class v(std::string(num), 10);
    if (neg) v = -v;
    mpz_class r, p(static_cast<unsigned long>(f.modulus()));
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return Scalar(f, static_cast<std::uint64_t>(r.get_ui()));
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw std::invalid_argument("rational() on " + field_.to_string());
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rationals()) throw std::invalid_argument("residue() on QQ");
    return std::get<std::uint64_t>(value_);
}

}  // namespace linrel
