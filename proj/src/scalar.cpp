#include "weakhopf/scalar.hpp"

#include "weakhopf/errors.hpp"

#include <cctype>

namespace weakhopf {

namespace {

bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

bool valid_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime_u32(p)) throw ParseError("modulus " + std::to_string(p) + " is not prime");
    if (p > 2147483647u) throw ParseError("modulus too large");
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "rational") return rational();
    if (text.rfind("prime:", 0) == 0) {
        std::string digits = text.substr(6);
        if (digits.empty() || digits.size() > 10) throw ParseError("bad field spec '" + text + "'");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad field spec '" + text + "'");
        return prime(static_cast<std::uint32_t>(std::stoull(digits)));
    }
    throw ParseError("bad field spec '" + text + "'");
}

std::string FieldSpec::to_string() const {
    return is_prime() ? "prime:" + std::to_string(p) : "rational";
}

Scalar Scalar::zero(const FieldSpec& f) {
    if (f.is_prime()) return Scalar(Residue{0, f.p});
    return Scalar(mpq_class(0));
}

Scalar Scalar::one(const FieldSpec& f) {
    if (f.is_prime()) return Scalar(Residue{1 % f.p, f.p});
    return Scalar(mpq_class(1));
}

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
    if (f.is_prime()) {
        long long r = n % static_cast<long long>(f.p);
        if (r < 0) r += f.p;
        return Scalar(Residue{static_cast<std::uint32_t>(r), f.p});
    }
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
    return Scalar(mpq_class(z));
}

Scalar Scalar::from_fraction(const FieldSpec& f, long long num, long long den) {
    if (den == 0) throw ParseError("zero denominator");
    return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    std::string num = text, den = "1";
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!den.empty() && (den[0] == '-' || den[0] == '+')) throw ParseError("bad scalar '" + text + "'");
    }
    if (!valid_integer(num) || !valid_integer(den)) throw ParseError("bad scalar '" + text + "'");
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    if (f.is_prime()) {
        std::uint32_t dn = reduce_mpz(d, f.p);
        if (dn == 0) throw ParseError("denominator vanishes mod " + std::to_string(f.p) + " in '" + text + "'");
        return Scalar(Residue{reduce_mpz(n, f.p), f.p}) / Scalar(Residue{dn, f.p});
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(std::move(q));
}

FieldSpec Scalar::field() const {
    FieldSpec f;
    if (auto r = std::get_if<Residue>(&v_)) {
        f.kind = FieldSpec::Kind::prime;
        f.p = r->p;
    }
    return f;
}

bool Scalar::is_zero() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->v == 0;
    return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->v == 1;
    return std::get<mpq_class>(v_) == 1;
}

std::string Scalar::to_string() const {
    if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->v);
    return std::get<mpq_class>(v_).get_str();
}

void Scalar::check_same(const Scalar& o) const {
    if (v_.index() != o.v_.index()) throw FieldMismatch("scalar field mismatch");
    if (auto r = std::get_if<Residue>(&v_)) {
        if (r->p != std::get<Residue>(o.v_).p) throw FieldMismatch("scalar modulus mismatch");
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    r -= o;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r = *this;
    r *= o;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t(r->v) + std::get<Residue>(o.v_).v;
        r->v = static_cast<std::uint32_t>(s % r->p);
    } else {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t(r->v) + r->p - std::get<Residue>(o.v_).v;
        r->v = static_cast<std::uint32_t>(s % r->p);
    } else {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t(r->v) * std::get<Residue>(o.v_).v;
        r->v = static_cast<std::uint32_t>(s % r->p);
    } else {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    }
    return *this;
}

Scalar Scalar::operator-() const {
    if (auto r = std::get_if<Residue>(&v_)) return Scalar(Residue{r->v == 0 ? 0 : r->p - r->v, r->p});
    return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (auto r = std::get_if<Residue>(&v_)) return Scalar(Residue{mod_pow(r->v, r->p - 2, r->p), r->p});
    mpq_class q = 1 / std::get<mpq_class>(v_);
    return Scalar(std::move(q));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    if (auto r = std::get_if<Scalar::Residue>(&a.v_)) return r->v == std::get<Scalar::Residue>(b.v_).v;
    return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

}  // namespace weakhopf
