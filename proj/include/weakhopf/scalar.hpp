#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <variant>

namespace weakhopf {

struct FieldSpec {
    enum class Kind { rational, prime };

    Kind kind = Kind::rational;
    std::uint32_t p = 0;

    static FieldSpec rational() { return {}; }
    static FieldSpec prime(std::uint32_t p);

    /// Accepts "rational" or "prime:P".
    static FieldSpec parse(const std::string& text);

    bool is_prime() const { return kind == Kind::prime; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

/// Exact field element: a reduced fraction or a residue mod p.
class Scalar {
public:
    Scalar() : v_(Residue{0, 0}) {}  // placeholder; prefer zero(field)

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long long n);
    static Scalar from_fraction(const FieldSpec& f, long long num, long long den);
    /// Parses "-5", "3/2"; residues are reduced mod p.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    struct Residue {
        std::uint32_t v;
        std::uint32_t p;
    };
    explicit Scalar(Residue r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    void check_same(const Scalar& o) const;

    std::variant<Residue, mpq_class> v_;
};

}  // namespace weakhopf
