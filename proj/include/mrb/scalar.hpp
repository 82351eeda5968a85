#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace mrb {

// Exact rational in lowest terms. Small values live inline, large ones in a GMP rational.
class Scalar {
  public:
    Scalar() noexcept = default;
    Scalar(int v) noexcept : num_(v) {}
    Scalar(long v) noexcept : num_(v) { fix_min(); }
    Scalar(long long v) noexcept : num_(v) { fix_min(); }
    Scalar(long long num, long long den);
    explicit Scalar(const mpq_class& q);

    Scalar(const Scalar& other) : num_(other.num_), den_(other.den_) {
        if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
    }
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& other) {
        if (this != &other) {
            num_ = other.num_;
            den_ = other.den_;
            big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
        }
        return *this;
    }
    Scalar& operator=(Scalar&&) noexcept = default;

    /// Parses "p/q" or "p" (optional leading sign, decimal digits).
    static Scalar parse(std::string_view text);

    /// "p/q", with "/q" omitted when q = 1.
    std::string str() const;

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    int sign() const noexcept;
    bool is_small() const noexcept { return !big_; }

    mpq_class to_mpq() const;
    double to_double() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    /// this += a * b without a temporary in the common small case.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

  private:
    void fix_min();
    void assign(__int128 num, __int128 den);
    void assign_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

} // namespace mrb
