#include "mrb/scalar.hpp"

#include "mrb/error.hpp"

#include <cctype>
#include <limits>

namespace mrb {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        std::uint64_t x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
        while (y != 0) {
            std::uint64_t t = x % y;
            x = y;
            y = t;
        }
        return x;
    }
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t uabs(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 m = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits_small(i128 v) { return v > -static_cast<i128>(kMax) - 1 && v <= kMax; }

} // namespace

Scalar::Scalar(long long num, long long den) {
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    assign(num, den);
}

Scalar::Scalar(const mpq_class& q) { assign_big(q); }

void Scalar::fix_min() {
    if (num_ == std::numeric_limits<std::int64_t>::min()) {
        mpq_class q(mpz_class(static_cast<long>(num_)));
        num_ = 0;
        assign_big(std::move(q));
    }
}

void Scalar::assign(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits_small(num) && den <= kMax) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Scalar::assign_big(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    if (big_)
        *big_ = std::move(q);
    else
        big_ = std::make_unique<mpq_class>(std::move(q));
}

Scalar Scalar::parse(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    std::string normalized(text);
    if (!normalized.empty() && normalized.front() == '+') normalized.erase(0, 1);
    mpq_class q;
    if (q.set_str(normalized, 10) != 0)
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Scalar(q);
}

std::string Scalar::str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

int Scalar::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Scalar::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Scalar Scalar::operator-() const {
    Scalar r;
    if (big_)
        r.assign_big(-*big_);
    else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, rhs.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
                num_ = s;
                return *this;
            }
        }
        assign(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
               static_cast<i128>(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t s;
            if (!__builtin_sub_overflow(num_, rhs.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
                num_ = s;
                return *this;
            }
        }
        assign(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
               static_cast<i128>(den_) * rhs.den_);
        return *this;
    }
    assign_big(to_mpq() - rhs.to_mpq());
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (!big_ && !rhs.big_) {
        if (num_ == 0 || rhs.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        std::uint64_t g1 = gcd64(uabs(num_), static_cast<std::uint64_t>(rhs.den_));
        std::uint64_t g2 = gcd64(uabs(rhs.num_), static_cast<std::uint64_t>(den_));
        i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (rhs.num_ / static_cast<std::int64_t>(g2));
        i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (rhs.den_ / static_cast<std::int64_t>(g1));
        if (fits_small(n) && d <= kMax) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign(n, d);
        return *this;
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::ShapeMismatch, "division by zero");
    if (!big_ && !rhs.big_) {
        assign(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
        return *this;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t p, s;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_add_overflow(num_, p, &s) &&
            s != std::numeric_limits<std::int64_t>::min()) {
            num_ = s;
            return;
        }
    }
    *this += a * b;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // a promoted value never equals an inline one
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (!a.big_ && !b.big_) {
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::LabelSetMismatch: return "LabelSetMismatch";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::InputNotRotaBaxter: return "InputNotRotaBaxter";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::AybeFails: return "AybeFails";
    case ErrorKind::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorKind::MultiLabelNotSupported: return "MultiLabelNotSupported";
    case ErrorKind::MrrbaFails: return "MrrbaFails";
    case ErrorKind::MdaFails: return "MdaFails";
    case ErrorKind::NotMdaMorphism: return "NotMdaMorphism";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotMaurerCartan: return "NotMaurerCartan";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::NotAdjoint: return "NotAdjoint";
    case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorKind::DeformationInvalid: return "DeformationInvalid";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InputFails: return "InputFails";
    case ErrorKind::UnknownTarget: return "UnknownTarget";
    case ErrorKind::UnknownChecker: return "UnknownChecker";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    }
    return "Error";
}

} // namespace mrb
