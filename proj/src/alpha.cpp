#include "sturmlab/alpha.hpp"

#include <cmath>
#include <sstream>

namespace sturmlab {

namespace {

long long isqrt_ll(long long v) {
    if (v < 0) throw ConfigError("negative radicand");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

std::vector<long long> split_ints(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

}  // namespace

std::shared_ptr<const AlphaSpec> AlphaSpec::parse(const std::string& s) {
    if (s == "gold2") return surd(3, -1, 2, 5);
    if (s.rfind("surd:", 0) == 0) {
        auto v = split_ints(s.substr(5));
        if (v.size() != 4) throw ConfigError("surd preset needs a,b,c,d: " + s);
        return surd(v[0], v[1], v[2], v[3]);
    }
    if (s.rfind("cf:", 0) == 0) return continued_fraction(split_ints(s.substr(3)));
    return decimal(s);
}

std::shared_ptr<const AlphaSpec> AlphaSpec::surd(long long a, long long b, long long c,
                                                 long long d) {
    if (c == 0) throw ConfigError("surd with zero denominator");
    if (b == 0) throw ConfigError("surd with b = 0 is rational");
    long long r = isqrt_ll(d);
    if (r * r == d) throw ConfigError("surd with square radicand is rational");

    auto sp = std::shared_ptr<AlphaSpec>(new AlphaSpec());
    sp->kind_ = Kind::Surd;
    sp->desc_ = "surd:(" + std::to_string(a) + (b < 0 ? "" : "+") + std::to_string(b) +
                "*sqrt(" + std::to_string(d) + "))/" + std::to_string(c);
    // fold b into the radicand; flip signs so the form is (P + sqrt(D))/Q
    __int128 D = static_cast<__int128>(b) * b * d;
    long long P = a, Q = c;
    if (b < 0) { P = -a; Q = -c; }
    // enforce Q | (D - P^2)
    __int128 num = D - static_cast<__int128>(P) * P;
    if (num % Q != 0) {
        P = Rational::checked(static_cast<__int128>(P) * (Q < 0 ? -Q : Q));
        D = D * Q * Q;
        Q = Rational::checked(static_cast<__int128>(Q) * (Q < 0 ? -Q : Q));
    }
    sp->P_ = P;
    sp->D_ = Rational::checked(D);
    sp->Q_ = Q;
    sp->validate_range();
    return sp;
}

std::shared_ptr<const AlphaSpec> AlphaSpec::continued_fraction(std::vector<long long> digits) {
    if (digits.empty()) throw ConfigError("empty continued fraction");
    for (size_t i = 1; i < digits.size(); ++i)
        if (digits[i] < 1) throw ConfigError("continued-fraction quotients must be >= 1");
    if (digits.size() == 1 && digits[0] == 0)
        throw ConfigError("cf:0 alone does not define an irrational");
    auto sp = std::shared_ptr<AlphaSpec>(new AlphaSpec());
    sp->kind_ = Kind::ContinuedFraction;
    std::string d = "cf:";
    for (size_t i = 0; i < digits.size(); ++i) d += (i ? "," : "") + std::to_string(digits[i]);
    sp->desc_ = d;
    sp->digits_ = std::move(digits);
    sp->validate_range();
    return sp;
}

std::shared_ptr<const AlphaSpec> AlphaSpec::decimal(const std::string& literal) {
    auto sp = std::shared_ptr<AlphaSpec>(new AlphaSpec());
    sp->kind_ = Kind::Decimal;
    sp->desc_ = "decimal:" + literal + " (unsafe: rational)";
    sp->literal_ = literal;
    sp->validate_range();
    return sp;
}

void AlphaSpec::validate_range() const {
    BallReal a = realize(96);
    if (compare(a, BallReal::from_long(0, 64)) != Ordering::Greater ||
        compare(a, BallReal::from_long(1, 64)) != Ordering::Less)
        throw ConfigError("alpha must lie strictly in (0,1): " + desc_);
}

BallReal AlphaSpec::realize(long prec) const {
    switch (kind_) {
        case Kind::Surd: {
            BallReal s = BallReal::sqrt_long(D_, prec + 16);
            BallReal n = add_long(s, P_);
            return div_long(n, Q_).round_to(prec);
        }
        case Kind::ContinuedFraction: {
            long p = prec + 32;
            // closed form of the repeating tail [a; a, a, ...]
            long long a = digits_.back();
            BallReal x = div_long(
                add_long(BallReal::sqrt_long(a * a + 4, p), a), 2);
            for (size_t i = digits_.size() - 1; i-- > 0;) {
                BallReal one = BallReal::from_long(1, p);
                x = add_long(div(one, x), digits_[i]);
            }
            return x.round_to(prec);
        }
        case Kind::Decimal:
            return BallReal::from_decimal(literal_, prec);
    }
    throw ConfigError("bad alpha kind");
}

std::vector<long long> AlphaSpec::cf_digits(int count) const {
    std::vector<long long> out;
    if (kind_ == Kind::Decimal)
        throw ConfigError("continued-fraction digits unavailable for decimal alpha");
    if (kind_ == Kind::ContinuedFraction) {
        for (int i = 0; i < count; ++i)
            out.push_back(i < static_cast<int>(digits_.size()) ? digits_[i] : digits_.back());
        return out;
    }
    // periodic algorithm for quadratic irrationals
    long long P = P_, Q = Q_, D = D_;
    long long r = isqrt_ll(D);
    for (int i = 0; i < count; ++i) {
        long long a = Q > 0 ? floor_div(P + r, Q) : floor_div(P + r + 1, Q);
        out.push_back(a);
        long long Pn = Rational::checked(static_cast<__int128>(a) * Q - P);
        __int128 qn = (static_cast<__int128>(D) - static_cast<__int128>(Pn) * Pn) / Q;
        P = Pn;
        Q = Rational::checked(qn);
        if (Q == 0) throw ConfigError("rational surd in cf_digits");
    }
    return out;
}

std::vector<Rational> AlphaSpec::convergents(long long max_q) const {
    auto digits = cf_digits(160);
    std::vector<Rational> out;
    long long pm1 = 1, qm1 = 0;  // p_{-1}/q_{-1}
    long long p = digits[0], q = 1;
    if (q <= max_q) out.emplace_back(p, q);
    for (size_t j = 1; j < digits.size(); ++j) {
        __int128 pn = static_cast<__int128>(digits[j]) * p + pm1;
        __int128 qn = static_cast<__int128>(digits[j]) * q + qm1;
        if (qn > max_q) break;
        pm1 = p;
        qm1 = q;
        p = Rational::checked(pn);
        q = Rational::checked(qn);
        out.emplace_back(p, q);
    }
    return out;
}

}  // namespace sturmlab
