#include "pt/gauss_rational.hpp"

#include <boost/functional/hash.hpp>

#include <cctype>

namespace pt {

GaussRational GaussRational::i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussRational(1);
        case 1: return i();
        case 2: return GaussRational(-1);
        default: return -i();
    }
}

bool GaussRational::is_integer() const {
    return im_ == 0 && boost::multiprecision::denominator(re_) == 1;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational GaussRational::inv() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    Rational n = norm2();
    return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    return *this *= o.inv();
}

GaussRational GaussRational::pow(long long k) const {
    if (k < 0) return inv().pow(-k);
    GaussRational acc(1);
    GaussRational base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string rational_to_string(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (boost::multiprecision::denominator(q) != 1)
        s += "/" + boost::multiprecision::denominator(q).str();
    return s;
}

Rational rational_from_string(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        if (den == 0) throw ArithmeticError("rational with zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ArithmeticError("bad rational literal: \"" + std::string(s) + "\"");
    }
}

std::string GaussRational::to_string() const {
    auto imag_part = [&](bool leading) {
        std::string sign;
        Rational mag = im_;
        if (im_ < 0) {
            sign = "-";
            mag = -im_;
        } else if (!leading) {
            sign = "+";
        }
        if (mag == 1) return sign + "i";
        return sign + rational_to_string(mag) + "*i";
    };
    if (im_ == 0) return rational_to_string(re_);
    if (re_ == 0) return imag_part(true);
    return rational_to_string(re_) + imag_part(false);
}

namespace {

// One real rational with optional sign, e.g. "-3/4" or "12".
Rational parse_signed_rational(std::string_view s) {
    if (s.empty()) throw ArithmeticError("empty rational literal");
    return rational_from_string(s);
}

}  // namespace

GaussRational GaussRational::from_string(std::string_view input) {
    std::string s;
    s.reserve(input.size());
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ArithmeticError("empty complex literal");

    // Split at the last top-level +/- that is not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }

    auto parse_component = [](std::string_view part, Rational& re_acc, Rational& im_acc) {
        bool neg = false;
        if (!part.empty() && (part[0] == '+' || part[0] == '-')) {
            neg = part[0] == '-';
            part.remove_prefix(1);
        }
        bool imag = false;
        std::string digits;
        if (part == "i") {
            imag = true;
            digits = "1";
        } else if (part.size() >= 2 && part.substr(part.size() - 2) == "*i") {
            imag = true;
            digits = std::string(part.substr(0, part.size() - 2));
        } else if (part.size() >= 2 && part.substr(0, 2) == "i/") {
            imag = true;  // "i/2" style
            digits = "1/" + std::string(part.substr(2));
        } else {
            digits = std::string(part);
        }
        Rational v = parse_signed_rational(digits);
        if (neg) v = -v;
        (imag ? im_acc : re_acc) += v;
    };

    Rational re_acc{0};
    Rational im_acc{0};
    if (split == std::string::npos) {
        parse_component(s, re_acc, im_acc);
    } else {
        parse_component(std::string_view(s).substr(0, split), re_acc, im_acc);
        parse_component(std::string_view(s).substr(split), re_acc, im_acc);
    }
    return {re_acc, im_acc};
}

std::size_t GaussRational::hash() const {
    std::size_t seed = 0;
    boost::hash_combine(seed, std::hash<std::string>{}(rational_to_string(re_)));
    boost::hash_combine(seed, std::hash<std::string>{}(rational_to_string(im_)));
    return seed;
}

}  // namespace pt
