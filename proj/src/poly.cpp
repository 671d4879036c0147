#include "treenergy/poly.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace treenergy {

X2Poly::X2Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

X2Poly X2Poly::monomial(int k, BigInt c) {
    if (k < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = std::move(c);
    return X2Poly(std::move(v));
}

const BigInt& X2Poly::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

void X2Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

X2Poly& X2Poly::operator+=(const X2Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

X2Poly& X2Poly::operator-=(const X2Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

X2Poly& X2Poly::operator*=(const X2Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

X2Poly& X2Poly::operator*=(const BigInt& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
}

X2Poly X2Poly::shifted_x2(int k) const {
    if (k < 0) throw std::invalid_argument("shift must be >= 0");
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> out(c_.size() + k, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return X2Poly(std::move(out));
}

X2Poly X2Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow exponent must be >= 0");
    X2Poly result = X2Poly::one();
    X2Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

ScaledReal X2Poly::eval_scaled(double x) const {
    return ScaledPolyEval(*this).eval(x);
}

std::vector<std::string> X2Poly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.get_str());
    return out;
}

X2Poly X2Poly::from_coeff_strings(const std::vector<std::string>& s) {
    std::vector<BigInt> c;
    c.reserve(s.size());
    for (const auto& str : s) {
        mpz_class v;
        if (v.set_str(str, 10) != 0)
            throw std::invalid_argument("bad integer literal: " + str);
        c.push_back(std::move(v));
    }
    return X2Poly(std::move(c));
}

std::string MatchingPolynomial::to_json() const {
    nlohmann::json j;
    j["n"] = order;
    auto strings = poly.coeff_strings();
    // fixed length floor(n/2)+1; trailing zeros mean no near-perfect matching
    if (order >= 0)
        while (static_cast<int>(strings.size()) < order / 2 + 1) strings.push_back("0");
    j["coeffs"] = std::move(strings);
    return j.dump();
}

MatchingPolynomial MatchingPolynomial::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    MatchingPolynomial p;
    p.order = j.at("n").get<int>();
    p.poly = X2Poly::from_coeff_strings(j.at("coeffs").get<std::vector<std::string>>());
    return p;
}

MatchingPolynomial path_mplus(int t) {
    if (t < -1) throw std::invalid_argument("path_mplus needs t >= -1");
    if (t == -1) return {-1, X2Poly{}};
    X2Poly prev2;                   // m+(P_{-1}) = 0
    X2Poly prev = X2Poly::one();    // m+(P_0) = 1
    if (t == 0) return {0, prev};
    for (int k = 1; k <= t; ++k) {
        X2Poly cur = prev + prev2.shifted_x2();
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return {t, prev};
}

ScaledReal eval_mplus(const MatchingPolynomial& p, double x) {
    if (x < 0) throw std::invalid_argument("eval_mplus needs x >= 0");
    return p.poly.eval_scaled(x);
}

ScaledPolyEval::ScaledPolyEval(const X2Poly& p) {
    terms_.reserve(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) {
        const BigInt& c = p.coeff(k);
        if (c == 0) {
            terms_.push_back(ScaledReal::zero());
            continue;
        }
        long exp = 0;
        double mant = mpz_get_d_2exp(&exp, c.get_mpz_t());
        terms_.push_back(ScaledReal::from_parts(mant, exp));
    }
}

ScaledReal ScaledPolyEval::eval(double x) const {
    if (terms_.empty()) return ScaledReal::zero();
    const ScaledReal y = ScaledReal::from_double(x * x);
    ScaledReal acc = terms_.back();
    for (int k = static_cast<int>(terms_.size()) - 2; k >= 0; --k)
        acc = acc * y + terms_[k];
    return acc;
}

double closed_form_path(int t, double x) {
    if (t < -1) throw std::invalid_argument("closed_form_path needs t >= -1");
    if (x <= 0) throw std::invalid_argument("closed_form_path needs x > 0");
    const double s = std::sqrt(1.0 + 4.0 * x * x);
    const double l1 = (1.0 + s) / 2.0;
    const double l2 = (1.0 - s) / 2.0;
    return (std::pow(l1, t + 1) - std::pow(l2, t + 1)) / s;
}

PathRatio path_ratio(int t, double x) {
    if (t < 4) throw std::invalid_argument("path_ratio needs t >= 4");
    if (x <= 0) throw std::invalid_argument("path_ratio needs x > 0");
    return {x, path_ratio_value(t, x)};
}

double path_ratio_value(int t, double x) {
    if (t < 3) throw std::invalid_argument("path_ratio_value needs t >= 3");
    const double x2 = x * x;
    double r = 0.0;  // m+(P_{-1}) / m+(P_0)
    for (int k = 1; k <= t - 3; ++k) r = 1.0 / (1.0 + x2 * r);
    return r;
}

}  // namespace treenergy
