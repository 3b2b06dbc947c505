#include "goss/padic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace goss {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t inv_mod_p(const BigInt& a, uint32_t p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    uint32_t ar = r.convert_to<uint32_t>();
    if (ar == 0) throw std::invalid_argument("not invertible mod p");
    uint32_t x = 1;
    for (uint32_t t = 1; t < p; ++t)
        if ((uint64_t)t * ar % p == 1) { x = t; break; }
    return x;
}

}  // namespace

PadicExponent PadicExponent::from_integer(uint32_t p, const BigInt& v) {
    return from_ratio(p, v, 1);
}

PadicExponent PadicExponent::from_ratio(uint32_t p, BigInt num, BigInt den) {
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { den = -den; num = -num; }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (den % p == 0) throw std::invalid_argument("denominator divisible by p: not a p-adic integer");
    PadicExponent y;
    y.p_ = p;
    y.tagged_ = true;
    y.num_ = std::move(num);
    y.den_ = std::move(den);
    return y;
}

PadicExponent PadicExponent::from_digits(uint32_t p, std::vector<uint8_t> digits) {
    if (!is_prime_u32(p)) throw std::invalid_argument("p must be prime");
    for (uint8_t d : digits)
        if (d >= p) throw std::invalid_argument("digit out of range [0,p)");
    PadicExponent y;
    y.p_ = p;
    y.tagged_ = false;
    y.digits_ = std::move(digits);
    return y;
}

PadicExponent PadicExponent::parse(uint32_t p, const std::string& text) {
    if (text.rfind("digits:", 0) == 0) {
        size_t c1 = text.find(':', 7);
        if (c1 == std::string::npos) throw std::invalid_argument("digits form is digits:p:d0,d1,...");
        uint32_t pp = static_cast<uint32_t>(std::stoul(text.substr(7, c1 - 7)));
        if (pp != p) throw std::invalid_argument("digit list declares a different p");
        std::vector<uint8_t> ds;
        std::string rest = text.substr(c1 + 1);
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) ds.push_back(static_cast<uint8_t>(std::stoul(tok)));
        return from_digits(p, std::move(ds));
    }
    if (text.rfind("ratio:", 0) == 0) {
        std::string rest = text.substr(6);
        size_t slash = rest.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("ratio form is ratio:a/c");
        return from_ratio(p, BigInt(rest.substr(0, slash)), BigInt(rest.substr(slash + 1)));
    }
    return from_integer(p, BigInt(text));
}

BigRat PadicExponent::value() const {
    if (!tagged_) throw std::logic_error("digit-list exponent has no exact value");
    return BigRat(num_, den_);
}

size_t PadicExponent::available_digits() const {
    return tagged_ ? static_cast<size_t>(-1) : digits_.size();
}

uint8_t PadicExponent::digit(size_t k) const {
    if (!tagged_) {
        if (k >= digits_.size())
            throw PrecisionError("p-adic digit " + std::to_string(k) + " beyond stored precision " +
                                     std::to_string(digits_.size()),
                                 static_cast<long>(k + 1));
        return digits_[k];
    }
    return digits(k + 1)[k];
}

std::vector<uint8_t> PadicExponent::digits(size_t count) const {
    if (!tagged_) {
        if (count > digits_.size())
            throw PrecisionError("requested " + std::to_string(count) + " digits, have " +
                                     std::to_string(digits_.size()),
                                 static_cast<long>(count));
        return std::vector<uint8_t>(digits_.begin(), digits_.begin() + count);
    }
    std::vector<uint8_t> out;
    out.reserve(count);
    uint32_t dinv = inv_mod_p(den_, p_);
    BigInt r = num_;
    for (size_t k = 0; k < count; ++k) {
        BigInt rm = r % p_;
        if (rm < 0) rm += p_;
        uint32_t d = (rm.convert_to<uint64_t>() * dinv) % p_;
        out.push_back(static_cast<uint8_t>(d));
        r = (r - BigInt(d) * den_) / p_;
    }
    return out;
}

std::pair<size_t, size_t> PadicExponent::digit_periodicity() const {
    if (!tagged_) throw std::logic_error("periodicity needs an exact tag");
    uint32_t dinv = inv_mod_p(den_, p_);
    BigInt r = num_;
    std::map<BigInt, size_t> seen;
    size_t k = 0;
    while (true) {
        auto it = seen.find(r);
        if (it != seen.end()) return {it->second, k - it->second};
        seen[r] = k;
        BigInt rm = r % p_;
        if (rm < 0) rm += p_;
        uint32_t d = (rm.convert_to<uint64_t>() * dinv) % p_;
        r = (r - BigInt(d) * den_) / p_;
        ++k;
    }
}

bool PadicExponent::is_zero() const {
    if (tagged_) return num_ == 0;
    return std::all_of(digits_.begin(), digits_.end(), [](uint8_t d) { return d == 0; });
}

std::string PadicExponent::descriptor() const {
    std::ostringstream os;
    if (tagged_) {
        if (den_ == 1) os << num_;
        else os << "ratio:" << num_ << "/" << den_;
    } else {
        os << "digits:" << p_ << ":";
        for (size_t i = 0; i < digits_.size(); ++i) {
            if (i) os << ",";
            os << static_cast<int>(digits_[i]);
        }
    }
    return os.str();
}

// --- DigitProfile ---

DigitProfile::DigitProfile(PadicExponent y, uint32_t b, uint32_t J) : y_(std::move(y)), p_(y_.p()), b_(b), J_(J) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    if (J < 1) throw std::invalid_argument("digit precision J must be >= 1");
    q_ = 1;
    for (uint32_t i = 0; i < b; ++i) {
        q_ *= p_;
        if (q_ > (1ull << 40)) throw std::invalid_argument("q = p^b exceeds the desk-scale limit");
    }
    size_t need = static_cast<size_t>(b) * J;
    if (y_.available_digits() < need)
        throw PrecisionError("decomposition needs " + std::to_string(need) + " base-p digits, have " +
                                 std::to_string(y_.available_digits()),
                             static_cast<long>(need));
    std::vector<uint8_t> ds = y_.digits(need);
    comp_.assign(b, std::vector<uint8_t>(J, 0));
    for (uint32_t j = 0; j < J; ++j)
        for (uint32_t i = 0; i < b; ++i) comp_[i][j] = ds[i + static_cast<size_t>(b) * j];

    kind_.assign(b, ComponentKind::Unknown);
    certified_.assign(b, 0);
    for (uint32_t i = 0; i < b; ++i) {
        long s = 0;
        for (uint32_t j = 0; j < J; ++j) s += comp_[i][j];
        certified_[i] = s;
    }

    if (y_.tagged()) {
        // classify each component exactly via the eventually periodic digit stream
        auto [T, L] = y_.digit_periodicity();
        size_t Lb = std::lcm(L == 0 ? size_t(1) : L, static_cast<size_t>(b));
        size_t total = T + 2 * Lb + static_cast<size_t>(b);
        std::vector<uint8_t> all = y_.digits(total);
        BigRat qr(BigInt(q_), 1);
        for (uint32_t i = 0; i < b; ++i) {
            // component digit stream: positions i, i+b, i+2b, ...
            size_t Tc = (T <= i) ? 0 : (T - i + b - 1) / b;
            size_t Lc = Lb / b;
            BigRat val(0);
            BigRat qp(1);
            for (size_t j = 0; j < Tc; ++j) {
                val += qp * all[i + b * j];
                qp *= qr;
            }
            BigRat blockval(0);
            BigRat bq(1);
            bool block_zero = true;
            for (size_t j = 0; j < Lc; ++j) {
                uint8_t dd = all[i + b * (Tc + j)];
                if (dd) block_zero = false;
                blockval += bq * dd;
                bq *= qr;
            }
            // qp = q^{Tc}; periodic tail = qp * blockval / (1 - q^{Lc})
            if (!block_zero) {
                BigRat denom = BigRat(1) - bq;  // bq = q^{Lc}
                val += qp * blockval / denom;
                kind_[i] = ComponentKind::Full;
            } else {
                kind_[i] = (val == 0) ? ComponentKind::Zero : ComponentKind::PositiveInteger;
                if (val != 0 && (boost::multiprecision::denominator(val) != 1 || val < 0))
                    throw std::logic_error("zero digit tail must mean a non-negative integer component");
            }
        }
    }

    // prefix tables
    prefix_d_.assign(b, {});
    prefix_y_.assign(b, {});
    for (uint32_t i = 0; i < b; ++i) {
        long total = certified_[i];
        prefix_d_[i].reserve(total);
        prefix_y_[i].reserve(total + 1);
        prefix_y_[i].push_back(0);
        BigInt pw = boost::multiprecision::pow(BigInt(p_), i);  // p^i * q^w with w starting 0
        for (uint32_t j = 0; j < J; ++j) {
            for (uint8_t rep = 0; rep < comp_[i][j]; ++rep) {
                prefix_d_[i].push_back(pw);
                prefix_y_[i].push_back(prefix_y_[i].back() + pw);
            }
            pw *= q_;
        }
    }
}

DigitProfile DigitProfile::certified(const PadicExponent& y, uint32_t b, long n_need) {
    if (!y.tagged()) {
        uint32_t J = static_cast<uint32_t>(std::max<size_t>(1, y.available_digits() / b));
        DigitProfile pr(y, b, J);
        if (pr.degenerate()) return pr;  // vacuous profile; callers check
        for (uint32_t i = 0; i < b; ++i)
            if (pr.certified_n(i) < n_need)
                throw PrecisionError("digit-list input certifies component " + std::to_string(i + 1) +
                                         " only through n = " + std::to_string(pr.certified_n(i)) +
                                         ", need " + std::to_string(n_need),
                                     n_need);
        return pr;
    }
    uint32_t J = static_cast<uint32_t>(std::max<long>(8, n_need));
    const uint32_t Jmax = 1u << 22;
    while (true) {
        DigitProfile pr(y, b, J);
        bool ok = true;
        for (uint32_t i = 0; i < b; ++i) {
            if (pr.kind(i) == ComponentKind::Zero || pr.kind(i) == ComponentKind::PositiveInteger) continue;
            if (pr.certified_n(i) < n_need) { ok = false; break; }
        }
        if (ok) return pr;
        if (J >= Jmax)
            throw PrecisionError("digit expansion did not certify n = " + std::to_string(n_need) +
                                     " within the precision cap",
                                 n_need);
        J *= 2;
    }
}

void DigitProfile::check_component(uint32_t i) const {
    if (i >= b_) throw std::out_of_range("component index out of range");
}

bool DigitProfile::degenerate() const {
    for (uint32_t i = 0; i < b_; ++i) {
        if (kind_[i] == ComponentKind::Zero) return true;
        if (kind_[i] == ComponentKind::Unknown && certified_[i] == 0) return true;
    }
    return false;
}

QFullReport DigitProfile::q_full() const {
    if (y_.tagged()) {
        bool v = true;
        for (uint32_t i = 0; i < b_; ++i)
            if (kind_[i] != ComponentKind::Full) v = false;
        return {v, false};
    }
    // within precision: a component whose stored digits end in zero (or are all
    // zero) looks eventually zero; either verdict can flip on unseen digits
    bool v = true;
    for (uint32_t i = 0; i < b_; ++i) {
        const auto& cd = comp_[i];
        if (cd.empty() || cd.back() == 0) v = false;
    }
    return {v, true};
}

std::optional<long> DigitProfile::support_end(uint32_t i) const {
    check_component(i);
    if (kind_[i] == ComponentKind::PositiveInteger || kind_[i] == ComponentKind::Zero)
        return certified_[i];
    return std::nullopt;
}

std::optional<BigInt> DigitProfile::d_opt(uint32_t i, long n) const {
    check_component(i);
    if (n < 1) return BigInt(0);
    if (kind_[i] == ComponentKind::Zero) return BigInt(0);  // degenerate convention
    if (n <= certified_[i]) return prefix_d_[i][static_cast<size_t>(n - 1)];
    if (kind_[i] == ComponentKind::PositiveInteger) return std::nullopt;  // provably exhausted
    throw PrecisionError("d_" + std::to_string(i + 1) + "(" + std::to_string(n) +
                             ") beyond certified range " + std::to_string(certified_[i]),
                         n);
}

BigInt DigitProfile::d(uint32_t i, long n) const {
    auto v = d_opt(i, n);
    if (!v) throw PrecisionError("digit sequence exhausted: d_" + std::to_string(i + 1) + "(" +
                                     std::to_string(n) + ") past the finite support " +
                                     std::to_string(certified_[i]),
                                 n);
    return *v;
}

std::optional<BigInt> DigitProfile::y_partial_opt(uint32_t i, long m) const {
    check_component(i);
    if (m < 1) return BigInt(0);
    if (kind_[i] == ComponentKind::Zero) return BigInt(0);
    if (m <= certified_[i]) return prefix_y_[i][static_cast<size_t>(m)];
    if (kind_[i] == ComponentKind::PositiveInteger) return std::nullopt;
    throw PrecisionError("y_" + std::to_string(i + 1) + "(" + std::to_string(m) +
                             ") beyond certified range " + std::to_string(certified_[i]),
                         m);
}

BigInt DigitProfile::y_partial(uint32_t i, long m) const {
    auto v = y_partial_opt(i, m);
    if (!v) throw PrecisionError("digit sequence exhausted: y_" + std::to_string(i + 1) + "(" +
                                     std::to_string(m) + ") past the finite support " +
                                     std::to_string(certified_[i]),
                                 m);
    return *v;
}

std::optional<BigInt> DigitProfile::y_window_opt(uint32_t i, long m, long k) const {
    auto a = y_partial_opt(i, m + k);
    auto b = y_partial_opt(i, m);
    if (!a || !b) return std::nullopt;
    return *a - *b;
}

BigInt DigitProfile::y_window(uint32_t i, long m, long k) const {
    return y_partial(i, m + k) - y_partial(i, m);
}

BigInt DigitProfile::reconstruct() const {
    BigInt total = 0;
    for (uint32_t i = 0; i < b_; ++i) {
        BigInt comp = 0;
        BigInt qp = 1;
        for (uint32_t j = 0; j < J_; ++j) {
            comp += qp * comp_[i][j];
            qp *= q_;
        }
        total += boost::multiprecision::pow(BigInt(p_), i) * comp;
    }
    return total;
}

}  // namespace goss
