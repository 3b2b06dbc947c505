#include "goss/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace goss {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

constexpr uint32_t kMaxQ = 1u << 20;        // construction guard
constexpr uint32_t kTableQ = 2048;          // full op tables below this

std::mutex registry_mutex;
std::map<std::pair<uint32_t, uint32_t>, FieldSpec*>& registry() {
    static std::map<std::pair<uint32_t, uint32_t>, FieldSpec*> r;
    return r;
}

// --- raw polynomial helpers over F_p, coefficients as uint32 mod p ---

using PVec = std::vector<uint32_t>;

void pv_normalize(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pv_mul_mod(const PVec& a, const PVec& b, const PVec& f, uint32_t p) {
    // f monic of degree m; result reduced mod f
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    size_t m = f.size() - 1;
    for (size_t d = c.size(); d-- > m;) {
        uint32_t t = c[d];
        if (!t) continue;
        c[d] = 0;
        for (size_t i = 0; i < m; ++i)
            c[d - m + i] = (c[d - m + i] + (uint64_t)t * (p - f[i] % p)) % p;
    }
    c.resize(std::min(c.size(), m));
    pv_normalize(c);
    return c;
}

PVec pv_pow_mod(PVec base, uint64_t e, const PVec& f, uint32_t p) {
    PVec r = {1};
    while (e) {
        if (e & 1) r = pv_mul_mod(r, base, f, p);
        base = pv_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PVec pv_gcd(PVec a, PVec b, uint32_t p) {
    pv_normalize(a);
    pv_normalize(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        uint32_t lead = b.back();
        uint32_t linv = 1;
        for (uint32_t t = 1; t < p; ++t)
            if ((uint64_t)t * lead % p == 1) { linv = t; break; }
        PVec bm = b;
        for (auto& c : bm) c = (uint64_t)c * linv % p;
        PVec r = a;
        while (r.size() >= bm.size() && !r.empty()) {
            uint32_t t = r.back();
            if (t) {
                size_t off = r.size() - bm.size();
                for (size_t i = 0; i < bm.size(); ++i)
                    r[off + i] = (r[off + i] + (uint64_t)t * (p - bm[i])) % p;
            }
            pv_normalize(r);
            if (r.size() < bm.size()) break;
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        pv_normalize(r);
        a = b;
        b = r;
    }
    return a;
}

bool pv_irreducible(const PVec& f, uint32_t p) {
    // Rabin test: x^{p^m} == x mod f, and gcd(x^{p^{m/l}} - x, f) = 1 for primes l | m
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    PVec x = {0, 1};
    PVec t = x;
    std::vector<size_t> prime_divs;
    {
        size_t mm = m;
        for (size_t d = 2; d * d <= mm; ++d)
            if (mm % d == 0) {
                prime_divs.push_back(d);
                while (mm % d == 0) mm /= d;
            }
        if (mm > 1) prime_divs.push_back(mm);
    }
    // iterated p-power: after k steps t = x^{p^k} mod f
    std::vector<PVec> powers(m + 1);
    powers[0] = x;
    for (size_t k = 1; k <= m; ++k)
        powers[k] = pv_pow_mod(powers[k - 1], p, f, p);
    if (powers[m] != x) return false;
    for (size_t l : prime_divs) {
        PVec d = powers[m / l];
        // d - x
        PVec diff = d;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        pv_normalize(diff);
        PVec g = pv_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

// --- FieldSpec ---

FieldSpec::FieldSpec(uint32_t p, uint32_t m) : p_(p), m_(m) {
    if (!is_prime_u32(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field size p^m exceeds the desk-scale limit");
    }
    q_ = static_cast<uint32_t>(q);

    // smallest monic irreducible, scanning constant-term-first
    modulus_.assign(m + 1, 0);
    modulus_[m] = 1;
    for (uint32_t c = 0; c < q_; ++c) {
        PVec cand(m + 1, 0);
        uint32_t t = c;
        for (uint32_t i = 0; i < m; ++i) { cand[i] = t % p; t /= p; }
        cand[m] = 1;
        if (pv_irreducible(cand, p)) {
            for (uint32_t i = 0; i <= m; ++i) modulus_[i] = cand[i];
            break;
        }
    }

    if (q_ <= kTableQ) {
        add_.resize((size_t)q_ * q_);
        mul_.resize((size_t)q_ * q_);
        neg_.resize(q_);
        inv_.resize(q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b) {
                add_[(size_t)a * q_ + b] = static_cast<uint16_t>(add_slow(a, b));
                mul_[(size_t)a * q_ + b] = static_cast<uint16_t>(mul_slow(a, b));
            }
        for (uint32_t a = 0; a < q_; ++a) {
            for (uint32_t b = 0; b < q_; ++b)
                if (add_[(size_t)a * q_ + b] == 0) { neg_[a] = static_cast<uint16_t>(b); break; }
            inv_[a] = 0;
            if (a) {
                for (uint32_t b = 1; b < q_; ++b)
                    if (mul_[(size_t)a * q_ + b] == 1) { inv_[a] = static_cast<uint16_t>(b); break; }
            }
        }
    }
    frob_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) frob_[a] = static_cast<uint16_t>(pow(a, p_));
}

const FieldSpec* FieldSpec::get(uint32_t p, uint32_t m) {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(p, m);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
    FieldSpec* f = new FieldSpec(p, m);
    registry()[key] = f;
    return f;
}

std::string FieldSpec::name() const {
    std::ostringstream os;
    os << "F_" << q_;
    return os.str();
}

uint32_t FieldSpec::add_slow(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_; b /= p_;
        r += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return r;
}

uint32_t FieldSpec::mul_slow(uint32_t a, uint32_t b) const {
    if (m_ == 1) return (uint32_t)((uint64_t)a * b % p_);
    PVec va(m_), vb(m_);
    for (uint32_t i = 0; i < m_; ++i) { va[i] = a % p_; a /= p_; }
    for (uint32_t i = 0; i < m_; ++i) { vb[i] = b % p_; b /= p_; }
    pv_normalize(va);
    pv_normalize(vb);
    PVec c = pv_mul_mod(va, vb, modulus_, p_);
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += (i < c.size() ? c[i] : 0) * mult;
        mult *= p_;
    }
    return r;
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
    if (m_ == 1) { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    if (!add_.empty()) return add_[(size_t)a * q_ + b];
    return add_slow(a, b);
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (m_ == 1) return a ? p_ - a : 0;
    if (!neg_.empty()) return neg_[a];
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % p_; a /= p_;
        r += (d ? p_ - d : 0) * mult;
        mult *= p_;
    }
    return r;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return (uint32_t)((uint64_t)a * b % p_);
    if (!mul_.empty()) return mul_[(size_t)a * q_ + b];
    return mul_slow(a, b);
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    if (!inv_.empty() && m_ > 1) return inv_[a];
    return pow(a, q_ - 2);
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    uint32_t base = a;
    if (a == 0) return e == 0 ? 1 : 0;
    e %= (q_ - 1);
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t FieldSpec::frob(uint32_t a) const { return frob_[a]; }

uint32_t FieldSpec::digit(uint32_t a, uint32_t i) const {
    for (uint32_t k = 0; k < i; ++k) a /= p_;
    return a % p_;
}

uint32_t FieldSpec::from_digits(const std::vector<uint32_t>& c) const {
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += (i < c.size() ? c[i] % p_ : 0) * mult;
        mult *= p_;
    }
    return r;
}

FieldElem frobenius_iter(const FieldElem& x, uint64_t k) {
    const FieldSpec* f = x.field();
    uint32_t v = x.idx();
    uint64_t kk = k % f->m();  // x^{p^m} = x
    for (uint64_t i = 0; i < kk; ++i) v = f->frob(v);
    return {f, v};
}

std::vector<FieldElem> frobenius_orbit(const FieldElem& x) {
    std::vector<FieldElem> orbit;
    FieldElem cur = x;
    do {
        orbit.push_back(cur);
        cur = frobenius_iter(cur, 1);
    } while (cur != x);
    return orbit;
}

// --- Poly ---

Poly::Poly(const FieldSpec* f, std::vector<uint32_t> coeffs) : f_(f), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::x(const FieldSpec* f) { return Poly(f, {0, 1}); }
Poly Poly::constant(const FieldSpec* f, uint32_t c) { return Poly(f, {c}); }

Poly Poly::operator+(const Poly& o) const {
    if (f_ != o.f_) throw FieldMismatchError("polynomial addition across fields");
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    if (f_ != o.f_) throw FieldMismatchError("polynomial subtraction across fields");
    std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (f_ != o.f_) throw FieldMismatchError("polynomial multiplication across fields");
    if (is_zero() || o.is_zero()) return Poly(f_);
    std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j]) r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(r));
}

Poly Poly::mul_scalar(uint32_t s) const {
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], s);
    return Poly(f_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (!d.is_monic()) throw std::invalid_argument("divmod requires a monic divisor");
    if (degree() < d.degree()) return {Poly(f_), *this};
    std::vector<uint32_t> rem = c_;
    std::vector<uint32_t> quo(degree() - d.degree() + 1, 0);
    for (long k = degree(); k >= d.degree(); --k) {
        uint32_t t = rem[k];
        if (!t) continue;
        quo[k - d.degree()] = t;
        for (long i = 0; i <= d.degree(); ++i)
            rem[k - d.degree() + i] = f_->sub(rem[k - d.degree() + i], f_->mul(t, d.coeff(i)));
    }
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

uint32_t Poly::eval(uint32_t x_idx) const {
    uint32_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x_idx), c_[i]);
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i >= 1) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_pow_mod(const Poly& base, uint64_t e, const Poly& modulus) {
    Poly r = Poly::constant(base.field(), 1);
    Poly b = base.mod(modulus);
    while (e) {
        if (e & 1) r = (r * b).mod(modulus);
        b = (b * b).mod(modulus);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        uint32_t linv = b.field()->inv(b.coeffs().back());
        Poly bm = b.mul_scalar(linv);
        Poly r = a.mod(bm);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible(const Poly& f) {
    const FieldSpec* F = f.field();
    long m = f.degree();
    if (m <= 0) return false;
    if (m == 1) return true;
    if (!f.is_monic()) throw std::invalid_argument("irreducibility test expects a monic polynomial");
    Poly x = Poly::x(F);
    std::vector<Poly> powers;  // powers[k] = x^{q^k} mod f
    powers.push_back(x.mod(f));
    for (long k = 1; k <= m; ++k) powers.push_back(poly_pow_mod(powers.back(), F->q(), f));
    if (!(powers[m] == x.mod(f))) return false;
    std::vector<long> prime_divs;
    long mm = m;
    for (long d = 2; d * d <= mm; ++d)
        if (mm % d == 0) {
            prime_divs.push_back(d);
            while (mm % d == 0) mm /= d;
        }
    if (mm > 1) prime_divs.push_back(mm);
    for (long l : prime_divs) {
        Poly diff = powers[m / l] - x;
        if (poly_gcd(f, diff).degree() != 0) return false;
    }
    return true;
}

std::vector<uint32_t> poly_roots(const Poly& f) {
    std::vector<uint32_t> roots;
    for (uint32_t a = 0; a < f.field()->q(); ++a)
        if (f.eval(a) == 0) roots.push_back(a);
    return roots;
}

MonicRange::MonicRange(const FieldSpec* f, uint32_t d) : f_(f), d_(d), at_(0) {
    total_ = 1;
    for (uint32_t i = 0; i < d; ++i) {
        total_ *= f->q();
        if (total_ > (1ull << 40)) throw BudgetError("monic enumeration beyond the resource guard");
    }
}

bool MonicRange::next(Poly& out) {
    if (at_ >= total_) return false;
    std::vector<uint32_t> c(d_ + 1, 0);
    uint64_t t = at_++;
    for (uint32_t i = 0; i < d_; ++i) {
        c[i] = static_cast<uint32_t>(t % f_->q());
        t /= f_->q();
    }
    c[d_] = 1;
    out = Poly(f_, std::move(c));
    return true;
}

FieldElem embed(const FieldElem& x, const FieldSpec* big) {
    const FieldSpec* small = x.field();
    if (small == big) return x;
    if (small->p() != big->p() || big->m() % small->m() != 0)
        throw std::invalid_argument("no embedding: target is not an extension of the source field");
    static std::mutex m;
    static std::map<std::pair<const FieldSpec*, const FieldSpec*>, uint32_t> root_of;
    uint32_t root;
    {
        std::lock_guard<std::mutex> lock(m);
        auto key = std::make_pair(small, big);
        auto it = root_of.find(key);
        if (it != root_of.end()) {
            root = it->second;
        } else {
            root = big->q();
            for (uint32_t a = 0; a < big->q(); ++a) {
                // evaluate the small modulus at a, coefficients as prime-field constants
                uint32_t acc = 0;
                const auto& md = small->modulus();
                for (size_t i = md.size(); i-- > 0;) acc = big->add(big->mul(acc, a), md[i]);
                if (acc == 0) { root = a; break; }
            }
            if (root == big->q()) throw std::logic_error("modulus has no root in the extension field");
            root_of[key] = root;
        }
    }
    // evaluate the digit vector of x at the chosen root
    uint32_t v = x.idx();
    uint32_t acc = 0, rp = 1;
    for (uint32_t i = 0; i < small->m(); ++i) {
        uint32_t d = v % small->p();
        v /= small->p();
        acc = big->add(acc, big->mul(d, rp));
        rp = big->mul(rp, root);
    }
    return {big, acc};
}

}  // namespace goss
