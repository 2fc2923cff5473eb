#include "eostrata/finite_field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace eostrata {

bool is_prime(long long n)
{
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

struct Registry {
    std::mutex mutex;
    std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> fields;
    std::map<std::pair<const FiniteField*, const FiniteField*>, std::vector<FiniteField::Code>> embeddings;
};

Registry& registry()
{
    static Registry r;
    return r;
}

}  // namespace

const FiniteField& FiniteField::get(int p, int k)
{
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1) throw std::invalid_argument("field degree must be positive");
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds table ceiling");
    }
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.fields[{p, k}];
    if (!slot) slot.reset(new FiniteField(p, k));
    return *slot;
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k), q_(1)
{
    for (int i = 0; i < k; ++i) q_ *= static_cast<Code>(p);
    pow_p_.resize(k + 1);
    pow_p_[0] = 1;
    for (int i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * static_cast<Code>(p);

    exp_.assign(q_ - 1 + 1, 0);
    log_.assign(q_, 0);

    if (k == 1) {
        modulus_ = {0, 1};
        for (int g = 1; g < p; ++g) {
            Code cur = 1;
            bool ok = true;
            for (Code i = 0; i + 1 < q_; ++i) {
                if (i > 0 && cur == 1) {
                    ok = false;
                    break;
                }
                exp_[i] = cur;
                cur = static_cast<Code>((static_cast<std::uint64_t>(cur) * g) % p);
            }
            if (ok && cur == 1) {
                modulus_ = {(p - g) % p, 1};
                break;
            }
        }
    } else {
        std::vector<int> low(k, 0);
        bool found = false;
        for (Code c = 1; c < q_ && !found; ++c) {
            for (int i = 0; i < k; ++i) low[i] = static_cast<int>((c / pow_p_[i]) % p);
            if (low[0] == 0) continue;
            // multiply-by-X on digit vectors modulo X^k + sum low_i X^i
            std::vector<int> d(k, 0);
            d[0] = 1;
            bool ok = true;
            for (Code i = 0; i + 1 < q_; ++i) {
                Code code = 0;
                for (int j = 0; j < k; ++j) code += static_cast<Code>(d[j]) * pow_p_[j];
                if (i > 0 && code == 1) {
                    ok = false;
                    break;
                }
                exp_[i] = code;
                int top = d[k - 1];
                for (int j = k - 1; j > 0; --j) d[j] = d[j - 1];
                d[0] = 0;
                if (top != 0)
                    for (int j = 0; j < k; ++j) d[j] = ((d[j] - top * low[j]) % p + p) % p;
            }
            if (!ok) continue;
            bool back_to_one = d[0] == 1;
            for (int j = 1; j < k; ++j) back_to_one = back_to_one && d[j] == 0;
            if (back_to_one) {
                found = true;
                modulus_ = low;
                modulus_.push_back(1);
            }
        }
        if (!found) throw std::logic_error("no primitive polynomial found");
    }
    exp_[q_ - 1] = exp_[0];
    for (Code i = 0; i + 1 < q_; ++i) log_[exp_[i]] = i;
}

FiniteField::Code FiniteField::from_int(long long n) const
{
    long long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Code>(r);
}

FiniteField::Code FiniteField::add(Code a, Code b) const
{
    if (p_ == 2) return a ^ b;
    if (k_ == 1) {
        Code s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Code out = 0;
    for (int i = 0; i < k_; ++i) {
        Code da = (a / pow_p_[i]) % p_;
        Code db = (b / pow_p_[i]) % p_;
        out += ((da + db) % p_) * pow_p_[i];
    }
    return out;
}

FiniteField::Code FiniteField::neg(Code a) const
{
    if (p_ == 2) return a;
    if (k_ == 1) return a == 0 ? 0 : q_ - a;
    Code out = 0;
    for (int i = 0; i < k_; ++i) {
        Code da = (a / pow_p_[i]) % p_;
        out += ((p_ - da) % p_) * pow_p_[i];
    }
    return out;
}

FiniteField::Code FiniteField::inv(Code a) const
{
    if (a == 0) throw std::domain_error("division by zero in " + name());
    Code l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FiniteField::Code FiniteField::pow(Code a, long long e) const
{
    if (a == 0) {
        if (e < 0) throw std::domain_error("zero to a negative power");
        return e == 0 ? 1 : 0;
    }
    long long order = static_cast<long long>(q_) - 1;
    long long r = ((e % order) + order) % order;
    unsigned __int128 t = static_cast<unsigned __int128>(log_[a]) * static_cast<unsigned long long>(r);
    return exp_[static_cast<Code>(t % static_cast<unsigned long long>(order))];
}

std::vector<int> FiniteField::digits(Code a) const
{
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) d[i] = static_cast<int>((a / pow_p_[i]) % p_);
    return d;
}

FiniteField::Code FiniteField::from_digits(const std::vector<int>& d) const
{
    if (static_cast<int>(d.size()) > k_) throw std::invalid_argument("too many digits for " + name());
    Code out = 0;
    for (std::size_t i = 0; i < d.size(); ++i) out += from_int(d[i]) * pow_p_[i];
    return out;
}

FiniteField::Code FiniteField::embed_from(const FiniteField& sub, Code a) const
{
    if (&sub == this) return a;
    if (!sub.is_subfield_of(*this))
        throw std::invalid_argument(sub.name() + " is not a subfield of " + name());
    if (sub.k_ == 1) return from_int(a);
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mutex);
        auto it = reg.embeddings.find({&sub, this});
        if (it != reg.embeddings.end()) return it->second[a];
    }
    // A root of sub's defining polynomial: search the elements of order q_sub - 1.
    Code step = (q_ - 1) / (sub.q_ - 1);
    Code root = 0;
    bool found = false;
    for (Code t = 1; t < sub.q_ - 1 + 1 && !found; ++t) {
        if (std::gcd(t, sub.q_ - 1) != 1) continue;
        Code beta = exp_[static_cast<std::uint64_t>(t) * step % (q_ - 1)];
        Code value = 0;
        Code power = 1;
        for (int c : sub.modulus_) {
            value = add(value, mul(from_int(c), power));
            power = mul(power, beta);
        }
        if (value == 0) {
            root = beta;
            found = true;
        }
    }
    if (!found) throw std::logic_error("embedding root not found");
    std::vector<Code> table(sub.q_);
    for (Code c = 0; c < sub.q_; ++c) {
        Code value = 0;
        Code power = 1;
        for (int d : sub.digits(c)) {
            value = add(value, mul(from_int(d), power));
            power = mul(power, root);
        }
        table[c] = value;
    }
    std::lock_guard lock(reg.mutex);
    auto [it, inserted] = reg.embeddings.emplace(std::make_pair(&sub, this), std::move(table));
    return it->second[a];
}

std::string FiniteField::to_string(Code a) const
{
    if (k_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::ostringstream os;
    bool first = true;
    auto d = digits(a);
    for (int i = 0; i < k_; ++i) {
        if (d[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0 || d[i] != 1) os << d[i];
        if (i >= 1) os << 'a';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::string FiniteField::name() const
{
    return "F_" + std::to_string(q_);
}

// --- Gf --------------------------------------------------------------------

FiniteField::Code Gf::code_in(const FiniteField& f) const
{
    if (!field_) return f.from_int(n_);
    if (field_ == &f) return code_;
    return f.embed_from(*field_, code_);
}

const FiniteField* Gf::common(const Gf& a, const Gf& b)
{
    if (a.field_ && b.field_ && a.field_ != b.field_)
        throw std::invalid_argument("mixed finite fields: " + a.field_->name() + " and " + b.field_->name());
    return a.field_ ? a.field_ : b.field_;
}

bool Gf::is_zero() const
{
    return field_ ? code_ == 0 : n_ == 0;
}

bool Gf::is_one() const
{
    return field_ ? code_ == 1 : n_ == 1;
}

Gf Gf::operator-() const
{
    if (!field_) return Gf(static_cast<int>(-n_));
    return Gf(*field_, field_->neg(code_));
}

Gf& Gf::operator+=(const Gf& o)
{
    const FiniteField* f = common(*this, o);
    if (!f) {
        n_ += o.n_;
        return *this;
    }
    code_ = f->add(code_in(*f), o.code_in(*f));
    field_ = f;
    return *this;
}

Gf& Gf::operator-=(const Gf& o)
{
    return *this += -o;
}

Gf& Gf::operator*=(const Gf& o)
{
    const FiniteField* f = common(*this, o);
    if (!f) {
        n_ *= o.n_;
        return *this;
    }
    code_ = f->mul(code_in(*f), o.code_in(*f));
    field_ = f;
    return *this;
}

Gf& Gf::operator/=(const Gf& o)
{
    const FiniteField* f = common(*this, o);
    if (!f) {
        if (o.n_ != 1 && o.n_ != -1) throw std::domain_error("division of unbound field constants");
        n_ *= o.n_;
        return *this;
    }
    code_ = f->div(code_in(*f), o.code_in(*f));
    field_ = f;
    return *this;
}

bool operator==(const Gf& a, const Gf& b)
{
    const FiniteField* f = Gf::common(a, b);
    if (!f) return a.n_ == b.n_;
    return a.code_in(*f) == b.code_in(*f);
}

Gf Gf::inverse() const
{
    return Gf(1) / *this;
}

Gf Gf::pow(long long e) const
{
    if (!field_) {
        if (e < 0) return Gf(1).operator/=(*this).pow(-e);
        long long r = 1;
        for (long long i = 0; i < e; ++i) r *= n_;
        return Gf(static_cast<int>(r));
    }
    return Gf(*field_, field_->pow(code_, e));
}

Gf Gf::frobenius() const
{
    if (!field_) return *this;
    return Gf(*field_, field_->frobenius(code_));
}

std::ostream& operator<<(std::ostream& os, const Gf& x)
{
    if (!x.field_) return os << x.n_;
    return os << x.field_->to_string(x.code_);
}

}  // namespace eostrata
