#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eostrata/finite_field.hpp"
#include "eostrata/zipstrata.hpp"

namespace eostrata {

long long squarefree_part(long long n)
{
    if (n == 0) throw std::invalid_argument("zero has no square class");
    long long sign = n < 0 ? -1 : 1;
    long long a = n < 0 ? -n : n;
    long long out = 1;
    for (long long d = 2; d * d <= a; ++d) {
        int e = 0;
        while (a % d == 0) {
            a /= d;
            ++e;
        }
        if (e % 2) out *= d;
    }
    return sign * out * a;
}

int TypeSchemeResult::expected_count() const
{
    if (family == Family::B || delta_square) return 1 << m;
    return (1 << (m - 1)) + (1 << (m - 2));
}

namespace {

long long legendre(long long a, int p)
{
    long long r = ((a % p) + p) % p;
    if (r == 0) throw std::invalid_argument("coefficient divisible by the characteristic");
    long long result = 1, base = r, e = (p - 1) / 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

// Square class of a rational or F_p value given as an integer product.
struct ClassArith {
    int p;
    long long of(long long v) const { return p == 0 ? squarefree_part(v) : legendre(v, p); }
    long long mul(long long a, long long b) const
    {
        if (p != 0) return a * b;
        const long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
        return (a / g) * (b / g);
    }
    bool trivial(long long c) const { return c == 1; }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

TypeSchemeResult scheme_of_types(const TypeSchemeInput& input)
{
    const int p = input.field.p;
    if (p == 2) throw std::invalid_argument("the scheme of types needs characteristic different from 2");
    if (p != 0 && !is_prime(p)) throw std::invalid_argument("base field characteristic must be 0 or an odd prime");
    const int N = static_cast<int>(input.a.size());
    if (N < 3) throw std::invalid_argument("need at least 3 coefficients");
    if (N > 20) throw std::invalid_argument("at most 20 coefficients are supported");
    for (long long a : input.a) {
        if (a == 0) throw std::invalid_argument("coefficients must be nonzero");
        if (a > 1'000'000'000LL || a < -1'000'000'000LL) throw std::invalid_argument("coefficient too large");
        if (squarefree_part(a) != a) throw std::invalid_argument("coefficient " + std::to_string(a) + " is not squarefree");
    }
    const ClassArith arith{p};
    TypeSchemeResult r;
    r.family = N % 2 ? Family::B : Family::D;
    r.m = N / 2;
    const int m = r.m;

    // b_i^2 = -a_i / a_{N+1-i}, whose class is that of -a_i a_{N+1-i}.
    for (int i = 0; i < m; ++i) r.b_classes.push_back(arith.mul(arith.of(-input.a[i]), arith.of(input.a[N - 1 - i])));

    long long delta = arith.of(m % 2 ? -1 : 1);
    for (long long a : input.a) delta = arith.mul(delta, arith.of(a));
    r.delta_class = delta;
    r.delta_square = arith.trivial(delta);

    // Galois sign vectors: eps is realized iff every multiplicative relation
    // among the classes of the b_i^2 forces the matching product of signs.
    std::vector<int> relations;
    for (int mask = 1; mask < (1 << m); ++mask) {
        long long c = 1;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) c = arith.mul(c, r.b_classes[i]);
        if (arith.trivial(c)) relations.push_back(mask);
    }
    std::vector<int> realized;
    for (int eps = 0; eps < (1 << m); ++eps) {  // bit i set: sign -1 on b_{i+1}
        bool ok = true;
        for (int rel : relations) ok = ok && __builtin_popcount(rel & eps) % 2 == 0;
        if (ok) realized.push_back(eps);
    }
    for (int eps : realized) {
        std::vector<int> v(m);
        for (int i = 0; i < m; ++i) v[i] = (eps >> i & 1) ? -1 : 1;
        r.galois_signs.push_back(v);
    }

    // In type D the sign of sigma on sqrt((-1)^m d) is the product of the
    // sigma(b_i)/b_i; the two computations must agree.
    bool some_odd = false;
    for (int eps : realized) some_odd = some_odd || __builtin_popcount(eps) % 2;
    if (r.family == Family::D && some_odd == r.delta_square)
        throw std::logic_error("square class of (-1)^m d disagrees with the product of the b_i");

    // Action on subsets of simple roots; in type D the roots m-1 and m form C.
    UnionFind uf(1 << m);
    if (r.family == Family::D && m >= 2) {
        const int c1 = 1 << (m - 2), c2 = 1 << (m - 1);
        for (int eps : realized) {
            if (__builtin_popcount(eps) % 2 == 0) continue;
            for (int S = 0; S < (1 << m); ++S) {
                const bool has1 = S & c1, has2 = S & c2;
                int T = S & ~(c1 | c2);
                if (has1) T |= c2;
                if (has2) T |= c1;
                uf.unite(S, T);
            }
        }
    }
    std::map<int, std::vector<Subset>> groups;
    for (int S = 0; S < (1 << m); ++S) {
        Subset s;
        for (int i = 0; i < m; ++i)
            if (S >> i & 1) s.push_back(i + 1);
        groups[uf.find(S)].push_back(s);
    }
    for (auto& [root, members] : groups) r.orbits.push_back(std::move(members));
    return r;
}

}  // namespace eostrata
