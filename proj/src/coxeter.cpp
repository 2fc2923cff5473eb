#include "eostrata/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace eostrata {

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "D" || s == "d") return Family::D;
    throw std::invalid_argument("unknown Coxeter family '" + s + "' (expected A, B or D)");
}

std::uint64_t enumeration_ceiling()
{
    const char* env = std::getenv("EOSTRATA_CEILING");
    if (env && *env) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument(std::string("EOSTRATA_CEILING is not a positive integer: ") + env);
    }
    return 10'000'000ULL;
}

// --- CoxeterSystem -----------------------------------------------------------

CoxeterSystem::CoxeterSystem(Family family, int rank) : family_(family), rank_(rank)
{
    if (rank < 1) throw std::invalid_argument("Coxeter rank must be positive");
    if (family == Family::D && rank < 2) throw std::invalid_argument("type D needs rank at least 2");
    if (rank > 10) throw std::invalid_argument("Coxeter rank above 10 is not supported");
}

int CoxeterSystem::big_size() const
{
    switch (family_) {
    case Family::B: return 2 * rank_ + 1;
    case Family::D: return 2 * rank_;
    default: throw std::invalid_argument("big permutations are defined for types B and D only");
    }
}

std::uint64_t CoxeterSystem::group_order() const
{
    std::uint64_t f = 1;
    for (int i = 2; i <= letters(); ++i) f *= static_cast<std::uint64_t>(i);
    if (family_ == Family::B) f <<= rank_;
    if (family_ == Family::D) f <<= rank_ - 1;
    return f;
}

int CoxeterSystem::positive_roots() const
{
    switch (family_) {
    case Family::A: return rank_ * (rank_ + 1) / 2;
    case Family::B: return rank_ * rank_;
    case Family::D: return rank_ * (rank_ - 1);
    }
    return 0;
}

std::string CoxeterSystem::name() const
{
    return family_name(family_) + "_" + std::to_string(rank_);
}

int CoxeterSystem::coxeter_matrix(int i, int j) const
{
    if (i < 1 || i > rank_ || j < 1 || j > rank_) throw std::out_of_range("generator label out of range");
    if (i == j) return 1;
    if (i > j) std::swap(i, j);
    const int m = rank_;
    if (family_ == Family::D && j == m) return (i == m - 2) ? 3 : 2;
    if (family_ == Family::B && i == m - 1 && j == m) return 4;
    return j == i + 1 ? 3 : 2;
}

// --- WeylElement -------------------------------------------------------------

namespace {

// Big-permutation letter of a signed value (types B/D).
inline int letter(int v, int big)
{
    return v > 0 ? v : big + 1 + v;
}

}  // namespace

int compute_length(const CoxeterSystem& sys, const std::vector<int>& w)
{
    const int n = sys.letters();
    int len = 0;
    if (sys.family() == Family::A) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[i] > w[j]) ++len;
        return len;
    }
    auto sign = [](int v) { return v > 0 ? 1 : -1; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // roots e_i - e_j and e_i + e_j
            const int a = sign(w[i]), b = sign(w[j]);
            const int P = std::abs(w[i]), Q = std::abs(w[j]);
            for (int s : {-1, 1}) {
                const int lead = P < Q ? a : s * b;
                if (lead < 0) ++len;
            }
        }
        if (sys.family() == Family::B && w[i] < 0) ++len;
    }
    return len;
}

WeylElement::WeylElement(const CoxeterSystem& sys) : sys_(sys), images_(sys.letters())
{
    std::iota(images_.begin(), images_.end(), 1);
}

WeylElement::WeylElement(const CoxeterSystem& sys, std::vector<int> images) : sys_(sys), images_(std::move(images))
{
    const int n = sys_.letters();
    if (static_cast<int>(images_.size()) != n)
        throw std::invalid_argument("one-line notation has " + std::to_string(images_.size()) + " entries, expected " + std::to_string(n));
    std::vector<bool> seen(n + 1, false);
    int negatives = 0;
    for (int v : images_) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[a]) throw std::invalid_argument("one-line notation is not a (signed) permutation");
        seen[a] = true;
        if (v < 0) {
            if (sys_.family() == Family::A) throw std::invalid_argument("type A elements carry no signs");
            ++negatives;
        }
    }
    if (sys_.family() == Family::D && negatives % 2 != 0)
        throw std::invalid_argument("type D elements need an even number of sign changes");
    length_ = compute_length(sys_, images_);
}

std::vector<int> WeylElement::signs() const
{
    std::vector<int> s(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) s[i] = images_[i] > 0 ? 1 : -1;
    return s;
}

std::vector<int> WeylElement::permutation() const
{
    std::vector<int> p(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) p[i] = std::abs(images_[i]);
    return p;
}

bool WeylElement::right_descent(int i) const
{
    const int m = sys_.rank();
    if (i < 1 || i > m) throw std::out_of_range("generator label out of range");
    if (sys_.family() == Family::A) return images_[i - 1] > images_[i];
    const int N = sys_.big_size();
    if (i < m) return letter(images_[i - 1], N) > letter(images_[i], N);
    if (sys_.family() == Family::B) return images_[m - 1] < 0;
    return letter(images_[m - 2], N) > letter(-images_[m - 1], N);
}

bool WeylElement::left_descent(int i) const
{
    return inverse().right_descent(i);
}

WeylElement WeylElement::inverse() const
{
    WeylElement out(sys_);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const int v = images_[i];
        const int pos = static_cast<int>(i) + 1;
        out.images_[std::abs(v) - 1] = v > 0 ? pos : -pos;
    }
    out.length_ = length_;
    return out;
}

std::uint64_t WeylElement::hash() const
{
    std::uint64_t h = 0;
    for (int v : images_) h = (h << 5) | static_cast<std::uint64_t>(v + 16);
    return h;
}

std::string WeylElement::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << ']';
    return os.str();
}

WeylElement operator*(const WeylElement& u, const WeylElement& v)
{
    if (u.sys_ != v.sys_) throw std::invalid_argument("product of elements from different Coxeter systems");
    WeylElement out(u.sys_);
    for (std::size_t i = 0; i < v.images_.size(); ++i) out.images_[i] = u(v.images_[i]);
    out.length_ = compute_length(out.sys_, out.images_);
    return out;
}

bool operator<(const WeylElement& a, const WeylElement& b)
{
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return reduced_word(a) < reduced_word(b);
}

// --- constructors ------------------------------------------------------------

WeylElement identity(const CoxeterSystem& sys)
{
    return WeylElement(sys);
}

WeylElement simple_reflection(const CoxeterSystem& sys, int i)
{
    const int m = sys.rank();
    if (i < 1 || i > m) throw std::out_of_range("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(m));
    std::vector<int> img(sys.letters());
    std::iota(img.begin(), img.end(), 1);
    if (sys.family() == Family::A || i < m) {
        std::swap(img[i - 1], img[i]);
    } else if (sys.family() == Family::B) {
        img[m - 1] = -m;
    } else {
        img[m - 2] = -m;
        img[m - 1] = -(m - 1);
    }
    return WeylElement(sys, img);
}

WeylElement from_word(const CoxeterSystem& sys, const Word& word)
{
    WeylElement w(sys);
    for (int i : word) w = w * simple_reflection(sys, i);
    return w;
}

Word reduced_word(const WeylElement& w)
{
    const auto& sys = w.system();
    Word out;
    out.reserve(w.length());
    WeylElement cur = w;
    while (!cur.is_identity()) {
        WeylElement inv = cur.inverse();
        int pick = 0;
        for (int i = 1; i <= sys.rank(); ++i)
            if (inv.right_descent(i)) {
                pick = i;
                break;
            }
        if (pick == 0) throw std::logic_error("non-identity element without descents");
        out.push_back(pick);
        cur = simple_reflection(sys, pick) * cur;
    }
    return out;
}

bool is_reduced(const CoxeterSystem& sys, const Word& word)
{
    return from_word(sys, word).length() == static_cast<int>(word.size());
}

WeylElement longest_element(const CoxeterSystem& sys)
{
    WeylElement w(sys);
    for (;;) {
        int ascent = 0;
        for (int i = 1; i <= sys.rank(); ++i)
            if (!w.right_descent(i)) {
                ascent = i;
                break;
            }
        if (ascent == 0) return w;
        w = w * simple_reflection(sys, ascent);
    }
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w)
{
    if (u.system() != w.system()) throw std::invalid_argument("Bruhat comparison across Coxeter systems");
    if (u.length() > w.length()) return false;
    if (u.length() == w.length()) return u == w;
    return bruhat_leq(u, reduced_word(w));
}

bool bruhat_leq(const WeylElement& u, const Word& word)
{
    if (u.length() > static_cast<int>(word.size())) return false;
    // Walk the word from the right: u <= w iff min(u, us) <= ws for s a right descent of w.
    WeylElement cur = u;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (cur.is_identity()) return true;
        if (cur.right_descent(*it)) cur = cur * simple_reflection(u.system(), *it);
    }
    return cur.is_identity();
}

// --- enumeration -------------------------------------------------------------

namespace {

void sort_canonical(std::vector<WeylElement>& elems)
{
    std::vector<std::pair<std::pair<int, Word>, std::size_t>> keys;
    keys.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) keys.push_back({{elems[i].length(), reduced_word(elems[i])}, i});
    std::sort(keys.begin(), keys.end());
    std::vector<WeylElement> out;
    out.reserve(elems.size());
    for (auto& k : keys) out.push_back(elems[k.second]);
    elems = std::move(out);
}

// Closure of {e} under right multiplication by `gens`, optionally filtered.
template <typename Keep>
std::vector<WeylElement> generate(const CoxeterSystem& sys, const Subset& gens, Keep keep, bool length_increasing)
{
    const std::uint64_t ceiling = enumeration_ceiling();
    std::vector<WeylElement> out{WeylElement(sys)};
    std::unordered_set<std::uint64_t> seen{out[0].hash()};
    std::vector<WeylElement> reflections;
    for (int i : gens) reflections.push_back(simple_reflection(sys, i));
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& s : reflections) {
            WeylElement v = out[head] * s;
            if (length_increasing && v.length() != out[head].length() + 1) continue;
            if (!keep(v)) continue;
            if (!seen.insert(v.hash()).second) continue;
            if (out.size() >= ceiling)
                throw std::length_error("enumeration exceeds the ceiling of " + std::to_string(ceiling) + " elements");
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace

std::vector<WeylElement> enumerate(const CoxeterSystem& sys)
{
    if (sys.rank() > CoxeterSystem::kMaxRank) throw std::length_error("full enumeration is limited to rank 9");
    if (sys.group_order() > enumeration_ceiling())
        throw std::length_error(sys.name() + " has " + std::to_string(sys.group_order()) + " elements, above the enumeration ceiling");
    auto out = generate(sys, all_generators(sys), [](const WeylElement&) { return true; }, true);
    sort_canonical(out);
    return out;
}

std::vector<WeylElement> parabolic_subgroup(const CoxeterSystem& sys, const Subset& J, bool sorted)
{
    auto out = generate(sys, make_subset(sys, J), [](const WeylElement&) { return true; }, true);
    if (sorted) sort_canonical(out);
    return out;
}

bool in_left_reps(const WeylElement& w, const Subset& J)
{
    if (J.empty()) return true;
    WeylElement inv = w.inverse();
    for (int j : J)
        if (inv.right_descent(j)) return false;
    return true;
}

bool in_right_reps(const WeylElement& w, const Subset& K)
{
    for (int k : K)
        if (w.right_descent(k)) return false;
    return true;
}

std::vector<WeylElement> min_coset_reps(const CoxeterSystem& sys, const Subset& J, Side side)
{
    const Subset js = make_subset(sys, J);
    // ^JW is closed under deleting right descents, so it is reachable from e
    // by length-increasing right multiplications that stay inside it.
    auto out = generate(sys, all_generators(sys), [&](const WeylElement& v) { return in_left_reps(v, js); }, true);
    if (side == Side::Right)
        for (auto& w : out) w = w.inverse();
    sort_canonical(out);
    return out;
}

WeylElement double_coset_min(const CoxeterSystem& sys, const Subset& J, const Subset& K, const WeylElement& w)
{
    if (w.system() != sys) throw std::invalid_argument("element from a different Coxeter system");
    const Subset js = make_subset(sys, J), ks = make_subset(sys, K);
    WeylElement cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j : js)
            if (cur.left_descent(j)) {
                cur = simple_reflection(sys, j) * cur;
                changed = true;
            }
        for (int k : ks)
            if (cur.right_descent(k)) {
                cur = cur * simple_reflection(sys, k);
                changed = true;
            }
    }
    return cur;
}

// --- big permutations --------------------------------------------------------

std::vector<int> to_big_permutation(const WeylElement& w)
{
    const auto& sys = w.system();
    const int N = sys.big_size();
    const int m = sys.rank();
    std::vector<int> big(N);
    for (int i = 1; i <= m; ++i) {
        big[i - 1] = letter(w(i), N);
        big[N - i] = N + 1 - big[i - 1];
    }
    if (sys.family() == Family::B) big[m] = m + 1;
    return big;
}

WeylElement from_big_permutation(const CoxeterSystem& sys, const std::vector<int>& big)
{
    const int N = sys.big_size();
    const int m = sys.rank();
    if (static_cast<int>(big.size()) != N) throw std::invalid_argument("big permutation has the wrong size");
    for (int i = 0; i < N; ++i)
        if (big[i] + big[N - 1 - i] != N + 1)
            throw std::invalid_argument("big permutation violates w(i)+w(N+1-i)=N+1");
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) {
        const int b = big[i];
        if (b <= m) img[i] = b;
        else if (b >= N + 1 - m) img[i] = -(N + 1 - b);
        else throw std::invalid_argument("big permutation moves the middle letter");
    }
    WeylElement w(sys, img);
    if (to_big_permutation(w) != big) throw std::invalid_argument("not a permutation of the required shape");
    return w;
}

std::string cycle_string(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    std::vector<bool> done(n + 1, false);
    std::ostringstream os;
    bool any = false;
    for (int start = 1; start <= n; ++start) {
        if (done[start] || perm[start - 1] == start) continue;
        any = true;
        os << '(';
        int cur = start;
        bool first = true;
        while (!done[cur]) {
            done[cur] = true;
            os << (first ? "" : ",") << cur;
            first = false;
            cur = perm[cur - 1];
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

// --- automorphisms and subsets -----------------------------------------------

Automorphism identity_automorphism(const CoxeterSystem& sys)
{
    Automorphism phi(sys.rank());
    std::iota(phi.begin(), phi.end(), 1);
    return phi;
}

bool is_diagram_automorphism(const CoxeterSystem& sys, const Automorphism& phi)
{
    const int m = sys.rank();
    if (static_cast<int>(phi.size()) != m) return false;
    std::vector<bool> seen(m + 1, false);
    for (int v : phi) {
        if (v < 1 || v > m || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (sys.coxeter_matrix(phi[i - 1], phi[j - 1]) != sys.coxeter_matrix(i, j)) return false;
    return true;
}

WeylElement apply_automorphism(const WeylElement& w, const Automorphism& phi)
{
    Word word = reduced_word(w);
    for (int& i : word) i = phi.at(i - 1);
    return from_word(w.system(), word);
}

Subset apply_automorphism(const Subset& J, const Automorphism& phi)
{
    Subset out;
    for (int j : J) out.push_back(phi.at(j - 1));
    std::sort(out.begin(), out.end());
    return out;
}

Subset make_subset(const CoxeterSystem& sys, Subset J)
{
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J)
        if (j < 1 || j > sys.rank())
            throw std::out_of_range("generator " + std::to_string(j) + " not in 1.." + std::to_string(sys.rank()));
    return J;
}

Subset all_generators(const CoxeterSystem& sys)
{
    Subset s(sys.rank());
    std::iota(s.begin(), s.end(), 1);
    return s;
}

}  // namespace eostrata
