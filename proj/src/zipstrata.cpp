#include "eostrata/zipstrata.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace eostrata {

Subset conjugate_subset(const WeylElement& g, const Subset& J)
{
    const auto& sys = g.system();
    const WeylElement ginv = g.inverse();
    Subset out;
    for (int j : J) {
        const WeylElement c = g * simple_reflection(sys, j) * ginv;
        int hit = 0;
        for (int i = 1; i <= sys.rank() && !hit; ++i)
            if (c == simple_reflection(sys, i)) hit = i;
        if (!hit) throw std::logic_error("conjugate of s_" + std::to_string(j) + " is not a simple reflection");
        out.push_back(hit);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ZipDatum build_zip_datum(const CoxeterSystem& sys, const Subset& J, const Automorphism& phi)
{
    if (!is_diagram_automorphism(sys, phi)) throw std::invalid_argument("phi is not a diagram automorphism of " + sys.name());
    const Subset js = make_subset(sys, J);
    const Subset phi_j = apply_automorphism(js, phi);
    const WeylElement w0 = longest_element(sys);
    const Subset K = conjugate_subset(w0, phi_j);
    const WeylElement x = double_coset_min(sys, K, phi_j, w0);
    ZipDatum d{sys, js, phi, w0, K, x, false};

    // Second characterization: the longest element of ^K W^{phi(J)}.  Only
    // attempted when ^K W is small enough to list.
    if (sys.group_order() >> K.size() <= 200000) {
        const auto reps = min_coset_reps(sys, K, Side::Left);
        const WeylElement* best = nullptr;
        int ties = 0;
        for (const auto& w : reps) {
            if (!in_right_reps(w, phi_j)) continue;
            if (!best || w.length() > best->length()) {
                best = &w;
                ties = 1;
            } else if (w.length() == best->length()) {
                ++ties;
            }
        }
        if (!best || ties != 1 || *best != x)
            throw std::logic_error("the two characterizations of x disagree for " + sys.name());
        d.x_cross_checked = true;
    }
    return d;
}

// --- closure order -----------------------------------------------------------

namespace {

std::vector<int> compose(const std::vector<int>& u, const std::vector<int>& v)
{
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const int t = v[i];
        out[i] = t > 0 ? u[t - 1] : -u[-t - 1];
    }
    return out;
}

bool is_identity_automorphism(const Automorphism& phi)
{
    for (std::size_t i = 0; i < phi.size(); ++i)
        if (phi[i] != static_cast<int>(i) + 1) return false;
    return true;
}

}  // namespace

ClosureOrder::ClosureOrder(const ZipDatum& datum) : datum_(datum)
{
    wj_ = parabolic_subgroup(datum.sys, datum.J, false);
    const bool trivial_phi = is_identity_automorphism(datum.phi);
    phi_inv_.reserve(wj_.size());
    for (const auto& y : wj_)
        phi_inv_.push_back(trivial_phi ? y.inverse() : apply_automorphism(y, datum.phi).inverse());
}

const ClosureOrder::Candidates& ClosureOrder::candidates(const WeylElement& w_prime)
{
    auto it = cache_.find(w_prime.hash());
    if (it != cache_.end()) return it->second;
    const auto& x = datum_.x.images();
    const auto xinv = datum_.x.inverse().images();
    std::unordered_set<std::uint64_t> seen;
    Candidates c;
    for (std::size_t k = 0; k < wj_.size(); ++k) {
        // y w' x phi(y)^{-1} x^{-1}
        auto img = compose(compose(compose(compose(wj_[k].images(), w_prime.images()), x), phi_inv_[k].images()), xinv);
        WeylElement e(datum_.sys, std::move(img));
        if (seen.insert(e.hash()).second) c.elems.push_back(std::move(e));
    }
    std::stable_sort(c.elems.begin(), c.elems.end(),
                     [](const WeylElement& a, const WeylElement& b) { return a.length() < b.length(); });
    return cache_.emplace(w_prime.hash(), std::move(c)).first->second;
}

bool ClosureOrder::operator()(const WeylElement& w_prime, const WeylElement& w)
{
    if (!in_left_reps(w_prime, datum_.J) || !in_left_reps(w, datum_.J))
        throw std::invalid_argument("closure order is defined on ^JW only");
    if (w_prime == w) return true;
    auto wit = words_.find(w.hash());
    if (wit == words_.end()) wit = words_.emplace(w.hash(), reduced_word(w)).first;
    const Word& word = wit->second;
    for (const auto& c : candidates(w_prime).elems) {
        if (c.length() > w.length()) break;
        if (bruhat_leq(c, word)) return true;
    }
    return false;
}

bool preceq(const ZipDatum& datum, const WeylElement& w_prime, const WeylElement& w)
{
    ClosureOrder order(datum);
    return order(w_prime, w);
}

// --- posets ------------------------------------------------------------------

std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<char>>& order)
{
    const int n = static_cast<int>(order.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !order[i][j]) continue;
            bool covered = true;
            for (int k = 0; k < n && covered; ++k)
                if (k != i && k != j && order[i][k] && order[k][j]) covered = false;
            if (covered) edges.emplace_back(i, j);
        }
    return edges;
}

std::vector<std::pair<int, int>> StratumPoset::closure_pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < strata.size(); ++i)
        for (std::size_t j = 0; j < strata.size(); ++j)
            if (i != j && order[i][j]) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

StratumPoset strata_poset(const ZipDatum& datum, std::optional<int> dim_p)
{
    StratumPoset poset{datum, {}, {}, {}};
    for (auto& w : min_coset_reps(datum.sys, datum.J, Side::Left)) {
        Stratum s{w, reduced_word(w), w.length(), std::nullopt};
        if (dim_p) s.orbit_dim = *dim_p + w.length();
        poset.strata.push_back(std::move(s));
    }
    const std::size_t n = poset.strata.size();
    poset.order.assign(n, std::vector<char>(n, 0));
    ClosureOrder order(datum);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) poset.order[i][j] = order(poset.strata[i].w, poset.strata[j].w) ? 1 : 0;
    poset.hasse = transitive_reduction(poset.order);
    return poset;
}

// --- CSpin -------------------------------------------------------------------

namespace {

int cspin_rank(int n)
{
    return n % 2 ? (n + 1) / 2 : (n + 2) / 2;
}

// s_from s_{from+1} ... s_to; empty when from > to.
Word up(int from, int to)
{
    Word w;
    for (int i = from; i <= to; ++i) w.push_back(i);
    return w;
}

// s_from s_{from-1} ... s_to; empty when from < to.
Word down(int from, int to)
{
    Word w;
    for (int i = from; i >= to; --i) w.push_back(i);
    return w;
}

Word concat(Word a, const Word& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string word_string(const Word& w)
{
    if (w.empty()) return "e";
    std::ostringstream os;
    for (int i : w) os << "s" << i;
    return os.str();
}

}  // namespace

bool CSpinReport::passed(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return c.pass;
    throw std::out_of_range("no check named " + name);
}

std::vector<std::pair<std::string, Word>> cspin_expected_words(int n)
{
    const int m = cspin_rank(n);
    std::vector<std::pair<std::string, Word>> out;
    if (n % 2) {
        for (int k = 0; k <= n; ++k) {
            Word w = k <= m ? up(1, k) : concat(up(1, m), down(m - 1, 2 * m - k));
            out.emplace_back("w_" + std::to_string(k), w);
        }
        return out;
    }
    for (int k = 0; k <= n; ++k) {
        if (k < m - 1) {
            out.emplace_back("w_" + std::to_string(k), up(1, k));
        } else if (k == m - 1) {
            out.emplace_back("w'_" + std::to_string(k), concat(up(1, m - 2), Word{m}));
            out.emplace_back("w''_" + std::to_string(k), up(1, m - 1));
        } else {
            out.emplace_back("w_" + std::to_string(k), concat(up(1, m), down(m - 2, n + 1 - k)));
        }
    }
    return out;
}

CSpinReport cspin_strata(int n)
{
    if (n < 1 || n > 14) throw std::out_of_range("n must lie in 1..14, got " + std::to_string(n));
    const int m = cspin_rank(n);
    const CoxeterSystem sys(n % 2 ? Family::B : Family::D, m);
    const Subset J = up(2, m);
    const ZipDatum datum = build_zip_datum(sys, J);

    CSpinReport rep{n, m, strata_poset(datum), {}, {}};
    const auto& strata = rep.poset.strata;
    const int count = static_cast<int>(strata.size());

    rep.checks.push_back({"strata-count", count == 2 * m,
                          std::to_string(count) + " strata, expected 2m = " + std::to_string(2 * m)});

    // Match every stratum against the explicit words.
    const auto expected = cspin_expected_words(n);
    rep.labels.assign(count, "");
    bool words_ok = true;
    std::ostringstream words_detail;
    std::vector<int> matched(count, 0);
    for (const auto& [label, word] : expected) {
        const bool reduced = is_reduced(sys, word);
        const WeylElement e = from_word(sys, word);
        int hit = -1;
        for (int i = 0; i < count; ++i)
            if (strata[i].w == e) hit = i;
        if (!reduced || hit < 0) {
            words_ok = false;
            words_detail << label << "=" << word_string(word) << (reduced ? " is not a stratum; " : " is not reduced; ");
            continue;
        }
        rep.labels[hit] = label;
        ++matched[hit];
    }
    for (int i = 0; i < count; ++i)
        if (matched[i] != 1) {
            words_ok = false;
            words_detail << "stratum " << word_string(strata[i].word) << " matched " << matched[i] << " words; ";
        }
    if (words_ok) words_detail << "all " << expected.size() << " words reduced and matched";

    std::vector<int> per_dim(n + 1, 0);
    bool dims_in_range = true;
    for (const auto& s : strata) {
        if (s.dim < 0 || s.dim > n) dims_in_range = false;
        else ++per_dim[s.dim];
    }
    const auto x_big = cycle_string(to_big_permutation(datum.x));

    if (n % 2) {
        bool one_each = dims_in_range;
        for (int d = 0; d <= n; ++d) one_each = one_each && per_dim[d] == 1;
        rep.checks.push_back({"odd-structure", one_each && words_ok && count == n + 1,
                              std::string(one_each ? "one stratum per dimension 0..n; " : "dimension profile wrong; ") + words_detail.str()});
        const std::string want = "(1," + std::to_string(n + 2) + ")";
        rep.checks.push_back({"x-form", x_big == want, "x = " + x_big + ", expected " + want});
        bool total = true;
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j)
                total = total && (rep.poset.leq(i, j) == (strata[i].dim <= strata[j].dim));
        rep.checks.push_back({"order", total, total ? "closure order equals comparison of lengths" : "closure order differs from length order"});
    } else {
        const int half = n / 2;
        bool profile = dims_in_range;
        for (int d = 0; d <= n; ++d) profile = profile && per_dim[d] == (d == half ? 2 : 1);
        rep.checks.push_back({"even-structure", profile && words_ok,
                              std::string(profile ? "two strata of dimension n/2, one of every other dimension; " : "dimension profile wrong; ") + words_detail.str()});
        const std::string want = "(1," + std::to_string(n + 2) + ")(" + std::to_string(m) + "," + std::to_string(m + 1) + ")";
        rep.checks.push_back({"x-form", x_big == want, "x = " + x_big + ", expected " + want});
        std::vector<std::pair<int, int>> incomparable;
        bool by_dim = true;
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j) {
                const bool a = rep.poset.leq(i, j), b = rep.poset.leq(j, i);
                if (!a && !b) incomparable.emplace_back(i, j);
                if (strata[i].dim != strata[j].dim) {
                    const bool lo_in_hi = strata[i].dim < strata[j].dim ? a : b;
                    const bool hi_in_lo = strata[i].dim < strata[j].dim ? b : a;
                    by_dim = by_dim && lo_in_hi && !hi_in_lo;
                }
            }
        const bool one_pair = incomparable.size() == 1 && strata[incomparable[0].first].dim == half &&
                              strata[incomparable[0].second].dim == half;
        rep.checks.push_back({"order", one_pair && by_dim,
                              std::to_string(incomparable.size()) + " incomparable pair(s)" +
                                  (one_pair ? " at dimension n/2" : "") +
                                  (by_dim ? "; strata of different dimension ordered by dimension" : "; some strata of different dimension are not ordered by dimension")});
    }
    rep.checks.push_back({"x-cross-check", datum.x_cross_checked, "x is also the longest element of ^K W^J"});
    return rep;
}

}  // namespace eostrata
