#include "eostrata/report.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eostrata/clifford.hpp"

namespace eostrata {

namespace {

template <typename Scalar>
Json matrix_json(const Matrix<Scalar>& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json subspace_json(const GfSubspace& s) { return matrix_json<Gf>(s.basis()); }

void add_check(Json& checks, const std::string& name, bool pass, const std::string& detail)
{
    checks[name] = {{"pass", pass}, {"detail", detail}};
}

Json stratum_json(const Stratum& s, int index)
{
    Json j;
    j["index"] = index;
    j["word"] = s.word;
    j["length"] = s.w.length();
    j["dim"] = s.dim;
    j["one_line"] = s.w.images();
    if (s.orbit_dim) j["orbit_dim"] = *s.orbit_dim;
    if (s.w.system().family() != Family::A) j["big_permutation"] = to_big_permutation(s.w);
    return j;
}

Json pairs_json(const std::vector<std::pair<int, int>>& pairs)
{
    Json out = Json::array();
    for (auto [a, b] : pairs) out.push_back({a, b});
    return out;
}

template <typename Scalar>
Json pairing_json(const QuadraticSpace<Scalar>& V, Json& checks)
{
    Json out;
    const auto basis = paired_even_basis(V);
    Json names = Json::array();
    for (Blade b : basis) names.push_back(blade_name(b));
    out["basis"] = names;
    const Matrix<Scalar> G = lambda_pairing_matrix(V, basis);
    Json entries = Json::array();
    bool blocks = true;
    bool skew = true;
    for (Eigen::Index a = 0; a < G.rows(); ++a)
        for (Eigen::Index b = 0; b < G.cols(); ++b) {
            const bool partner = a / 2 == b / 2 && a != b;
            if (!is_zero(G(a, b))) entries.push_back({a, b, to_string(G(a, b))});
            if (partner == is_zero(G(a, b))) blocks = false;
            if (G(a, b) != -G(b, a)) skew = false;
        }
    out["nonzero_entries"] = entries;
    out["size"] = G.rows();
    out["skew"] = skew;
    add_check(checks, "pairing-antidiagonal", blocks,
              blocks ? "nonzero exactly on the 2x2 anti-diagonal blocks of the paired basis" : "entries outside the paired blocks");
    const Scalar det = determinant<Scalar>(G);
    out["determinant"] = to_string(det);
    out["determinant_nonzero"] = !is_zero(det);
    return out;
}

template <typename Scalar>
void trace_checks(const QuadraticSpace<Scalar>& V, Json& out, Json& checks)
{
    const Scalar unit_trace = trace(V, CliffordElement<Scalar>::scalar(V.square_factor(0)));
    bool others_zero = true;
    for (Blade I : V.even_blades())
        if (I != 0 && !is_zero(trace(V, CliffordElement<Scalar>::blade(I, V.square_factor(0))))) others_zero = false;
    out["trace_identity"] = to_string(unit_trace);
    out["trace_other_blades_zero"] = others_zero;
    const long long want = 1LL << (V.dim() - 1);
    const bool ok = others_zero && unit_trace == Scalar(V.square_factor(0) * Scalar(static_cast<int>(want)));
    add_check(checks, "trace", ok, "tr(1) = " + to_string(unit_trace) + ", expected 2^(N-1) = " + std::to_string(want));
}

template <typename Scalar>
void lie_part(const QuadraticSpace<Scalar>& V, Json& out, Json& checks)
{
    const LieAlgebraBases<Scalar> lie = lie_algebras(V);
    out["lie"] = {{"dim_g", lie.dim_g()},
                  {"dim_cspin", lie.dim_cspin()},
                  {"g_matches_closed_form", lie.g_matches_closed_form},
                  {"cspin_matches_closed_form", lie.cspin_matches_closed_form}};
    add_check(checks, "lie-cspin", lie.cspin_matches_closed_form, "dim Lie(CSpin) = " + std::to_string(lie.dim_cspin()) + ", basis {1, e_i e_j}");
    const bool differ = lie.dim_g() != lie.dim_cspin();
    add_check(checks, "lie-differ", differ == (V.dim() >= 6),
              "dim Lie(G) = " + std::to_string(lie.dim_g()) + ", dim Lie(CSpin) = " + std::to_string(lie.dim_cspin()));
}

bool all_ones(const std::vector<long long>& c)
{
    for (long long x : c)
        if (x != 1) return false;
    return true;
}

Json clifford_rational(const std::vector<long long>& coeffs)
{
    std::vector<Rational> c;
    for (long long x : coeffs) c.emplace_back(x);
    QuadraticSpace<Rational> V(c);
    Json out;
    Json checks = Json::object();
    trace_checks(V, out, checks);
    if (V.dim() >= 2) {
        out["pairing"] = pairing_json(V, checks);
        Rational det(out["pairing"]["determinant"].get<std::string>());
        Json fac = Json::object();
        std::set<Integer> allowed{2};
        for (long long x : coeffs)
            for (const auto& [q, e] : factorize(Rational(x))) allowed.insert(q);
        bool coprime = true;
        for (const auto& [q, e] : factorize(det)) {
            fac[q.str()] = e;
            if (!allowed.count(q)) coprime = false;
        }
        out["pairing"]["determinant_factorization"] = fac;
        add_check(checks, "determinant-coprime", coprime, "every prime of det divides 2 prod c_i");
    }
    bool pattern = V.dim() >= 3 && coeffs[0] < 0 && coeffs[1] < 0;
    for (std::size_t i = 2; i < coeffs.size(); ++i) pattern = pattern && coeffs[i] > 0;
    if (pattern) {
        PositivityResult pos = positivity_check(V);
        Json minors = Json::array();
        for (const auto& m : pos.minors) minors.push_back(m.str());
        out["positivity"] = {{"symmetric", pos.symmetric}, {"positive_definite", pos.positive_definite}, {"minors", minors}};
        add_check(checks, "positivity", pos.symmetric && pos.positive_definite, "leading principal minors of the trace form");
    }
    if (all_ones(coeffs)) lie_part(V, out, checks);
    out["checks"] = checks;
    return out;
}

Json clifford_finite(const std::vector<long long>& coeffs, const FieldSpec& field)
{
    const FiniteField& F = FiniteField::get(field.p, field.k);
    std::vector<Gf> c;
    for (long long x : coeffs) c.push_back(Gf(F, F.from_int(x)));
    QuadraticSpace<Gf> V(c);
    Json out;
    Json checks = Json::object();
    trace_checks(V, out, checks);
    if (V.dim() >= 2) {
        out["pairing"] = pairing_json(V, checks);
        if (field.p != 2) {
            const bool nonzero = out["pairing"]["determinant_nonzero"].get<bool>();
            add_check(checks, "determinant-coprime", nonzero, "det nonzero in characteristic " + std::to_string(field.p));
        }
    }
    if (all_ones(coeffs) && field.p != 2) lie_part(V, out, checks);
    out["checks"] = checks;
    return out;
}

void flatten(const Json& j, const std::string& path, std::ostringstream& os)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

long long FieldSpec::order() const
{
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    return p == 0 ? 0 : q;
}

std::string FieldSpec::name() const { return p == 0 ? "Q" : "F_" + std::to_string(order()); }

FieldSpec parse_field(const std::string& s)
{
    if (s == "Q" || s == "q:0") return {};
    if (s.rfind("q:", 0) != 0) throw std::invalid_argument("field must be Q or q:<prime power>, got '" + s + "'");
    long long q = 0;
    try {
        std::size_t used = 0;
        q = std::stoll(s.substr(2), &used);
        if (used != s.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field order in '" + s + "'");
    }
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        long long r = q;
        int k = 0;
        while (r % p == 0) {
            r /= p;
            ++k;
        }
        if (r != 1) break;
        return {p, k};
    }
    throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
}

std::uint64_t fnv1a64(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json envelope(const std::string& command, const Json& payload, double seconds)
{
    Json e;
    e["schema_version"] = kSchemaVersion;
    e["command"] = command;
    e["payload"] = payload;
    e["payload_hash"] = hex64(fnv1a64(payload.dump()));
    e["timing_seconds"] = seconds;
    return e;
}

Json poset_payload(const StratumPoset& poset)
{
    const ZipDatum& d = poset.datum;
    Json j;
    j["system"] = d.sys.name();
    j["family"] = family_name(d.sys.family());
    j["rank"] = d.sys.rank();
    j["J"] = d.J;
    j["K"] = d.K;
    j["phi"] = d.phi;
    j["x"] = {{"word", reduced_word(d.x)}, {"one_line", d.x.images()}};
    if (d.sys.family() != Family::A) {
        j["x"]["big_permutation"] = to_big_permutation(d.x);
        j["x"]["cycles"] = cycle_string(to_big_permutation(d.x));
    }
    j["x_cross_checked"] = d.x_cross_checked;
    Json strata = Json::array();
    for (std::size_t i = 0; i < poset.strata.size(); ++i) strata.push_back(stratum_json(poset.strata[i], static_cast<int>(i)));
    j["strata"] = strata;
    j["stratum_count"] = poset.strata.size();
    j["closure_pairs"] = pairs_json(poset.closure_pairs());
    j["hasse"] = pairs_json(poset.hasse);
    return j;
}

Json strata_payload(const CSpinReport& report)
{
    Json j = poset_payload(report.poset);
    j["n"] = report.n;
    j["m"] = report.m;
    for (std::size_t i = 0; i < report.labels.size(); ++i) j["strata"][i]["label"] = report.labels[i];
    Json checks = Json::object();
    for (const Check& c : report.checks) add_check(checks, c.name, c.pass, c.detail);
    j["checks"] = checks;
    return j;
}

Json types_payload(const TypeSchemeResult& r)
{
    Json j;
    j["family"] = family_name(r.family);
    j["m"] = r.m;
    j["b_classes"] = r.b_classes;
    j["delta_class"] = r.delta_class;
    j["delta_square"] = r.delta_square;
    j["galois_signs"] = r.galois_signs;
    j["orbits"] = r.orbits;
    j["orbit_count"] = r.orbit_count();
    j["expected_count"] = r.expected_count();
    Json checks = Json::object();
    add_check(checks, "orbit-count", r.orbit_count() == r.expected_count(),
              std::to_string(r.orbit_count()) + " orbits, expected " + std::to_string(r.expected_count()));
    j["checks"] = checks;
    return j;
}

Json clifford_payload(const std::vector<long long>& coeffs, const FieldSpec& field)
{
    Json j = field.rational() ? clifford_rational(coeffs) : clifford_finite(coeffs, field);
    j["dim"] = coeffs.size();
    j["coefficients"] = coeffs;
    j["field"] = field.name();
    return j;
}

Json fzip_payload(const FZipClassification& cls)
{
    Json j;
    j["field"] = "F_" + std::to_string(cls.q);
    j["max_ext_degree"] = cls.max_ext_degree;
    j["object_count"] = cls.objects.size();
    j["class_count"] = cls.class_count();
    Json classes = Json::array();
    for (int c = 0; c < cls.class_count(); ++c) {
        const FZip& z = cls.objects[cls.representatives[c]];
        Json members = Json::array();
        for (std::size_t k = 0; k < cls.objects.size(); ++k)
            if (cls.class_of[k] == c)
                members.push_back({{"object", k},
                                   {"C1", subspace_json(cls.objects[k].C(1))},
                                   {"D0", subspace_json(cls.objects[k].D(0))},
                                   {"witness_degree", cls.witness_degree[k]},
                                   {"witness", matrix_json<Gf>(cls.witnesses[k])}});
        classes.push_back({{"label", cls.class_labels[c]},
                           {"size", cls.class_sizes[c]},
                           {"representative", {{"object", cls.representatives[c]},
                                               {"C1", subspace_json(z.C(1))},
                                               {"D0", subspace_json(z.D(0))},
                                               {"phi0", matrix_json<Gf>(z.phi(0))},
                                               {"phi1", matrix_json<Gf>(z.phi(1))}}},
                           {"members", members}});
    }
    j["classes"] = classes;
    Json checks = Json::object();
    add_check(checks, "class-count", cls.class_count() == 2, std::to_string(cls.class_count()) + " classes, expected 2");
    j["checks"] = checks;
    return j;
}

Json oracle_payload(const ZipGroupDatum& datum, const OrbitClasses& classes)
{
    Json j;
    j["group"] = datum.name();
    j["field"] = "F_" + std::to_string(datum.field->order());
    j["mu"] = datum.mu;
    j["max_ext_degree"] = classes.max_ext_degree;
    j["group_order"] = classes.elements.size();
    j["class_count"] = classes.class_count();
    j["class_sizes"] = classes.class_sizes;
    j["count_by_degree"] = classes.count_by_degree;
    j["weyl_count"] = classes.weyl_count;
    Json reps = Json::array();
    for (int r : classes.representatives) reps.push_back(matrix_json<Gf>(classes.elements[r]));
    j["representatives"] = reps;
    Json checks = Json::object();
    add_check(checks, "class-count", classes.class_count() == classes.weyl_count,
              std::to_string(classes.class_count()) + " classes, |^JW| = " + std::to_string(classes.weyl_count));
    long long total = 0;
    for (int s : classes.class_sizes) total += s;
    add_check(checks, "partition", total == static_cast<long long>(classes.elements.size()),
              "class sizes sum to " + std::to_string(total) + " of " + std::to_string(classes.elements.size()));
    j["checks"] = checks;
    return j;
}

std::string hasse_dot(const Json& payload)
{
    if (!payload.contains("strata") || !payload.contains("hasse")) throw std::invalid_argument("payload has no stratum poset");
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const Json& s : payload["strata"]) {
        std::string word;
        for (const Json& letter : s["word"]) word += (word.empty() ? "s" : " s") + letter.dump();
        if (word.empty()) word = "e";
        os << "  s" << s["index"].get<int>() << " [label=\"" << word << "\\ndim " << s["dim"].get<int>() << "\"];\n";
    }
    for (const Json& e : payload["hasse"]) os << "  s" << e[0].get<int>() << " -> s" << e[1].get<int>() << ";\n";
    os << "}\n";
    return os.str();
}

std::string render_text(const Json& payload)
{
    std::ostringstream os;
    flatten(payload, "", os);
    return os.str();
}

std::vector<std::string> failed_assertions(const Json& payload, const std::vector<std::string>& requested)
{
    std::vector<std::string> failed;
    for (const std::string& name : requested) {
        if (!payload.contains("checks") || !payload["checks"].contains(name))
            throw std::invalid_argument("no check named '" + name + "' for this command and input");
        if (!payload["checks"][name]["pass"].get<bool>()) failed.push_back(name);
    }
    return failed;
}

}  // namespace eostrata
