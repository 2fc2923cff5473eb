#include <catch_amalgamated.hpp>

#include <regex>
#include <set>

#include "eostrata/report.hpp"

using namespace eostrata;

namespace {

std::set<std::pair<int, int>> dot_edges(const std::string& dot)
{
    std::set<std::pair<int, int>> out;
    std::regex edge(R"(s(\d+) -> s(\d+);)");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it)
        out.insert({std::stoi((*it)[1]), std::stoi((*it)[2])});
    return out;
}

std::set<std::pair<int, int>> json_edges(const Json& payload)
{
    std::set<std::pair<int, int>> out;
    for (const Json& e : payload["hasse"]) out.insert({e[0].get<int>(), e[1].get<int>()});
    return out;
}

}  // namespace

TEST_CASE("FNV-1a 64 reference vectors")
{
    CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
    CHECK(hex64(fnv1a64("a")) == "af63dc4c8601ec8c");
    CHECK(hex64(fnv1a64("foobar")) == "85944171f73967e8");
}

TEST_CASE("field specifications")
{
    CHECK(parse_field("Q").rational());
    FieldSpec f = parse_field("q:9");
    CHECK(f.p == 3);
    CHECK(f.k == 2);
    CHECK(f.name() == "F_9");
    CHECK(parse_field("q:5").k == 1);
    CHECK_THROWS_AS(parse_field("q:6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("q:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("q:4x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("F5"), std::invalid_argument);
}

TEST_CASE("envelope hashes the payload only")
{
    Json payload = {{"b", 1}, {"a", {2, 3}}};
    Json e1 = envelope("x", payload, 0.5);
    Json e2 = envelope("x", payload, 7.25);
    CHECK(e1["payload_hash"] == e2["payload_hash"]);
    CHECK(e1["payload_hash"] == hex64(fnv1a64(payload.dump())));
    CHECK(e1["schema_version"] == kSchemaVersion);
    // keys sorted
    CHECK(payload.dump() == R"({"a":[2,3],"b":1})");
    Json other = payload;
    other["b"] = 2;
    CHECK(envelope("x", other, 0.5)["payload_hash"] != e1["payload_hash"]);
}

TEST_CASE("strata payload for n = 3 is a chain")
{
    Json p = strata_payload(cspin_strata(3));
    CHECK(p["stratum_count"] == 4);
    CHECK(p["hasse"].size() == 3);
    for (const Json& e : p["hasse"]) CHECK(e[1].get<int>() == e[0].get<int>() + 1);
    CHECK(p["x"]["cycles"] == "(1,5)");
    CHECK(p["checks"]["strata-count"]["pass"] == true);
    CHECK(p["checks"]["odd-structure"]["pass"] == true);
    CHECK(dot_edges(hasse_dot(p)) == json_edges(p));
    // words are integer arrays, big permutations one-line
    CHECK(p["strata"][0]["word"].is_array());
    CHECK(p["strata"][0]["big_permutation"].size() == 5);
}

TEST_CASE("strata payload for n = 4 has a diamond at dimension 2")
{
    Json p = strata_payload(cspin_strata(4));
    CHECK(p["stratum_count"] == 6);
    int at_two = 0;
    for (const Json& s : p["strata"]) at_two += s["dim"] == 2;
    CHECK(at_two == 2);
    CHECK(p["hasse"].size() == 6);
    CHECK(p["checks"]["even-structure"]["pass"] == true);
    CHECK(dot_edges(hasse_dot(p)) == json_edges(p));
    CHECK(strata_payload(cspin_strata(4)).dump() == p.dump());
}

TEST_CASE("poset payload for A_2 with J = {1}")
{
    CoxeterSystem A2(Family::A, 2);
    Json p = poset_payload(strata_poset(build_zip_datum(A2, {1})));
    CHECK(p["stratum_count"] == 3);
    CHECK_FALSE(p["x"].contains("big_permutation"));
    CHECK(dot_edges(hasse_dot(p)) == json_edges(p));
}

TEST_CASE("clifford payloads")
{
    Json pos = clifford_payload({-1, -1, 1, 1}, parse_field("Q"));
    CHECK(pos["checks"]["positivity"]["pass"] == true);
    CHECK(pos["checks"]["trace"]["pass"] == true);
    CHECK(pos["trace_identity"] == "8");
    CHECK(pos["checks"]["pairing-antidiagonal"]["pass"] == true);

    Json unit = clifford_payload({1, 1, 1, 1}, parse_field("Q"));
    for (auto& [prime, e] : unit["pairing"]["determinant_factorization"].items()) CHECK(prime == "2");
    CHECK(unit["checks"]["determinant-coprime"]["pass"] == true);
    CHECK(unit["lie"]["dim_cspin"] == 7);

    Json odd = clifford_payload({1, 3, 5, 7}, parse_field("Q"));
    for (auto& [prime, e] : odd["pairing"]["determinant_factorization"].items())
        CHECK(std::set<std::string>{"2", "3", "5", "7"}.count(prime) == 1);

    Json f5 = clifford_payload({1, 1, 1, 1, 1, 1}, parse_field("q:5"));
    CHECK(f5["lie"]["dim_g"] == 17);
    CHECK(f5["lie"]["dim_cspin"] == 16);
    CHECK(f5["checks"]["lie-differ"]["pass"] == true);
    CHECK(f5["checks"]["determinant-coprime"]["pass"] == true);
    CHECK_FALSE(f5.contains("positivity"));
    CHECK_THROWS_AS(clifford_payload({1, 0, 1}, parse_field("Q")), std::invalid_argument);
}

TEST_CASE("fzip payload records verified witnesses")
{
    const FiniteField& F = FiniteField::get(2, 1);
    FZipClassification cls = classify_weight01_dim2(F, 2);
    Json p = fzip_payload(cls);
    CHECK(p["class_count"] == 2);
    int total = 0;
    for (const Json& c : p["classes"]) total += c["size"].get<int>();
    CHECK(total == p["object_count"].get<int>());
    for (std::size_t k = 0; k < cls.objects.size(); ++k) {
        const FZip& rep = cls.objects[cls.representatives[cls.class_of[k]]];
        const FiniteField& K = FiniteField::get(2, cls.witness_degree[k]);
        if (static_cast<int>(k) == cls.representatives[cls.class_of[k]]) continue;
        CHECK_FALSE(morphism_defect(rep.base_change(K), cls.objects[k].base_change(K), cls.witnesses[k]).has_value());
    }
}

TEST_CASE("oracle payload for GL_2 over F_2")
{
    const FiniteField& F = FiniteField::get(2, 1);
    ZipGroupDatum d = make_zip_group(GroupKind::GL, 2, {1, 0}, F);
    Json p = oracle_payload(d, orbit_classes(d, 2));
    CHECK(p["group_order"] == 6);
    CHECK(p["class_count"] == 2);
    CHECK(p["checks"]["class-count"]["pass"] == true);
    CHECK(p["checks"]["partition"]["pass"] == true);
    CHECK_THROWS_AS(hasse_dot(p), std::invalid_argument);
}

TEST_CASE("assertions and text rendering")
{
    Json p = strata_payload(cspin_strata(3));
    CHECK(failed_assertions(p, {"strata-count", "order"}).empty());
    CHECK_THROWS_AS(failed_assertions(p, {"even-structure"}), std::invalid_argument);
    Json broken = p;
    broken["checks"]["order"]["pass"] = false;
    CHECK(failed_assertions(broken, {"strata-count", "order"}) == std::vector<std::string>{"order"});
    const std::string text = render_text(p);
    CHECK(text.find("stratum_count: 4\n") != std::string::npos);
    CHECK(text.find("strata[0].dim: 0\n") != std::string::npos);
}
