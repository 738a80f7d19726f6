#include <kdnf/reports.hpp>

#include <doctest.h>

#include <kdnf/families.hpp>
#include <kdnf/io.hpp>

using namespace kdnf;
using namespace kdnf::families;

TEST_CASE("minimality reports render with the documented shape") {
    const DnfSet d = min_unsat_set(2, 2);
    const nlohmann::json j = report_json(check_min_unsat(d));
    CHECK(j["schema"] == "kdnf-report/1");
    CHECK(j["check"] == "min-unsat");
    CHECK(j["verdict"] == "fails"); // the width-2 instance is adjudicated non-minimal
    CHECK(j["subject"]["family"] == "min_unsat m=2 k=2 nu=2");
    CHECK(j["subject"]["instance"] == instance_hash(d));
    CHECK(j["counts"]["loci"] == 27);
    CHECK(j["counts"]["satisfiable"] == 24);
    CHECK(j["counts"]["still_unsatisfiable"] == 3);
    CHECK(j["loci"].size() == 27);
    for (const auto& e : j["loci"]) {
        if (e["status"] == "satisfiable") {
            CHECK(e["witness"].size() == 10);
            CHECK(e["witness"].begin().value().is_boolean());
        } else {
            CHECK(e["status"] == "still-unsatisfiable");
            CHECK(!e.contains("witness"));
        }
    }
    CHECK(j.contains("stats"));
    CHECK(j["stats"]["jobs"] == 1);

    // JSON round-trip is the identity on the rendered report.
    CHECK(nlohmann::json::parse(j.dump()) == j);

    const nlohmann::json ok = report_json(check_min_unsat(substitute_or_of_ands(tarsi_cnf(1), 2)));
    CHECK(ok["verdict"] == "holds");
    for (const auto& e : ok["loci"]) CHECK(e["status"] == "satisfiable");
}

TEST_CASE("canonical body excludes stats and drives the hash") {
    const DnfSet d = min_unsat_set(2, 2);
    nlohmann::json j = report_json(check_min_unsat(d));
    const std::string body = canonical_report_body(j);
    CHECK(body.find("\"stats\"") == std::string::npos);
    CHECK(body.find("\"elapsed") == std::string::npos);

    const std::string h = report_hash(j);
    CHECK(h.rfind("fnv1a64:", 0) == 0);

    nlohmann::json stamped = finalize_report(j);
    CHECK(stamped["stats"]["body_hash"] == h);
    CHECK(report_hash(stamped) == h); // stamping cannot disturb the body

    // Timing noise never shifts the hash.
    j["stats"]["elapsed_s"] = 99.0;
    CHECK(report_hash(j) == h);
}

TEST_CASE("weight gadget and bounds reports serialize their claim lists") {
    const nlohmann::json w = report_json(check_weight_gadget(2, 3));
    CHECK(w["check"] == "weight-gadget");
    CHECK(w["verdict"] == "holds");
    REQUIRE(w["claims"].size() == 3);
    CHECK(w["claims"][0]["name"] == "low-weight-models");
    CHECK(w["claims"][2]["verdict"] == "holds");
    for (const auto& e : w["loci"])
        CHECK(e["x_weight"].get<int>() >= 2);

    // The failing width-2 shape keeps per-claim verdicts separate.
    const nlohmann::json w2 = report_json(check_weight_gadget(2, 2));
    CHECK(w2["verdict"] == "fails");
    CHECK(w2["claims"][0]["verdict"] == "holds");
    CHECK(w2["claims"][1]["verdict"] == "holds");
    CHECK(w2["claims"][2]["verdict"] == "fails");
    for (const auto& e : w2["loci"])
        if (e["status"] == "still-unsatisfiable") CHECK(!e.contains("x_weight"));

    const DnfSet d = min_unsat_set(2, 3);
    const nlohmann::json b = report_json(check_bounds(d));
    CHECK(b["check"] == "bounds");
    CHECK(b["verdict"] == "holds");
    CHECK(b["record"]["nvars"] == 80);
    CHECK(b["record"]["var_lower"] == "1/27");
    for (const auto& c : b["checks"])
        CHECK(c["holds"] == true);
}

TEST_CASE("scan and implication reports serialize") {
    const nlohmann::json s = report_json(tarsi_scan(2, 2));
    CHECK(s["check"] == "tarsi-scan");
    CHECK(s["verdict"] == "holds");
    CHECK(s["violations"].empty());
    CHECK(s["sets_scanned"] == 8 + 28);

    const auto pair = xor_implication_pair(2, 2);
    const nlohmann::json i = report_json(implies(pair.d, pair.g), pair.d, pair.g);
    CHECK(i["check"] == "implication");
    CHECK(i["verdict"] == "implied");
    CHECK(i["clauses"].size() == 2);
    CHECK(i["subject"]["companion"] == instance_hash(pair.g));

    const nlohmann::json p = report_json(check_precise_implication(pair.d, pair.g), pair.d, pair.g);
    CHECK(p["check"] == "precise-implication");
    CHECK(p["verdict"] == "precise");
    REQUIRE(p["atoms"].size() == 4);
    for (const auto& a : p["atoms"]) {
        CHECK(a["status"] == "sat");
        CHECK(a.contains("witness"));
    }
    CHECK(!p["implication"].contains("stats"));
}
