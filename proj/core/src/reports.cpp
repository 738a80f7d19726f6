#include "kdnf/reports.hpp"

#include "kdnf/io.hpp"

#include <cstdio>

namespace kdnf {

namespace {

using nlohmann::json;

json witness_json(const Assignment& a, const std::vector<std::string>& names) {
    json w = json::object();
    for (VariableId v = 1; v <= a.size(); ++v) {
        std::string name = (v <= names.size() && !names[v - 1].empty())
                               ? names[v - 1]
                               : "x_" + std::to_string(v);
        w[name] = a.value(v);
    }
    return w;
}

json subject_json(const std::optional<FamilyDescriptor>& fam, const std::string& hash) {
    json s = json::object();
    if (fam)
        s["family"] = fam->str();
    s["instance"] = hash;
    return s;
}

json locus_json(const LocusEntry& e, const std::vector<std::string>& names) {
    json j = {{"formula", e.locus.formula},
              {"term", e.locus.term},
              {"literal", e.locus.literal},
              {"status", to_string(e.status)}};
    if (e.witness)
        j["witness"] = witness_json(*e.witness, names);
    if (e.x_weight)
        j["x_weight"] = *e.x_weight;
    return j;
}

json counts_json(const ReportCounts& c) {
    return {{"loci", c.loci},
            {"satisfiable", c.satisfiable},
            {"still_unsatisfiable", c.still_unsat},
            {"timeouts", c.timeouts}};
}

json stats_json(const SolverStats& s, double elapsed_s, int jobs) {
    return {{"decisions", s.decisions},
            {"propagations", s.propagations},
            {"assignments_scanned", s.assignments_scanned},
            {"solver_elapsed_s", s.elapsed_s},
            {"elapsed_s", elapsed_s},
            {"jobs", jobs}};
}

json claim_json(const WeightClaim& c, const std::vector<std::string>& names) {
    json j = {{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}};
    if (c.counterexample)
        j["counterexample"] = witness_json(*c.counterexample, names);
    return j;
}


} // namespace

json report_json(const VerificationReport& rep) {
    json j = {{"schema", "kdnf-report/1"},
              {"check", rep.check},
              {"subject", subject_json(rep.subject, rep.instance_hash)},
              {"verdict", to_string(rep.verdict)},
              {"counts", counts_json(rep.counts)}};
    if (rep.counterexample)
        j["counterexample"] = witness_json(*rep.counterexample, rep.names);
    json loci = json::array();
    for (const LocusEntry& e : rep.loci)
        loci.push_back(locus_json(e, rep.names));
    j["loci"] = std::move(loci);
    j["stats"] = stats_json(rep.stats, rep.elapsed_s, rep.jobs);
    return j;
}

json report_json(const WeightGadgetReport& rep) {
    json loci = json::array();
    for (const LocusEntry& e : rep.loci)
        loci.push_back(locus_json(e, rep.names));
    json j = {{"schema", "kdnf-report/1"},
              {"check", "weight-gadget"},
              {"subject", subject_json(rep.subject, rep.instance_hash)},
              {"verdict", to_string(rep.verdict)},
              {"claims", json::array({claim_json(rep.low_weight_models, rep.names),
                                      claim_json(rep.high_weight_excluded, rep.names),
                                      claim_json(rep.weakenings_release, rep.names)})},
              {"counts", counts_json(rep.counts)},
              {"loci", std::move(loci)}};
    j["stats"] = stats_json(rep.stats, rep.elapsed_s, rep.jobs);
    return j;
}

json report_json(const BoundsReport& rep) {
    const BoundsRecord& r = rep.record;
    json rec = {{"k", r.k},
                {"nvars", r.nvars},
                {"nformulas", r.nformulas},
                {"clause_set_bound", r.clause_set_bound.str()},
                {"var_upper", r.var_upper.str()}};
    if (r.family_m)
        rec["family_m"] = *r.family_m;
    if (r.family_k)
        rec["family_k"] = *r.family_k;
    if (r.xor_vars)
        rec["xor_vars"] = *r.xor_vars;
    if (r.var_lower)
        rec["var_lower"] = rational_str(*r.var_lower);
    if (r.xor_lower)
        rec["xor_lower"] = rational_str(*r.xor_lower);
    json checks = json::array();
    for (const BoundCheck& c : rep.checks)
        checks.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    return {{"schema", "kdnf-report/1"},
            {"check", "bounds"},
            {"verdict", to_string(rep.verdict)},
            {"record", std::move(rec)},
            {"checks", std::move(checks)}};
}

json report_json(const TarsiScanReport& rep) {
    json violations = json::array();
    for (const DnfSet& d : rep.violations)
        violations.push_back(serialize_kdnf(d));
    json j = {{"schema", "kdnf-report/1"},
              {"check", "tarsi-scan"},
              {"verdict", to_string(rep.verdict)},
              {"max_clauses", rep.max_clauses},
              {"max_vars", rep.max_vars},
              {"sets_scanned", rep.sets_scanned},
              {"unsat_found", rep.unsat_found},
              {"min_unsat_found", rep.min_unsat_found},
              {"violations", std::move(violations)}};
    j["stats"] = stats_json(rep.stats, rep.elapsed_s, 1);
    return j;
}

json report_json(const ImplicationResult& r, const DnfSet& d, const CdXorFormula& g) {
    json subject = subject_json(d.family, instance_hash(d));
    subject["companion"] = instance_hash(g);
    json clauses = json::array();
    for (const auto& c : r.checks)
        clauses.push_back({{"clause", c.clause}, {"status", to_string(c.status)}});
    json j = {{"schema", "kdnf-report/1"},
              {"check", "implication"},
              {"subject", std::move(subject)},
              {"verdict", to_string(r.status)},
              {"clauses", std::move(clauses)}};
    if (r.violated_clause)
        j["violated_clause"] = *r.violated_clause;
    if (r.witness)
        j["witness"] = witness_json(*r.witness, g.names);
    j["stats"] = json::object();
    return j;
}

json report_json(const PrecisionResult& r, const DnfSet& d, const CdXorFormula& g) {
    json subject = subject_json(d.family, instance_hash(d));
    subject["companion"] = instance_hash(g);
    json impl = report_json(r.implication, d, g);
    impl.erase("schema");
    impl.erase("subject");
    impl.erase("stats");
    json atoms = json::array();
    for (const auto& a : r.atoms) {
        json aj = {{"clause", a.clause}, {"atom", a.atom}, {"status", to_string(a.status)}};
        if (a.witness)
            aj["witness"] = witness_json(*a.witness, g.names);
        atoms.push_back(std::move(aj));
    }
    json j = {{"schema", "kdnf-report/1"},
              {"check", "precise-implication"},
              {"subject", std::move(subject)},
              {"verdict", to_string(r.verdict)},
              {"implication", std::move(impl)},
              {"atoms", std::move(atoms)}};
    j["stats"] = json::object();
    return j;
}

std::string canonical_report_body(const json& report) {
    json body = report;
    body.erase("stats");
    return body.dump();
}

std::string report_hash(const json& report) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_report_body(report))));
    return std::string("fnv1a64:") + buf;
}

json finalize_report(json report) {
    report["stats"]["body_hash"] = report_hash(report);
    return report;
}

} // namespace kdnf
