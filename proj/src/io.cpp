#include "io.hpp"

#include <sstream>
#include <utility>

#include <json.hpp>

namespace covsys {

using nlohmann::json;

namespace {

json parseDocument(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorCode::Parse, "input is not valid JSON");
    return doc;
}

i64 asInt(const json& j, const char* what) {
    if (!j.is_number_integer())
        fail(ErrorCode::Parse, std::string(what) + " must be an integer");
    return j.get<i64>();
}

Elem parseCoords(const json& j, std::size_t degree, const char* what) {
    if (!j.is_array() || j.size() != degree)
        fail(ErrorCode::Parse,
             std::string(what) + " must be an array of " + std::to_string(degree) + " integers");
    Elem e;
    for (const auto& v : j) e.c.push_back(asInt(v, what));
    return e;
}

FieldPtr parseField(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        fail(ErrorCode::Parse, "field must be an object with a \"type\" string");
    const std::string type = j["type"].get<std::string>();
    if (type == "rationals") return NumberField::rationals();
    if (type == "quadratic") {
        if (!j.contains("d")) fail(ErrorCode::Parse, "quadratic field needs \"d\"");
        return NumberField::quadratic(asInt(j["d"], "field parameter d"));
    }
    fail(ErrorCode::Parse, "unknown field type \"" + type + "\"");
}

json fieldToJson(const FieldPtr& field) {
    if (field->degree() == 1) return json{{"type", "rationals"}};
    if (field->degree() == 2) {
        // Recover d from omega^2 = u + v*omega.
        const Elem& sq = field->tableEntry(1, 1);
        if (sq.c[1] == 0) return json{{"type", "quadratic"}, {"d", sq.c[0]}};
        if (sq.c[1] == 1) return json{{"type", "quadratic"}, {"d", 4 * sq.c[0] + 1}};
    }
    fail(ErrorCode::Unsupported, "field has no serializable description");
}

json matToJson(const Mat& m) {
    json rows = json::array();
    for (const auto& row : m) rows.push_back(row);
    return rows;
}

std::string matToText(const Mat& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t k = 0; k < m[i].size(); ++k) {
            if (k) os << ',';
            os << m[i][k];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

std::string tupleToText(const std::vector<i64>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

json factorizationToJson(const Factorization& fac) {
    json out = json::array();
    for (const auto& pp : fac.factors) {
        out.push_back(json{{"prime", json{{"hnf", matToJson(pp.prime.ideal.hnfMatrix())},
                                          {"residue_char", pp.prime.residueChar},
                                          {"residue_deg", pp.prime.residueDeg},
                                          {"norm", pp.prime.ideal.norm()}}},
                           {"exponent", pp.exponent}});
    }
    return out;
}

std::string factorizationToText(const Factorization& fac) {
    if (fac.factors.empty()) return "unit";
    std::ostringstream os;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& pp = fac.factors[i];
        if (i) os << ' ';
        os << matToText(pp.prime.ideal.hnfMatrix()) << '^' << pp.exponent;
    }
    return os.str();
}

std::string cellPatternText(const Cell& cell) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < cell.entries.size(); ++i) {
        if (i) os << ' ';
        if (cell.entries[i])
            os << *cell.entries[i];
        else
            os << '*';
    }
    os << ']';
    return os.str();
}

std::string indexSetText(const Cell& cell) {
    std::ostringstream os;
    os << '{';
    const auto idx = cell.indexSet();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ',';
        os << idx[i];
    }
    os << '}';
    return os.str();
}

json cellToJson(const Cell& cell) {
    json pattern = json::array();
    for (const auto& e : cell.entries) {
        if (e)
            pattern.push_back(*e);
        else
            pattern.push_back(nullptr);
    }
    json idx = json::array();
    for (std::size_t i : cell.indexSet()) idx.push_back(i);
    return json{{"pattern", pattern}, {"index_set", idx}};
}

} // namespace

FieldPtr parseFieldJson(const std::string& text) { return parseField(parseDocument(text)); }

CoveringSystem parseSystemJson(const std::string& text) {
    json doc = parseDocument(text);
    if (!doc.is_object() || !doc.contains("field") || !doc.contains("classes"))
        fail(ErrorCode::Parse, "document needs \"field\" and \"classes\"");
    FieldPtr field = parseField(doc["field"]);
    const json& classesJson = doc["classes"];
    if (!classesJson.is_array() || classesJson.empty())
        fail(ErrorCode::Parse, "\"classes\" must be a nonempty array");
    std::vector<CongruenceClass> classes;
    for (const auto& cj : classesJson) {
        if (!cj.is_object() || !cj.contains("rep") || !cj.contains("modulus_gens"))
            fail(ErrorCode::Parse, "each class needs \"rep\" and \"modulus_gens\"");
        Elem rep = parseCoords(cj["rep"], field->degree(), "class rep");
        const json& gensJson = cj["modulus_gens"];
        if (!gensJson.is_array() || gensJson.empty())
            fail(ErrorCode::Parse, "\"modulus_gens\" must be a nonempty array");
        std::vector<Elem> gens;
        for (const auto& gj : gensJson)
            gens.push_back(parseCoords(gj, field->degree(), "modulus generator"));
        classes.emplace_back(std::move(rep), Ideal::fromGenerators(field, gens));
    }
    return CoveringSystem::make(field, std::move(classes));
}

std::string systemToJson(const CoveringSystem& sys) {
    json classes = json::array();
    for (const auto& cls : sys.classes()) {
        classes.push_back(
            json{{"rep", cls.rep.c}, {"modulus_gens", matToJson(cls.modulus.hnfMatrix())}});
    }
    json doc{{"field", fieldToJson(sys.field())}, {"classes", classes}};
    return doc.dump(2) + "\n";
}

std::string verdictToText(const FieldPtr&, const Verdict& verdict) {
    switch (verdict.kind) {
        case Verdict::Kind::Exact:
            return "exact\n";
        case Verdict::Kind::NotCovering:
            return "not-covering witness=" + coordsText(verdict.witness) + "\n";
        case Verdict::Kind::Overlap:
            return "overlap witness=" + coordsText(verdict.witness) + " classes=(" +
                   std::to_string(verdict.classA) + "," + std::to_string(verdict.classB) + ")\n";
    }
    fail(ErrorCode::Internal, "unknown verdict kind");
}

AnalysisReport analyze(const CoveringSystem& sys, std::size_t cap) {
    if (!verifyExact(sys, cap).exact())
        fail(ErrorCode::Domain, "analysis requires an exact covering system");
    AnalysisReport report;
    report.field = sys.field();
    report.commonHnf = sys.commonModulus().hnfMatrix();
    report.commonNorm = sys.commonModulus().norm();
    report.commonFactors = factorIdeal(sys.commonModulus());
    report.densityOk = densityIsOne(sys);
    CrtContext ctx(sys.field(), sys.commonModulus(), cap);
    report.bounds = ctx.bounds();
    report.coarseBounds = ctx.coarseBounds();
    CellPartition partition = systemToPartition(ctx, sys, cap);
    report.lemma1 = checkLemma1(partition);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& cls = sys.classes()[i];
        ClassAnalysis ca;
        ca.index = i;
        ca.rep = cls.rep;
        ca.modulusHnf = cls.modulus.hnfMatrix();
        ca.norm = cls.modulus.norm();
        ca.factors = factorIdeal(cls.modulus);
        ca.divisionMaximal = isDivisionMaximal(sys, i);
        ca.repetition = repetitionCount(sys, i);
        ca.bound1 = theorem1Bound(sys, i);
        ca.bound2 = theorem2Bound(sys, i);
        ca.bound1Ok = !ca.divisionMaximal || ca.repetition >= ca.bound1;
        ca.bound2Ok = !ca.bound2 || ca.repetition >= *ca.bound2;
        ca.cell = partition.cells[i];
        report.allBoundsOk = report.allBoundsOk && ca.bound1Ok && ca.bound2Ok;
        report.classes.push_back(std::move(ca));
    }
    report.allBoundsOk = report.allBoundsOk && report.lemma1.allOk;
    return report;
}

std::string analysisToText(const AnalysisReport& report) {
    std::ostringstream os;
    os << "field: " << fieldToJson(report.field).dump() << '\n';
    os << "classes: " << report.classes.size() << '\n';
    os << "common modulus: norm " << report.commonNorm << ", hnf " << matToText(report.commonHnf)
       << '\n';
    os << "factorization: " << factorizationToText(report.commonFactors) << '\n';
    os << "density check: " << (report.densityOk ? "ok" : "FAILED") << '\n';
    os << "parallelotope b: " << tupleToText(report.bounds) << '\n';
    os << "coarse d: " << tupleToText(report.coarseBounds) << '\n';
    os << '\n';
    os << "idx\trep\tmodulus\tnorm\tfactors\tdm\tcount\tt1\tt2\tcell\tindex\tok\n";
    for (const auto& ca : report.classes) {
        os << ca.index << '\t' << coordsText(ca.rep) << '\t' << matToText(ca.modulusHnf) << '\t'
           << ca.norm << '\t' << factorizationToText(ca.factors) << '\t'
           << (ca.divisionMaximal ? "yes" : "no") << '\t' << ca.repetition
           << '\t' << ca.bound1 << '\t';
        if (ca.bound2)
            os << *ca.bound2;
        else
            os << "all-equal";
        os << '\t' << cellPatternText(ca.cell) << '\t' << indexSetText(ca.cell) << '\t'
           << (ca.bound1Ok && ca.bound2Ok ? "yes" : "NO") << '\n';
    }
    os << '\n';
    os << "cell-count bound:";
    for (const auto& e : report.lemma1.entries)
        os << " cell=" << e.cellIndex << " bound=" << e.bound << " count=" << e.count
           << (e.ok ? " ok;" : " VIOLATED;");
    os << '\n';
    os << "verdict: exact; repetition bounds "
       << (report.allBoundsOk ? "all satisfied" : "VIOLATED") << '\n';
    return os.str();
}

std::string analysisToJson(const AnalysisReport& report) {
    json classes = json::array();
    for (const auto& ca : report.classes) {
        json cj{{"index", ca.index},
                {"rep", ca.rep.c},
                {"modulus", json{{"hnf", matToJson(ca.modulusHnf)},
                                 {"norm", ca.norm},
                                 {"factorization", factorizationToJson(ca.factors)}}},
                {"division_maximal", ca.divisionMaximal},
                {"repetition_count", ca.repetition},
                {"theorem1_bound", ca.bound1},
                {"theorem1_ok", ca.bound1Ok},
                {"theorem2_ok", ca.bound2Ok},
                {"cell", cellToJson(ca.cell)}};
        if (ca.bound2)
            cj["theorem2_bound"] = *ca.bound2;
        else
            cj["theorem2_bound"] = nullptr;
        classes.push_back(std::move(cj));
    }
    json lemma1Entries = json::array();
    for (const auto& e : report.lemma1.entries)
        lemma1Entries.push_back(
            json{{"cell", e.cellIndex}, {"bound", e.bound}, {"count", e.count}, {"ok", e.ok}});
    json doc{{"field", fieldToJson(report.field)},
             {"verdict", "exact"},
             {"common_modulus", json{{"hnf", matToJson(report.commonHnf)},
                                     {"norm", report.commonNorm},
                                     {"factorization", factorizationToJson(report.commonFactors)}}},
             {"density_ok", report.densityOk},
             {"parallelotope", json{{"b", report.bounds}, {"d", report.coarseBounds}}},
             {"classes", classes},
             {"lemma1", json{{"entries", lemma1Entries}, {"all_ok", report.lemma1.allOk}}},
             {"all_bounds_ok", report.allBoundsOk}};
    return doc.dump(2) + "\n";
}

std::string mapDump(const CoveringSystem& sys, std::size_t cap) {
    CrtContext ctx(sys.field(), sys.commonModulus(), cap);
    std::ostringstream os;
    os << "b: " << tupleToText(ctx.bounds()) << '\n';
    os << "d: " << tupleToText(ctx.coarseBounds()) << '\n';
    os << "residue\tf\tfbar\n";
    for (const Elem& x : sys.commonModulus().residues(cap))
        os << coordsText(x) << '\t' << tupleToText(ctx.mapF(x)) << '\t'
           << tupleToText(ctx.mapFBar(x)) << '\n';
    os << "class\trep\tnorm\tcell\tindex\n";
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& cls = sys.classes()[i];
        const Cell cell = classToCell(ctx, cls);
        os << i << '\t' << coordsText(cls.rep) << '\t' << cls.modulus.norm() << '\t'
           << cellPatternText(cell) << '\t' << indexSetText(cell) << '\n';
    }
    return os.str();
}

} // namespace covsys
