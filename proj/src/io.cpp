#include "koszul/io.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace koszul {

namespace {

using nlohmann::json;

// nlohmann reports byte offsets; turn one into line:column for the message.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
    throw InputError("input schema error at " + path + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) schema_error(path, "missing key '" + std::string(key) + "'");
    return j.at(key);
}

std::string need_string(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_string()) schema_error(path + "." + key, "expected a string");
    return v.get<std::string>();
}

// coefficients may be written as JSON numbers (integers) or strings
std::string coeff_string(const json& v, const std::string& path) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    schema_error(path, "coefficient must be a string or an integer");
}

int generator_index(const std::string& name, const std::map<std::string, int>& idx,
                    const std::string& path) {
    auto it = idx.find(name);
    if (it == idx.end()) schema_error(path, "unknown generator '" + name + "'");
    return it->second;
}

std::vector<std::string> parse_generators(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of generator names");
    std::vector<std::string> names;
    std::map<std::string, int> seen;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& g = j.at(i);
        if (!g.is_string() || g.get<std::string>().empty())
            schema_error(path + "[" + std::to_string(i) + "]", "generator names are nonempty strings");
        std::string name = g.get<std::string>();
        if (seen.count(name))
            schema_error(path + "[" + std::to_string(i) + "]", "duplicate generator '" + name + "'");
        seen.emplace(name, int(i));
        names.push_back(name);
    }
    return names;
}

std::vector<std::vector<RelationTerm>> parse_relations(const json& j,
                                                       const std::map<std::string, int>& gens,
                                                       const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of relations");
    std::vector<std::vector<RelationTerm>> rels;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& rel = j.at(r);
        std::string rpath = path + "[" + std::to_string(r) + "]";
        if (!rel.is_array() || rel.empty()) schema_error(rpath, "a relation is a nonempty array of terms");
        std::vector<RelationTerm> terms;
        for (std::size_t t = 0; t < rel.size(); ++t) {
            const json& term = rel.at(t);
            std::string tpath = rpath + "[" + std::to_string(t) + "]";
            const json& word = need(term, "word", tpath);
            if (!word.is_array() || word.size() != 2)
                schema_error(tpath + ".word", "relation words must have length exactly 2");
            RelationTerm out;
            out.coeff = coeff_string(need(term, "coeff", tpath), tpath + ".coeff");
            if (!word.at(0).is_string() || !word.at(1).is_string())
                schema_error(tpath + ".word", "words are arrays of generator names");
            out.g1 = generator_index(word.at(0).get<std::string>(), gens, tpath + ".word[0]");
            out.g2 = generator_index(word.at(1).get<std::string>(), gens, tpath + ".word[1]");
            terms.push_back(std::move(out));
        }
        rels.push_back(std::move(terms));
    }
    return rels;
}

std::vector<std::vector<FamilyEntry>> parse_family_entries(const json& j,
                                                           const std::string& path) {
    if (!j.is_array() || j.empty()) schema_error(path, "expected a nonempty square array");
    std::vector<std::vector<FamilyEntry>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& row = j.at(i);
        std::string rpath = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != j.size()) schema_error(rpath, "family array must be square");
        std::vector<FamilyEntry> out;
        for (std::size_t k = 0; k < row.size(); ++k) {
            const json& cell = row.at(k);
            std::string cpath = rpath + "[" + std::to_string(k) + "]";
            FamilyEntry e;
            if (cell.is_object() && cell.contains("scale_pow")) {
                e.is_scale = true;
                e.scale_q = coeff_string(cell.at("scale_pow"), cpath + ".scale_pow");
            } else if (cell.is_object() && cell.contains("matrices")) {
                e.is_scale = false;
                const json& mats = cell.at("matrices");
                if (!mats.is_array()) schema_error(cpath + ".matrices", "expected an array of matrices");
                for (std::size_t d = 0; d < mats.size(); ++d) {
                    const json& m = mats.at(d);
                    if (!m.is_array()) schema_error(cpath + ".matrices", "each matrix is an array of rows");
                    std::vector<std::vector<std::string>> rowsv;
                    for (std::size_t rr = 0; rr < m.size(); ++rr) {
                        const json& mrow = m.at(rr);
                        if (!mrow.is_array()) schema_error(cpath + ".matrices", "rows are arrays");
                        std::vector<std::string> rv;
                        for (std::size_t cc = 0; cc < mrow.size(); ++cc)
                            rv.push_back(coeff_string(mrow.at(cc), cpath + ".matrices"));
                        rowsv.push_back(std::move(rv));
                    }
                    e.mats.push_back(std::move(rowsv));
                }
            } else {
                schema_error(cpath, "family entries carry either 'scale_pow' or 'matrices'");
            }
            out.push_back(std::move(e));
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

} // namespace

InputFile parse_input(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(bytes, e.byte > 0 ? e.byte - 1 : 0);
        throw InputError("input parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object()) throw InputError("input schema error at $: expected a JSON object");

    InputFile f;
    const json& sv = need(j, "schema_version", "$");
    if (!sv.is_number_integer() || sv.get<int>() != 1)
        schema_error("$.schema_version", "this tool reads schema_version 1");
    f.schema_version = 1;

    const json& field = need(j, "field", "$");
    std::string kind = need_string(field, "kind", "$.field");
    if (kind == "rational") {
        f.field = FieldSpec{FieldSpec::Kind::rational, 0};
    } else if (kind == "prime") {
        const json& p = need(field, "p", "$.field");
        if (!p.is_number_integer() || p.get<long long>() < 2)
            schema_error("$.field.p", "expected a prime >= 2");
        long long pv = p.get<long long>();
        if (pv >= (1ll << 31) || !is_prime_u32(std::uint32_t(pv)))
            schema_error("$.field.p", std::to_string(pv) + " is not a prime below 2^31");
        f.field = FieldSpec{FieldSpec::Kind::prime, std::uint32_t(pv)};
    } else {
        schema_error("$.field.kind", "expected 'rational' or 'prime'");
    }

    f.generators = parse_generators(need(j, "generators", "$"), "$.generators");
    std::map<std::string, int> gidx;
    for (std::size_t i = 0; i < f.generators.size(); ++i) gidx.emplace(f.generators[i], int(i));
    f.relations = parse_relations(need(j, "relations", "$"), gidx, "$.relations");

    if (j.contains("twist")) {
        const json& tw = j.at("twist");
        if (!tw.is_object()) schema_error("$.twist", "expected an object");
        TwistInput t;
        t.generators = parse_generators(need(tw, "generators", "$.twist"), "$.twist.generators");
        std::map<std::string, int> bidx;
        for (std::size_t i = 0; i < t.generators.size(); ++i) bidx.emplace(t.generators[i], int(i));
        if (tw.contains("relations"))
            t.relations = parse_relations(tw.at("relations"), bidx, "$.twist.relations");
        if (tw.contains("sigma") && tw.contains("family"))
            schema_error("$.twist", "give exactly one of 'sigma' and 'family'");
        if (tw.contains("sigma")) {
            const json& sg = tw.at("sigma");
            if (!sg.is_array()) schema_error("$.twist.sigma", "expected an array of entries");
            std::vector<SigmaEntry> entries;
            for (std::size_t i = 0; i < sg.size(); ++i) {
                const json& ent = sg.at(i);
                std::string epath = "$.twist.sigma[" + std::to_string(i) + "]";
                SigmaEntry e;
                e.b_in = generator_index(need_string(ent, "b", epath), bidx, epath + ".b");
                e.a_in = generator_index(need_string(ent, "a", epath), gidx, epath + ".a");
                const json& img = need(ent, "image", epath);
                if (!img.is_array()) schema_error(epath + ".image", "expected an array of terms");
                for (std::size_t k = 0; k < img.size(); ++k) {
                    const json& term = img.at(k);
                    std::string tpath = epath + ".image[" + std::to_string(k) + "]";
                    SigmaImageTerm it;
                    it.coeff = coeff_string(need(term, "coeff", tpath), tpath + ".coeff");
                    it.a_out = generator_index(need_string(term, "a", tpath), gidx, tpath + ".a");
                    it.b_out = generator_index(need_string(term, "b", tpath), bidx, tpath + ".b");
                    e.terms.push_back(std::move(it));
                }
                entries.push_back(std::move(e));
            }
            t.sigma = std::move(entries);
        } else if (tw.contains("family")) {
            const json& fp = tw.at("family");
            if (!fp.is_object()) schema_error("$.twist.family", "expected an object");
            if (!t.relations.empty())
                schema_error("$.twist.relations",
                             "a matrix family twists against the free algebra T(V); the twist "
                             "presentation must have no relations");
            FamilyInput fam;
            fam.sigma = parse_family_entries(need(fp, "sigma", "$.twist.family"),
                                             "$.twist.family.sigma");
            if (fam.sigma.size() != t.generators.size())
                schema_error("$.twist.family.sigma",
                             "family size must match the twist generator count");
            if (fp.contains("lambda")) {
                fam.lambda = parse_family_entries(fp.at("lambda"), "$.twist.family.lambda");
                if (fam.lambda->size() != t.generators.size())
                    schema_error("$.twist.family.lambda",
                                 "family size must match the twist generator count");
            }
            t.family = std::move(fam);
        } else {
            schema_error("$.twist", "a twist block needs 'sigma' or 'family'");
        }
        f.twist = std::move(t);
    }
    return f;
}

} // namespace koszul
