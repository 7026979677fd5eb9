#include "sshk/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sshk/errors.hpp"

namespace sshk {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError("invalid JSON");
    return j;
}

Int json_int(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw InputError("expected an integer entry");
}

Rat json_rat(const json& v) {
    if (v.is_number_integer()) return Rat(Int(v.get<long>()));
    if (v.is_string()) {
        Rat r(v.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw InputError("expected an integer or \"p/q\" entry");
}

template <typename M, typename E>
M parse_matrix(const json& v, E entry) {
    if (!v.is_array()) throw InputError("matrix must be an array of rows");
    std::size_t rows = v.size();
    std::size_t cols = rows ? v[0].size() : 0;
    M m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            throw InputError("matrix rows must all have the same length");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(v[i][j]);
    }
    return m;
}

IntMatrix int_matrix(const json& v) { return parse_matrix<IntMatrix>(v, json_int); }
RatMatrix rat_matrix(const json& v) { return parse_matrix<RatMatrix>(v, json_rat); }

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw InputError(std::string("missing field: ") + name);
    return *it;
}

SelfSimilarAction parse_automaton(const json& j) {
    SelfSimilarAction act;
    act.alphabet_size = field(j, "alphabet").get<std::size_t>();
    const json& gens = field(j, "generators");
    if (!gens.is_object() || gens.empty()) throw InputError("generators must be a non-empty object");
    // first pass: names and permutations, so section words can be parsed
    std::vector<json> section_lists;
    for (auto it = gens.begin(); it != gens.end(); ++it) {
        SelfSimilarAction::Generator g;
        g.name = it.key();
        for (const auto& v : field(it.value(), "perm")) g.perm.push_back(v.get<std::size_t>());
        act.generators.push_back(std::move(g));
        section_lists.push_back(field(it.value(), "sections"));
    }
    for (std::size_t i = 0; i < act.generators.size(); ++i) {
        const json& secs = section_lists[i];
        if (!secs.is_array() || secs.size() != act.alphabet_size)
            throw InputError("generator '" + act.generators[i].name +
                             "' needs one section word per letter");
        for (const auto& w : secs)
            act.generators[i].sections.push_back(act.parse_word(w.get<std::string>()));
    }
    if (j.contains("abelianization")) {
        const json& ab = j["abelianization"];
        SelfSimilarAction::Abelianization a;
        std::vector<Int> invariants;
        for (const auto& v : field(ab, "invariants")) invariants.push_back(json_int(v));
        a.pres = AbPresentation::from_invariants(invariants);
        const json& images = field(ab, "images");
        for (const auto& g : act.generators) {
            auto it = images.find(g.name);
            if (it == images.end())
                throw InputError("abelianization image missing for generator '" + g.name + "'");
            std::vector<Int> img;
            for (const auto& v : *it) img.push_back(json_int(v));
            if (img.size() != a.pres.generators)
                throw InputError("abelianization image for '" + g.name + "' has wrong length");
            a.images.push_back(std::move(img));
        }
        act.abelianization = std::move(a);
    }
    if (j.contains("assume")) {
        const json& as = j["assume"];
        act.h2_vanishes = as.value("h2_vanishes", false);
        act.free_group_mode = as.value("free_group", false);
    }
    act.validate();
    return act;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw InputError("input document must be a JSON object");
    InputDocument doc;
    doc.kind = field(j, "kind").get<std::string>();
    if (doc.kind == "automaton") {
        doc.automaton = parse_automaton(j);
    } else if (doc.kind == "graph") {
        GraphInput g;
        g.adjacency = int_matrix(field(j, "adjacency"));
        for (const auto& v : field(j, "regular")) g.regular.push_back(v.get<std::size_t>());
        doc.graph = std::move(g);
    } else if (doc.kind == "katsura") {
        KatsuraInput k;
        k.A = int_matrix(field(j, "A"));
        k.B = int_matrix(field(j, "B"));
        doc.katsura = std::move(k);
    } else if (doc.kind == "free_abelian") {
        FreeAbelianInput f;
        f.A = rat_matrix(field(j, "matrix"));
        f.d = json_int(field(j, "alphabet"));
        doc.free_abelian = std::move(f);
    } else if (doc.kind == "multispinal") {
        MultispinalInput m;
        m.d = field(j, "d").get<std::size_t>();
        m.m = field(j, "m").get<long>();
        m.k = field(j, "k").get<std::size_t>();
        for (const auto& entry : field(j, "phi")) {
            if (entry.contains("aut"))
                m.phi.push_back({true, int_matrix(entry["aut"])});
            else if (entry.contains("hom"))
                m.phi.push_back({false, int_matrix(entry["hom"])});
            else
                throw InputError("each phi entry needs an \"aut\" or \"hom\" matrix");
        }
        doc.multispinal = std::move(m);
    } else {
        throw InputError("unknown kind: " + doc.kind);
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

InputDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

IntMatrix parse_int_matrix(const std::string& text) {
    json j = parse_json(text);
    if (j.is_object()) j = field(j, "matrix");
    return int_matrix(j);
}

RatMatrix parse_rat_matrix(const std::string& text) {
    json j = parse_json(text);
    if (j.is_object()) j = field(j, "matrix");
    return rat_matrix(j);
}

}  // namespace sshk
