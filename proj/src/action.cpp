#include "sshk/action.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "sshk/errors.hpp"

namespace sshk {

void GroupWord::reduce() {
    std::vector<Sym> out;
    for (const Sym& s : syms) {
        if (!out.empty() && out.back().gen == s.gen && out.back().inv != s.inv)
            out.pop_back();
        else
            out.push_back(s);
    }
    syms = std::move(out);
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    w.syms.reserve(syms.size());
    for (auto it = syms.rbegin(); it != syms.rend(); ++it) w.syms.push_back({it->gen, !it->inv});
    return w;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord w;
    w.syms.reserve(a.syms.size() + b.syms.size());
    w.syms = a.syms;
    w.syms.insert(w.syms.end(), b.syms.begin(), b.syms.end());
    w.reduce();
    return w;
}

void SelfSimilarAction::validate() const {
    if (alphabet_size < 2) throw InputError("alphabet must have at least 2 letters");
    for (const auto& g : generators) {
        if (g.perm.size() != alphabet_size || g.sections.size() != alphabet_size)
            throw InputError("generator '" + g.name + "': perm/sections length mismatch");
        std::vector<bool> seen(alphabet_size, false);
        for (std::size_t img : g.perm) {
            if (img >= alphabet_size || seen[img])
                throw InputError("generator '" + g.name + "': perm is not a bijection");
            seen[img] = true;
        }
    }
    if (abelianization) {
        if (abelianization->images.size() != generators.size())
            throw InputError("abelianization must give an image for every generator");
        for (const auto& v : abelianization->images)
            if (v.size() != abelianization->pres.generators)
                throw InputError("abelianization image vector has wrong length");
    }
}

std::size_t SelfSimilarAction::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return i;
    throw InputError("unknown generator '" + name + "'");
}

GroupWord SelfSimilarAction::parse_word(const std::string& text) const {
    GroupWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;  // identity, as render_word emits it
        bool inv = false;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            std::string exp = tok.substr(pos + 1);
            if (exp != "-1" && exp != "1")
                throw InputError("unsupported exponent '" + exp + "' in word");
            inv = (exp == "-1");
            tok = tok.substr(0, pos);
        }
        w.syms.push_back({generator_index(tok), inv});
    }
    w.reduce();
    return w;
}

std::string SelfSimilarAction::render_word(const GroupWord& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.syms.size(); ++i) {
        if (i) os << " ";
        os << generators[w.syms[i].gen].name;
        if (w.syms[i].inv) os << "^-1";
    }
    return os.str();
}

std::size_t SelfSimilarAction::act_letter(const GroupWord& w, std::size_t x) const {
    if (x >= alphabet_size) throw InputError("letter out of range");
    // rightmost symbol acts first
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        const auto& perm = generators[it->gen].perm;
        if (!it->inv) {
            x = perm[x];
        } else {
            x = std::find(perm.begin(), perm.end(), x) - perm.begin();
        }
    }
    return x;
}

GroupWord SelfSimilarAction::section_letter(const GroupWord& w, std::size_t x) const {
    if (x >= alphabet_size) throw InputError("letter out of range");
    // (uv)|_x = u|_{v(x)} * v|_x, accumulated right to left
    GroupWord result;
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        const auto& gen = generators[it->gen];
        GroupWord sec;
        std::size_t next;
        if (!it->inv) {
            sec = gen.sections[x];
            next = gen.perm[x];
        } else {
            // g^-1|_x = (g|_{g^-1(x)})^-1
            next = std::find(gen.perm.begin(), gen.perm.end(), x) - gen.perm.begin();
            sec = gen.sections[next].inverse();
        }
        result = sec * result;
        x = next;
    }
    return result;
}

std::vector<std::size_t> SelfSimilarAction::act(const GroupWord& w,
                                               const std::vector<std::size_t>& p) const {
    std::vector<std::size_t> out;
    out.reserve(p.size());
    GroupWord cur = w;
    for (std::size_t x : p) {
        out.push_back(act_letter(cur, x));
        cur = section_letter(cur, x);
    }
    return out;
}

GroupWord SelfSimilarAction::section(const GroupWord& w, const std::vector<std::size_t>& p) const {
    GroupWord cur = w;
    for (std::size_t x : p) cur = section_letter(cur, x);
    return cur;
}

std::vector<std::vector<std::size_t>> SelfSimilarAction::orbits() const {
    std::vector<long> label(alphabet_size, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = 0; x < alphabet_size; ++x) {
        if (label[x] >= 0) continue;
        std::vector<std::size_t> orbit;
        std::deque<std::size_t> queue{x};
        label[x] = (long)out.size();
        while (!queue.empty()) {
            std::size_t y = queue.front();
            queue.pop_front();
            orbit.push_back(y);
            for (const auto& g : generators) {
                for (std::size_t z : {g.perm[y], (std::size_t)(std::find(g.perm.begin(),
                                                                        g.perm.end(), y) -
                                                              g.perm.begin())}) {
                    if (label[z] < 0) {
                        label[z] = (long)out.size();
                        queue.push_back(z);
                    }
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool SelfSimilarAction::is_transitive() const { return orbits().size() == 1; }

StabilizerData SelfSimilarAction::stabilizer(std::size_t x) const {
    if (x >= alphabet_size) throw InputError("letter out of range");
    StabilizerData sd;
    sd.point = x;
    sd.transversal[x] = GroupWord{};
    // breadth-first Schreier tree over generator actions (and inverses)
    std::deque<std::size_t> queue{x};
    while (!queue.empty()) {
        std::size_t e = queue.front();
        queue.pop_front();
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            for (bool inv : {false, true}) {
                GroupWord g{{{gi, inv}}};
                std::size_t img = act_letter(g, e);
                if (!sd.transversal.count(img)) {
                    sd.transversal[img] = g * sd.transversal[e];
                    queue.push_back(img);
                }
            }
        }
    }
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        GroupWord g{{{gi, false}}};
        for (const auto& [e, te] : sd.transversal) {
            std::size_t img = act_letter(g, e);
            GroupWord s = sd.transversal.at(img).inverse() * g * te;
            if (s.empty()) continue;
            if (act_letter(s, x) != x)
                throw PreconditionError("internal: schreier generator does not fix the point");
            sd.schreier_generators.push_back(s);
            sd.sigma_images.push_back(section_letter(s, x));
        }
    }
    return sd;
}

std::vector<Int> SelfSimilarAction::ab_image(const GroupWord& w) const {
    if (!abelianization) throw PreconditionError("no abelianization declared");
    std::vector<Int> v(abelianization->pres.generators, 0);
    for (const auto& s : w.syms) {
        const auto& img = abelianization->images[s.gen];
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] += s.inv ? -img[i] : img[i];
    }
    return v;
}

AbMap SelfSimilarAction::phi1() const {
    if (!abelianization) throw PreconditionError("no abelianization declared");
    std::size_t g = abelianization->pres.generators;
    IntMatrix m(g, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        std::vector<Int> col(g, 0);
        for (std::size_t e = 0; e < alphabet_size; ++e) {
            auto v = ab_image(generators[j].sections[e]);
            for (std::size_t i = 0; i < g; ++i) col[i] += v[i];
        }
        for (std::size_t i = 0; i < g; ++i) m.at(i, j) = col[i];
    }
    // Columns above are indexed by the action's generators.  To get an
    // endomorphism of G^ab we need Phi on the presentation basis e_1..e_g:
    // every basis vector must appear as the declared image of some generator
    // (the usual convention: name the abelianization basis after generators).
    IntMatrix phi(g, g);
    std::vector<bool> have(g, false);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const auto& img = abelianization->images[j];
        std::size_t ones = 0, pos = 0;
        bool standard = true;
        for (std::size_t i = 0; i < g; ++i) {
            if (img[i] == 1) {
                ++ones;
                pos = i;
            } else if (img[i] != 0) {
                standard = false;
            }
        }
        if (standard && ones == 1 && !have[pos]) {
            have[pos] = true;
            for (std::size_t i = 0; i < g; ++i) phi.at(i, pos) = m.at(i, j);
        }
    }
    for (bool h : have)
        if (!h)
            throw InputError(
                "every abelianization basis vector must be the declared image of a generator");
    // generators whose images are combinations of basis vectors must be
    // consistent with the inferred matrix (up to relations)
    SmithDecomposition snf_r = smith_normal_form(abelianization->pres.relations);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        std::vector<Int> diff(g);
        for (std::size_t i = 0; i < g; ++i) {
            diff[i] = -m.at(i, j);
            for (std::size_t k = 0; k < g; ++k)
                diff[i] += phi.at(i, k) * abelianization->images[j][k];
        }
        if (!in_column_span(snf_r, diff))
            throw PreconditionError("declared abelianization is inconsistent at generator '" +
                                    generators[j].name + "'");
    }
    AbMap map = AbMap::endo(abelianization->pres, phi);
    if (auto bad = abmap_check(map))
        throw PreconditionError("declared abelianization is inconsistent: relator " +
                                std::to_string(*bad) + " is not respected by phi1");
    return map;
}

GradedReport SelfSimilarAction::degree01_homology(std::size_t max_degree) const {
    if (!is_transitive())
        throw PreconditionError(
            "action is not transitive on the alphabet; use the graph/katsura input kinds "
            "for multi-orbit groupoids");
    GradedReport rep;
    rep.set(0, FinGenAbGroup::cyclic(Int(alphabet_size) - 1), "transfer degree 0");
    AbMap phi = phi1();
    IntMatrix one_minus = IntMatrix::identity(phi.matrix.rows) - phi.matrix;
    AbMap m = AbMap::endo(phi.source, one_minus);
    if (max_degree >= 1) rep.set(1, abmap_cokernel(m), "transfer degree 1");
    if (h2_vanishes || free_group_mode) {
        if (max_degree >= 2) rep.set(2, abmap_kernel(m), "transfer degree 2 (H_2(G)=0 assumed)");
        for (std::size_t n = 3; n <= max_degree; ++n)
            rep.set(n, FinGenAbGroup::trivial(), "vanishing group homology assumed");
    } else {
        rep.flags.push_back("degrees >= 2 need an assumption or a specialized engine");
    }
    return rep;
}

GradedReport SelfSimilarAction::degree01_ktheory_free_group() const {
    if (!free_group_mode)
        throw PreconditionError("K-theory path requires the free-group assumption flag");
    if (!is_transitive()) throw PreconditionError("action is not transitive on the alphabet");
    AbMap phi = phi1();
    IntMatrix one_minus = IntMatrix::identity(phi.matrix.rows) - phi.matrix;
    AbMap m = AbMap::endo(phi.source, one_minus);
    // unit level: multiplication by |X| on Z[1], so 1-|X| there
    FinGenAbGroup unit_coker = FinGenAbGroup::cyclic(Int(alphabet_size) - 1);
    FinGenAbGroup k0_quot = abmap_kernel(m);   // free (kernel in a free group's Z^r)
    FinGenAbGroup k1_sub = abmap_cokernel(m);
    GradedReport rep;
    KTheoryPair k;
    k.k0 = splice_extension(unit_coker, k0_quot);
    k.k1 = splice_extension(k1_sub, FinGenAbGroup::trivial());
    k.unit_class = unit_coker.is_trivial() ? "0" : "generator of " + unit_coker.render();
    k.provenance = "six-term sequence, free group";
    rep.k_theory = std::move(k);
    return rep;
}

std::optional<std::vector<GroupWord>> SelfSimilarAction::section_closure(
    std::size_t bound) const {
    std::set<GroupWord> closed;
    std::deque<GroupWord> queue;
    auto push = [&](const GroupWord& w) {
        if (closed.insert(w).second) queue.push_back(w);
    };
    push(GroupWord{});
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        push(GroupWord{{{gi, false}}});
        push(GroupWord{{{gi, true}}});
    }
    while (!queue.empty()) {
        if (closed.size() > bound) return std::nullopt;
        GroupWord w = queue.front();
        queue.pop_front();
        for (std::size_t x = 0; x < alphabet_size; ++x) push(section_letter(w, x));
    }
    return std::vector<GroupWord>(closed.begin(), closed.end());
}

}  // namespace sshk
