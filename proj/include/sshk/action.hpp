#pragma once

#include <map>
#include <optional>
#include <string>

#include "sshk/report.hpp"

namespace sshk {

/// Freely reduced word in the generators of G; empty word = identity.
/// Equality is syntactic (after reduction) — word-problem decisions in G are
/// never attempted.
struct GroupWord {
    struct Sym {
        std::size_t gen;
        bool inv;
        friend auto operator<=>(const Sym&, const Sym&) = default;
    };
    std::vector<Sym> syms;

    bool empty() const { return syms.empty(); }
    GroupWord inverse() const;
    void reduce();  // cancel adjacent g g^-1 pairs

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

struct StabilizerData {
    std::size_t point;
    std::map<std::size_t, GroupWord> transversal;  // orbit letter e -> t_e with t_e(x)=e
    std::vector<GroupWord> schreier_generators;    // each fixes the point
    std::vector<GroupWord> sigma_images;           // sections of the generators at the point
};

/// A self-similar action (G, X): generators with a permutation of the alphabet
/// and a section word per letter, extended to words by the wreath cocycle
/// g(ep) = g(e) * (g|_e)(p).
struct SelfSimilarAction {
    struct Generator {
        std::string name;
        std::vector<std::size_t> perm;    // letter images
        std::vector<GroupWord> sections;  // one word per letter
    };
    struct Abelianization {
        AbPresentation pres;
        std::vector<std::vector<Int>> images;  // per generator, a vector in Z^g
    };

    std::size_t alphabet_size = 0;
    std::vector<Generator> generators;
    std::optional<Abelianization> abelianization;
    bool h2_vanishes = false;
    bool free_group_mode = false;

    void validate() const;  // InputError on malformed data

    std::size_t generator_index(const std::string& name) const;
    GroupWord parse_word(const std::string& text) const;
    std::string render_word(const GroupWord& w) const;

    std::size_t act_letter(const GroupWord& w, std::size_t x) const;
    std::vector<std::size_t> act(const GroupWord& w, const std::vector<std::size_t>& p) const;
    /// Section g|_p on a letter string, via the cocycle.
    GroupWord section(const GroupWord& w, const std::vector<std::size_t>& p) const;
    GroupWord section_letter(const GroupWord& w, std::size_t x) const;

    std::vector<std::vector<std::size_t>> orbits() const;
    bool is_transitive() const;

    /// Schreier generators t_{g(e)}^{-1} g t_e of the stabilizer of x, with
    /// their images under the virtual endomorphism (section at x).
    StabilizerData stabilizer(std::size_t x) const;

    /// Image of a word in the declared abelianization.
    std::vector<Int> ab_image(const GroupWord& w) const;

    /// Degree-1 transfer endomorphism of G^ab: column of g is the sum over
    /// letters e of the abelianized section g|_e.
    AbMap phi1() const;

    /// H_0 = Z/(|X|-1), H_1 = coker(id - phi1); with the h2_vanishes (or free
    /// group) assumption also H_2 = ker(id - phi1) and H_n = 0 above.
    GradedReport degree01_homology(std::size_t max_degree) const;

    /// Six-term K-theory for G free: K_0 = Z/(|X|-1) + ker(id - phi1),
    /// K_1 = coker(id - phi1).
    GradedReport degree01_ktheory_free_group() const;

    /// Close the generators and their inverses under sections; nullopt when
    /// the set exceeds the bound before stabilizing.
    std::optional<std::vector<GroupWord>> section_closure(std::size_t bound) const;
};

}  // namespace sshk
