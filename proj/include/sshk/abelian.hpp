#pragma once

#include <optional>

#include "sshk/smith.hpp"

namespace sshk {

/// Finitely presented abelian group Z^generators / column-span(relations).
struct AbPresentation {
    std::size_t generators = 0;
    IntMatrix relations;  // generators rows; columns are relators

    static AbPresentation free_abelian(std::size_t g) { return {g, IntMatrix(g, 0)}; }
    /// Z/d_1 + ... + Z/d_k presented by a diagonal relation matrix
    /// (d_i = 0 contributes a free generator).
    static AbPresentation from_invariants(const std::vector<Int>& invariants);

    FinGenAbGroup group() const;
};

/// Homomorphism between presented abelian groups given by an integer matrix
/// on the generators.
struct AbMap {
    AbPresentation source, target;
    IntMatrix matrix;  // target.generators x source.generators

    static AbMap endo(const AbPresentation& p, IntMatrix m) { return {p, p, std::move(m)}; }
};

/// Well-definedness: every column of matrix * R_source must lie in the column
/// span of R_target.  Returns the first violating relator index, or nullopt.
std::optional<std::size_t> abmap_check(const AbMap& m);

FinGenAbGroup abmap_cokernel(const AbMap& m);
FinGenAbGroup abmap_kernel(const AbMap& m);

/// Image order of the induced map (finite source assumed small); brute-force
/// enumeration, used as an independent oracle.
Int abmap_image_order(const AbMap& m);

struct ExtensionResult {
    FinGenAbGroup sub;   // cokernel piece (subobject in the extension)
    FinGenAbGroup quot;  // kernel piece (quotient)
    std::optional<FinGenAbGroup> resolved;

    std::string render() const;
};

/// 0 -> sub -> ? -> quot -> 0.  Resolved to sub + quot when quot is free or
/// either side is trivial; otherwise left undetermined.
ExtensionResult splice_extension(FinGenAbGroup sub, FinGenAbGroup quot);

}  // namespace sshk
